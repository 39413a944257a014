#include "conealg/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace conealg {

LatticePoint2 operator+(const LatticePoint2& p, const LatticePoint2& q) {
  return {checked_add(p.r(), q.r()), checked_add(p.s(), q.s())};
}

LatticePoint2 operator*(std::int64_t k, const LatticePoint2& p) {
  return {checked_mul(k, p.r()), checked_mul(k, p.s())};
}

std::optional<LatticePoint2> subtract(const LatticePoint2& p, const LatticePoint2& q) {
  if (q.r() > p.r() || q.s() > p.s()) return std::nullopt;
  return LatticePoint2{p.r() - q.r(), p.s() - q.s()};
}

std::int64_t det(const LatticePoint2& p, const LatticePoint2& q) {
  return checked_sub(checked_mul(p.r(), q.s()), checked_mul(p.s(), q.r()));
}

std::strong_ordering compare_slope(const LatticePoint2& p, const LatticePoint2& q) {
  // s_p / r_p  vs  s_q / r_q, cross-multiplied; valid for nonnegative components.
  return checked_mul(p.s(), q.r()) <=> checked_mul(q.s(), p.r());
}

std::string to_string(const LatticePoint2& p) {
  return "(" + std::to_string(p.r()) + "," + std::to_string(p.s()) + ")";
}

LatticePoint2 primitive(const LatticePoint2& v) {
  if (v.is_zero()) throw InputError("zero ray");
  const std::int64_t g = std::gcd(v.r(), v.s());
  return {v.r() / g, v.s() / g};
}

Cone2::Cone2(const LatticePoint2& ray_a, const LatticePoint2& ray_b)
    : low_(primitive(ray_a)), high_(primitive(ray_b)) {
  if (compare_slope(low_, high_) > 0) std::swap(low_, high_);
}

bool Cone2::contains(const LatticePoint2& p) const {
  return det(low_, p) >= 0 && det(p, high_) >= 0;
}

bool cone_contains(const Cone2& c, const LatticePoint2& p) { return c.contains(p); }

namespace {

bool by_descending_slope(const LatticePoint2& p, const LatticePoint2& q) {
  const auto order = compare_slope(p, q);
  if (order != 0) return order > 0;
  return p < q;
}

// Floor and ceiling of n / d for d > 0.
std::int64_t floor_div(std::int64_t n, std::int64_t d) { return n / d - (n % d != 0 && n < 0); }
std::int64_t ceil_div(std::int64_t n, std::int64_t d) { return n / d + (n % d != 0 && n > 0); }

}  // namespace

HilbertBasis2 hilbert_basis(const Cone2& c) {
  if (c.is_degenerate()) return {c, {c.ray_low()}};

  const LatticePoint2& low = c.ray_low();
  const LatticePoint2& high = c.ray_high();
  const LatticePoint2 corner = low + high;
  if (corner.r() > corner.s()) {
    // Scan along the shorter side: the basis of the mirrored cone, mirrored back.
    HilbertBasis2 mirrored = hilbert_basis(Cone2({low.s(), low.r()}, {high.s(), high.r()}));
    for (auto& e : mirrored.elements) e = {e.s(), e.r()};
    std::sort(mirrored.elements.begin(), mirrored.elements.end(), by_descending_slope);
    return {c, std::move(mirrored.elements)};
  }
  const std::int64_t width = c.width();

  // Lattice points of the closed fundamental parallelogram, keyed by
  // width * (lambda_low + lambda_high), a positive functional on the cone.
  // In each column r both conditions 0 <= det(low, p) <= width and
  // 0 <= det(p, high) <= width are intervals in s; low.r > 0 here.
  struct Candidate {
    std::int64_t level;
    LatticePoint2 point;
  };
  std::vector<Candidate> candidates;
  for (std::int64_t r = 0; r <= corner.r(); ++r) {
    const std::int64_t low_s_r = checked_mul(low.s(), r);
    std::int64_t s_min = std::max<std::int64_t>(0, ceil_div(low_s_r, low.r()));
    std::int64_t s_max = floor_div(checked_add(width, low_s_r), low.r());
    if (high.r() > 0) {
      const std::int64_t high_s_r = checked_mul(high.s(), r);
      s_min = std::max(s_min, ceil_div(checked_sub(high_s_r, width), high.r()));
      s_max = std::min(s_max, floor_div(high_s_r, high.r()));
    } else if (r > width) {
      continue;
    }
    for (std::int64_t s = s_min; s <= s_max; ++s) {
      const LatticePoint2 p{r, s};
      if (p.is_zero()) continue;
      candidates.push_back({checked_add(det(low, p), det(p, high)), p});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return x.level != y.level ? x.level < y.level : x.point < y.point;
  });

  // A reducible point is h + q for some irreducible h of strictly lower level
  // and nonzero q in the cone, so one ordered sweep reaches the fixed point.
  std::vector<LatticePoint2> basis;
  for (const auto& [level, point] : candidates) {
    const bool reducible = std::any_of(basis.begin(), basis.end(), [&](const LatticePoint2& h) {
      const auto rest = subtract(point, h);
      return rest && !rest->is_zero() && c.contains(*rest);
    });
    if (!reducible) basis.push_back(point);
  }
  std::sort(basis.begin(), basis.end(), by_descending_slope);
  return {c, std::move(basis)};
}

std::optional<Decomposition> try_decompose(const LatticePoint2& p, const Cone2& cone,
                                           std::span<const LatticePoint2> elements) {
  if (!cone.contains(p)) return std::nullopt;
  if (p.is_zero()) return Decomposition{};

  struct Frame {
    LatticePoint2 point;
    std::size_t next = 0;
  };
  std::vector<Frame> stack{{p, 0}};
  std::vector<std::size_t> chosen;
  std::set<LatticePoint2> dead;

  while (!stack.empty()) {
    Frame& top = stack.back();
    bool descended = false;
    while (top.next < elements.size()) {
      const std::size_t index = top.next++;
      if (elements[index].is_zero()) continue;
      const auto rest = subtract(top.point, elements[index]);
      if (!rest || !cone.contains(*rest) || dead.count(*rest) != 0) continue;
      chosen.push_back(index);
      if (rest->is_zero()) {
        std::vector<std::int64_t> counts(elements.size(), 0);
        for (std::size_t i : chosen) ++counts[i];
        Decomposition out;
        for (std::size_t i = 0; i < elements.size(); ++i) {
          if (counts[i] > 0) out.push_back({elements[i], counts[i]});
        }
        return out;
      }
      stack.push_back({*rest, 0});
      descended = true;
      break;
    }
    if (descended) continue;
    dead.insert(stack.back().point);
    stack.pop_back();
    if (!chosen.empty()) chosen.pop_back();
  }
  return std::nullopt;
}

Decomposition decompose(const LatticePoint2& p, const HilbertBasis2& h) {
  if (!h.cone.contains(p)) throw InputError("point not in cone");
  auto out = try_decompose(p, h.cone, h.elements);
  if (!out) throw std::logic_error("Hilbert basis failed to generate " + to_string(p));
  return *std::move(out);
}

LatticePoint2 recombine(const Decomposition& d) {
  LatticePoint2 sum;
  for (const auto& term : d) sum = sum + term.multiplicity * term.element;
  return sum;
}

}  // namespace conealg
