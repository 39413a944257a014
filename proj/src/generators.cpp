#include "conealg/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace conealg {

GeneratorSet intersection_generators(const ExponentVector& a, const ExponentVector& b) {
  FanOrdered ordered = fan_order(a, b);
  GeneratorSet out{a, b, ordered.ordering, build_fan(ordered.a, ordered.b), {}, {}};

  std::set<LatticePoint2> emitted;
  for (const Cone2& cone : out.fan.cones()) {
    auto& provenance = out.per_cone.emplace_back();
    for (const LatticePoint2& h : hilbert_basis(cone).elements) {
      BigradedMonomial g{principal_intersection(a, b, h.r(), h.s()), h};
      provenance.push_back({h, g});
      if (emitted.insert(h).second) out.generators.push_back(std::move(g));
    }
  }
  return out;
}

SemigroupPresentation semigroup_generators(const ExponentVector& a, const ExponentVector& b) {
  const GeneratorSet gens = intersection_generators(a, b);
  SemigroupPresentation out;
  for (const auto& g : gens.generators) {
    std::vector<std::int64_t> v = g.coeff.exponents();
    v.push_back(g.degree.r());
    v.push_back(g.degree.s());
    out.vectors.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<std::int64_t> v(a.size() + 2, 0);
    v[k] = 1;
    out.vectors.push_back(std::move(v));
  }
  return out;
}

VerificationReport verify_generation(const ExponentVector& a, const ExponentVector& b,
                                     const GeneratorSet& gens, std::int64_t r_max,
                                     std::int64_t s_max) {
  if (r_max < 0 || s_max < 0) throw InputError("grid bounds must be nonnegative");
  const FanOrdered ordered = fan_order(a, b);
  const Fan fan = build_fan(ordered.a, ordered.b);

  std::map<LatticePoint2, Monomial> coeff_of;
  for (const auto& g : gens.generators) coeff_of.emplace(g.degree, g.coeff);

  std::vector<std::vector<LatticePoint2>> usable(fan.size());
  for (std::size_t i = 0; i < fan.size(); ++i) {
    for (const LatticePoint2& h : hilbert_basis(fan.cone(i)).elements) {
      if (coeff_of.count(h) != 0) usable[i].push_back(h);
    }
  }

  VerificationReport report;
  report.total = static_cast<std::size_t>((r_max + 1) * (s_max + 1));
  for (std::int64_t r = 0; r <= r_max; ++r) {
    for (std::int64_t s = 0; s <= s_max; ++s) {
      const LatticePoint2 p{r, s};
      const std::size_t i = fan.locate(p);
      const auto terms = try_decompose(p, fan.cone(i), usable[i]);
      if (!terms) {
        report.passed = false;
        report.first_failure = p;
        report.reason = "no decomposition of " + to_string(p) + " into generators of cone " +
                        std::to_string(i);
        return report;
      }
      Monomial product = Monomial::unit(a.size());
      for (const auto& term : *terms) {
        product = product * pow(coeff_of.at(term.element), term.multiplicity);
      }
      if (product != principal_intersection(a, b, r, s)) {
        report.passed = false;
        report.first_failure = p;
        report.reason = "product of generators differs from the component at " + to_string(p);
        return report;
      }
      ++report.checked;
    }
  }
  return report;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw InputError("rational must be nonnegative with positive denominator");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator*(const Rational& x, const Rational& y) {
  return {checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_)};
}

std::string to_string(const Rational& q) {
  if (q.den() == 1) return std::to_string(q.num());
  return std::to_string(q.num()) + "/" + std::to_string(q.den());
}

AsymptoticLimits asymptotic_limits(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw InputError("exponent vectors differ in length");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0 || b[k] == 0) throw InputError("radicals differ");
  }
  const FanOrdered ordered = fan_order(a, b);
  const std::size_t last = ordered.a.size() - 1;
  const std::int64_t a_first = ordered.a[0], b_first = ordered.b[0];
  const std::int64_t a_last = ordered.a[last], b_last = ordered.b[last];
  return {Rational(b_first, a_first), Rational(b_last, a_last), Rational(a_last, b_last),
          Rational(a_first, b_first)};
}

}  // namespace conealg
