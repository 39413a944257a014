#pragma once

// Exact geometry of pointed rational cones in the first quadrant of Z^2.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conealg/error.hpp"

namespace conealg {

/// A point (r, s) of N^2. Construction rejects negative components.
class LatticePoint2 {
 public:
  constexpr LatticePoint2() = default;
  LatticePoint2(std::int64_t r, std::int64_t s) : r_(r), s_(s) {
    if (r < 0 || s < 0) throw InputError("lattice point components must be nonnegative");
  }

  std::int64_t r() const noexcept { return r_; }
  std::int64_t s() const noexcept { return s_; }
  bool is_zero() const noexcept { return r_ == 0 && s_ == 0; }

  friend auto operator<=>(const LatticePoint2&, const LatticePoint2&) = default;

 private:
  std::int64_t r_ = 0;
  std::int64_t s_ = 0;
};

LatticePoint2 operator+(const LatticePoint2& p, const LatticePoint2& q);
LatticePoint2 operator*(std::int64_t k, const LatticePoint2& p);

/// p - q when the difference stays in N^2.
std::optional<LatticePoint2> subtract(const LatticePoint2& p, const LatticePoint2& q);

/// det(p, q) = p.r * q.s - p.s * q.r; positive when q is counterclockwise of p.
std::int64_t det(const LatticePoint2& p, const LatticePoint2& q);

/// Three-way comparison of slopes s/r, with s/0 = +inf for nonzero points.
std::strong_ordering compare_slope(const LatticePoint2& p, const LatticePoint2& q);

std::string to_string(const LatticePoint2& p);

/// Divides out the gcd of the components. Throws InputError("zero ray") on (0,0).
LatticePoint2 primitive(const LatticePoint2& v);

/// Closed cone spanned by two primitive rays, `ray_low` having the smaller slope.
class Cone2 {
 public:
  /// Primitivizes both rays and orders them by slope.
  Cone2(const LatticePoint2& ray_a, const LatticePoint2& ray_b);

  const LatticePoint2& ray_low() const noexcept { return low_; }
  const LatticePoint2& ray_high() const noexcept { return high_; }
  bool is_degenerate() const noexcept { return low_ == high_; }
  /// det(ray_low, ray_high); zero exactly for degenerate cones.
  std::int64_t width() const { return det(low_, high_); }

  bool contains(const LatticePoint2& p) const;

  friend bool operator==(const Cone2&, const Cone2&) = default;

 private:
  LatticePoint2 low_;
  LatticePoint2 high_;
};

bool cone_contains(const Cone2& c, const LatticePoint2& p);

/// Minimal generating set of the semigroup c ∩ Z^2, sorted by descending slope.
struct HilbertBasis2 {
  Cone2 cone;
  std::vector<LatticePoint2> elements;
};

HilbertBasis2 hilbert_basis(const Cone2& c);

struct DecompositionTerm {
  LatticePoint2 element;
  std::int64_t multiplicity = 0;

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

using Decomposition = std::vector<DecompositionTerm>;

/// Writes p as a nonnegative combination of `elements` (all inside `cone`), if
/// possible. Elements are tried in the order given; zero multiplicities are omitted.
/// Depth-first with a memo of points already known to be unreachable.
std::optional<Decomposition> try_decompose(const LatticePoint2& p, const Cone2& cone,
                                           std::span<const LatticePoint2> elements);

/// Decomposition into the full Hilbert basis. Throws InputError("point not in cone").
Decomposition decompose(const LatticePoint2& p, const HilbertBasis2& h);

/// Sum of multiplicity * element over the terms.
LatticePoint2 recombine(const Decomposition& d);

}  // namespace conealg
