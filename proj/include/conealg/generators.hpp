#pragma once

// Generators of the intersection algebra ⊕ (x^a)^r ∩ (x^b)^s u^r v^s of two
// principal monomial ideals, read off the Hilbert bases of the fan of (a, b).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conealg/fan.hpp"
#include "conealg/lattice.hpp"
#include "conealg/monomial.hpp"

namespace conealg {

struct ConeGenerator {
  LatticePoint2 element;
  BigradedMonomial generator;
};

struct GeneratorSet {
  /// Input vectors in the caller's variable order.
  ExponentVector a;
  ExponentVector b;
  FanOrdering ordering;
  /// Fan of the fan-ordered vectors.
  Fan fan;
  /// Ordered by cone index, then by descending slope of the degree; each
  /// degree appears once (first occurrence wins). Coefficients use the
  /// caller's variable order.
  std::vector<BigradedMonomial> generators;
  /// Provenance: per cone, every Hilbert element with its generator, duplicates included.
  std::vector<std::vector<ConeGenerator>> per_cone;
};

GeneratorSet intersection_generators(const ExponentVector& a, const ExponentVector& b);

/// Exponent vectors in N^{n+2}: log of each generator followed by (r, s),
/// then the n unit vectors padded with (0, 0).
struct SemigroupPresentation {
  std::vector<std::vector<std::int64_t>> vectors;
};

SemigroupPresentation semigroup_generators(const ExponentVector& a, const ExponentVector& b);

struct VerificationReport {
  bool passed = true;
  std::size_t checked = 0;
  std::size_t total = 0;
  /// Lexicographically smallest failing degree.
  std::optional<LatticePoint2> first_failure;
  std::string reason;
};

/// For each (r, s) in [0, r_max] x [0, s_max], decomposes (r, s) in its cone
/// using only the degrees present in `gens.generators` and checks that the
/// product of the matching x-parts is the generator of I^r ∩ J^s.
VerificationReport verify_generation(const ExponentVector& a, const ExponentVector& b,
                                     const GeneratorSet& gens, std::int64_t r_max,
                                     std::int64_t s_max);

/// Nonnegative exact rational in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend Rational operator*(const Rational& x, const Rational& y);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::string to_string(const Rational& q);

/// Limits of v_I(J,m)/m, w_I(J,n)/n and their counterparts with I and J swapped.
struct AsymptoticLimits {
  Rational l_I_of_J;
  Rational L_I_of_J;
  Rational l_J_of_I;
  Rational L_J_of_I;
};

/// Requires every a_i and b_i positive; throws InputError("radicals differ") otherwise.
AsymptoticLimits asymptotic_limits(const ExponentVector& a, const ExponentVector& b);

}  // namespace conealg
