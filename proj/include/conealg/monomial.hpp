#pragma once

// Monomials and monomial ideals over a fixed, shared variable list. These are
// exact brute-force references for every graded component computed elsewhere.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "conealg/fan.hpp"
#include "conealg/lattice.hpp"

namespace conealg {

inline constexpr std::size_t kDefaultCandidateCap = 1'000'000;

/// The cap from CONEALG_MAX_CANDIDATES when set to a positive integer, else the default.
std::size_t candidate_cap_from_environment();

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::int64_t> exponents);
  Monomial(std::initializer_list<std::int64_t> exponents)
      : Monomial(std::vector<std::int64_t>(exponents)) {}

  static Monomial unit(std::size_t n_vars) { return Monomial(std::vector<std::int64_t>(n_vars, 0)); }

  std::size_t n_vars() const noexcept { return exponents_.size(); }
  std::int64_t operator[](std::size_t i) const { return exponents_.at(i); }
  const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
  bool is_unit() const noexcept;
  std::int64_t degree() const;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::int64_t> exponents_;
};

Monomial operator*(const Monomial& x, const Monomial& y);
Monomial lcm(const Monomial& x, const Monomial& y);
Monomial pow(const Monomial& x, std::int64_t k);

/// Monomial ideal stored by its minimal generators, ordered by total degree and
/// then by exponent vector descending. The zero ideal has no generators.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t n_vars, std::vector<Monomial> generators);

  static MonomialIdeal zero(std::size_t n_vars) { return {n_vars, {}}; }
  static MonomialIdeal unit(std::size_t n_vars) { return {n_vars, {Monomial::unit(n_vars)}}; }
  static MonomialIdeal principal(const Monomial& m) { return {m.n_vars(), {m}}; }
  /// (x_1, ..., x_n).
  static MonomialIdeal maximal(std::size_t n_vars);

  std::size_t n_vars() const noexcept { return n_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_unit() const noexcept { return generators_.size() == 1 && generators_.front().is_unit(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_vars_ = 0;
  std::vector<Monomial> generators_;
};

/// Generator of (x^a)^r ∩ (x^b)^s: entry k is max(r a_k, s b_k).
Monomial principal_intersection(const ExponentVector& a, const ExponentVector& b, std::int64_t r,
                                std::int64_t s);

MonomialIdeal ideal_intersect(const MonomialIdeal& x, const MonomialIdeal& y);
MonomialIdeal ideal_product(const MonomialIdeal& x, const MonomialIdeal& y,
                            std::size_t max_candidates = kDefaultCandidateCap);
MonomialIdeal ideal_power(const MonomialIdeal& x, std::int64_t m,
                          std::size_t max_candidates = kDefaultCandidateCap);
bool member(const Monomial& m, const MonomialIdeal& ideal);

/// Variable names used for parsing and printing. Names are identifiers; `u`
/// and `v` are reserved for the bigrading.
class VariableAlphabet {
 public:
  explicit VariableAlphabet(std::vector<std::string> names);
  /// x1, ..., xn.
  static VariableAlphabet numbered(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Index of `name`, or size() when absent.
  std::size_t find(std::string_view name) const;

  friend bool operator==(const VariableAlphabet&, const VariableAlphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Identifiers in order of first appearance across `texts`.
std::vector<std::string> scan_variables(std::initializer_list<std::string_view> texts);

/// Parses `x^5*y^2`, `x*y`, or `1`. Throws ParseError with a 1-based column.
Monomial parse_monomial(std::string_view text, const VariableAlphabet& alphabet);
std::string format_monomial(const Monomial& m, const VariableAlphabet& alphabet);

/// One homogeneous monomial x^c u^r v^s of a bigraded algebra.
struct BigradedMonomial {
  Monomial coeff;
  LatticePoint2 degree;

  friend auto operator<=>(const BigradedMonomial&, const BigradedMonomial&) = default;
};

std::string format_bigraded(const BigradedMonomial& g, const VariableAlphabet& alphabet);

}  // namespace conealg
