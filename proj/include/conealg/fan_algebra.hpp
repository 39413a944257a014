#pragma once

// Fan algebras ⊕ I_1^{f_1(r,s)} ... I_n^{f_n(r,s)} u^r v^s for functions f_k that
// are linear on each cone of a fan.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conealg/fan.hpp"
#include "conealg/generators.hpp"
#include "conealg/monomial.hpp"

namespace conealg {

class FanLinearVerdict;

/// g(r, s) = alpha * r + beta * s. Negative coefficients are allowed; only the
/// values on the piece's cone matter.
struct LinearPiece {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  std::int64_t operator()(const LatticePoint2& p) const;
  friend bool operator==(const LinearPiece&, const LinearPiece&) = default;
};

/// A validated piecewise-linear function, one piece per cone of `fan`.
class FanLinearFunction {
 public:
  const Fan& fan() const noexcept { return fan_; }
  const std::vector<LinearPiece>& pieces() const noexcept { return pieces_; }

  /// Piece of the lowest-index cone containing p.
  std::int64_t operator()(const LatticePoint2& p) const;
  /// Value via the piece of cone i; p must lie in that cone.
  std::int64_t on_cone(std::size_t i, const LatticePoint2& p) const;

 private:
  friend FanLinearVerdict check_fan_linear(const Fan&, std::vector<LinearPiece>);
  FanLinearFunction(Fan fan, std::vector<LinearPiece> pieces)
      : fan_(std::move(fan)), pieces_(std::move(pieces)) {}

  Fan fan_;
  std::vector<LinearPiece> pieces_;
};

enum class FanLinearViolation { none, negative, face_disagreement, not_subadditive };

/// Outcome of check_fan_linear. On rejection, `witness` is the offending ray;
/// for subadditivity failures `witness_pair` holds p, q with f(p) + f(q) < f(p + q).
class FanLinearVerdict {
 public:
  bool accepted() const noexcept { return function_.has_value(); }
  const FanLinearFunction& function() const;
  FanLinearViolation violation() const noexcept { return violation_; }
  const std::string& reason() const noexcept { return reason_; }
  const std::optional<LatticePoint2>& witness() const noexcept { return witness_; }
  const std::optional<std::pair<LatticePoint2, LatticePoint2>>& witness_pair() const noexcept {
    return witness_pair_;
  }

 private:
  friend FanLinearVerdict check_fan_linear(const Fan&, std::vector<LinearPiece>);

  std::optional<FanLinearFunction> function_;
  FanLinearViolation violation_ = FanLinearViolation::none;
  std::string reason_;
  std::optional<LatticePoint2> witness_;
  std::optional<std::pair<LatticePoint2, LatticePoint2>> witness_pair_;
};

/// Decides nonnegativity, agreement on shared rays, and subadditivity.
///
/// A function linear on the cones of a complete fan and zero at the origin is
/// positively homogeneous, so subadditivity is equivalent to convexity, which
/// is equivalent to f = max_i g_i. With linear pieces the last condition only
/// needs checking on rays: g_i(w) <= g_j(w) for every ray w of every C_j.
/// Pieces of degenerate cones are defined only on their ray and do not take
/// part in the max. Throws InputError when the piece count differs from the
/// cone count.
FanLinearVerdict check_fan_linear(const Fan& fan, std::vector<LinearPiece> pieces);

/// check_fan_linear, throwing InputError with the reason on rejection.
FanLinearFunction make_fan_linear(const Fan& fan, std::vector<LinearPiece> pieces);

struct FanAlgebraSpec {
  VariableAlphabet variables;
  Fan fan;
  std::vector<MonomialIdeal> ideals;
  std::vector<FanLinearFunction> functions;
};

/// Validates the shared fan, the counts, and the ideals' arity.
FanAlgebraSpec make_fan_algebra_spec(VariableAlphabet variables, const Fan& fan,
                                     std::vector<MonomialIdeal> ideals,
                                     std::vector<std::vector<LinearPiece>> pieces);

/// I_1^{f_1(r,s)} ... I_n^{f_n(r,s)}.
MonomialIdeal graded_component(const FanAlgebraSpec& spec, std::int64_t r, std::int64_t s,
                               std::size_t max_candidates = kDefaultCandidateCap);

/// For each cone, each Hilbert element (r, s), and each minimal generator x of
/// the component at (r, s): x u^r v^s. Ordered like intersection_generators,
/// then by the component's generator order; duplicates dropped.
std::vector<BigradedMonomial> fan_algebra_generators(
    const FanAlgebraSpec& spec, std::size_t max_candidates = kDefaultCandidateCap);

/// Ideals (x_k) with f_k = max(r a_k, s b_k), written piecewise on the fan of (a, b):
/// on C_i the piece is r a_k when x_k is among the first i fan-ordered entries,
/// s b_k otherwise.
FanAlgebraSpec intersection_as_fan_algebra(const ExponentVector& a, const ExponentVector& b,
                                           const VariableAlphabet& variables);
FanAlgebraSpec intersection_as_fan_algebra(const ExponentVector& a, const ExponentVector& b);

using ComponentFunction = std::function<MonomialIdeal(std::int64_t, std::int64_t)>;

/// Grid check of a bigraded algebra: for each (r, s) in the grid, decomposes
/// (r, s) in its cone of `fan` using the degrees present in `gens` and compares
/// the product of the generated pieces with `component(r, s)`.
VerificationReport verify_graded_algebra(const Fan& fan, std::size_t n_vars,
                                         const std::vector<BigradedMonomial>& gens,
                                         const ComponentFunction& component, std::int64_t r_max,
                                         std::int64_t s_max,
                                         std::size_t max_candidates = kDefaultCandidateCap);

VerificationReport verify_fan_algebra(const FanAlgebraSpec& spec,
                                      const std::vector<BigradedMonomial>& gens,
                                      std::int64_t r_max, std::int64_t s_max,
                                      std::size_t max_candidates = kDefaultCandidateCap);

/// (f)^r ∩ m^s = f^r m^{max(s - r deg f, 0)} for a nonunit monomial f, m = (x_1..x_n).
MonomialIdeal principal_cap_maximal_power(std::size_t n_vars, const Monomial& f, std::int64_t r,
                                          std::int64_t s,
                                          std::size_t max_candidates = kDefaultCandidateCap);

/// ⊕ m^{max(s - r a, 0)} w^r v^s with a = deg f, on the two-cone fan with wall (1, a).
FanAlgebraSpec maximal_power_fan_algebra(const VariableAlphabet& variables, const Monomial& f);

/// Generators of ⊕ (f)^r ∩ m^s u^r v^s: those of maximal_power_fan_algebra with
/// w^r mapped to f^r u^r.
std::vector<BigradedMonomial> principal_cap_maximal_generators(
    const VariableAlphabet& variables, const Monomial& f,
    std::size_t max_candidates = kDefaultCandidateCap);

}  // namespace conealg
