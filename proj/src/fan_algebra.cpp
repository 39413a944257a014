#include "conealg/fan_algebra.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace conealg {

std::int64_t LinearPiece::operator()(const LatticePoint2& p) const {
  return checked_add(checked_mul(alpha, p.r()), checked_mul(beta, p.s()));
}

std::int64_t FanLinearFunction::operator()(const LatticePoint2& p) const {
  return pieces_[fan_.locate(p)](p);
}

std::int64_t FanLinearFunction::on_cone(std::size_t i, const LatticePoint2& p) const {
  return pieces_.at(i)(p);
}

const FanLinearFunction& FanLinearVerdict::function() const {
  if (!function_) throw std::logic_error("rejected function: " + reason_);
  return *function_;
}

namespace {

std::string piece_at(std::size_t i, const LatticePoint2& w, std::int64_t value) {
  return "g_" + std::to_string(i) + to_string(w) + "=" + std::to_string(value);
}

// With agreement on shared rays, f is convex iff it is convex across every
// wall between consecutive nondegenerate cones C_k (above) and C_m (below).
// A wall fails when g_k exceeds g_m at the far ray q of C_m; then for
// p = t * ray_high(C_k) with p + q still in C_k,
// f(p) + f(q) = g_k(p) + g_m(q) < g_k(p + q) = f(p + q).
std::optional<std::pair<LatticePoint2, LatticePoint2>> find_subadditivity_witness(
    const Fan& fan, const std::vector<LinearPiece>& pieces) {
  std::vector<std::size_t> full;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (!fan.cone(i).is_degenerate()) full.push_back(i);
  }
  for (std::size_t n = 0; n + 1 < full.size(); ++n) {
    const Cone2& above = fan.cone(full[n]);
    const Cone2& below = fan.cone(full[n + 1]);
    const LatticePoint2& wall = above.ray_low();
    const LatticePoint2& q = below.ray_low();
    if (pieces[full[n]](q) <= pieces[full[n + 1]](q)) continue;
    const std::int64_t deficit = -det(wall, q);
    const std::int64_t step = det(wall, above.ray_high());
    const std::int64_t t = (deficit + step - 1) / step;
    return std::pair{t * above.ray_high(), q};
  }
  return std::nullopt;
}

}  // namespace

FanLinearVerdict check_fan_linear(const Fan& fan, std::vector<LinearPiece> pieces) {
  if (pieces.size() != fan.size()) {
    throw InputError("expected " + std::to_string(fan.size()) + " pieces, got " +
                     std::to_string(pieces.size()));
  }
  FanLinearVerdict verdict;
  auto reject = [&](FanLinearViolation kind, std::string reason, const LatticePoint2& w) {
    verdict.violation_ = kind;
    verdict.reason_ = std::move(reason);
    verdict.witness_ = w;
    return verdict;
  };

  for (std::size_t i = 0; i < fan.size(); ++i) {
    for (const LatticePoint2& w : {fan.cone(i).ray_low(), fan.cone(i).ray_high()}) {
      const std::int64_t value = pieces[i](w);
      if (value < 0) {
        return reject(FanLinearViolation::negative, "negative on cone " + std::to_string(i) +
                                                        ": " + piece_at(i, w, value),
                      w);
      }
    }
  }

  for (std::size_t i = 0; i + 1 < fan.size(); ++i) {
    const LatticePoint2& w = fan.cone(i).ray_low();
    const std::int64_t left = pieces[i](w);
    const std::int64_t right = pieces[i + 1](w);
    if (left != right) {
      return reject(FanLinearViolation::face_disagreement,
                    "pieces disagree on shared ray " + to_string(w) + ": " +
                        std::to_string(left) + " != " + std::to_string(right),
                    w);
    }
  }

  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (fan.cone(i).is_degenerate()) continue;
    for (std::size_t j = 0; j < fan.size(); ++j) {
      for (const LatticePoint2& w : {fan.cone(j).ray_low(), fan.cone(j).ray_high()}) {
        if (pieces[i](w) <= pieces[j](w)) continue;
        std::string reason = "not subadditive: " + piece_at(i, w, pieces[i](w)) + " exceeds " +
                             piece_at(j, w, pieces[j](w));
        if (auto pair = find_subadditivity_witness(fan, pieces)) {
          const auto& [p, q] = *pair;
          const FanLinearFunction f(fan, pieces);
          reason += "; f" + to_string(p) + "+f" + to_string(q) + "=" +
                    std::to_string(checked_add(f(p), f(q))) + " < f" + to_string(p + q) + "=" +
                    std::to_string(f(p + q));
          verdict.witness_pair_ = pair;
        }
        return reject(FanLinearViolation::not_subadditive, std::move(reason), w);
      }
    }
  }

  verdict.function_ = FanLinearFunction(fan, std::move(pieces));
  return verdict;
}

FanLinearFunction make_fan_linear(const Fan& fan, std::vector<LinearPiece> pieces) {
  FanLinearVerdict verdict = check_fan_linear(fan, std::move(pieces));
  if (!verdict.accepted()) throw InputError("not fan-linear: " + verdict.reason());
  return verdict.function();
}

FanAlgebraSpec make_fan_algebra_spec(VariableAlphabet variables, const Fan& fan,
                                     std::vector<MonomialIdeal> ideals,
                                     std::vector<std::vector<LinearPiece>> pieces) {
  if (ideals.empty()) throw InputError("a fan algebra needs at least one ideal");
  if (ideals.size() != pieces.size()) {
    throw InputError(std::to_string(ideals.size()) + " ideals but " +
                     std::to_string(pieces.size()) + " functions");
  }
  for (const auto& ideal : ideals) {
    if (ideal.n_vars() != variables.size()) throw InputError("ideal arity differs from variables");
  }
  std::vector<FanLinearFunction> functions;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    try {
      functions.push_back(make_fan_linear(fan, std::move(pieces[k])));
    } catch (const InputError& e) {
      throw InputError("function " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return {std::move(variables), fan, std::move(ideals), std::move(functions)};
}

namespace {

MonomialIdeal component_on_cone(const FanAlgebraSpec& spec, std::size_t cone,
                                const LatticePoint2& p, std::size_t max_candidates) {
  MonomialIdeal out = MonomialIdeal::unit(spec.variables.size());
  for (std::size_t k = 0; k < spec.ideals.size(); ++k) {
    const std::int64_t e = spec.functions[k].on_cone(cone, p);
    out = ideal_product(out, ideal_power(spec.ideals[k], e, max_candidates), max_candidates);
  }
  return out;
}

}  // namespace

MonomialIdeal graded_component(const FanAlgebraSpec& spec, std::int64_t r, std::int64_t s,
                               std::size_t max_candidates) {
  const LatticePoint2 p{r, s};
  return component_on_cone(spec, spec.fan.locate(p), p, max_candidates);
}

std::vector<BigradedMonomial> fan_algebra_generators(const FanAlgebraSpec& spec,
                                                     std::size_t max_candidates) {
  std::vector<BigradedMonomial> out;
  std::set<LatticePoint2> done;
  for (std::size_t i = 0; i < spec.fan.size(); ++i) {
    for (const LatticePoint2& h : hilbert_basis(spec.fan.cone(i)).elements) {
      if (!done.insert(h).second) continue;
      const MonomialIdeal component = component_on_cone(spec, i, h, max_candidates);
      for (const Monomial& x : component.generators()) out.push_back({x, h});
    }
  }
  return out;
}

FanAlgebraSpec intersection_as_fan_algebra(const ExponentVector& a, const ExponentVector& b,
                                           const VariableAlphabet& variables) {
  if (variables.size() != a.size()) throw InputError("variable count differs from vector length");
  const FanOrdered ordered = fan_order(a, b);
  const Fan fan = build_fan(ordered.a, ordered.b);

  // position[k]: 1-based place of original index k in fan order, 0 when dropped.
  std::vector<std::size_t> position(a.size(), 0);
  for (std::size_t n = 0; n < ordered.ordering.original_index.size(); ++n) {
    position[ordered.ordering.original_index[n]] = n + 1;
  }

  std::vector<MonomialIdeal> ideals;
  std::vector<std::vector<LinearPiece>> pieces;
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<std::int64_t> e(a.size(), 0);
    e[k] = 1;
    ideals.push_back(MonomialIdeal::principal(Monomial(std::move(e))));
    auto& fk = pieces.emplace_back();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (position[k] == 0) {
        fk.push_back({0, 0});
      } else if (position[k] <= i) {
        fk.push_back({a[k], 0});
      } else {
        fk.push_back({0, b[k]});
      }
    }
  }
  return make_fan_algebra_spec(variables, fan, std::move(ideals), std::move(pieces));
}

FanAlgebraSpec intersection_as_fan_algebra(const ExponentVector& a, const ExponentVector& b) {
  return intersection_as_fan_algebra(a, b, VariableAlphabet::numbered(a.size()));
}

VerificationReport verify_graded_algebra(const Fan& fan, std::size_t n_vars,
                                         const std::vector<BigradedMonomial>& gens,
                                         const ComponentFunction& component, std::int64_t r_max,
                                         std::int64_t s_max, std::size_t max_candidates) {
  if (r_max < 0 || s_max < 0) throw InputError("grid bounds must be nonnegative");

  std::map<LatticePoint2, std::vector<Monomial>> by_degree;
  for (const auto& g : gens) by_degree[g.degree].push_back(g.coeff);
  std::map<LatticePoint2, MonomialIdeal> piece_of;
  for (auto& [degree, coeffs] : by_degree) piece_of.emplace(degree, MonomialIdeal(n_vars, coeffs));

  std::vector<std::vector<LatticePoint2>> usable(fan.size());
  for (std::size_t i = 0; i < fan.size(); ++i) {
    for (const LatticePoint2& h : hilbert_basis(fan.cone(i)).elements) {
      if (piece_of.count(h) != 0) usable[i].push_back(h);
    }
  }

  VerificationReport report;
  report.total = static_cast<std::size_t>(checked_mul(r_max + 1, s_max + 1));
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
      MonomialIdeal product = MonomialIdeal::unit(n_vars);
      for (const auto& term : *terms) {
        product = ideal_product(
            product, ideal_power(piece_of.at(term.element), term.multiplicity, max_candidates),
            max_candidates);
      }
      if (product != component(r, s)) {
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

VerificationReport verify_fan_algebra(const FanAlgebraSpec& spec,
                                      const std::vector<BigradedMonomial>& gens,
                                      std::int64_t r_max, std::int64_t s_max,
                                      std::size_t max_candidates) {
  return verify_graded_algebra(
      spec.fan, spec.variables.size(), gens,
      [&](std::int64_t r, std::int64_t s) { return graded_component(spec, r, s, max_candidates); },
      r_max, s_max, max_candidates);
}

MonomialIdeal principal_cap_maximal_power(std::size_t n_vars, const Monomial& f, std::int64_t r,
                                          std::int64_t s, std::size_t max_candidates) {
  if (f.n_vars() != n_vars) throw InputError("monomial arity differs from variable count");
  if (f.is_unit()) throw InputError("f must not be a unit");
  if (r < 0 || s < 0) throw InputError("graded degree must be nonnegative");
  const std::int64_t excess = std::max<std::int64_t>(checked_sub(s, checked_mul(r, f.degree())), 0);
  return ideal_product(MonomialIdeal::principal(pow(f, r)),
                       ideal_power(MonomialIdeal::maximal(n_vars), excess, max_candidates),
                       max_candidates);
}

FanAlgebraSpec maximal_power_fan_algebra(const VariableAlphabet& variables, const Monomial& f) {
  if (f.n_vars() != variables.size()) throw InputError("monomial arity differs from variable count");
  if (f.is_unit()) throw InputError("f must not be a unit");
  const std::int64_t a = f.degree();
  const Fan fan = build_fan(ExponentVector{a}, ExponentVector{1});
  return make_fan_algebra_spec(variables, fan, {MonomialIdeal::maximal(variables.size())},
                               {{LinearPiece{-a, 1}, LinearPiece{0, 0}}});
}

std::vector<BigradedMonomial> principal_cap_maximal_generators(const VariableAlphabet& variables,
                                                               const Monomial& f,
                                                               std::size_t max_candidates) {
  std::vector<BigradedMonomial> out;
  for (auto& g : fan_algebra_generators(maximal_power_fan_algebra(variables, f), max_candidates)) {
    out.push_back({g.coeff * pow(f, g.degree.r()), g.degree});
  }
  return out;
}

}  // namespace conealg
