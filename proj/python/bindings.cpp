#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <utility>

#include "conealg/fan_algebra.hpp"
#include "conealg/generators.hpp"
#include "conealg/io.hpp"

namespace py = pybind11;
using namespace conealg;

namespace {

using Point = std::pair<std::int64_t, std::int64_t>;
using Exponents = std::vector<std::int64_t>;
using Generator = std::pair<Exponents, Point>;

LatticePoint2 point(const Point& p) { return {p.first, p.second}; }
Point tuple(const LatticePoint2& p) { return {p.r(), p.s()}; }

std::vector<Generator> generator_tuples(const std::vector<BigradedMonomial>& gens) {
  std::vector<Generator> out;
  for (const auto& g : gens) out.emplace_back(g.coeff.exponents(), tuple(g.degree));
  return out;
}

py::dict report_dict(const VerificationReport& report) {
  py::dict d;
  d["passed"] = report.passed;
  d["checked"] = report.checked;
  d["total"] = report.total;
  d["first_failure"] = report.first_failure ? py::cast(tuple(*report.first_failure)) : py::none();
  d["reason"] = report.reason;
  return d;
}

Fan ordered_fan(const Exponents& a, const Exponents& b) {
  const FanOrdered ordered = fan_order(ExponentVector(a), ExponentVector(b));
  return build_fan(ordered.a, ordered.b);
}

}  // namespace

PYBIND11_MODULE(_conealg, m) {
  m.doc() = "Exact generators of bigraded monomial intersection and fan algebras";

  // Translators run most-recent first, so the base class is registered first.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<CapExceededError>(m, "CapExceededError", error.ptr());
  py::register_exception<OverflowError>(m, "IntegerOverflowError", PyExc_OverflowError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("primitive", [](const Point& v) { return tuple(primitive(point(v))); });

  m.def("hilbert_basis", [](const Point& ray_a, const Point& ray_b) {
    std::vector<Point> out;
    for (const auto& h : hilbert_basis(Cone2(point(ray_a), point(ray_b))).elements) {
      out.push_back(tuple(h));
    }
    return out;
  }, py::arg("ray_a"), py::arg("ray_b"), "Hilbert basis of the cone, by descending slope.");

  m.def("cone_contains", [](const Point& ray_a, const Point& ray_b, const Point& p) {
    return cone_contains(Cone2(point(ray_a), point(ray_b)), point(p));
  });

  m.def("decompose", [](const Point& p, const Point& ray_a, const Point& ray_b) {
    std::vector<std::pair<Point, std::int64_t>> out;
    for (const auto& t : decompose(point(p), hilbert_basis(Cone2(point(ray_a), point(ray_b))))) {
      out.emplace_back(tuple(t.element), t.multiplicity);
    }
    return out;
  }, py::arg("p"), py::arg("ray_a"), py::arg("ray_b"));

  m.def("fan_order", [](const Exponents& a, const Exponents& b) {
    const FanOrdered o = fan_order(ExponentVector(a), ExponentVector(b));
    return py::make_tuple(o.a.entries(), o.b.entries(), o.ordering.original_index);
  });

  m.def("build_fan", [](const Exponents& a, const Exponents& b) {
    std::vector<std::pair<Point, Point>> out;
    const Fan fan = build_fan(ExponentVector(a), ExponentVector(b));
    for (const auto& c : fan.cones()) {
      out.emplace_back(tuple(c.ray_high()), tuple(c.ray_low()));
    }
    return out;
  }, "Cones of the fan of fan-ordered (a, b) as (ray_high, ray_low) pairs.");

  m.def("locate", [](const Exponents& a, const Exponents& b, const Point& p) {
    return ordered_fan(a, b).locate(point(p));
  }, "Cone index of p in the fan of (a, b) after fan ordering.");

  m.def("principal_intersection", [](const Exponents& a, const Exponents& b, std::int64_t r,
                                     std::int64_t s) {
    return principal_intersection(ExponentVector(a), ExponentVector(b), r, s).exponents();
  });

  m.def("intersection_generators", [](const Exponents& a, const Exponents& b) {
    return generator_tuples(intersection_generators(ExponentVector(a), ExponentVector(b)).generators);
  }, py::arg("a"), py::arg("b"), "Generators as (coefficient exponents, (r, s)) pairs.");

  m.def("format_generators", [](const Exponents& a, const Exponents& b,
                                std::optional<std::vector<std::string>> variables) {
    const VariableAlphabet alphabet =
        variables ? VariableAlphabet(*variables) : VariableAlphabet::numbered(a.size());
    std::vector<std::string> out;
    for (const auto& g : intersection_generators(ExponentVector(a), ExponentVector(b)).generators) {
      out.push_back(format_bigraded(g, alphabet));
    }
    return out;
  }, py::arg("a"), py::arg("b"), py::arg("variables") = py::none());

  m.def("semigroup_generators", [](const Exponents& a, const Exponents& b) {
    return semigroup_generators(ExponentVector(a), ExponentVector(b)).vectors;
  });

  m.def("verify_generation", [](const Exponents& a, const Exponents& b, std::int64_t r_max,
                                std::int64_t s_max, const std::vector<Point>& drop) {
    const ExponentVector av(a), bv(b);
    GeneratorSet gens = intersection_generators(av, bv);
    std::erase_if(gens.generators, [&](const BigradedMonomial& g) {
      return std::find(drop.begin(), drop.end(), tuple(g.degree)) != drop.end();
    });
    return report_dict(verify_generation(av, bv, gens, r_max, s_max));
  }, py::arg("a"), py::arg("b"), py::arg("r_max"), py::arg("s_max"),
     py::arg("drop") = std::vector<Point>{});

  m.def("asymptotic_limits", [](const Exponents& a, const Exponents& b) {
    const AsymptoticLimits l = asymptotic_limits(ExponentVector(a), ExponentVector(b));
    auto q = [](const Rational& x) { return Point{x.num(), x.den()}; };
    py::dict d;
    d["l_I(J)"] = q(l.l_I_of_J);
    d["L_I(J)"] = q(l.L_I_of_J);
    d["l_J(I)"] = q(l.l_J_of_I);
    d["L_J(I)"] = q(l.L_J_of_I);
    return d;
  }, "Limits as (numerator, denominator) pairs.");

  m.def("check_fan_linear", [](const Exponents& a, const Exponents& b,
                               const std::vector<Point>& pieces) {
    std::vector<LinearPiece> ps;
    for (const auto& [alpha, beta] : pieces) ps.push_back({alpha, beta});
    const FanLinearVerdict v = check_fan_linear(build_fan(ExponentVector(a), ExponentVector(b)), ps);
    py::dict d;
    d["accepted"] = v.accepted();
    d["reason"] = v.reason();
    d["witness"] = v.witness() ? py::cast(tuple(*v.witness())) : py::none();
    d["witness_pair"] = v.witness_pair()
                            ? py::cast(std::pair{tuple(v.witness_pair()->first),
                                                 tuple(v.witness_pair()->second)})
                            : py::none();
    return d;
  }, "Pieces are (alpha, beta) per cone of the fan of fan-ordered (a, b).");

  m.def("fan_algebra_generators", [](const std::string& spec_json) {
    const FanAlgebraSpec spec = parse_fan_algebra_spec(spec_json);
    return py::make_tuple(spec.variables.names(),
                          generator_tuples(fan_algebra_generators(spec, candidate_cap_from_environment())));
  }, py::arg("spec_json"), "Returns (variables, generators) for a JSON spec document.");

  m.def("verify_fan_algebra", [](const std::string& spec_json, std::int64_t grid) {
    const FanAlgebraSpec spec = parse_fan_algebra_spec(spec_json);
    const std::size_t limit = candidate_cap_from_environment();
    return report_dict(verify_fan_algebra(spec, fan_algebra_generators(spec, limit), grid, grid, limit));
  }, py::arg("spec_json"), py::arg("grid"));

  m.def("intersection_as_fan_algebra", [](const Exponents& a, const Exponents& b) {
    return fan_algebra_spec_to_json(intersection_as_fan_algebra(ExponentVector(a), ExponentVector(b)));
  }, "JSON spec document of the intersection algebra written as a fan algebra.");

  m.def("principal_cap_maximal_power", [](std::size_t n_vars, const Exponents& f, std::int64_t r,
                                          std::int64_t s) {
    std::vector<Exponents> out;
    const MonomialIdeal ideal = principal_cap_maximal_power(n_vars, Monomial(f), r, s);
    for (const auto& g : ideal.generators()) {
      out.push_back(g.exponents());
    }
    return out;
  });
}
