#pragma once

// Serialized forms: the fan-algebra spec file, generator listings, fan
// descriptions, SVG sketches and Macaulay2 cross-check scripts. Every JSON
// document carries "format_version": 1.

#include <string>
#include <string_view>
#include <vector>

#include "conealg/fan.hpp"
#include "conealg/fan_algebra.hpp"
#include "conealg/monomial.hpp"

namespace conealg {

inline constexpr int kFormatVersion = 1;

/// {"variables":[...], "a":[...], "b":[...], "ideals":[[...],...], "pieces":[[[α,β],...],...]}.
/// `a` and `b` must be fan ordered; pieces are listed per cone of their fan.
/// Syntax errors report line and column; schema errors name the field.
FanAlgebraSpec parse_fan_algebra_spec(std::string_view text);
std::string fan_algebra_spec_to_json(const FanAlgebraSpec& spec);

struct GeneratorListing {
  VariableAlphabet variables;
  std::vector<BigradedMonomial> generators;
};

std::string generators_to_json(const GeneratorListing& listing);
GeneratorListing generators_from_json(std::string_view text);
/// One generator per line, e.g. `x^5*y^2*u`.
std::string generators_to_text(const GeneratorListing& listing);

std::string fan_to_json(const Fan& fan);
std::string fan_to_text(const Fan& fan);
/// Cones, rays and Hilbert basis points in lattice units; output depends only on the fan.
std::string fan_to_svg(const Fan& fan);

/// Macaulay2 script asserting that algGens(I, J) returns the same set.
std::string m2check_script(const Monomial& i, const Monomial& j, const GeneratorListing& listing);

}  // namespace conealg
