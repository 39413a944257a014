#include "conealg/io.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace conealg {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into a line and column.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("invalid JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(column));
  }
}

const Json& require(const Json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) field_error(key, "missing");
  return *it;
}

void check_keys(const Json& object, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; })) {
      field_error(where.empty() ? key : where + "." + key, "unknown field");
    }
  }
}

void check_version(const Json& doc) {
  const auto it = doc.find("format_version");
  if (it == doc.end()) return;
  if (!it->is_number_integer() || it->get<std::int64_t>() != kFormatVersion) {
    field_error("format_version", "unsupported; expected " + std::to_string(kFormatVersion));
  }
}

std::int64_t exact_integer(const Json& value, const std::string& field) {
  if (value.is_number_float()) field_error(field, "expected an exact integer, got a float");
  if (!value.is_number_integer()) field_error(field, "expected an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    field_error(field, "integer out of range");
  }
  return value.get<std::int64_t>();
}

const Json& array_field(const Json& value, const std::string& field) {
  if (!value.is_array()) field_error(field, "expected an array");
  return value;
}

std::string indexed(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

std::vector<std::int64_t> integer_list(const Json& value, const std::string& field) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  for (const auto& item : array_field(value, field)) out.push_back(exact_integer(item, indexed(field, i++)));
  return out;
}

ExponentVector exponent_field(const Json& doc, const char* key) {
  try {
    return ExponentVector(integer_list(require(doc, key), key));
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind("field '", 0) == 0) throw;
    field_error(key, what);
  }
}

Json point_json(const LatticePoint2& p) { return Json::array({p.r(), p.s()}); }

}  // namespace

FanAlgebraSpec parse_fan_algebra_spec(std::string_view text) {
  const Json doc = parse_document(text);
  if (!doc.is_object()) throw InputError("spec must be a JSON object");
  check_keys(doc, {"format_version", "variables", "a", "b", "ideals", "pieces"}, "");
  check_version(doc);

  std::vector<std::string> names;
  {
    const Json& vars = array_field(require(doc, "variables"), "variables");
    std::size_t i = 0;
    for (const auto& v : vars) {
      if (!v.is_string()) field_error(indexed("variables", i), "expected a string");
      names.push_back(v.get<std::string>());
      ++i;
    }
  }
  std::optional<VariableAlphabet> alphabet;
  try {
    alphabet.emplace(std::move(names));
  } catch (const InputError& e) {
    field_error("variables", e.what());
  }

  const ExponentVector a = exponent_field(doc, "a");
  const ExponentVector b = exponent_field(doc, "b");
  std::optional<Fan> fan;
  try {
    fan.emplace(build_fan(a, b));
  } catch (const InputError& e) {
    field_error("a/b", e.what());
  }

  std::vector<MonomialIdeal> ideals;
  {
    const Json& list = array_field(require(doc, "ideals"), "ideals");
    std::size_t k = 0;
    for (const auto& ideal : list) {
      const std::string field = indexed("ideals", k++);
      std::vector<Monomial> gens;
      std::size_t g = 0;
      for (const auto& m : array_field(ideal, field)) {
        const std::string gfield = indexed(field, g++);
        if (!m.is_string()) field_error(gfield, "expected a monomial string");
        try {
          gens.push_back(parse_monomial(m.get<std::string>(), *alphabet));
        } catch (const ParseError& e) {
          field_error(gfield, e.what());
        }
      }
      ideals.emplace_back(alphabet->size(), std::move(gens));
    }
  }

  std::vector<std::vector<LinearPiece>> pieces;
  {
    const Json& list = array_field(require(doc, "pieces"), "pieces");
    std::size_t k = 0;
    for (const auto& function : list) {
      const std::string field = indexed("pieces", k++);
      auto& out = pieces.emplace_back();
      std::size_t c = 0;
      for (const auto& pair : array_field(function, field)) {
        const std::string pfield = indexed(field, c++);
        if (!pair.is_array() || pair.size() != 2) field_error(pfield, "expected [alpha, beta]");
        out.push_back({exact_integer(pair[0], indexed(pfield, 0)),
                       exact_integer(pair[1], indexed(pfield, 1))});
      }
      if (out.size() != fan->size()) {
        field_error(field, "expected " + std::to_string(fan->size()) + " pieces (one per cone), got " +
                               std::to_string(out.size()));
      }
    }
  }

  try {
    return make_fan_algebra_spec(*std::move(alphabet), *fan, std::move(ideals), std::move(pieces));
  } catch (const InputError& e) {
    field_error("pieces", e.what());
  }
}

std::string fan_algebra_spec_to_json(const FanAlgebraSpec& spec) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["variables"] = spec.variables.names();
  doc["a"] = spec.fan.a().entries();
  doc["b"] = spec.fan.b().entries();
  Json ideals = Json::array();
  for (const auto& ideal : spec.ideals) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators()) gens.push_back(format_monomial(g, spec.variables));
    ideals.push_back(std::move(gens));
  }
  doc["ideals"] = std::move(ideals);
  Json pieces = Json::array();
  for (const auto& f : spec.functions) {
    Json per_cone = Json::array();
    for (const auto& piece : f.pieces()) per_cone.push_back(Json::array({piece.alpha, piece.beta}));
    pieces.push_back(std::move(per_cone));
  }
  doc["pieces"] = std::move(pieces);
  return doc.dump(2) + "\n";
}

std::string generators_to_json(const GeneratorListing& listing) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["variables"] = listing.variables.names();
  Json gens = Json::array();
  for (const auto& g : listing.generators) {
    Json coeff = Json::object();
    for (std::size_t k = 0; k < g.coeff.n_vars(); ++k) {
      if (g.coeff[k] != 0) coeff[listing.variables.name(k)] = g.coeff[k];
    }
    gens.push_back({{"coeff", std::move(coeff)}, {"u", g.degree.r()}, {"v", g.degree.s()}});
  }
  doc["generators"] = std::move(gens);
  return doc.dump(2) + "\n";
}

GeneratorListing generators_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  if (!doc.is_object()) throw InputError("generator listing must be a JSON object");
  check_keys(doc, {"format_version", "variables", "generators"}, "");
  check_version(doc);

  std::vector<std::string> names;
  for (const auto& v : array_field(require(doc, "variables"), "variables")) {
    if (!v.is_string()) field_error("variables", "expected strings");
    names.push_back(v.get<std::string>());
  }
  GeneratorListing out{VariableAlphabet(std::move(names)), {}};

  std::size_t i = 0;
  for (const auto& g : array_field(require(doc, "generators"), "generators")) {
    const std::string field = indexed("generators", i++);
    if (!g.is_object()) field_error(field, "expected an object");
    check_keys(g, {"coeff", "u", "v"}, field);
    std::vector<std::int64_t> exponents(out.variables.size(), 0);
    const Json& coeff = require(g, "coeff");
    if (!coeff.is_object()) field_error(field + ".coeff", "expected an object");
    for (const auto& [name, e] : coeff.items()) {
      const std::size_t k = out.variables.find(name);
      if (k == out.variables.size()) field_error(field + ".coeff", "unknown variable '" + name + "'");
      exponents[k] = exact_integer(e, field + ".coeff." + name);
    }
    const std::int64_t r = exact_integer(require(g, "u"), field + ".u");
    const std::int64_t s = exact_integer(require(g, "v"), field + ".v");
    try {
      out.generators.push_back({Monomial(std::move(exponents)), LatticePoint2{r, s}});
    } catch (const InputError& e) {
      field_error(field, e.what());
    }
  }
  return out;
}

std::string generators_to_text(const GeneratorListing& listing) {
  std::string out;
  for (const auto& g : listing.generators) out += format_bigraded(g, listing.variables) + "\n";
  return out;
}

std::string fan_to_json(const Fan& fan) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["a"] = fan.a().entries();
  doc["b"] = fan.b().entries();
  Json cones = Json::array();
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const Cone2& c = fan.cone(i);
    Json basis = Json::array();
    for (const auto& h : hilbert_basis(c).elements) basis.push_back(point_json(h));
    cones.push_back({{"index", i},
                     {"rays", Json::array({point_json(c.ray_high()), point_json(c.ray_low())})},
                     {"degenerate", c.is_degenerate()},
                     {"hilbert_basis", std::move(basis)}});
  }
  doc["cones"] = std::move(cones);
  return doc.dump(2) + "\n";
}

std::string fan_to_text(const Fan& fan) {
  std::ostringstream out;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const Cone2& c = fan.cone(i);
    out << "C" << i << ": " << to_string(c.ray_high()) << " " << to_string(c.ray_low());
    if (c.is_degenerate()) out << " degenerate";
    out << " | H:";
    for (const auto& h : hilbert_basis(c).elements) out << " " << to_string(h);
    out << "\n";
  }
  return out.str();
}

std::string fan_to_svg(const Fan& fan) {
  constexpr int kUnit = 40;
  constexpr int kMargin = 20;

  std::vector<std::vector<LatticePoint2>> bases;
  std::int64_t extent = 1;
  for (const Cone2& c : fan.cones()) {
    bases.push_back(hilbert_basis(c).elements);
    for (const auto& h : bases.back()) extent = std::max({extent, h.r(), h.s()});
  }
  extent += 1;
  // Far points with l-inf norm at least 2*extent+1 keep each cone's triangle
  // covering its part of the drawing box.
  const std::int64_t reach = 2 * extent + 1;
  auto far = [&](const LatticePoint2& ray) {
    const std::int64_t m = std::max(ray.r(), ray.s());
    return ((reach + m - 1) / m) * ray;
  };
  auto xy = [](const LatticePoint2& p) {
    return std::to_string(p.r()) + "," + std::to_string(p.s());
  };

  const std::int64_t size = extent * kUnit + 2 * kMargin;
  static const char* const kFills[] = {"#dbe9f6", "#f6e3db"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" data-format-version=\"" << kFormatVersion
      << "\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " "
      << size << "\">\n";
  out << "<defs><clipPath id=\"box\"><rect x=\"0\" y=\"0\" width=\"" << extent << "\" height=\""
      << extent << "\"/></clipPath></defs>\n";
  out << "<g transform=\"translate(" << kMargin << "," << size - kMargin << ") scale(" << kUnit
      << "," << -kUnit << ")\">\n";
  out << "<g clip-path=\"url(#box)\">\n";
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const Cone2& c = fan.cone(i);
    out << "<polygon data-cone=\"" << i << "\" points=\"0,0 " << xy(far(c.ray_high())) << " "
        << xy(far(c.ray_low())) << "\" fill=\"" << kFills[i % 2] << "\"/>\n";
  }
  std::vector<LatticePoint2> rays{fan.cone(0).ray_high()};
  for (const Cone2& c : fan.cones()) rays.push_back(c.ray_low());
  for (const auto& ray : rays) {
    const LatticePoint2 end = far(ray);
    out << "<line x1=\"0\" y1=\"0\" x2=\"" << end.r() << "\" y2=\"" << end.s()
        << "\" stroke=\"#333\" stroke-width=\"0.04\"/>\n";
  }
  out << "</g>\n";
  std::set<LatticePoint2> drawn;
  for (const auto& basis : bases) {
    for (const auto& h : basis) {
      if (!drawn.insert(h).second) continue;
      out << "<circle cx=\"" << h.r() << "\" cy=\"" << h.s()
          << "\" r=\"0.12\" fill=\"#b22\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string m2check_script(const Monomial& i, const Monomial& j, const GeneratorListing& listing) {
  std::ostringstream out;
  out << "-- Asserts that algGens(I,J) yields exactly the generators below.\n";
  out << "-- Load a definition of algGens first, e.g. M2 algGens.m2 this-script.m2\n";
  out << "needsPackage \"Polyhedra\";\n";
  out << "R = QQ[";
  for (std::size_t k = 0; k < listing.variables.size(); ++k) {
    out << (k ? "," : "") << listing.variables.name(k);
  }
  out << "];\n";
  out << "I = ideal(" << format_monomial(i, listing.variables) << ");\n";
  out << "J = ideal(" << format_monomial(j, listing.variables) << ");\n";
  out << "expected = set {";
  for (std::size_t k = 0; k < listing.generators.size(); ++k) {
    out << (k ? ", " : "") << "\"" << format_bigraded(listing.generators[k], listing.variables)
        << "\"";
  }
  out << "};\n";
  out << "got = set apply(algGens(I,J), toString);\n";
  out << "assert(got === expected);\n";
  out << "print \"generator sets agree\";\n";
  return out.str();
}

}  // namespace conealg
