#include "conealg/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "conealg/fan_algebra.hpp"
#include "conealg/generators.hpp"
#include "conealg/io.hpp"
#include "json.hpp"

namespace conealg::cli {

namespace {

struct VerificationFailure {
  std::string message;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
  }
  return out;
}

std::int64_t parse_integer(const std::string& text, const std::string& what) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) throw OverflowError();
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InputError(what + ": expected an integer, got '" + text + "'");
  }
  return value;
}

ExponentVector parse_exponents(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> entries;
  for (const auto& item : split_commas(text)) entries.push_back(parse_integer(item, what));
  try {
    return ExponentVector(std::move(entries));
  } catch (const InputError& e) {
    throw InputError(what + ": " + e.what());
  }
}

LatticePoint2 parse_point(const std::string& text, const std::string& what) {
  const auto parts = split_commas(text);
  if (parts.size() != 2) throw InputError(what + ": expected r,s");
  return {parse_integer(parts[0], what), parse_integer(parts[1], what)};
}

/// A principal pair given either as monomials or as exponent vectors.
struct PrincipalPair {
  VariableAlphabet variables;
  ExponentVector a;
  ExponentVector b;
};

struct PairOptions {
  std::string ideal_i, ideal_j, a, b, vars;
};

void add_vector_options(CLI::App* cmd, PairOptions& o) {
  cmd->add_option("--a", o.a, "Exponents of the generator of I, comma separated");
  cmd->add_option("--b", o.b, "Exponents of the generator of J, comma separated");
  cmd->add_option("--vars", o.vars, "Variable names, comma separated");
}

PrincipalPair resolve_pair(const PairOptions& o) {
  const bool monomials = !o.ideal_i.empty() || !o.ideal_j.empty();
  const bool vectors = !o.a.empty() || !o.b.empty();
  if (monomials && vectors) throw InputError("give either --ideal-i/--ideal-j or --a/--b, not both");
  if (monomials) {
    if (o.ideal_i.empty() || o.ideal_j.empty()) throw InputError("both --ideal-i and --ideal-j are required");
    std::vector<std::string> names =
        o.vars.empty() ? scan_variables({o.ideal_i, o.ideal_j}) : split_commas(o.vars);
    if (names.empty()) throw InputError("both ideals are the unit ideal");
    VariableAlphabet alphabet(std::move(names));
    Monomial i, j;
    try {
      i = parse_monomial(o.ideal_i, alphabet);
    } catch (const ParseError& e) {
      throw ParseError("--ideal-i: " + e.message(), e.column());
    }
    try {
      j = parse_monomial(o.ideal_j, alphabet);
    } catch (const ParseError& e) {
      throw ParseError("--ideal-j: " + e.message(), e.column());
    }
    return {alphabet, ExponentVector(i.exponents()), ExponentVector(j.exponents())};
  }
  if (o.a.empty() || o.b.empty()) throw InputError("both --a and --b are required");
  ExponentVector a = parse_exponents(o.a, "--a");
  ExponentVector b = parse_exponents(o.b, "--b");
  if (a.size() != b.size()) throw InputError("--a and --b differ in length");
  VariableAlphabet alphabet =
      o.vars.empty() ? VariableAlphabet::numbered(a.size()) : VariableAlphabet(split_commas(o.vars));
  if (alphabet.size() != a.size()) throw InputError("--vars must name one variable per exponent");
  return {std::move(alphabet), std::move(a), std::move(b)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string report_line(const VerificationReport& report) {
  if (report.passed) {
    return "PASS " + std::to_string(report.checked) + "/" + std::to_string(report.total) +
           " components";
  }
  return "FAIL at " + to_string(*report.first_failure) + ": " + report.reason;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generators of intersection algebras and fan algebras"};
  app.name(args.empty() ? "conealg" : args.front());
  app.require_subcommand(1);

  PairOptions gen_opts;
  std::string gen_format = "text";
  auto* gen = app.add_subcommand("generators", "Generators of the intersection algebra of (x^a), (x^b)");
  gen->add_option("--ideal-i", gen_opts.ideal_i, "Generator of I, e.g. x^5*y^2");
  gen->add_option("--ideal-j", gen_opts.ideal_j, "Generator of J, e.g. x^2*y^3");
  add_vector_options(gen, gen_opts);
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"text", "json", "m2check"}));

  std::vector<std::string> rays;
  std::string hb_format = "text";
  auto* hb = app.add_subcommand("hilbert-basis", "Hilbert basis of the cone spanned by two rays");
  hb->add_option("--ray", rays, "Ray r,s (give twice)")->required()->expected(2);
  hb->add_option("--format", hb_format)->check(CLI::IsMember({"text", "json"}));

  PairOptions fan_opts;
  std::string fan_format = "text";
  auto* fan_cmd = app.add_subcommand("fan", "Cones of the fan of (a, b) with their Hilbert bases");
  add_vector_options(fan_cmd, fan_opts);
  fan_cmd->add_option("--format", fan_format)->check(CLI::IsMember({"text", "json", "svg"}));

  PairOptions sg_opts;
  auto* sg = app.add_subcommand("semigroup", "Exponent vectors generating the semigroup of the algebra");
  add_vector_options(sg, sg_opts);

  PairOptions ver_opts;
  std::int64_t r_max = 15, s_max = 15;
  std::vector<std::string> dropped;
  auto* ver = app.add_subcommand("verify", "Check generation on the grid [0,rmax] x [0,smax]");
  add_vector_options(ver, ver_opts);
  ver->add_option("--rmax", r_max)->check(CLI::NonNegativeNumber);
  ver->add_option("--smax", s_max)->check(CLI::NonNegativeNumber);
  ver->add_option("--drop", dropped, "Remove the generator of degree r,s before checking");

  PairOptions lim_opts;
  auto* lim = app.add_subcommand("limits", "Asymptotic containment limits of I and J");
  add_vector_options(lim, lim_opts);

  std::string spec_path;
  std::optional<std::int64_t> fa_grid;
  std::string fa_format = "text";
  auto* fa = app.add_subcommand("fan-algebra", "Generators of a fan algebra read from a JSON spec");
  fa->add_option("--spec", spec_path, "Spec file")->required();
  fa->add_option("--verify", fa_grid, "Also verify on the grid [0,N] x [0,N]")
      ->check(CLI::NonNegativeNumber);
  fa->add_option("--format", fa_format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gen->parsed()) {
      const PrincipalPair pair = resolve_pair(gen_opts);
      const GeneratorSet gens = intersection_generators(pair.a, pair.b);
      const GeneratorListing listing{pair.variables, gens.generators};
      if (gen_format == "json") {
        out << generators_to_json(listing);
      } else if (gen_format == "m2check") {
        out << m2check_script(Monomial(pair.a.entries()), Monomial(pair.b.entries()), listing);
      } else {
        out << generators_to_text(listing);
      }
    } else if (hb->parsed()) {
      const Cone2 cone(parse_point(rays.at(0), "--ray"), parse_point(rays.at(1), "--ray"));
      const HilbertBasis2 basis = hilbert_basis(cone);
      if (hb_format == "json") {
        nlohmann::ordered_json doc;
        doc["format_version"] = kFormatVersion;
        doc["rays"] = {{cone.ray_high().r(), cone.ray_high().s()},
                       {cone.ray_low().r(), cone.ray_low().s()}};
        doc["hilbert_basis"] = nlohmann::ordered_json::array();
        for (const auto& h : basis.elements) doc["hilbert_basis"].push_back({h.r(), h.s()});
        out << doc.dump(2) << "\n";
      } else {
        for (std::size_t k = 0; k < basis.elements.size(); ++k) {
          out << (k ? " " : "") << to_string(basis.elements[k]);
        }
        out << "\n";
      }
    } else if (fan_cmd->parsed()) {
      const PrincipalPair pair = resolve_pair(fan_opts);
      const FanOrdered ordered = fan_order(pair.a, pair.b);
      const Fan fan = build_fan(ordered.a, ordered.b);
      if (fan_format == "json") {
        out << fan_to_json(fan);
      } else if (fan_format == "svg") {
        out << fan_to_svg(fan);
      } else {
        out << fan_to_text(fan);
      }
    } else if (sg->parsed()) {
      const PrincipalPair pair = resolve_pair(sg_opts);
      for (const auto& v : semigroup_generators(pair.a, pair.b).vectors) {
        out << "(";
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
        out << ")\n";
      }
    } else if (ver->parsed()) {
      const PrincipalPair pair = resolve_pair(ver_opts);
      GeneratorSet gens = intersection_generators(pair.a, pair.b);
      for (const auto& d : dropped) {
        const LatticePoint2 degree = parse_point(d, "--drop");
        std::erase_if(gens.generators, [&](const BigradedMonomial& g) { return g.degree == degree; });
      }
      const VerificationReport report = verify_generation(pair.a, pair.b, gens, r_max, s_max);
      out << report_line(report) << "\n";
      if (!report.passed) throw VerificationFailure{report_line(report)};
    } else if (lim->parsed()) {
      const PrincipalPair pair = resolve_pair(lim_opts);
      const AsymptoticLimits l = asymptotic_limits(pair.a, pair.b);
      out << "l_I(J)=" << to_string(l.l_I_of_J) << " L_I(J)=" << to_string(l.L_I_of_J)
          << " l_J(I)=" << to_string(l.l_J_of_I) << " L_J(I)=" << to_string(l.L_J_of_I) << "\n";
    } else if (fa->parsed()) {
      const std::size_t cap = candidate_cap_from_environment();
      const FanAlgebraSpec spec = parse_fan_algebra_spec(read_file(spec_path));
      const GeneratorListing listing{spec.variables, fan_algebra_generators(spec, cap)};
      out << (fa_format == "json" ? generators_to_json(listing) : generators_to_text(listing));
      if (fa_grid) {
        const VerificationReport report =
            verify_fan_algebra(spec, listing.generators, *fa_grid, *fa_grid, cap);
        (fa_format == "json" ? err : out) << report_line(report) << "\n";
        if (!report.passed) throw VerificationFailure{report_line(report)};
      }
    }
  } catch (const VerificationFailure&) {
    return kVerificationFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kOverflow;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kOverflow;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace conealg::cli
