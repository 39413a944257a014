#include "conealg/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

namespace conealg {

std::size_t candidate_cap_from_environment() {
  const char* raw = std::getenv("CONEALG_MAX_CANDIDATES");
  if (raw == nullptr) return kDefaultCandidateCap;
  std::size_t value = 0;
  const std::string_view text(raw);
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw InputError("CONEALG_MAX_CANDIDATES must be a positive integer");
  }
  return value;
}

Monomial::Monomial(std::vector<std::int64_t> exponents) : exponents_(std::move(exponents)) {
  for (std::int64_t e : exponents_) {
    if (e < 0) throw InputError("monomial exponents must be nonnegative");
  }
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](std::int64_t e) { return e == 0; });
}

std::int64_t Monomial::degree() const {
  std::int64_t total = 0;
  for (std::int64_t e : exponents_) total = checked_add(total, e);
  return total;
}

namespace {

void require_same_arity(std::size_t x, std::size_t y) {
  if (x != y) {
    throw InputError("variable count mismatch: " + std::to_string(x) + " vs " + std::to_string(y));
  }
}

}  // namespace

bool Monomial::divides(const Monomial& other) const {
  require_same_arity(n_vars(), other.n_vars());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  require_same_arity(x.n_vars(), y.n_vars());
  std::vector<std::int64_t> out(x.n_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(x[i], y[i]);
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& x, const Monomial& y) {
  require_same_arity(x.n_vars(), y.n_vars());
  std::vector<std::int64_t> out(x.n_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(x[i], y[i]);
  return Monomial(std::move(out));
}

Monomial pow(const Monomial& x, std::int64_t k) {
  if (k < 0) throw InputError("negative monomial power");
  std::vector<std::int64_t> out(x.n_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(x[i], k);
  return Monomial(std::move(out));
}

MonomialIdeal::MonomialIdeal(std::size_t n_vars, std::vector<Monomial> generators)
    : n_vars_(n_vars) {
  for (const auto& g : generators) require_same_arity(n_vars, g.n_vars());

  std::vector<std::pair<std::int64_t, Monomial>> keyed;
  keyed.reserve(generators.size());
  for (auto& g : generators) {
    const std::int64_t d = g.degree();
    keyed.emplace_back(d, std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  });
  // A divisor never has larger degree, so scanning in degree order keeps
  // exactly the minimal generators.
  for (auto& [degree, g] : keyed) {
    const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                       [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) generators_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::maximal(std::size_t n_vars) {
  std::vector<Monomial> vars;
  for (std::size_t i = 0; i < n_vars; ++i) {
    std::vector<std::int64_t> e(n_vars, 0);
    e[i] = 1;
    vars.emplace_back(std::move(e));
  }
  return {n_vars, std::move(vars)};
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

Monomial principal_intersection(const ExponentVector& a, const ExponentVector& b, std::int64_t r,
                                std::int64_t s) {
  require_same_arity(a.size(), b.size());
  if (r < 0 || s < 0) throw InputError("graded degree must be nonnegative");
  std::vector<std::int64_t> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = std::max(checked_mul(r, a[k]), checked_mul(s, b[k]));
  }
  return Monomial(std::move(out));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& x, const MonomialIdeal& y) {
  require_same_arity(x.n_vars(), y.n_vars());
  std::vector<Monomial> lcms;
  lcms.reserve(x.generators().size() * y.generators().size());
  for (const auto& g : x.generators()) {
    for (const auto& h : y.generators()) lcms.push_back(lcm(g, h));
  }
  return {x.n_vars(), std::move(lcms)};
}

MonomialIdeal ideal_product(const MonomialIdeal& x, const MonomialIdeal& y,
                            std::size_t max_candidates) {
  require_same_arity(x.n_vars(), y.n_vars());
  const std::size_t nx = x.generators().size();
  const std::size_t ny = y.generators().size();
  if (nx != 0 && ny > max_candidates / nx) {
    throw CapExceededError("power too large: " + std::to_string(nx) + " x " + std::to_string(ny) +
                           " candidate products exceed the cap of " +
                           std::to_string(max_candidates));
  }
  std::vector<Monomial> products;
  products.reserve(nx * ny);
  for (const auto& g : x.generators()) {
    for (const auto& h : y.generators()) products.push_back(g * h);
  }
  return {x.n_vars(), std::move(products)};
}

MonomialIdeal ideal_power(const MonomialIdeal& x, std::int64_t m, std::size_t max_candidates) {
  if (m < 0) throw InputError("negative ideal power");
  if (x.generators().size() == 1) return MonomialIdeal::principal(pow(x.generators().front(), m));

  MonomialIdeal result = MonomialIdeal::unit(x.n_vars());
  MonomialIdeal base = x;
  for (std::int64_t e = m; e > 0; e >>= 1) {
    if (e & 1) result = ideal_product(result, base, max_candidates);
    if (e > 1) base = ideal_product(base, base, max_candidates);
  }
  return result;
}

bool member(const Monomial& m, const MonomialIdeal& ideal) { return ideal.contains(m); }

namespace {

bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_identifier_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

VariableAlphabet::VariableAlphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("variable alphabet is empty");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty() || !is_identifier_start(name.front()) ||
        !std::all_of(name.begin(), name.end(), is_identifier_char)) {
      throw InputError("invalid variable name '" + name + "'");
    }
    if (name == "u" || name == "v") {
      throw InputError("variable name '" + name + "' is reserved for the bigrading");
    }
    if (!seen.insert(name).second) throw InputError("duplicate variable '" + name + "'");
  }
}

VariableAlphabet VariableAlphabet::numbered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VariableAlphabet(std::move(names));
}

std::size_t VariableAlphabet::find(std::string_view name) const {
  return static_cast<std::size_t>(std::find(names_.begin(), names_.end(), name) - names_.begin());
}

std::vector<std::string> scan_variables(std::initializer_list<std::string_view> texts) {
  std::vector<std::string> out;
  for (std::string_view text : texts) {
    for (std::size_t i = 0; i < text.size();) {
      if (is_identifier_start(text[i])) {
        std::size_t j = i;
        while (j < text.size() && is_identifier_char(text[j])) ++j;
        std::string name(text.substr(i, j - i));
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        while (i < text.size() && is_identifier_char(text[i])) ++i;
      } else {
        ++i;
      }
    }
  }
  return out;
}

Monomial parse_monomial(std::string_view text, const VariableAlphabet& alphabet) {
  std::vector<std::int64_t> exponents(alphabet.size(), 0);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto column = [&] { return pos + 1; };
  auto read_integer = [&]() -> std::int64_t {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a nonnegative integer", start + 1);
    std::int64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec == std::errc::result_out_of_range) throw OverflowError();
    return value;
  };

  skip_space();
  if (pos == text.size()) throw ParseError("empty monomial", column());
  while (true) {
    skip_space();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      if (read_integer() != 1) throw ParseError("coefficients are not allowed", start + 1);
    } else if (pos < text.size() && is_identifier_start(text[pos])) {
      const std::size_t start = pos;
      while (pos < text.size() && is_identifier_char(text[pos])) ++pos;
      const std::string_view name = text.substr(start, pos - start);
      const std::size_t index = alphabet.find(name);
      if (index == alphabet.size()) {
        throw ParseError("unknown variable '" + std::string(name) + "'", start + 1);
      }
      std::int64_t exponent = 1;
      skip_space();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_space();
        exponent = read_integer();
      }
      exponents[index] = checked_add(exponents[index], exponent);
    } else {
      throw ParseError(pos == text.size() ? "unexpected end of monomial" : "not a monomial",
                       column());
    }
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("not a monomial", column());
    ++pos;
  }
  return Monomial(std::move(exponents));
}

std::string format_monomial(const Monomial& m, const VariableAlphabet& alphabet) {
  require_same_arity(m.n_vars(), alphabet.size());
  std::string out;
  for (std::size_t i = 0; i < m.n_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += alphabet.name(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_bigraded(const BigradedMonomial& g, const VariableAlphabet& alphabet) {
  std::string out = g.coeff.is_unit() ? "" : format_monomial(g.coeff, alphabet);
  auto append = [&](const char* var, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  };
  append("u", g.degree.r());
  append("v", g.degree.s());
  return out.empty() ? "1" : out;
}

}  // namespace conealg
