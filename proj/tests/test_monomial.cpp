#include <cstdlib>
#include <limits>
#include <random>

#include "conealg/monomial.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conealg;

namespace {

const VariableAlphabet xy({"x", "y"});

Monomial mono(std::string_view text) { return parse_monomial(text, xy); }

MonomialIdeal ideal(std::initializer_list<std::string_view> gens) {
  std::vector<Monomial> ms;
  for (auto g : gens) ms.push_back(mono(g));
  return {2, ms};
}

std::set<oracle::Exps> gen_set(const MonomialIdeal& i) {
  std::set<oracle::Exps> out;
  for (const auto& g : i.generators()) out.insert(g.exponents());
  return out;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n_vars) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<std::int64_t> e(0, 3);
  std::vector<Monomial> gens;
  for (int k = count(rng); k > 0; --k) {
    std::vector<std::int64_t> x(n_vars);
    for (auto& v : x) v = e(rng);
    gens.emplace_back(x);
  }
  return {n_vars, gens};
}

}  // namespace

TEST_CASE("principal_intersection examples") {
  CHECK(principal_intersection({2, 1}, {1, 3}, 2, 3) == mono("x^4*y^9"));
  CHECK(principal_intersection({2, 1}, {1, 3}, 4, 1) == mono("x^8*y^4"));
  CHECK(principal_intersection({2, 1}, {1, 3}, 0, 0).is_unit());
  CHECK_THROWS_AS(principal_intersection({1}, {1, 2}, 1, 1), InputError);
  CHECK_THROWS_AS(principal_intersection({std::numeric_limits<std::int64_t>::max()}, {1}, 2, 0),
                  OverflowError);
}

TEST_CASE("ideal_intersect examples") {
  CHECK(ideal_intersect(ideal({"x^2*y"}), ideal({"x*y^3"})) == ideal({"x^2*y^3"}));
  const auto a = ideal({"x^2", "y^5"});
  CHECK(ideal_intersect(a, MonomialIdeal::unit(2)) == a);
  CHECK(ideal_intersect(ideal({"x*y"}), ideal_power(MonomialIdeal::maximal(2), 3)) ==
        ideal({"x^2*y", "x*y^2"}));
}

TEST_CASE("ideal_power examples") {
  const auto sq = ideal_power(MonomialIdeal::maximal(2), 2);
  CHECK(sq == ideal({"x^2", "x*y", "y^2"}));
  CHECK(sq.generators() == std::vector<Monomial>{mono("x^2"), mono("x*y"), mono("y^2")});
  CHECK(ideal_power(ideal({"x^5*y^2"}), 3) == ideal({"x^15*y^6"}));
  CHECK(ideal_power(ideal({"x^2", "y^3"}), 2) == ideal({"x^4", "x^2*y^3", "y^6"}));
  CHECK(ideal_power(ideal({"x", "y"}), 0).is_unit());
  CHECK(ideal_power(MonomialIdeal::zero(2), 0).is_unit());
  CHECK(ideal_power(MonomialIdeal::zero(2), 2).is_zero());
}

TEST_CASE("ideal_product examples") {
  CHECK(ideal_product(ideal({"x"}), ideal({"y"})) == ideal({"x*y"}));
  CHECK(ideal_product(ideal({"x", "y"}), ideal({"x"})) == ideal({"x^2", "x*y"}));
  // x*y divides x^2*y^3, so the minimal generators are three.
  CHECK(ideal_product(ideal({"x^2", "y"}), ideal({"x", "y^3"})) == ideal({"x^3", "x*y", "y^4"}));
  CHECK(gen_set(ideal_product(ideal({"x^2", "y"}), ideal({"x", "y^3"}))) ==
        oracle::minimize({{3, 0}, {2, 3}, {1, 1}, {0, 4}}));
}

TEST_CASE("candidate cap") {
  const auto m3 = MonomialIdeal::maximal(3);
  CHECK_THROWS_AS(ideal_power(m3, 6, 10), CapExceededError);
  CHECK_NOTHROW(ideal_power(m3, 6, 1000));
  CHECK_THROWS_WITH_AS(ideal_product(m3, m3, 8), doctest::Contains("power too large"), CapExceededError);
}

TEST_CASE("candidate cap from the environment") {
  ::unsetenv("CONEALG_MAX_CANDIDATES");
  CHECK(candidate_cap_from_environment() == kDefaultCandidateCap);
  ::setenv("CONEALG_MAX_CANDIDATES", "42", 1);
  CHECK(candidate_cap_from_environment() == 42);
  ::setenv("CONEALG_MAX_CANDIDATES", "lots", 1);
  CHECK_THROWS_AS(candidate_cap_from_environment(), InputError);
  ::unsetenv("CONEALG_MAX_CANDIDATES");
}

TEST_CASE("member examples") {
  CHECK(member(mono("x^5*y^9"), ideal({"x^4*y^9"})));
  CHECK_FALSE(member(Monomial::unit(2), ideal({"x"})));
  CHECK(member(mono("x^2*y"), ideal({"x^2", "y^2"})));
  CHECK_FALSE(member(mono("x"), MonomialIdeal::zero(2)));
}

TEST_CASE("normal form is minimal and ordered") {
  const MonomialIdeal i(2, {mono("x^2*y"), mono("x"), mono("y^3"), mono("x*y^4")});
  CHECK(i.generators() == std::vector<Monomial>{mono("x"), mono("y^3")});
  CHECK(MonomialIdeal(2, {mono("x"), mono("1")}).is_unit());
  CHECK_THROWS_AS(MonomialIdeal(3, {mono("x")}), InputError);
}

TEST_CASE("monomial arity mismatches are errors") {
  CHECK_THROWS_AS(Monomial({1, 2}) * Monomial({1}), InputError);
  CHECK_THROWS_AS(Monomial({1}).divides(Monomial({1, 2})), InputError);
}

TEST_CASE("parsing and printing") {
  CHECK(mono("x^5*y^2").exponents() == std::vector<std::int64_t>{5, 2});
  CHECK(mono("y*x").exponents() == std::vector<std::int64_t>{1, 1});
  CHECK(mono("x*x^2").exponents() == std::vector<std::int64_t>{3, 0});
  CHECK(mono("1").is_unit());
  CHECK(mono(" x ^ 2 * y ").exponents() == std::vector<std::int64_t>{2, 1});
  CHECK(format_monomial(mono("x^5*y^2"), xy) == "x^5*y^2");
  CHECK(format_monomial(mono("y"), xy) == "y");
  CHECK(format_monomial(Monomial::unit(2), xy) == "1");
  CHECK(format_bigraded({mono("x^5*y^2"), {1, 0}}, xy) == "x^5*y^2*u");
  CHECK(format_bigraded({mono("x^2*y^3"), {0, 1}}, xy) == "x^2*y^3*v");
  CHECK(format_bigraded({mono("1"), {2, 3}}, xy) == "u^2*v^3");
  CHECK(format_bigraded({mono("1"), {0, 0}}, xy) == "1");
}

TEST_CASE("parse errors carry a column") {
  try {
    mono("x+y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 2);
    CHECK(e.message() == "not a monomial");
  }
  try {
    mono("x*z");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
    CHECK(e.message() == "unknown variable 'z'");
  }
  CHECK_THROWS_AS(mono("3*x"), ParseError);
  CHECK_THROWS_AS(mono(""), ParseError);
  CHECK_THROWS_AS(mono("x^"), ParseError);
  CHECK_THROWS_AS(mono("x^99999999999999999999"), OverflowError);
}

TEST_CASE("alphabets") {
  CHECK(VariableAlphabet::numbered(3).names() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK_THROWS_AS(VariableAlphabet({"x", "x"}), InputError);
  CHECK_THROWS_AS(VariableAlphabet({"u"}), InputError);
  CHECK_THROWS_AS(VariableAlphabet({"2x"}), InputError);
  CHECK(xy.find("y") == 1);
  CHECK(xy.find("z") == 2);
  CHECK(scan_variables({"x^5*y^2", "z*x"}) == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("principal_intersection agrees with the ideal oracle") {
  const std::vector<std::pair<oracle::Exps, oracle::Exps>> cases{
      {{2, 1}, {1, 3}}, {{5, 2}, {2, 3}}, {{0, 4}, {3, 0}}, {{1, 1, 2}, {2, 0, 1}}};
  for (const auto& [a, b] : cases) {
    for (std::int64_t r = 0; r <= 10; ++r)
      for (std::int64_t s = 0; s <= 10; ++s) {
        const auto got = principal_intersection(ExponentVector(a), ExponentVector(b), r, s);
        const auto expected = oracle::intersect(oracle::power({a}, r, a.size()),
                                                oracle::power({b}, s, b.size()));
        CHECK(expected == std::set<oracle::Exps>{got.exponents()});
        const auto via_ideals = ideal_intersect(ideal_power(MonomialIdeal::principal(Monomial(a)), r),
                                                ideal_power(MonomialIdeal::principal(Monomial(b)), s));
        CHECK(via_ideals == MonomialIdeal::principal(got));
      }
  }
}

TEST_CASE("components are superadditive") {
  const ExponentVector a{5, 2, 0}, b{2, 3, 1};
  for (std::int64_t r = 0; r <= 5; ++r)
    for (std::int64_t s = 0; s <= 5; ++s)
      for (std::int64_t r2 = 0; r2 <= 5; ++r2)
        for (std::int64_t s2 = 0; s2 <= 5; ++s2) {
          const auto sum = principal_intersection(a, b, r + r2, s + s2);
          CHECK(sum.divides(principal_intersection(a, b, r, s) * principal_intersection(a, b, r2, s2)));
        }
}

TEST_CASE("random ideals: operations agree with raw enumeration") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto x = random_ideal(rng, n), y = random_ideal(rng, n), z = random_ideal(rng, n);
    std::vector<oracle::Exps> xs, ys;
    for (const auto& g : x.generators()) xs.push_back(g.exponents());
    for (const auto& g : y.generators()) ys.push_back(g.exponents());

    CHECK(gen_set(ideal_intersect(x, y)) == oracle::intersect(oracle::minimize(xs), oracle::minimize(ys)));
    std::vector<oracle::Exps> products;
    for (const auto& g : xs)
      for (const auto& h : ys) {
        oracle::Exps p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = g[i] + h[i];
        products.push_back(p);
      }
    CHECK(gen_set(ideal_product(x, y)) == oracle::minimize(products));
    CHECK(gen_set(ideal_power(x, 3)) == oracle::power(xs, 3, n));

    CHECK(ideal_intersect(x, y) == ideal_intersect(y, x));
    CHECK(ideal_product(x, y) == ideal_product(y, x));
    CHECK(ideal_intersect(ideal_intersect(x, y), z) == ideal_intersect(x, ideal_intersect(y, z)));
    CHECK(ideal_product(ideal_product(x, y), z) == ideal_product(x, ideal_product(y, z)));
    CHECK(ideal_product(x, MonomialIdeal::unit(n)) == x);

    // Membership by definition: some generator divides the monomial.
    std::uniform_int_distribution<std::int64_t> e(0, 4);
    for (int k = 0; k < 20; ++k) {
      oracle::Exps m(n);
      for (auto& v : m) v = e(rng);
      bool expected = false;
      for (const auto& g : xs) expected = expected || oracle::divides(g, m);
      CHECK(member(Monomial(m), x) == expected);
    }
  }
}
