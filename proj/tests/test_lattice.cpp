#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "conealg/lattice.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conealg;

namespace {

using P = LatticePoint2;

std::set<oracle::Point> as_set(const std::vector<P>& pts) {
  std::set<oracle::Point> out;
  for (const P& p : pts) out.insert({p.r(), p.s()});
  return out;
}

std::vector<oracle::Point> as_pairs(const std::vector<P>& pts) {
  std::vector<oracle::Point> out;
  for (const P& p : pts) out.push_back({p.r(), p.s()});
  return out;
}

P random_ray(std::mt19937_64& rng, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(0, hi);
  for (;;) {
    const P p{d(rng), d(rng)};
    if (!p.is_zero()) return p;
  }
}

}  // namespace

TEST_CASE("primitive divides out the gcd") {
  CHECK(primitive({4, 6}) == P{2, 3});
  CHECK(primitive({0, 5}) == P{0, 1});
  CHECK(primitive({7, 0}) == P{1, 0});
  CHECK(primitive({2, 5}) == P{2, 5});
  CHECK_THROWS_WITH_AS(primitive({0, 0}), "zero ray", InputError);
}

TEST_CASE("lattice points reject negative components") {
  CHECK_THROWS_AS(P(-1, 0), InputError);
  CHECK_FALSE(subtract({1, 2}, {2, 0}).has_value());
  CHECK(*subtract({3, 2}, {2, 0}) == P{1, 2});
}

TEST_CASE("arithmetic overflow is reported") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(P(big, 0) + P(1, 0), OverflowError);
  CHECK_THROWS_AS(2 * P(0, big), OverflowError);
}

TEST_CASE("cone rays are normalized and ordered by slope") {
  const Cone2 c({4, 10}, {6, 4});
  CHECK(c.ray_low() == P{3, 2});
  CHECK(c.ray_high() == P{2, 5});
  CHECK_FALSE(c.is_degenerate());
  CHECK(Cone2({2, 2}, {1, 1}).is_degenerate());
  CHECK(Cone2({0, 1}, {1, 0}) == Cone2({1, 0}, {0, 1}));
}

TEST_CASE("cone membership") {
  const Cone2 c({3, 2}, {2, 5});
  CHECK(cone_contains(c, {1, 1}));
  CHECK_FALSE(cone_contains(c, {2, 1}));
  CHECK(cone_contains(c, {0, 0}));
  CHECK(cone_contains(c, {6, 4}));
  CHECK(cone_contains(c, {2, 5}));
  CHECK_FALSE(cone_contains(c, {1, 3}));
}

TEST_CASE("hilbert basis golden values") {
  CHECK(as_set(hilbert_basis(Cone2({2, 5}, {0, 1})).elements) ==
        std::set<oracle::Point>{{0, 1}, {1, 3}, {2, 5}});
  CHECK(as_set(hilbert_basis(Cone2({3, 2}, {2, 5})).elements) ==
        std::set<oracle::Point>{{1, 1}, {1, 2}, {3, 2}, {2, 5}});
  CHECK(as_set(hilbert_basis(Cone2({1, 0}, {3, 2})).elements) ==
        std::set<oracle::Point>{{1, 0}, {2, 1}, {3, 2}});
  CHECK(as_set(hilbert_basis(Cone2({1, 0}, {0, 1})).elements) ==
        std::set<oracle::Point>{{1, 0}, {0, 1}});
}

TEST_CASE("hilbert basis elements are listed by descending slope") {
  const auto h = hilbert_basis(Cone2({3, 2}, {2, 5}));
  REQUIRE(h.elements.size() == 4);
  CHECK(h.elements == std::vector<P>{{2, 5}, {1, 2}, {1, 1}, {3, 2}});
}

TEST_CASE("degenerate cone has the singleton basis") {
  const auto h = hilbert_basis(Cone2({4, 2}, {2, 1}));
  CHECK(h.elements == std::vector<P>{{2, 1}});
  const auto axis = hilbert_basis(Cone2({0, 3}, {0, 1}));
  CHECK(axis.elements == std::vector<P>{{0, 1}});
}

TEST_CASE("decompose golden values") {
  const auto h = hilbert_basis(Cone2({2, 5}, {0, 1}));
  CHECK(decompose({0, 0}, h).empty());
  CHECK(decompose({2, 6}, h) == Decomposition{{{0, 1}, 1}, {{2, 5}, 1}});
  CHECK(decompose({4, 10}, h) == Decomposition{{{2, 5}, 2}});
  CHECK_THROWS_WITH_AS(decompose({1, 0}, h), "point not in cone", InputError);
}

TEST_CASE("decompose agrees with exhaustive search") {
  const auto h = hilbert_basis(Cone2({3, 2}, {2, 5}));
  const auto basis = as_pairs(h.elements);
  for (const auto& [r, s] : oracle::points_in({{3, 2}, {2, 5}}, 14)) {
    const auto d = decompose({r, s}, h);
    CHECK(recombine(d) == P{r, s});
    // The returned multiplicities must be one of the exhaustive solutions.
    std::vector<std::int64_t> m(basis.size(), 0);
    for (const auto& t : d) {
      CHECK(t.multiplicity > 0);
      const auto it = std::find(basis.begin(), basis.end(), oracle::Point{t.element.r(), t.element.s()});
      REQUIRE(it != basis.end());
      m[it - basis.begin()] = t.multiplicity;
    }
    const auto all = oracle::all_decompositions({r, s}, basis);
    CHECK(std::find(all.begin(), all.end(), m) != all.end());
  }
}

TEST_CASE("random cones: minimality and generation against brute force") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const P u = random_ray(rng, 7), w = random_ray(rng, 7);
    const Cone2 c(u, w);
    const auto h = hilbert_basis(c);
    const oracle::Wedge wedge{{u.r(), u.s()}, {w.r(), w.s()}};
    CAPTURE(to_string(u));
    CAPTURE(to_string(w));

    for (const P& e : h.elements) CHECK(wedge.contains({e.r(), e.s()}));

    // Every irreducible point up to the bound must be in the basis and vice versa.
    const std::int64_t bound = 25;
    std::set<oracle::Point> small;
    for (const P& e : h.elements)
      if (e.r() <= bound && e.s() <= bound) small.insert({e.r(), e.s()});
    CHECK(small == oracle::irreducibles(wedge, bound));

    const auto reached = oracle::generated(as_pairs(h.elements), bound);
    for (const auto& p : oracle::points_in(wedge, bound)) CHECK(reached.count(p) == 1);
  }
}

TEST_CASE("hilbert basis is pure and swaps with the coordinates") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const P u = random_ray(rng, 9), w = random_ray(rng, 9);
    const auto h1 = hilbert_basis(Cone2(u, w));
    CHECK(h1.elements == hilbert_basis(Cone2(w, u)).elements);
    std::set<oracle::Point> swapped;
    for (const P& e : h1.elements) swapped.insert({e.s(), e.r()});
    CHECK(as_set(hilbert_basis(Cone2({u.s(), u.r()}, {w.s(), w.r()})).elements) == swapped);
  }
}

TEST_CASE("adjacent cones share their common ray in both bases") {
  const auto left = hilbert_basis(Cone2({0, 1}, {2, 5}));
  const auto right = hilbert_basis(Cone2({2, 5}, {3, 2}));
  CHECK(as_set(left.elements).count({2, 5}) == 1);
  CHECK(as_set(right.elements).count({2, 5}) == 1);
}

TEST_CASE("try_decompose respects a restricted element list") {
  const Cone2 c({0, 1}, {2, 5});
  const std::vector<P> without_axis{{2, 5}, {1, 3}};
  CHECK_FALSE(try_decompose({0, 1}, c, without_axis).has_value());
  const auto d = try_decompose({3, 8}, c, without_axis);
  REQUIRE(d.has_value());
  CHECK(recombine(*d) == P{3, 8});
}
