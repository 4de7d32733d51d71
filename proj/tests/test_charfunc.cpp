#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "smallcover/charfunc.hpp"
#include "smallcover/error.hpp"
#include "smallcover/nerve.hpp"

using namespace smallcover;

namespace {

constexpr GF2Vector e1 = 0b001, e2 = 0b010, e3 = 0b100;

std::vector<GF2Vector> random_gl(std::mt19937_64& rng, int n) {
  const auto group = general_linear_group(n);
  return group[rng() % group.size()];
}

}  // namespace

TEST_CASE("lambda0") {
  const CharFunc l = lambda0(simplex(2));
  CHECK(l.target_rank() == 3);
  CHECK(l.columns() == std::vector<GF2Vector>{1, 2, 4});
  const CharFunc c = lambda0(cube(3));
  CHECK(c.target_rank() == 6);
  for (int i = 0; i < 6; ++i) CHECK(c[i] == GF2Vector{1} << i);
  for (const auto& p : {simplex(3), cube(3), polygon(7), dual_cyclic(7, 4)}) {
    CHECK(independent_at_vertices(p, lambda0(p)));
  }
}

TEST_CASE("validate_charfunc") {
  const auto tri = simplex(2);
  CHECK(validate_charfunc(tri, CharFunc(2, {e1, e2, e1 | e2})).valid());

  const CharFuncCheck bad = validate_charfunc(tri, CharFunc(2, {e1, e2, e1}));
  REQUIRE_FALSE(bad.valid());
  CHECK(tri.vertices()[static_cast<std::size_t>(*bad.failing_vertex)] == 0b101);

  CHECK(validate_charfunc(cube(3), CharFunc(3, {e1, e1, e2, e2, e3, e3})).valid());

  CHECK_THROWS_AS(validate_charfunc(tri, CharFunc(2, {e1, e2})), Error);
  CHECK_THROWS_AS(validate_charfunc(tri, CharFunc(3, {e1, e2, e3})), Error);
  try {
    validate_charfunc(tri, CharFunc(2, {e1, 0, e2}));
    FAIL("expected ZeroColumn");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroColumn);
  }
}

TEST_CASE("exists_small_cover examples") {
  for (int n = 1; n <= 6; ++n) {
    const auto s = exists_small_cover(simplex(n));
    REQUIRE(s.exists());
    std::vector<GF2Vector> expected;
    for (int i = 0; i < n; ++i) expected.push_back(GF2Vector{1} << i);
    expected.push_back((GF2Vector{1} << n) - 1);
    CHECK(s.witness->columns() == expected);
  }
  const auto dc = exists_small_cover(dual_cyclic(16, 4));
  CHECK_FALSE(dc.exists());
  CHECK(dc.reason == NoSmallCoverReason::Pigeonhole);

  const auto c3 = exists_small_cover(cube(3));
  REQUIRE(c3.exists());
  CHECK(validate_charfunc(cube(3), *c3.witness).valid());
}

TEST_CASE("existence agrees with brute force on small instances") {
  std::vector<SimplePolytope> ps = {simplex(2), simplex(3), cube(2), cube(3),
                                    product(simplex(2), simplex(1))};
  for (int m = 3; m <= 8; ++m) ps.push_back(polygon(m));
  SimplePolytope t = simplex(3);
  for (int i = 0; i < 3; ++i) {
    t = truncate_vertex(t, 0);
    ps.push_back(t);
  }
  for (const auto& p : ps) {
    CAPTURE(p.num_facets());
    const bool brute = !oracle::all_charfuncs(p).empty();
    const auto with = exists_small_cover(p);
    const auto without = exists_small_cover(p, {.pigeonhole_shortcut = false});
    CHECK(with.exists() == brute);
    CHECK(without.exists() == brute);
    if (with.exists()) CHECK(validate_charfunc(p, *with.witness).valid());
  }
}

TEST_CASE("existence search is independent of thread count") {
  for (const auto& p : {dual_cyclic(7, 4), cube(4), product(polygon(5), simplex(2))}) {
    const auto a = exists_small_cover(p, {.threads = 1});
    const auto b = exists_small_cover(p, {.threads = 4});
    CHECK(a.exists() == b.exists());
    if (a.exists() && b.exists()) CHECK(*a.witness == *b.witness);
  }
}

TEST_CASE("enumeration counts") {
  const auto s_raw = enumerate_charfuncs(simplex(2), EnumerationMode::Raw);
  const auto s_gl = enumerate_charfuncs(simplex(2), EnumerationMode::ModuloGL);
  CHECK(s_raw.count == 6);
  CHECK(s_gl.count == 1);
  CHECK(enumerate_charfuncs(cube(2), EnumerationMode::Raw).count == 18);
  CHECK(enumerate_charfuncs(cube(2), EnumerationMode::ModuloGL).count == 3);
  CHECK(enumerate_charfuncs(simplex(1), EnumerationMode::Raw).count == 1);
  CHECK(enumerate_charfuncs(simplex(1), EnumerationMode::ModuloGL).count == 1);
  CHECK(s_gl.representatives.front().columns() == std::vector<GF2Vector>{1, 2, 3});
  CHECK_THROWS_AS(enumerate_charfuncs(cube(5), EnumerationMode::ModuloGL), Error);
}

TEST_CASE("enumeration matches the determinant brute force") {
  for (const auto& p : {simplex(2), simplex(3), cube(2), cube(3), polygon(5), polygon(6),
                        product(simplex(2), simplex(1))}) {
    const auto all = oracle::all_charfuncs(p);
    const auto raw = enumerate_charfuncs(p, EnumerationMode::Raw);
    REQUIRE(raw.count == static_cast<long long>(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(raw.representatives[i].columns() == all[i]);
    const auto gl = enumerate_charfuncs(p, EnumerationMode::ModuloGL);
    CHECK(gl.count == static_cast<long long>(oracle::gl_orbits(all, p.dim())));
    // GL acts freely: each orbit has |GL(n,2)| members.
    CHECK(raw.count == gl.count * static_cast<long long>(general_linear_group(p.dim()).size()));
    CHECK(std::is_sorted(gl.representatives.begin(), gl.representatives.end()));
  }
}

TEST_CASE("enumeration is independent of thread count") {
  const auto a = enumerate_charfuncs(cube(3), EnumerationMode::ModuloGL, {.threads = 1});
  const auto b = enumerate_charfuncs(cube(3), EnumerationMode::ModuloGL, {.threads = 3});
  CHECK(a.count == b.count);
  CHECK(a.representatives == b.representatives);
}

TEST_CASE("bott_charfunc") {
  BottMatrix zero{3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
  const auto [c3, torus] = bott_charfunc(zero);
  CHECK(torus.columns() == std::vector<GF2Vector>{e1, e1, e2, e2, e3, e3});

  BottMatrix klein{2, {{0, 1}, {0, 0}}};
  const auto [c2, kl] = bott_charfunc(klein);
  // (F_1, G_1, F_2, G_2) = (e1, e1, e2, e1+e2)
  CHECK(kl.columns() == std::vector<GF2Vector>{e1, e1, e2, e1 | e2});
  CHECK(validate_charfunc(c2, kl).valid());

  BottMatrix lower{2, {{0, 0}, {1, 0}}};
  try {
    bott_charfunc(lower);
    FAIL("expected NotUpperTriangular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUpperTriangular);
  }
}

TEST_CASE("random Bott matrices give valid functions, also after GL change of basis") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    BottMatrix a{n, std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0))};
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(rng() & 1U);
    }
    const auto [p, lambda] = bott_charfunc(a);
    CHECK(validate_charfunc(p, lambda).valid());
    if (n <= 4) CHECK(validate_charfunc(p, compose(random_gl(rng, n), lambda)).valid());
  }
}

TEST_CASE("generalized_bott_charfunc") {
  const auto [tri, rp2] = generalized_bott_charfunc({2});
  CHECK(tri == simplex(2));
  CHECK(rp2.columns() == std::vector<GF2Vector>{e1, e2, e1 | e2});

  const auto [c3, l3] = generalized_bott_charfunc({1, 1, 1});
  CHECK(is_isomorphic(c3, cube(3)));
  CHECK(l3 == bott_charfunc(BottMatrix{3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).second);

  const auto [prism, lp] = generalized_bott_charfunc({2, 1});
  CHECK(prism.num_facets() == 5);
  CHECK(lp.target_rank() == 3);
  CHECK(validate_charfunc(prism, lp).valid());

  CHECK_THROWS_AS(generalized_bott_charfunc({}), Error);
  CHECK_THROWS_AS(generalized_bott_charfunc({2, 0}), Error);
}

TEST_CASE("every witness is valid") {
  for (const auto& p : {dual_cyclic(6, 4), dual_cyclic(7, 4), dual_cyclic(8, 4), polygon(9),
                        product(cube(2), simplex(3))}) {
    const auto s = exists_small_cover(p);
    if (s.exists()) CHECK(validate_charfunc(p, *s.witness).valid());
  }
}
