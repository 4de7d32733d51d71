#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "smallcover/error.hpp"
#include "smallcover/nerve.hpp"
#include "smallcover/polytope.hpp"

using namespace smallcover;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

std::vector<SimplePolytope> corpus() {
  return {simplex(1), simplex(2), simplex(3), simplex(4), cube(2), cube(3), cube(4),
          polygon(5), polygon(7), product(simplex(2), simplex(1)), dual_cyclic(6, 4),
          dual_cyclic(7, 4), product(polygon(5), simplex(1))};
}

}  // namespace

TEST_CASE("validate accepts simplices and cubes") {
  const auto tri = validate(2, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.num_facets() == 3);
  CHECK(tri.vertices().size() == 3);

  std::vector<std::vector<int>> verts;
  for (int a : {0, 1}) {
    for (int b : {2, 3}) {
      for (int c : {4, 5}) verts.push_back({a, b, c});
    }
  }
  const auto c3 = validate(3, verts);
  CHECK(c3.num_facets() == 6);
  CHECK(is_isomorphic(c3, cube(3)));
}

TEST_CASE("validate error paths") {
  using V = std::vector<std::vector<int>>;
  CHECK(code_of([] { validate(2, V{{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }) == ErrorCode::BadRidge);
  CHECK(code_of([] { validate(2, V{{0, 1}, {1, 2}, {0, 1, 2}}); }) == ErrorCode::NotSimple);
  CHECK(code_of([] { validate(2, V{{0, 1}, {1, 2}, {0, 2}}, 4); }) == ErrorCode::DanglingFacet);
  CHECK(code_of([] { validate(2, V{{0, 1}, {0, 1}}); }) == ErrorCode::TooSmall);
  CHECK(code_of([] { validate(2, V{{0, 0}, {1, 2}, {0, 2}}); }) == ErrorCode::NotSimple);
  CHECK(code_of([] { validate(2, V{{0, -1}, {1, 2}, {0, 2}}); }) == ErrorCode::BadIndex);
}

TEST_CASE("constructors") {
  CHECK(simplex(2).num_facets() == 3);
  CHECK(simplex(2).vertices().size() == 3);
  const auto dc = dual_cyclic(7, 4);
  CHECK(dc.num_facets() == 7);
  CHECK(is_two_neighborly(dc));
  // C(7,4) has 7*(7-3)/2 = 14 facets.
  CHECK(dc.vertices().size() == 14);
  CHECK(is_isomorphic(dual_cyclic(5, 4), simplex(4)));

  const auto sq_seg = product(polygon(4), simplex(1));
  CHECK(sq_seg.dim() == 3);
  CHECK(sq_seg.num_facets() == 6);
  CHECK(is_cube(sq_seg));
  CHECK(is_isomorphic(sq_seg, cube(3)));

  CHECK(code_of([] { simplex(0); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { polygon(2); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { dual_cyclic(4, 4); }) == ErrorCode::BadParameter);
}

TEST_CASE("faces_of_dim") {
  CHECK(faces_of_dim(cube(3), 1).size() == 12);
  CHECK(faces_of_dim(simplex(3), 1).size() == 6);
  CHECK(faces_of_dim(simplex(3), 2).size() == 4);
  CHECK(faces_of_dim(polygon(5), 0).size() == 5);
  const auto top = faces_of_dim(cube(3), 3);
  REQUIRE(top.size() == 1);
  CHECK(top[0].facets == 0);
  CHECK(code_of([] { faces_of_dim(cube(3), 4); }) == ErrorCode::BadDimension);
  CHECK(code_of([] { faces_of_dim(cube(3), -1); }) == ErrorCode::BadDimension);
}

TEST_CASE("f and h vectors match subset enumeration") {
  for (const auto& p : corpus()) {
    const FVector fv = f_and_h_vector(p);
    CHECK(fv.f == oracle::f_vector(p));
    CHECK(fv.h.front() == 1);
    CHECK(fv.f.back() == 1);
  }
  for (int n = 1; n <= 5; ++n) {
    CHECK(f_and_h_vector(simplex(n)).h == std::vector<long long>(static_cast<std::size_t>(n + 1), 1));
  }
  for (int m = 3; m <= 9; ++m) {
    const FVector fv = f_and_h_vector(polygon(m));
    CHECK(fv.f == std::vector<long long>{m, m, 1});
    CHECK(fv.h == std::vector<long long>{1, m - 2, 1});
  }
  const FVector c3 = f_and_h_vector(cube(3));
  CHECK(c3.f == std::vector<long long>{8, 12, 6, 1});
  CHECK(c3.h == std::vector<long long>{1, 3, 3, 1});
}

TEST_CASE("Euler relation and face-list invariants on the corpus") {
  for (const auto& p : corpus()) {
    const int n = p.dim();
    const FVector fv = f_and_h_vector(p);
    long long alt = 0;
    for (int d = 0; d < n; ++d) alt += (d % 2 == 0 ? 1 : -1) * fv.f[static_cast<std::size_t>(d)];
    CHECK(alt == 1 - (n % 2 == 0 ? 1 : -1));
    // h is palindromic (Dehn-Sommerville).
    CHECK(std::equal(fv.h.begin(), fv.h.end(), fv.h.rbegin()));

    const auto facets = faces_of_dim(p, n - 1);
    CHECK(static_cast<int>(facets.size()) == p.num_facets());
    for (const auto& f : facets) CHECK(popcount(f.facets) == 1);
    auto verts = p.vertices();
    std::sort(verts.begin(), verts.end());
    std::vector<FacetMask> listed;
    for (const auto& f : faces_of_dim(p, 0)) listed.push_back(f.facets);
    CHECK(listed == verts);
  }
}

TEST_CASE("two_face_census") {
  const auto c = two_face_census(cube(3));
  CHECK(c.size() == 6);
  for (const auto& [f, g] : c) CHECK(g == 4);

  const auto h = two_face_census(polygon(7));
  REQUIRE(h.size() == 1);
  CHECK(h[0].second == 7);

  int tri = 0, quad = 0;
  for (const auto& [f, g] : two_face_census(product(simplex(2), simplex(1)))) {
    tri += g == 3;
    quad += g == 4;
  }
  CHECK(tri == 2);
  CHECK(quad == 3);
}

TEST_CASE("facet_polytope") {
  for (int i = 0; i < 6; ++i) CHECK(is_isomorphic(facet_polytope(cube(3), i), cube(2)));
  for (int i = 0; i < 4; ++i) CHECK(is_isomorphic(facet_polytope(simplex(3), i), simplex(2)));
  const auto prism = product(simplex(2), simplex(1));
  int squares = 0;
  for (int i = 0; i < prism.num_facets(); ++i) {
    const auto f = facet_polytope(prism, i);
    if (f.num_facets() == 4) {
      ++squares;
      CHECK(is_isomorphic(f, polygon(4)));
    }
  }
  CHECK(squares == 3);
  CHECK(code_of([] { facet_polytope(cube(3), 6); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { facet_polytope(simplex(1), 0); }) == ErrorCode::DimensionTooLow);

  // Every facet of every corpus polytope is again a valid simple polytope.
  for (const auto& p : corpus()) {
    if (p.dim() < 2) continue;
    for (int i = 0; i < p.num_facets(); ++i) CHECK_NOTHROW(facet_polytope(p, i));
  }
}

TEST_CASE("product is associative up to relabeling") {
  const auto a = simplex(1), b = simplex(2), c = polygon(5);
  CHECK(is_isomorphic(product(product(a, b), c), product(a, product(b, c))));
  CHECK(is_isomorphic(product(a, b), product(b, a)));
  CHECK_FALSE(is_isomorphic(product(a, b), simplex(3)));
}

TEST_CASE("vertex truncation stays simple") {
  std::mt19937 rng(7);
  SimplePolytope p = simplex(3);
  for (int step = 0; step < 10; ++step) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(p.vertices().size()) - 1);
    p = truncate_vertex(p, pick(rng));
    CHECK(p.num_facets() == 5 + step);
    CHECK(p.vertices().size() == static_cast<std::size_t>(4 + 2 * (step + 1)));
  }
}
