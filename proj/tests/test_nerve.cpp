#include "doctest.h"
#include "oracles.hpp"
#include "smallcover/nerve.hpp"
#include "smallcover/polytope.hpp"

using namespace smallcover;

namespace {

std::vector<SimplePolytope> corpus() {
  std::vector<SimplePolytope> out = {simplex(2), simplex(3), simplex(4), cube(2), cube(3), cube(4),
                                     product(simplex(2), simplex(1)), product(simplex(2), simplex(2)),
                                     dual_cyclic(6, 4), dual_cyclic(8, 4), product(polygon(5), simplex(1)),
                                     product(polygon(6), polygon(4))};
  for (int m = 3; m <= 10; ++m) out.push_back(polygon(m));
  SimplePolytope t = simplex(3);
  for (int i = 0; i < 4; ++i) {
    t = truncate_vertex(t, i);
    out.push_back(t);
  }
  return out;
}

FacetMask pair(int a, int b) { return (FacetMask{1} << a) | (FacetMask{1} << b); }

}  // namespace

TEST_CASE("adjacency") {
  const auto s = adjacency(simplex(3));
  CHECK(s.is_complete());
  const auto sq = adjacency(polygon(4));
  CHECK(sq(0, 1));
  CHECK(sq(0, 3));
  CHECK_FALSE(sq(0, 2));
  CHECK_FALSE(sq(1, 3));
  const auto c = adjacency(cube(3));
  for (int i = 0; i < 6; ++i) {
    CHECK(c(i, i));
    for (int j = 0; j < 6; ++j) CHECK(c(i, j) == (i / 2 != j / 2 || i == j));
  }
}

TEST_CASE("two-neighborly") {
  CHECK(is_two_neighborly(simplex(3)));
  CHECK_FALSE(is_two_neighborly(cube(2)));
  CHECK(is_two_neighborly(dual_cyclic(7, 4)));
  CHECK(is_two_neighborly(product(simplex(2), simplex(3))));
  CHECK_FALSE(is_two_neighborly(product(simplex(2), simplex(1))));
}

TEST_CASE("minimal non-faces") {
  CHECK(minimal_non_faces(polygon(4)) == std::vector<FacetMask>{pair(0, 2), pair(1, 3)});
  CHECK(minimal_non_faces(simplex(2)) == std::vector<FacetMask>{0b111});
  CHECK(minimal_non_faces(cube(3)) == std::vector<FacetMask>{pair(0, 1), pair(2, 3), pair(4, 5)});
  for (const auto& p : corpus()) {
    CAPTURE(p.num_facets());
    const auto mnf = minimal_non_faces(p);
    CHECK(mnf == oracle::minimal_non_faces(p));
    for (FacetMask s : mnf) {
      CHECK(popcount(s) >= 2);
      CHECK(popcount(s) <= p.dim() + 1);
    }
  }
}

TEST_CASE("flag") {
  CHECK_FALSE(is_flag(polygon(3)));
  for (int m = 4; m <= 10; ++m) CHECK(is_flag(polygon(m)));
  for (int n = 2; n <= 5; ++n) CHECK_FALSE(is_flag(simplex(n)));
  for (int n = 1; n <= 5; ++n) CHECK(is_flag(cube(n)));
  CHECK_FALSE(is_flag(product(simplex(2), simplex(1))));
}

TEST_CASE("cube recognition") {
  CHECK(is_cube(cube(3)));
  CHECK(is_cube(polygon(4)));
  CHECK_FALSE(is_cube(product(simplex(2), simplex(1))));
  CHECK(is_cube(product(polygon(4), polygon(4))));
  CHECK_FALSE(is_cube(polygon(6)));
}

TEST_CASE("nerve invariants on the corpus") {
  for (const auto& p : corpus()) {
    const bool flag = is_flag(p);
    const int n = p.dim(), r = p.num_facets();
    CHECK((flag && r == 2 * n) == is_cube(p));
    if (flag) {
      CHECK(r >= 2 * n);
      if (n >= 2) {
        for (int i = 0; i < r; ++i) CHECK(is_flag(facet_polytope(p, i)));
      }
    }
    if (is_two_neighborly(p)) {
      for (FacetMask s : minimal_non_faces(p)) CHECK(popcount(s) >= 3);
    }
    if (is_cube(p) && n >= 2) {
      for (const auto& [f, g] : two_face_census(p)) CHECK(g == 4);
    }
  }
}
