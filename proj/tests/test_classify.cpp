#include "doctest.h"
#include "smallcover/classify.hpp"
#include "smallcover/error.hpp"
#include "smallcover/io.hpp"
#include "smallcover/nerve.hpp"

using namespace smallcover;

namespace {

ClassifyOptions with_homology() {
  ClassifyOptions o;
  o.compute_homology = true;
  return o;
}

}  // namespace

TEST_CASE("cube(3) with the torus Bott function") {
  const auto [p, lambda] = bott_charfunc(BottMatrix{3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}});
  const auto rep = classify(p, lambda, with_homology());
  CHECK(rep.moment_angle.aspherical);
  CHECK(rep.moment_angle.is_torus);
  CHECK(rep.small_cover.is_real_bott);
  CHECK(rep.small_cover.source == ClassificationReport::SmallCover::Source::Supplied);
  CHECK(rep.obstructions.negative_curvature_offenders.size() == 6);
  for (const auto& [f, g] : rep.obstructions.negative_curvature_offenders) CHECK(g == 4);
  REQUIRE(rep.moment_angle.betti);
  CHECK(rep.moment_angle.betti->b == std::vector<long long>{1, 3, 3, 1});
  REQUIRE(rep.small_cover.betti);
  CHECK(rep.small_cover.betti->b == std::vector<long long>{1, 3, 3, 1});
}

TEST_CASE("simplex(3)") {
  const auto rep = classify(simplex(3), std::nullopt, with_homology());
  CHECK(rep.moment_angle.simply_connected);
  CHECK(rep.moment_angle.spherical_candidate);
  CHECK_FALSE(rep.obstructions.positive_ricci_obstructed);
  CHECK(rep.small_cover.source == ClassificationReport::SmallCover::Source::Found);
  CHECK(rep.small_cover.pi1_finite);
  REQUIRE(rep.small_cover.pi1_z2_rank);
  CHECK(*rep.small_cover.pi1_z2_rank == 1);
  CHECK(rep.small_cover.betti->b == std::vector<long long>{1, 1, 1, 1});
  CHECK(rep.moment_angle.betti->b == std::vector<long long>{1, 0, 0, 1});
  CHECK(rep.obstructions.negative_curvature_offenders.size() == 4);
}

TEST_CASE("polygon(5)") {
  const auto rep = classify(polygon(5), std::nullopt, with_homology());
  CHECK(rep.moment_angle.aspherical);
  CHECK_FALSE(rep.small_cover.is_real_bott);
  CHECK(std::holds_alternative<Pi1NotVirtuallyNilpotent>(rep.group.pi1_rz));
  CHECK(rep.obstructions.negative_curvature_offenders.empty());
  CHECK(rep.obstructions.nonneg_ricci_obstructed);
  CHECK(rep.obstructions.positive_ricci_obstructed);
  CHECK(rep.moment_angle.betti->b == std::vector<long long>{1, 10, 1});
}

TEST_CASE("no small cover") {
  const auto rep = classify(dual_cyclic(16, 4), std::nullopt);
  CHECK(rep.small_cover.source == ClassificationReport::SmallCover::Source::None);
  CHECK(rep.small_cover.none_reason == NoSmallCoverReason::Pigeonhole);
  CHECK(rep.moment_angle.simply_connected);
}

TEST_CASE("homology above the guard is skipped with a note") {
  ClassifyOptions o = with_homology();
  o.cell_guard = 10;
  const auto rep = classify(cube(3), std::nullopt, o);
  CHECK_FALSE(rep.moment_angle.betti);
  CHECK_FALSE(rep.moment_angle.homology_note.empty());
}

TEST_CASE("invalid supplied function is rejected") {
  CHECK_THROWS_AS(classify(simplex(2), CharFunc(2, {1, 2, 1}), {}), Error);
}

TEST_CASE("report invariants across a corpus") {
  std::vector<SimplePolytope> ps = {simplex(2), simplex(3), cube(2), cube(3), cube(4),
                                    product(simplex(2), simplex(1)), dual_cyclic(6, 4),
                                    dual_cyclic(7, 4), product(polygon(4), simplex(2))};
  for (int m = 3; m <= 8; ++m) ps.push_back(polygon(m));
  for (const auto& p : ps) {
    const auto rep = classify(p, std::nullopt, with_homology());
    const int r = p.num_facets(), n = p.dim();
    if (rep.flags.is_cube) {
      CHECK(rep.flags.is_flag);
      CHECK(r == 2 * n);
      CHECK(rep.moment_angle.aspherical);
      CHECK(rep.moment_angle.is_torus);
      CHECK(rep.small_cover.is_real_bott);
    }
    if (rep.flags.is_two_neighborly) {
      CHECK_FALSE(rep.obstructions.positive_ricci_obstructed);
      CHECK(rep.moment_angle.betti->b[1] == 0);
    }
    if (const auto* fa = std::get_if<Pi1FreeAbelian>(&rep.group.pi1_rz)) CHECK(2 * fa->l <= r);
    if (rep.small_cover.betti) CHECK(rep.small_cover.betti->b[1] == r - n);
    CHECK(real_bott_equivalence_audit(p));
  }
}

TEST_CASE("real Bott audit details") {
  const auto c4 = audit_real_bott(cube(4));
  CHECK(c4.cube);
  CHECK(c4.flag_and_at_most_2n_facets);
  REQUIRE(c4.aspherical_and_small_b1);
  CHECK(*c4.aspherical_and_small_b1);
  CHECK(c4.agree());

  const auto prism = audit_real_bott(product(simplex(2), simplex(1)));
  CHECK_FALSE(prism.cube);
  CHECK_FALSE(prism.flag_and_at_most_2n_facets);
  REQUIRE(prism.aspherical_and_small_b1);
  CHECK_FALSE(*prism.aspherical_and_small_b1);

  const auto hex = audit_real_bott(polygon(6));
  CHECK_FALSE(hex.cube);
  REQUIRE(hex.b1);
  CHECK(*hex.b1 == 4);
  CHECK(hex.agree());
}

TEST_CASE("report serialization is stable") {
  const auto rep = classify(cube(3), std::nullopt, with_homology());
  const std::string a = io::to_json(rep).dump();
  const std::string b = io::to_json(classify(cube(3), std::nullopt, with_homology())).dump();
  CHECK(a == b);
  CHECK(a.find("\"v\":1") == 1);
}
