#include "smallcover/classify.hpp"

#include <string>

#include "smallcover/error.hpp"
#include "smallcover/nerve.hpp"

namespace smallcover {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::Inconsistent, what);
}

std::optional<BettiVector> try_betti(const SimplePolytope& p, const CharFunc& lambda,
                                     std::size_t guard, std::string& note) {
  const std::size_t cells = predicted_cell_count(p, lambda.target_rank());
  if (cells > guard) {
    note = "skipped: " + std::to_string(cells) + " cells exceed guard " + std::to_string(guard);
    return std::nullopt;
  }
  return z2_betti(build_complex(p, lambda, guard));
}

void check_consistency(const ClassificationReport& rep) {
  const auto& f = rep.flags;
  const int n = rep.polytope.n;
  const int r = rep.polytope.r;
  if (f.is_cube) {
    require(f.is_flag && r == 2 * n && rep.moment_angle.aspherical && rep.moment_angle.is_torus,
            "cube must be flag with 2n facets, aspherical RZ torus");
  }
  require(f.is_cube == (f.is_flag && r <= 2 * n), "cube differs from flag with <= 2n facets");
  if (rep.small_cover.source != ClassificationReport::SmallCover::Source::None) {
    require(rep.small_cover.is_real_bott == f.is_cube, "real Bott verdict differs from cube test");
    if (rep.small_cover.betti) {
      require(rep.small_cover.betti->b.at(1) == r - n, "small cover b1 differs from r - n");
    }
  }

  const bool finite = std::holds_alternative<FiniteGroup>(rep.group.coxeter_group);
  const bool nilpotent = std::holds_alternative<VirtuallyNilpotentGroup>(rep.group.coxeter_group);
  require(finite == f.is_two_neighborly, "finite Coxeter group differs from 2-neighborly");
  require(finite == (rep.group.gram == Definiteness::PositiveDefinite),
          "finite Coxeter group differs from positive-definite form");
  require(nilpotent == (rep.group.gram == Definiteness::PositiveSemidefiniteDegenerate),
          "virtually nilpotent group differs from degenerate semidefinite form");

  if (f.is_two_neighborly) {
    require(!rep.obstructions.positive_ricci_obstructed, "2-neighborly yet Ricci obstructed");
    if (rep.moment_angle.betti) require(rep.moment_angle.betti->b.at(1) == 0, "2-neighborly with b1(RZ) != 0");
  }
  if (const auto* fa = std::get_if<Pi1FreeAbelian>(&rep.group.pi1_rz)) {
    require(2 * fa->l <= r, "free abelian rank exceeds r/2");
  }
  const bool virtually_nilpotent_pi1 =
      !std::holds_alternative<Pi1NotVirtuallyNilpotent>(rep.group.pi1_rz);
  if (rep.moment_angle.aspherical && virtually_nilpotent_pi1) {
    require(f.is_cube, "aspherical with virtually solvable pi1 but not a cube");
  }
}

}  // namespace

ClassificationReport classify(const SimplePolytope& p, const std::optional<CharFunc>& lambda,
                              const ClassifyOptions& opts) {
  ClassificationReport rep;
  const int n = p.dim();
  const int r = p.num_facets();
  rep.polytope = {n, r, f_and_h_vector(p)};

  auto& flags = rep.flags;
  flags.is_flag = is_flag(p);
  flags.is_two_neighborly = is_two_neighborly(p);
  flags.is_cube = is_cube(p);
  flags.is_simplex = is_simplex(p);

  rep.group.coxeter_group = classify_group(p);
  rep.group.gram = gram_definiteness(p).definiteness;
  rep.group.pi1_rz = pi1_rz_description(p);

  auto& ma = rep.moment_angle;
  ma.aspherical = flags.is_flag;
  ma.simply_connected = flags.is_two_neighborly;
  ma.is_torus = flags.is_cube;
  ma.spherical_candidate = flags.is_simplex;
  if (opts.compute_homology) ma.betti = try_betti(p, lambda0(p), opts.cell_guard, ma.homology_note);

  auto& sc = rep.small_cover;
  if (lambda) {
    const CharFuncCheck check = validate_charfunc(p, *lambda);
    if (!check.valid()) {
      throw Error(ErrorCode::InvalidCharFunc,
                  "not a basis at vertex " + std::to_string(*check.failing_vertex));
    }
    sc.source = ClassificationReport::SmallCover::Source::Supplied;
    sc.lambda = lambda;
  } else {
    SearchOptions so;
    so.threads = opts.threads;
    SmallCoverSearch found = exists_small_cover(p, so);
    if (found.exists()) {
      sc.source = ClassificationReport::SmallCover::Source::Found;
      sc.lambda = std::move(found.witness);
    } else {
      sc.none_reason = found.reason;
    }
  }
  if (sc.lambda) {
    sc.b1 = r - n;
    sc.pi1_finite = flags.is_two_neighborly;
    if (sc.pi1_finite) sc.pi1_z2_rank = r - n;
    sc.aspherical = flags.is_flag;
    sc.is_real_bott = flags.is_cube;
    if (opts.compute_homology) sc.betti = try_betti(p, *sc.lambda, opts.cell_guard, sc.homology_note);
  }

  auto& ob = rep.obstructions;
  ob.positive_ricci_obstructed = !flags.is_two_neighborly;
  ob.positive_ricci_reason =
      flags.is_two_neighborly
          ? "not obstructed: P is 2-neighborly, pi1(RZ) is trivial"
          : "Bonnet-Myers: positive Ricci curvature forces finite pi1, which requires P "
            "2-neighborly";
  if (n >= 2) {
    for (const auto& [face, gons] : two_face_census(p)) {
      if (gons == 3 || gons == 4) ob.negative_curvature_offenders.emplace_back(face, gons);
    }
  }
  ob.nonneg_ricci_obstructed = std::holds_alternative<Pi1NotVirtuallyNilpotent>(rep.group.pi1_rz);
  ob.nonneg_ricci_pi1_constraint =
      "pi1(RZ) must be Z^l with l <= " + std::to_string(r / 2) + "; computed: " +
      describe(rep.group.pi1_rz) + (ob.nonneg_ricci_obstructed ? " (obstructed)" : " (compatible)");

  check_consistency(rep);
  return rep;
}

RealBottAudit audit_real_bott(const SimplePolytope& p, const ClassifyOptions& opts) {
  RealBottAudit audit;
  const bool flag = is_flag(p);
  audit.flag_and_at_most_2n_facets = flag && p.num_facets() <= 2 * p.dim();
  audit.cube = is_cube(p);
  SearchOptions so;
  so.threads = opts.threads;
  const SmallCoverSearch search = exists_small_cover(p, so);
  if (search.exists() && predicted_cell_count(p, p.dim()) <= opts.cell_guard) {
    const BettiVector betti = z2_betti(build_complex(p, *search.witness, opts.cell_guard));
    audit.b1 = betti.b.at(1);
    audit.aspherical_and_small_b1 = flag && *audit.b1 <= p.dim();
  }
  return audit;
}

bool real_bott_equivalence_audit(const SimplePolytope& p, const ClassifyOptions& opts) {
  return audit_real_bott(p, opts).agree();
}

}  // namespace smallcover
