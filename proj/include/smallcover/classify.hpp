#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smallcover/charfunc.hpp"
#include "smallcover/coxeter.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/zhomology.hpp"

namespace smallcover {

struct ClassifyOptions {
  bool compute_homology = false;
  std::size_t cell_guard = kDefaultCellGuard;
  int threads = 1;
};

struct ClassificationReport {
  struct Summary {
    int n = 0;
    int r = 0;
    FVector fh;
  } polytope;

  struct Flags {
    bool is_flag = false;
    bool is_two_neighborly = false;
    bool is_cube = false;
    bool is_simplex = false;
  } flags;

  struct Group {
    GroupClass coxeter_group;
    Definiteness gram = Definiteness::Indefinite;
    Pi1Description pi1_rz;
  } group;

  struct MomentAngle {
    bool aspherical = false;
    bool simply_connected = false;
    bool is_torus = false;
    bool spherical_candidate = false;
    std::optional<BettiVector> betti;
    std::string homology_note;  // set when homology was requested but skipped
  } moment_angle;

  struct SmallCover {
    enum class Source { Supplied, Found, None } source = Source::None;
    std::optional<CharFunc> lambda;
    NoSmallCoverReason none_reason = NoSmallCoverReason::Exhausted;
    int b1 = 0;  // r - n
    bool pi1_finite = false;
    /// pi_1 ≅ (Z_2)^{r-n} when finite.
    std::optional<int> pi1_z2_rank;
    bool aspherical = false;
    bool is_real_bott = false;
    std::optional<BettiVector> betti;
    std::string homology_note;
  } small_cover;

  struct Obstructions {
    bool positive_ricci_obstructed = false;
    std::string positive_ricci_reason;
    /// 2-faces that are 3-gons or 4-gons.
    std::vector<std::pair<Face, int>> negative_curvature_offenders;
    bool nonneg_ricci_obstructed = false;
    std::string nonneg_ricci_pi1_constraint;
  } obstructions;
};

/// Runs every analysis and checks the report for internal consistency
/// (throws Inconsistent otherwise). Without `lambda` a small cover is searched
/// for.
ClassificationReport classify(const SimplePolytope& p, const std::optional<CharFunc>& lambda,
                              const ClassifyOptions& opts = {});

struct RealBottAudit {
  bool flag_and_at_most_2n_facets = false;
  bool cube = false;
  /// Aspherical with b_1(M; Z_2) <= n, b_1 from the homology oracle. Absent if
  /// no small cover exists or the complex is too large.
  std::optional<bool> aspherical_and_small_b1;
  std::optional<long long> b1;
  [[nodiscard]] bool agree() const noexcept {
    return flag_and_at_most_2n_facets == cube &&
           (!aspherical_and_small_b1 || *aspherical_and_small_b1 == cube);
  }
};

RealBottAudit audit_real_bott(const SimplePolytope& p, const ClassifyOptions& opts = {});

/// True iff the three real-Bott characterizations agree on P.
bool real_bott_equivalence_audit(const SimplePolytope& p, const ClassifyOptions& opts = {});

}  // namespace smallcover
