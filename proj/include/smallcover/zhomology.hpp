#pragma once

#include <cstddef>
#include <vector>

#include "smallcover/charfunc.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

/// A cell of P × (Z_2)^t / ~ : the face `face` (facet mask) times the coset
/// g + Λ_S, where Λ_S is spanned by the λ-values of the facets in S. `coset`
/// is the canonical representative reduced against Λ_S.
struct Cell {
  FacetMask face = 0;
  GF2Vector coset = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Sparse GF(2) matrix stored by columns; each column lists its nonzero rows in
/// increasing order.
using SparseColumns = std::vector<std::vector<int>>;

class QuotientComplex {
 public:
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  [[nodiscard]] int target_rank() const noexcept { return t_; }
  [[nodiscard]] const std::vector<Cell>& cells(int d) const { return cells_.at(static_cast<std::size_t>(d)); }
  [[nodiscard]] std::size_t cell_count(int d) const { return cells(d).size(); }
  [[nodiscard]] std::size_t total_cells() const noexcept;
  /// ∂_d : C_d -> C_{d-1}, one column per d-cell; d in [1, dim].
  [[nodiscard]] const SparseColumns& boundary(int d) const {
    return boundaries_.at(static_cast<std::size_t>(d));
  }

 private:
  friend QuotientComplex build_complex(const SimplePolytope&, const CharFunc&, std::size_t);
  int t_ = 0;
  std::vector<std::vector<Cell>> cells_;
  std::vector<SparseColumns> boundaries_;  // index 0 unused
};

inline constexpr std::size_t kDefaultCellGuard = std::size_t{1} << 20;

/// Builds the glued complex and verifies ∂∘∂ = 0. Throws RankDefect if some
/// Λ_S has rank below |S| and TooLarge past `cell_guard` cells.
QuotientComplex build_complex(const SimplePolytope& p, const CharFunc& lambda,
                              std::size_t cell_guard = kDefaultCellGuard);

/// Total cell count Σ_S 2^{t-|S|} without building.
std::size_t predicted_cell_count(const SimplePolytope& p, int t);

struct BettiVector {
  std::vector<long long> b;
  long long euler = 0;
};

/// Rank over GF(2) by column reduction.
std::size_t gf2_rank(SparseColumns columns);

BettiVector z2_betti(const QuotientComplex& c);

/// χ = Σ_d (-1)^d f_d 2^{t-n+d}.
long long euler_formula(const SimplePolytope& p, int t);

}  // namespace smallcover
