#pragma once

#include <vector>

#include "smallcover/polytope.hpp"

namespace smallcover {

/// Facet adjacency: (i, j) is set iff F_i ∩ F_j is nonempty. The diagonal is
/// set.
class AdjacencyGraph {
 public:
  explicit AdjacencyGraph(std::vector<FacetMask> rows) : rows_(std::move(rows)) {}

  [[nodiscard]] int size() const noexcept { return static_cast<int>(rows_.size()); }
  [[nodiscard]] bool operator()(int i, int j) const noexcept {
    return (rows_[static_cast<std::size_t>(i)] >> j & 1U) != 0;
  }
  /// Neighbours of i, including i.
  [[nodiscard]] FacetMask row(int i) const noexcept { return rows_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] bool is_complete() const noexcept;

 private:
  std::vector<FacetMask> rows_;
};

AdjacencyGraph adjacency(const SimplePolytope& p);

bool is_two_neighborly(const SimplePolytope& p);

/// Minimal non-faces of the dual simplicial complex, sorted by size then mask.
/// Sizes lie in [2, n+1].
std::vector<FacetMask> minimal_non_faces(const SimplePolytope& p);

bool is_flag(const SimplePolytope& p);

/// Combinatorial n-cube test via the opposite-facet pairing.
bool is_cube(const SimplePolytope& p);

/// n-simplex test: n+1 facets.
bool is_simplex(const SimplePolytope& p);

}  // namespace smallcover
