#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

/// A map from facets to (Z_2)^t, one column per facet.
class CharFunc {
 public:
  CharFunc(int t, std::vector<GF2Vector> columns);

  [[nodiscard]] int target_rank() const noexcept { return t_; }
  [[nodiscard]] int num_facets() const noexcept { return static_cast<int>(columns_.size()); }
  [[nodiscard]] GF2Vector operator[](int facet) const noexcept {
    return columns_[static_cast<std::size_t>(facet)];
  }
  [[nodiscard]] const std::vector<GF2Vector>& columns() const noexcept { return columns_; }
  /// The t x r matrix of λ̄ : (Z_2)^r -> (Z_2)^t.
  [[nodiscard]] GF2Matrix matrix() const { return GF2Matrix(t_, columns_); }

  friend bool operator==(const CharFunc&, const CharFunc&) = default;
  /// Lexicographic on the column sequence (columns compared as integers).
  friend auto operator<=>(const CharFunc& a, const CharFunc& b) { return a.columns_ <=> b.columns_; }

 private:
  int t_;
  std::vector<GF2Vector> columns_;
};

struct CharFuncCheck {
  std::optional<int> failing_vertex;  // index into P.vertices()
  [[nodiscard]] bool valid() const noexcept { return !failing_vertex.has_value(); }
};

/// λ_0(F_i) = e_i in (Z_2)^r.
CharFunc lambda0(const SimplePolytope& p);

/// Small-cover condition: t = n and the columns at every vertex form a basis.
CharFuncCheck validate_charfunc(const SimplePolytope& p, const CharFunc& lambda);

/// Columns at every vertex are linearly independent (any t).
bool independent_at_vertices(const SimplePolytope& p, const CharFunc& lambda);

enum class NoSmallCoverReason { Pigeonhole, Exhausted };

struct SmallCoverSearch {
  std::optional<CharFunc> witness;
  NoSmallCoverReason reason = NoSmallCoverReason::Exhausted;  // meaningful when !witness

  [[nodiscard]] bool exists() const noexcept { return witness.has_value(); }
};

struct SearchOptions {
  bool pigeonhole_shortcut = true;
  int threads = 1;
};

SmallCoverSearch exists_small_cover(const SimplePolytope& p, const SearchOptions& opts = {});

enum class EnumerationMode { Raw, ModuloGL };

struct Enumeration {
  long long count = 0;
  /// Raw: every valid λ in lexicographic order. ModuloGL: the
  /// lexicographically least member of each orbit, sorted.
  std::vector<CharFunc> representatives;
};

struct EnumerationOptions {
  int threads = 1;
  long long max_solutions = 2'000'000;
};

Enumeration enumerate_charfuncs(const SimplePolytope& p, EnumerationMode mode,
                                const EnumerationOptions& opts = {});

/// Strictly upper-triangular n x n bit matrix describing a real Bott tower.
struct BottMatrix {
  int n = 0;
  std::vector<std::vector<int>> entries;
};

/// Over cube(n) with (F_j, G_j) = facets (2j, 2j+1):
/// λ(F_j) = e_j, λ(G_j) = e_j + Σ_{i<j} A_ij e_i.
std::pair<SimplePolytope, CharFunc> bott_charfunc(const BottMatrix& a);

/// Trivial generalized real Bott tower over Δ^{n_1} × ... × Δ^{n_m}.
std::pair<SimplePolytope, CharFunc> generalized_bott_charfunc(const std::vector<int>& dims);

/// g ∘ λ for g in GL(t, 2) given by its columns.
CharFunc compose(const std::vector<GF2Vector>& g, const CharFunc& lambda);

}  // namespace smallcover
