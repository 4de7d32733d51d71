#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace smallcover {

/// Vector in (Z_2)^t, t <= 64; bit i is the coordinate of e_{i+1}.
using GF2Vector = std::uint64_t;

/// Incrementally built reduced echelon basis of a subspace of (Z_2)^t. Each
/// basis vector owns one pivot bit that is clear in every other basis vector,
/// so `reduce` yields a canonical coset representative.
class EchelonBasis {
 public:
  /// Adds v; returns false (and leaves the basis unchanged) if v is already in
  /// the span.
  bool insert(GF2Vector v);

  [[nodiscard]] GF2Vector reduce(GF2Vector v) const noexcept;
  [[nodiscard]] bool contains(GF2Vector v) const noexcept { return reduce(v) == 0; }
  [[nodiscard]] int rank() const noexcept { return static_cast<int>(basis_.size()); }
  [[nodiscard]] GF2Vector pivot_mask() const noexcept { return pivots_; }

 private:
  std::vector<GF2Vector> basis_;
  std::vector<GF2Vector> pivot_of_;  // single-bit pivot of basis_[i]
  GF2Vector pivots_ = 0;
};

[[nodiscard]] int gf2_rank(std::span<const GF2Vector> vectors);

/// Dense rows x cols bit matrix stored by columns (rows <= 64).
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int rows, std::vector<GF2Vector> columns);

  [[nodiscard]] int rows() const noexcept { return rows_; }
  [[nodiscard]] int cols() const noexcept { return static_cast<int>(columns_.size()); }
  [[nodiscard]] bool operator()(int row, int col) const noexcept {
    return (columns_[static_cast<std::size_t>(col)] >> row & 1U) != 0;
  }
  [[nodiscard]] const std::vector<GF2Vector>& columns() const noexcept { return columns_; }
  [[nodiscard]] GF2Vector column(int c) const noexcept { return columns_[static_cast<std::size_t>(c)]; }

  [[nodiscard]] int rank() const { return gf2_rank(columns_); }
  /// True iff the listed columns form a square invertible submatrix.
  [[nodiscard]] bool columns_invertible(std::span<const int> cols) const;

  /// x -> M x for x in (Z_2)^cols.
  [[nodiscard]] GF2Vector apply(GF2Vector x) const noexcept;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  int rows_ = 0;
  std::vector<GF2Vector> columns_;
};

/// All invertible n x n matrices over GF(2), each as its n columns.
[[nodiscard]] std::vector<std::vector<GF2Vector>> general_linear_group(int n);

}  // namespace smallcover
