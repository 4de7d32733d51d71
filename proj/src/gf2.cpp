#include "smallcover/gf2.hpp"

#include <bit>
#include <string>

#include "smallcover/error.hpp"

namespace smallcover {

bool EchelonBasis::insert(GF2Vector v) {
  v = reduce(v);
  if (v == 0) return false;
  const GF2Vector pivot = v & -v;
  for (GF2Vector& b : basis_) {
    if (b & pivot) b ^= v;
  }
  basis_.push_back(v);
  pivot_of_.push_back(pivot);
  pivots_ |= pivot;
  return true;
}

GF2Vector EchelonBasis::reduce(GF2Vector v) const noexcept {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v & pivot_of_[i]) v ^= basis_[i];
  }
  return v;
}

int gf2_rank(std::span<const GF2Vector> vectors) {
  // Basis indexed by leading bit.
  GF2Vector lead[64] = {};
  int rank = 0;
  for (GF2Vector v : vectors) {
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (lead[top] == 0) {
        lead[top] = v;
        ++rank;
        break;
      }
      v ^= lead[top];
    }
  }
  return rank;
}

GF2Matrix::GF2Matrix(int rows, std::vector<GF2Vector> columns)
    : rows_(rows), columns_(std::move(columns)) {
  if (rows < 0 || rows > 64) throw Error(ErrorCode::WrongShape, "GF2Matrix supports at most 64 rows");
  const GF2Vector allowed = rows == 64 ? ~GF2Vector{0} : (GF2Vector{1} << rows) - 1;
  for (GF2Vector c : columns_) {
    if ((c & ~allowed) != 0) {
      throw Error(ErrorCode::WrongShape, "column has bits beyond row " + std::to_string(rows));
    }
  }
}

bool GF2Matrix::columns_invertible(std::span<const int> cols) const {
  if (static_cast<int>(cols.size()) != rows_) return false;
  GF2Vector picked[64];
  for (std::size_t i = 0; i < cols.size(); ++i) picked[i] = column(cols[i]);
  return gf2_rank(std::span<const GF2Vector>(picked, cols.size())) == rows_;
}

GF2Vector GF2Matrix::apply(GF2Vector x) const noexcept {
  GF2Vector out = 0;
  for (std::size_t c = 0; c < columns_.size() && x != 0; ++c, x >>= 1) {
    if (x & 1U) out ^= columns_[c];
  }
  return out;
}

std::vector<std::vector<GF2Vector>> general_linear_group(int n) {
  if (n < 1 || n > 4) throw Error(ErrorCode::TooLarge, "GL(n,2) enumeration supports 1 <= n <= 4");
  std::vector<std::vector<GF2Vector>> out;
  const std::uint32_t total = 1U << (n * n);
  const GF2Vector col_mask = (GF2Vector{1} << n) - 1;
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    std::vector<GF2Vector> cols(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) cols[static_cast<std::size_t>(c)] = (bits >> (c * n)) & col_mask;
    if (gf2_rank(cols) == n) out.push_back(std::move(cols));
  }
  return out;
}

}  // namespace smallcover
