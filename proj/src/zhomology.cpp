#include "smallcover/zhomology.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "smallcover/error.hpp"

namespace smallcover {

std::size_t QuotientComplex::total_cells() const noexcept {
  std::size_t total = 0;
  for (const auto& c : cells_) total += c.size();
  return total;
}

std::size_t predicted_cell_count(const SimplePolytope& p, int t) {
  if (t < p.dim()) throw Error(ErrorCode::BadParameter, "t must be at least n");
  std::size_t total = 0;
  for (int d = 0; d <= p.dim(); ++d) {
    const int free_bits = t - (p.dim() - d);
    if (free_bits >= 63) return static_cast<std::size_t>(-1);
    const std::size_t per_face = std::size_t{1} << free_bits;
    const std::size_t faces = faces_of_dim(p, d).size();
    if (per_face != 0 && faces > static_cast<std::size_t>(-1) / per_face) return static_cast<std::size_t>(-1);
    total += faces * per_face;
  }
  return total;
}

namespace {

struct FaceData {
  FacetMask face = 0;
  EchelonBasis span;      // Λ_S
  GF2Vector free_bits = 0;  // non-pivot coordinates; cosets are indexed by them
  std::size_t offset = 0;   // index of the first cell of this face
};

// Packs the bits of x selected by mask into the low bits.
std::size_t compress(GF2Vector x, GF2Vector mask) {
  std::size_t out = 0;
  int k = 0;
  while (mask != 0) {
    const GF2Vector bit = mask & -mask;
    if (x & bit) out |= std::size_t{1} << k;
    ++k;
    mask &= mask - 1;
  }
  return out;
}

GF2Vector expand(std::size_t idx, GF2Vector mask) {
  GF2Vector out = 0;
  while (mask != 0) {
    const GF2Vector bit = mask & -mask;
    if (idx & 1U) out |= bit;
    idx >>= 1;
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

QuotientComplex build_complex(const SimplePolytope& p, const CharFunc& lambda,
                              std::size_t cell_guard) {
  const int n = p.dim();
  const int t = lambda.target_rank();
  if (lambda.num_facets() != p.num_facets()) {
    throw Error(ErrorCode::WrongShape, "characteristic function has " +
                                           std::to_string(lambda.num_facets()) + " columns for " +
                                           std::to_string(p.num_facets()) + " facets");
  }
  if (t < n) throw Error(ErrorCode::RankDefect, "target rank below dimension");
  const std::size_t predicted = predicted_cell_count(p, t);
  if (predicted > cell_guard) {
    throw Error(ErrorCode::TooLarge, std::to_string(predicted) + " cells exceed guard " +
                                         std::to_string(cell_guard));
  }

  const GF2Vector all_bits = t == 64 ? ~GF2Vector{0} : (GF2Vector{1} << t) - 1;
  QuotientComplex cx;
  cx.t_ = t;
  cx.cells_.resize(static_cast<std::size_t>(n + 1));
  cx.boundaries_.resize(static_cast<std::size_t>(n + 1));

  // faces[d] in sorted order with lookup by mask.
  std::vector<std::vector<FaceData>> faces(static_cast<std::size_t>(n + 1));
  std::vector<std::unordered_map<FacetMask, std::size_t>> lookup(static_cast<std::size_t>(n + 1));
  for (int d = 0; d <= n; ++d) {
    auto& layer = faces[static_cast<std::size_t>(d)];
    auto& cells = cx.cells_[static_cast<std::size_t>(d)];
    for (const Face& f : faces_of_dim(p, d)) {
      FaceData fd;
      fd.face = f.facets;
      for (int i : mask_indices(f.facets)) fd.span.insert(lambda[i]);
      if (fd.span.rank() != f.codim()) {
        throw Error(ErrorCode::RankDefect, "face with " + std::to_string(f.codim()) +
                                               " facets spans rank " +
                                               std::to_string(fd.span.rank()));
      }
      fd.free_bits = all_bits & ~fd.span.pivot_mask();
      fd.offset = cells.size();
      const std::size_t count = std::size_t{1} << std::popcount(fd.free_bits);
      for (std::size_t k = 0; k < count; ++k) cells.push_back(Cell{f.facets, expand(k, fd.free_bits)});
      lookup[static_cast<std::size_t>(d)].emplace(f.facets, layer.size());
      layer.push_back(std::move(fd));
    }
  }

  // ∂(S, g) = Σ_{j ∉ S, S ∪ {j} a face} (S ∪ {j}, g mod Λ_{S ∪ {j}}).
  for (int d = 1; d <= n; ++d) {
    const auto& lower = faces[static_cast<std::size_t>(d - 1)];
    const auto& lower_index = lookup[static_cast<std::size_t>(d - 1)];
    auto& bd = cx.boundaries_[static_cast<std::size_t>(d)];
    const auto& cells = cx.cells_[static_cast<std::size_t>(d)];
    bd.reserve(cells.size());
    for (const Cell& c : cells) {
      std::vector<int> column;
      for (int j = 0; j < p.num_facets(); ++j) {
        const FacetMask bit = FacetMask{1} << j;
        if (c.face & bit) continue;
        const auto it = lower_index.find(c.face | bit);
        if (it == lower_index.end()) continue;
        const FaceData& fd = lower[it->second];
        const GF2Vector rep = fd.span.reduce(c.coset);
        column.push_back(static_cast<int>(fd.offset + compress(rep, fd.free_bits)));
      }
      std::sort(column.begin(), column.end());
      bd.push_back(std::move(column));
    }
  }

  // ∂_{d-1} ∘ ∂_d = 0
  for (int d = 2; d <= n; ++d) {
    const auto& outer = cx.boundaries_[static_cast<std::size_t>(d - 1)];
    for (const auto& column : cx.boundaries_[static_cast<std::size_t>(d)]) {
      std::unordered_map<int, int> parity;
      for (int row : column) {
        for (int r2 : outer[static_cast<std::size_t>(row)]) parity[r2] ^= 1;
      }
      for (const auto& [row, bit] : parity) {
        if (bit != 0) {
          throw Error(ErrorCode::Inconsistent, "boundary of boundary is nonzero in dimension " +
                                                   std::to_string(d));
        }
      }
    }
  }
  return cx;
}

std::size_t gf2_rank(SparseColumns columns) {
  // Standard column reduction keyed by the lowest (largest-index) nonzero.
  std::unordered_map<int, std::size_t> owner;
  std::size_t rank = 0;
  std::vector<int> scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    while (!col.empty()) {
      const auto it = owner.find(col.back());
      if (it == owner.end()) {
        owner.emplace(col.back(), c);
        ++rank;
        break;
      }
      const auto& other = columns[it->second];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
  }
  return rank;
}

BettiVector z2_betti(const QuotientComplex& c) {
  const int n = c.dim();
  std::vector<long long> rank(static_cast<std::size_t>(n + 2), 0);
  for (int d = 1; d <= n; ++d) rank[static_cast<std::size_t>(d)] = static_cast<long long>(gf2_rank(c.boundary(d)));
  BettiVector out;
  long long cell_euler = 0;
  for (int d = 0; d <= n; ++d) {
    const auto cells = static_cast<long long>(c.cell_count(d));
    const long long b = cells - rank[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d + 1)];
    out.b.push_back(b);
    const long long sign = d % 2 == 0 ? 1 : -1;
    out.euler += sign * b;
    cell_euler += sign * cells;
  }
  if (out.euler != cell_euler) {
    throw Error(ErrorCode::Inconsistent, "Betti Euler characteristic differs from cell count");
  }
  return out;
}

long long euler_formula(const SimplePolytope& p, int t) {
  const int n = p.dim();
  if (t < n || t >= 63) throw Error(ErrorCode::BadParameter, "need n <= t < 63");
  const FVector fv = f_and_h_vector(p);
  long long chi = 0;
  for (int d = 0; d <= n; ++d) {
    const long long term = fv.f[static_cast<std::size_t>(d)] * (1LL << (t - n + d));
    chi += d % 2 == 0 ? term : -term;
  }
  return chi;
}

}  // namespace smallcover
