#include "smallcover/charfunc.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <thread>

#include "smallcover/error.hpp"
#include "smallcover/nerve.hpp"

namespace smallcover {

CharFunc::CharFunc(int t, std::vector<GF2Vector> columns) : t_(t), columns_(std::move(columns)) {
  if (t < 1 || t > 64) throw Error(ErrorCode::WrongShape, "target rank must be in [1, 64]");
  const GF2Vector allowed = t == 64 ? ~GF2Vector{0} : (GF2Vector{1} << t) - 1;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if ((columns_[i] & ~allowed) != 0) {
      throw Error(ErrorCode::WrongShape, "column " + std::to_string(i) + " exceeds rank " +
                                             std::to_string(t));
    }
  }
}

CharFunc lambda0(const SimplePolytope& p) {
  std::vector<GF2Vector> cols;
  for (int i = 0; i < p.num_facets(); ++i) cols.push_back(GF2Vector{1} << i);
  return CharFunc(p.num_facets(), std::move(cols));
}

namespace {

bool vertex_independent(FacetMask v, const CharFunc& lambda) {
  EchelonBasis basis;
  for (int i : mask_indices(v)) {
    if (!basis.insert(lambda[i])) return false;
  }
  return true;
}

}  // namespace

CharFuncCheck validate_charfunc(const SimplePolytope& p, const CharFunc& lambda) {
  if (lambda.num_facets() != p.num_facets() || lambda.target_rank() != p.dim()) {
    throw Error(ErrorCode::WrongShape,
                "expected " + std::to_string(p.num_facets()) + " columns in (Z2)^" +
                    std::to_string(p.dim()) + ", got " + std::to_string(lambda.num_facets()) +
                    " in (Z2)^" + std::to_string(lambda.target_rank()));
  }
  for (int i = 0; i < lambda.num_facets(); ++i) {
    if (lambda[i] == 0) throw Error(ErrorCode::ZeroColumn, "facet " + std::to_string(i));
  }
  const auto& verts = p.vertices();
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (!vertex_independent(verts[v], lambda)) return CharFuncCheck{static_cast<int>(v)};
  }
  return {};
}

bool independent_at_vertices(const SimplePolytope& p, const CharFunc& lambda) {
  if (lambda.num_facets() != p.num_facets()) {
    throw Error(ErrorCode::WrongShape, "column count differs from facet count");
  }
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [&](FacetMask v) { return vertex_independent(v, lambda); });
}

CharFunc compose(const std::vector<GF2Vector>& g, const CharFunc& lambda) {
  const GF2Matrix m(lambda.target_rank(), g);
  std::vector<GF2Vector> cols;
  cols.reserve(lambda.columns().size());
  for (GF2Vector c : lambda.columns()) cols.push_back(m.apply(c));
  return CharFunc(lambda.target_rank(), std::move(cols));
}

namespace {

// Backtracking over facet values in (Z_2)^n with per-vertex independence
// checks. Facets are visited in a fixed most-constrained-first order.
class Backtracker {
 public:
  explicit Backtracker(const SimplePolytope& p) : p_(p), n_(p.dim()) {
    const int r = p.num_facets();
    facet_vertices_.resize(static_cast<std::size_t>(r));
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      for (int f : mask_indices(p.vertices()[v])) {
        facet_vertices_[static_cast<std::size_t>(f)].push_back(static_cast<int>(v));
      }
    }
    value_.assign(static_cast<std::size_t>(r), 0);
    build_order();
  }

  [[nodiscard]] const std::vector<int>& order() const noexcept { return order_; }
  [[nodiscard]] GF2Vector max_value() const noexcept { return (GF2Vector{1} << n_) - 1; }
  [[nodiscard]] const std::vector<GF2Vector>& values() const noexcept { return value_; }

  void set(int facet, GF2Vector x) { value_[static_cast<std::size_t>(facet)] = x; }

  [[nodiscard]] bool consistent(int facet, GF2Vector x) const {
    for (int v : facet_vertices_[static_cast<std::size_t>(facet)]) {
      EchelonBasis basis;
      for (int g : mask_indices(p_.vertices()[static_cast<std::size_t>(v)])) {
        const GF2Vector y = value_[static_cast<std::size_t>(g)];
        if (g != facet && y != 0) basis.insert(y);
      }
      if (basis.contains(x)) return false;
    }
    return true;
  }

  // visit() returns true to stop the search.
  template <typename Visit>
  bool run(std::size_t depth, Visit& visit) {
    if (depth == order_.size()) return visit(value_);
    const int f = order_[depth];
    for (GF2Vector x = 1; x <= max_value(); ++x) {
      if (!consistent(f, x)) continue;
      set(f, x);
      if (run(depth + 1, visit)) {
        return true;
      }
      set(f, 0);
    }
    return false;
  }

 private:
  void build_order() {
    const int r = p_.num_facets();
    std::vector<int> assigned_in_vertex(p_.vertices().size(), 0);
    std::vector<bool> placed(static_cast<std::size_t>(r), false);
    auto place = [&](int f) {
      order_.push_back(f);
      placed[static_cast<std::size_t>(f)] = true;
      for (int v : facet_vertices_[static_cast<std::size_t>(f)]) ++assigned_in_vertex[static_cast<std::size_t>(v)];
    };
    // Anchor: the vertex whose sorted facet list is lexicographically least.
    FacetMask anchor = p_.vertices().front();
    for (FacetMask v : p_.vertices()) {
      if (mask_indices(v) < mask_indices(anchor)) anchor = v;
    }
    for (int f : mask_indices(anchor)) place(f);
    while (static_cast<int>(order_.size()) < r) {
      int best = -1;
      long long best_full = -1;
      long long best_load = -1;
      for (int f = 0; f < r; ++f) {
        if (placed[static_cast<std::size_t>(f)]) continue;
        long long full = 0;
        long long load = 0;
        for (int v : facet_vertices_[static_cast<std::size_t>(f)]) {
          const int a = assigned_in_vertex[static_cast<std::size_t>(v)];
          if (a == n_ - 1) ++full;
          load += a;
        }
        if (full > best_full || (full == best_full && load > best_load)) {
          best = f;
          best_full = full;
          best_load = load;
        }
      }
      place(best);
    }
  }

  const SimplePolytope& p_;
  int n_;
  std::vector<std::vector<int>> facet_vertices_;
  std::vector<GF2Vector> value_;
  std::vector<int> order_;
};

// Runs fn(branch) for branch in [0, count) on `threads` workers, handing out
// branch indices in increasing order.
template <typename Fn>
void parallel_branches(int count, int threads, Fn&& fn) {
  threads = std::clamp(threads, 1, std::max(1, count));
  if (threads == 1) {
    for (int b = 0; b < count; ++b) fn(b);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int b = next++; b < count; b = next++) fn(b);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

SmallCoverSearch exists_small_cover(const SimplePolytope& p, const SearchOptions& opts) {
  const int n = p.dim();
  const int r = p.num_facets();
  SmallCoverSearch out;
  // Adjacent facets need distinct nonzero values; a 2-neighborly polytope
  // with r >= 2^n facets cannot get them.
  if (opts.pigeonhole_shortcut && n < 63 && r >= (1LL << n) && is_two_neighborly(p)) {
    out.reason = NoSmallCoverReason::Pigeonhole;
    return out;
  }
  if (n > 16) throw Error(ErrorCode::TooLarge, "small-cover search supports n <= 16");

  // Every valid λ is GL(n,2)-equivalent to one sending the facets of the
  // anchor vertex to e_1, ..., e_n in order.
  Backtracker root(p);
  for (int j = 0; j < n; ++j) root.set(root.order()[static_cast<std::size_t>(j)], GF2Vector{1} << j);
  if (r == n) {
    out.witness = CharFunc(n, root.values());
    return out;
  }

  const auto depth = static_cast<std::size_t>(n);
  const int branches = static_cast<int>(root.max_value());
  std::vector<std::optional<std::vector<GF2Vector>>> found(static_cast<std::size_t>(branches));
  std::atomic<int> best{branches};
  parallel_branches(branches, opts.threads, [&](int b) {
    if (b > best.load()) return;
    Backtracker local = root;
    const int f = local.order()[depth];
    const GF2Vector x = static_cast<GF2Vector>(b) + 1;
    if (!local.consistent(f, x)) return;
    local.set(f, x);
    auto visit = [&](const std::vector<GF2Vector>& v) {
      found[static_cast<std::size_t>(b)] = v;
      return true;
    };
    if (local.run(depth + 1, visit)) {
      int cur = best.load();
      while (b < cur && !best.compare_exchange_weak(cur, b)) {
      }
    }
  });
  for (const auto& sol : found) {
    if (sol) {
      out.witness = CharFunc(n, *sol);
      return out;
    }
  }
  out.reason = NoSmallCoverReason::Exhausted;
  return out;
}

Enumeration enumerate_charfuncs(const SimplePolytope& p, EnumerationMode mode,
                                const EnumerationOptions& opts) {
  const int n = p.dim();
  if (mode == EnumerationMode::ModuloGL && n > 4) {
    throw Error(ErrorCode::TooLarge, "GL orbit enumeration supports n <= 4");
  }
  if (n > 8 || p.num_facets() > 32) {
    throw Error(ErrorCode::TooLarge, "enumeration supports n <= 8 and r <= 32");
  }
  Backtracker root(p);
  const int branches = static_cast<int>(root.max_value());
  const int first = root.order().front();
  std::vector<std::vector<std::vector<GF2Vector>>> per_branch(static_cast<std::size_t>(branches));
  std::atomic<long long> total{0};
  std::atomic<bool> overflow{false};
  parallel_branches(branches, opts.threads, [&](int b) {
    Backtracker local = root;
    local.set(first, static_cast<GF2Vector>(b) + 1);
    auto& sink = per_branch[static_cast<std::size_t>(b)];
    auto visit = [&](const std::vector<GF2Vector>& v) {
      if (++total > opts.max_solutions) {
        overflow = true;
        return true;
      }
      sink.push_back(v);
      return false;
    };
    local.run(1, visit);
  });
  if (overflow) {
    throw Error(ErrorCode::TooLarge,
                "more than " + std::to_string(opts.max_solutions) + " characteristic functions");
  }

  std::vector<CharFunc> all;
  for (auto& branch : per_branch) {
    for (auto& v : branch) all.emplace_back(n, std::move(v));
  }
  std::sort(all.begin(), all.end());

  Enumeration out;
  if (mode == EnumerationMode::Raw) {
    out.count = static_cast<long long>(all.size());
    out.representatives = std::move(all);
    return out;
  }
  const auto group = general_linear_group(n);
  std::set<std::vector<GF2Vector>> seen;
  for (const CharFunc& lambda : all) {
    if (seen.count(lambda.columns()) != 0) continue;
    // Scanning in sorted order, the first unseen member is its orbit's minimum.
    for (const auto& g : group) seen.insert(compose(g, lambda).columns());
    out.representatives.push_back(lambda);
  }
  out.count = static_cast<long long>(out.representatives.size());
  return out;
}

std::pair<SimplePolytope, CharFunc> bott_charfunc(const BottMatrix& a) {
  const int n = a.n;
  if (n < 1 || n > 32 || static_cast<int>(a.entries.size()) != n) {
    throw Error(ErrorCode::BadParameter, "Bott matrix must be n x n with 1 <= n <= 32");
  }
  for (int i = 0; i < n; ++i) {
    const auto& row = a.entries[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::BadParameter, "ragged Bott matrix");
    for (int j = 0; j < n; ++j) {
      const int x = row[static_cast<std::size_t>(j)];
      if (x != 0 && x != 1) throw Error(ErrorCode::BadParameter, "Bott entries must be 0 or 1");
      if (x == 1 && i >= j) {
        throw Error(ErrorCode::NotUpperTriangular,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is nonzero");
      }
    }
  }
  std::vector<GF2Vector> cols(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    GF2Vector g = GF2Vector{1} << j;
    for (int i = 0; i < j; ++i) {
      if (a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) g |= GF2Vector{1} << i;
    }
    cols[static_cast<std::size_t>(2 * j)] = GF2Vector{1} << j;
    cols[static_cast<std::size_t>(2 * j + 1)] = g;
  }
  return {cube(n), CharFunc(n, std::move(cols))};
}

std::pair<SimplePolytope, CharFunc> generalized_bott_charfunc(const std::vector<int>& dims) {
  if (dims.empty()) throw Error(ErrorCode::BadParameter, "need at least one simplex");
  int n = 0;
  for (int d : dims) {
    if (d < 1) throw Error(ErrorCode::BadParameter, "simplex dimensions must be >= 1");
    n += d;
  }
  if (n > 64) throw Error(ErrorCode::BadParameter, "total dimension exceeds 64");
  SimplePolytope p = product_of_simplices(dims);
  std::vector<GF2Vector> cols;
  int offset = 0;
  for (int d : dims) {
    GF2Vector sum = 0;
    for (int j = 0; j < d; ++j) {
      const GF2Vector e = GF2Vector{1} << (offset + j);
      cols.push_back(e);
      sum |= e;
    }
    cols.push_back(sum);
    offset += d;
  }
  return {std::move(p), CharFunc(n, std::move(cols))};
}

}  // namespace smallcover
