#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "cfcolor/errors.hpp"
#include "cfcolor/geometry.hpp"
#include "cfcolor/hypergraph.hpp"
#include "cfcolor/weak_lll.hpp"

namespace cfcolor {

/// Nested binary tree of intervals plus a chain of mutually nested intervals
/// hooked into the tree's minimal intervals, forcing t colors in any k-CF
/// coloring of the overlap graph. Size is 2^(k(t-1)+1) + 2^(k(t-1)) - 1.
inline std::vector<Interval> gen_circle_lower_bound(int t, int k) {
  if (t < 1 || k < 1) throw InputError("gen_circle_lower_bound: t, k must be positive");
  const int depth = k * (t - 1) + 1;
  if (depth > 24) throw InputError("gen_circle_lower_bound: instance would be huge");
  std::vector<Interval> out;
  std::vector<Interval> leaves;  // minimal intervals, left to right
  // Recursive nesting tree: each non-minimal interval holds two disjoint
  // children; widths shrink by 4 per level so all endpoints stay distinct.
  struct Builder {
    std::vector<Interval>& out;
    std::vector<Interval>& leaves;
    int depth;
    void build(Coord lo, Coord hi, int level) {
      out.emplace_back(lo, hi);
      if (level == depth) {
        leaves.emplace_back(lo, hi);
        return;
      }
      const Coord w = (hi - lo) / 4;
      build(lo + 1, lo + 1 + w, level + 1);
      build(hi - 1 - w, hi - 1, level + 1);
    }
  };
  Coord root_width = 1;
  for (int i = 0; i < depth; ++i) root_width *= 4;
  Builder{out, leaves, depth}.build(0, root_width, 1);

  const long long chain = 1LL << (depth - 1);
  if (static_cast<long long>(leaves.size()) != chain)
    throw InternalInvariantError("lower-bound tree has a wrong leaf count");
  for (long long i = 0; i < chain; ++i) {
    const Coord a = leaves[i].a + 2;  // strictly inside the i-th leaf
    const Coord b = root_width + 1 + 2 * (chain - 1 - i);
    out.emplace_back(a, b);
  }
  return out;
}

/// m pairwise crossing congruent frames on a diagonal shift, plus one tiny
/// frame per crossing pair meeting exactly that pair. Any CF coloring needs
/// m colors; total size m + m(m-1)/2.
inline std::vector<Frame> gen_frames_clique_gadget(int m) {
  if (m < 2) throw InputError("gen_frames_clique_gadget: m must be at least 2");
  const Coord pairs = static_cast<Coord>(m) * (m - 1) / 2;
  const Coord S = pairs + 2;  // tiny half-widths stay below S
  std::vector<Frame> out;
  for (Coord i = 1; i <= m; ++i)
    out.emplace_back(2 * S * i, -2 * S * i, 2 * S * (i + m + 1), 2 * S * (m + 1 - i));
  Coord p = 0;
  for (Coord i = 1; i <= m; ++i)
    for (Coord j = i + 1; j <= m; ++j) {
      // Crossing of frame j's left side with frame i's bottom side.
      const Coord x0 = 2 * S * j, y0 = -2 * S * i;
      const Coord half = 2 + p;
      out.emplace_back(x0 - half, y0 - half, x0 + half, y0 + half);
      ++p;
    }
  return out;
}

/// The neighborhood hypergraph of G', where G' extends the base graph with
/// one vertex per (k+1)-tuple of base vertices joined to that tuple. Any
/// k-CF coloring needs at least t/k colors.
inline Hypergraph gen_gbonc(const Graph& base, int k) {
  const int t = base.n;
  if (k < 1) throw InputError("gen_gbonc: k must be positive");
  if (t < k + 2) throw InputError("gen_gbonc: base graph needs at least k+2 vertices");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < t; ++v)
    for (VertexId u : base.adj[v])
      if (u > v) edges.push_back({v, u});
  // (k+1)-subsets in lexicographic order.
  std::vector<int> comb(k + 1);
  std::iota(comb.begin(), comb.end(), 0);
  int next_id = t;
  while (true) {
    for (int v : comb) edges.push_back({v, next_id});
    ++next_id;
    int i = k;
    while (i >= 0 && comb[i] == t - (k + 1) + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j <= k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return neighborhood_hypergraph(Graph::from_edges(next_id, std::move(edges)));
}

inline Graph complete_graph(int t) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) edges.push_back({i, j});
  return Graph::from_edges(t, std::move(edges));
}

/// Interval-filament realization of the complete-base lower bound: a nested
/// run I_1 c ... c I_t with disjoint sub-intervals of I_1 indexed by the
/// (k+1)-tuples. Combinatorially identical to gen_gbonc(K_t, k).
struct IntervalFilamentInstance {
  Hypergraph hypergraph;
  std::vector<Interval> nest;  // I_1 c ... c I_t
  std::vector<std::pair<std::vector<int>, Interval>> tuple_intervals;
};

inline IntervalFilamentInstance gen_interval_filaments(int t, int k) {
  IntervalFilamentInstance inst;
  inst.hypergraph = gen_gbonc(complete_graph(t), k);
  long long count = 1;
  for (int i = 0; i < k + 1; ++i) count = count * (t - i) / (i + 1);
  for (int i = 1; i <= t; ++i)
    inst.nest.emplace_back(-static_cast<Coord>(i), 4 * count + i);
  std::vector<int> comb(k + 1);
  std::iota(comb.begin(), comb.end(), 0);
  long long p = 0;
  while (true) {
    inst.tuple_intervals.push_back({comb, Interval(4 * p + 1, 4 * p + 3)});
    ++p;
    int i = k;
    while (i >= 0 && comb[i] == t - (k + 1) + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j <= k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Random general-position families
// ---------------------------------------------------------------------------

namespace detail {

// `count` distinct values from [base, base + range), deterministically per
// seed, via a partial Fisher-Yates shuffle.
inline std::vector<Coord> distinct_values(int count, Coord base, Coord range,
                                          std::mt19937_64& rng) {
  if (count > range) throw InputError("distinct_values: range too small");
  std::vector<Coord> pool(range);
  std::iota(pool.begin(), pool.end(), base);
  for (int i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace detail

inline std::vector<Interval> random_intervals(int n, RandomSeed seed) {
  if (n < 0) throw InputError("random_intervals: negative n");
  std::mt19937_64 rng(seed.value);
  const auto vals = detail::distinct_values(2 * n, 0, std::max(4LL * n, 4LL), rng);
  std::vector<Interval> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.emplace_back(std::min(vals[2 * i], vals[2 * i + 1]),
                     std::max(vals[2 * i], vals[2 * i + 1]));
  return out;
}

inline std::vector<GroundedLShape> random_grounded_lshapes(int n, RandomSeed seed) {
  if (n < 0) throw InputError("random_grounded_lshapes: negative n");
  std::mt19937_64 rng(seed.value);
  const auto xs = detail::distinct_values(2 * n, 0, std::max(4LL * n, 4LL), rng);
  const auto ds = detail::distinct_values(n, 1, std::max(4LL * n, 4LL), rng);
  std::vector<GroundedLShape> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Coord x = std::min(xs[2 * i], xs[2 * i + 1]);
    const Coord e = std::max(xs[2 * i], xs[2 * i + 1]);
    out.emplace_back(x, ds[i], e - x);
  }
  return out;
}

inline std::vector<Frame> random_frames(int n, RandomSeed seed) {
  if (n < 0) throw InputError("random_frames: negative n");
  std::mt19937_64 rng(seed.value);
  const auto xs = detail::distinct_values(2 * n, 0, std::max(4LL * n, 4LL), rng);
  const auto ys = detail::distinct_values(2 * n, 0, std::max(4LL * n, 4LL), rng);
  std::vector<Frame> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.emplace_back(std::min(xs[2 * i], xs[2 * i + 1]), std::min(ys[2 * i], ys[2 * i + 1]),
                     std::max(xs[2 * i], xs[2 * i + 1]), std::max(ys[2 * i], ys[2 * i + 1]));
  return out;
}

inline std::vector<CornerLShape> random_corner_lshapes(int n, RandomSeed seed) {
  if (n < 0) throw InputError("random_corner_lshapes: negative n");
  std::mt19937_64 rng(seed.value);
  const auto xs = detail::distinct_values(2 * n, 0, std::max(4LL * n, 4LL), rng);
  const auto ys = detail::distinct_values(2 * n, 0, std::max(4LL * n, 4LL), rng);
  std::vector<CornerLShape> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Coord x = std::min(xs[2 * i], xs[2 * i + 1]);
    const Coord w = std::max(xs[2 * i], xs[2 * i + 1]) - x;
    const Coord y = std::min(ys[2 * i], ys[2 * i + 1]);
    const Coord h = std::max(ys[2 * i], ys[2 * i + 1]) - y;
    out.emplace_back(x, y, h, w);
  }
  return out;
}

}  // namespace cfcolor
