#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "cfcolor/circle_cf.hpp"
#include "cfcolor/errors.hpp"
#include "cfcolor/framework.hpp"
#include "cfcolor/geometry.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

/// CF coloring of the n collinear points whose hyperedges are all contiguous
/// ranges: the median of each recursion range takes the range's level color,
/// so every range keeps a unique maximum. Palette is exactly
/// floor(log2 n) + 1.
inline Coloring discrete_interval_cf(int n) {
  if (n < 1) throw InputError("discrete_interval_cf: n must be positive");
  auto floor_log2 = [](int x) {
    int l = 0;
    while (x > 1) {
      x >>= 1;
      ++l;
    }
    return l;
  };
  std::vector<int> colors(n, -1);
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (lo > hi) continue;
    const int len = hi - lo + 1;
    const int mid = lo + (len - 1) / 2;
    colors[mid] = floor_log2(len);
    stack.push_back({lo, mid - 1});
    stack.push_back({mid + 1, hi});
  }
  return Coloring(std::move(colors), floor_log2(n) + 1);
}

/// CF (hence proper) coloring of the dual hypergraph of an interval multiset
/// with at most 3 colors: a greedy minimal cover of each union component is
/// colored alternately with two colors, everything else takes the third.
inline Coloring dual_interval_proper3(const std::vector<Interval>& items) {
  const int n = static_cast<int>(items.size());
  if (n == 0) return Coloring{};
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return items[i].a < items[j].a; });
  std::vector<int> colors(n, 2);
  std::size_t pos = 0;
  while (pos < order.size()) {
    std::size_t comp_begin = pos;
    Coord comp_end = items[order[pos]].b;
    std::size_t scan = pos;
    while (scan + 1 < order.size() && items[order[scan + 1]].a <= comp_end) {
      ++scan;
      comp_end = std::max(comp_end, items[order[scan]].b);
    }
    const std::size_t comp_past = scan + 1;
    // Greedy farthest-reach cover: consecutive members alternate two colors,
    // and no point lies in more than two cover members.
    Coord x = items[order[comp_begin]].a;
    int parity = 0;
    std::size_t frontier = comp_begin;
    while (true) {
      while (frontier < comp_past && items[order[frontier]].a <= x) ++frontier;
      int best = -1;
      for (std::size_t t = comp_begin; t < frontier; ++t) {
        const int i = order[t];
        if (items[i].b > x && (best < 0 || items[i].b > items[best].b)) best = i;
      }
      if (best < 0) throw InternalInvariantError("interval cover gap inside a component");
      colors[best] = parity;
      parity ^= 1;
      x = items[best].b;
      if (x >= comp_end) break;
    }
    pos = comp_past;
  }
  int palette = 0;
  for (int c : colors) palette = std::max(palette, c + 1);
  return Coloring(std::move(colors), palette);
}

// ---------------------------------------------------------------------------
// Median split of a grounded family
// ---------------------------------------------------------------------------

/// Output of the median vertical split. All id vectors are sorted ascending
/// and index the family passed in.
struct SplitClassification {
  Rational line_x;  // strictly between the two middle basepoints
  std::vector<VertexId> f_l, f_m, f_r;
  std::vector<VertexId> f_m1, f_m2;
  std::vector<VertexId> v_l, v_r;    // subsets of f_m2
  std::vector<VertexId> vp_l, vp_r;  // their neighbor sets in f_l resp. f_r
  std::vector<VertexId> i_set;
  std::vector<VertexId> a1, a2, a3;
};

namespace detail {

inline SplitClassification classify_family(const std::vector<GroundedLShape>& shapes,
                                           const std::vector<VertexId>& ids,
                                           const std::vector<std::vector<VertexId>>& nbr) {
  SplitClassification sc;
  const int n = static_cast<int>(ids.size());
  if (n < 2) throw InputError("split_and_classify: needs at least 2 shapes");
  std::vector<VertexId> by_base(ids);
  std::sort(by_base.begin(), by_base.end(),
            [&](VertexId a, VertexId b) { return shapes[a].x < shapes[b].x; });
  const Coord p = shapes[by_base[(n + 1) / 2 - 1]].x;
  const Coord q = shapes[by_base[(n + 1) / 2]].x;
  sc.line_x = Rational(p + q, 2);
  const Coord line2 = p + q;  // compare doubled coordinates against this

  std::vector<char> is_m(shapes.size(), 0);
  for (VertexId v : ids) {
    if (2 * shapes[v].x > line2)
      sc.f_r.push_back(v);
    else if (2 * shapes[v].end() > line2) {
      sc.f_m.push_back(v);
      is_m[v] = 1;
    } else {
      sc.f_l.push_back(v);
    }
  }

  for (VertexId v : sc.f_m) {
    bool internal = false;
    for (VertexId u : nbr[v])
      if (is_m[u]) {
        internal = true;
        break;
      }
    (internal ? sc.f_m1 : sc.f_m2).push_back(v);
  }

  std::vector<char> in_fl(shapes.size(), 0), in_fr(shapes.size(), 0), mark(shapes.size(), 0);
  for (VertexId v : sc.f_l) in_fl[v] = 1;
  for (VertexId v : sc.f_r) in_fr[v] = 1;
  for (VertexId v : sc.f_m2) {
    bool left = false, right = false;
    for (VertexId u : nbr[v]) {
      if (in_fl[u]) {
        left = true;
        if (!mark[u]) {
          mark[u] = 1;
          sc.vp_l.push_back(u);
        }
      } else if (in_fr[u]) {
        right = true;
        if (!mark[u]) {
          mark[u] = 1;
          sc.vp_r.push_back(u);
        }
      }
    }
    if (left) sc.v_l.push_back(v);
    if (right) sc.v_r.push_back(v);
    if (!left && !right)
      throw InternalInvariantError("split: F_M2 member without an F_L/F_R neighbor");
  }

  std::vector<char> in_w(shapes.size(), 0);
  for (VertexId v : sc.f_l) in_w[v] = 1;
  for (VertexId v : sc.f_r) in_w[v] = 1;
  for (VertexId v : sc.vp_l) in_w[v] = 0;
  for (VertexId v : sc.vp_r) in_w[v] = 0;
  for (VertexId v : ids) {
    if (!in_w[v]) continue;
    bool w_neighbor = false;
    for (VertexId u : nbr[v])
      if (in_w[u]) {
        w_neighbor = true;
        break;
      }
    if (!w_neighbor) sc.i_set.push_back(v);
  }

  std::vector<char> drop(shapes.size(), 0);
  for (VertexId v : sc.i_set) drop[v] = 1;
  for (VertexId v : sc.vp_l) drop[v] = 1;
  for (VertexId v : sc.vp_r) drop[v] = 1;
  for (VertexId v : sc.f_l)
    if (!drop[v]) sc.a1.push_back(v);
  for (VertexId v : sc.f_r)
    if (!drop[v]) sc.a3.push_back(v);
  sc.a2 = sc.i_set;
  sc.a2.insert(sc.a2.end(), sc.f_m.begin(), sc.f_m.end());
  sc.a2.insert(sc.a2.end(), sc.vp_l.begin(), sc.vp_l.end());
  sc.a2.insert(sc.a2.end(), sc.vp_r.begin(), sc.vp_r.end());
  for (auto* v : {&sc.f_l, &sc.f_m, &sc.f_r, &sc.f_m1, &sc.f_m2, &sc.v_l, &sc.v_r,
                  &sc.vp_l, &sc.vp_r, &sc.i_set, &sc.a1, &sc.a2, &sc.a3})
    std::sort(v->begin(), v->end());
  return sc;
}

}  // namespace detail

/// Splits the family at a vertical line strictly between the two middle
/// basepoints and derives the partition A1 / A2 / A3 together with every
/// intermediate family the A2 coloring needs. Requires a family without
/// isolated shapes.
inline SplitClassification split_and_classify(const std::vector<GroundedLShape>& items) {
  const int n = static_cast<int>(items.size());
  const Graph g = intersection_graph(items);
  for (VertexId v = 0; v < n; ++v)
    if (g.adj[v].empty())
      throw InputError("split_and_classify: family contains an isolated shape");
  std::vector<VertexId> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return detail::classify_family(items, ids, g.adj);
}

// ---------------------------------------------------------------------------
// The six intermediate colorings
// ---------------------------------------------------------------------------

/// f1: proper coloring of X against the hyperedges cut by the pairwise
/// disjoint family I, via the degeneracy coloring of G1 u G2 u G3.
inline Coloring coloring_f1(const std::vector<GroundedLShape>& shapes,
                            const std::vector<VertexId>& x_ids,
                            const std::vector<VertexId>& i_ids) {
  LayerAuxGraph aux = build_layer_aux_graph(shapes, x_ids, i_ids);
  return degeneracy_color(aux.graph);
}

/// f2: proper coloring of the neighborhood hypergraph of a line-crossing
/// subfamily with at most 49 colors, through the interval overlap view.
inline Coloring coloring_f2(const std::vector<GroundedLShape>& shapes,
                            const std::vector<VertexId>& fm1_ids, Coord line_x,
                            CircleStats* stats = nullptr) {
  std::vector<GroundedLShape> sub;
  sub.reserve(fm1_ids.size());
  for (VertexId v : fm1_ids) sub.push_back(shapes[v]);
  const std::vector<Interval> view = grounded_to_overlap(sub, line_x);
  Coloring c = proper_color_overlap_family(view, stats);
  if (c.palette_size > 49)
    throw InternalInvariantError("f2 exceeded its 49-color budget");
  return c;
}

namespace detail {

// Degeneracy coloring of the consecutive-crossings graph: every edge-side
// shape contributes consecutive pairs of the vertex-side shapes met along its
// parts. Planarity keeps the graph 5-degenerate.
inline Coloring consecutive_crossings_color(const std::vector<GroundedLShape>& shapes,
                                            const std::vector<VertexId>& vertex_side,
                                            const std::vector<VertexId>& edge_side) {
  LayerAuxGraph aux = build_layer_aux_graph(shapes, vertex_side, edge_side);
  int degeneracy = 0;
  Coloring c = degeneracy_color(aux.graph, &degeneracy);
  if (degeneracy > 5 || c.palette_size > 6)
    throw InternalInvariantError("consecutive-crossings graph is not planar-degenerate");
  return c;
}

}  // namespace detail

/// f3: proper coloring of V'_R with respect to V_R. Each such intersection is
/// a vertical part of V'_R crossing a horizontal part of V_R, so only the
/// consecutive-crossings graph matters; its planarity yields 6 colors in
/// place of the four-color theorem's 4.
inline Coloring coloring_f3(const std::vector<GroundedLShape>& shapes,
                            const std::vector<VertexId>& vpr_ids,
                            const std::vector<VertexId>& vr_ids) {
  return detail::consecutive_crossings_color(shapes, vpr_ids, vr_ids);
}

namespace detail {

// Nesting order of pairwise disjoint shapes crossing a common vertical line:
// larger basepoint = smaller enclosed region = earlier.
inline std::vector<VertexId> nesting_order(const std::vector<GroundedLShape>& shapes,
                                           std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end(),
            [&](VertexId a, VertexId b) { return shapes[a].x > shapes[b].x; });
  return ids;
}

// Positions (in `order`) of the order members adjacent to v, verified to form
// one contiguous run. Returns {-1,-1} when v meets nothing.
inline std::pair<int, int> contiguous_hit_range(const std::vector<GroundedLShape>& shapes,
                                                VertexId v,
                                                const std::vector<VertexId>& order) {
  int lo = -1, hi = -1, count = 0;
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
    if (order[pos] == v) continue;
    if (grounded_lshapes_intersect(shapes[v], shapes[order[pos]])) {
      if (lo < 0) lo = pos;
      hi = pos;
      ++count;
    }
  }
  if (count == 0) return {-1, -1};
  if (hi - lo + 1 != count)
    throw InternalInvariantError("nesting order produced a non-contiguous hit range");
  return {lo, hi};
}

}  // namespace detail

/// f4: proper coloring of V'_L with respect to V_L. Each V'_L shape meets a
/// contiguous run of V_L's nesting order, so the dual interval 3-coloring
/// applies to the run intervals.
inline Coloring coloring_f4(const std::vector<GroundedLShape>& shapes,
                            const std::vector<VertexId>& vpl_ids,
                            const std::vector<VertexId>& vl_ids) {
  const std::vector<VertexId> order = detail::nesting_order(shapes, vl_ids);
  std::vector<Interval> ranges;
  ranges.reserve(vpl_ids.size());
  for (VertexId v : vpl_ids) {
    auto [lo, hi] = detail::contiguous_hit_range(shapes, v, order);
    if (lo < 0) throw InputError("coloring_f4: a V'_L shape meets no V_L shape");
    ranges.emplace_back(2 * lo, 2 * hi + 1);
  }
  return dual_interval_proper3(ranges);
}

/// f5: CF coloring of F_M2 with respect to V'_R with O(log n) colors, feeding
/// the planar consecutive-crossings colorer through the weak-to-CF framework.
inline Coloring coloring_f5(const std::vector<GroundedLShape>& shapes,
                            const std::vector<VertexId>& fm2_ids,
                            const std::vector<VertexId>& vpr_ids) {
  Hypergraph h;
  h.n = static_cast<int>(fm2_ids.size());
  for (VertexId e : vpr_ids) {
    std::vector<VertexId> edge;
    for (int i = 0; i < h.n; ++i)
      if (fm2_ids[i] != e && grounded_lshapes_intersect(shapes[fm2_ids[i]], shapes[e]))
        edge.push_back(i);
    if (!edge.empty()) h.edges.push_back(std::move(edge));
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  WeakColorer colorer = [&](const Hypergraph&, const std::vector<VertexId>& ids) {
    std::vector<VertexId> k_ids;
    k_ids.reserve(ids.size());
    for (VertexId i : ids) k_ids.push_back(fm2_ids[i]);
    return detail::consecutive_crossings_color(shapes, k_ids, vpr_ids);
  };
  return k_cf_color_via_weak(h, colorer, 1);
}

/// f6: CF coloring of F_M2 with respect to V'_L. In the nesting order every
/// V'_L shape meets a contiguous run, so the hypergraph embeds into the
/// discrete interval hypergraph and the median-level coloring applies.
inline Coloring coloring_f6(const std::vector<GroundedLShape>& shapes,
                            const std::vector<VertexId>& fm2_ids,
                            const std::vector<VertexId>& vpl_ids) {
  if (fm2_ids.empty()) return Coloring{};
  const std::vector<VertexId> order = detail::nesting_order(shapes, fm2_ids);
  for (VertexId v : vpl_ids) detail::contiguous_hit_range(shapes, v, order);
  const Coloring ruler = discrete_interval_cf(static_cast<int>(order.size()));
  std::vector<int> local(shapes.size(), -1);
  for (std::size_t i = 0; i < fm2_ids.size(); ++i) local[fm2_ids[i]] = static_cast<int>(i);
  std::vector<int> colors(fm2_ids.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    colors[local[order[pos]]] = ruler.colors[pos];
  return Coloring(std::move(colors), ruler.palette_size);
}

// ---------------------------------------------------------------------------
// The full recursion
// ---------------------------------------------------------------------------

struct GroundedStats {
  int stripped_isolated_below_root = 0;
  int splits = 0;
  int max_depth = 0;
  int max_aux_palette16 = 0;            // f2's per-layer auxiliary palettes
  long long g3_density_violations = 0;  // deduped |G3_I| > 8 v (log2 v + 1)
  long long a1a3_pairs_checked = 0;
  long long a1a3_violations = 0;
  int max_c1_round_palette = 0;
};

struct GroundedOptions {
  bool check_separation = false;  // exhaustively verify A1 x A3 disjointness
};

namespace detail {

// Weak colorer for the c1 framework run at one recursion node: the product of
// the auxiliary-graph coloring (edge side I u F_M1; this closes the induced
// hyperedges that lose all their F_M1 members) with f2, f3 and f4, the last
// three carrying a sentinel value outside their domains.
class C1Colorer {
 public:
  C1Colorer(const std::vector<GroundedLShape>& shapes, const SplitClassification& sc,
            const std::vector<std::vector<VertexId>>& nbr,
            const std::vector<VertexId>& x_ids, Coord int_line, GroundedStats* stats)
      : shapes_(shapes), sc_(sc), nbr_(nbr), x_ids_(x_ids), line_(int_line), stats_(stats) {
    edge_side_ = sc.i_set;
    edge_side_.insert(edge_side_.end(), sc.f_m1.begin(), sc.f_m1.end());
    const std::vector<VertexId> vl_order = nesting_order(shapes, sc.v_l);
    std::vector<int> vl_pos(shapes.size(), -1);
    for (std::size_t i = 0; i < vl_order.size(); ++i) vl_pos[vl_order[i]] = static_cast<int>(i);
    // f4 hit ranges never change across rounds: the edge side is fixed.
    f4_range_.assign(shapes.size(), {-1, -1});
    for (VertexId v : sc.vp_l) {
      int lo = -1, hi = -1, count = 0;
      for (VertexId u : nbr[v])
        if (vl_pos[u] >= 0) {
          const int pos = vl_pos[u];
          lo = lo < 0 ? pos : std::min(lo, pos);
          hi = std::max(hi, pos);
          ++count;
        }
      if (count > 0 && hi - lo + 1 != count)
        throw InternalInvariantError("V'_L hit range in V_L is not contiguous");
      f4_range_[v] = {lo, hi};
    }
  }

  Coloring operator()(const Hypergraph& sub, const std::vector<VertexId>& ids) const {
    const int k = sub.n;
    std::vector<char> alive(shapes_.size(), 0);
    std::vector<int> sub_of(shapes_.size(), -1);
    for (int i = 0; i < k; ++i) {
      alive[x_ids_[ids[i]]] = 1;
      sub_of[x_ids_[ids[i]]] = i;
    }

    // Auxiliary-graph factor over the surviving X, edge side I u F_M1.
    std::vector<std::vector<int>> lefts(edge_side_.size()), rights(edge_side_.size());
    std::vector<std::pair<int, int>> g3_i;
    std::vector<VertexId> L, R;
    for (std::size_t j = 0; j < edge_side_.size(); ++j) {
      const VertexId e = edge_side_[j];
      L.clear();
      R.clear();
      for (VertexId u : nbr_[e]) {
        if (!alive[u]) continue;
        (shapes_[u].x < shapes_[e].x ? L : R).push_back(u);
      }
      std::sort(L.begin(), L.end(),
                [&](VertexId a, VertexId b) { return shapes_[a].depth < shapes_[b].depth; });
      std::sort(R.begin(), R.end(),
                [&](VertexId a, VertexId b) { return shapes_[a].x < shapes_[b].x; });
      if (L.size() == 1 && R.size() == 1 && j < sc_.i_set.size()) {
        int a = sub_of[L[0]], b = sub_of[R[0]];
        g3_i.push_back({std::min(a, b), std::max(a, b)});
      }
      for (VertexId u : L) lefts[j].push_back(sub_of[u]);
      for (VertexId u : R) rights[j].push_back(sub_of[u]);
    }
    LayerAuxGraph aux = aux_from_neighbor_lists(k, lefts, rights);
    if (stats_ && k >= 2) {
      std::sort(g3_i.begin(), g3_i.end());
      g3_i.erase(std::unique(g3_i.begin(), g3_i.end()), g3_i.end());
      const double cap = 8.0 * k * (std::log2(static_cast<double>(k)) + 1.0);
      if (static_cast<double>(g3_i.size()) > cap) ++stats_->g3_density_violations;
    }
    const Coloring f01 = degeneracy_color(aux.graph);

    // f2 rebuilt on the surviving F_M1 members.
    std::vector<int> f2v(k, -1);
    {
      std::vector<VertexId> km;
      for (VertexId v : sc_.f_m1)
        if (alive[v]) km.push_back(v);
      if (!km.empty()) {
        CircleStats cs;
        const Coloring f2 = coloring_f2(shapes_, km, line_, &cs);
        if (stats_)
          stats_->max_aux_palette16 = std::max(stats_->max_aux_palette16, cs.max_aux_palette);
        for (std::size_t i = 0; i < km.size(); ++i) f2v[sub_of[km[i]]] = f2.colors[i];
      }
    }

    // f3 rebuilt on the surviving V'_R: consecutive crossings along the
    // horizontal parts of V_R.
    std::vector<int> f3v(k, -1);
    {
      std::vector<VertexId> kr;
      for (VertexId v : sc_.vp_r)
        if (alive[v]) kr.push_back(v);
      if (!kr.empty()) {
        std::vector<int> kr_local(shapes_.size(), -1);
        for (std::size_t i = 0; i < kr.size(); ++i) kr_local[kr[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> rr(sc_.v_r.size());
        for (std::size_t j = 0; j < sc_.v_r.size(); ++j) {
          R.clear();
          for (VertexId u : nbr_[sc_.v_r[j]])
            if (kr_local[u] >= 0) R.push_back(u);
          std::sort(R.begin(), R.end(),
                    [&](VertexId a, VertexId b) { return shapes_[a].x < shapes_[b].x; });
          for (VertexId u : R) rr[j].push_back(kr_local[u]);
        }
        LayerAuxGraph g3aux =
            aux_from_neighbor_lists(static_cast<int>(kr.size()),
                                    std::vector<std::vector<int>>(sc_.v_r.size()), rr);
        int degeneracy = 0;
        const Coloring f3 = degeneracy_color(g3aux.graph, &degeneracy);
        if (degeneracy > 5 || f3.palette_size > 6)
          throw InternalInvariantError("V'_R consecutive-crossings graph not planar-degenerate");
        for (std::size_t i = 0; i < kr.size(); ++i) f3v[sub_of[kr[i]]] = f3.colors[i];
      }
    }

    // f4 on the surviving V'_L via the precomputed contiguous ranges.
    std::vector<int> f4v(k, -1);
    {
      std::vector<VertexId> kl;
      for (VertexId v : sc_.vp_l)
        if (alive[v] && f4_range_[v].first >= 0) kl.push_back(v);
      if (!kl.empty()) {
        std::vector<Interval> ranges;
        ranges.reserve(kl.size());
        for (VertexId v : kl)
          ranges.emplace_back(2 * f4_range_[v].first, 2 * f4_range_[v].second + 1);
        const Coloring f4 = dual_interval_proper3(ranges);
        for (std::size_t i = 0; i < kl.size(); ++i) f4v[sub_of[kl[i]]] = f4.colors[i];
      }
    }

    std::map<std::array<int, 4>, int> dense;
    std::vector<int> colors(k);
    for (int i = 0; i < k; ++i) {
      const std::array<int, 4> key{f01.colors[i], f2v[i], f3v[i], f4v[i]};
      colors[i] = dense.insert({key, static_cast<int>(dense.size())}).first->second;
    }
    Coloring out(std::move(colors), static_cast<int>(dense.size()));
    if (stats_)
      stats_->max_c1_round_palette = std::max(stats_->max_c1_round_palette, out.palette_size);
    return out;
  }

 private:
  const std::vector<GroundedLShape>& shapes_;
  const SplitClassification& sc_;
  const std::vector<std::vector<VertexId>>& nbr_;
  const std::vector<VertexId>& x_ids_;
  Coord line_;
  GroundedStats* stats_;
  std::vector<VertexId> edge_side_;  // i_set then f_m1
  std::vector<std::pair<int, int>> f4_range_;
};

// f5 with a neighbor lookup instead of quadratic rescans.
inline Coloring cf_fm2_wrt_vpr(const std::vector<GroundedLShape>& shapes,
                               const std::vector<VertexId>& fm2_ids,
                               const std::vector<VertexId>& vpr_ids,
                               const std::vector<std::vector<VertexId>>& nbr) {
  Hypergraph h;
  h.n = static_cast<int>(fm2_ids.size());
  std::vector<int> local(shapes.size(), -1);
  for (int i = 0; i < h.n; ++i) local[fm2_ids[i]] = i;
  for (VertexId e : vpr_ids) {
    std::vector<VertexId> edge;
    for (VertexId u : nbr[e])
      if (local[u] >= 0) edge.push_back(local[u]);
    std::sort(edge.begin(), edge.end());
    if (!edge.empty()) h.edges.push_back(std::move(edge));
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  WeakColorer colorer = [&](const Hypergraph& sub, const std::vector<VertexId>& ids) {
    std::vector<int> k_local(shapes.size(), -1);
    for (int i = 0; i < sub.n; ++i) k_local[fm2_ids[ids[i]]] = i;
    std::vector<std::vector<int>> ll(vpr_ids.size());
    std::vector<VertexId> L;
    for (std::size_t j = 0; j < vpr_ids.size(); ++j) {
      L.clear();
      for (VertexId u : nbr[vpr_ids[j]])
        if (k_local[u] >= 0) L.push_back(u);
      std::sort(L.begin(), L.end(),
                [&](VertexId a, VertexId b) { return shapes[a].depth < shapes[b].depth; });
      for (VertexId u : L) ll[j].push_back(k_local[u]);
    }
    LayerAuxGraph aux = aux_from_neighbor_lists(
        sub.n, ll, std::vector<std::vector<int>>(vpr_ids.size()));
    int degeneracy = 0;
    Coloring c = degeneracy_color(aux.graph, &degeneracy);
    if (degeneracy > 5 || c.palette_size > 6)
      throw InternalInvariantError("F_M2 consecutive-crossings graph not planar-degenerate");
    return c;
  };
  return k_cf_color_via_weak(h, colorer, 1);
}

struct GroundedNodeResult {
  std::vector<std::pair<VertexId, int>> assignment;  // (global id, local color)
  int depth = 0;
};

}  // namespace detail

/// CF coloring of a grounded L-shape family with O(log^3 n) colors. Isolated
/// shapes take a reserved color; every recursion level colors its A2 families
/// with a depth-indexed palette block shared across siblings and recurses on
/// A1 and A3 with the deeper blocks.
inline Coloring cf_color_grounded(const std::vector<GroundedLShape>& items,
                                  GroundedStats* stats = nullptr,
                                  const GroundedOptions& opts = {}) {
  const int n = static_cast<int>(items.size());
  if (n == 0) return Coloring{};
  if (!check_general_position(items).ok)
    throw InputError("cf_color_grounded: input is not in general position; normalize first");

  // Doubling every coordinate makes each median split line an integer.
  std::vector<GroundedLShape> shapes;
  shapes.reserve(n);
  for (const auto& l : items) shapes.emplace_back(2 * l.x, 2 * l.depth, 2 * l.width);
  const Graph g = intersection_graph(shapes);

  std::vector<detail::GroundedNodeResult> nodes;
  std::vector<VertexId> isolated;
  std::vector<char> member(n, 0);

  struct WorkItem {
    std::vector<VertexId> ids;
    int depth;
  };
  std::vector<WorkItem> work;
  {
    std::vector<VertexId> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    work.push_back({std::move(all), 0});
  }
  while (!work.empty()) {
    WorkItem fr = std::move(work.back());
    work.pop_back();
    if (fr.ids.empty()) continue;
    if (stats) stats->max_depth = std::max(stats->max_depth, fr.depth);

    // Isolated shapes can't cascade: they are in nobody's neighbor list.
    for (VertexId v : fr.ids) member[v] = 1;
    std::vector<std::vector<VertexId>> nbr(n);
    std::vector<VertexId> active;
    for (VertexId v : fr.ids) {
      for (VertexId u : g.adj[v])
        if (member[u]) nbr[v].push_back(u);
      if (nbr[v].empty()) {
        isolated.push_back(v);
        if (fr.depth > 0 && stats) ++stats->stripped_isolated_below_root;
      } else {
        active.push_back(v);
      }
    }
    for (VertexId v : fr.ids) member[v] = 0;
    if (active.empty()) continue;

    SplitClassification sc = detail::classify_family(shapes, active, nbr);
    if (stats) ++stats->splits;
    if (opts.check_separation) {
      for (VertexId a : sc.a1)
        for (VertexId b : sc.a3) {
          if (stats) ++stats->a1a3_pairs_checked;
          if (grounded_lshapes_intersect(shapes[a], shapes[b])) {
            if (stats) ++stats->a1a3_violations;
            throw InternalInvariantError("A1 and A3 contain an intersecting pair");
          }
        }
    }
    for (VertexId v : sc.i_set)
      for (VertexId u : nbr[v])
        if (std::binary_search(sc.i_set.begin(), sc.i_set.end(), u))
          throw InternalInvariantError("I-set members intersect each other");
    {
      std::vector<VertexId> both(sc.v_l);
      both.insert(both.end(), sc.v_r.begin(), sc.v_r.end());
      std::sort(both.begin(), both.end());
      both.erase(std::unique(both.begin(), both.end()), both.end());
      if (both != sc.f_m2) throw InternalInvariantError("F_M2 differs from V_L u V_R");
    }

    if (sc.line_x.denominator() != 1)
      throw InternalInvariantError("split line not integral on doubled coordinates");
    const Coord int_line = sc.line_x.numerator();

    // c1: CF of X with respect to V_L u V_R u F_M1 u I.
    std::vector<VertexId> x_ids(sc.vp_l);
    x_ids.insert(x_ids.end(), sc.f_m1.begin(), sc.f_m1.end());
    x_ids.insert(x_ids.end(), sc.vp_r.begin(), sc.vp_r.end());
    std::sort(x_ids.begin(), x_ids.end());
    std::vector<int> x_local(n, -1);
    for (std::size_t i = 0; i < x_ids.size(); ++i) x_local[x_ids[i]] = static_cast<int>(i);

    Hypergraph h1;
    h1.n = static_cast<int>(x_ids.size());
    {
      std::vector<VertexId> edge_defs(sc.f_m2);
      edge_defs.insert(edge_defs.end(), sc.f_m1.begin(), sc.f_m1.end());
      edge_defs.insert(edge_defs.end(), sc.i_set.begin(), sc.i_set.end());
      std::sort(edge_defs.begin(), edge_defs.end());
      for (VertexId e : edge_defs) {
        std::vector<VertexId> he;
        for (VertexId u : nbr[e])
          if (x_local[u] >= 0) he.push_back(x_local[u]);
        std::sort(he.begin(), he.end());
        if (!he.empty()) h1.edges.push_back(std::move(he));
      }
      std::sort(h1.edges.begin(), h1.edges.end());
      h1.edges.erase(std::unique(h1.edges.begin(), h1.edges.end()), h1.edges.end());
    }
    detail::C1Colorer colorer(shapes, sc, nbr, x_ids, int_line, stats);
    const Coloring c1 = k_cf_color_via_weak(h1, colorer, 1);

    // c2: CF of F_M2 with respect to V'_L u V'_R, palette above c1's.
    std::map<std::pair<int, int>, int> c2dense;
    std::vector<int> c2colors(sc.f_m2.size(), 0);
    if (!sc.f_m2.empty()) {
      const Coloring f5 = detail::cf_fm2_wrt_vpr(shapes, sc.f_m2, sc.vp_r, nbr);
      const Coloring f6 = coloring_f6(shapes, sc.f_m2, sc.vp_l);
      for (std::size_t i = 0; i < sc.f_m2.size(); ++i) {
        const std::pair<int, int> key{f5.colors.empty() ? 0 : f5.colors[i],
                                      f6.colors.empty() ? 0 : f6.colors[i]};
        c2colors[i] = c2dense.insert({key, static_cast<int>(c2dense.size())}).first->second;
      }
    }

    detail::GroundedNodeResult node;
    node.depth = fr.depth;
    const int c1p = c1.palette_size;
    const int c2p = static_cast<int>(c2dense.size());
    for (std::size_t i = 0; i < x_ids.size(); ++i)
      node.assignment.push_back({x_ids[i], c1.colors[i]});
    for (std::size_t i = 0; i < sc.f_m2.size(); ++i)
      node.assignment.push_back({sc.f_m2[i], c1p + c2colors[i]});
    for (VertexId v : sc.i_set) node.assignment.push_back({v, c1p + c2p});
    nodes.push_back(std::move(node));

    work.push_back({std::move(sc.a1), fr.depth + 1});
    work.push_back({std::move(sc.a3), fr.depth + 1});
  }

  // Depth-indexed palette blocks shared across every node of one depth.
  int max_depth = 0;
  for (const auto& node : nodes) max_depth = std::max(max_depth, node.depth);
  std::vector<int> block_size(max_depth + 1, 0);
  for (const auto& node : nodes) {
    int local = 0;
    for (const auto& [v, c] : node.assignment) local = std::max(local, c + 1);
    block_size[node.depth] = std::max(block_size[node.depth], local);
  }
  std::vector<int> block_base(max_depth + 1, isolated.empty() ? 0 : 1);
  for (int d = 1; d <= max_depth; ++d) block_base[d] = block_base[d - 1] + block_size[d - 1];

  std::vector<int> colors(n, 0);
  for (const auto& node : nodes)
    for (const auto& [v, c] : node.assignment) colors[v] = block_base[node.depth] + c;
  int palette = 0;
  for (int c : colors) palette = std::max(palette, c + 1);
  return Coloring(std::move(colors), palette);
}

}  // namespace cfcolor
