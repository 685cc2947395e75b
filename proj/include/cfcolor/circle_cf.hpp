#pragma once

#include <algorithm>
#include <deque>
#include <utility>
#include <vector>

#include "cfcolor/errors.hpp"
#include "cfcolor/framework.hpp"
#include "cfcolor/geometry.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

/// BFS layering of one connected overlap-graph component from the component's
/// leftmost-left-endpoint interval.
struct LayerPartition {
  VertexId root = -1;
  std::vector<std::vector<VertexId>> layers;  // layers[0] == {root}
};

struct CircleStats {
  int max_aux_palette = 0;      // largest auxiliary palette over all rounds
  int max_aux_degeneracy = 0;   // largest degree-at-removal seen
  long long aux_graphs = 0;     // auxiliary graphs materialized
  long long g1_g2_planarity_violations = 0;  // |E| > 3v-6 occurrences
  long long g3_degree_violations = 0;        // deg > 4 occurrences
  bool extra_color_used = false;
};

namespace detail {

inline std::vector<LayerPartition> distance_layers_impl(const std::vector<Interval>& items,
                                                        const Graph& g) {
  std::vector<LayerPartition> parts;
  std::vector<char> seen(g.n, 0);
  for (VertexId start = 0; start < g.n; ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> q{start};
    seen[start] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (VertexId u : g.adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          q.push_back(u);
        }
    }
    VertexId root = comp[0];
    for (VertexId v : comp)
      if (items[v].a < items[root].a) root = v;
    LayerPartition part;
    part.root = root;
    std::vector<int> dist(g.n, -1);
    dist[root] = 0;
    q.push_back(root);
    part.layers.push_back({root});
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      for (VertexId u : g.adj[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          if (dist[u] >= static_cast<int>(part.layers.size())) part.layers.emplace_back();
          part.layers[dist[u]].push_back(u);
          q.push_back(u);
        }
    }
    for (auto& layer : part.layers) std::sort(layer.begin(), layer.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace detail

/// One LayerPartition per connected component, in order of smallest member id.
inline std::vector<LayerPartition> distance_layers(const std::vector<Interval>& items) {
  return detail::distance_layers_impl(items, overlap_graph(items));
}

/// Union of the three auxiliary graphs over the surviving vertex side, with
/// the per-part edges kept for inspection. Vertices are local indices into
/// the vertex side.
struct LayerAuxGraph {
  Graph graph;
  std::vector<std::pair<int, int>> g1_edges, g2_edges, g3_edges;
};

namespace detail {

// lefts[j] / rights[j]: vertex-side local indices of the neighbors of the
// j-th edge-side member, sorted along its vertical resp. horizontal part.
inline LayerAuxGraph aux_from_neighbor_lists(int nv,
                                             const std::vector<std::vector<int>>& lefts,
                                             const std::vector<std::vector<int>>& rights) {
  LayerAuxGraph aux;
  std::vector<std::pair<VertexId, VertexId>> all;
  auto add_consecutive = [&](const std::vector<int>& run,
                             std::vector<std::pair<int, int>>& part) {
    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
      part.push_back({run[i], run[i + 1]});
      all.push_back({run[i], run[i + 1]});
    }
  };
  for (std::size_t j = 0; j < lefts.size(); ++j) {
    add_consecutive(lefts[j], aux.g1_edges);
    add_consecutive(rights[j], aux.g2_edges);
    if (lefts[j].size() == 1 && rights[j].size() == 1) {
      aux.g3_edges.push_back({lefts[j][0], rights[j][0]});
      all.push_back({lefts[j][0], rights[j][0]});
    }
  }
  aux.graph = Graph::from_edges(nv, std::move(all));
  return aux;
}

inline void note_aux_shape(const LayerAuxGraph& aux, CircleStats* stats) {
  if (!stats) return;
  ++stats->aux_graphs;
  const int v = aux.graph.n;
  auto count_distinct = [](std::vector<std::pair<int, int>> es) {
    for (auto& e : es)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return static_cast<long long>(es.size());
  };
  const long long planar_cap = v >= 3 ? 3LL * v - 6 : 1;
  if (count_distinct(aux.g1_edges) > planar_cap) ++stats->g1_g2_planarity_violations;
  if (count_distinct(aux.g2_edges) > planar_cap) ++stats->g1_g2_planarity_violations;
  std::vector<int> deg(v, 0);
  auto g3 = aux.g3_edges;
  for (auto& e : g3)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(g3.begin(), g3.end());
  g3.erase(std::unique(g3.begin(), g3.end()), g3.end());
  for (const auto& e : g3) {
    ++deg[e.first];
    ++deg[e.second];
  }
  for (int d : deg)
    if (d > 4) ++stats->g3_degree_violations;
}

}  // namespace detail

/// The three auxiliary graphs of the layer machinery, built geometrically on
/// grounded L-shape images. G1 joins vertex-side shapes whose horizontal
/// parts are consecutive along the vertical part of an edge-side shape
/// (consecutiveness relative to the vertex side only), G2 swaps the roles of
/// the parts, and G3 joins the unique left/right neighbor pairs of edge-side
/// shapes with punctured vertex-side neighborhood of size exactly two.
inline LayerAuxGraph build_layer_aux_graph(const std::vector<GroundedLShape>& shapes,
                                           const std::vector<int>& vertex_side,
                                           const std::vector<int>& edge_side) {
  const int total = static_cast<int>(shapes.size());
  std::vector<Coord> xs, ds;
  for (int id : vertex_side)
    if (id < 0 || id >= total) throw InputError("build_layer_aux_graph: bad vertex id");
  for (int id : edge_side)
    if (id < 0 || id >= total) throw InputError("build_layer_aux_graph: bad edge id");
  {
    std::vector<int> used(vertex_side);
    used.insert(used.end(), edge_side.begin(), edge_side.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int id : used) {
      xs.push_back(shapes[id].x);
      ds.push_back(shapes[id].depth);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ds.begin(), ds.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end() ||
        std::adjacent_find(ds.begin(), ds.end()) != ds.end())
      throw InputError("build_layer_aux_graph: inconsistent images (tied coordinates)");
  }
  const int nv = static_cast<int>(vertex_side.size());
  std::vector<std::vector<int>> lefts(edge_side.size()), rights(edge_side.size());
  for (std::size_t j = 0; j < edge_side.size(); ++j) {
    const GroundedLShape& e = shapes[edge_side[j]];
    for (int i = 0; i < nv; ++i) {
      if (vertex_side[i] == edge_side[j]) continue;
      const GroundedLShape& u = shapes[vertex_side[i]];
      if (u.x < e.x) {
        if (e.x < u.end() && e.depth > u.depth) lefts[j].push_back(i);  // h(u) x v(e)
      } else {
        if (u.x < e.end() && u.depth > e.depth) rights[j].push_back(i);  // v(u) x h(e)
      }
    }
    auto& L = lefts[j];
    auto& R = rights[j];
    std::sort(L.begin(), L.end(), [&](int a, int b) {
      return shapes[vertex_side[a]].depth < shapes[vertex_side[b]].depth;
    });
    std::sort(R.begin(), R.end(), [&](int a, int b) {
      return shapes[vertex_side[a]].x < shapes[vertex_side[b]].x;
    });
  }
  return detail::aux_from_neighbor_lists(nv, lefts, rights);
}

namespace detail {

// Feed coloring of one layer pair. lefts/rights hold prev-local neighbor
// indices of each current-layer member, pre-sorted along the image parts.
inline Coloring layer_feed_core(int prev_size, const std::vector<std::vector<int>>& lefts,
                                const std::vector<std::vector<int>>& rights,
                                CircleStats* stats) {
  Hypergraph h;
  h.n = prev_size;
  for (std::size_t j = 0; j < lefts.size(); ++j) {
    std::vector<VertexId> e(lefts[j]);
    e.insert(e.end(), rights[j].begin(), rights[j].end());
    std::sort(e.begin(), e.end());
    if (!e.empty()) h.edges.push_back(std::move(e));
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());

  WeakColorer colorer = [&](const Hypergraph& sub, const std::vector<VertexId>& ids) {
    std::vector<int> to_sub(prev_size, -1);
    for (int i = 0; i < sub.n; ++i) to_sub[ids[i]] = i;
    std::vector<std::vector<int>> fl(lefts.size()), fr(rights.size());
    for (std::size_t j = 0; j < lefts.size(); ++j) {
      for (int u : lefts[j])
        if (to_sub[u] >= 0) fl[j].push_back(to_sub[u]);
      for (int u : rights[j])
        if (to_sub[u] >= 0) fr[j].push_back(to_sub[u]);
    }
    LayerAuxGraph aux = aux_from_neighbor_lists(sub.n, fl, fr);
    note_aux_shape(aux, stats);
    int degeneracy = 0;
    Coloring c = degeneracy_color(aux.graph, &degeneracy);
    if (degeneracy > 15)
      throw InternalInvariantError("layer auxiliary graph is not 15-degenerate");
    if (c.palette_size > 16)
      throw InternalInvariantError("layer auxiliary coloring exceeds 16 colors");
    if (!is_proper_graph_coloring(aux.graph, c))
      throw InternalInvariantError("layer auxiliary coloring is improper");
    if (stats) {
      stats->max_aux_palette = std::max(stats->max_aux_palette, c.palette_size);
      stats->max_aux_degeneracy = std::max(stats->max_aux_degeneracy, degeneracy);
    }
    return c;
  };
  return k_cf_color_via_weak(h, colorer, 1);
}

// Classify the overlap neighbors of e among `candidates` (interval ids): left
// neighbors contain e's left endpoint, right neighbors its right endpoint.
// Sort orders match the grounded image parts: along v(e) by right endpoint
// (image depth), along h(e) by left endpoint (image basepoint).
inline void split_neighbors_sorted(const std::vector<Interval>& items, VertexId e,
                                   const std::vector<VertexId>& candidates,
                                   std::vector<VertexId>& lefts,
                                   std::vector<VertexId>& rights) {
  lefts.clear();
  rights.clear();
  for (VertexId u : candidates) {
    if (items[u].a < items[e].a)
      lefts.push_back(u);
    else
      rights.push_back(u);
  }
  std::sort(lefts.begin(), lefts.end(),
            [&](VertexId a, VertexId b) { return items[a].b < items[b].b; });
  std::sort(rights.begin(), rights.end(),
            [&](VertexId a, VertexId b) { return items[a].a < items[b].a; });
}

inline Coloring layer_feed_with_graph(const std::vector<Interval>& items, const Graph& g,
                                      const std::vector<VertexId>& prev_layer,
                                      const std::vector<VertexId>& cur_layer,
                                      CircleStats* stats) {
  std::vector<int> prev_local(items.size(), -1);
  for (std::size_t i = 0; i < prev_layer.size(); ++i)
    prev_local[prev_layer[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> lefts(cur_layer.size()), rights(cur_layer.size());
  std::vector<VertexId> cand, L, R;
  for (std::size_t j = 0; j < cur_layer.size(); ++j) {
    cand.clear();
    for (VertexId u : g.adj[cur_layer[j]])
      if (prev_local[u] >= 0) cand.push_back(u);
    split_neighbors_sorted(items, cur_layer[j], cand, L, R);
    for (VertexId u : L) lefts[j].push_back(prev_local[u]);
    for (VertexId u : R) rights[j].push_back(prev_local[u]);
  }
  return layer_feed_core(static_cast<int>(prev_layer.size()), lefts, rights, stats);
}

}  // namespace detail

/// CF coloring of the previous layer against the hypergraph of current-layer
/// overlap neighborhoods, O(log n) colors, every auxiliary round 16-colorable.
/// Returns a coloring over prev_layer's local indices.
inline Coloring layer_feed_cf_coloring(const std::vector<Interval>& items,
                                       const std::vector<VertexId>& prev_layer,
                                       const std::vector<VertexId>& cur_layer,
                                       CircleStats* stats = nullptr) {
  std::vector<std::vector<int>> lefts(cur_layer.size()), rights(cur_layer.size());
  std::vector<int> prev_local(items.size(), -1);
  for (std::size_t i = 0; i < prev_layer.size(); ++i)
    prev_local[prev_layer[i]] = static_cast<int>(i);
  std::vector<VertexId> cand, L, R;
  for (std::size_t j = 0; j < cur_layer.size(); ++j) {
    cand.clear();
    for (VertexId u : prev_layer)
      if (u != cur_layer[j] && intervals_overlap(items[u], items[cur_layer[j]]))
        cand.push_back(u);
    detail::split_neighbors_sorted(items, cur_layer[j], cand, L, R);
    for (VertexId u : L) lefts[j].push_back(prev_local[u]);
    for (VertexId u : R) rights[j].push_back(prev_local[u]);
  }
  return detail::layer_feed_core(static_cast<int>(prev_layer.size()), lefts, rights, stats);
}

namespace detail {

inline bool has_unique_color(const std::vector<VertexId>& nbhd, const std::vector<int>& color) {
  if (nbhd.empty()) return true;
  std::vector<int> cs;
  cs.reserve(nbhd.size());
  for (VertexId u : nbhd) cs.push_back(color[u]);
  std::sort(cs.begin(), cs.end());
  for (std::size_t i = 0; i < cs.size();) {
    std::size_t j = i;
    while (j < cs.size() && cs[j] == cs[i]) ++j;
    if (j - i == 1) return true;
    i = j;
  }
  return false;
}

}  // namespace detail

/// CF coloring of the interval overlap graph with O(log n) colors: per
/// component, distance layers are fed by layer_feed_cf_coloring under three
/// palette blocks cycling mod 3, the deepest layer takes its block's first
/// color, and one shared extra color repairs roots that lack a uniquely
/// colored neighbor. Requires normalized general position.
inline Coloring cf_color_circle_graph(const std::vector<Interval>& items,
                                      CircleStats* stats = nullptr) {
  if (items.empty()) return Coloring{};
  if (!check_general_position(items).ok)
    throw InputError("cf_color_circle_graph: input is not in general position; normalize first");
  const Graph g = overlap_graph(items);
  const auto parts = detail::distance_layers_impl(items, g);

  struct LayerColoring {
    const std::vector<VertexId>* layer;
    Coloring coloring;
    int block;
  };
  std::vector<LayerColoring> feeds;
  int maxblock = 1;
  for (const auto& part : parts) {
    const int s = static_cast<int>(part.layers.size()) - 1;
    for (int i = 1; i <= s; ++i) {
      Coloring c = detail::layer_feed_with_graph(items, g, part.layers[i - 1],
                                                 part.layers[i], stats);
      maxblock = std::max(maxblock, c.palette_size);
      feeds.push_back({&part.layers[i - 1], std::move(c), (i - 1) % 3});
    }
  }

  std::vector<int> color(items.size(), -1);
  for (const auto& f : feeds)
    for (std::size_t i = 0; i < f.layer->size(); ++i)
      color[(*f.layer)[i]] = f.block * maxblock + f.coloring.colors[i];
  for (const auto& part : parts) {
    const int s = static_cast<int>(part.layers.size()) - 1;
    for (VertexId v : part.layers[s]) color[v] = (s % 3) * maxblock;
  }

  const int extra = 3 * maxblock;
  bool extra_used = false;
  for (const auto& part : parts) {
    const VertexId root = part.root;
    if (g.adj[root].empty()) continue;
    if (detail::has_unique_color(g.adj[root], color)) continue;
    bool fixed = false;
    for (VertexId u : g.adj[root]) {
      const int old = color[u];
      color[u] = extra;
      bool ok = detail::has_unique_color(g.adj[root], color);
      for (VertexId w : g.adj[u])
        if (ok && !detail::has_unique_color(g.adj[w], color)) ok = false;
      if (ok) {
        fixed = true;
        extra_used = true;
        break;
      }
      color[u] = old;
    }
    if (!fixed)
      throw InternalInvariantError("no recolorable neighbor found for a layer root");
  }
  if (stats) stats->extra_color_used = extra_used;

  int palette = 0;
  for (int c : color) palette = std::max(palette, c + 1);
  return Coloring(std::move(color), palette);
}

/// Proper coloring of the neighborhood hypergraph of an interval overlap
/// family with at most 49 colors: one 16-color auxiliary round per layer pair
/// under three blocks, plus one repair color for monochromatic root
/// neighborhoods.
inline Coloring proper_color_overlap_family(const std::vector<Interval>& items,
                                            CircleStats* stats = nullptr) {
  if (items.empty()) return Coloring{};
  const Graph g = overlap_graph(items);
  const auto parts = detail::distance_layers_impl(items, g);
  constexpr int kBlock = 16;
  std::vector<int> color(items.size(), -1);
  std::vector<VertexId> cand, L, R;
  for (const auto& part : parts) {
    const int s = static_cast<int>(part.layers.size()) - 1;
    for (int i = 1; i <= s; ++i) {
      const auto& prev = part.layers[i - 1];
      const auto& cur = part.layers[i];
      std::vector<int> prev_local(items.size(), -1);
      for (std::size_t t = 0; t < prev.size(); ++t) prev_local[prev[t]] = static_cast<int>(t);
      std::vector<std::vector<int>> lefts(cur.size()), rights(cur.size());
      for (std::size_t j = 0; j < cur.size(); ++j) {
        cand.clear();
        for (VertexId u : g.adj[cur[j]])
          if (prev_local[u] >= 0) cand.push_back(u);
        detail::split_neighbors_sorted(items, cur[j], cand, L, R);
        for (VertexId u : L) lefts[j].push_back(prev_local[u]);
        for (VertexId u : R) rights[j].push_back(prev_local[u]);
      }
      LayerAuxGraph aux = detail::aux_from_neighbor_lists(static_cast<int>(prev.size()),
                                                          lefts, rights);
      detail::note_aux_shape(aux, stats);
      int degeneracy = 0;
      Coloring c = degeneracy_color(aux.graph, &degeneracy);
      if (degeneracy > 15 || c.palette_size > kBlock)
        throw InternalInvariantError("layer auxiliary coloring exceeds 16 colors");
      if (stats) {
        stats->max_aux_palette = std::max(stats->max_aux_palette, c.palette_size);
        stats->max_aux_degeneracy = std::max(stats->max_aux_degeneracy, degeneracy);
      }
      for (std::size_t t = 0; t < prev.size(); ++t)
        color[prev[t]] = ((i - 1) % 3) * kBlock + c.colors[t];
    }
    for (VertexId v : part.layers[s]) color[v] = (s % 3) * kBlock;
  }
  // A root whose whole neighborhood is monochromatic gets one neighbor moved
  // to the shared repair color.
  for (const auto& part : parts) {
    const VertexId root = part.root;
    const auto& nb = g.adj[root];
    if (nb.size() < 2) continue;
    bool mono = true;
    for (VertexId u : nb)
      if (color[u] != color[nb[0]]) {
        mono = false;
        break;
      }
    if (mono) color[nb[0]] = 3 * kBlock;
  }
  int palette = 0;
  for (int c : color) palette = std::max(palette, c + 1);
  return Coloring(std::move(color), palette);
}

}  // namespace cfcolor
