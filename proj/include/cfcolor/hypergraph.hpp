#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cfcolor/errors.hpp"

namespace cfcolor {

using VertexId = int;

/// Hypergraph on dense vertex ids 0..n-1. Every hyperedge is stored as a
/// strictly ascending id sequence; empty hyperedges are forbidden.
struct Hypergraph {
  int n = 0;
  std::vector<std::vector<VertexId>> edges;

  Hypergraph() = default;
  Hypergraph(int n_, std::vector<std::vector<VertexId>> edges_)
      : n(n_), edges(std::move(edges_)) {
    validate();
  }

  int edge_count() const { return static_cast<int>(edges.size()); }

  void validate() const {
    if (n < 0) throw InputError("hypergraph: negative vertex count");
    for (const auto& e : edges) {
      if (e.empty()) throw InputError("hypergraph: empty hyperedge");
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] >= n)
          throw InputError("hypergraph: vertex id out of range");
        if (i > 0 && e[i - 1] >= e[i])
          throw InputError("hypergraph: hyperedge not strictly ascending");
      }
    }
  }
};

/// Simple undirected graph with sorted adjacency lists, no self-loops.
struct Graph {
  int n = 0;
  std::vector<std::vector<VertexId>> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(n_) {}

  static Graph from_edges(int n, std::vector<std::pair<VertexId, VertexId>> es) {
    Graph g(n);
    for (auto& [u, v] : es) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw InputError("graph: vertex id out of range");
      if (u == v) throw InputError("graph: self-loop");
      if (u > v) std::swap(u, v);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (const auto& [u, v] : es) {
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
  }

  bool has_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= n || v < 0 || v >= n) return false;
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  int degree(VertexId v) const { return static_cast<int>(adj[v].size()); }

  long long edge_count() const {
    long long s = 0;
    for (const auto& nb : adj) s += static_cast<long long>(nb.size());
    return s / 2;
  }
};

/// Total color assignment, one non-negative color id per vertex, all ids
/// strictly below palette_size.
struct Coloring {
  std::vector<int> colors;
  int palette_size = 0;

  Coloring() = default;
  Coloring(std::vector<int> colors_, int palette)
      : colors(std::move(colors_)), palette_size(palette) {
    validate();
  }

  void validate() const {
    for (int c : colors)
      if (c < 0 || c >= palette_size)
        throw InputError("coloring: color id outside palette");
  }
};

/// One hyperedge per vertex with non-empty punctured neighborhood.
inline Hypergraph neighborhood_hypergraph(const Graph& g) {
  Hypergraph h;
  h.n = g.n;
  for (VertexId v = 0; v < g.n; ++v)
    if (!g.adj[v].empty()) h.edges.push_back(g.adj[v]);
  return h;
}

/// Restriction of every hyperedge to `keep`; empty restrictions are dropped
/// and duplicates merged. Returns the subhypergraph over dense new ids plus
/// the map new id -> original id (ascending in the original ids).
inline std::pair<Hypergraph, std::vector<VertexId>> induced_subhypergraph(
    const Hypergraph& h, const std::vector<VertexId>& keep) {
  std::vector<VertexId> ids(keep);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (VertexId v : ids)
    if (v < 0 || v >= h.n) throw InputError("induced_subhypergraph: id out of range");

  std::vector<int> remap(h.n, -1);
  for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<int>(i);

  Hypergraph sub;
  sub.n = static_cast<int>(ids.size());
  for (const auto& e : h.edges) {
    std::vector<VertexId> r;
    for (VertexId v : e)
      if (remap[v] >= 0) r.push_back(remap[v]);
    if (!r.empty()) sub.edges.push_back(std::move(r));
  }
  std::sort(sub.edges.begin(), sub.edges.end());
  sub.edges.erase(std::unique(sub.edges.begin(), sub.edges.end()), sub.edges.end());
  return {std::move(sub), std::move(ids)};
}

namespace detail {
inline void check_coloring_covers(const Hypergraph& h, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != h.n)
    throw InputError("coloring length does not match vertex count");
}
}  // namespace detail

/// True iff every hyperedge contains a color with multiplicity in [1, k].
/// k = 1 is plain conflict-freeness.
inline bool verify_k_cf(const Hypergraph& h, const Coloring& c, int k) {
  if (k < 1) throw InputError("verify_k_cf: k must be positive");
  detail::check_coloring_covers(h, c);
  std::vector<int> buf;
  for (const auto& e : h.edges) {
    buf.clear();
    for (VertexId v : e) buf.push_back(c.colors[v]);
    std::sort(buf.begin(), buf.end());
    bool ok = false;
    for (std::size_t i = 0; i < buf.size() && !ok;) {
      std::size_t j = i;
      while (j < buf.size() && buf[j] == buf[i]) ++j;
      if (static_cast<int>(j - i) <= k) ok = true;
      i = j;
    }
    if (!ok) return false;
  }
  return true;
}

/// True iff no hyperedge of size >= k is monochromatic. k = 2 is a proper
/// hypergraph coloring.
inline bool verify_k_weak(const Hypergraph& h, const Coloring& c, int k) {
  if (k < 1) throw InputError("verify_k_weak: k must be positive");
  detail::check_coloring_covers(h, c);
  for (const auto& e : h.edges) {
    if (static_cast<int>(e.size()) < k) continue;
    bool mono = true;
    for (VertexId v : e)
      if (c.colors[v] != c.colors[e[0]]) {
        mono = false;
        break;
      }
    if (mono) return false;
  }
  return true;
}

inline int max_degree(const Hypergraph& h) {
  std::vector<int> deg(h.n, 0);
  for (const auto& e : h.edges)
    for (VertexId v : e) ++deg[v];
  int d = 0;
  for (int x : deg) d = std::max(d, x);
  return d;
}

struct DegeneracyOrder {
  std::vector<VertexId> order;  // removal order
  int degeneracy = 0;           // max degree at removal time
};

/// Repeated minimum-degree removal, ties broken by smallest vertex id.
inline DegeneracyOrder degeneracy_order(const Graph& g) {
  DegeneracyOrder res;
  std::vector<int> deg(g.n);
  std::vector<char> removed(g.n, 0);
  std::set<std::pair<int, VertexId>> q;
  for (VertexId v = 0; v < g.n; ++v) {
    deg[v] = g.degree(v);
    q.insert({deg[v], v});
  }
  while (!q.empty()) {
    auto [d, v] = *q.begin();
    q.erase(q.begin());
    removed[v] = 1;
    res.degeneracy = std::max(res.degeneracy, d);
    res.order.push_back(v);
    for (VertexId u : g.adj[v])
      if (!removed[u]) {
        q.erase({deg[u], u});
        --deg[u];
        q.insert({deg[u], u});
      }
  }
  return res;
}

/// Proper coloring via greedy on the reverse degeneracy order; uses at most
/// degeneracy(g)+1 colors.
inline Coloring degeneracy_color(const Graph& g, int* out_degeneracy = nullptr) {
  DegeneracyOrder ord = degeneracy_order(g);
  if (out_degeneracy) *out_degeneracy = ord.degeneracy;
  std::vector<int> color(g.n, -1);
  std::vector<char> used;
  int palette = 0;
  for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
    VertexId v = *it;
    used.assign(ord.degeneracy + 2, 0);
    for (VertexId u : g.adj[v])
      if (color[u] >= 0 && color[u] < static_cast<int>(used.size())) used[color[u]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
    palette = std::max(palette, c + 1);
  }
  if (g.n == 0) return Coloring{};
  return Coloring(std::move(color), palette);
}

/// True iff adjacent vertices always have different colors.
inline bool is_proper_graph_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.n)
    throw InputError("coloring length does not match vertex count");
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId u : g.adj[v])
      if (u > v && c.colors[u] == c.colors[v]) return false;
  return true;
}

}  // namespace cfcolor
