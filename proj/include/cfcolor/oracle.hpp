#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "cfcolor/errors.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

/// Result of the exact chromatic search. exceeded_limit means no coloring
/// within the caller's color cap exists; value then echoes the cap.
struct ExactResult {
  bool exceeded_limit = false;
  int value = 0;
};

namespace detail {

class ExactSearcher {
 public:
  ExactSearcher(const Hypergraph& h, int k, long long node_cap)
      : h_(h), k_(k), node_cap_(node_cap) {
    order_.resize(h.n);
    std::vector<int> deg(h.n, 0);
    for (const auto& e : h.edges)
      for (VertexId v : e) ++deg[v];
    for (int v = 0; v < h.n; ++v) order_[v] = v;
    std::sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
      if (deg[a] != deg[b]) return deg[a] > deg[b];
      return a < b;
    });
    edges_of_.resize(h.n);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
      for (VertexId v : h.edges[i]) edges_of_[v].push_back(static_cast<int>(i));
    color_.assign(h.n, -1);
    colored_count_.assign(h.edges.size(), 0);
  }

  bool feasible(int palette) {
    palette_ = palette;
    return place(0, 0);
  }

 private:
  bool edge_ok(int ei) const {
    // Fully colored hyperedge: some color multiplicity must be in [1, k].
    const auto& e = h_.edges[ei];
    thread_local std::vector<int> buf;
    buf.clear();
    for (VertexId v : e) buf.push_back(color_[v]);
    std::sort(buf.begin(), buf.end());
    for (std::size_t i = 0; i < buf.size();) {
      std::size_t j = i;
      while (j < buf.size() && buf[j] == buf[i]) ++j;
      if (static_cast<int>(j - i) <= k_) return true;
      i = j;
    }
    return false;
  }

  bool place(int pos, int max_used) {
    if (pos == h_.n) return true;
    if (++nodes_ > node_cap_)
      throw ResourceLimitError("exact_k_cf_chromatic: search node cap exceeded");
    const VertexId v = order_[pos];
    const int cap = std::min(palette_ - 1, max_used);  // symmetry breaking
    for (int c = 0; c <= cap; ++c) {
      color_[v] = c;
      bool ok = true;
      int touched = 0;
      for (int ei : edges_of_[v]) {
        ++colored_count_[ei];
        ++touched;
        if (colored_count_[ei] == static_cast<int>(h_.edges[ei].size()) && !edge_ok(ei)) {
          ok = false;
          break;
        }
      }
      if (ok && place(pos + 1, std::max(max_used, c + 1))) return true;
      for (int ei : edges_of_[v]) {
        if (touched-- == 0) break;
        --colored_count_[ei];
      }
      color_[v] = -1;
    }
    return false;
  }

  const Hypergraph& h_;
  int k_;
  long long node_cap_;
  long long nodes_ = 0;
  int palette_ = 0;
  std::vector<VertexId> order_;
  std::vector<std::vector<int>> edges_of_;
  std::vector<int> color_;
  std::vector<int> colored_count_;
};

}  // namespace detail

/// Smallest palette size admitting a k-CF coloring of h, by backtracking over
/// vertices in decreasing-degree order with fully-colored-hyperedge pruning
/// and first-use color symmetry breaking. Intended for small instances.
inline ExactResult exact_k_cf_chromatic(const Hypergraph& h, int k,
                                        std::optional<int> limit = std::nullopt,
                                        long long node_cap = 200'000'000) {
  if (k < 1) throw InputError("exact_k_cf_chromatic: k must be positive");
  if (h.n == 0) return {false, 0};
  const int cap = limit ? std::min(*limit, h.n) : h.n;
  for (int c = 1; c <= cap; ++c) {
    detail::ExactSearcher s(h, k, node_cap);
    if (s.feasible(c)) return {false, c};
  }
  // A palette of n distinct colors is always k-CF, so only a caller limit can
  // land here.
  return {true, cap};
}

}  // namespace cfcolor
