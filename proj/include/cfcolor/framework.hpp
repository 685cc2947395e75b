#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "cfcolor/errors.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

/// Contract: given an induced subhypergraph of the original instance and the
/// map from its dense ids back to original ids, return a (k+1)-weak coloring
/// of it. Geometric colorers use the id map to rebuild shape context.
using WeakColorer =
    std::function<Coloring(const Hypergraph& sub, const std::vector<VertexId>& orig_ids)>;

/// Iterated pruning: each round asks the weak colorer for a (k+1)-weak
/// auxiliary coloring of the surviving subhypergraph, locks the largest color
/// class (ties to the smallest color id) to the round's color, and removes it.
/// Once no surviving hyperedge has more than k vertices, the rest is flushed
/// in a single final round. The result is k-CF with palette = round count.
inline Coloring k_cf_color_via_weak(const Hypergraph& h, const WeakColorer& w, int k) {
  if (k < 1) throw InputError("k_cf_color_via_weak: k must be positive");
  std::vector<int> result(h.n, -1);
  std::vector<VertexId> alive(h.n);
  for (int v = 0; v < h.n; ++v) alive[v] = v;

  int round = 0;
  while (!alive.empty()) {
    auto [sub, ids] = induced_subhypergraph(h, alive);
    bool constrained = false;
    for (const auto& e : sub.edges)
      if (static_cast<int>(e.size()) > k) {
        constrained = true;
        break;
      }
    if (!constrained) {
      // Every surviving restriction has at most k vertices; any single color
      // satisfies them all.
      for (VertexId v : alive) result[v] = round;
      ++round;
      break;
    }

    Coloring chi = w(sub, ids);
    if (static_cast<int>(chi.colors.size()) != sub.n)
      throw InputError("weak colorer returned a coloring of the wrong size");
    chi.validate();
    if (!verify_k_weak(sub, chi, k + 1))
      throw InputError("weak colorer returned a coloring that is not (k+1)-weak");

    std::vector<int> class_size(chi.palette_size, 0);
    for (int c : chi.colors) ++class_size[c];
    int best = 0;
    for (int c = 1; c < chi.palette_size; ++c)
      if (class_size[c] > class_size[best]) best = c;

    std::vector<VertexId> next;
    next.reserve(alive.size());
    for (int i = 0; i < sub.n; ++i) {
      if (chi.colors[i] == best)
        result[ids[i]] = round;
      else
        next.push_back(ids[i]);
    }
    if (next.size() == alive.size())
      throw InputError("weak colorer produced only empty color classes");
    alive = std::move(next);
    ++round;
  }
  if (h.n == 0) return Coloring{};
  return Coloring(std::move(result), round);
}

}  // namespace cfcolor
