#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cfcolor/errors.hpp"
#include "cfcolor/framework.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

/// Seed for the deterministic pseudorandom generator; identical seeds give
/// identical outputs.
struct RandomSeed {
  std::uint64_t value = 0;
};

struct LllStats {
  long long resamples = 0;
  int palette_bound = 0;  // the ceil(13 * Delta^(1/k)) bound actually used
};

namespace detail {

// Smallest M with M^k >= 13^k * delta, i.e. ceil(13 * delta^(1/k)), computed
// in exact integer arithmetic.
inline int lll_palette_size(int delta, int k) {
  if (delta <= 0) return 1;
  auto pow_ge = [](long long base, int exp, unsigned __int128 target) {
    unsigned __int128 acc = 1;
    for (int i = 0; i < exp; ++i) {
      acc *= static_cast<unsigned __int128>(base);
      if (acc >= target) return true;  // monotone for base >= 1
    }
    return false;
  };
  unsigned __int128 target = static_cast<unsigned __int128>(delta);
  for (int i = 0; i < k; ++i) target *= 13u;
  int lo = 1, hi = 13 * delta + 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (pow_ge(mid, k, target))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace detail

/// (k+1)-weak coloring via the local lemma regime: oversized hyperedges are
/// reduced to their lexicographically first k+1 vertices, smaller ones are
/// dropped, and a uniform random coloring with ceil(13 * Delta^(1/k)) colors
/// is repaired by Moser-Tardos resampling of the lowest-indexed monochromatic
/// edge until none remains.
inline Coloring lll_weak_coloring(const Hypergraph& h, int k, RandomSeed seed,
                                  LllStats* stats = nullptr) {
  if (k <= 1) throw InputError("lll_weak_coloring: k must exceed 1");
  if (h.n == 0) return Coloring{};

  std::vector<std::vector<VertexId>> reduced;
  for (const auto& e : h.edges)
    if (static_cast<int>(e.size()) >= k + 1)
      reduced.emplace_back(e.begin(), e.begin() + (k + 1));
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

  if (reduced.empty()) {
    if (stats) stats->palette_bound = 1;
    return Coloring(std::vector<int>(h.n, 0), 1);
  }

  const int delta = max_degree(h);
  const int palette = detail::lll_palette_size(delta, k);
  if (stats) stats->palette_bound = palette;

  std::mt19937_64 rng(seed.value);
  std::vector<int> colors(h.n);
  for (int v = 0; v < h.n; ++v) colors[v] = static_cast<int>(detail::draw(rng, palette));

  const long long budget = 1000LL * (h.n + h.edge_count());
  long long resamples = 0;
  auto mono = [&](const std::vector<VertexId>& e) {
    for (VertexId v : e)
      if (colors[v] != colors[e[0]]) return false;
    return true;
  };
  while (true) {
    std::size_t bad = reduced.size();
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (mono(reduced[i])) {
        bad = i;
        break;
      }
    if (bad == reduced.size()) break;
    if (++resamples > budget)
      throw ResourceLimitError("lll_weak_coloring: resample budget exceeded");
    for (VertexId v : reduced[bad]) colors[v] = static_cast<int>(detail::draw(rng, palette));
  }
  if (stats) stats->resamples = resamples;
  return Coloring(std::move(colors), palette);
}

struct GeneralKcfStats {
  int peeled = 0;
  long long degree_threshold = 0;
  int framework_palette = 0;
};

/// k-CF coloring of an arbitrary hypergraph with O(m^(1/(k+1)) log^(k/(k+1)) n)
/// colors: vertices in more than Delta* hyperedges are peeled with fresh
/// singleton colors, then the weak-to-CF framework runs on the residual with
/// the local-lemma weak colorer.
inline Coloring k_cf_color_general(const Hypergraph& h, int k, RandomSeed seed,
                                   GeneralKcfStats* stats = nullptr) {
  if (k <= 1) throw InputError("k_cf_color_general: k must exceed 1");
  if (h.n == 0) return Coloring{};
  const long long m = h.edge_count();

  long long threshold = 0;
  if (m > 0) {
    const double logn = std::max(std::log2(static_cast<double>(h.n)), 1.0);
    threshold = static_cast<long long>(
        std::ceil(std::pow(static_cast<double>(m) / logn,
                           static_cast<double>(k) / (k + 1)) -
                  1e-9));
    threshold = std::max<long long>(threshold, 1);
  }
  if (stats) stats->degree_threshold = threshold;

  std::vector<char> edge_alive(h.edges.size(), 1);
  std::vector<char> peeled(h.n, 0);
  std::vector<long long> degree(h.n, 0);
  std::vector<std::vector<int>> edges_of(h.n);
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    for (VertexId v : h.edges[i]) {
      ++degree[v];
      edges_of[v].push_back(static_cast<int>(i));
    }

  std::vector<VertexId> peel_order;
  bool progress = true;
  while (progress) {
    progress = false;
    for (VertexId v = 0; v < h.n; ++v) {
      if (peeled[v] || degree[v] <= threshold) continue;
      peeled[v] = 1;
      peel_order.push_back(v);
      for (int ei : edges_of[v])
        if (edge_alive[ei]) {
          edge_alive[ei] = 0;
          for (VertexId u : h.edges[ei]) --degree[u];
        }
      progress = true;
      break;
    }
  }
  const int p = static_cast<int>(peel_order.size());
  if (stats) stats->peeled = p;
  if (threshold > 0 && p > static_cast<int>(m / threshold) + 1)
    throw InternalInvariantError("peeling used more colors than m/Delta* + 1");

  std::vector<VertexId> keep;
  for (VertexId v = 0; v < h.n; ++v)
    if (!peeled[v]) keep.push_back(v);
  Hypergraph residual;
  residual.n = static_cast<int>(keep.size());
  {
    std::vector<int> remap(h.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      if (!edge_alive[i]) continue;
      std::vector<VertexId> e;
      for (VertexId v : h.edges[i]) e.push_back(remap[v]);
      std::sort(e.begin(), e.end());
      residual.edges.push_back(std::move(e));
    }
    std::sort(residual.edges.begin(), residual.edges.end());
    residual.edges.erase(std::unique(residual.edges.begin(), residual.edges.end()),
                         residual.edges.end());
  }

  std::uint64_t round_salt = 0;
  WeakColorer colorer = [&](const Hypergraph& sub, const std::vector<VertexId>&) {
    ++round_salt;
    return lll_weak_coloring(sub, k, RandomSeed{seed.value ^ (0x9e3779b97f4a7c15ULL * round_salt)});
  };
  const Coloring inner = k_cf_color_via_weak(residual, colorer, k);
  if (stats) stats->framework_palette = inner.palette_size;

  std::vector<int> colors(h.n, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) colors[keep[i]] = inner.colors[i];
  for (int i = 0; i < p; ++i) colors[peel_order[i]] = inner.palette_size + i;
  return Coloring(std::move(colors), inner.palette_size + p);
}

}  // namespace cfcolor
