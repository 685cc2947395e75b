#include <catch2/catch_amalgamated.hpp>

#include "cfcolor/cfcolor.hpp"
#include "test_util.hpp"

using namespace cfcolor;

namespace {

Hypergraph discrete_hypergraph(int n) {
  Hypergraph h;
  h.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<VertexId> e;
      for (int v = i; v <= j; ++v) e.push_back(v);
      h.edges.push_back(std::move(e));
    }
  return h;
}

// Unpruned exhaustive enumeration over all palette^n colorings.
bool naive_feasible(const Hypergraph& h, int k, int palette) {
  std::vector<int> colors(h.n, 0);
  while (true) {
    Coloring c(std::vector<int>(colors), std::max(palette, 1));
    if (verify_k_cf(h, c, k)) return true;
    int pos = 0;
    while (pos < h.n && colors[pos] == palette - 1) colors[pos++] = 0;
    if (pos == h.n) return false;
    ++colors[pos];
  }
}

int naive_chromatic(const Hypergraph& h, int k) {
  for (int c = 1; c <= h.n; ++c)
    if (naive_feasible(h, k, c)) return c;
  return h.n;
}

}  // namespace

TEST_CASE("exact oracle anchors") {
  SECTION("discrete interval hypergraph on 7 points needs 3 colors") {
    ExactResult r = exact_k_cf_chromatic(discrete_hypergraph(7), 1);
    CHECK_FALSE(r.exceeded_limit);
    CHECK(r.value == 3);
  }
  SECTION("a single pair hyperedge forces 2 colors") {
    ExactResult r = exact_k_cf_chromatic(Hypergraph(2, {{0, 1}}), 1);
    CHECK(r.value == 2);
  }
  SECTION("frames gadget m=3 needs exactly 3, cross-checked naively") {
    auto frames = gen_frames_clique_gadget(3);
    Hypergraph h = neighborhood_hypergraph(intersection_graph(frames));
    ExactResult r = exact_k_cf_chromatic(h, 1);
    CHECK(r.value == 3);
    CHECK(naive_chromatic(h, 1) == 3);
  }
}

TEST_CASE("oracle agrees with exhaustive enumeration on tiny hypergraphs") {
  std::mt19937_64 rng(157);
  for (int trial = 0; trial < 120; ++trial) {
    Hypergraph h = testutil::random_hypergraph(rng, 6, 6);
    for (int k = 1; k <= 3; ++k) {
      ExactResult r = exact_k_cf_chromatic(h, k);
      CHECK_FALSE(r.exceeded_limit);
      CHECK(r.value == naive_chromatic(h, k));
    }
  }
}

TEST_CASE("oracle is monotone in k") {
  std::mt19937_64 rng(163);
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph h = testutil::random_hypergraph(rng, 8, 8);
    int prev = exact_k_cf_chromatic(h, 1).value;
    for (int k = 2; k <= 3; ++k) {
      const int cur = exact_k_cf_chromatic(h, k).value;
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("color limit is a first-class result") {
  auto items = gen_circle_lower_bound(3, 1);
  Hypergraph h = neighborhood_hypergraph(overlap_graph(items));
  ExactResult r = exact_k_cf_chromatic(h, 1, 2);
  CHECK(r.exceeded_limit);
  CHECK(r.value == 2);
}
