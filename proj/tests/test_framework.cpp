#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cfcolor/cfcolor.hpp"
#include "test_util.hpp"

using namespace cfcolor;

namespace {

// All contiguous ranges over n collinear points.
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

// Parity of the position inside the surviving subhypergraph: a proper
// 2-coloring of every induced discrete interval hypergraph.
Coloring parity_colorer(const Hypergraph& sub, const std::vector<VertexId>&) {
  std::vector<int> c(sub.n);
  for (int i = 0; i < sub.n; ++i) c[i] = i % 2;
  return Coloring(std::move(c), sub.n >= 2 ? 2 : 1);
}

}  // namespace

TEST_CASE("framework colors an unconstrained hypergraph in one round") {
  Hypergraph h(6, {});
  int calls = 0;
  WeakColorer w = [&](const Hypergraph& sub, const std::vector<VertexId>&) {
    ++calls;
    return parity_colorer(sub, {});
  };
  Coloring c = k_cf_color_via_weak(h, w, 1);
  CHECK(c.palette_size == 1);
  CHECK(calls == 0);  // nothing constrained, flushed immediately
}

TEST_CASE("framework on the discrete interval hypergraph with a parity colorer") {
  const int n = 8;
  Hypergraph h = discrete_hypergraph(n);
  Coloring c = k_cf_color_via_weak(h, parity_colorer, 1);
  CHECK(verify_k_cf(h, c, 1));
  // t = 2 colors per round prunes at least half the vertices.
  CHECK(c.palette_size <= static_cast<int>(std::ceil(std::log2(n))) + 1);
}

TEST_CASE("framework rejects a colorer that is not weak") {
  Hypergraph h(4, {{0, 1}, {1, 2, 3}});
  WeakColorer bad = [](const Hypergraph& sub, const std::vector<VertexId>&) {
    return Coloring(std::vector<int>(sub.n, 0), 1);
  };
  CHECK_THROWS_AS(k_cf_color_via_weak(h, bad, 1), InputError);
}

TEST_CASE("framework rejects a colorer with the wrong length") {
  Hypergraph h(3, {{0, 1, 2}});
  WeakColorer bad = [](const Hypergraph&, const std::vector<VertexId>&) {
    return Coloring({0}, 1);
  };
  CHECK_THROWS_AS(k_cf_color_via_weak(h, bad, 1), InputError);
}

TEST_CASE("framework round count stays within t ln n + 1") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 60);
    Hypergraph h = discrete_hypergraph(n);
    Coloring c = k_cf_color_via_weak(h, parity_colorer, 1);
    REQUIRE(verify_k_cf(h, c, 1));
    CHECK(c.palette_size <= static_cast<int>(2.0 * std::log(n)) + 2);
  }
}

TEST_CASE("framework honors larger k") {
  // Single big hyperedge: with k = 2 a 3-weak colorer suffices.
  Hypergraph h(6, {{0, 1, 2, 3, 4, 5}});
  WeakColorer w = [](const Hypergraph& sub, const std::vector<VertexId>&) {
    std::vector<int> c(sub.n);
    for (int i = 0; i < sub.n; ++i) c[i] = i % 2;
    return Coloring(std::move(c), 2);
  };
  Coloring c = k_cf_color_via_weak(h, w, 2);
  CHECK(verify_k_cf(h, c, 2));
}
