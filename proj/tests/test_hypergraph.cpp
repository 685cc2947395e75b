#include <catch2/catch_amalgamated.hpp>

#include "cfcolor/cfcolor.hpp"
#include "test_util.hpp"

using namespace cfcolor;

TEST_CASE("hypergraph validation") {
  CHECK_NOTHROW(Hypergraph(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(Hypergraph(3, {{}}), InputError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Hypergraph(3, {{1, 0}}), InputError);
  CHECK_THROWS_AS(Hypergraph(3, {{1, 1}}), InputError);
}

TEST_CASE("neighborhood hypergraph") {
  SECTION("path 0-1-2") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Hypergraph h = neighborhood_hypergraph(g);
    REQUIRE(h.edges.size() == 3);
    CHECK(h.edges[0] == std::vector<VertexId>{1});
    CHECK(h.edges[1] == std::vector<VertexId>{0, 2});
    CHECK(h.edges[2] == std::vector<VertexId>{1});
  }
  SECTION("edgeless graph contributes no hyperedges") {
    Graph g(4);
    g.adj.resize(4);
    CHECK(neighborhood_hypergraph(g).edges.empty());
  }
  SECTION("triangle") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    Hypergraph h = neighborhood_hypergraph(g);
    REQUIRE(h.edges.size() == 3);
    CHECK(h.edges[0] == std::vector<VertexId>{1, 2});
    CHECK(h.edges[1] == std::vector<VertexId>{0, 2});
    CHECK(h.edges[2] == std::vector<VertexId>{0, 1});
  }
}

TEST_CASE("induced subhypergraph") {
  Hypergraph h(3, {{0, 1, 2}});
  SECTION("restriction with remap") {
    auto [sub, ids] = induced_subhypergraph(h, {0, 2});
    CHECK(sub.n == 2);
    REQUIRE(sub.edges.size() == 1);
    CHECK(sub.edges[0] == std::vector<VertexId>{0, 1});
    CHECK(ids == std::vector<VertexId>{0, 2});
  }
  SECTION("keep everything is the identity up to remap") {
    auto [sub, ids] = induced_subhypergraph(h, {0, 1, 2});
    CHECK(sub.n == 3);
    CHECK(sub.edges == h.edges);
  }
  SECTION("empty restriction drops the hyperedge") {
    Hypergraph h2(3, {{0, 1}});
    auto [sub, ids] = induced_subhypergraph(h2, {2});
    CHECK(sub.n == 1);
    CHECK(sub.edges.empty());
  }
  SECTION("out-of-range id") {
    CHECK_THROWS_AS(induced_subhypergraph(h, {5}), InputError);
  }
}

TEST_CASE("verify_k_cf on the worked examples") {
  CHECK_FALSE(verify_k_cf(Hypergraph(3, {{0, 1}, {1, 2}}), Coloring({0, 0, 1}, 2), 1));
  CHECK(verify_k_cf(Hypergraph(2, {{0}}), Coloring({0, 0}, 1), 1));
  CHECK(verify_k_cf(Hypergraph(3, {{0, 1, 2}}), Coloring({0, 0, 1}, 2), 2));
  CHECK_THROWS_AS(verify_k_cf(Hypergraph(3, {{0, 1}}), Coloring({0, 0}, 1), 1), InputError);
}

TEST_CASE("verify_k_weak on the worked examples") {
  CHECK_FALSE(verify_k_weak(Hypergraph(3, {{0, 1, 2}}), Coloring({0, 0, 0}, 1), 3));
  CHECK(verify_k_weak(Hypergraph(2, {{0, 1}}), Coloring({0, 0}, 1), 3));
  CHECK(verify_k_weak(Hypergraph(2, {{0, 1}}), Coloring({0, 1}, 2), 2));
}

TEST_CASE("verifier oracle equivalence on random triples") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 400; ++trial) {
    Hypergraph h = testutil::random_hypergraph(rng, 30, 12);
    const int k = 1 + static_cast<int>(rng() % 3);
    Coloring c = testutil::random_coloring(rng, h.n, 1 + static_cast<int>(rng() % 4));
    CHECK(verify_k_cf(h, c, k) == testutil::naive_k_cf(h, c, k));
    CHECK(verify_k_weak(h, c, k) == testutil::naive_k_weak(h, c, k));
    // CF with k=1 implies k-CF for every larger k.
    if (verify_k_cf(h, c, 1)) CHECK(verify_k_cf(h, c, k));
    // 2-weak is exactly properness of the hypergraph.
    bool proper = true;
    for (const auto& e : h.edges) {
      if (e.size() < 2) continue;
      bool mono = true;
      for (VertexId v : e) mono = mono && c.colors[v] == c.colors[e[0]];
      proper = proper && !mono;
    }
    CHECK(verify_k_weak(h, c, 2) == proper);
  }
}

TEST_CASE("max_degree") {
  // Fano plane: 7 points, 7 lines, every point on 3 lines.
  Hypergraph fano(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  CHECK(max_degree(fano) == 3);
  CHECK(max_degree(Hypergraph(3, {{0, 1}, {0, 2}})) == 2);
  CHECK(max_degree(Hypergraph(3, {})) == 0);
}

TEST_CASE("degeneracy coloring") {
  SECTION("trees use at most 2 colors") {
    Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}, {5, 7}});
    Coloring c = degeneracy_color(g);
    CHECK(c.palette_size <= 2);
    CHECK(is_proper_graph_coloring(g, c));
  }
  SECTION("K4 needs exactly 4") {
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Coloring c = degeneracy_color(g);
    CHECK(c.palette_size == 4);
    CHECK(is_proper_graph_coloring(g, c));
  }
  SECTION("C5 stays within 3") {
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Coloring c = degeneracy_color(g);
    CHECK(c.palette_size <= 3);
    CHECK(is_proper_graph_coloring(g, c));
  }
  SECTION("random graphs: proper, palette within degeneracy+1") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      Graph g = testutil::random_graph(rng, 2 + static_cast<int>(rng() % 30), 20.0);
      int degeneracy = 0;
      Coloring c = degeneracy_color(g, &degeneracy);
      CHECK(is_proper_graph_coloring(g, c));
      CHECK(c.palette_size <= degeneracy + 1);
      CHECK(degeneracy_order(g).degeneracy == degeneracy);
    }
  }
}
