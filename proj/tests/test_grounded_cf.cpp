#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cfcolor/cfcolor.hpp"
#include "test_util.hpp"

using namespace cfcolor;

namespace {

// Incremental unique-color check over all contiguous ranges: O(n^2).
bool all_ranges_cf(const Coloring& c) {
  const int n = static_cast<int>(c.colors.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> count(c.palette_size, 0);
    int uniques = 0;
    for (int j = i; j < n; ++j) {
      const int col = c.colors[j];
      ++count[col];
      if (count[col] == 1)
        ++uniques;
      else if (count[col] == 2)
        --uniques;
      if (uniques == 0) return false;
    }
  }
  return true;
}

// Dual CF check at every covered integer sample point (endpoints and
// midpoints, on doubled coordinates).
bool dual_cf_everywhere(const std::vector<Interval>& items, const Coloring& c) {
  std::set<Coord> samples;
  for (const auto& it : items) {
    samples.insert(2 * it.a);
    samples.insert(2 * it.b);
    samples.insert(it.a + it.b);
  }
  std::vector<Coord> pts(samples.begin(), samples.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) samples.insert((pts[i] + pts[i + 1]) / 2);
  for (Coord x : samples) {
    std::vector<int> hit;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (2 * items[i].a <= x && x <= 2 * items[i].b) hit.push_back(c.colors[i]);
    if (hit.empty()) continue;
    std::sort(hit.begin(), hit.end());
    bool unique = false;
    for (std::size_t i = 0; i < hit.size();) {
      std::size_t j = i;
      while (j < hit.size() && hit[j] == hit[i]) ++j;
      if (j - i == 1) unique = true;
      i = j;
    }
    if (!unique) return false;
  }
  return true;
}

Hypergraph cross_hypergraph(const std::vector<GroundedLShape>& shapes,
                            const std::vector<VertexId>& vertex_side,
                            const std::vector<VertexId>& edge_side) {
  Hypergraph h;
  h.n = static_cast<int>(vertex_side.size());
  for (VertexId e : edge_side) {
    std::vector<VertexId> he;
    for (int i = 0; i < h.n; ++i)
      if (vertex_side[i] != e && grounded_lshapes_intersect(shapes[vertex_side[i]], shapes[e]))
        he.push_back(i);
    if (!he.empty()) h.edges.push_back(std::move(he));
  }
  return h;
}

}  // namespace

TEST_CASE("discrete interval CF coloring") {
  SECTION("n = 7 matches the forced median recursion") {
    Coloring c = discrete_interval_cf(7);
    CHECK(c.colors == std::vector<int>{0, 1, 0, 2, 0, 1, 0});
    CHECK(c.palette_size == 3);
  }
  SECTION("n = 1") {
    Coloring c = discrete_interval_cf(1);
    CHECK(c.colors == std::vector<int>{0});
    CHECK(c.palette_size == 1);
  }
  SECTION("every range has a unique color, palette exactly floor(log2 n)+1") {
    for (int n = 1; n <= 128; ++n) {
      Coloring c = discrete_interval_cf(n);
      int expect = 1;
      for (int x = n; x > 1; x >>= 1) ++expect;
      CHECK(c.palette_size == expect);
      CHECK(all_ranges_cf(c));
    }
  }
}

TEST_CASE("dual interval 3-coloring") {
  SECTION("single interval") {
    Coloring c = dual_interval_proper3({{0, 5}});
    CHECK(c.colors == std::vector<int>{0});
  }
  SECTION("chain with shared endpoints") {
    const std::vector<Interval> items = {{0, 2}, {1, 3}, {2, 4}};
    Coloring c = dual_interval_proper3(items);
    CHECK(c.palette_size <= 3);
    CHECK(dual_cf_everywhere(items, c));
  }
  SECTION("ten copies of one interval") {
    std::vector<Interval> items(10, Interval{0, 4});
    Coloring c = dual_interval_proper3(items);
    int cover = 0;
    for (int col : c.colors)
      if (col == 0) ++cover;
    CHECK(cover == 1);
    CHECK(dual_cf_everywhere(items, c));
  }
  SECTION("random multisets stay CF at every point") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Interval> items;
      const int n = 1 + static_cast<int>(rng() % 25);
      for (int i = 0; i < n; ++i) {
        Coord a = static_cast<Coord>(rng() % 20);
        items.emplace_back(a, a + 1 + static_cast<Coord>(rng() % 15));
      }
      Coloring c = dual_interval_proper3(items);
      CHECK(c.palette_size <= 3);
      CHECK(dual_cf_everywhere(items, c));
    }
  }
}

TEST_CASE("split_and_classify") {
  SECTION("every shape crossing the line empties F_L and F_R") {
    // All basepoints left of all ends; every shape spans the median line.
    std::vector<GroundedLShape> shapes;
    for (int i = 0; i < 6; ++i)
      shapes.emplace_back(i, i + 1, 20 - i);
    SplitClassification sc = split_and_classify(shapes);
    CHECK(sc.f_l.empty());
    CHECK(sc.f_r.empty());
    CHECK(sc.a1.empty());
    CHECK(sc.a3.empty());
    CHECK(sc.f_m.size() == 6);
  }
  SECTION("random families satisfy the classification invariants") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 30; ++trial) {
      auto shapes = random_grounded_lshapes(80, RandomSeed{rng()});
      Graph g = intersection_graph(shapes);
      std::vector<GroundedLShape> active;
      for (int v = 0; v < g.n; ++v)
        if (!g.adj[v].empty()) active.push_back(shapes[v]);
      if (active.size() < 2) continue;
      SplitClassification sc = split_and_classify(active);
      const int n = static_cast<int>(active.size());
      CHECK(static_cast<int>(sc.f_l.size()) <= (n + 1) / 2);
      CHECK(static_cast<int>(sc.f_r.size()) <= n / 2);
      // A1 x A3 has no intersecting pair.
      for (VertexId a : sc.a1)
        for (VertexId b : sc.a3)
          CHECK_FALSE(grounded_lshapes_intersect(active[a], active[b]));
      // F_M2 members have no neighbor inside F_M and equal V_L u V_R.
      std::set<VertexId> fm(sc.f_m.begin(), sc.f_m.end());
      for (VertexId v : sc.f_m2)
        for (VertexId u : sc.f_m)
          if (u != v) CHECK_FALSE(grounded_lshapes_intersect(active[v], active[u]));
      std::set<VertexId> vlr(sc.v_l.begin(), sc.v_l.end());
      vlr.insert(sc.v_r.begin(), sc.v_r.end());
      CHECK(std::vector<VertexId>(vlr.begin(), vlr.end()) == sc.f_m2);
      // I members are pairwise disjoint.
      for (VertexId a : sc.i_set)
        for (VertexId b : sc.i_set)
          if (a < b) CHECK_FALSE(grounded_lshapes_intersect(active[a], active[b]));
      // A1 u A2 u A3 partitions the family.
      CHECK(sc.a1.size() + sc.a2.size() + sc.a3.size() == active.size());
    }
  }
}

TEST_CASE("coloring f1 is proper against the I-set hypergraph") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 30; ++trial) {
    auto shapes = random_grounded_lshapes(60, RandomSeed{rng()});
    Graph g = intersection_graph(shapes);
    std::vector<GroundedLShape> active;
    for (int v = 0; v < g.n; ++v)
      if (!g.adj[v].empty()) active.push_back(shapes[v]);
    if (active.size() < 2) continue;
    SplitClassification sc = split_and_classify(active);
    std::vector<VertexId> x_ids(sc.vp_l);
    x_ids.insert(x_ids.end(), sc.f_m1.begin(), sc.f_m1.end());
    x_ids.insert(x_ids.end(), sc.vp_r.begin(), sc.vp_r.end());
    std::sort(x_ids.begin(), x_ids.end());
    if (x_ids.empty()) continue;
    Coloring f1 = coloring_f1(active, x_ids, sc.i_set);
    CHECK(verify_k_weak(cross_hypergraph(active, x_ids, sc.i_set), f1, 2));
  }
}

TEST_CASE("coloring f2 is a proper 49-coloring of a line-crossing family") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    // Shapes crossing x = 0: negative basepoints, distinct positive ends.
    const int n = 2 + static_cast<int>(rng() % 40);
    std::vector<GroundedLShape> shapes;
    {
      std::set<Coord> used_d, used_e;
      for (int i = 0; i < n; ++i) {
        Coord d, e;
        do {
          d = 1 + static_cast<Coord>(rng() % (4 * n));
        } while (!used_d.insert(d).second);
        do {
          e = 1 + static_cast<Coord>(rng() % (4 * n));
        } while (!used_e.insert(e).second);
        const Coord x = -1 - 2 * i;
        shapes.emplace_back(x, d, e - x);
      }
    }
    std::vector<VertexId> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    Coloring f2 = coloring_f2(shapes, ids, 0);
    CHECK(f2.palette_size <= 49);
    Graph g = intersection_graph(shapes);
    CHECK(verify_k_weak(neighborhood_hypergraph(g), f2, 2));
  }
}

TEST_CASE("colorings f3 through f6 satisfy their contracts") {
  std::mt19937_64 rng(103);
  int exercised = 0;
  for (int trial = 0; trial < 60 && exercised < 25; ++trial) {
    auto shapes = random_grounded_lshapes(70, RandomSeed{rng()});
    Graph g = intersection_graph(shapes);
    std::vector<GroundedLShape> active;
    for (int v = 0; v < g.n; ++v)
      if (!g.adj[v].empty()) active.push_back(shapes[v]);
    if (active.size() < 2) continue;
    SplitClassification sc = split_and_classify(active);
    if (!sc.vp_r.empty() && !sc.v_r.empty()) {
      Coloring f3 = coloring_f3(active, sc.vp_r, sc.v_r);
      CHECK(f3.palette_size <= 6);
      CHECK(verify_k_weak(cross_hypergraph(active, sc.vp_r, sc.v_r), f3, 2));
      ++exercised;
    }
    if (!sc.vp_l.empty() && !sc.v_l.empty()) {
      Coloring f4 = coloring_f4(active, sc.vp_l, sc.v_l);
      CHECK(f4.palette_size <= 3);
      CHECK(verify_k_weak(cross_hypergraph(active, sc.vp_l, sc.v_l), f4, 2));
    }
    if (!sc.f_m2.empty() && !sc.vp_r.empty()) {
      Coloring f5 = coloring_f5(active, sc.f_m2, sc.vp_r);
      CHECK(verify_k_cf(cross_hypergraph(active, sc.f_m2, sc.vp_r), f5, 1));
    }
    if (!sc.f_m2.empty()) {
      Coloring f6 = coloring_f6(active, sc.f_m2, sc.vp_l);
      CHECK(verify_k_cf(cross_hypergraph(active, sc.f_m2, sc.vp_l), f6, 1));
      int cap = 1;
      for (std::size_t x = sc.f_m2.size(); x > 1; x >>= 1) ++cap;
      CHECK(f6.palette_size <= cap);
    }
  }
  CHECK(exercised > 0);
}

TEST_CASE("cf_color_grounded") {
  SECTION("pairwise disjoint family gets the reserved color") {
    std::vector<GroundedLShape> shapes = {{0, 1, 1}, {10, 2, 1}, {20, 3, 1}};
    Coloring c = cf_color_grounded(shapes);
    CHECK(c.palette_size == 1);
  }
  SECTION("two crossing shapes use two colors") {
    std::vector<GroundedLShape> shapes = {{0, 1, 5}, {2, 3, 9}};
    Coloring c = cf_color_grounded(shapes);
    CHECK(c.palette_size == 2);
    CHECK(verify_k_cf(neighborhood_hypergraph(intersection_graph(shapes)), c, 1));
  }
  SECTION("random families verify with no stripped shapes below the root") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 15; ++trial) {
      auto shapes = random_grounded_lshapes(120, RandomSeed{rng()});
      GroundedStats stats;
      GroundedOptions opts;
      opts.check_separation = true;
      Coloring c = cf_color_grounded(shapes, &stats, opts);
      CHECK(verify_k_cf(neighborhood_hypergraph(intersection_graph(shapes)), c, 1));
      CHECK(stats.stripped_isolated_below_root == 0);
      CHECK(stats.a1a3_violations == 0);
      CHECK(stats.max_aux_palette16 <= 16);
      CHECK(stats.g3_density_violations == 0);
    }
  }
}
