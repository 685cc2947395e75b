#include <catch2/catch_amalgamated.hpp>

#include "cfcolor/cfcolor.hpp"
#include "test_util.hpp"

using namespace cfcolor;

namespace {

bool same_adjacency(const Graph& a, const Graph& b) {
  return a.n == b.n && a.adj == b.adj;
}

}  // namespace

TEST_CASE("intervals_overlap") {
  CHECK(intervals_overlap({0, 2}, {1, 3}));
  CHECK(intervals_overlap({1, 3}, {0, 2}));
  CHECK_FALSE(intervals_overlap({0, 4}, {1, 2}));
  CHECK_FALSE(intervals_overlap({0, 1}, {2, 3}));
  CHECK_THROWS_AS(intervals_overlap({0, 2}, {2, 3}), GeneralPositionError);
}

TEST_CASE("overlap_graph") {
  SECTION("staggered path") {
    Graph g = overlap_graph({{0, 3}, {2, 5}, {4, 7}});
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
  }
  SECTION("nested chain is edgeless") {
    Graph g = overlap_graph({{0, 9}, {1, 8}, {2, 7}});
    CHECK(g.edge_count() == 0);
  }
  SECTION("pairwise overlapping triple") {
    Graph g = overlap_graph({{0, 4}, {1, 5}, {3, 6}});
    CHECK(g.edge_count() == 3);
  }
  SECTION("shared endpoints rejected") {
    CHECK_THROWS_AS(overlap_graph({{0, 2}, {2, 4}}), GeneralPositionError);
  }
  SECTION("sweep agrees with the pairwise predicate") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      auto items = random_intervals(30, RandomSeed{rng()});
      Graph fast = overlap_graph(items);
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < 30; ++i)
        for (int j = i + 1; j < 30; ++j)
          if (intervals_overlap(items[i], items[j])) edges.push_back({i, j});
      CHECK(same_adjacency(fast, Graph::from_edges(30, std::move(edges))));
    }
  }
}

TEST_CASE("grounded_lshapes_intersect") {
  CHECK(grounded_lshapes_intersect({0, 1, 5}, {2, 3, 1}));
  CHECK(grounded_lshapes_intersect({2, 3, 1}, {0, 1, 5}));
  CHECK_FALSE(grounded_lshapes_intersect({0, 3, 5}, {2, 1, 9}));
  CHECK_FALSE(grounded_lshapes_intersect({0, 1, 1}, {5, 2, 1}));
  CHECK_THROWS_AS(grounded_lshapes_intersect({0, 1, 5}, {0, 2, 3}), GeneralPositionError);
  CHECK_THROWS_AS(grounded_lshapes_intersect({0, 1, 5}, {5, 2, 3}), GeneralPositionError);
}

TEST_CASE("frames_intersect") {
  CHECK(frames_intersect({0, 0, 4, 4}, {2, 2, 6, 6}));
  CHECK_FALSE(frames_intersect({0, 0, 6, 6}, {2, 2, 4, 4}));
  CHECK_FALSE(frames_intersect({0, 0, 1, 1}, {2, 2, 3, 3}));
  CHECK_THROWS_AS(frames_intersect({0, 0, 4, 4}, {4, 5, 8, 9}), GeneralPositionError);
}

TEST_CASE("corner_lshapes_intersect") {
  CHECK(corner_lshapes_intersect({0, 0, 4, 4}, {2, -2, 4, 4}));
  CHECK(corner_lshapes_intersect({2, -2, 4, 4}, {0, 0, 4, 4}));
  CHECK_FALSE(corner_lshapes_intersect({0, 0, 1, 1}, {10, 10, 2, 2}));
  CHECK_FALSE(corner_lshapes_intersect({0, 0, 1, 1}, {0, 5, 1, 1}));
  // Vertical of one ending exactly on the horizontal of the other.
  CHECK_THROWS_AS(corner_lshapes_intersect({0, 0, 4, 4}, {2, -4, 4, 4}), GeneralPositionError);
}

TEST_CASE("to_grounded_lshapes") {
  SECTION("depth ranks follow right endpoints") {
    const std::vector<Interval> w = {{0, 3}, {5, 7}, {2, 8}};  // W1, W2, W3
    auto ls = to_grounded_lshapes(w);
    CHECK(ls[0].depth == 1);
    CHECK(ls[1].depth == 2);
    CHECK(ls[2].depth == 3);
    // W3's vertical (x=2, depth 3) crosses W1's horizontal (y=-1, span [0,3]).
    CHECK(grounded_lshapes_intersect(ls[0], ls[2]));
    CHECK(ls[2].x == 2);
  }
  SECTION("single interval maps to a single shape") {
    auto ls = to_grounded_lshapes({{3, 9}});
    REQUIRE(ls.size() == 1);
    CHECK(ls[0].x == 3);
    CHECK(ls[0].width == 6);
  }
  SECTION("adjacency preserved exactly on random families") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      auto items = random_intervals(50, RandomSeed{rng()});
      CHECK(same_adjacency(overlap_graph(items), intersection_graph(to_grounded_lshapes(items))));
    }
  }
}

TEST_CASE("to_frames") {
  SECTION("containment chain heights") {
    auto h = containment_chain_heights({{0, 9}, {1, 8}});
    CHECK(h[0] == 2);
    CHECK(h[1] == 1);
    auto frames = to_frames({{0, 9}, {1, 8}});
    CHECK_FALSE(frames_intersect(frames[0], frames[1]));
  }
  SECTION("overlapping pair crosses") {
    auto frames = to_frames({{0, 3}, {2, 5}});
    CHECK(frames_intersect(frames[0], frames[1]));
  }
  SECTION("adjacency preserved exactly on random families") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
      auto items = random_intervals(50, RandomSeed{rng()});
      CHECK(same_adjacency(overlap_graph(items), intersection_graph(to_frames(items))));
    }
  }
}

TEST_CASE("grounded_to_overlap") {
  SECTION("direct formula") {
    auto iv = grounded_to_overlap({{2, 3, 9}}, 4);
    REQUIRE(iv.size() == 1);
    CHECK(iv[0].a == -2);
    CHECK(iv[0].b == 3);
  }
  SECTION("empty input") {
    CHECK(grounded_to_overlap({}, 5).empty());
  }
  SECTION("shape not crossing the line") {
    CHECK_THROWS_AS(grounded_to_overlap({{0, 2, 3}}, 10), InputError);
  }
  SECTION("overlap graph of the view equals the intersection graph") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
      auto all = random_grounded_lshapes(40, RandomSeed{rng()});
      const Coord line = 2 * 40;  // keep only shapes crossing the middle
      std::vector<GroundedLShape> crossing;
      for (auto& l : all)
        if (l.x < line && line < l.end()) crossing.push_back(l);
      if (crossing.size() < 2) continue;
      auto view = grounded_to_overlap(crossing, line);
      CHECK(same_adjacency(overlap_graph(view), intersection_graph(crossing)));
    }
  }
}

TEST_CASE("polyline_crossings") {
  SECTION("single diagonal crossing at the midpoint") {
    Polyline a({{0, 0}, {2, 2}});
    Polyline b({{0, 2}, {2, 0}});
    auto xs = polyline_crossings(a, b);
    REQUIRE(xs.size() == 1);
    CHECK(xs[0].t_a == Rational(1, 2));
    CHECK(xs[0].t_b == Rational(1, 2));
  }
  SECTION("disjoint polylines") {
    CHECK(polyline_crossings(Polyline({{0, 0}, {1, 0}}), Polyline({{0, 5}, {1, 5}})).empty());
  }
  SECTION("zigzag crossing a horizontal line three times, in order") {
    Polyline zig({{0, -1}, {2, 1}, {4, -1}, {6, 1}});
    Polyline line({{-1, 0}, {7, 0}});
    auto xs = polyline_crossings(zig, line);
    REQUIRE(xs.size() == 3);
    CHECK(xs[0].seg_a == 0);
    CHECK(xs[1].seg_a == 1);
    CHECK(xs[2].seg_a == 2);
    // Brute-force pair count agrees.
    int brute = 0;
    for (int i = 0; i + 1 < static_cast<int>(zig.vertices.size()); ++i)
      for (int j = 0; j + 1 < static_cast<int>(line.vertices.size()); ++j)
        if (segments_cross(zig.vertices[i], zig.vertices[i + 1], line.vertices[j],
                           line.vertices[j + 1])
                .rel == SegRelation::proper_cross)
          ++brute;
    CHECK(brute == 3);
    // Same crossing set viewed from the other polyline.
    auto ys = polyline_crossings(line, zig);
    CHECK(ys.size() == xs.size());
  }
  SECTION("touching configurations are degenerate") {
    CHECK_THROWS_AS(polyline_crossings(Polyline({{0, 0}, {2, 0}}), Polyline({{1, 0}, {1, 2}})),
                    GeneralPositionError);
    CHECK_THROWS_AS(polyline_crossings(Polyline({{0, 0}, {2, 0}}), Polyline({{1, 0}, {3, 0}})),
                    GeneralPositionError);
  }
}

TEST_CASE("general position and normalization") {
  SECTION("tied interval endpoints get separated, order preserved") {
    const std::vector<Interval> raw = {{0, 2}, {0, 3}};
    CHECK_FALSE(check_general_position(raw).ok);
    auto fixed = normalize(raw);
    CHECK(check_general_position(fixed).ok);
    CHECK(fixed[0].a < fixed[1].a);  // tie broken by input rank, earlier = smaller
    CHECK(intervals_overlap(fixed[0], fixed[1]));
  }
  SECTION("general-position input returned unchanged") {
    const std::vector<Interval> raw = {{0, 2}, {5, 9}};
    auto fixed = normalize(raw);
    CHECK(fixed[0].a == 0);
    CHECK(fixed[1].b == 9);
  }
  SECTION("normalization is stable on tie-heavy inputs") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Interval> raw;
      for (int i = 0; i < 20; ++i) {
        Coord a = static_cast<Coord>(rng() % 10);
        Coord b = a + 1 + static_cast<Coord>(rng() % 10);
        raw.emplace_back(a, b);
      }
      auto fixed = normalize(raw);
      CHECK(check_general_position(fixed).ok);
      // A second pass changes nothing: the instance is already separated.
      auto twice = normalize(fixed);
      CHECK(same_adjacency(overlap_graph(fixed), overlap_graph(twice)));
    }
  }
  SECTION("grounded, frame and corner normalization produce general position") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<GroundedLShape> gl;
      std::vector<Frame> fr;
      std::vector<CornerLShape> cl;
      for (int i = 0; i < 15; ++i) {
        gl.emplace_back(rng() % 8, 1 + rng() % 8, 1 + rng() % 8);
        Coord x = rng() % 8, y = rng() % 8;
        fr.emplace_back(x, y, x + 1 + rng() % 8, y + 1 + rng() % 8);
        cl.emplace_back(rng() % 8, rng() % 8, 1 + rng() % 8, 1 + rng() % 8);
      }
      CHECK(check_general_position(normalize(gl)).ok);
      CHECK(check_general_position(normalize(fr)).ok);
      CHECK(check_general_position(normalize(cl)).ok);
    }
  }
  SECTION("random generator families are already in general position") {
    for (unsigned long s = 0; s < 20; ++s) {
      CHECK(check_general_position(random_intervals(40, RandomSeed{s})).ok);
      CHECK(check_general_position(random_grounded_lshapes(40, RandomSeed{s})).ok);
      CHECK(check_general_position(random_frames(40, RandomSeed{s})).ok);
      CHECK(check_general_position(random_corner_lshapes(40, RandomSeed{s})).ok);
    }
  }
}
