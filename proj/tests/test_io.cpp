#include <catch2/catch_amalgamated.hpp>

#include "cfcolor/cfcolor.hpp"
#include "test_util.hpp"

using namespace cfcolor;

TEST_CASE("instance JSON round-trips byte-identically") {
  std::vector<Instance> cases;
  {
    Instance a;
    a.kind = Instance::Kind::intervals;
    a.intervals = gen_circle_lower_bound(2, 1);
    cases.push_back(a);
    Instance b;
    b.kind = Instance::Kind::grounded_lshapes;
    b.grounded = random_grounded_lshapes(9, RandomSeed{4});
    cases.push_back(b);
    Instance c;
    c.kind = Instance::Kind::corner_lshapes;
    c.corners = random_corner_lshapes(9, RandomSeed{4});
    cases.push_back(c);
    Instance d;
    d.kind = Instance::Kind::frames;
    d.frames = gen_frames_clique_gadget(3);
    cases.push_back(d);
    Instance e;
    e.kind = Instance::Kind::strings;
    e.strings = {Polyline({{0, 0}, {2, 3}, {4, 0}}), Polyline({{0, 2}, {4, 2}})};
    cases.push_back(e);
    Instance f;
    f.kind = Instance::Kind::hypergraph;
    f.hyper = gen_gbonc(complete_graph(4), 1);
    cases.push_back(f);
  }
  for (const auto& inst : cases) {
    const std::string once = instance_to_json(inst).dump(2);
    const Instance parsed = parse_instance(nlohmann::json::parse(once));
    CHECK(instance_to_json(parsed).dump(2) == once);
    CHECK(parsed.size() == inst.size());
  }
}

TEST_CASE("coloring file round-trip") {
  ColoringFile cf;
  cf.coloring = Coloring({0, 1, 2, 0}, 3);
  cf.algo = "circle-cf";
  cf.k = 1;
  cf.verified = true;
  const auto j = coloring_to_json(cf);
  ColoringFile back = parse_coloring(j);
  CHECK(back.coloring.colors == cf.coloring.colors);
  CHECK(back.coloring.palette_size == 3);
  CHECK(back.algo == "circle-cf");
  CHECK(back.verified);
}

TEST_CASE("malformed files are rejected with input errors") {
  CHECK_THROWS_AS(parse_instance(nlohmann::json::parse(R"({"kind":"nope","items":[]})")),
                  InputError);
  CHECK_THROWS_AS(parse_instance(nlohmann::json::parse(R"({"items":[]})")), InputError);
  CHECK_THROWS_AS(parse_instance(nlohmann::json::parse(R"({"kind":"intervals","items":[[1]]})")),
                  InputError);
  CHECK_THROWS_AS(
      parse_instance(nlohmann::json::parse(R"({"kind":"intervals","items":[[1,0.5]]})")),
      InputError);
  CHECK_THROWS_AS(parse_coloring(nlohmann::json::parse(R"({"colors":[0]})")), InputError);
}

TEST_CASE("instance hypergraph matches the family's neighborhoods") {
  Instance inst;
  inst.kind = Instance::Kind::intervals;
  inst.intervals = {{0, 3}, {2, 5}, {4, 7}};
  Hypergraph h = instance_hypergraph(inst);
  CHECK(h.n == 3);
  CHECK(h.edges.size() == 3);

  Instance raw;
  raw.kind = Instance::Kind::hypergraph;
  raw.hyper = Hypergraph(3, {{0, 1, 2}});
  CHECK(instance_hypergraph(raw).edges == raw.hyper.edges);
}

TEST_CASE("instance normalization") {
  Instance inst;
  inst.kind = Instance::Kind::intervals;
  inst.intervals = {{0, 2}, {0, 3}};
  Instance fixed = normalize(inst);
  CHECK(check_general_position(fixed).ok);

  Instance strings;
  strings.kind = Instance::Kind::strings;
  strings.strings = {Polyline({{0, 0}, {2, 0}}), Polyline({{1, 0}, {1, 2}})};
  CHECK_THROWS_AS(normalize(strings), InputError);
  strings.strings = {Polyline({{0, -1}, {2, 1}}), Polyline({{0, 1}, {2, -1}})};
  CHECK_NOTHROW(normalize(strings));
}
