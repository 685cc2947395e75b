#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cfcolor/errors.hpp"
#include "cfcolor/geometry.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

/// Tagged container for everything the CLI reads and writes: one shape family
/// or a raw hypergraph.
struct Instance {
  enum class Kind { intervals, grounded_lshapes, corner_lshapes, frames, strings, hypergraph };
  Kind kind = Kind::intervals;
  std::vector<Interval> intervals;
  std::vector<GroundedLShape> grounded;
  std::vector<CornerLShape> corners;
  std::vector<Frame> frames;
  std::vector<Polyline> strings;
  Hypergraph hyper;

  int size() const {
    switch (kind) {
      case Kind::intervals: return static_cast<int>(intervals.size());
      case Kind::grounded_lshapes: return static_cast<int>(grounded.size());
      case Kind::corner_lshapes: return static_cast<int>(corners.size());
      case Kind::frames: return static_cast<int>(frames.size());
      case Kind::strings: return static_cast<int>(strings.size());
      case Kind::hypergraph: return hyper.n;
    }
    return 0;
  }
};

inline const char* kind_name(Instance::Kind k) {
  switch (k) {
    case Instance::Kind::intervals: return "intervals";
    case Instance::Kind::grounded_lshapes: return "grounded_lshapes";
    case Instance::Kind::corner_lshapes: return "corner_lshapes";
    case Instance::Kind::frames: return "frames";
    case Instance::Kind::strings: return "strings";
    case Instance::Kind::hypergraph: return "hypergraph";
  }
  return "?";
}

inline Instance::Kind kind_from_name(const std::string& s) {
  for (auto k : {Instance::Kind::intervals, Instance::Kind::grounded_lshapes,
                 Instance::Kind::corner_lshapes, Instance::Kind::frames,
                 Instance::Kind::strings, Instance::Kind::hypergraph})
    if (s == kind_name(k)) return k;
  throw InputError("unknown instance kind: " + s);
}

namespace detail {

inline Coord json_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer())
    throw InputError(std::string("instance file: expected an integer for ") + what);
  return j.get<long long>();
}

}  // namespace detail

inline Instance parse_instance(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("items"))
    throw InputError("instance file: need an object with kind and items");
  Instance inst;
  inst.kind = kind_from_name(j.at("kind").get<std::string>());
  const auto& items = j.at("items");
  if (inst.kind == Instance::Kind::hypergraph) {
    if (!items.is_object()) throw InputError("hypergraph items must be an object");
    Hypergraph h;
    h.n = static_cast<int>(detail::json_int(items.at("n"), "n"));
    for (const auto& e : items.at("edges")) {
      std::vector<VertexId> edge;
      for (const auto& v : e) edge.push_back(static_cast<int>(detail::json_int(v, "vertex id")));
      h.edges.push_back(std::move(edge));
    }
    h.validate();
    inst.hyper = std::move(h);
    return inst;
  }
  if (!items.is_array()) throw InputError("instance items must be an array");
  for (const auto& it : items) {
    switch (inst.kind) {
      case Instance::Kind::intervals:
        if (it.size() != 2) throw InputError("interval needs [a, b]");
        inst.intervals.emplace_back(detail::json_int(it[0], "a"), detail::json_int(it[1], "b"));
        break;
      case Instance::Kind::grounded_lshapes:
        if (it.size() != 3) throw InputError("grounded L-shape needs [x, depth, width]");
        inst.grounded.emplace_back(detail::json_int(it[0], "x"), detail::json_int(it[1], "depth"),
                                   detail::json_int(it[2], "width"));
        break;
      case Instance::Kind::corner_lshapes:
        if (it.size() != 4) throw InputError("corner L-shape needs [x, y, height, width]");
        inst.corners.emplace_back(detail::json_int(it[0], "x"), detail::json_int(it[1], "y"),
                                  detail::json_int(it[2], "height"),
                                  detail::json_int(it[3], "width"));
        break;
      case Instance::Kind::frames:
        if (it.size() != 4) throw InputError("frame needs [x1, y1, x2, y2]");
        inst.frames.emplace_back(detail::json_int(it[0], "x1"), detail::json_int(it[1], "y1"),
                                 detail::json_int(it[2], "x2"), detail::json_int(it[3], "y2"));
        break;
      case Instance::Kind::strings: {
        std::vector<Point> pts;
        for (const auto& p : it) {
          if (p.size() != 2) throw InputError("string vertex needs [x, y]");
          pts.push_back({detail::json_int(p[0], "x"), detail::json_int(p[1], "y")});
        }
        inst.strings.emplace_back(std::move(pts));
        break;
      }
      case Instance::Kind::hypergraph: break;  // handled above
    }
  }
  return inst;
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["kind"] = kind_name(inst.kind);
  nlohmann::json items;
  switch (inst.kind) {
    case Instance::Kind::intervals:
      items = nlohmann::json::array();
      for (const auto& x : inst.intervals) items.push_back({x.a, x.b});
      break;
    case Instance::Kind::grounded_lshapes:
      items = nlohmann::json::array();
      for (const auto& x : inst.grounded) items.push_back({x.x, x.depth, x.width});
      break;
    case Instance::Kind::corner_lshapes:
      items = nlohmann::json::array();
      for (const auto& x : inst.corners) items.push_back({x.x, x.y, x.height, x.width});
      break;
    case Instance::Kind::frames:
      items = nlohmann::json::array();
      for (const auto& x : inst.frames) items.push_back({x.x1, x.y1, x.x2, x.y2});
      break;
    case Instance::Kind::strings:
      items = nlohmann::json::array();
      for (const auto& s : inst.strings) {
        nlohmann::json pl = nlohmann::json::array();
        for (const auto& p : s.vertices) pl.push_back({p.x, p.y});
        items.push_back(std::move(pl));
      }
      break;
    case Instance::Kind::hypergraph:
      items["n"] = inst.hyper.n;
      items["edges"] = inst.hyper.edges;
      break;
  }
  j["items"] = std::move(items);
  return j;
}

inline GeneralPositionReport check_general_position(const Instance& inst) {
  switch (inst.kind) {
    case Instance::Kind::intervals: return check_general_position(inst.intervals);
    case Instance::Kind::grounded_lshapes: return check_general_position(inst.grounded);
    case Instance::Kind::corner_lshapes: return check_general_position(inst.corners);
    case Instance::Kind::frames: return check_general_position(inst.frames);
    case Instance::Kind::strings: return check_general_position(inst.strings);
    case Instance::Kind::hypergraph: return {};
  }
  return {};
}

/// Deterministic symbolic perturbation of an instance. Strings admit no
/// adjacency-preserving coordinate perturbation, so they are only validated.
inline Instance normalize(const Instance& inst) {
  Instance out = inst;
  switch (inst.kind) {
    case Instance::Kind::intervals: out.intervals = normalize(inst.intervals); break;
    case Instance::Kind::grounded_lshapes: out.grounded = normalize(inst.grounded); break;
    case Instance::Kind::corner_lshapes: out.corners = normalize(inst.corners); break;
    case Instance::Kind::frames: out.frames = normalize(inst.frames); break;
    case Instance::Kind::strings: {
      const auto rep = check_general_position(inst.strings);
      if (!rep.ok)
        throw InputError("strings instance is degenerate and cannot be normalized: " +
                         rep.violations.front().reason);
      break;
    }
    case Instance::Kind::hypergraph: break;
  }
  return out;
}

/// The hypergraph an instance is verified against: the instance itself for
/// raw hypergraphs, otherwise the neighborhood hypergraph of the overlap or
/// intersection graph.
inline Hypergraph instance_hypergraph(const Instance& inst) {
  switch (inst.kind) {
    case Instance::Kind::intervals: return neighborhood_hypergraph(overlap_graph(inst.intervals));
    case Instance::Kind::grounded_lshapes:
      return neighborhood_hypergraph(intersection_graph(inst.grounded));
    case Instance::Kind::corner_lshapes:
      return neighborhood_hypergraph(intersection_graph(inst.corners));
    case Instance::Kind::frames: return neighborhood_hypergraph(intersection_graph(inst.frames));
    case Instance::Kind::strings: return neighborhood_hypergraph(intersection_graph(inst.strings));
    case Instance::Kind::hypergraph: return inst.hyper;
  }
  return {};
}

struct ColoringFile {
  Coloring coloring;
  std::string algo;
  int k = 1;
  bool verified = false;
};

inline nlohmann::json coloring_to_json(const ColoringFile& cf) {
  nlohmann::json j;
  j["colors"] = cf.coloring.colors;
  j["palette_size"] = cf.coloring.palette_size;
  j["algo"] = cf.algo;
  j["k"] = cf.k;
  j["verified"] = cf.verified;
  return j;
}

inline ColoringFile parse_coloring(const nlohmann::json& j) {
  ColoringFile cf;
  if (!j.is_object() || !j.contains("colors") || !j.contains("palette_size"))
    throw InputError("coloring file: need colors and palette_size");
  for (const auto& c : j.at("colors"))
    cf.coloring.colors.push_back(static_cast<int>(detail::json_int(c, "color")));
  cf.coloring.palette_size = static_cast<int>(detail::json_int(j.at("palette_size"), "palette"));
  cf.coloring.validate();
  cf.algo = j.value("algo", std::string{});
  cf.k = j.value("k", 1);
  cf.verified = j.value("verified", false);
  return cf;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

inline void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace cfcolor
