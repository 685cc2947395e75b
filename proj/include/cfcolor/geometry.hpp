#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "cfcolor/errors.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

using Coord = long long;
using Rational = boost::rational<long long>;

// Segment-crossing arithmetic multiplies coordinate differences; keeping
// inputs below this bound keeps every product inside 64 bits.
inline constexpr Coord kMaxExactCoord = 1LL << 30;

struct Point {
  Coord x = 0, y = 0;
  bool operator==(const Point&) const = default;
};

/// Closed interval [a, b] on a line, a < b.
struct Interval {
  Coord a = 0, b = 1;

  Interval() = default;
  Interval(Coord a_, Coord b_) : a(a_), b(b_) {
    if (a >= b) throw InputError("interval: requires a < b");
  }
  Coord length() const { return b - a; }
};

/// L-shape grounded on the baseline y = 0: vertical part from (x, 0) down to
/// (x, -depth), horizontal part from (x, -depth) right to (x+width, -depth).
struct GroundedLShape {
  Coord x = 0;
  Coord depth = 1;
  Coord width = 1;

  GroundedLShape() = default;
  GroundedLShape(Coord x_, Coord depth_, Coord width_)
      : x(x_), depth(depth_), width(width_) {
    if (depth <= 0 || width <= 0)
      throw InputError("grounded L-shape: depth and width must be positive");
  }
  Coord end() const { return x + width; }
};

/// L-shape opening up and right: vertical from (x, y) up to (x, y+height),
/// horizontal from (x, y) right to (x+width, y).
struct CornerLShape {
  Coord x = 0, y = 0;
  Coord height = 1;
  Coord width = 1;

  CornerLShape() = default;
  CornerLShape(Coord x_, Coord y_, Coord height_, Coord width_)
      : x(x_), y(y_), height(height_), width(width_) {
    if (height <= 0 || width <= 0)
      throw InputError("corner L-shape: height and width must be positive");
  }
};

/// Boundary of the axis-parallel rectangle [x1, x2] x [y1, y2].
struct Frame {
  Coord x1 = 0, y1 = 0, x2 = 1, y2 = 1;

  Frame() = default;
  Frame(Coord x1_, Coord y1_, Coord x2_, Coord y2_)
      : x1(x1_), y1(y1_), x2(x2_), y2(y2_) {
    if (x1 >= x2 || y1 >= y2) throw InputError("frame: requires x1 < x2 and y1 < y2");
  }
};

/// Piecewise-linear curve. Consecutive vertices must be distinct.
struct Polyline {
  std::vector<Point> vertices;

  Polyline() = default;
  explicit Polyline(std::vector<Point> vs) : vertices(std::move(vs)) { validate(); }

  void validate() const {
    if (vertices.size() < 2) throw InputError("polyline: needs at least 2 vertices");
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (vertices[i] == vertices[i - 1])
        throw InputError("polyline: zero-length segment");
  }
  int segment_count() const { return static_cast<int>(vertices.size()) - 1; }
};

// ---------------------------------------------------------------------------
// Exact segment arithmetic
// ---------------------------------------------------------------------------

namespace detail {

inline long long cross(Coord ax, Coord ay, Coord bx, Coord by) {
  return ax * by - ay * bx;
}

inline void check_exact_range(Point p) {
  if (p.x > kMaxExactCoord || p.x < -kMaxExactCoord || p.y > kMaxExactCoord ||
      p.y < -kMaxExactCoord)
    throw InputError("coordinate exceeds exact-arithmetic range");
}

}  // namespace detail

enum class SegRelation { disjoint, proper_cross, touch, collinear_overlap };

struct SegCrossResult {
  SegRelation rel = SegRelation::disjoint;
  Rational t1;  // parameter along the first segment, valid for proper_cross
  Rational t2;  // parameter along the second segment
};

/// Classifies the intersection of closed segments ab and cd. Parameters are
/// exact rationals in (0, 1) for transversal crossings.
inline SegCrossResult segments_cross(Point a, Point b, Point c, Point d) {
  detail::check_exact_range(a);
  detail::check_exact_range(b);
  detail::check_exact_range(c);
  detail::check_exact_range(d);
  const Coord d1x = b.x - a.x, d1y = b.y - a.y;
  const Coord d2x = d.x - c.x, d2y = d.y - c.y;
  const long long denom = detail::cross(d1x, d1y, d2x, d2y);
  const Coord acx = c.x - a.x, acy = c.y - a.y;
  if (denom == 0) {
    if (detail::cross(acx, acy, d1x, d1y) != 0) return {};  // parallel, apart
    // Collinear: project on the dominant axis and compare 1D extents.
    auto key = [&](Point p) { return (d1x != 0 || d2x != 0) ? p.x : p.y; };
    Coord lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    Coord lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    if (hi1 < lo2 || hi2 < lo1) return {};
    if (hi1 == lo2 || hi2 == lo1) return {SegRelation::touch, {}, {}};
    return {SegRelation::collinear_overlap, {}, {}};
  }
  const long long tn = detail::cross(acx, acy, d2x, d2y);
  const long long un = detail::cross(acx, acy, d1x, d1y);
  // t = tn/denom along ab, u = un/denom along cd.
  auto outside = [&](long long num) {
    return denom > 0 ? (num < 0 || num > denom) : (num > 0 || num < denom);
  };
  auto boundary = [&](long long num) { return num == 0 || num == denom; };
  if (outside(tn) || outside(un)) return {};
  if (boundary(tn) || boundary(un)) return {SegRelation::touch, {}, {}};
  return {SegRelation::proper_cross, Rational(tn, denom), Rational(un, denom)};
}

// ---------------------------------------------------------------------------
// Shape predicates
// ---------------------------------------------------------------------------

/// True iff the intervals intersect but neither contains the other.
inline bool intervals_overlap(const Interval& i1, const Interval& i2) {
  if (i1.a == i2.a || i1.a == i2.b || i1.b == i2.a || i1.b == i2.b)
    throw GeneralPositionError("intervals share an endpoint");
  return (i1.a < i2.a && i2.a < i1.b && i1.b < i2.b) ||
         (i2.a < i1.a && i1.a < i2.b && i2.b < i1.b);
}

/// True iff the vertical part of the right-based shape crosses the horizontal
/// part of the left-based one.
inline bool grounded_lshapes_intersect(const GroundedLShape& l1,
                                       const GroundedLShape& l2) {
  if (l1.x == l2.x) throw GeneralPositionError("grounded L-shapes share a basepoint");
  const GroundedLShape& lo = l1.x < l2.x ? l1 : l2;
  const GroundedLShape& hi = l1.x < l2.x ? l2 : l1;
  if (hi.x == lo.end() || lo.x == hi.end())
    throw GeneralPositionError("grounded L-shape vertical meets a horizontal endpoint");
  if (lo.depth == hi.depth && lo.end() >= hi.x)
    throw GeneralPositionError("grounded L-shapes with collinear touching horizontals");
  return hi.x < lo.end() && hi.depth > lo.depth;
}

/// True iff the closed rectangles intersect and neither lies in the open
/// interior of the other.
inline bool frames_intersect(const Frame& f1, const Frame& f2) {
  const Coord xs1[] = {f1.x1, f1.x2}, xs2[] = {f2.x1, f2.x2};
  const Coord ys1[] = {f1.y1, f1.y2}, ys2[] = {f2.y1, f2.y2};
  for (Coord u : xs1)
    for (Coord v : xs2)
      if (u == v) throw GeneralPositionError("frames share an x-coordinate");
  for (Coord u : ys1)
    for (Coord v : ys2)
      if (u == v) throw GeneralPositionError("frames share a y-coordinate");
  const bool boxes = f1.x1 < f2.x2 && f2.x1 < f1.x2 && f1.y1 < f2.y2 && f2.y1 < f1.y2;
  const bool one_in_two =
      f2.x1 < f1.x1 && f1.x2 < f2.x2 && f2.y1 < f1.y1 && f1.y2 < f2.y2;
  const bool two_in_one =
      f1.x1 < f2.x1 && f2.x2 < f1.x2 && f1.y1 < f2.y1 && f2.y2 < f1.y2;
  return boxes && !one_in_two && !two_in_one;
}

namespace detail {

inline std::pair<Point, Point> vertical_part(const CornerLShape& l) {
  return {{l.x, l.y}, {l.x, l.y + l.height}};
}
inline std::pair<Point, Point> horizontal_part(const CornerLShape& l) {
  return {{l.x, l.y}, {l.x + l.width, l.y}};
}

}  // namespace detail

/// True iff the vertical segment of one shape transversally crosses the
/// horizontal segment of the other.
inline bool corner_lshapes_intersect(const CornerLShape& l1, const CornerLShape& l2) {
  const auto v1 = detail::vertical_part(l1), h1 = detail::horizontal_part(l1);
  const auto v2 = detail::vertical_part(l2), h2 = detail::horizontal_part(l2);
  const std::pair<Point, Point> parts1[] = {v1, h1};
  const std::pair<Point, Point> parts2[] = {v2, h2};
  bool hit = false;
  for (const auto& p : parts1)
    for (const auto& q : parts2) {
      SegCrossResult r = segments_cross(p.first, p.second, q.first, q.second);
      if (r.rel == SegRelation::touch || r.rel == SegRelation::collinear_overlap)
        throw GeneralPositionError("corner L-shapes in degenerate contact");
      if (r.rel == SegRelation::proper_cross) hit = true;
    }
  return hit;
}

// ---------------------------------------------------------------------------
// Intersection graphs
// ---------------------------------------------------------------------------

/// Overlap graph of intervals: vertex per interval in input order, edge iff
/// the intervals overlap. Requires pairwise-distinct endpoints.
inline Graph overlap_graph(const std::vector<Interval>& items) {
  const int n = static_cast<int>(items.size());
  {
    std::vector<Coord> ends;
    ends.reserve(2 * items.size());
    for (const auto& it : items) {
      ends.push_back(it.a);
      ends.push_back(it.b);
    }
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
      throw GeneralPositionError("interval family has shared endpoints");
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return items[i].a < items[j].a; });
  // Sweep left endpoints: an open interval [a_i,b_i] with a_i < a_j overlaps
  // [a_j,b_j] exactly when a_j < b_i < b_j.
  std::set<std::pair<Coord, int>> active;  // (right endpoint, id)
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int j : order) {
    while (!active.empty() && active.begin()->first < items[j].a)
      active.erase(active.begin());
    for (auto it = active.begin(); it != active.end() && it->first < items[j].b; ++it)
      edges.push_back({it->second, j});
    active.insert({items[j].b, j});
  }
  return Graph::from_edges(n, std::move(edges));
}

inline Graph intersection_graph(const std::vector<GroundedLShape>& items) {
  const int n = static_cast<int>(items.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (grounded_lshapes_intersect(items[i], items[j])) edges.push_back({i, j});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph intersection_graph(const std::vector<Frame>& items) {
  const int n = static_cast<int>(items.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (frames_intersect(items[i], items[j])) edges.push_back({i, j});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph intersection_graph(const std::vector<CornerLShape>& items) {
  const int n = static_cast<int>(items.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (corner_lshapes_intersect(items[i], items[j])) edges.push_back({i, j});
  return Graph::from_edges(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Representation transforms
// ---------------------------------------------------------------------------

/// Interval with the i-th smallest right endpoint (1-based) becomes the
/// grounded L-shape with basepoint at its left endpoint, depth i and the
/// interval's length as width. Preserves the overlap graph exactly, and for
/// overlapping [a,b], [c,d] with a<c<b<d the image of [c,d] crosses the image
/// of [a,b] with its vertical part.
inline std::vector<GroundedLShape> to_grounded_lshapes(const std::vector<Interval>& items) {
  const int n = static_cast<int>(items.size());
  {
    std::vector<Coord> ends;
    for (const auto& it : items) {
      ends.push_back(it.a);
      ends.push_back(it.b);
    }
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
      throw GeneralPositionError("interval family has shared endpoints");
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return items[i].b < items[j].b; });
  std::vector<GroundedLShape> out(n);
  for (int rank = 0; rank < n; ++rank) {
    int i = order[rank];
    out[i] = GroundedLShape(items[i].a, rank + 1, items[i].length());
  }
  return out;
}

/// Length of the longest containment chain whose maximal element is each
/// interval (minimal intervals get 1).
inline std::vector<int> containment_chain_heights(const std::vector<Interval>& items) {
  const int n = static_cast<int>(items.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return items[i].length() < items[j].length(); });
  std::vector<int> h(n, 1);
  for (int oi = 0; oi < n; ++oi) {
    int i = order[oi];
    for (int oj = 0; oj < oi; ++oj) {
      int j = order[oj];
      if (items[i].a < items[j].a && items[j].b < items[i].b)
        h[i] = std::max(h[i], h[j] + 1);
    }
  }
  return h;
}

/// Interval [a,b] becomes the frame [a,b] x [-L, L] where L encodes the
/// containment chain height. Tied heights are separated deterministically
/// (scale by 2n, offset by input rank) so the emitted frames have pairwise
/// distinct coordinates; the intersection graph equals the overlap graph.
inline std::vector<Frame> to_frames(const std::vector<Interval>& items) {
  const int n = static_cast<int>(items.size());
  std::vector<int> h = containment_chain_heights(items);
  std::vector<Frame> out;
  out.reserve(n);
  const Coord scale = 2 * std::max(1, n);
  for (int i = 0; i < n; ++i) {
    Coord level = scale * h[i] + i;
    out.emplace_back(items[i].a, -level, items[i].b, level);
  }
  return out;
}

/// Inverse view of a line-crossing grounded family: a shape based at x < line_x
/// with crossing depth d maps to the interval [x - line_x, d]. The overlap
/// graph of the output equals the intersection graph of the input.
inline std::vector<Interval> grounded_to_overlap(const std::vector<GroundedLShape>& items,
                                                 Coord line_x) {
  std::vector<Interval> out;
  out.reserve(items.size());
  for (const auto& l : items) {
    if (l.x == line_x || l.end() == line_x)
      throw GeneralPositionError("grounded L-shape coordinate on the reference line");
    if (!(l.x < line_x && line_x < l.end()))
      throw InputError("grounded L-shape does not cross the reference line");
    out.emplace_back(l.x - line_x, l.depth);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polyline crossings
// ---------------------------------------------------------------------------

struct PolylineCrossing {
  int seg_a = 0;  // segment index on the first polyline
  Rational t_a;   // parameter in (0,1) along that segment
  int seg_b = 0;
  Rational t_b;
};

/// All transversal crossings between two polylines, sorted along the first.
/// Any touching or collinear contact is reported as a degenerate
/// configuration.
inline std::vector<PolylineCrossing> polyline_crossings(const Polyline& p1,
                                                        const Polyline& p2) {
  p1.validate();
  p2.validate();
  std::vector<PolylineCrossing> out;
  for (int i = 0; i + 1 < static_cast<int>(p1.vertices.size()); ++i)
    for (int j = 0; j + 1 < static_cast<int>(p2.vertices.size()); ++j) {
      SegCrossResult r = segments_cross(p1.vertices[i], p1.vertices[i + 1],
                                        p2.vertices[j], p2.vertices[j + 1]);
      if (r.rel == SegRelation::touch || r.rel == SegRelation::collinear_overlap)
        throw GeneralPositionError("non-transversal polyline contact at segments " +
                                   std::to_string(i) + "," + std::to_string(j));
      if (r.rel == SegRelation::proper_cross)
        out.push_back({i, r.t1, j, r.t2});
    }
  std::sort(out.begin(), out.end(), [](const PolylineCrossing& a, const PolylineCrossing& b) {
    if (a.seg_a != b.seg_a) return a.seg_a < b.seg_a;
    return a.t_a < b.t_a;
  });
  return out;
}

inline bool polylines_intersect(const Polyline& p1, const Polyline& p2) {
  return !polyline_crossings(p1, p2).empty();
}

inline Graph intersection_graph(const std::vector<Polyline>& items) {
  const int n = static_cast<int>(items.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (polylines_intersect(items[i], items[j])) edges.push_back({i, j});
  return Graph::from_edges(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// General position
// ---------------------------------------------------------------------------

struct GeneralPositionReport {
  struct Violation {
    int shape_a = -1;
    int shape_b = -1;
    std::string reason;
  };
  bool ok = true;
  std::vector<Violation> violations;
};

namespace detail {

// Deterministic symbolic perturbation on one coordinate multiset: scale every
// value, then spread tied groups by their enumeration rank. Owners record
// which shape each entry belongs to for violation reports.
struct CoordEntry {
  Coord value;
  int owner;
};

inline void report_ties(const std::vector<CoordEntry>& entries, const char* what,
                        GeneralPositionReport& rep) {
  std::map<Coord, std::vector<int>> groups;
  for (const auto& e : entries) groups[e.value].push_back(e.owner);
  for (const auto& [v, owners] : groups)
    if (owners.size() > 1)
      for (std::size_t i = 1; i < owners.size(); ++i) {
        rep.ok = false;
        rep.violations.push_back({owners[0], owners[i], std::string("shared ") + what});
      }
}

inline bool has_ties(const std::vector<Coord>& values) {
  std::vector<Coord> s(values);
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

// Entries are given in a fixed enumeration order; the k-th member of a tied
// group (by that order) lands at scale*value + k.
inline std::vector<Coord> perturb(const std::vector<Coord>& values, Coord scale) {
  std::vector<int> idx(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) idx[i] = static_cast<int>(i);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return values[i] < values[j]; });
  std::vector<Coord> out(values.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j < idx.size() && values[idx[j]] == values[idx[i]]) ++j;
    for (std::size_t k = i; k < j; ++k)
      out[idx[k]] = scale * values[idx[k]] + static_cast<Coord>(k - i);
    i = j;
  }
  return out;
}

}  // namespace detail

inline GeneralPositionReport check_general_position(const std::vector<Interval>& items) {
  GeneralPositionReport rep;
  std::vector<detail::CoordEntry> es;
  for (int i = 0; i < static_cast<int>(items.size()); ++i) {
    es.push_back({items[i].a, i});
    es.push_back({items[i].b, i});
  }
  detail::report_ties(es, "interval endpoint", rep);
  return rep;
}

inline std::vector<Interval> normalize(const std::vector<Interval>& items) {
  std::vector<Coord> vals;
  for (const auto& it : items) {
    vals.push_back(it.a);
    vals.push_back(it.b);
  }
  if (!detail::has_ties(vals)) return items;
  const Coord scale = 2 * static_cast<Coord>(std::max<std::size_t>(1, items.size()));
  std::vector<Coord> nv = detail::perturb(vals, scale);
  std::vector<Interval> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    out.emplace_back(nv[2 * i], nv[2 * i + 1]);
  return out;
}

inline GeneralPositionReport check_general_position(const std::vector<GroundedLShape>& items) {
  GeneralPositionReport rep;
  std::vector<detail::CoordEntry> xs, ds;
  for (int i = 0; i < static_cast<int>(items.size()); ++i) {
    xs.push_back({items[i].x, i});
    xs.push_back({items[i].end(), i});
    ds.push_back({items[i].depth, i});
  }
  detail::report_ties(xs, "abscissa (basepoint or horizontal endpoint)", rep);
  detail::report_ties(ds, "depth", rep);
  return rep;
}

inline std::vector<GroundedLShape> normalize(const std::vector<GroundedLShape>& items) {
  std::vector<Coord> xs, ds;
  for (const auto& l : items) {
    xs.push_back(l.x);
    xs.push_back(l.end());
    ds.push_back(l.depth);
  }
  if (!detail::has_ties(xs) && !detail::has_ties(ds)) return items;
  const Coord scale = 2 * static_cast<Coord>(std::max<std::size_t>(1, items.size()));
  std::vector<Coord> nx = detail::perturb(xs, scale);
  std::vector<Coord> nd = detail::perturb(ds, scale);
  std::vector<GroundedLShape> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    out.emplace_back(nx[2 * i], nd[i], nx[2 * i + 1] - nx[2 * i]);
  return out;
}

inline GeneralPositionReport check_general_position(const std::vector<Frame>& items) {
  GeneralPositionReport rep;
  std::vector<detail::CoordEntry> xs, ys;
  for (int i = 0; i < static_cast<int>(items.size()); ++i) {
    xs.push_back({items[i].x1, i});
    xs.push_back({items[i].x2, i});
    ys.push_back({items[i].y1, i});
    ys.push_back({items[i].y2, i});
  }
  detail::report_ties(xs, "frame x-coordinate", rep);
  detail::report_ties(ys, "frame y-coordinate", rep);
  return rep;
}

inline std::vector<Frame> normalize(const std::vector<Frame>& items) {
  std::vector<Coord> xs, ys;
  for (const auto& f : items) {
    xs.push_back(f.x1);
    xs.push_back(f.x2);
    ys.push_back(f.y1);
    ys.push_back(f.y2);
  }
  if (!detail::has_ties(xs) && !detail::has_ties(ys)) return items;
  const Coord scale = 2 * static_cast<Coord>(std::max<std::size_t>(1, items.size()));
  std::vector<Coord> nx = detail::perturb(xs, scale);
  std::vector<Coord> ny = detail::perturb(ys, scale);
  std::vector<Frame> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    out.emplace_back(nx[2 * i], ny[2 * i], nx[2 * i + 1], ny[2 * i + 1]);
  return out;
}

inline GeneralPositionReport check_general_position(const std::vector<CornerLShape>& items) {
  GeneralPositionReport rep;
  std::vector<detail::CoordEntry> xs, ys;
  for (int i = 0; i < static_cast<int>(items.size()); ++i) {
    xs.push_back({items[i].x, i});
    xs.push_back({items[i].x + items[i].width, i});
    ys.push_back({items[i].y, i});
    ys.push_back({items[i].y + items[i].height, i});
  }
  detail::report_ties(xs, "corner L-shape x-coordinate", rep);
  detail::report_ties(ys, "corner L-shape y-coordinate", rep);
  return rep;
}

inline std::vector<CornerLShape> normalize(const std::vector<CornerLShape>& items) {
  std::vector<Coord> xs, ys;
  for (const auto& l : items) {
    xs.push_back(l.x);
    xs.push_back(l.x + l.width);
    ys.push_back(l.y);
    ys.push_back(l.y + l.height);
  }
  if (!detail::has_ties(xs) && !detail::has_ties(ys)) return items;
  const Coord scale = 2 * static_cast<Coord>(std::max<std::size_t>(1, items.size()));
  std::vector<Coord> nx = detail::perturb(xs, scale);
  std::vector<Coord> ny = detail::perturb(ys, scale);
  std::vector<CornerLShape> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    out.emplace_back(nx[2 * i], ny[2 * i], ny[2 * i + 1] - ny[2 * i],
                     nx[2 * i + 1] - nx[2 * i]);
  return out;
}

/// Pairwise transversality check for string families. There is no coordinate
/// perturbation that provably preserves a polyline intersection graph, so
/// strings are validated rather than repaired.
inline GeneralPositionReport check_general_position(const std::vector<Polyline>& items) {
  GeneralPositionReport rep;
  for (int i = 0; i < static_cast<int>(items.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(items.size()); ++j) {
      try {
        polyline_crossings(items[i], items[j]);
      } catch (const GeneralPositionError& e) {
        rep.ok = false;
        rep.violations.push_back({i, j, e.what()});
      }
    }
  return rep;
}

}  // namespace cfcolor
