#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cfcolor/errors.hpp"
#include "cfcolor/framework.hpp"
#include "cfcolor/geometry.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

/// A curve split into slot-indexed parts. Parts of one curve are pairwise
/// interior-disjoint; same-slot parts of distinct curves are disjoint. Curve
/// identity is by id: the same id on both sides of a product means the same
/// curve.
struct PartitionedCurve {
  int id = -1;
  std::vector<std::optional<Polyline>> parts;
};

/// A product F x C with its realized intersection patterns and the derived
/// theorem parameters: every intersecting distinct pair realizes at least l
/// patterns, every C-curve realizes at most l*s.
struct PatternFamily {
  std::vector<PartitionedCurve> f, c;
  std::vector<std::pair<int, int>> patterns;  // sorted distinct (i, j)
  int m = 0;
  int l = 1;
  int s = 1;

  struct Crossing {
    int seg = 0;
    Rational t;
    int f_index = -1;
    int f_slot = -1;
  };
  // along[j][slot]: crossings of F-parts with part `slot` of the j-th C-curve,
  // sorted by position along that part.
  std::vector<std::vector<std::vector<Crossing>>> along;
};

namespace detail {

inline void check_same_curve_parts(const PartitionedCurve& pc) {
  const int t = static_cast<int>(pc.parts.size());
  for (int a = 0; a < t; ++a) {
    if (!pc.parts[a]) continue;
    const Polyline& P = *pc.parts[a];
    for (int b = a + 1; b < t; ++b) {
      if (!pc.parts[b]) continue;
      const Polyline& Q = *pc.parts[b];
      for (std::size_t i = 0; i + 1 < P.vertices.size(); ++i)
        for (std::size_t j = 0; j + 1 < Q.vertices.size(); ++j) {
          const SegCrossResult r = segments_cross(P.vertices[i], P.vertices[i + 1],
                                                  Q.vertices[j], Q.vertices[j + 1]);
          if (r.rel == SegRelation::disjoint) continue;
          if (r.rel == SegRelation::proper_cross || r.rel == SegRelation::collinear_overlap)
            throw InputError("partition condition: parts of curve " + std::to_string(pc.id) +
                             " are not interior-disjoint");
          // A touch is fine only at a shared extreme endpoint of both parts.
          bool ok = false;
          const Point pe[] = {P.vertices.front(), P.vertices.back()};
          const Point qe[] = {Q.vertices.front(), Q.vertices.back()};
          const Point si[] = {P.vertices[i], P.vertices[i + 1]};
          const Point sj[] = {Q.vertices[j], Q.vertices[j + 1]};
          for (const Point& u : si)
            for (const Point& v : sj)
              if (u == v)
                for (const Point& x : pe)
                  for (const Point& y : qe)
                    if (u == x && u == y) ok = true;
          if (!ok)
            throw InputError("partition condition: parts of curve " + std::to_string(pc.id) +
                             " touch away from a shared endpoint");
        }
    }
  }
}

inline const Polyline* slot_part(const PartitionedCurve& pc, int slot) {
  if (slot < 0 || slot >= static_cast<int>(pc.parts.size())) return nullptr;
  return pc.parts[slot] ? &*pc.parts[slot] : nullptr;
}

}  // namespace detail

/// Computes the realized intersection patterns of F x C, validating the
/// partition conditions. When declared (l, s) are given they are checked
/// against the realized counts and adopted; otherwise the tightest realized
/// parameters are derived.
inline PatternFamily compute_patterns(std::vector<PartitionedCurve> f,
                                      std::vector<PartitionedCurve> c,
                                      std::optional<int> declared_l = std::nullopt,
                                      std::optional<int> declared_s = std::nullopt) {
  PatternFamily fam;
  fam.f = std::move(f);
  fam.c = std::move(c);

  std::size_t max_slots = 0;
  for (const auto& pc : fam.f) max_slots = std::max(max_slots, pc.parts.size());
  for (const auto& pc : fam.c) max_slots = std::max(max_slots, pc.parts.size());

  {
    std::map<int, const PartitionedCurve*> by_id;
    auto visit = [&](const PartitionedCurve& pc, const char* side) {
      if (pc.id < 0) throw InputError("partitioned curve without an id");
      auto [it, fresh] = by_id.insert({pc.id, &pc});
      if (!fresh) {
        // Same id must be the same curve (aliasing between F and C).
        const PartitionedCurve& other = *it->second;
        bool same = other.parts.size() == pc.parts.size();
        for (std::size_t i = 0; same && i < pc.parts.size(); ++i) {
          const bool ha = other.parts[i].has_value(), hb = pc.parts[i].has_value();
          same = ha == hb && (!ha || other.parts[i]->vertices == pc.parts[i]->vertices);
        }
        if (!same)
          throw InputError(std::string("curve id ") + std::to_string(pc.id) +
                           " appears twice with different parts (" + side + ")");
      } else {
        detail::check_same_curve_parts(pc);
      }
    };
    std::set<int> seen_f, seen_c;
    for (const auto& pc : fam.f) {
      if (!seen_f.insert(pc.id).second) throw InputError("duplicate curve id in F");
      visit(pc, "F");
    }
    for (const auto& pc : fam.c) {
      if (!seen_c.insert(pc.id).second) throw InputError("duplicate curve id in C");
      visit(pc, "C");
    }
    // Same-slot parts of distinct curves must be pairwise disjoint.
    std::vector<const PartitionedCurve*> all;
    for (const auto& [id, pc] : by_id) all.push_back(pc);
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size(); ++b)
        for (std::size_t slot = 0; slot < max_slots; ++slot) {
          const Polyline* p = detail::slot_part(*all[a], static_cast<int>(slot));
          const Polyline* q = detail::slot_part(*all[b], static_cast<int>(slot));
          if (!p || !q) continue;
          try {
            if (!polyline_crossings(*p, *q).empty())
              throw InputError("partition condition: same-slot parts of curves " +
                               std::to_string(all[a]->id) + " and " +
                               std::to_string(all[b]->id) + " intersect");
          } catch (const GeneralPositionError&) {
            throw InputError("partition condition: same-slot parts of curves " +
                             std::to_string(all[a]->id) + " and " +
                             std::to_string(all[b]->id) + " are in contact");
          }
        }
  }

  fam.along.assign(fam.c.size(), {});
  std::set<std::pair<int, int>> patterns;
  std::vector<int> curve_patterns(fam.c.size(), 0);
  int min_pair = -1;
  for (std::size_t j = 0; j < fam.c.size(); ++j) {
    fam.along[j].assign(fam.c[j].parts.size(), {});
    std::set<std::pair<int, int>> curve_set;
    for (std::size_t i = 0; i < fam.f.size(); ++i) {
      if (fam.f[i].id == fam.c[j].id) continue;
      std::set<std::pair<int, int>> pair_set;
      for (int ip = 0; ip < static_cast<int>(fam.f[i].parts.size()); ++ip) {
        const Polyline* fp = detail::slot_part(fam.f[i], ip);
        if (!fp) continue;
        for (int jq = 0; jq < static_cast<int>(fam.c[j].parts.size()); ++jq) {
          const Polyline* cp = detail::slot_part(fam.c[j], jq);
          if (!cp) continue;
          const auto crossings = polyline_crossings(*fp, *cp);
          if (crossings.empty()) continue;
          pair_set.insert({ip, jq});
          for (const auto& x : crossings)
            fam.along[j][jq].push_back({x.seg_b, x.t_b, static_cast<int>(i), ip});
        }
      }
      if (!pair_set.empty()) {
        curve_set.insert(pair_set.begin(), pair_set.end());
        const int cnt = static_cast<int>(pair_set.size());
        min_pair = min_pair < 0 ? cnt : std::min(min_pair, cnt);
      }
    }
    for (auto& bucket : fam.along[j])
      std::sort(bucket.begin(), bucket.end(),
                [](const PatternFamily::Crossing& a, const PatternFamily::Crossing& b) {
                  if (a.seg != b.seg) return a.seg < b.seg;
                  return a.t < b.t;
                });
    curve_patterns[j] = static_cast<int>(curve_set.size());
    patterns.insert(curve_set.begin(), curve_set.end());
  }
  fam.patterns.assign(patterns.begin(), patterns.end());
  fam.m = static_cast<int>(fam.patterns.size());

  const int realized_min_pair = min_pair < 0 ? 1 : min_pair;
  const int realized_max_curve =
      curve_patterns.empty() ? 0 : *std::max_element(curve_patterns.begin(), curve_patterns.end());
  if (declared_l || declared_s) {
    if (!declared_l || !declared_s) throw InputError("declare both l and s or neither");
    if (realized_min_pair < *declared_l)
      throw InputError("an intersecting pair realizes fewer than l patterns");
    if (realized_max_curve > *declared_l * *declared_s)
      throw InputError("a curve realizes more than l*s patterns");
    fam.l = *declared_l;
    fam.s = *declared_s;
  } else {
    fam.l = realized_min_pair;
    fam.s = std::max(1, (realized_max_curve + fam.l - 1) / fam.l);
  }
  return fam;
}

struct PatternStats {
  int max_aux_palette = 0;
  long long aux_graphs = 0;
  long long planarity_violations = 0;  // some G_(i,j)(K) with |E| > 3v-6
};

/// Proper coloring of the surviving curves K whose per-pattern consecutiveness
/// graphs make every C-neighborhood of size >= s+1 non-monochromatic. Palette
/// is at most 6m.
inline Coloring pattern_weak_coloring(const PatternFamily& fam,
                                      const std::vector<int>& k_indices,
                                      PatternStats* stats = nullptr) {
  const int nk = static_cast<int>(k_indices.size());
  std::vector<int> local(fam.f.size(), -1);
  for (int i = 0; i < nk; ++i) {
    if (k_indices[i] < 0 || k_indices[i] >= static_cast<int>(fam.f.size()))
      throw InputError("pattern_weak_coloring: K index out of range");
    local[k_indices[i]] = i;
  }
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> per_pattern;
  std::vector<std::pair<VertexId, VertexId>> all_edges;
  std::vector<std::pair<int, int>> run;  // (local index, f_slot) along one part
  for (std::size_t j = 0; j < fam.c.size(); ++j) {
    for (std::size_t jq = 0; jq < fam.along[j].size(); ++jq) {
      const auto& bucket = fam.along[j][jq];
      if (bucket.empty()) continue;
      std::set<int> slots;
      for (const auto& x : bucket) slots.insert(x.f_slot);
      for (int ip : slots) {
        // Consecutiveness for pattern (ip, jq) is blocked only by slot-ip
        // parts of K-curves; the C-curve's own crossings are skipped.
        run.clear();
        for (const auto& x : bucket) {
          if (x.f_slot != ip) continue;
          if (fam.f[x.f_index].id == fam.c[j].id) continue;
          if (local[x.f_index] < 0) continue;
          run.push_back({local[x.f_index], ip});
        }
        for (std::size_t r = 0; r + 1 < run.size(); ++r) {
          const int a = run[r].first, b = run[r + 1].first;
          if (a == b) continue;
          per_pattern[{ip, static_cast<int>(jq)}].push_back({std::min(a, b), std::max(a, b)});
          all_edges.push_back({a, b});
        }
      }
    }
  }
  if (stats) {
    for (auto& [pat, es] : per_pattern) {
      ++stats->aux_graphs;
      std::sort(es.begin(), es.end());
      es.erase(std::unique(es.begin(), es.end()), es.end());
      const long long cap = nk >= 3 ? 3LL * nk - 6 : 1;
      if (static_cast<long long>(es.size()) > cap) ++stats->planarity_violations;
    }
  }
  const Graph g = Graph::from_edges(nk, std::move(all_edges));
  Coloring c = degeneracy_color(g);
  if (fam.m > 0 && c.palette_size > 6 * fam.m)
    throw InternalInvariantError("pattern auxiliary coloring exceeded 6m colors");
  if (stats) stats->max_aux_palette = std::max(stats->max_aux_palette, c.palette_size);
  return c;
}

/// s-CF coloring of the hypergraph arising from F x C with O(m log n) colors.
inline Coloring s_cf_color(const PatternFamily& fam, PatternStats* stats = nullptr) {
  Hypergraph h;
  h.n = static_cast<int>(fam.f.size());
  for (std::size_t j = 0; j < fam.c.size(); ++j) {
    std::set<VertexId> nb;
    for (const auto& bucket : fam.along[j])
      for (const auto& x : bucket)
        if (fam.f[x.f_index].id != fam.c[j].id) nb.insert(x.f_index);
    if (!nb.empty()) h.edges.emplace_back(nb.begin(), nb.end());
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  WeakColorer colorer = [&](const Hypergraph&, const std::vector<VertexId>& ids) {
    return pattern_weak_coloring(fam, ids, stats);
  };
  return k_cf_color_via_weak(h, colorer, std::max(1, fam.s));
}

namespace detail {

inline PartitionedCurve lshape_curve(const CornerLShape& l, int id) {
  PartitionedCurve pc;
  pc.id = id;
  pc.parts.resize(2);
  pc.parts[0] = Polyline({{l.x, l.y}, {l.x, l.y + l.height}});    // vertical
  pc.parts[1] = Polyline({{l.x, l.y}, {l.x + l.width, l.y}});     // horizontal
  return pc;
}

inline PartitionedCurve frame_curve(const Frame& f, int id) {
  PartitionedCurve pc;
  pc.id = id;
  pc.parts.resize(4);
  pc.parts[0] = Polyline({{f.x1, f.y1}, {f.x1, f.y2}});  // left
  pc.parts[1] = Polyline({{f.x1, f.y1}, {f.x2, f.y1}});  // bottom
  pc.parts[2] = Polyline({{f.x2, f.y1}, {f.x2, f.y2}});  // right
  pc.parts[3] = Polyline({{f.x1, f.y2}, {f.x2, f.y2}});  // top
  return pc;
}

}  // namespace detail

/// 2-CF coloring of the neighborhood hypergraph of corner L-shapes with
/// O(log n) colors (vertical/horizontal slotting gives at most 2 patterns per
/// curve and at least 1 per intersecting pair).
inline Coloring k_cf_color_lshapes(const std::vector<CornerLShape>& items,
                                   PatternStats* stats = nullptr,
                                   PatternFamily* out_family = nullptr) {
  std::vector<PartitionedCurve> cs;
  cs.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    cs.push_back(detail::lshape_curve(items[i], static_cast<int>(i)));
  PatternFamily fam = compute_patterns(cs, cs);
  if (fam.s > 2)
    throw InternalInvariantError("L-shape slotting exceeded 2 patterns per curve");
  Coloring c = s_cf_color(fam, stats);
  if (out_family) *out_family = std::move(fam);
  return c;
}

/// 4-CF coloring of the neighborhood hypergraph of frames with O(log n)
/// colors (the 8-pattern four-side slotting; every crossing pair realizes 2
/// or 4 patterns).
inline Coloring k_cf_color_frames(const std::vector<Frame>& items,
                                  PatternStats* stats = nullptr,
                                  PatternFamily* out_family = nullptr) {
  std::vector<PartitionedCurve> cs;
  cs.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    cs.push_back(detail::frame_curve(items[i], static_cast<int>(i)));
  PatternFamily fam = compute_patterns(cs, cs);
  if (fam.s > 4)
    throw InternalInvariantError("frame slotting exceeded 8 patterns per curve");
  Coloring c = s_cf_color(fam, stats);
  if (out_family) *out_family = std::move(fam);
  return c;
}

/// CF coloring of a string family from a user-supplied proper t-partition of
/// its intersection graph: class i is CF-colored against the union of the
/// other classes under the class-index slotting, with one palette block per
/// class. Palette O(t^2 log n).
inline Coloring cf_color_bounded_chromatic(const std::vector<Polyline>& strings,
                                           const std::vector<int>& classes,
                                           PatternStats* stats = nullptr) {
  const int n = static_cast<int>(strings.size());
  if (static_cast<int>(classes.size()) != n)
    throw InputError("cf_color_bounded_chromatic: class list length mismatch");
  int t = 0;
  for (int c : classes) {
    if (c < 0) throw InputError("cf_color_bounded_chromatic: negative class id");
    t = std::max(t, c + 1);
  }
  if (n == 0) return Coloring{};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (classes[i] == classes[j] && polylines_intersect(strings[i], strings[j]))
        throw InputError("cf_color_bounded_chromatic: classes are not a proper coloring");

  auto string_curve = [&](int i) {
    PartitionedCurve pc;
    pc.id = i;
    pc.parts.resize(t);
    pc.parts[classes[i]] = strings[i];
    return pc;
  };

  std::vector<int> colors(n, 0);
  int base = 0;
  for (int cls = 0; cls < t; ++cls) {
    std::vector<PartitionedCurve> fs, csides;
    std::vector<int> f_ids;
    for (int i = 0; i < n; ++i) {
      if (classes[i] == cls) {
        fs.push_back(string_curve(i));
        f_ids.push_back(i);
      } else {
        csides.push_back(string_curve(i));
      }
    }
    if (fs.empty()) continue;
    // Each C-curve has a single non-empty slot, so it realizes at most one
    // pattern; the framework then yields a plain CF coloring.
    PatternFamily fam = compute_patterns(std::move(fs), std::move(csides), 1, 1);
    const Coloring part = s_cf_color(fam, stats);
    for (std::size_t i = 0; i < f_ids.size(); ++i) colors[f_ids[i]] = base + part.colors[i];
    base += std::max(1, part.palette_size);
  }
  return Coloring(std::move(colors), std::max(1, base));
}

}  // namespace cfcolor
