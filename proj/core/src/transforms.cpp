#include "tmg/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

#include "tmg/error.hpp"
#include "tmg/validate.hpp"

namespace tmg {

Drawing remove_edges(const Drawing& d, const std::vector<std::string>& edge_ids) {
  std::set<std::size_t> removed;
  for (const auto& id : edge_ids) removed.insert(d.edge_index(id));
  Drawing out;
  for (const auto& v : d.vertices()) out.add_vertex(v.id, v.position);
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    if (removed.count(e)) continue;
    const Edge& edge = d.edges()[e];
    out.add_edge(edge.id, edge.u, edge.v, edge.curve);
  }
  return out;
}

namespace {

Rational snap_to_grid(double value, long denom_log2) {
  const double scaled = value * std::ldexp(1.0, static_cast<int>(denom_log2));
  const auto num = static_cast<long long>(std::llround(scaled));
  return Rational(Int(num)) / Rational(Int(1) << static_cast<unsigned>(denom_log2));
}

Point snap_point(double x, double y, long denom_log2 = 26) {
  return Point{snap_to_grid(x, denom_log2), snap_to_grid(y, denom_log2)};
}

// Squared distance from the vertex to the nearest non-incident feature:
// other vertices, curves of non-incident edges, and the incident curves
// beyond their first segment at the vertex.
Rational squared_clearance(const Drawing& d, std::size_t v) {
  const Point& at = d.vertices()[v].position;
  std::optional<Rational> best;
  auto consider = [&](const Rational& value) {
    if (!best || value < *best) best = value;
  };
  for (std::size_t w = 0; w < d.vertex_count(); ++w) {
    if (w != v) consider(squared_distance(at, d.vertices()[w].position));
  }
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    const Polyline& curve = d.edges()[e].curve;
    const bool incident = d.edge_incident(e, v);
    const bool starts_here = incident && curve.front() == at;
    for (std::size_t s = 0; s + 1 < curve.size(); ++s) {
      if (incident && ((starts_here && s == 0) || (!starts_here && s + 2 == curve.size())))
        continue;
      consider(squared_distance_point_segment(at, curve.segment(s)));
    }
  }
  if (!best) return Rational(1);  // isolated vertex in an empty drawing
  return *best;
}

std::map<std::pair<std::string, std::string>, std::size_t> pair_counts_by_id(
    const Drawing& d, const CrossingIndex& cx) {
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
  for (const auto& c : cx.all()) {
    auto key = std::make_pair(d.edges()[c.e1].id, d.edges()[c.e2].id);
    if (key.second < key.first) std::swap(key.first, key.second);
    ++counts[key];
  }
  return counts;
}

int cyclic_blocks(const std::vector<bool>& flags) {
  int blocks = 0;
  const std::size_t n = flags.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (flags[i] && !flags[(i + n - 1) % n]) ++blocks;
  }
  return blocks;
}

}  // namespace

SplitPlan make_split_plan(const Drawing& d, const std::string& vertex,
                          const std::vector<std::string>& group1, const Rational& scale) {
  const std::size_t v = d.vertex_index(vertex);
  const Point& at = d.vertices()[v].position;
  const auto rotation = rotation_order(d, v);

  std::set<std::size_t> first;
  for (const auto& id : group1) first.insert(d.edge_index(id));
  SplitPlan plan;
  plan.vertex = vertex;
  plan.group1 = group1;
  for (const std::size_t e : rotation) {
    if (!first.count(e)) plan.group2.push_back(d.edges()[e].id);
  }

  auto direction_of = [&](std::size_t e) {
    const Polyline& curve = d.edges()[e].curve;
    const Point& next = curve.front() == at ? curve.points()[1]
                                            : curve.points()[curve.size() - 2];
    return Point{next.x - at.x, next.y - at.y};
  };
  auto angle_of = [&](std::size_t e) {
    const Point dir = direction_of(e);
    return std::atan2(to_double(dir.y), to_double(dir.x));
  };

  // Bisector of a contiguous group's angular wedge; any direction for an
  // empty group (callers re-aim it opposite the other group's direction).
  auto wedge_angle = [&](const std::set<std::size_t>& members) -> std::optional<double> {
    std::vector<std::size_t> arc;
    for (const std::size_t e : rotation) {
      if (members.count(e)) arc.push_back(e);
    }
    if (arc.empty()) return std::nullopt;
    // Rotate so the arc is contiguous from its first member in rotation order.
    std::vector<bool> flags;
    flags.reserve(rotation.size());
    for (const std::size_t e : rotation) flags.push_back(members.count(e) > 0);
    if (cyclic_blocks(flags) > 1) fail(ErrorCode::NonContiguousGroups, "group not contiguous");
    std::size_t start = 0;
    const std::size_t n = rotation.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (flags[i] && !flags[(i + n - 1) % n]) start = i;
    }
    const double a0 = angle_of(rotation[start]);
    double span = 0;
    for (std::size_t i = 0; i < arc.size(); ++i) {
      const std::size_t idx = (start + i) % n;
      if (!flags[idx]) break;
      double rel = angle_of(rotation[idx]) - a0;
      while (rel < 0) rel += 2 * M_PI;
      span = std::max(span, rel);
    }
    return a0 + span / 2;
  };

  std::set<std::size_t> second;
  for (const auto& id : plan.group2) second.insert(d.edge_index(id));
  auto angle1 = wedge_angle(first);
  auto angle2 = wedge_angle(second);
  if (!angle1 && !angle2) {
    angle1 = 0.0;
    angle2 = M_PI;
  } else if (!angle1) {
    angle1 = *angle2 + M_PI;
  } else if (!angle2) {
    angle2 = *angle1 + M_PI;
  }

  const Rational clearance2 = squared_clearance(d, v);
  const double radius = std::sqrt(to_double(clearance2));
  const double len = 0.9 * to_double(scale) * radius;
  const Rational limit2 = clearance2 * scale * scale;

  auto place = [&](double angle) {
    double l = len;
    for (int tries = 0; tries < 60; ++tries, l /= 2) {
      const Point loc = snap_point(to_double(at.x) + l * std::cos(angle),
                                   to_double(at.y) + l * std::sin(angle));
      if (loc != at && squared_distance(at, loc) < limit2) return loc;
    }
    fail(ErrorCode::ClearanceViolation, "cannot place split copy near '" + vertex + "'");
  };
  plan.location1 = place(*angle1);
  for (int nudge = 0; nudge < 30; ++nudge) {
    plan.location2 = place(*angle2 + nudge * 1e-3);
    if (plan.location2 != plan.location1) break;
  }
  return plan;
}

Drawing vertex_split(const Drawing& d, const SplitPlan& plan) {
  const std::size_t v = d.vertex_index(plan.vertex);
  const Point& at = d.vertices()[v].position;

  const auto incident = d.incident_edges(v);
  std::set<std::size_t> group1, group2;
  for (const auto& id : plan.group1) group1.insert(d.edge_index(id));
  for (const auto& id : plan.group2) group2.insert(d.edge_index(id));
  if (group1.size() + group2.size() != incident.size())
    fail(ErrorCode::DomainError, "split groups must partition the incident edges");
  for (const std::size_t e : incident) {
    const bool in1 = group1.count(e) > 0;
    const bool in2 = group2.count(e) > 0;
    if (in1 == in2) fail(ErrorCode::DomainError, "split groups must partition the incident edges");
  }

  const auto rotation = rotation_order(d, v);
  std::vector<bool> flags;
  flags.reserve(rotation.size());
  for (const std::size_t e : rotation) flags.push_back(group1.count(e) > 0);
  if (cyclic_blocks(flags) > 1)
    fail(ErrorCode::NonContiguousGroups, "group 1 is not contiguous in the rotation order");

  const Rational clearance2 = squared_clearance(d, v);
  for (const Point* loc : {&plan.location1, &plan.location2}) {
    if (squared_distance(at, *loc) >= clearance2)
      fail(ErrorCode::ClearanceViolation, "split location outside the clearance disk");
  }

  const std::string id1 = d.fresh_vertex_id(plan.vertex + ".1");
  const std::string id2 = d.fresh_vertex_id(plan.vertex + ".2");

  Drawing out;
  try {
    for (std::size_t w = 0; w < d.vertex_count(); ++w) {
      if (w != v) out.add_vertex(d.vertices()[w].id, d.vertices()[w].position);
    }
    out.add_vertex(id1, plan.location1);
    out.add_vertex(id2, plan.location2);
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
      const Edge& edge = d.edges()[e];
      if (!d.edge_incident(e, v)) {
        out.add_edge(edge.id, edge.u, edge.v, edge.curve);
        continue;
      }
      const bool to_first = group1.count(e) > 0;
      const std::string& copy_id = to_first ? id1 : id2;
      const Point& copy_at = to_first ? plan.location1 : plan.location2;
      std::vector<Point> pts = edge.curve.points();
      if (pts.front() == at) {
        pts.front() = copy_at;
      } else {
        pts.back() = copy_at;
      }
      out.add_edge(edge.id, edge.u == plan.vertex ? copy_id : edge.u,
                   edge.v == plan.vertex ? copy_id : edge.v, Polyline(std::move(pts)));
    }
  } catch (const Error&) {
    fail(ErrorCode::ClearanceViolation, "split produced a degenerate drawing");
  }

  // Certify: general position intact and every pair's crossing count kept.
  if (!validate_general_position(out).ok())
    fail(ErrorCode::ClearanceViolation, "split broke general position");
  try {
    const CrossingIndex before(d);
    const CrossingIndex after(out);
    if (pair_counts_by_id(d, before) != pair_counts_by_id(out, after))
      fail(ErrorCode::ClearanceViolation, "split changed crossings");
  } catch (const Error& err) {
    if (err.code() == ErrorCode::ClearanceViolation) throw;
    fail(ErrorCode::ClearanceViolation, "split changed crossings");
  }
  return out;
}

Drawing split_high_degree(const Drawing& d, const Rational& degree_cap) {
  if (degree_cap < 1) fail(ErrorCode::DomainError, "degree cap must be >= 1");
  const Int cap_floor = numerator(degree_cap) / denominator(degree_cap);
  const auto cap = cap_floor.convert_to<std::size_t>();

  Drawing current = d;
  std::size_t i = 0;
  while (i < current.vertex_count()) {
    if (Rational(static_cast<long>(current.degree(i))) <= degree_cap) {
      ++i;
      continue;
    }
    auto rotation = rotation_order(current, i);
    const Point& at = current.vertices()[i].position;
    auto direction_of = [&](std::size_t e) {
      const Polyline& curve = current.edges()[e].curve;
      const Point& next =
          curve.front() == at ? curve.points()[1] : curve.points()[curve.size() - 2];
      return canonical_direction(Point{next.x - at.x, next.y - at.y});
    };
    std::size_t start = 0;
    for (std::size_t k = 1; k < rotation.size(); ++k) {
      if (lex_less(direction_of(rotation[k]), direction_of(rotation[start]))) start = k;
    }
    std::rotate(rotation.begin(), rotation.begin() + static_cast<std::ptrdiff_t>(start),
                rotation.end());
    std::vector<std::string> group1;
    for (std::size_t k = 0; k < cap; ++k) group1.push_back(current.edges()[rotation[k]].id);

    bool done = false;
    for (int shrink = 1; shrink <= 14 && !done; ++shrink) {
      try {
        const auto plan = make_split_plan(current, current.vertices()[i].id, group1,
                                          Rational(1) / pow_rational(Rational(2), shrink));
        current = vertex_split(current, plan);
        done = true;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::ClearanceViolation) throw;
      }
    }
    if (!done) fail(ErrorCode::ClearanceViolation, "could not split high-degree vertex");
    // The split removed vertex i; rescan the element that slid into its slot.
  }
  return current;
}

Drawing planarize(const Drawing& d) {
  const CrossingIndex cx(d);
  if (cx.count() == 0) return d;

  Drawing out;
  for (const auto& v : d.vertices()) out.add_vertex(v.id, v.position);

  // One vertex per crossing, in the deterministic crossing order.
  std::vector<std::string> crossing_ids;
  std::size_t serial = 0;
  for (const auto& c : cx.all()) {
    std::string id = out.fresh_vertex_id("x" + std::to_string(serial++));
    out.add_vertex(id, c.at);
    crossing_ids.push_back(id);
  }
  std::map<const Crossing*, std::string> id_of;
  for (std::size_t i = 0; i < cx.all().size(); ++i) id_of[&cx.all()[i]] = crossing_ids[i];

  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    const Edge& edge = d.edges()[e];
    const auto hits = cx.on_edge(e);
    if (hits.empty()) {
      out.add_edge(edge.id, edge.u, edge.v, edge.curve);
      continue;
    }
    std::vector<std::pair<CurvePos, std::string>> stops;
    stops.push_back({curve_start(edge.curve), edge.u});
    for (const auto& [pos, c] : hits) stops.push_back({pos, id_of[c]});
    stops.push_back({curve_end(edge.curve), edge.v});
    for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
      out.add_edge(out.fresh_edge_id(edge.id + "." + std::to_string(s)), stops[s].second,
                   stops[s + 1].second,
                   Polyline(slice_points(edge.curve, stops[s].first, stops[s + 1].first)));
    }
  }
  return out;
}

namespace {

struct LensChoice {
  Lens lens;
  std::size_t templ;  // edge whose part is copied
  std::size_t moved;  // edge rerouted
  CurveSpan templ_span;
  CurveSpan moved_span;
  std::size_t removed;  // pair crossings removed at the corners
};

// Crossings on edge e with position strictly inside the span.
std::size_t span_cost(const CrossingIndex& cx, std::size_t e, const CurveSpan& span) {
  std::size_t cost = 0;
  for (const auto& [pos, c] : cx.on_edge(e)) {
    if (span.from < pos && pos < span.to) ++cost;
  }
  return cost;
}

std::size_t pair_crossings_in_span(const CrossingIndex& cx, std::size_t e, const CurveSpan& span,
                                   std::size_t partner) {
  std::size_t count = 0;
  for (const Crossing* c : cx.of_pair(std::min(e, partner), std::max(e, partner))) {
    const CurvePos& pos = (c->e1 == e) ? c->pos1 : c->pos2;
    if (span.from < pos && pos < span.to) ++count;
  }
  return count;
}

std::optional<LensChoice> choose_lens(const Drawing& d, const CrossingIndex& cx,
                                      const RerouteOptions& options) {
  auto lenses = empty_lenses(d, cx);
  std::stable_sort(lenses.begin(), lenses.end(), [](const Lens& a, const Lens& b) {
    const int ka = a.kind == LensKind::FullParallelPair ? 1 : 0;
    const int kb = b.kind == LensKind::FullParallelPair ? 1 : 0;
    if (ka != kb) return ka < kb;
    if (a.e1 != b.e1) return a.e1 < b.e1;
    if (a.e2 != b.e2) return a.e2 < b.e2;
    return a.span1.from < b.span1.from;
  });
  for (auto& lens : lenses) {
    if (lens.kind == LensKind::EndpointToCrossing && !options.endpoint_to_crossing) continue;
    const std::size_t cost1 = span_cost(cx, lens.e1, lens.span1);
    const std::size_t cost2 = span_cost(cx, lens.e2, lens.span2);
    const std::size_t removed = lens.kind == LensKind::BetweenCrossings      ? 2
                                : lens.kind == LensKind::EndpointToCrossing ? 1
                                                                            : 0;
    if (cost1 <= cost2) {
      return LensChoice{lens, lens.e1, lens.e2, lens.span1, lens.span2, removed};
    }
    return LensChoice{lens, lens.e2, lens.e1, lens.span2, lens.span1, removed};
  }
  return std::nullopt;
}

struct Vec2 {
  double x, y;
};

Vec2 to_vec(const Point& p) { return {to_double(p.x), to_double(p.y)}; }

Vec2 normalize(Vec2 v) {
  const double len = std::hypot(v.x, v.y);
  return {v.x / len, v.y / len};
}

// Rough clearance of the template part: smallest double distance from its
// segments to vertices and to segments of other edges that stay off the part.
double estimate_part_clearance(const Drawing& d, std::size_t templ,
                               const std::vector<Point>& part) {
  auto seg_dist = [](Vec2 a, Vec2 b, Vec2 p) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 == 0 ? 0 : ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
  };
  auto seg_seg = [&](Vec2 a, Vec2 b, Vec2 c, Vec2 dd) {
    return std::min(std::min(seg_dist(a, b, c), seg_dist(a, b, dd)),
                    std::min(seg_dist(c, dd, a), seg_dist(c, dd, b)));
  };
  double best = 0;
  for (std::size_t i = 0; i + 1 < part.size(); ++i) {
    best = std::max(best, std::hypot(to_vec(part[i + 1]).x - to_vec(part[i]).x,
                                     to_vec(part[i + 1]).y - to_vec(part[i]).y));
  }
  for (std::size_t i = 0; i + 1 < part.size(); ++i) {
    const Vec2 a = to_vec(part[i]), b = to_vec(part[i + 1]);
    for (const auto& vert : d.vertices()) {
      const double dist = seg_dist(a, b, to_vec(vert.position));
      if (dist > 1e-12) best = std::min(best, dist);
    }
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
      if (e == templ) continue;
      const Polyline& curve = d.edges()[e].curve;
      for (std::size_t s = 0; s + 1 < curve.size(); ++s) {
        const double dist =
            seg_seg(a, b, to_vec(curve.points()[s]), to_vec(curve.points()[s + 1]));
        if (dist > 1e-12) best = std::min(best, dist);
      }
    }
  }
  return best;
}

std::optional<Polyline> build_rerouted_curve(const Drawing& d, const LensChoice& choice,
                                             int attempt) {
  const Polyline& templ_curve = d.edges()[choice.templ].curve;
  const Polyline& moved_curve = d.edges()[choice.moved].curve;
  const std::vector<Point> part =
      slice_points(templ_curve, choice.templ_span.from, choice.templ_span.to);

  const Point moved_from = point_at(moved_curve, choice.moved_span.from);
  const bool forward = moved_from == part.front();

  const bool from_is_vertex = choice.moved_span.from == curve_start(moved_curve);
  const bool to_is_vertex = choice.moved_span.to == curve_end(moved_curve);

  // Side of the template line to offset toward: the side where the moved
  // edge continues past a crossing corner. Parallel pairs have no such
  // corner; alternate the side across attempts and let certification decide.
  int side = 0;
  const Rational corner_frac = Rational(1) / pow_rational(Rational(2), 4 + std::min(attempt, 40));
  if (!from_is_vertex || !to_is_vertex) {
    const bool use_from = !from_is_vertex;
    const CurvePos corner_pos = use_from ? choice.moved_span.from : choice.moved_span.to;
    const Point corner = point_at(moved_curve, corner_pos);
    const CurvePos anchor_pos =
        use_from ? CurvePos{corner_pos.segment, corner_pos.t * (1 - corner_frac)}
                 : CurvePos{corner_pos.segment, corner_pos.t + (1 - corner_pos.t) * corner_frac};
    const Point anchor = point_at(moved_curve, anchor_pos);
    // Side of the anchor relative to the template's forward direction at the
    // corner; the whole offset normal field uses the same orientation.
    const bool corner_at_part_front = corner == part.front();
    const Point& neighbor = corner_at_part_front ? part[1] : part[part.size() - 2];
    const Point forward = corner_at_part_front
                              ? Point{neighbor.x - corner.x, neighbor.y - corner.y}
                              : Point{corner.x - neighbor.x, corner.y - neighbor.y};
    side = orientation_sign(corner, Point{corner.x + forward.x, corner.y + forward.y}, anchor);
    if (side == 0) return std::nullopt;
  } else {
    side = (attempt % 2 == 0) ? 1 : -1;
  }

  const double base = estimate_part_clearance(d, choice.templ, part);
  double min_seg = 1e18;
  for (std::size_t i = 0; i + 1 < part.size(); ++i) {
    min_seg = std::min(min_seg, std::hypot(to_vec(part[i + 1]).x - to_vec(part[i]).x,
                                           to_vec(part[i + 1]).y - to_vec(part[i]).y));
  }
  const double shrink = std::pow(2.0, attempt);
  const double delta = std::min(base / 6, min_seg / 4) / (shrink * shrink);
  const double lead = std::min(base / 3, min_seg / 3) / shrink;
  if (delta <= 0 || lead <= 0) return std::nullopt;
  // The snap grid must stay well below the offset scale.
  const long grid = std::clamp<long>(static_cast<long>(6 - std::floor(std::log2(delta))), 26, 48);

  // Offset copy of the part, with low-angle lead-in and lead-out.
  std::vector<Vec2> dirs, normals;
  for (std::size_t i = 0; i + 1 < part.size(); ++i) {
    const Vec2 a = to_vec(part[i]), b = to_vec(part[i + 1]);
    const Vec2 u = normalize({b.x - a.x, b.y - a.y});
    dirs.push_back(u);
    normals.push_back({-side * u.y, side * u.x});
  }
  std::vector<Point> detour;
  {
    const Vec2 p0 = to_vec(part.front());
    detour.push_back(snap_point(p0.x + lead * dirs.front().x + delta * normals.front().x,
                                p0.y + lead * dirs.front().y + delta * normals.front().y, grid));
  }
  for (std::size_t i = 1; i + 1 < part.size(); ++i) {
    const Vec2 sum = {normals[i - 1].x + normals[i].x, normals[i - 1].y + normals[i].y};
    const double len = std::hypot(sum.x, sum.y);
    const Vec2 n = len < 1e-9 ? normals[i] : Vec2{sum.x / len, sum.y / len};
    const Vec2 p = to_vec(part[i]);
    detour.push_back(snap_point(p.x + delta * n.x, p.y + delta * n.y, grid));
  }
  {
    const Vec2 pm = to_vec(part.back());
    detour.push_back(snap_point(pm.x - lead * dirs.back().x + delta * normals.back().x,
                                pm.y - lead * dirs.back().y + delta * normals.back().y, grid));
  }
  if (!forward) std::reverse(detour.begin(), detour.end());

  std::vector<Point> pts;
  if (from_is_vertex) {
    pts.push_back(moved_curve.front());
  } else {
    const CurvePos& from = choice.moved_span.from;
    for (std::size_t i = 0; i <= from.segment; ++i) pts.push_back(moved_curve.points()[i]);
    pts.push_back(point_at(moved_curve, CurvePos{from.segment, from.t * (1 - corner_frac)}));
  }
  for (const Point& p : detour) pts.push_back(p);
  if (to_is_vertex) {
    pts.push_back(moved_curve.back());
  } else {
    const CurvePos& to = choice.moved_span.to;
    pts.push_back(point_at(moved_curve, CurvePos{to.segment, to.t + (1 - to.t) * corner_frac}));
    for (std::size_t i = to.segment + 1; i < moved_curve.size(); ++i)
      pts.push_back(moved_curve.points()[i]);
  }
  std::vector<Point> deduped;
  for (const Point& p : pts) {
    if (deduped.empty() || deduped.back() != p) deduped.push_back(p);
  }
  try {
    return Polyline(std::move(deduped));
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool certify_reroute(const Drawing& before, const CrossingIndex& cx_before, const Drawing& after,
                     const LensChoice& choice) {
  if (!validate_general_position(after).ok()) {
    if (getenv("TMG_DEBUG_REROUTE"))
      fprintf(stderr, "reroute debug: validation failed\n%s", format_report(validate_general_position(after)).c_str());
    return false;
  }
  try {
    const CrossingIndex cx_after(after);
    for (std::size_t e1 = 0; e1 < before.edge_count(); ++e1) {
      for (std::size_t e2 = e1 + 1; e2 < before.edge_count(); ++e2) {
        const std::size_t old_count = cx_before.pair_count(e1, e2);
        std::size_t expected = old_count;
        const bool is_lens_pair = (e1 == std::min(choice.templ, choice.moved)) &&
                                  (e2 == std::max(choice.templ, choice.moved));
        if (is_lens_pair) {
          expected = old_count - choice.removed;
        } else if (e1 == choice.moved || e2 == choice.moved) {
          const std::size_t other = (e1 == choice.moved) ? e2 : e1;
          expected = old_count -
                     pair_crossings_in_span(cx_before, choice.moved, choice.moved_span, other) +
                     pair_crossings_in_span(cx_before, choice.templ, choice.templ_span, other);
        }
        if (cx_after.pair_count(e1, e2) != expected) {
          if (getenv("TMG_DEBUG_REROUTE"))
            fprintf(stderr, "reroute debug: pair (%s,%s) expected %zu got %zu\n",
                    before.edges()[e1].id.c_str(), before.edges()[e2].id.c_str(), expected,
                    cx_after.pair_count(e1, e2));
          return false;
        }
      }
    }
  } catch (const Error& err) {
    if (getenv("TMG_DEBUG_REROUTE"))
      fprintf(stderr, "reroute debug: crossing index threw: %s\n", err.what());
    return false;
  }
  return true;
}

}  // namespace

std::optional<Drawing> reroute_empty_lens_step(const Drawing& d, const RerouteOptions& options) {
  const CrossingIndex cx(d);
  const auto choice = choose_lens(d, cx, options);
  if (!choice) return std::nullopt;

  for (int attempt = 0; attempt < 40; ++attempt) {
    const auto curve = build_rerouted_curve(d, *choice, attempt);
    if (!curve) continue;
    Drawing candidate;
    try {
      for (const auto& v : d.vertices()) candidate.add_vertex(v.id, v.position);
      for (std::size_t e = 0; e < d.edge_count(); ++e) {
        const Edge& edge = d.edges()[e];
        candidate.add_edge(edge.id, edge.u, edge.v, e == choice->moved ? *curve : edge.curve);
      }
    } catch (const Error&) {
      continue;
    }
    if (certify_reroute(d, cx, candidate, *choice)) return candidate;
  }
  fail(ErrorCode::GenerationFailed, "could not certify a rerouted curve");
}

Drawing reroute_to_fixpoint(const Drawing& d, const RerouteOptions& options) {
  std::size_t parallel_pairs = 0;
  for (std::size_t e1 = 0; e1 < d.edge_count(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < d.edge_count(); ++e2) {
      if (d.parallel(e1, e2)) ++parallel_pairs;
    }
  }
  const std::size_t limit = crossing_number(d) + parallel_pairs + 1;

  Drawing current = d;
  for (std::size_t step = 0; step < limit; ++step) {
    auto next = reroute_empty_lens_step(current, options);
    if (!next) return current;
    current = std::move(*next);
  }
  if (!reroute_empty_lens_step(current, options)) return current;
  fail(ErrorCode::IterationLimitExceeded,
       "rerouting did not reach a lens-free drawing within the step budget");
}

}  // namespace tmg
