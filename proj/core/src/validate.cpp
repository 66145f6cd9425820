#include "tmg/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "segment_grid.hpp"
#include "tmg/rational.hpp"

namespace tmg {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::VertexOnEdgeInterior: return "VertexOnEdgeInterior";
    case ViolationKind::NonProperTouch: return "NonProperTouch";
    case ViolationKind::OverlappingEdges: return "OverlappingEdges";
    case ViolationKind::TripleCrossing: return "TripleCrossing";
    case ViolationKind::SelfIntersectingEdge: return "SelfIntersectingEdge";
  }
  return "Violation";
}

namespace {

bool shared_vertex_point(const Drawing& d, std::size_t e1, std::size_t e2, const Point& p) {
  for (const std::size_t v : d.shared_endpoints(e1, e2)) {
    if (d.vertices()[v].position == p) return true;
  }
  return false;
}

bool any_vertex_point(const Drawing& d, const Point& p) {
  for (const auto& v : d.vertices()) {
    if (v.position == p) return true;
  }
  return false;
}

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

}  // namespace

ValidationReport validate_general_position(const Drawing& d) {
  ValidationReport report;

  // Condition (a): a vertex may appear on a curve only as that curve's end.
  for (const auto& vert : d.vertices()) {
    for (const auto& edge : d.edges()) {
      const auto& pts = edge.curve.points();
      const bool incident = edge.u == vert.id || edge.v == vert.id;
      for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
        if (!point_on_segment(vert.position, Segment(pts[s], pts[s + 1]))) continue;
        const bool at_start = s == 0 && vert.position == pts.front();
        const bool at_end = s + 2 == pts.size() && vert.position == pts.back();
        if (incident && (at_start || at_end)) continue;
        report.violations.push_back(Violation{ViolationKind::VertexOnEdgeInterior,
                                              {edge.id},
                                              {vert.id},
                                              vert.position});
        break;
      }
    }
  }

  std::vector<std::pair<Point, std::pair<std::size_t, std::size_t>>> proper_points;
  std::set<std::size_t> self_flagged;
  for (const auto& [r1, r2] : detail::candidate_segment_pairs(d, /*include_same_edge=*/true)) {
    const Segment s1 = d.edges()[r1.edge].curve.segment(r1.seg);
    const Segment s2 = d.edges()[r2.edge].curve.segment(r2.seg);
    const auto hit = segment_intersection(s1, s2);
    if (hit.kind == SegmentRelation::Empty) continue;

    if (r1.edge == r2.edge) {
      if (self_flagged.insert(r1.edge).second) {
        report.violations.push_back(Violation{ViolationKind::SelfIntersectingEdge,
                                              {d.edges()[r1.edge].id},
                                              {},
                                              hit.point});
      }
      continue;
    }

    const std::string& id1 = d.edges()[r1.edge].id;
    const std::string& id2 = d.edges()[r2.edge].id;
    switch (hit.kind) {
      case SegmentRelation::Overlap:
        report.violations.push_back(
            Violation{ViolationKind::OverlappingEdges, {id1, id2}, {}, std::nullopt});
        break;
      case SegmentRelation::Touch:
        if (shared_vertex_point(d, r1.edge, r2.edge, *hit.point)) break;
        if (any_vertex_point(d, *hit.point)) break;  // reported as VertexOnEdgeInterior
        report.violations.push_back(
            Violation{ViolationKind::NonProperTouch, {id1, id2}, {}, hit.point});
        break;
      case SegmentRelation::Proper:
        proper_points.push_back({*hit.point, {r1.edge, r2.edge}});
        break;
      case SegmentRelation::Empty:
        break;
    }
  }

  // Condition (d): no three edges through one point.
  std::map<Point, std::set<std::size_t>, PointLess> at_point;
  for (const auto& [p, pair] : proper_points) {
    at_point[p].insert(pair.first);
    at_point[p].insert(pair.second);
  }
  for (const auto& [p, edges] : at_point) {
    if (edges.size() < 3) continue;
    Violation v{ViolationKind::TripleCrossing, {}, {}, p};
    for (const std::size_t e : edges) v.edges.push_back(d.edges()[e].id);
    report.violations.push_back(std::move(v));
  }

  return report;
}

std::string format_report(const ValidationReport& report) {
  std::ostringstream out;
  if (report.ok()) {
    out << "valid\n";
    return out.str();
  }
  for (const auto& v : report.violations) {
    out << to_string(v.kind);
    if (!v.edges.empty()) {
      out << " edges=";
      for (std::size_t i = 0; i < v.edges.size(); ++i) out << (i ? "," : "") << v.edges[i];
    }
    if (!v.vertices.empty()) {
      out << " vertices=";
      for (std::size_t i = 0; i < v.vertices.size(); ++i) out << (i ? "," : "") << v.vertices[i];
    }
    if (v.location) {
      out << " at=(" << format_rational(v.location->x) << "," << format_rational(v.location->y)
          << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace tmg
