#include "tmg/crossings.hpp"

#include <algorithm>

#include "segment_grid.hpp"
#include "tmg/error.hpp"

namespace tmg {

Point point_at(const Polyline& curve, const CurvePos& pos) {
  const Point& a = curve.points()[pos.segment];
  const Point& b = curve.points()[pos.segment + 1];
  return Point{a.x + pos.t * (b.x - a.x), a.y + pos.t * (b.y - a.y)};
}

CurvePos curve_start(const Polyline&) { return CurvePos{0, Rational(0)}; }

CurvePos curve_end(const Polyline& curve) {
  return CurvePos{curve.segment_count() - 1, Rational(1)};
}

std::vector<Point> slice_points(const Polyline& curve, const CurvePos& from, const CurvePos& to) {
  if (!(from < to)) fail(ErrorCode::DomainError, "empty curve slice");
  std::vector<Point> pts;
  pts.push_back(point_at(curve, from));
  for (std::size_t i = from.segment + 1; i <= to.segment; ++i) {
    const Point& joint = curve.points()[i];
    if (joint != pts.back()) pts.push_back(joint);
  }
  const Point last = point_at(curve, to);
  if (last != pts.back()) pts.push_back(last);
  return pts;
}

namespace {

bool is_shared_vertex_point(const Drawing& d, std::size_t e1, std::size_t e2, const Point& p) {
  for (const std::size_t v : d.shared_endpoints(e1, e2)) {
    if (d.vertices()[v].position == p) return true;
  }
  return false;
}

}  // namespace

std::vector<Crossing> crossings(const Drawing& d) {
  std::vector<Crossing> out;
  for (const auto& [r1, r2] : detail::candidate_segment_pairs(d, /*include_same_edge=*/false)) {
    auto a = r1, b = r2;
    if (a.edge > b.edge) std::swap(a, b);
    const Segment s1 = d.edges()[a.edge].curve.segment(a.seg);
    const Segment s2 = d.edges()[b.edge].curve.segment(b.seg);
    if (const auto pc = proper_crossing(s1, s2)) {
      out.push_back(Crossing{a.edge, b.edge, pc->point, CurvePos{a.seg, pc->t1},
                             CurvePos{b.seg, pc->t2}});
      continue;
    }
    const auto hit = segment_intersection(s1, s2);
    if (hit.kind == SegmentRelation::Overlap)
      fail(ErrorCode::InvalidDrawing, "edges '" + d.edges()[a.edge].id + "' and '" +
                                          d.edges()[b.edge].id + "' overlap");
    if (hit.kind == SegmentRelation::Touch &&
        !is_shared_vertex_point(d, a.edge, b.edge, *hit.point)) {
      fail(ErrorCode::InvalidDrawing, "edges '" + d.edges()[a.edge].id + "' and '" +
                                          d.edges()[b.edge].id +
                                          "' touch without a proper crossing");
    }
  }
  // No three edges through one point: crossing points must be distinct.
  std::vector<Point> points;
  points.reserve(out.size());
  for (const auto& c : out) points.push_back(c.at);
  std::sort(points.begin(), points.end(), lex_less);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i] == points[i + 1])
      fail(ErrorCode::InvalidDrawing, "three edges cross at one point");
  }
  std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
    if (x.e1 != y.e1) return x.e1 < y.e1;
    if (x.e2 != y.e2) return x.e2 < y.e2;
    return x.pos1 < y.pos1;
  });
  return out;
}

std::size_t crossing_number(const Drawing& d) { return crossings(d).size(); }

std::size_t edge_pair_crossings(const Drawing& d, const std::string& e1, const std::string& e2) {
  const std::size_t i1 = d.edge_index(e1);
  const std::size_t i2 = d.edge_index(e2);
  if (i1 == i2) fail(ErrorCode::DomainError, "edge paired with itself");
  const CrossingIndex index(d);
  return index.pair_count(i1, i2);
}

CrossingIndex::CrossingIndex(const Drawing& d) : all_(crossings(d)) {
  for (std::size_t i = 0; i < all_.size(); ++i) {
    by_pair_[{all_[i].e1, all_[i].e2}].push_back(i);
  }
}

std::size_t CrossingIndex::pair_count(std::size_t e1, std::size_t e2) const {
  if (e1 > e2) std::swap(e1, e2);
  const auto it = by_pair_.find({e1, e2});
  return it == by_pair_.end() ? 0 : it->second.size();
}

std::vector<const Crossing*> CrossingIndex::of_pair(std::size_t e1, std::size_t e2) const {
  if (e1 > e2) std::swap(e1, e2);
  std::vector<const Crossing*> out;
  const auto it = by_pair_.find({e1, e2});
  if (it == by_pair_.end()) return out;
  for (const std::size_t i : it->second) out.push_back(&all_[i]);
  return out;  // already sorted along e1 by construction
}

std::vector<std::pair<CurvePos, const Crossing*>> CrossingIndex::on_edge(std::size_t e) const {
  std::vector<std::pair<CurvePos, const Crossing*>> out;
  for (const auto& c : all_) {
    if (c.e1 == e) out.push_back({c.pos1, &c});
    if (c.e2 == e) out.push_back({c.pos2, &c});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace tmg
