#include "tmg/geometry.hpp"

#include <algorithm>
#include <utility>

#include "tmg/error.hpp"

namespace tmg {

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Point point(long x, long y) { return Point{Rational(x), Rational(y)}; }
Point point(const Rational& x, const Rational& y) { return Point{x, y}; }

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational dot(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Rational c = cross(p, q, r);
  if (c > 0) return Orientation::CounterClockwise;
  if (c < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

int orientation_sign(const Point& p, const Point& q, const Point& r) {
  const Rational c = cross(p, q, r);
  if (c > 0) return 1;
  if (c < 0) return -1;
  return 0;
}

Segment::Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == b) fail(ErrorCode::InvariantViolation, "degenerate segment");
}

bool point_on_segment(const Point& p, const Segment& s) {
  if (orientation_sign(s.a, s.b, p) != 0) return false;
  return dot(p, s.a, s.b) <= 0;  // p between a and b (inclusive)
}

bool point_in_open_segment(const Point& p, const Segment& s) {
  if (p == s.a || p == s.b) return false;
  return point_on_segment(p, s);
}

Rational squared_distance(const Point& a, const Point& b) {
  return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

Rational squared_distance_point_segment(const Point& p, const Segment& s) {
  const Rational len2 = squared_distance(s.a, s.b);
  Rational t = dot(s.a, p, s.b) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  const Point proj{s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)};
  return squared_distance(p, proj);
}

namespace {

// Scalar position of a collinear point along the segment's dominant axis.
Rational axis_value(const Point& p, bool use_x) { return use_x ? p.x : p.y; }

}  // namespace

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  const int d1 = orientation_sign(s1.a, s1.b, s2.a);
  const int d2 = orientation_sign(s1.a, s1.b, s2.b);
  const int d3 = orientation_sign(s2.a, s2.b, s1.a);
  const int d4 = orientation_sign(s2.a, s2.b, s1.b);

  if (d1 == 0 && d2 == 0) {
    // All four points on one line; compare 1D intervals.
    const bool use_x = s1.a.x != s1.b.x;
    Rational lo1 = axis_value(s1.a, use_x), hi1 = axis_value(s1.b, use_x);
    Rational lo2 = axis_value(s2.a, use_x), hi2 = axis_value(s2.b, use_x);
    if (lo1 > hi1) std::swap(lo1, hi1);
    if (lo2 > hi2) std::swap(lo2, hi2);
    const Rational lo = std::max(lo1, lo2);
    const Rational hi = std::min(hi1, hi2);
    if (lo > hi) return {SegmentRelation::Empty, std::nullopt};
    if (lo < hi) return {SegmentRelation::Overlap, std::nullopt};
    // Single shared point; it is an endpoint of both segments.
    for (const Point* p : {&s1.a, &s1.b}) {
      if (axis_value(*p, use_x) == lo) return {SegmentRelation::Touch, *p};
    }
    return {SegmentRelation::Touch, s2.a};  // unreachable
  }

  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    const auto pc = proper_crossing(s1, s2);
    return {SegmentRelation::Proper, pc->point};
  }

  // A single contact involving an endpoint, if any.
  if (d1 == 0 && point_on_segment(s2.a, s1)) return {SegmentRelation::Touch, s2.a};
  if (d2 == 0 && point_on_segment(s2.b, s1)) return {SegmentRelation::Touch, s2.b};
  if (d3 == 0 && point_on_segment(s1.a, s2)) return {SegmentRelation::Touch, s1.a};
  if (d4 == 0 && point_on_segment(s1.b, s2)) return {SegmentRelation::Touch, s1.b};

  return {SegmentRelation::Empty, std::nullopt};
}

std::optional<ProperCrossing> proper_crossing(const Segment& s1, const Segment& s2) {
  const Point r{s1.b.x - s1.a.x, s1.b.y - s1.a.y};
  const Point s{s2.b.x - s2.a.x, s2.b.y - s2.a.y};
  const Rational denom = r.x * s.y - r.y * s.x;
  if (denom == 0) return std::nullopt;
  const Point qp{s2.a.x - s1.a.x, s2.a.y - s1.a.y};
  const Rational t1 = (qp.x * s.y - qp.y * s.x) / denom;
  const Rational t2 = (qp.x * r.y - qp.y * r.x) / denom;
  if (t1 <= 0 || t1 >= 1 || t2 <= 0 || t2 >= 1) return std::nullopt;
  const Point at{s1.a.x + t1 * r.x, s1.a.y + t1 * r.y};
  return ProperCrossing{at, t1, t2};
}

Polyline::Polyline(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) fail(ErrorCode::InvariantViolation, "polyline needs >= 2 points");
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (points_[i] == points_[i + 1])
      fail(ErrorCode::InvariantViolation, "polyline has repeated consecutive point");
  }
  for (std::size_t i = 0; i + 2 < points_.size(); ++i) {
    const Point& a = points_[i];
    const Point& b = points_[i + 1];
    const Point& c = points_[i + 2];
    if (orientation_sign(a, b, c) == 0 && dot(b, a, c) > 0)
      fail(ErrorCode::InvariantViolation, "consecutive polyline segments overlap collinearly");
  }
}

Segment Polyline::segment(std::size_t i) const { return Segment(points_[i], points_[i + 1]); }

bool closed_polyline_simple(const Polyline& curve) {
  if (!curve.closed()) return false;
  const std::size_t m = curve.segment_count();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
      const auto hit = segment_intersection(curve.segment(i), curve.segment(j));
      if (adjacent) {
        const Point& joint = (j == i + 1) ? curve.points()[j] : curve.points()[0];
        if (hit.kind != SegmentRelation::Touch || !hit.point || *hit.point != joint)
          return false;
      } else if (hit.kind != SegmentRelation::Empty) {
        return false;
      }
    }
  }
  return true;
}

Point canonical_direction(const Point& v) {
  const Rational norm = abs(v.x) + abs(v.y);
  if (norm == 0) fail(ErrorCode::DomainError, "zero direction vector");
  return Point{v.x / norm, v.y / norm};
}

bool angle_less(const Point& u, const Point& v) {
  const auto half = [](const Point& w) {
    return (w.y > 0 || (w.y == 0 && w.x > 0)) ? 0 : 1;
  };
  const int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  const Rational c = u.x * v.y - u.y * v.x;
  return c > 0;
}

Region point_in_closed_curve_unchecked(const Point& p, const Polyline& curve) {
  const auto& pts = curve.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (point_on_segment(p, Segment(pts[i], pts[i + 1]))) return Region::OnCurve;
  }
  // Even-odd ray cast toward +x with the half-open vertex rule.
  bool inside = false;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point& a = pts[i];
    const Point& b = pts[i + 1];
    const bool crosses_up = a.y <= p.y && p.y < b.y;
    const bool crosses_down = b.y <= p.y && p.y < a.y;
    if (!crosses_up && !crosses_down) continue;
    const Rational x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (x_at > p.x) inside = !inside;
  }
  return inside ? Region::Interior : Region::Exterior;
}

Region point_in_closed_curve(const Point& p, const Polyline& curve) {
  if (!curve.closed()) fail(ErrorCode::NotClosed, "curve is not closed");
  if (!closed_polyline_simple(curve)) fail(ErrorCode::NotSimple, "curve is not simple");
  return point_in_closed_curve_unchecked(p, curve);
}

}  // namespace tmg
