#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tmg/rational.hpp"

namespace tmg {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

// Lexicographic (x, then y); a total order for sorting and grouping.
bool lex_less(const Point& a, const Point& b);

Point point(long x, long y);
Point point(const Rational& x, const Rational& y);

// (a - o) x (b - o), exact.
Rational cross(const Point& o, const Point& a, const Point& b);
// (a - o) . (b - o), exact.
Rational dot(const Point& o, const Point& a, const Point& b);

enum class Orientation { Clockwise, CounterClockwise, Collinear };

Orientation orientation(const Point& p, const Point& q, const Point& r);
int orientation_sign(const Point& p, const Point& q, const Point& r);  // -1 / 0 / +1

struct Segment {
  Point a;
  Point b;

  Segment(Point a_, Point b_);  // requires a != b
};

bool point_on_segment(const Point& p, const Segment& s);       // closed
bool point_in_open_segment(const Point& p, const Segment& s);  // excludes endpoints

Rational squared_distance(const Point& a, const Point& b);
Rational squared_distance_point_segment(const Point& p, const Segment& s);

enum class SegmentRelation { Empty, Proper, Touch, Overlap };

struct SegmentIntersection {
  SegmentRelation kind = SegmentRelation::Empty;
  std::optional<Point> point;  // set for Proper and Touch
};

// Proper: open interiors cross transversally at one point.
// Touch: a single common point involving at least one segment endpoint.
// Overlap: a positive-length collinear intersection.
SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

// The Proper case with the crossing parameters along both segments, in (0,1).
struct ProperCrossing {
  Point point;
  Rational t1;
  Rational t2;
};
std::optional<ProperCrossing> proper_crossing(const Segment& s1, const Segment& s2);

// Polyline with >= 2 points, consecutive points distinct, and no consecutive
// segment doubling back collinearly over its predecessor.
class Polyline {
 public:
  explicit Polyline(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t segment_count() const { return points_.size() - 1; }
  Segment segment(std::size_t i) const;
  const Point& front() const { return points_.front(); }
  const Point& back() const { return points_.back(); }
  bool closed() const { return points_.front() == points_.back(); }

 private:
  std::vector<Point> points_;
};

// True when a closed polyline bounds without self-contact (segments meet only
// at shared consecutive endpoints).
bool closed_polyline_simple(const Polyline& curve);

// L1-normalized representative of a nonzero direction vector.
Point canonical_direction(const Point& v);

// Strict counterclockwise angular order of nonzero vectors, starting at +x.
bool angle_less(const Point& u, const Point& v);

enum class Region { Interior, Exterior, OnCurve };

// Exact even-odd classification against a simple closed polyline.
// Throws NotClosed / NotSimple.
Region point_in_closed_curve(const Point& p, const Polyline& curve);

// Same classification; the caller guarantees the curve is closed and simple.
Region point_in_closed_curve_unchecked(const Point& p, const Polyline& curve);

}  // namespace tmg
