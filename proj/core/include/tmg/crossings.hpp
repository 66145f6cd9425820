#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tmg/drawing.hpp"

namespace tmg {

// Position along a polyline: segment index plus parameter within the segment.
// The curve start is {0, 0}, the end {segment_count() - 1, 1}; proper
// crossings have t strictly inside (0, 1).
struct CurvePos {
  std::size_t segment = 0;
  Rational t = Rational(0);

  bool operator==(const CurvePos& o) const { return segment == o.segment && t == o.t; }
  bool operator<(const CurvePos& o) const {
    if (segment != o.segment) return segment < o.segment;
    return t < o.t;
  }
  bool operator<=(const CurvePos& o) const { return *this == o || *this < o; }
};

Point point_at(const Polyline& curve, const CurvePos& pos);
CurvePos curve_start(const Polyline& curve);
CurvePos curve_end(const Polyline& curve);

// Points of the curve restricted to [from, to], from < to; endpoints included.
std::vector<Point> slice_points(const Polyline& curve, const CurvePos& from, const CurvePos& to);

// A proper interior crossing of two distinct edges (e1 < e2 by index).
struct Crossing {
  std::size_t e1;
  std::size_t e2;
  Point at;
  CurvePos pos1;  // along e1's curve
  CurvePos pos2;  // along e2's curve
};

// All proper crossings, sorted by (e1, e2, pos1). Throws InvalidDrawing when
// edges overlap, touch at a non-shared point, or three edges meet at a point.
std::vector<Crossing> crossings(const Drawing& d);

std::size_t crossing_number(const Drawing& d);

// Proper crossings between the two named edges. Throws UnknownEdge.
std::size_t edge_pair_crossings(const Drawing& d, const std::string& e1, const std::string& e2);

// Precomputed crossing data reused across analyses of one drawing.
class CrossingIndex {
 public:
  explicit CrossingIndex(const Drawing& d);

  const std::vector<Crossing>& all() const { return all_; }
  std::size_t count() const { return all_.size(); }
  std::size_t pair_count(std::size_t e1, std::size_t e2) const;
  // Crossings of an unordered pair, sorted along e1's curve (e1 < e2).
  std::vector<const Crossing*> of_pair(std::size_t e1, std::size_t e2) const;
  // All crossings on edge e, sorted along its curve.
  std::vector<std::pair<CurvePos, const Crossing*>> on_edge(std::size_t e) const;

 private:
  std::vector<Crossing> all_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_pair_;
};

}  // namespace tmg
