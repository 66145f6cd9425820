#pragma once

// Shared fixtures and independent oracles for the test suite.

#include <random>
#include <vector>

#include "tmg/constructions.hpp"
#include "tmg/crossings.hpp"
#include "tmg/drawing.hpp"
#include "tmg/geometry.hpp"

namespace tmgtest {

using namespace tmg;

inline Point P(long x, long y) { return point(x, y); }
inline Rational R(long num, long den = 1) { return Rational(num) / Rational(den); }

// Two straight edges crossing once: n = 4, e = 2, cr = 1.
inline Drawing x_drawing() {
  Drawing d;
  d.add_vertex("a", P(0, 0));
  d.add_vertex("b", P(2, 2));
  d.add_vertex("c", P(0, 2));
  d.add_vertex("d", P(2, 0));
  d.add_edge("ab", "a", "b", Polyline({P(0, 0), P(2, 2)}));
  d.add_edge("cd", "c", "d", Polyline({P(0, 2), P(2, 0)}));
  return d;
}

// Crossing-free straight path v0 - v1 - ... - v(n-1) on the moment curve.
inline Drawing path_drawing(std::size_t n) {
  Drawing d;
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(P(static_cast<long>(i), static_cast<long>(i * i)));
    d.add_vertex("v" + std::to_string(i), pts.back());
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    d.add_edge("e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1),
               Polyline({pts[i], pts[i + 1]}));
  }
  return d;
}

// Parallel pair around a lens: w inside, z outside.
inline Drawing lens_with_interior_vertex() {
  Drawing d;
  d.add_vertex("u", P(0, 0));
  d.add_vertex("v", P(4, 0));
  d.add_vertex("w", P(2, 0));
  d.add_vertex("z", P(8, 5));
  d.add_edge("top", "u", "v", Polyline({P(0, 0), P(2, 2), P(4, 0)}));
  d.add_edge("bottom", "u", "v", Polyline({P(0, 0), P(2, -2), P(4, 0)}));
  return d;
}

// Parallel pair whose curves cross once.
inline Drawing crossing_parallel_pair() {
  Drawing d;
  d.add_vertex("u", P(0, 0));
  d.add_vertex("v", P(4, 0));
  d.add_edge("top", "u", "v", Polyline({P(0, 0), P(2, 1), P(4, 0)}));
  d.add_edge("swerve", "u", "v", Polyline({P(0, 0), P(1, -1), P(3, 1), P(4, 0)}));
  return d;
}

// Non-adjacent pair crossing twice (S over a straight base), nothing between.
inline Drawing double_crossing_pair() { return empty_lens_gadget(LensKind::BetweenCrossings); }

// Independent crossing counter: all segment pairs of all edge pairs, geometry
// primitives only. Deliberately ignorant of the production enumeration.
inline std::size_t naive_crossing_count(const Drawing& d) {
  std::size_t count = 0;
  for (std::size_t e1 = 0; e1 < d.edge_count(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < d.edge_count(); ++e2) {
      const Polyline& c1 = d.edges()[e1].curve;
      const Polyline& c2 = d.edges()[e2].curve;
      for (std::size_t i = 0; i + 1 < c1.size(); ++i) {
        for (std::size_t j = 0; j + 1 < c2.size(); ++j) {
          if (proper_crossing(c1.segment(i), c2.segment(j))) ++count;
        }
      }
    }
  }
  return count;
}

inline Point random_point(std::mt19937_64& rng, long span) {
  return P(static_cast<long>(rng() % static_cast<std::uint64_t>(span)),
           static_cast<long>(rng() % static_cast<std::uint64_t>(span)));
}

}  // namespace tmgtest
