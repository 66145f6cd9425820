#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tmg/crossings.hpp"
#include "tmg/drawing.hpp"

namespace tmg {

// A lens is a simple closed region bounded by parts of exactly two edges:
// the full curves of an interior-disjoint parallel pair, the parts between
// two crossings, or the parts between a shared endpoint and a crossing.
enum class LensKind { FullParallelPair, BetweenCrossings, EndpointToCrossing };

const char* to_string(LensKind kind);

struct CurveSpan {
  CurvePos from;
  CurvePos to;  // from < to
};

struct Lens {
  std::size_t e1;  // edge indices, e1 < e2
  std::size_t e2;
  LensKind kind;
  CurveSpan span1;
  CurveSpan span2;
  Polyline boundary;  // simple closed polyline, first point == last point
  std::vector<std::size_t> interior_vertices;
  std::vector<std::size_t> exterior_vertices;
  std::vector<std::size_t> boundary_vertices;  // corner endpoints on the boundary
};

enum class ParallelLensStatus { Lens, NotSimple };

struct ParallelLensResult {
  ParallelLensStatus status;
  std::optional<Lens> lens;  // set when status == Lens
};

// The lens of a parallel pair with interior-disjoint curves; NotSimple when
// the two curves cross each other. Throws NotParallel.
ParallelLensResult lens_of_parallel_pair(const Drawing& d, const std::string& e1,
                                         const std::string& e2);

// Every lens of every kind in the drawing.
std::vector<Lens> enumerate_lenses(const Drawing& d, const CrossingIndex& cx);

// Interior-empty lenses, restricted to the inclusion-minimal ones.
std::vector<Lens> empty_lenses(const Drawing& d);
std::vector<Lens> empty_lenses(const Drawing& d, const CrossingIndex& cx);

// True when b's interior is strictly contained in a's interior.
bool lens_interior_contains(const Lens& a, const Lens& b);

// Rightward ray-crossing parity of every (edge curve, vertex) pair, with the
// same half-open rule as the point classifier. For an interior-disjoint
// parallel pair the lens boundary is the union of the two curves, so a
// vertex lies inside exactly when the two parities differ. One table makes
// every parallel-pair classification O(1).
class RayParityTable {
 public:
  explicit RayParityTable(const Drawing& d);
  bool odd(std::size_t edge, std::size_t vertex) const {
    return bits_[edge * vertex_count_ + vertex];
  }
  bool lens_interior(std::size_t e1, std::size_t e2, std::size_t vertex) const {
    return odd(e1, vertex) != odd(e2, vertex);
  }

 private:
  std::size_t vertex_count_;
  std::vector<bool> bits_;
};

}  // namespace tmg
