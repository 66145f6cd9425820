#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tmg/drawing.hpp"

namespace tmg {

// General-position violations. Edge curves must additionally be simple arcs;
// a self-crossing curve is reported as SelfIntersectingEdge.
enum class ViolationKind {
  VertexOnEdgeInterior,
  NonProperTouch,
  OverlappingEdges,
  TripleCrossing,
  SelfIntersectingEdge,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::string> edges;
  std::vector<std::string> vertices;
  std::optional<Point> location;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the general-position conditions: no vertex interior to an edge, all
// shared interior points are proper crossings, no overlapping edges, no three
// edges through one point, and every curve a simple arc.
ValidationReport validate_general_position(const Drawing& d);

std::string format_report(const ValidationReport& report);

}  // namespace tmg
