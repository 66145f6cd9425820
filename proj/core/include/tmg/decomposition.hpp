#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tmg/crossings.hpp"
#include "tmg/drawing.hpp"
#include "tmg/styles.hpp"

namespace tmg {

// A balanced split: both parts carry at least n/5 of the vertices; the cut
// lists exactly the edges with endpoints in different parts.
struct Bipartition {
  std::vector<std::size_t> part1;  // vertex indices
  std::vector<std::size_t> part2;
  std::vector<std::size_t> cut_edges;
};

// The width counts every removed edge: the cut, plus any within-part edges
// removed so that both parts stay in the drawing style (separated parts can
// lose lens witnesses to the other side; dropping one edge of such a pair
// repairs them). For the other styles no repairs are ever needed.
struct BisectionResult {
  std::size_t width = 0;
  Bipartition bipartition;
  std::vector<std::size_t> removed_edges;  // cut + repairs
};

// Exact minimum over all balanced bipartitions and repair sets, by
// exhaustive enumeration. Guarded to n <= 20 (TooLargeForOracle).
BisectionResult bisection_width_oracle(const Drawing& d, const StyleSpec& style);

// Deterministic coordinate-sweep seeds plus swap/move local search over the
// same removal objective.
BisectionResult bisection_heuristic(const Drawing& d, const StyleSpec& style);

struct BisectionInequalityReport {
  std::size_t n = 0;
  std::size_t e = 0;
  std::size_t cr = 0;
  std::size_t max_degree = 0;
  std::size_t width = 0;
  Rational k2;
  bool holds = false;  // width^2 <= k2^2 (cr + max_degree * e + n), exactly
  double lhs = 0;      // width
  double rhs = 0;      // k2 sqrt(cr + max_degree * e + n)
};

// Checks the bisection-width bound with the exact oracle width.
BisectionInequalityReport check_bisection_inequality(const Drawing& d, const StyleSpec& style,
                                                     const Rational& k2);

enum class Cutter { Oracle, Heuristic };

struct PartRecord {
  std::vector<std::size_t> vertices;  // indices into the input drawing
  std::size_t edge_count = 0;
  bool split_this_step = false;
};

struct DecompositionStep {
  std::size_t index = 0;             // i
  std::vector<PartRecord> parts;     // state after step i
  std::size_t parts_total = 0;       // M_i
  std::size_t parts_large = 0;       // m_i: parts with >= (4/5)^{i+1} n vertices
  Rational size_threshold;           // (4/5)^{i+1} n
  Rational stop_lhs;                 // (4/5)^i
  double stop_rhs = 0;               // (1/(2 k3))^x e^x / n^(x+1), for display
  bool stop = false;                 // stop-condition verdict for step i+1 (decided exactly)
  std::vector<std::string> removed_edges;  // removed while executing step i+1
};

struct DecompositionTrace {
  StyleParams params;
  Cutter cutter = Cutter::Oracle;
  std::size_t n = 0;
  std::size_t e = 0;
  std::vector<DecompositionStep> steps;  // indices 0..k
  std::size_t final_step = 0;            // k
  std::size_t total_removed = 0;
  double removed_ratio = 0;  // removed / e; reported, never asserted
  std::string notes;
};

// Exact rational evaluation of the stop rule:
// (4/5)^i < (1 / (2 k3))^x * e^x / n^(x+1) with x = 1/(b-1).
bool decomposition_stop(std::size_t i, std::size_t n, std::size_t e, const StyleParams& params);

// Runs the decomposition: repeatedly bisect every part that still holds at
// least (4/5)^{i+1} n vertices (parts at the threshold are split; parts with
// fewer than 2 vertices persist), until the stop rule fires. Each part is
// checked against the style at every step (StyleViolated if not).
DecompositionTrace decompose(const Drawing& d, const StyleParams& params, Cutter cutter);

std::string format_trace(const DecompositionTrace& trace);

}  // namespace tmg
