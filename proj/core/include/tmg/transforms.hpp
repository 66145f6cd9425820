#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tmg/drawing.hpp"
#include "tmg/lens.hpp"
#include "tmg/rational.hpp"

namespace tmg {

// Removes the named edges; the remaining drawing inherits its curves.
Drawing remove_edges(const Drawing& d, const std::vector<std::string>& edge_ids);

// Replaces one vertex by two nearby copies, reattaching each incident edge to
// one of them. The groups must be contiguous in the rotation order at the
// vertex (one may be empty); the new locations must sit inside the clearance
// disk, closer to the vertex than any non-incident drawing feature.
struct SplitPlan {
  std::string vertex;
  std::vector<std::string> group1;
  std::vector<std::string> group2;
  Point location1;
  Point location2;
};

// Plan with deterministic locations: along a direction inside each group's
// angular wedge, at a fraction (scale) of the clearance radius.
SplitPlan make_split_plan(const Drawing& d, const std::string& vertex,
                          const std::vector<std::string>& group1,
                          const Rational& scale = Rational(1) / 2);

// Applies the plan. The result is certified: general position holds and every
// edge pair keeps its exact crossing count (so cr is unchanged). Throws
// NonContiguousGroups / ClearanceViolation.
Drawing vertex_split(const Drawing& d, const SplitPlan& plan);

// Splits every vertex of degree > cap into ceil(deg / floor(cap)) copies of
// degree <= cap by grouping floor(cap) consecutive edges in rotation order,
// starting from the edge with the lexicographically smallest direction.
// Requires cap >= 1. Crossings are unchanged.
Drawing split_high_degree(const Drawing& d, const Rational& degree_cap);

struct RerouteOptions {
  // Also reroute empty lenses between a shared endpoint and a crossing.
  bool endpoint_to_crossing = true;
};

// One rerouting step: picks an inclusion-minimal empty lens and replaces the
// part of one bounding edge by an offset copy of the other's part. Lenses
// between crossings lose both corner crossings, endpoint lenses lose one;
// an empty lens of a full parallel pair is pulled against its partner with
// the crossing count unchanged. Returns nullopt when no empty lens remains.
std::optional<Drawing> reroute_empty_lens_step(const Drawing& d,
                                               const RerouteOptions& options = {});

// Iterates reroute_empty_lens_step until no empty lens remains. Throws
// IterationLimitExceeded after cr(d) + (number of parallel pairs) + 1 steps;
// the limit is reachable only when an empty full-parallel-pair lens persists.
Drawing reroute_to_fixpoint(const Drawing& d, const RerouteOptions& options = {});

// Introduces a new vertex at every crossing, splitting both edges there.
// n' = n + cr, e' = e + 2 cr, and the result is crossing-free.
Drawing planarize(const Drawing& d);

}  // namespace tmg
