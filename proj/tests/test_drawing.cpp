#include <doctest.h>

#include <random>

#include "tmg/constructions.hpp"
#include "tmg/crossings.hpp"
#include "tmg/drawing.hpp"
#include "tmg/error.hpp"
#include "tmg/lens.hpp"
#include "tmg/validate.hpp"
#include "test_support.hpp"

using namespace tmg;
using tmgtest::P;
using tmgtest::R;

TEST_CASE("drawing construction enforces structural invariants") {
  Drawing d;
  d.add_vertex("a", P(0, 0));
  d.add_vertex("b", P(1, 0));
  CHECK_THROWS_AS(d.add_vertex("a", P(5, 5)), Error);
  CHECK_THROWS_AS(d.add_vertex("c", P(0, 0)), Error);
  CHECK_THROWS_AS(d.add_edge("loop", "a", "a", Polyline({P(0, 0), P(1, 1), P(0, 0)})), Error);
  CHECK_THROWS_AS(d.add_edge("off", "a", "b", Polyline({P(0, 0), P(2, 0)})), Error);
  d.add_edge("ok", "a", "b", Polyline({P(0, 0), P(1, 0)}));
  CHECK_THROWS_AS(d.edge_index("nope"), Error);
  CHECK_THROWS_AS(d.vertex_index("nope"), Error);
}

TEST_CASE("validator accepts a transversal crossing") {
  CHECK(validate_general_position(tmgtest::x_drawing()).ok());
}

TEST_CASE("validator flags a vertex in an edge interior") {
  Drawing d;
  d.add_vertex("a", P(0, 0));
  d.add_vertex("b", P(4, 0));
  d.add_vertex("w", P(2, 0));
  d.add_edge("ab", "a", "b", Polyline({P(0, 0), P(4, 0)}));
  const auto report = validate_general_position(d);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].kind == ViolationKind::VertexOnEdgeInterior);
}

TEST_CASE("validator flags three concurrent edges") {
  Drawing d;
  d.add_vertex("a", P(-2, 0));
  d.add_vertex("b", P(2, 0));
  d.add_vertex("c", P(0, -2));
  d.add_vertex("e", P(0, 2));
  d.add_vertex("f", P(-2, -2));
  d.add_vertex("g", P(2, 2));
  d.add_edge("h", "a", "b", Polyline({P(-2, 0), P(2, 0)}));
  d.add_edge("v", "c", "e", Polyline({P(0, -2), P(0, 2)}));
  d.add_edge("d", "f", "g", Polyline({P(-2, -2), P(2, 2)}));
  const auto report = validate_general_position(d);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) found = found || v.kind == ViolationKind::TripleCrossing;
  CHECK(found);
}

TEST_CASE("validator flags overlapping and touching edges") {
  Drawing overlap;
  overlap.add_vertex("a", P(0, 0));
  overlap.add_vertex("b", P(4, 0));
  overlap.add_vertex("c", P(1, 0));
  overlap.add_vertex("e", P(3, 0));
  overlap.add_edge("ab", "a", "b", Polyline({P(0, 0), P(4, 0)}));
  overlap.add_edge("ce", "c", "e", Polyline({P(1, 0), P(3, 0)}));
  bool saw_overlap = false;
  for (const auto& v : validate_general_position(overlap).violations)
    saw_overlap = saw_overlap || v.kind == ViolationKind::OverlappingEdges;
  CHECK(saw_overlap);

  Drawing touch;  // a polyline joint resting on another edge
  touch.add_vertex("a", P(0, 0));
  touch.add_vertex("b", P(4, 0));
  touch.add_vertex("c", P(0, 2));
  touch.add_vertex("e", P(4, 2));
  touch.add_edge("ab", "a", "b", Polyline({P(0, 0), P(4, 0)}));
  touch.add_edge("ce", "c", "e", Polyline({P(0, 2), P(2, 0), P(4, 2)}));
  bool saw_touch = false;
  for (const auto& v : validate_general_position(touch).violations)
    saw_touch = saw_touch || v.kind == ViolationKind::NonProperTouch;
  CHECK(saw_touch);
}

TEST_CASE("validator flags a self-intersecting curve") {
  Drawing d;
  d.add_vertex("a", P(0, 0));
  d.add_vertex("b", P(4, 0));
  d.add_edge("ab", "a", "b",
             Polyline({P(0, 0), P(3, 3), P(3, -1), P(1, 2), P(4, 0)}));
  bool saw = false;
  for (const auto& v : validate_general_position(d).violations)
    saw = saw || v.kind == ViolationKind::SelfIntersectingEdge;
  CHECK(saw);
}

TEST_CASE("crossings of the X drawing") {
  const auto cs = crossings(tmgtest::x_drawing());
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].at == P(1, 1));
}

TEST_CASE("K4 in convex position has one crossing") {
  const Drawing k4 = convex_complete(4);
  CHECK(crossing_number(k4) == 1);
  CHECK(tmgtest::naive_crossing_count(k4) == 1);
}

TEST_CASE("K5 and K6 convex crossing numbers") {
  CHECK(crossing_number(convex_complete(5)) == 5);
  CHECK(crossing_number(convex_complete(6)) == 15);
}

TEST_CASE("crossing-free path has no crossings") {
  CHECK(crossing_number(tmgtest::path_drawing(5)) == 0);
}

TEST_CASE("empty drawing has crossing number zero") {
  Drawing d;
  CHECK(crossing_number(d) == 0);
}

TEST_CASE("edge pair crossing counts") {
  const Drawing d = tmgtest::double_crossing_pair();
  CHECK(edge_pair_crossings(d, "base", "dip") == 2);
  const Drawing path = tmgtest::path_drawing(4);
  CHECK(edge_pair_crossings(path, "e0", "e2") == 0);  // disjoint
  CHECK(edge_pair_crossings(path, "e0", "e1") == 0);  // adjacent, meet at the vertex only
  CHECK_THROWS_AS(edge_pair_crossings(path, "e0", "nope"), Error);
}

TEST_CASE("a parallel pair drawn as an S over a straight edge crosses twice") {
  Drawing d;
  d.add_vertex("u", P(0, 0));
  d.add_vertex("v", P(10, 0));
  d.add_edge("straight", "u", "v", Polyline({P(0, 0), P(10, 0)}));
  d.add_edge("s", "u", "v",
             Polyline({P(0, 0), P(2, 2), P(4, -2), P(6, 2), P(10, 0)}));
  REQUIRE(validate_general_position(d).ok());
  CHECK(edge_pair_crossings(d, "straight", "s") == 2);
}

TEST_CASE("crossing number equals the sum of pairwise counts") {
  for (const Drawing& d : {convex_complete(5), tmgtest::double_crossing_pair(),
                           random_polyline_drawing(7, 10, 11)}) {
    const CrossingIndex cx(d);
    std::size_t total = 0;
    for (std::size_t e1 = 0; e1 < d.edge_count(); ++e1)
      for (std::size_t e2 = e1 + 1; e2 < d.edge_count(); ++e2) total += cx.pair_count(e1, e2);
    CHECK(total == crossing_number(d));
    CHECK(total == tmgtest::naive_crossing_count(d));
  }
}

TEST_CASE("the arc family has no empty full-parallel-pair lens") {
  const Drawing d = separated_arc_construction(4);
  for (const auto& lens : empty_lenses(d)) {
    CHECK(lens.kind != LensKind::FullParallelPair);
  }
}

TEST_CASE("crossing number equals the naive all-segment-pairs count") {
  for (const std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const Drawing d = random_polyline_drawing(7, 9, seed);
    CHECK(crossing_number(d) == tmgtest::naive_crossing_count(d));
  }
  CHECK(crossing_number(convex_complete(6)) == tmgtest::naive_crossing_count(convex_complete(6)));
}

TEST_CASE("removing an edge never increases the crossing number") {
  const Drawing d = convex_complete(5);
  const std::size_t before = crossing_number(d);
  for (const auto& edge : d.edges()) {
    Drawing copy;
    for (const auto& v : d.vertices()) copy.add_vertex(v.id, v.position);
    for (const auto& e : d.edges()) {
      if (e.id != edge.id) copy.add_edge(e.id, e.u, e.v, e.curve);
    }
    CHECK(crossing_number(copy) <= before);
  }
}

TEST_CASE("multiplicity queries") {
  const Drawing d = tmgtest::lens_with_interior_vertex();
  CHECK(d.multiplicity("u", "v") == 2);
  CHECK(d.multiplicity("u", "w") == 0);
  CHECK(d.max_multiplicity() == 2);
  CHECK(tmgtest::path_drawing(4).max_multiplicity() == 1);
  Drawing empty;
  CHECK(empty.max_multiplicity() == 0);
  CHECK_THROWS_AS(d.multiplicity("u", "nope"), Error);
}

TEST_CASE("girth of cycles, parallel pairs and trees") {
  CHECK(even_cycle(2).girth() == 6);
  CHECK(tmgtest::lens_with_interior_vertex().girth() == 2);
  CHECK_FALSE(tmgtest::path_drawing(5).girth().has_value());
}

TEST_CASE("lens of a parallel pair with an interior vertex") {
  const Drawing d = tmgtest::lens_with_interior_vertex();
  const auto result = lens_of_parallel_pair(d, "top", "bottom");
  REQUIRE(result.status == ParallelLensStatus::Lens);
  const Lens& lens = *result.lens;
  CHECK(lens.kind == LensKind::FullParallelPair);
  REQUIRE(lens.interior_vertices.size() == 1);
  CHECK(d.vertices()[lens.interior_vertices[0]].id == "w");
  REQUIRE(lens.exterior_vertices.size() == 1);
  CHECK(d.vertices()[lens.exterior_vertices[0]].id == "z");
  CHECK(lens.boundary_vertices.size() == 2);
}

TEST_CASE("a crossing parallel pair has no simple lens") {
  const Drawing d = tmgtest::crossing_parallel_pair();
  CHECK(crossing_number(d) == 1);
  CHECK(lens_of_parallel_pair(d, "top", "swerve").status == ParallelLensStatus::NotSimple);
}

TEST_CASE("lens_of_parallel_pair rejects non-parallel edges") {
  const Drawing d = tmgtest::x_drawing();
  CHECK_THROWS_AS(lens_of_parallel_pair(d, "ab", "cd"), Error);
}

TEST_CASE("nested parallel arcs contain one another") {
  Drawing d;
  d.add_vertex("u", P(0, 0));
  d.add_vertex("v", P(6, 0));
  d.add_vertex("w", P(3, 0));  // keeps the innermost lens nonempty
  d.add_edge("low", "u", "v", Polyline({P(0, 0), P(3, 1), P(6, 0)}));
  d.add_edge("mid", "u", "v", Polyline({P(0, 0), P(3, 2), P(6, 0)}));
  d.add_edge("high", "u", "v", Polyline({P(0, 0), P(3, 4), P(6, 0)}));
  const CrossingIndex cx(d);
  const auto lenses = enumerate_lenses(d, cx);
  REQUIRE(lenses.size() == 3);
  auto find = [&](const std::string& a, const std::string& b) -> const Lens& {
    for (const auto& lens : lenses) {
      if (d.edges()[lens.e1].id == a && d.edges()[lens.e2].id == b) return lens;
    }
    FAIL("missing lens");
    return lenses[0];
  };
  const Lens& outer = find("low", "high");
  const Lens& inner = find("low", "mid");
  CHECK(lens_interior_contains(outer, inner));
  CHECK_FALSE(lens_interior_contains(inner, outer));
  // The middle curve's apex sits inside the outer lens.
  CHECK(point_in_closed_curve_unchecked(P(3, 2), outer.boundary) == Region::Interior);
}

TEST_CASE("empty lens enumeration on the gadgets") {
  for (const LensKind kind : {LensKind::FullParallelPair, LensKind::BetweenCrossings,
                              LensKind::EndpointToCrossing}) {
    const Drawing d = empty_lens_gadget(kind);
    CHECK(validate_general_position(d).ok());
    const auto empties = empty_lenses(d);
    REQUIRE(empties.size() == 1);
    CHECK(empties[0].kind == kind);
    CHECK(empties[0].interior_vertices.empty());
  }
}

TEST_CASE("inclusion-minimal filtering keeps the innermost empty lens") {
  // Nested parallel arcs with nothing inside: both nested lenses are empty,
  // the big outer lens strictly contains the two small ones.
  Drawing d;
  d.add_vertex("u", P(0, 0));
  d.add_vertex("v", P(6, 0));
  d.add_edge("low", "u", "v", Polyline({P(0, 0), P(3, 1), P(6, 0)}));
  d.add_edge("mid", "u", "v", Polyline({P(0, 0), P(3, 2), P(6, 0)}));
  d.add_edge("high", "u", "v", Polyline({P(0, 0), P(3, 4), P(6, 0)}));
  const auto empties = empty_lenses(d);
  REQUIRE(empties.size() == 2);
  for (const auto& lens : empties) {
    const bool low_mid = d.edges()[lens.e1].id == "low" && d.edges()[lens.e2].id == "mid";
    const bool mid_high = d.edges()[lens.e1].id == "mid" && d.edges()[lens.e2].id == "high";
    CHECK((low_mid || mid_high));
  }
}

TEST_CASE("lens classification partitions the vertices") {
  const Drawing d = tmgtest::lens_with_interior_vertex();
  const auto result = lens_of_parallel_pair(d, "top", "bottom");
  const Lens& lens = *result.lens;
  CHECK(lens.interior_vertices.size() + lens.exterior_vertices.size() +
            lens.boundary_vertices.size() ==
        d.vertex_count());
}

TEST_CASE("crossings on an invalid drawing are rejected") {
  Drawing d;  // two overlapping collinear edges
  d.add_vertex("a", P(0, 0));
  d.add_vertex("b", P(4, 0));
  d.add_vertex("c", P(1, 0));
  d.add_vertex("e", P(3, 0));
  d.add_edge("ab", "a", "b", Polyline({P(0, 0), P(4, 0)}));
  d.add_edge("ce", "c", "e", Polyline({P(1, 0), P(3, 0)}));
  CHECK_THROWS_AS(crossings(d), Error);
}

TEST_CASE("rotation order lists incident edges counterclockwise") {
  Drawing d;
  d.add_vertex("o", P(0, 0));
  d.add_vertex("r", P(4, 0));
  d.add_vertex("t", P(0, 4));
  d.add_vertex("l", P(-4, 0));
  d.add_vertex("b", P(0, -4));
  d.add_edge("er", "o", "r", Polyline({P(0, 0), P(4, 0)}));
  d.add_edge("et", "o", "t", Polyline({P(0, 0), P(0, 4)}));
  d.add_edge("el", "o", "l", Polyline({P(0, 0), P(-4, 0)}));
  d.add_edge("eb", "o", "b", Polyline({P(0, 0), P(0, -4)}));
  const auto order = rotation_order(d, d.vertex_index("o"));
  REQUIRE(order.size() == 4);
  CHECK(d.edges()[order[0]].id == "er");
  CHECK(d.edges()[order[1]].id == "et");
  CHECK(d.edges()[order[2]].id == "el");
  CHECK(d.edges()[order[3]].id == "eb");
}

TEST_CASE("induced drawing keeps inner edges and drops the rest") {
  const Drawing d = tmgtest::path_drawing(5);
  const auto sub = induced_drawing(d, {0, 1, 2});
  CHECK(sub.drawing.vertex_count() == 3);
  CHECK(sub.drawing.edge_count() == 2);
  CHECK(sub.vertex_map.size() == 3);
  CHECK(sub.edge_map.size() == 2);
}
