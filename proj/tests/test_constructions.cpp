#include <doctest.h>

#include "tmg/constructions.hpp"
#include "tmg/error.hpp"
#include "tmg/io.hpp"
#include "tmg/styles.hpp"
#include "tmg/validate.hpp"
#include "test_support.hpp"

using namespace tmg;

TEST_CASE("arc construction edge counts: e = C(n,2)(n-2)") {
  CHECK(separated_arc_construction(3).edge_count() == 3);
  CHECK(separated_arc_construction(4).edge_count() == 12);
  CHECK(separated_arc_construction(5).edge_count() == 30);
}

TEST_CASE("arc construction is valid, separated, and pairwise <= 2") {
  const Drawing d = separated_arc_construction(6);
  CHECK(d.edge_count() == 60);
  CHECK(validate_general_position(d).ok());
  const CrossingIndex cx(d);
  CHECK(is_separated(d, cx).holds);
  for (std::size_t e1 = 0; e1 < d.edge_count(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < d.edge_count(); ++e2) {
      CHECK(cx.pair_count(e1, e2) <= 2);
    }
  }
}

TEST_CASE("arc construction realizes the degree bound (n-1)(n-2)") {
  const Drawing d = separated_arc_construction(5);
  CHECK(d.max_degree() == 12);  // (5-1)(5-2)
  CHECK(d.max_multiplicity() == 3);
}

TEST_CASE("arc construction rejects bad parameters") {
  CHECK_THROWS_AS(separated_arc_construction(2), Error);
  CHECK_THROWS_AS(separated_arc_construction(5, 4), Error);  // resolution < 8
}

TEST_CASE("convex complete drawings have C(n,4) crossings") {
  CHECK(crossing_number(convex_complete(4)) == 1);
  CHECK(crossing_number(convex_complete(5)) == 5);
  CHECK(crossing_number(convex_complete(6)) == 15);
  CHECK(tmgtest::naive_crossing_count(convex_complete(5)) == 5);
  CHECK(validate_general_position(convex_complete(7)).ok());
}

TEST_CASE("even cycles have the right girth") {
  const Drawing c6 = even_cycle(2);
  CHECK(c6.vertex_count() == 6);
  CHECK(c6.edge_count() == 6);
  CHECK(c6.girth() == 6);
  CHECK(crossing_number(c6) == 0);
  CHECK(satisfies_girth_style(c6, 2).holds);
}

TEST_CASE("random drawings validate and are deterministic in the seed") {
  const Drawing a = random_polyline_drawing(6, 9, 1);
  CHECK(a.vertex_count() == 6);
  CHECK(a.edge_count() == 9);
  CHECK(validate_general_position(a).ok());
  const Drawing b = random_polyline_drawing(6, 9, 1);
  CHECK(serialize_drawing(a) == serialize_drawing(b));
  const Drawing c = random_polyline_drawing(6, 9, 2);
  CHECK(serialize_drawing(a) != serialize_drawing(c));
}

TEST_CASE("random drawing rejects infeasible edge counts") {
  CHECK_THROWS_AS(random_polyline_drawing(4, 7, 1), Error);
}

TEST_CASE("gadgets expose exactly one empty lens of their kind") {
  for (const LensKind kind : {LensKind::FullParallelPair, LensKind::BetweenCrossings,
                              LensKind::EndpointToCrossing}) {
    const Drawing d = empty_lens_gadget(kind);
    const auto empties = empty_lenses(d);
    REQUIRE(empties.size() == 1);
    CHECK(empties[0].kind == kind);
  }
}

TEST_CASE("construction dispatch by family name") {
  ConstructionSpec spec;
  spec.family = "convex-complete";
  spec.n = 4;
  CHECK(build_construction(spec).edge_count() == 6);

  spec.family = "separated-arc";
  spec.n = 4;
  spec.resolution = 16;
  CHECK(build_construction(spec).edge_count() == 12);

  spec.family = "even-cycle";
  spec.r = 1;
  CHECK(build_construction(spec).edge_count() == 4);

  spec.family = "random";
  spec.n = 5;
  spec.e = 6;
  spec.seed = 9;
  CHECK(build_construction(spec).edge_count() == 6);

  spec.family = "lens-gadget";
  spec.kind = LensKind::BetweenCrossings;
  CHECK(build_construction(spec).edge_count() == 2);

  spec.family = "unknown";
  CHECK_THROWS_AS(build_construction(spec), Error);
}
