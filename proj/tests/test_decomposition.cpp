#include <doctest.h>

#include "tmg/constructions.hpp"
#include "tmg/decomposition.hpp"
#include "tmg/error.hpp"
#include "tmg/validate.hpp"
#include "test_support.hpp"

using namespace tmg;
using tmgtest::P;
using tmgtest::R;

namespace {

// Two convex K5 blocks joined by a single straight bridge.
Drawing two_cliques_bridged() {
  Drawing d;
  std::vector<Point> pts;
  for (long t = 0; t < 5; ++t) {
    pts.push_back(P(t, t * t));
    d.add_vertex("a" + std::to_string(t), pts.back());
  }
  for (long t = 0; t < 5; ++t) {
    pts.push_back(P(30 + t, t * t));
    d.add_vertex("b" + std::to_string(t), pts.back());
  }
  for (int block = 0; block < 2; ++block) {
    const char tag = block == 0 ? 'a' : 'b';
    for (long i = 0; i < 5; ++i) {
      for (long j = i + 1; j < 5; ++j) {
        const Point& pi = pts[static_cast<std::size_t>(block * 5 + i)];
        const Point& pj = pts[static_cast<std::size_t>(block * 5 + j)];
        d.add_edge(std::string(1, tag) + std::to_string(i) + std::to_string(j),
                   std::string(1, tag) + std::to_string(i),
                   std::string(1, tag) + std::to_string(j), Polyline({pi, pj}));
      }
    }
  }
  d.add_edge("bridge", "a4", "b0", Polyline({pts[4], pts[5]}));
  return d;
}

}  // namespace

TEST_CASE("oracle: a single edge has bisection width 1") {
  Drawing d;
  d.add_vertex("u", P(0, 0));
  d.add_vertex("v", P(1, 0));
  d.add_edge("uv", "u", "v", Polyline({P(0, 0), P(1, 0)}));
  const auto result = bisection_width_oracle(d, StyleSpec::separated());
  CHECK(result.width == 1);
  CHECK(result.bipartition.part1.size() == 1);
  CHECK(result.bipartition.cut_edges.size() == 1);
}

TEST_CASE("oracle: a path splits with one cut edge") {
  const auto result = bisection_width_oracle(tmgtest::path_drawing(5), StyleSpec::separated());
  CHECK(result.width == 1);
}

TEST_CASE("oracle: two cliques joined by one edge split at the bridge") {
  const Drawing d = two_cliques_bridged();
  REQUIRE(d.vertex_count() == 10);
  const auto result = bisection_width_oracle(d, StyleSpec::multiplicity(1));
  CHECK(result.width == 1);
  CHECK(result.bipartition.part1.size() == 5);
}

TEST_CASE("oracle enforces its guards") {
  Drawing one;
  one.add_vertex("v", P(0, 0));
  CHECK_THROWS_AS(bisection_width_oracle(one, StyleSpec::separated()), Error);
  CHECK_THROWS_AS(bisection_width_oracle(separated_arc_construction(4), StyleSpec::branching()),
                  Error);  // arc drawings are not single-crossing -> style violated
  try {
    bisection_width_oracle(tmgtest::path_drawing(21), StyleSpec::separated());
    FAIL("expected TooLargeForOracle");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::TooLargeForOracle);
  }
}

TEST_CASE("balance rule: both sides at least n/5, ties included") {
  // On 6 vertices a 1/5 split fails (5*1 < 6), 2/4 passes.
  const Drawing d = tmgtest::path_drawing(6);
  const auto result = bisection_width_oracle(d, StyleSpec::separated());
  CHECK(result.bipartition.part1.size() >= 2);
  CHECK(result.bipartition.part2.size() >= 2);
}

TEST_CASE("bisection leaves both parts in the separated style") {
  // After removing the returned edge set (cut plus any repairs), both parts
  // must satisfy the style.
  for (const Drawing& d :
       {tmgtest::lens_with_interior_vertex(), separated_arc_construction(5)}) {
    const auto result = bisection_width_oracle(d, StyleSpec::separated());
    for (const auto& part : {result.bipartition.part1, result.bipartition.part2}) {
      const auto sub = induced_drawing(d, part, result.removed_edges);
      CHECK(satisfies_style(sub.drawing, StyleSpec::separated()).holds);
    }
    // The cut lists exactly the edges straddling the parts.
    std::vector<bool> in_part1(d.vertex_count(), false);
    for (const std::size_t v : result.bipartition.part1) in_part1[v] = true;
    std::size_t straddling = 0;
    for (const auto& edge : d.edges()) {
      if (in_part1[d.vertex_index(edge.u)] != in_part1[d.vertex_index(edge.v)]) ++straddling;
    }
    CHECK(result.bipartition.cut_edges.size() == straddling);
    CHECK(result.width == result.removed_edges.size());
    CHECK(result.width >= result.bipartition.cut_edges.size());
  }
}

TEST_CASE("heuristic is never better than the oracle and close on the corpus") {
  const std::vector<Drawing> corpus = {
      tmgtest::path_drawing(5),
      tmgtest::path_drawing(8),
      tmgtest::x_drawing(),
      convex_complete(6),
      two_cliques_bridged(),
      random_polyline_drawing(9, 12, 3),
  };
  for (const auto& d : corpus) {
    const auto oracle = bisection_width_oracle(d, StyleSpec::multiplicity(3));
    const auto heuristic = bisection_heuristic(d, StyleSpec::multiplicity(3));
    CHECK(heuristic.width >= oracle.width);
    CHECK(heuristic.width <= 3 * std::max<std::size_t>(oracle.width, 1));
  }
}

TEST_CASE("heuristic splits a straight complete bipartite drawing evenly") {
  Drawing d;
  const long lys[] = {0, 2, 5};
  const long rys[] = {1, 4, 9};
  for (int i = 0; i < 3; ++i) {
    d.add_vertex("l" + std::to_string(i), P(0, lys[i]));
    d.add_vertex("r" + std::to_string(i), P(7, rys[i]));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      d.add_edge("e" + std::to_string(i) + std::to_string(j), "l" + std::to_string(i),
                 "r" + std::to_string(j), Polyline({P(0, lys[i]), P(7, rys[j])}));
    }
  }
  REQUIRE(validate_general_position(d).ok());
  const auto result = bisection_heuristic(d, StyleSpec::multiplicity(1));
  // Both sides satisfy the n/5 balance rule (>= 2 of 6 here), and the cut is
  // no better than the exact optimum.
  CHECK(result.bipartition.part1.size() >= 2);
  CHECK(result.bipartition.part2.size() >= 2);
  CHECK(result.width >= bisection_width_oracle(d, StyleSpec::multiplicity(1)).width);
  CHECK(result.width >= 1);  // K33 is connected
}

TEST_CASE("bisection inequality holds on small instances") {
  const auto x = check_bisection_inequality(tmgtest::x_drawing(), StyleSpec::separated(),
                                            Rational(44));
  CHECK(x.holds);
  // The X drawing splits into its two disjoint edges at zero cost.
  CHECK(x.width == 0);
  const auto arc = check_bisection_inequality(separated_arc_construction(5),
                                              StyleSpec::separated(), Rational(44));
  CHECK(arc.holds);
}

TEST_CASE("stop rule matches its exact rational form") {
  const auto params = style_params(StyleSpec::multiplicity(1));
  // K8: threshold e / (2 n^2) = 28/128; (4/5)^7 = 16384/78125 < 28/128.
  CHECK_FALSE(decomposition_stop(6, 8, 28, params));
  CHECK(decomposition_stop(7, 8, 28, params));
  // Fractional x: separated has x = 1/2: (4/5)^{2i} < (1/2) e / n^3.
  const auto sep = style_params(StyleSpec::separated());
  CHECK_FALSE(decomposition_stop(0, 4, 12, sep));
}

TEST_CASE("decompose stops immediately when the threshold already holds") {
  // Tiny girth edge constant: (4/5)^0 = 1 < (1/(2 k3)) e / n^2.
  const Drawing c4 = even_cycle(1);
  const auto params = style_params(StyleSpec::girth(1), R(1, 100));
  const auto trace = decompose(c4, params, Cutter::Oracle);
  CHECK(trace.final_step == 0);
  CHECK(trace.steps.size() == 1);
  CHECK(trace.steps[0].stop);
  CHECK(trace.total_removed == 0);
}

TEST_CASE("decomposition of convex K6 obeys the trace invariants") {
  const Drawing k6 = convex_complete(6);
  const auto params = style_params(StyleSpec::multiplicity(1));
  const auto trace = decompose(k6, params, Cutter::Oracle);
  const std::size_t n = 6;

  // Stops at the first index satisfying the rule.
  for (std::size_t i = 0; i < trace.final_step; ++i)
    CHECK_FALSE(decomposition_stop(i, n, trace.e, params));
  CHECK(decomposition_stop(trace.final_step, n, trace.e, params));

  std::size_t removed_total = 0;
  for (const auto& step : trace.steps) {
    // Parts partition the vertex set.
    std::vector<bool> seen(n, false);
    for (const auto& part : step.parts) {
      for (const std::size_t v : part.vertices) {
        CHECK_FALSE(seen[v]);
        seen[v] = true;
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));

    // Size bound (4/5)^i n and the large-part count bound (5/4)^{i+1}.
    const Rational size_bound =
        pow_rational(R(4, 5), static_cast<long>(step.index)) * Rational(static_cast<long>(n));
    for (const auto& part : step.parts) {
      CHECK(Rational(static_cast<long>(part.vertices.size())) <= size_bound);
      if (part.split_this_step) {
        CHECK(Rational(static_cast<long>(part.vertices.size())) >= step.size_threshold);
      }
    }
    CHECK(Rational(static_cast<long>(step.parts_large)) <=
          pow_rational(R(5, 4), static_cast<long>(step.index) + 1));
    removed_total += step.removed_edges.size();
  }
  CHECK(removed_total == trace.total_removed);
  CHECK(trace.final_step <= static_cast<std::size_t>(
                                std::ceil(std::log(double(n)) / std::log(5.0 / 4.0)) + 2));
}

TEST_CASE("trace formatting mentions the stop step and the ratio") {
  const auto trace =
      decompose(convex_complete(6), style_params(StyleSpec::multiplicity(1)), Cutter::Oracle);
  const std::string text = format_trace(trace);
  CHECK(text.find("stopped at k=") != std::string::npos);
  CHECK(text.find("ratio") != std::string::npos);
}

TEST_CASE("the large-part count bound holds across the corpus and both cutters") {
  const std::vector<Drawing> corpus = {
      tmgtest::x_drawing(),
      tmgtest::path_drawing(6),
      even_cycle(2),
      tmgtest::lens_with_interior_vertex(),
      convex_complete(5),
      random_polyline_drawing(7, 9, 8),
  };
  for (const auto& d : corpus) {
    if (d.edge_count() == 0) continue;
    const long m = static_cast<long>(std::max<std::size_t>(d.max_multiplicity(), 1));
    const auto params = style_params(StyleSpec::multiplicity(m));
    for (const Cutter cutter : {Cutter::Oracle, Cutter::Heuristic}) {
      const auto trace = decompose(d, params, cutter);
      for (const auto& step : trace.steps) {
        CHECK(Rational(static_cast<long>(step.parts_large)) <=
              pow_rational(R(5, 4), static_cast<long>(step.index) + 1));
      }
    }
  }
}

TEST_CASE("decompose requires at least one edge") {
  Drawing d;
  d.add_vertex("a", P(0, 0));
  d.add_vertex("b", P(1, 0));
  CHECK_THROWS_AS(decompose(d, style_params(StyleSpec::separated()), Cutter::Oracle), Error);
}
