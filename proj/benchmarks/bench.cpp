#include <benchmark/benchmark.h>

#include "tmg/constructions.hpp"
#include "tmg/crossings.hpp"
#include "tmg/decomposition.hpp"
#include "tmg/lens.hpp"
#include "tmg/styles.hpp"
#include "tmg/transforms.hpp"

namespace {

void BM_CrossingEnumerationArcFamily(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tmg::Drawing d = tmg::separated_arc_construction(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmg::crossing_number(d));
  }
  state.SetLabel("e=" + std::to_string(d.edge_count()));
}
BENCHMARK(BM_CrossingEnumerationArcFamily)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SeparatedPredicateArcFamily(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tmg::Drawing d = tmg::separated_arc_construction(n);
  for (auto _ : state) {
    const tmg::CrossingIndex cx(d);
    benchmark::DoNotOptimize(tmg::is_separated(d, cx).holds);
  }
}
BENCHMARK(BM_SeparatedPredicateArcFamily)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ConvexCompleteCrossings(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tmg::Drawing d = tmg::convex_complete(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmg::crossing_number(d));
  }
}
BENCHMARK(BM_ConvexCompleteCrossings)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BisectionOracleConvex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tmg::Drawing d = tmg::convex_complete(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tmg::bisection_width_oracle(d, tmg::StyleSpec::multiplicity(1)).width);
  }
}
BENCHMARK(BM_BisectionOracleConvex)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RerouteGadget(benchmark::State& state) {
  const tmg::Drawing d = tmg::empty_lens_gadget(tmg::LensKind::BetweenCrossings);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmg::reroute_to_fixpoint(d).edge_count());
  }
}
BENCHMARK(BM_RerouteGadget)->Unit(benchmark::kMillisecond);

void BM_PointInClosedCurve(benchmark::State& state) {
  const tmg::Drawing d = tmg::separated_arc_construction(5);
  const tmg::Polyline& curve = d.edges()[0].curve;
  std::vector<tmg::Point> loop = curve.points();
  const tmg::Polyline& other = d.edges()[1].curve;
  for (auto it = other.points().rbegin() + 1; it != other.points().rend(); ++it)
    loop.push_back(*it);
  const tmg::Polyline boundary(loop);
  const tmg::Point probe = tmg::point(3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmg::point_in_closed_curve_unchecked(probe, boundary));
  }
}
BENCHMARK(BM_PointInClosedCurve);

}  // namespace

BENCHMARK_MAIN();
