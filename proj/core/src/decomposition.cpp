#include "tmg/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "tmg/error.hpp"
#include "tmg/lens.hpp"

namespace tmg {

namespace {

// Per-part feasibility data for splits of one fixed drawing. Pair crossing
// counts and lens vertex sets are properties of the curves, so they carry
// over to any vertex-induced part unchanged. Single-crossing, locally
// starlike, multiplicity and girth survive vertex deletion automatically;
// separated needs the lens interior/exterior sets re-checked per part.
struct SplitContext {
  std::vector<std::pair<std::size_t, std::size_t>> edge_ends;
  bool check_separated = false;
  struct ParallelPair {
    std::size_t e1, e2;
    std::size_t u, v;         // endpoints of the pair
    bool crossing = false;    // pair crosses: never separated
    std::uint64_t interior = 0;
    std::uint64_t exterior = 0;
  };
  std::vector<ParallelPair> pairs;
  std::vector<std::vector<std::size_t>> bundles;  // parallel classes with >= 2 edges
};

SplitContext build_context(const Drawing& d, const CrossingIndex& cx, const StyleSpec& style) {
  SplitContext ctx;
  for (const auto& edge : d.edges()) {
    ctx.edge_ends.push_back({d.vertex_index(edge.u), d.vertex_index(edge.v)});
  }
  ctx.check_separated =
      style.kind == StyleKind::Separated || style.kind == StyleKind::Branching;
  if (!ctx.check_separated) return ctx;
  if (d.vertex_count() > 64)
    fail(ErrorCode::TooLargeForOracle, "separated feasibility masks support up to 64 vertices");
  std::optional<RayParityTable> parity;
  for (std::size_t e1 = 0; e1 < d.edge_count(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < d.edge_count(); ++e2) {
      if (!d.parallel(e1, e2)) continue;
      SplitContext::ParallelPair pair;
      pair.e1 = e1;
      pair.e2 = e2;
      pair.u = ctx.edge_ends[e1].first;
      pair.v = ctx.edge_ends[e1].second;
      if (cx.pair_count(e1, e2) > 0) {
        pair.crossing = true;
      } else {
        if (!parity) parity.emplace(d);
        for (std::size_t w = 0; w < d.vertex_count(); ++w) {
          if (w == pair.u || w == pair.v) continue;
          if (parity->lens_interior(e1, e2, w)) {
            pair.interior |= std::uint64_t(1) << w;
          } else {
            pair.exterior |= std::uint64_t(1) << w;
          }
        }
      }
      ctx.pairs.push_back(pair);
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> classes;
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    auto key = ctx.edge_ends[e];
    if (key.second < key.first) std::swap(key.first, key.second);
    classes[key].push_back(e);
  }
  for (auto& [key, edges] : classes) {
    if (edges.size() >= 2) ctx.bundles.push_back(std::move(edges));
  }
  return ctx;
}

std::size_t cut_size(const SplitContext& ctx, std::uint64_t mask) {
  std::size_t cut = 0;
  for (const auto& [u, v] : ctx.edge_ends) {
    const bool in_u = (mask >> u) & 1;
    const bool in_v = (mask >> v) & 1;
    cut += in_u != in_v;
  }
  return cut;
}

bool pair_bad_in_side(const SplitContext::ParallelPair& pair, std::uint64_t side) {
  return pair.crossing || (pair.interior & side) == 0 || (pair.exterior & side) == 0;
}

// First surviving bad pair within one bundle, or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> bundle_conflict(
    const SplitContext& ctx, const std::vector<std::size_t>& bundle, std::uint64_t side,
    const std::vector<bool>& removed) {
  for (const auto& pair : ctx.pairs) {
    if (!pair_bad_in_side(pair, side)) continue;
    std::size_t i = bundle.size(), j = bundle.size();
    for (std::size_t k = 0; k < bundle.size(); ++k) {
      if (bundle[k] == pair.e1) i = k;
      if (bundle[k] == pair.e2) j = k;
    }
    if (i == bundle.size() || j == bundle.size()) continue;
    if (!removed[i] && !removed[j]) return std::make_pair(i, j);
  }
  return std::nullopt;
}

// Minimum vertex cover on one bundle's bad-pair graph, by branching.
std::size_t bundle_repair_cost(const SplitContext& ctx, const std::vector<std::size_t>& bundle,
                               std::uint64_t side, std::vector<bool>& removed) {
  const auto conflict = bundle_conflict(ctx, bundle, side, removed);
  if (!conflict) return 0;
  std::size_t best = bundle.size();
  for (const std::size_t branch : {conflict->first, conflict->second}) {
    removed[branch] = true;
    best = std::min(best, 1 + bundle_repair_cost(ctx, bundle, side, removed));
    removed[branch] = false;
  }
  return best;
}

void bundle_repair_pick(const SplitContext& ctx, const std::vector<std::size_t>& bundle,
                        std::uint64_t side, std::vector<bool>& removed,
                        std::vector<std::size_t>& out) {
  const auto conflict = bundle_conflict(ctx, bundle, side, removed);
  if (!conflict) return;
  removed[conflict->first] = true;
  const std::size_t cost_first = 1 + bundle_repair_cost(ctx, bundle, side, removed);
  removed[conflict->first] = false;
  removed[conflict->second] = true;
  const std::size_t cost_second = 1 + bundle_repair_cost(ctx, bundle, side, removed);
  removed[conflict->second] = false;
  const std::size_t winner = cost_first <= cost_second ? conflict->first : conflict->second;
  removed[winner] = true;
  out.push_back(bundle[winner]);
  bundle_repair_pick(ctx, bundle, side, removed, out);
}

// Edges that must be removed inside one part so it satisfies the style.
std::size_t repair_cost(const SplitContext& ctx, std::uint64_t side,
                        std::vector<std::size_t>* out) {
  if (!ctx.check_separated) return 0;
  std::size_t total = 0;
  for (const auto& bundle : ctx.bundles) {
    const auto& [u, v] = ctx.edge_ends[bundle.front()];
    const std::uint64_t ends = (std::uint64_t(1) << u) | (std::uint64_t(1) << v);
    if ((side & ends) != ends) continue;  // bundle edges are cut edges here
    std::vector<bool> removed(bundle.size(), false);
    if (out) {
      std::vector<std::size_t> chosen;
      bundle_repair_pick(ctx, bundle, side, removed, chosen);
      total += chosen.size();
      out->insert(out->end(), chosen.begin(), chosen.end());
    } else {
      total += bundle_repair_cost(ctx, bundle, side, removed);
    }
  }
  return total;
}

Bipartition to_bipartition(const SplitContext& ctx, std::size_t n, std::uint64_t mask) {
  Bipartition out;
  for (std::size_t v = 0; v < n; ++v) {
    ((mask >> v) & 1 ? out.part1 : out.part2).push_back(v);
  }
  for (std::size_t e = 0; e < ctx.edge_ends.size(); ++e) {
    const auto& [u, v] = ctx.edge_ends[e];
    if (((mask >> u) & 1) != ((mask >> v) & 1)) out.cut_edges.push_back(e);
  }
  return out;
}

bool balanced(std::size_t n, std::size_t s1) { return 5 * s1 >= n && 5 * (n - s1) >= n; }

void require_style(const Drawing& d, const CrossingIndex& cx, const StyleSpec& style) {
  const auto report = satisfies_style(d, cx, style);
  if (!report.holds)
    fail(ErrorCode::StyleViolated,
         "drawing is not in style " + style.name() + ": " + report.witness->description);
}

}  // namespace

namespace {

BisectionResult assemble_result(const SplitContext& ctx, std::size_t n, std::uint64_t mask) {
  BisectionResult result;
  result.bipartition = to_bipartition(ctx, n, mask);
  result.removed_edges = result.bipartition.cut_edges;
  const std::uint64_t full =
      n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
  repair_cost(ctx, mask, &result.removed_edges);
  repair_cost(ctx, full & ~mask, &result.removed_edges);
  std::sort(result.removed_edges.begin(), result.removed_edges.end());
  result.width = result.removed_edges.size();
  return result;
}

}  // namespace

BisectionResult bisection_width_oracle(const Drawing& d, const StyleSpec& style) {
  const std::size_t n = d.vertex_count();
  if (n < 2) fail(ErrorCode::DomainError, "bisection needs at least 2 vertices");
  if (n > 20) fail(ErrorCode::TooLargeForOracle, "oracle is limited to 20 vertices");
  const CrossingIndex cx(d);
  require_style(d, cx, style);
  const SplitContext ctx = build_context(d, cx, style);

  const std::uint64_t full = (std::uint64_t(1) << n) - 1;
  std::optional<std::uint64_t> best_mask;
  std::size_t best = d.edge_count() + 1;
  // Vertex 0 stays in part 1; enumerate the rest.
  for (std::uint64_t rest = 0; rest < (std::uint64_t(1) << (n - 1)); ++rest) {
    const std::uint64_t mask = (rest << 1) | 1;
    const auto s1 = static_cast<std::size_t>(std::popcount(mask));
    if (!balanced(n, s1)) continue;
    const std::size_t cut = cut_size(ctx, mask);
    if (best_mask && cut >= best) continue;  // repairs only add to the cut
    const std::size_t total =
        cut + repair_cost(ctx, mask, nullptr) + repair_cost(ctx, full & ~mask, nullptr);
    if (!best_mask || total < best) {
      best = total;
      best_mask = mask;
    }
  }
  if (!best_mask)
    fail(ErrorCode::NoFeasibleBipartition, "no balanced bipartition exists");
  return assemble_result(ctx, n, *best_mask);
}

BisectionResult bisection_heuristic(const Drawing& d, const StyleSpec& style) {
  const std::size_t n = d.vertex_count();
  if (n < 2) fail(ErrorCode::DomainError, "bisection needs at least 2 vertices");
  const CrossingIndex cx(d);
  require_style(d, cx, style);
  if (n > 64) fail(ErrorCode::TooLargeForOracle, "heuristic masks support up to 64 vertices");
  const SplitContext ctx = build_context(d, cx, style);
  const std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;

  auto score = [&](std::uint64_t mask) {
    return cut_size(ctx, mask) + repair_cost(ctx, mask, nullptr) +
           repair_cost(ctx, full & ~mask, nullptr);
  };

  // Seeds: coordinate sweeps in three directions, split at the median.
  std::vector<std::uint64_t> seeds;
  for (int axis = 0; axis < 3; ++axis) {
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const Point& pa = d.vertices()[a].position;
      const Point& pb = d.vertices()[b].position;
      const Rational ka = axis == 0 ? pa.x : axis == 1 ? pa.y : pa.x + pa.y;
      const Rational kb = axis == 0 ? pb.x : axis == 1 ? pb.y : pb.x + pb.y;
      if (ka != kb) return ka < kb;
      return a < b;
    });
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n / 2; ++i) mask |= std::uint64_t(1) << order[i];
    seeds.push_back(mask);
  }

  std::optional<std::uint64_t> best_mask;
  std::size_t best_score = ~std::size_t(0);
  for (std::uint64_t mask : seeds) {
    std::size_t current = score(mask);
    for (int pass = 0; pass < 200; ++pass) {
      bool improved = false;
      // Single-vertex moves.
      for (std::size_t v = 0; v < n && !improved; ++v) {
        const std::uint64_t flipped = mask ^ (std::uint64_t(1) << v);
        const auto s1 = static_cast<std::size_t>(std::popcount(flipped));
        if (!balanced(n, s1)) continue;
        const std::size_t cand = score(flipped);
        if (cand < current) {
          mask = flipped;
          current = cand;
          improved = true;
        }
      }
      // Swaps.
      for (std::size_t a = 0; a < n && !improved; ++a) {
        if (!((mask >> a) & 1)) continue;
        for (std::size_t b = 0; b < n && !improved; ++b) {
          if ((mask >> b) & 1) continue;
          const std::uint64_t swapped =
              (mask ^ (std::uint64_t(1) << a)) | (std::uint64_t(1) << b);
          const std::size_t cand = score(swapped);
          if (cand < current) {
            mask = swapped;
            current = cand;
            improved = true;
          }
        }
      }
      if (!improved) break;
    }
    if (!best_mask || current < best_score) {
      best_mask = mask;
      best_score = current;
    }
  }

  if (!best_mask) fail(ErrorCode::NoFeasibleBipartition, "no balanced bipartition exists");
  return assemble_result(ctx, n, *best_mask);
}

BisectionInequalityReport check_bisection_inequality(const Drawing& d, const StyleSpec& style,
                                                     const Rational& k2) {
  BisectionInequalityReport report;
  report.n = d.vertex_count();
  report.e = d.edge_count();
  report.cr = crossing_number(d);
  report.max_degree = d.max_degree();
  report.width = bisection_width_oracle(d, style).width;
  report.k2 = k2;
  const Rational budget =
      k2 * k2 *
      Rational(static_cast<long>(report.cr + report.max_degree * report.e + report.n));
  report.holds = Rational(static_cast<long>(report.width)) *
                     Rational(static_cast<long>(report.width)) <=
                 budget;
  report.lhs = double(report.width);
  report.rhs = std::sqrt(to_double(budget));
  return report;
}

bool decomposition_stop(std::size_t i, std::size_t n, std::size_t e,
                        const StyleParams& params) {
  // (4/5)^i < (1/(2 k3))^x e^x / n^(x+1), raised to the q-th power with
  // x = p/q so every quantity stays rational.
  if (params.b <= 1) fail(ErrorCode::DomainError, "stop rule needs b > 1");
  if (params.k3 <= 0) fail(ErrorCode::DomainError, "stop rule needs k3 > 0");
  const Rational x = Rational(1) / (params.b - 1);
  const long p = numerator(x).convert_to<long>();
  const long q = denominator(x).convert_to<long>();
  const Rational lhs = pow_rational(Rational(4) / 5, static_cast<long>(i) * q);
  const Rational rhs = pow_rational(Rational(1) / (2 * params.k3), p) *
                       pow_rational(Rational(static_cast<long>(e)), p) /
                       pow_rational(Rational(static_cast<long>(n)), p + q);
  return lhs < rhs;
}

namespace {

std::size_t part_edge_count(const Drawing& d, const std::vector<std::size_t>& part,
                            const std::vector<bool>& removed) {
  std::vector<bool> inside(d.vertex_count(), false);
  for (const std::size_t v : part) inside[v] = true;
  std::size_t count = 0;
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    if (removed[e]) continue;
    if (inside[d.vertex_index(d.edges()[e].u)] && inside[d.vertex_index(d.edges()[e].v)]) ++count;
  }
  return count;
}

}  // namespace

DecompositionTrace decompose(const Drawing& d, const StyleParams& params, Cutter cutter) {
  const std::size_t n = d.vertex_count();
  const std::size_t e = d.edge_count();
  if (e < 1) fail(ErrorCode::DomainError, "decomposition needs at least one edge");
  {
    const CrossingIndex cx(d);
    require_style(d, cx, params.style);
  }

  DecompositionTrace trace;
  trace.params = params;
  trace.cutter = cutter;
  trace.n = n;
  trace.e = e;
  trace.notes =
      "parts exactly at the size threshold are split; parts with < 2 vertices persist unsplit";

  std::vector<std::vector<std::size_t>> parts;
  {
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;
    parts.push_back(std::move(all));
  }
  std::vector<bool> removed(d.edge_count(), false);
  std::vector<std::size_t> removed_list;

  for (std::size_t i = 0;; ++i) {
    DecompositionStep step;
    step.index = i;
    step.parts_total = parts.size();
    step.size_threshold =
        pow_rational(Rational(4) / 5, static_cast<long>(i) + 1) * Rational(static_cast<long>(n));
    step.stop_lhs = pow_rational(Rational(4) / 5, static_cast<long>(i));
    for (const auto& part : parts) {
      PartRecord record;
      record.vertices = part;
      record.edge_count = part_edge_count(d, part, removed);
      record.split_this_step = false;
      step.parts.push_back(std::move(record));
    }
    for (const auto& part : parts) {
      if (Rational(static_cast<long>(part.size())) >= step.size_threshold) ++step.parts_large;
    }
    {
      const double x = to_double(Rational(1) / (params.b - 1));
      step.stop_rhs = std::pow(1 / (2 * to_double(params.k3)), x) *
                      std::pow(double(e), x) / std::pow(double(n), x + 1);
    }
    step.stop = decomposition_stop(i, n, e, params);

    if (step.stop) {
      trace.steps.push_back(std::move(step));
      trace.final_step = i;
      break;
    }

    std::vector<std::vector<std::size_t>> next_parts;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const auto& part = parts[j];
      const bool large = Rational(static_cast<long>(part.size())) >= step.size_threshold;
      if (!large || part.size() < 2) {
        next_parts.push_back(part);
        continue;
      }
      std::vector<std::size_t> removed_now;
      for (std::size_t r = 0; r < removed.size(); ++r) {
        if (removed[r]) removed_now.push_back(r);
      }
      const auto sub = induced_drawing(d, part, removed_now);
      {
        const auto report = satisfies_style(sub.drawing, params.style);
        if (!report.holds)
          fail(ErrorCode::StyleViolated, "part left style " + params.style.name() +
                                             " during decomposition: " +
                                             report.witness->description);
      }
      const BisectionResult cut = cutter == Cutter::Oracle
                                      ? bisection_width_oracle(sub.drawing, params.style)
                                      : bisection_heuristic(sub.drawing, params.style);
      std::vector<std::size_t> child1, child2;
      for (const std::size_t v : cut.bipartition.part1) child1.push_back(sub.vertex_map[v]);
      for (const std::size_t v : cut.bipartition.part2) child2.push_back(sub.vertex_map[v]);
      std::sort(child1.begin(), child1.end());
      std::sort(child2.begin(), child2.end());
      for (const std::size_t sub_e : cut.removed_edges) {
        const std::size_t original = sub.edge_map[sub_e];
        removed[original] = true;
        removed_list.push_back(original);
        step.removed_edges.push_back(d.edges()[original].id);
      }
      step.parts[j].split_this_step = true;
      next_parts.push_back(std::move(child1));
      next_parts.push_back(std::move(child2));
    }
    parts = std::move(next_parts);
    trace.steps.push_back(std::move(step));
  }

  trace.total_removed = removed_list.size();
  trace.removed_ratio = double(trace.total_removed) / double(e);
  return trace;
}

std::string format_trace(const DecompositionTrace& trace) {
  std::ostringstream out;
  out << "decomposition: style=" << trace.params.style.name() << " cutter="
      << (trace.cutter == Cutter::Oracle ? "oracle" : "heuristic") << " n=" << trace.n
      << " e=" << trace.e << "\n";
  out << "note: " << trace.notes << "\n";
  for (const auto& step : trace.steps) {
    out << "step " << step.index << ": M=" << step.parts_total << " m=" << step.parts_large
        << " size-threshold=" << format_rational(step.size_threshold)
        << " stop-lhs=" << format_rational(step.stop_lhs) << " stop-rhs~" << step.stop_rhs
        << " stop=" << (step.stop ? "yes" : "no") << "\n";
    out << "  parts:";
    for (const auto& part : step.parts) {
      out << " (n=" << part.vertices.size() << ",e=" << part.edge_count
          << (part.split_this_step ? ",split" : "") << ")";
    }
    out << "\n";
    if (!step.removed_edges.empty()) {
      out << "  removed:";
      for (const auto& id : step.removed_edges) out << " " << id;
      out << "\n";
    }
  }
  out << "stopped at k=" << trace.final_step << "; removed " << trace.total_removed << "/"
      << trace.e << " edges (ratio " << trace.removed_ratio
      << "); the below-half guarantee applies only in the dense regime\n";
  return out.str();
}

}  // namespace tmg
