#include "tmg/styles.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "tmg/error.hpp"
#include "tmg/lens.hpp"

namespace tmg {

std::string StyleSpec::name() const {
  switch (kind) {
    case StyleKind::Separated: return "separated";
    case StyleKind::LocallyStarlike: return "locally-starlike";
    case StyleKind::SingleCrossing: return "single-crossing";
    case StyleKind::Branching: return "branching";
    case StyleKind::Multiplicity:
      return "multiplicity(" + (m ? std::to_string(*m) : std::string("?")) + ")";
    case StyleKind::Girth: return "girth(" + (r ? std::to_string(*r) : std::string("?")) + ")";
  }
  return "style";
}

StyleSpec parse_style(const std::string& name, std::optional<long> m, std::optional<long> r) {
  if (name == "separated") return StyleSpec::separated();
  if (name == "locally-starlike") return StyleSpec::locally_starlike();
  if (name == "single-crossing") return StyleSpec::single_crossing();
  if (name == "branching") return StyleSpec::branching();
  if (name == "multiplicity") {
    if (!m) fail(ErrorCode::MissingParameter, "multiplicity style needs --m");
    if (*m < 1) fail(ErrorCode::DomainError, "multiplicity bound must be >= 1");
    return StyleSpec::multiplicity(*m);
  }
  if (name == "girth") {
    if (!r) fail(ErrorCode::MissingParameter, "girth style needs --r");
    if (*r < 1) fail(ErrorCode::DomainError, "girth parameter must be >= 1");
    return StyleSpec::girth(*r);
  }
  fail(ErrorCode::DomainError, "unknown style '" + name + "'");
}

namespace {

StyleReport pass(const std::string& style) { return StyleReport{style, true, std::nullopt}; }

StyleReport violation(const std::string& style, StyleWitness witness) {
  return StyleReport{style, false, std::move(witness)};
}

}  // namespace

StyleReport is_separated(const Drawing& d, const CrossingIndex& cx) {
  const std::string style = "separated";
  std::optional<RayParityTable> parity;  // built lazily: only multigraphs need it
  for (std::size_t e1 = 0; e1 < d.edge_count(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < d.edge_count(); ++e2) {
      if (!d.parallel(e1, e2)) continue;
      const std::string& id1 = d.edges()[e1].id;
      const std::string& id2 = d.edges()[e2].id;
      if (cx.pair_count(e1, e2) > 0) {
        return violation(style, StyleWitness{"parallel edges cross, so they do not bound a "
                                             "simple closed curve",
                                             {id1, id2},
                                             {},
                                             std::nullopt});
      }
      if (!parity) parity.emplace(d);
      const std::size_t u = d.vertex_index(d.edges()[e1].u);
      const std::size_t v = d.vertex_index(d.edges()[e1].v);
      bool has_interior = false, has_exterior = false;
      for (std::size_t w = 0; w < d.vertex_count(); ++w) {
        if (w == u || w == v) continue;
        (parity->lens_interior(e1, e2, w) ? has_interior : has_exterior) = true;
      }
      if (!has_interior) {
        return violation(style,
                         StyleWitness{"parallel pair bounds a lens with empty interior",
                                      {id1, id2},
                                      {},
                                      std::nullopt});
      }
      if (!has_exterior) {
        return violation(style,
                         StyleWitness{"parallel pair bounds a lens with empty exterior",
                                      {id1, id2},
                                      {},
                                      std::nullopt});
      }
    }
  }
  return pass(style);
}

StyleReport is_locally_starlike(const Drawing& d, const CrossingIndex& cx) {
  const std::string style = "locally-starlike";
  for (const auto& c : cx.all()) {
    if (!d.shared_endpoints(c.e1, c.e2).empty()) {
      return violation(style, StyleWitness{"adjacent edges cross",
                                           {d.edges()[c.e1].id, d.edges()[c.e2].id},
                                           {},
                                           c.at});
    }
  }
  return pass(style);
}

StyleReport is_single_crossing(const Drawing& d, const CrossingIndex& cx) {
  const std::string style = "single-crossing";
  for (std::size_t e1 = 0; e1 < d.edge_count(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < d.edge_count(); ++e2) {
      const std::size_t count = cx.pair_count(e1, e2);
      if (count > 1) {
        return violation(style, StyleWitness{"edge pair crosses " + std::to_string(count) +
                                                 " times",
                                             {d.edges()[e1].id, d.edges()[e2].id},
                                             {},
                                             std::nullopt});
      }
    }
  }
  return pass(style);
}

StyleReport is_branching(const Drawing& d, const CrossingIndex& cx) {
  for (auto part : {is_separated(d, cx), is_single_crossing(d, cx), is_locally_starlike(d, cx)}) {
    if (!part.holds) {
      part.style = "branching";
      return part;
    }
  }
  return pass("branching");
}

StyleReport satisfies_multiplicity_style(const Drawing& d, long m) {
  const std::string style = StyleSpec::multiplicity(m).name();
  if (m < 1) fail(ErrorCode::DomainError, "multiplicity bound must be >= 1");
  for (std::size_t u = 0; u < d.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < d.vertex_count(); ++v) {
      const std::size_t mult = d.multiplicity(u, v);
      if (mult > static_cast<std::size_t>(m)) {
        return violation(style, StyleWitness{std::to_string(mult) + " pairwise parallel edges",
                                             {},
                                             {d.vertices()[u].id, d.vertices()[v].id},
                                             std::nullopt});
      }
    }
  }
  return pass(style);
}

namespace {

// Shortest cycle with its vertices: per-edge removal + BFS between endpoints.
struct GirthWitness {
  std::size_t length;
  std::vector<std::size_t> cycle;
};

std::optional<GirthWitness> shortest_cycle(const Drawing& d) {
  std::optional<GirthWitness> best;
  for (std::size_t skip = 0; skip < d.edge_count(); ++skip) {
    const std::size_t src = d.vertex_index(d.edges()[skip].u);
    const std::size_t dst = d.vertex_index(d.edges()[skip].v);
    constexpr auto kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(d.vertex_count(), kInf);
    std::vector<std::size_t> parent(d.vertex_count(), kInf);
    std::deque<std::size_t> queue;
    dist[src] = 0;
    queue.push_back(src);
    while (!queue.empty()) {
      const std::size_t at = queue.front();
      queue.pop_front();
      for (std::size_t e = 0; e < d.edge_count(); ++e) {
        if (e == skip || !d.edge_incident(e, at)) continue;
        const std::size_t other = d.vertex_index(d.edges()[e].u) == at
                                      ? d.vertex_index(d.edges()[e].v)
                                      : d.vertex_index(d.edges()[e].u);
        if (dist[other] > dist[at] + 1) {
          dist[other] = dist[at] + 1;
          parent[other] = at;
          queue.push_back(other);
        }
      }
    }
    if (dist[dst] == kInf) continue;
    if (!best || dist[dst] + 1 < best->length) {
      std::vector<std::size_t> cycle;
      for (std::size_t at = dst; at != kInf; at = parent[at]) cycle.push_back(at);
      best = GirthWitness{dist[dst] + 1, std::move(cycle)};
    }
  }
  return best;
}

}  // namespace

StyleReport satisfies_girth_style(const Drawing& d, long r) {
  const std::string style = StyleSpec::girth(r).name();
  if (r < 1) fail(ErrorCode::DomainError, "girth parameter must be >= 1");
  const auto cycle = shortest_cycle(d);
  if (!cycle || cycle->length > static_cast<std::size_t>(2 * r)) return pass(style);
  StyleWitness witness{"cycle of length " + std::to_string(cycle->length), {}, {}, std::nullopt};
  for (const std::size_t v : cycle->cycle) witness.vertices.push_back(d.vertices()[v].id);
  return violation(style, std::move(witness));
}

StyleReport satisfies_style(const Drawing& d, const CrossingIndex& cx, const StyleSpec& spec) {
  switch (spec.kind) {
    case StyleKind::Separated: return is_separated(d, cx);
    case StyleKind::LocallyStarlike: return is_locally_starlike(d, cx);
    case StyleKind::SingleCrossing: return is_single_crossing(d, cx);
    case StyleKind::Branching: return is_branching(d, cx);
    case StyleKind::Multiplicity:
      if (!spec.m) fail(ErrorCode::MissingParameter, "multiplicity style needs m");
      return satisfies_multiplicity_style(d, *spec.m);
    case StyleKind::Girth:
      if (!spec.r) fail(ErrorCode::MissingParameter, "girth style needs r");
      return satisfies_girth_style(d, *spec.r);
  }
  fail(ErrorCode::DomainError, "unknown style");
}

StyleReport satisfies_style(const Drawing& d, const StyleSpec& spec) {
  const CrossingIndex cx(d);
  return satisfies_style(d, cx, spec);
}

StyleReport is_separated(const Drawing& d) { return satisfies_style(d, StyleSpec::separated()); }
StyleReport is_locally_starlike(const Drawing& d) {
  return satisfies_style(d, StyleSpec::locally_starlike());
}
StyleReport is_single_crossing(const Drawing& d) {
  return satisfies_style(d, StyleSpec::single_crossing());
}
StyleReport is_branching(const Drawing& d) { return satisfies_style(d, StyleSpec::branching()); }

StyleParams style_params(const StyleSpec& spec, std::optional<Rational> girth_edge_constant) {
  switch (spec.kind) {
    case StyleKind::Separated:
      return StyleParams{spec, Rational(3), Rational(44), Rational(1), Rational(3)};
    case StyleKind::LocallyStarlike:
    case StyleKind::Branching:
      return StyleParams{spec, Rational(3), Rational(44), Rational(1), Rational(2)};
    case StyleKind::Multiplicity: {
      if (!spec.m) fail(ErrorCode::MissingParameter, "multiplicity style needs m");
      const Rational m(*spec.m);
      return StyleParams{spec, 3 * m, Rational(88), m, Rational(2)};
    }
    case StyleKind::Girth: {
      if (!spec.r) fail(ErrorCode::MissingParameter, "girth style needs r");
      const Rational k3 = girth_edge_constant.value_or(Rational(1));
      if (k3 <= 0) fail(ErrorCode::DomainError, "girth edge constant must be positive");
      return StyleParams{spec, Rational(3), Rational(44), k3,
                         Rational(1) + Rational(1) / Rational(*spec.r)};
    }
    case StyleKind::SingleCrossing:
      fail(ErrorCode::DomainError,
           "no constant table for the single-crossing style on its own");
  }
  fail(ErrorCode::DomainError, "unknown style");
}

}  // namespace tmg
