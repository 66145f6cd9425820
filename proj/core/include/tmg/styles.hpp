#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tmg/crossings.hpp"
#include "tmg/drawing.hpp"
#include "tmg/rational.hpp"

namespace tmg {

enum class StyleKind {
  Separated,       // every parallel pair bounds a simple lens with a vertex
                   // strictly inside and one strictly outside
  LocallyStarlike, // no two edges sharing an endpoint cross
  SingleCrossing,  // every edge pair crosses at most once
  Branching,       // separated + single-crossing + locally starlike
  Multiplicity,    // at most m pairwise parallel edges
  Girth,           // no cycle of length <= 2r
};

struct StyleSpec {
  StyleKind kind = StyleKind::Separated;
  std::optional<long> m;
  std::optional<long> r;

  static StyleSpec separated() { return {StyleKind::Separated, {}, {}}; }
  static StyleSpec locally_starlike() { return {StyleKind::LocallyStarlike, {}, {}}; }
  static StyleSpec single_crossing() { return {StyleKind::SingleCrossing, {}, {}}; }
  static StyleSpec branching() { return {StyleKind::Branching, {}, {}}; }
  static StyleSpec multiplicity(long m) { return {StyleKind::Multiplicity, m, {}}; }
  static StyleSpec girth(long r) { return {StyleKind::Girth, {}, r}; }

  std::string name() const;  // e.g. "separated", "multiplicity(2)", "girth(3)"
};

// Style names as accepted on the command line; m and r supply the parameters
// for "multiplicity" and "girth". Throws DomainError / MissingParameter.
StyleSpec parse_style(const std::string& name, std::optional<long> m = {},
                      std::optional<long> r = {});

struct StyleWitness {
  std::string description;
  std::vector<std::string> edges;
  std::vector<std::string> vertices;
  std::optional<Point> location;
};

struct StyleReport {
  std::string style;
  bool holds = false;
  std::optional<StyleWitness> witness;  // present when holds == false
};

StyleReport is_separated(const Drawing& d);
StyleReport is_separated(const Drawing& d, const CrossingIndex& cx);
StyleReport is_locally_starlike(const Drawing& d);
StyleReport is_locally_starlike(const Drawing& d, const CrossingIndex& cx);
StyleReport is_single_crossing(const Drawing& d);
StyleReport is_single_crossing(const Drawing& d, const CrossingIndex& cx);
StyleReport is_branching(const Drawing& d);
StyleReport is_branching(const Drawing& d, const CrossingIndex& cx);
StyleReport satisfies_multiplicity_style(const Drawing& d, long m);
StyleReport satisfies_girth_style(const Drawing& d, long r);

StyleReport satisfies_style(const Drawing& d, const StyleSpec& spec);
StyleReport satisfies_style(const Drawing& d, const CrossingIndex& cx, const StyleSpec& spec);

// The constants (k1, k2, k3, b) a style contributes to the crossing bound.
struct StyleParams {
  StyleSpec style;
  Rational k1;
  Rational k2;
  Rational k3;
  Rational b;  // > 1
};

// separated -> (3, 44, 1, 3); locally-starlike / branching -> (3, 44, 1, 2);
// multiplicity(m) -> (3m, 88, m, 2); girth(r) -> (3, 44, c, 1 + 1/r) where c
// is the girth edge-count constant (defaults to 1).
StyleParams style_params(const StyleSpec& spec,
                         std::optional<Rational> girth_edge_constant = {});

}  // namespace tmg
