#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tmg/drawing.hpp"
#include "tmg/lens.hpp"

namespace tmg {

// n points in general position with no four concyclic, and n-2 circular-arc
// edges between every vertex pair, interleaved with the other vertices so
// that every parallel pair bounds a lens with a vertex inside and a vertex
// outside. e = C(n,2)(n-2), the drawing is separated, and every edge pair
// crosses at most twice. Arcs are discretized to `resolution` points and the
// result is certified exactly; failing certification retries with a finer
// discretization before giving up (ResolutionTooCoarse).
Drawing separated_arc_construction(std::size_t n, std::size_t resolution = 16);

// K_n with vertices in convex position and straight edges; cr = C(n,4).
Drawing convex_complete(std::size_t n);

// The cycle C_{2r+2}, drawn crossing-free; its girth 2r+2 exceeds 2r.
Drawing even_cycle(std::size_t r);

// Random valid general-position drawing of a simple graph with n vertices and
// e edges, polyline edges with up to two bends. Deterministic in the seed.
Drawing random_polyline_drawing(std::size_t n, std::size_t e, std::uint64_t seed);

// A small drawing with exactly one interior-empty lens of the given kind.
Drawing empty_lens_gadget(LensKind kind);

struct ConstructionSpec {
  std::string family;  // separated-arc | convex-complete | even-cycle | random | lens-gadget
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t resolution = 16;
  std::optional<long> m;
  std::optional<long> r;
  std::optional<std::size_t> e;      // random family
  std::optional<LensKind> kind;      // lens-gadget family
};

Drawing build_construction(const ConstructionSpec& spec);

}  // namespace tmg
