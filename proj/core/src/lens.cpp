#include "tmg/lens.hpp"

#include <algorithm>
#include <cmath>

#include "tmg/error.hpp"

namespace tmg {

const char* to_string(LensKind kind) {
  switch (kind) {
    case LensKind::FullParallelPair: return "FullParallelPair";
    case LensKind::BetweenCrossings: return "BetweenCrossings";
    case LensKind::EndpointToCrossing: return "EndpointToCrossing";
  }
  return "Lens";
}

namespace {

bool strictly_inside(const CurveSpan& span, const CurvePos& pos) {
  return span.from < pos && pos < span.to;
}

// Boundary = part of e1 from corner A to corner B, then part of e2 walked back
// from B to A. Parts meet only at the corners.
Polyline assemble_boundary(const Polyline& c1, const CurveSpan& s1, const Polyline& c2,
                           const CurveSpan& s2) {
  std::vector<Point> part1 = slice_points(c1, s1.from, s1.to);
  std::vector<Point> part2 = slice_points(c2, s2.from, s2.to);
  std::vector<Point> pts = part1;
  if (part2.back() == part1.back()) {
    for (auto it = part2.rbegin() + 1; it != part2.rend(); ++it) pts.push_back(*it);
  } else {
    for (auto it = part2.begin() + 1; it != part2.end(); ++it) pts.push_back(*it);
  }
  return Polyline(std::move(pts));
}

Lens make_lens(const Drawing& d, std::size_t e1, std::size_t e2, LensKind kind,
               const CurveSpan& s1, const CurveSpan& s2) {
  Lens lens{e1, e2, kind, s1, s2,
            assemble_boundary(d.edges()[e1].curve, s1, d.edges()[e2].curve, s2),
            {}, {}, {}};
  const Point corner_a = point_at(d.edges()[e1].curve, s1.from);
  const Point corner_b = point_at(d.edges()[e1].curve, s1.to);
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    const Point& p = d.vertices()[v].position;
    if (p == corner_a || p == corner_b) {
      lens.boundary_vertices.push_back(v);
      continue;
    }
    switch (point_in_closed_curve_unchecked(p, lens.boundary)) {
      case Region::Interior: lens.interior_vertices.push_back(v); break;
      case Region::Exterior: lens.exterior_vertices.push_back(v); break;
      case Region::OnCurve:
        fail(ErrorCode::InvalidDrawing,
             "vertex '" + d.vertices()[v].id + "' lies on a lens boundary");
    }
  }
  return lens;
}

void pair_lenses(const Drawing& d, const CrossingIndex& cx, std::size_t e1, std::size_t e2,
                 std::vector<Lens>& out) {
  const auto cps = cx.of_pair(e1, e2);
  const Polyline& c1 = d.edges()[e1].curve;
  const Polyline& c2 = d.edges()[e2].curve;

  if (d.parallel(e1, e2) && cps.empty()) {
    out.push_back(make_lens(d, e1, e2, LensKind::FullParallelPair,
                            CurveSpan{curve_start(c1), curve_end(c1)},
                            CurveSpan{curve_start(c2), curve_end(c2)}));
    return;
  }

  auto simple_between = [&](const CurveSpan& s1, const CurveSpan& s2) {
    for (const Crossing* other : cps) {
      if (strictly_inside(s1, other->pos1) && strictly_inside(s2, other->pos2)) return false;
    }
    return true;
  };

  // Between two crossings of the pair.
  for (std::size_t i = 0; i < cps.size(); ++i) {
    for (std::size_t j = i + 1; j < cps.size(); ++j) {
      const CurveSpan s1{cps[i]->pos1, cps[j]->pos1};  // sorted along e1
      CurveSpan s2{cps[i]->pos2, cps[j]->pos2};
      if (s2.to < s2.from) std::swap(s2.from, s2.to);
      if (simple_between(s1, s2)) {
        out.push_back(make_lens(d, e1, e2, LensKind::BetweenCrossings, s1, s2));
      }
    }
  }

  // Between a shared endpoint and a crossing.
  for (const std::size_t v : d.shared_endpoints(e1, e2)) {
    const Point& vp = d.vertices()[v].position;
    for (const Crossing* c : cps) {
      const CurveSpan s1 = (c1.front() == vp) ? CurveSpan{curve_start(c1), c->pos1}
                                              : CurveSpan{c->pos1, curve_end(c1)};
      const CurveSpan s2 = (c2.front() == vp) ? CurveSpan{curve_start(c2), c->pos2}
                                              : CurveSpan{c->pos2, curve_end(c2)};
      if (simple_between(s1, s2)) {
        out.push_back(make_lens(d, e1, e2, LensKind::EndpointToCrossing, s1, s2));
      }
    }
  }
}

std::optional<Region> first_offcurve_sample(const Polyline& probe, const Polyline& against) {
  auto classify = [&](const Point& p) { return point_in_closed_curve_unchecked(p, against); };
  for (const Point& p : probe.points()) {
    const Region r = classify(p);
    if (r != Region::OnCurve) return r;
  }
  for (std::size_t i = 0; i + 1 < probe.size(); ++i) {
    const Point& a = probe.points()[i];
    const Point& b = probe.points()[i + 1];
    const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    const Region r = classify(mid);
    if (r != Region::OnCurve) return r;
  }
  return std::nullopt;
}

}  // namespace

ParallelLensResult lens_of_parallel_pair(const Drawing& d, const std::string& id1,
                                         const std::string& id2) {
  const std::size_t e1 = d.edge_index(id1);
  const std::size_t e2 = d.edge_index(id2);
  if (e1 == e2) fail(ErrorCode::DomainError, "edge paired with itself");
  if (!d.parallel(e1, e2))
    fail(ErrorCode::NotParallel, "edges '" + id1 + "' and '" + id2 + "' are not parallel");
  const Polyline& c1 = d.edges()[e1].curve;
  const Polyline& c2 = d.edges()[e2].curve;
  for (std::size_t i = 0; i + 1 < c1.size(); ++i) {
    for (std::size_t j = 0; j + 1 < c2.size(); ++j) {
      if (proper_crossing(c1.segment(i), c2.segment(j)))
        return {ParallelLensStatus::NotSimple, std::nullopt};
    }
  }
  const auto lo = std::min(e1, e2);
  const auto hi = std::max(e1, e2);
  return {ParallelLensStatus::Lens,
          make_lens(d, lo, hi, LensKind::FullParallelPair,
                    CurveSpan{curve_start(d.edges()[lo].curve), curve_end(d.edges()[lo].curve)},
                    CurveSpan{curve_start(d.edges()[hi].curve), curve_end(d.edges()[hi].curve)})};
}

std::vector<Lens> enumerate_lenses(const Drawing& d, const CrossingIndex& cx) {
  std::vector<Lens> out;
  for (std::size_t e1 = 0; e1 < d.edge_count(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < d.edge_count(); ++e2) {
      pair_lenses(d, cx, e1, e2, out);
    }
  }
  return out;
}

bool lens_interior_contains(const Lens& a, const Lens& b) {
  // Boundaries that properly cross bound partially overlapping interiors.
  for (std::size_t i = 0; i + 1 < a.boundary.size(); ++i) {
    for (std::size_t j = 0; j + 1 < b.boundary.size(); ++j) {
      if (proper_crossing(a.boundary.segment(i), b.boundary.segment(j))) return false;
    }
  }
  const auto b_side = first_offcurve_sample(b.boundary, a.boundary);
  if (!b_side || *b_side != Region::Interior) return false;
  const auto a_side = first_offcurve_sample(a.boundary, b.boundary);
  if (a_side && *a_side == Region::Interior) return false;  // a inside b instead
  return true;
}

std::vector<Lens> empty_lenses(const Drawing& d, const CrossingIndex& cx) {
  std::vector<Lens> empties;
  for (auto& lens : enumerate_lenses(d, cx)) {
    if (lens.interior_vertices.empty()) empties.push_back(std::move(lens));
  }
  std::vector<Lens> minimal;
  for (std::size_t i = 0; i < empties.size(); ++i) {
    bool has_smaller = false;
    for (std::size_t j = 0; j < empties.size() && !has_smaller; ++j) {
      if (i != j && lens_interior_contains(empties[i], empties[j])) has_smaller = true;
    }
    if (!has_smaller) minimal.push_back(empties[i]);
  }
  return minimal;
}

std::vector<Lens> empty_lenses(const Drawing& d) {
  const CrossingIndex cx(d);
  return empty_lenses(d, cx);
}

RayParityTable::RayParityTable(const Drawing& d) : vertex_count_(d.vertex_count()) {
  bits_.assign(d.edge_count() * vertex_count_, false);
  std::vector<double> wx(vertex_count_), wy(vertex_count_);
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    wx[v] = to_double(d.vertices()[v].position.x);
    wy[v] = to_double(d.vertices()[v].position.y);
  }
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    const auto& pts = d.edges()[e].curve.points();
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
      const Point& a = pts[s];
      const Point& b = pts[s + 1];
      const double ay = to_double(a.y), by = to_double(b.y);
      const double ax = to_double(a.x), bx = to_double(b.x);
      const double pad = 1e-9 * (2 + std::abs(ay) + std::abs(by) + std::abs(ax) + std::abs(bx));
      const double ylo = std::min(ay, by) - pad, yhi = std::max(ay, by) + pad;
      const double xhi = std::max(ax, bx) + pad;
      for (std::size_t v = 0; v < vertex_count_; ++v) {
        if (wy[v] < ylo || wy[v] > yhi || wx[v] > xhi) continue;  // conservative reject
        const Point& p = d.vertices()[v].position;
        const bool crosses_up = a.y <= p.y && p.y < b.y;
        const bool crosses_down = b.y <= p.y && p.y < a.y;
        if (!crosses_up && !crosses_down) continue;
        const Rational x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (x_at > p.x) bits_[e * vertex_count_ + v] = !bits_[e * vertex_count_ + v];
      }
    }
  }
}

}  // namespace tmg
