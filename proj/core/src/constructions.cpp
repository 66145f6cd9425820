#include "tmg/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>

#include "tmg/error.hpp"
#include "tmg/styles.hpp"
#include "tmg/validate.hpp"

namespace tmg {

namespace {

Rational snap(double value, long denom_log2) {
  const double scaled = value * std::ldexp(1.0, static_cast<int>(denom_log2));
  return Rational(Int(static_cast<long long>(std::llround(scaled)))) /
         Rational(Int(1) << static_cast<unsigned>(denom_log2));
}

// Concyclicity test: det of the lifted 4x4 matrix vanishes iff the four
// points lie on a common circle (or line).
bool four_concyclic(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto row = [](const Point& p) {
    return std::array<Rational, 3>{p.x, p.y, p.x * p.x + p.y * p.y};
  };
  const auto ra = row(a), rb = row(b), rc = row(c), rd = row(d);
  auto minor3 = [](const std::array<Rational, 3>& r0, const std::array<Rational, 3>& r1,
                   const std::array<Rational, 3>& r2) {
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
           r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
  };
  // Expand along the all-ones column (subtract row a from the rest).
  std::array<Rational, 3> b_, c_, d_;
  for (int i = 0; i < 3; ++i) {
    b_[i] = rb[i] - ra[i];
    c_[i] = rc[i] - ra[i];
    d_[i] = rd[i] - ra[i];
  }
  return minor3(b_, c_, d_) == 0;
}

struct PencilArc {
  Rational lambda;
  int side;  // sign of the half-plane the arc lives in
};

// Circle of the pencil through u, v at parameter lambda:
// S(p) = S0(p) + lambda * l(p), with S0 the circle with diameter uv and
// l the line through u and v.
struct PencilCircle {
  Rational d, e, f;  // x^2 + y^2 + d x + e y + f = 0

  Rational eval(const Point& p) const {
    return p.x * p.x + p.y * p.y + d * p.x + e * p.y + f;
  }
};

PencilCircle pencil_circle(const Point& u, const Point& v, const Rational& lambda) {
  PencilCircle c;
  c.d = -(u.x + v.x) - lambda * (v.y - u.y);
  c.e = -(u.y + v.y) + lambda * (v.x - u.x);
  c.f = u.x * v.x + u.y * v.y + lambda * ((v.y - u.y) * u.x - (v.x - u.x) * u.y);
  return c;
}

Rational pencil_parameter(const Point& u, const Point& v, const Point& w) {
  const Rational s0 = (w.x - u.x) * (w.x - v.x) + (w.y - u.y) * (w.y - v.y);
  const Rational line = cross(u, v, w);
  return -s0 / line;
}

// Discretized arc of the pencil circle from u to v on the requested side.
// Sampling is sagitta-bounded: segments are subdivided until each one stays
// within `deviation` of the true circle, so nearly tangent circle pairs still
// resolve into at most two polyline crossings.
Polyline sample_arc(const Point& u, const Point& v, const PencilCircle& circle, int side,
                    std::size_t resolution, double deviation, long denom_log2) {
  const double cx = to_double(circle.d) / -2;
  const double cy = to_double(circle.e) / -2;
  double au = std::atan2(to_double(u.y) - cy, to_double(u.x) - cx);
  double av = std::atan2(to_double(v.y) - cy, to_double(v.x) - cx);
  const double radius = std::hypot(to_double(u.x) - cx, to_double(u.y) - cy);

  auto midpoint_side = [&](double a0, double a1) {
    const double mid = a0 + (a1 - a0) / 2;
    const Point m{snap(cx + radius * std::cos(mid), 40), snap(cy + radius * std::sin(mid), 40)};
    const Rational c = cross(u, v, m);
    return c > 0 ? 1 : c < 0 ? -1 : 0;
  };
  double sweep = av - au;
  while (sweep <= 0) sweep += 2 * M_PI;
  if (midpoint_side(au, au + sweep) != side) sweep -= 2 * M_PI;  // take the other arc

  const double sagitta_step =
      2 * std::acos(std::clamp(1 - deviation / std::max(radius, 1e-9), -1.0, 1.0));
  std::size_t count = resolution;
  if (sagitta_step > 1e-9) {
    count = std::max<std::size_t>(
        count, static_cast<std::size_t>(std::ceil(std::fabs(sweep) / sagitta_step)) + 1);
  }
  count = std::min<std::size_t>(count, 20000);

  std::vector<Point> pts;
  pts.push_back(u);
  for (std::size_t k = 1; k + 1 < count; ++k) {
    const double theta = au + sweep * double(k) / double(count - 1);
    pts.push_back(Point{snap(cx + radius * std::cos(theta), denom_log2),
                        snap(cy + radius * std::sin(theta), denom_log2)});
  }
  pts.push_back(v);
  std::vector<Point> dedup;
  for (const Point& p : pts) {
    if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
  }
  return Polyline(std::move(dedup));
}

bool three_collinear(const Point& a, const Point& b, const Point& c) {
  return orientation_sign(a, b, c) == 0;
}

// Deterministic scatter with the certificates the construction needs:
// pairwise distinct, no three collinear, no four concyclic. A salt switches
// to a fresh scatter when a certificate fails.
std::vector<Point> scattered_points(std::size_t n, std::uint64_t salt) {
  std::mt19937_64 rng(0x5eedf00d + salt * 7919);
  const std::uint64_t span = 8 * n + 16;
  std::vector<Point> pts;
  while (pts.size() < n) {
    const Point p = point(static_cast<long>(rng() % span), static_cast<long>(rng() % span));
    bool ok = std::none_of(pts.begin(), pts.end(), [&](const Point& q) { return q == p; });
    for (std::size_t a = 0; a < pts.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < pts.size() && ok; ++b) {
        if (three_collinear(pts[a], pts[b], p)) ok = false;
      }
    }
    for (std::size_t a = 0; a < pts.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < pts.size() && ok; ++b) {
        for (std::size_t c = b + 1; c < pts.size() && ok; ++c) {
          if (four_concyclic(pts[a], pts[b], pts[c], p)) ok = false;
        }
      }
    }
    if (ok) pts.push_back(p);
  }
  return pts;
}

Drawing build_arc_drawing(const std::vector<Point>& pts, std::size_t resolution,
                          double deviation, long denom_log2) {
  const std::size_t n = pts.size();
  Drawing d;
  for (std::size_t i = 0; i < n; ++i) {
    d.add_vertex("v" + std::to_string(i), pts[i]);
  }

  for (std::size_t iu = 0; iu < n; ++iu) {
    for (std::size_t iv = iu + 1; iv < n; ++iv) {
      const Point& u = pts[iu];
      const Point& v = pts[iv];

      // Split the remaining vertices by side of the line uv and order each
      // side along the pencil, innermost (nearest the segment) first.
      struct SideVertex {
        Rational lambda;
      };
      std::vector<Rational> left, right;
      for (std::size_t w = 0; w < n; ++w) {
        if (w == iu || w == iv) continue;
        const Rational side = cross(u, v, pts[w]);
        const Rational lambda = pencil_parameter(u, v, pts[w]);
        (side > 0 ? left : right).push_back(lambda);
      }
      // Left of uv (l > 0): inner means larger lambda. Right: inner means
      // smaller lambda.
      std::sort(left.begin(), left.end(), std::greater<Rational>());
      std::sort(right.begin(), right.end());

      // One arc per gap of the inner-to-outer order, skipping the innermost
      // gap on the left and the outermost gap on the right: every left arc
      // then keeps a vertex on its segment side, every right arc keeps one
      // beyond it.
      std::vector<PencilArc> arcs;
      for (std::size_t g = 1; g <= left.size(); ++g) {
        const Rational lambda =
            g < left.size() ? (left[g - 1] + left[g]) / 2 : left[g - 1] - 1;
        arcs.push_back(PencilArc{lambda, 1});
      }
      for (std::size_t g = 0; g + 1 <= right.size(); ++g) {
        const Rational lambda = g == 0 ? right[0] - 1 : (right[g - 1] + right[g]) / 2;
        arcs.push_back(PencilArc{lambda, -1});
      }

      for (std::size_t j = 0; j < arcs.size(); ++j) {
        const PencilCircle circle = pencil_circle(u, v, arcs[j].lambda);
        d.add_edge("a" + std::to_string(iu) + "-" + std::to_string(iv) + "-" + std::to_string(j),
                   "v" + std::to_string(iu), "v" + std::to_string(iv),
                   sample_arc(u, v, circle, arcs[j].side, resolution, deviation, denom_log2));
      }
    }
  }
  return d;
}

}  // namespace

Drawing separated_arc_construction(std::size_t n, std::size_t resolution) {
  if (n < 3) fail(ErrorCode::DomainError, "arc construction needs n >= 3");
  if (resolution < 8) fail(ErrorCode::DomainError, "resolution must be >= 8");

  const std::vector<Point> pts = scattered_points(n, 0);
  // Certify the placement; the scatter already filtered, so this is the
  // final determinant check on what will actually be drawn.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (three_collinear(pts[a], pts[b], pts[c]))
          fail(ErrorCode::GenerationFailed, "three construction points are collinear");
        for (std::size_t e = c + 1; e < n; ++e)
          if (four_concyclic(pts[a], pts[b], pts[c], pts[e]))
            fail(ErrorCode::GenerationFailed, "four construction points are concyclic");
      }

  double deviation = double(8 * n + 16) / 600.0;
  long denom_log2 = 24;
  for (int attempt = 0; attempt < 6; ++attempt, deviation /= 4, denom_log2 += 4) {
    Drawing d;
    try {
      d = build_arc_drawing(pts, resolution, deviation, denom_log2);
    } catch (const Error&) {
      continue;  // degenerate sampling at this deviation
    }
    if (!validate_general_position(d).ok()) continue;
    try {
      const CrossingIndex cx(d);
      bool pairwise_ok = true;
      for (std::size_t e1 = 0; e1 < d.edge_count() && pairwise_ok; ++e1) {
        for (std::size_t e2 = e1 + 1; e2 < d.edge_count() && pairwise_ok; ++e2) {
          if (cx.pair_count(e1, e2) > 2) pairwise_ok = false;
        }
      }
      if (!pairwise_ok) continue;
      if (!is_separated(d, cx).holds) continue;
    } catch (const Error&) {
      continue;
    }
    return d;
  }
  fail(ErrorCode::ResolutionTooCoarse,
       "arc discretization failed certification at every attempted resolution");
}

Drawing convex_complete(std::size_t n) {
  if (n < 3) fail(ErrorCode::DomainError, "complete convex drawing needs n >= 3");
  const auto choose4 = [](std::size_t k) { return k * (k - 1) * (k - 2) * (k - 3) / 24; };
  for (int attempt = 0; attempt < 8; ++attempt) {
    Drawing d;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      const auto t = static_cast<long>(i);
      // Deterministic perturbation of the parameter on retries.
      const Rational param = Rational(t) + Rational(t * t * t * attempt) / 64;
      pts.push_back(point(param, param * param));
      d.add_vertex("v" + std::to_string(i), pts.back());
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        d.add_edge("e" + std::to_string(i) + "-" + std::to_string(j), "v" + std::to_string(i),
                   "v" + std::to_string(j), Polyline({pts[i], pts[j]}));
      }
    }
    if (!validate_general_position(d).ok()) continue;
    try {
      if (crossing_number(d) != choose4(n)) continue;
    } catch (const Error&) {
      continue;
    }
    return d;
  }
  fail(ErrorCode::GenerationFailed, "could not realize the convex complete drawing");
}

Drawing even_cycle(std::size_t r) {
  if (r < 1) fail(ErrorCode::DomainError, "even cycle needs r >= 1");
  const std::size_t n = 2 * r + 2;
  Drawing d;
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const auto t = static_cast<long>(i);
    pts.push_back(point(t, t * t));
    d.add_vertex("v" + std::to_string(i), pts.back());
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    d.add_edge("e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(j),
               Polyline({pts[i], pts[j]}));
  }
  return d;
}

Drawing random_polyline_drawing(std::size_t n, std::size_t e, std::uint64_t seed) {
  if (n < 2) fail(ErrorCode::DomainError, "random drawing needs n >= 2");
  if (e > n * (n - 1) / 2)
    fail(ErrorCode::GenerationFailed, "requested more edges than a simple graph allows");
  std::mt19937_64 rng(seed);
  const long span = static_cast<long>(4 * n + 8);
  auto coin = [&](std::uint64_t k) { return rng() % k; };

  for (int restart = 0; restart < 24; ++restart) {
    Drawing d;
    std::vector<Point> pts;
    bool vertices_ok = true;
    for (std::size_t i = 0; i < n && vertices_ok; ++i) {
      bool placed = false;
      for (int tries = 0; tries < 60 && !placed; ++tries) {
        const Point p = point(static_cast<long>(coin(span)), static_cast<long>(coin(span)));
        if (std::none_of(pts.begin(), pts.end(), [&](const Point& q) { return q == p; })) {
          pts.push_back(p);
          d.add_vertex("v" + std::to_string(i), p);
          placed = true;
        }
      }
      vertices_ok = placed;
    }
    if (!vertices_ok) continue;

    std::set<std::pair<std::size_t, std::size_t>> used;
    std::size_t added = 0;
    bool stuck = false;
    while (added < e && !stuck) {
      bool edge_done = false;
      for (int tries = 0; tries < 80 && !edge_done; ++tries) {
        std::size_t u = coin(n), v = coin(n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (used.count({u, v})) continue;
        std::vector<Point> curve{pts[u]};
        const std::size_t bends = coin(3);
        for (std::size_t b = 0; b < bends; ++b) {
          curve.push_back(point(static_cast<long>(coin(span)), static_cast<long>(coin(span))));
        }
        curve.push_back(pts[v]);
        Drawing candidate = d;
        try {
          candidate.add_edge("e" + std::to_string(added), "v" + std::to_string(u),
                             "v" + std::to_string(v), Polyline(std::move(curve)));
        } catch (const Error&) {
          continue;
        }
        if (!validate_general_position(candidate).ok()) continue;
        d = std::move(candidate);
        used.insert({u, v});
        ++added;
        edge_done = true;
      }
      stuck = !edge_done;
    }
    if (added == e) return d;
  }
  fail(ErrorCode::GenerationFailed, "random drawing generation exhausted its retry budget");
}

Drawing empty_lens_gadget(LensKind kind) {
  Drawing d;
  switch (kind) {
    case LensKind::FullParallelPair:
      d.add_vertex("u", point(0, 0));
      d.add_vertex("v", point(4, 0));
      d.add_vertex("w", point(6, 2));
      d.add_edge("top", "u", "v", Polyline({point(0, 0), point(2, 1), point(4, 0)}));
      d.add_edge("bottom", "u", "v", Polyline({point(0, 0), point(2, -1), point(4, 0)}));
      break;
    case LensKind::BetweenCrossings:
      d.add_vertex("a", point(0, 0));
      d.add_vertex("b", point(10, 0));
      d.add_vertex("c", point(2, 2));
      d.add_vertex("d", point(8, 2));
      d.add_edge("base", "a", "b", Polyline({point(0, 0), point(10, 0)}));
      d.add_edge("dip", "c", "d",
                 Polyline({point(2, 2), point(3, -1), point(7, -1), point(8, 2)}));
      break;
    case LensKind::EndpointToCrossing:
      d.add_vertex("v", point(0, 0));
      d.add_vertex("w1", point(6, 0));
      d.add_vertex("w2", point(5, 2));
      d.add_edge("straight", "v", "w1", Polyline({point(0, 0), point(6, 0)}));
      d.add_edge("hook", "v", "w2",
                 Polyline({point(0, 0), point(3, -1), point(4, 1), point(5, 2)}));
      break;
  }
  return d;
}

Drawing build_construction(const ConstructionSpec& spec) {
  if (spec.family == "separated-arc") {
    return separated_arc_construction(spec.n, spec.resolution);
  }
  if (spec.family == "convex-complete") {
    return convex_complete(spec.n);
  }
  if (spec.family == "even-cycle") {
    if (!spec.r) fail(ErrorCode::MissingParameter, "even-cycle needs --r");
    return even_cycle(static_cast<std::size_t>(*spec.r));
  }
  if (spec.family == "random") {
    if (!spec.e) fail(ErrorCode::MissingParameter, "random needs --e");
    return random_polyline_drawing(spec.n, *spec.e, spec.seed);
  }
  if (spec.family == "lens-gadget") {
    if (!spec.kind) fail(ErrorCode::MissingParameter, "lens-gadget needs --kind");
    return empty_lens_gadget(*spec.kind);
  }
  fail(ErrorCode::DomainError, "unknown construction family '" + spec.family + "'");
}

}  // namespace tmg
