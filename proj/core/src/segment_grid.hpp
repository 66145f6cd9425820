#pragma once

// Internal helper: conservative candidate generation for segment-pair tests.
// A uniform grid over double-precision bounding boxes (padded outward, so no
// truly intersecting pair is ever missed) narrows the quadratic pair set
// before the exact predicates run.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "tmg/drawing.hpp"

namespace tmg::detail {

struct SegRef {
  std::uint32_t edge;
  std::uint32_t seg;
};

inline double padded_lo(const Rational& v) {
  const double x = v.convert_to<double>();
  return x - (1e-9 + 1e-9 * std::fabs(x));
}

inline double padded_hi(const Rational& v) {
  const double x = v.convert_to<double>();
  return x + (1e-9 + 1e-9 * std::fabs(x));
}

struct SegBox {
  SegRef ref;
  double x0, y0, x1, y1;
};

// Candidate pairs of segments whose padded boxes share a grid cell.
// Pairs within one edge are reported only for non-adjacent segments.
inline std::vector<std::pair<SegRef, SegRef>> candidate_segment_pairs(const Drawing& d,
                                                                      bool include_same_edge) {
  std::vector<SegBox> boxes;
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    const Polyline& curve = d.edges()[e].curve;
    for (std::size_t s = 0; s + 1 < curve.size(); ++s) {
      const Point& a = curve.points()[s];
      const Point& b = curve.points()[s + 1];
      SegBox box;
      box.ref = {static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(s)};
      box.x0 = std::min(padded_lo(a.x), padded_lo(b.x));
      box.x1 = std::max(padded_hi(a.x), padded_hi(b.x));
      box.y0 = std::min(padded_lo(a.y), padded_lo(b.y));
      box.y1 = std::max(padded_hi(a.y), padded_hi(b.y));
      boxes.push_back(box);
    }
  }
  std::vector<std::pair<SegRef, SegRef>> out;
  if (boxes.size() < 2) return out;

  double gx0 = boxes[0].x0, gy0 = boxes[0].y0, gx1 = boxes[0].x1, gy1 = boxes[0].y1;
  for (const auto& b : boxes) {
    gx0 = std::min(gx0, b.x0);
    gy0 = std::min(gy0, b.y0);
    gx1 = std::max(gx1, b.x1);
    gy1 = std::max(gy1, b.y1);
  }
  const std::size_t cells =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::sqrt(double(boxes.size()))), 1, 192);
  const double wx = std::max(gx1 - gx0, 1e-12) / double(cells);
  const double wy = std::max(gy1 - gy0, 1e-12) / double(cells);
  auto cell_range = [&](double lo, double hi, double g0, double w) {
    auto c0 = static_cast<long>(std::floor((lo - g0) / w));
    auto c1 = static_cast<long>(std::floor((hi - g0) / w));
    c0 = std::clamp<long>(c0, 0, long(cells) - 1);
    c1 = std::clamp<long>(c1, 0, long(cells) - 1);
    return std::pair<long, long>{c0, c1};
  };

  std::vector<std::vector<std::uint32_t>> grid(cells * cells);
  for (std::uint32_t i = 0; i < boxes.size(); ++i) {
    const auto [cx0, cx1] = cell_range(boxes[i].x0, boxes[i].x1, gx0, wx);
    const auto [cy0, cy1] = cell_range(boxes[i].y0, boxes[i].y1, gy0, wy);
    for (long cx = cx0; cx <= cx1; ++cx) {
      for (long cy = cy0; cy <= cy1; ++cy) grid[std::size_t(cx) * cells + std::size_t(cy)].push_back(i);
    }
  }

  std::vector<std::uint64_t> seen;
  for (const auto& bucket : grid) {
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      for (std::size_t j = i + 1; j < bucket.size(); ++j) {
        const SegBox& a = boxes[bucket[i]];
        const SegBox& b = boxes[bucket[j]];
        if (a.ref.edge == b.ref.edge) {
          if (!include_same_edge) continue;
          const auto lo = std::min(a.ref.seg, b.ref.seg);
          const auto hi = std::max(a.ref.seg, b.ref.seg);
          if (hi - lo <= 1) continue;  // adjacent: polyline invariants cover these
        }
        if (a.x0 > b.x1 || b.x0 > a.x1 || a.y0 > b.y1 || b.y0 > a.y1) continue;
        const std::uint32_t lo = std::min(bucket[i], bucket[j]);
        const std::uint32_t hi = std::max(bucket[i], bucket[j]);
        seen.push_back((std::uint64_t(lo) << 32) | hi);
      }
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  out.reserve(seen.size());
  for (const std::uint64_t key : seen) {
    out.push_back({boxes[key >> 32].ref, boxes[key & 0xffffffffu].ref});
  }
  return out;
}

}  // namespace tmg::detail
