#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tmg/drawing.hpp"
#include "tmg/styles.hpp"

namespace tmg {

// x(b) = 1/(b - 1). Throws DomainError for b <= 1.
Rational x_of_b(const Rational& b);

// alpha = 2^-(2x + 14) * k2^-2 * k3^-x. Exact when the powers stay rational
// (always the case for the built-in style table).
std::optional<Rational> alpha_exact(const StyleParams& params);
BigFloat alpha_value(const StyleParams& params);

// beta = alpha^(-1/(x + 2)).
BigFloat beta_value(const StyleParams& params);

// alpha * e^(x+2) / n^(x+1) when e > (k1 + 1) n; nullopt otherwise.
std::optional<BigFloat> crossing_lower_bound(std::size_t n, std::size_t e,
                                             const StyleParams& params);

struct BoundReport {
  std::string style;
  std::size_t n = 0;
  std::size_t e = 0;
  std::size_t cr = 0;
  Rational x;
  std::optional<Rational> alpha_rational;
  BigFloat alpha;
  BigFloat beta;
  Rational threshold;  // (k1 + 1) n
  bool applicable = false;
  BigFloat bound;           // alpha e^(x+2) / n^(x+1); 0 when not applicable
  BigFloat headline_bound;  // the same bound in the style's headline form
  std::string headline_formula;
  std::optional<bool> satisfied;  // cr >= bound, only when applicable
  BigFloat ratio;                 // cr / bound, only when applicable
  Rational linear_bound;          // e - k1 n
  std::optional<bool> linear_satisfied;  // cr >= e - k1 n, only when applicable
  std::string footnote;
};

// Full report for a drawing against its style's crossing bound.
// Throws StyleViolated when the drawing is not in the style.
BoundReport verify_crossing_lemma(const Drawing& d, const StyleParams& params);

struct EdgeBoundCheck {
  std::string name;
  Rational bound;
  Rational actual;
  bool holds = false;
};

struct EdgeBoundReport {
  std::string style;
  std::vector<EdgeBoundCheck> checks;
  bool all_hold = true;
};

// Maximum-degree and edge-count bounds for the style; crossing-free separated
// drawings are additionally checked against e <= 3n - 6.
EdgeBoundReport verify_edge_bounds(const Drawing& d, const StyleSpec& style);

// cr / (e^(x+2) / n^(x+1)) per report; the constant-free sharpness ratio.
std::vector<BigFloat> tightness_ratio(const std::vector<BoundReport>& family);

}  // namespace tmg
