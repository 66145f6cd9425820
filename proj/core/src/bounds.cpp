#include "tmg/bounds.hpp"

#include <sstream>

#include "tmg/crossings.hpp"
#include "tmg/error.hpp"

namespace tmg {

namespace {

BigFloat pow_bigfloat(const BigFloat& base, const Rational& exp) {
  return mp::pow(base, to_bigfloat(exp));
}

}  // namespace

Rational x_of_b(const Rational& b) {
  if (b <= 1) fail(ErrorCode::DomainError, "x(b) needs b > 1");
  return Rational(1) / (b - 1);
}

std::optional<Rational> alpha_exact(const StyleParams& params) {
  const Rational x = x_of_b(params.b);
  const auto two_pow = exact_pow(Rational(2), 2 * x + 14);
  const auto k3_pow = exact_pow(params.k3, x);
  if (!two_pow || !k3_pow) return std::nullopt;
  return Rational(1) / (*two_pow * params.k2 * params.k2 * *k3_pow);
}

BigFloat alpha_value(const StyleParams& params) {
  if (const auto exact = alpha_exact(params)) return to_bigfloat(*exact);
  const Rational x = x_of_b(params.b);
  return 1 / (pow_bigfloat(BigFloat(2), 2 * x + 14) * to_bigfloat(params.k2 * params.k2) *
              pow_bigfloat(to_bigfloat(params.k3), x));
}

BigFloat beta_value(const StyleParams& params) {
  const Rational x = x_of_b(params.b);
  return mp::pow(alpha_value(params), -1 / to_bigfloat(x + 2));
}

std::optional<BigFloat> crossing_lower_bound(std::size_t n, std::size_t e,
                                             const StyleParams& params) {
  if (n < 1) fail(ErrorCode::DomainError, "bound needs n >= 1");
  const Rational threshold = (params.k1 + 1) * Rational(static_cast<long>(n));
  if (Rational(static_cast<long>(e)) <= threshold) return std::nullopt;
  const Rational x = x_of_b(params.b);
  return alpha_value(params) * pow_bigfloat(BigFloat(static_cast<long>(e)), x + 2) /
         pow_bigfloat(BigFloat(static_cast<long>(n)), x + 1);
}

namespace {

// The same bound with the k3 factor pulled out the way the per-style
// statements write it, e.g. alpha' e^3 / (m n^2) for the multiplicity style.
std::pair<BigFloat, std::string> headline(const StyleParams& params, std::size_t n,
                                          std::size_t e, bool applicable) {
  const Rational x = x_of_b(params.b);
  std::ostringstream formula;
  BigFloat value(0);
  const BigFloat alpha_no_k3 =
      1 / (pow_bigfloat(BigFloat(2), 2 * x + 14) * to_bigfloat(params.k2 * params.k2));
  const BigFloat k3_pow = pow_bigfloat(to_bigfloat(params.k3), x);
  switch (params.style.kind) {
    case StyleKind::Separated:
      formula << "alpha e^2.5 / n^1.5";
      break;
    case StyleKind::LocallyStarlike:
    case StyleKind::Branching:
      formula << "alpha e^3 / n^2";
      break;
    case StyleKind::Multiplicity:
      formula << "alpha' e^3 / (m n^2)";
      break;
    case StyleKind::Girth:
      formula << "alpha_r e^" << to_double(x + 2) << " / n^" << to_double(x + 1);
      break;
    case StyleKind::SingleCrossing:
      formula << "(no bound)";
      break;
  }
  if (applicable) {
    value = alpha_no_k3 / k3_pow * pow_bigfloat(BigFloat(static_cast<long>(e)), x + 2) /
            pow_bigfloat(BigFloat(static_cast<long>(n)), x + 1);
  }
  return {value, formula.str()};
}

}  // namespace

BoundReport verify_crossing_lemma(const Drawing& d, const StyleParams& params) {
  const auto style_check = satisfies_style(d, params.style);
  if (!style_check.holds)
    fail(ErrorCode::StyleViolated, "drawing is not in style " + params.style.name() + ": " +
                                       style_check.witness->description);

  BoundReport report;
  report.style = params.style.name();
  report.n = d.vertex_count();
  report.e = d.edge_count();
  report.cr = crossing_number(d);
  report.x = x_of_b(params.b);
  report.alpha_rational = alpha_exact(params);
  report.alpha = alpha_value(params);
  report.beta = beta_value(params);
  report.threshold = (params.k1 + 1) * Rational(static_cast<long>(report.n));
  const auto bound = crossing_lower_bound(report.n, report.e, params);
  report.applicable = bound.has_value();
  report.bound = bound.value_or(BigFloat(0));
  const auto head = headline(params, report.n, report.e, report.applicable);
  report.headline_bound = head.first;
  report.headline_formula = head.second;
  report.linear_bound =
      Rational(static_cast<long>(report.e)) - params.k1 * Rational(static_cast<long>(report.n));
  if (report.applicable) {
    report.satisfied = BigFloat(static_cast<long>(report.cr)) >= report.bound;
    report.ratio = report.bound == 0 ? BigFloat(0)
                                     : BigFloat(static_cast<long>(report.cr)) / report.bound;
    report.linear_satisfied = Rational(static_cast<long>(report.cr)) >= report.linear_bound;
  }
  if (params.style.kind == StyleKind::Multiplicity) {
    report.footnote =
        "applicability threshold is e > (3m+1) n; the classical multiplicity statement "
        "uses e > 4mn";
  }
  return report;
}

EdgeBoundReport verify_edge_bounds(const Drawing& d, const StyleSpec& style) {
  const auto style_check = satisfies_style(d, style);
  if (!style_check.holds)
    fail(ErrorCode::StyleViolated, "drawing is not in style " + style.name() + ": " +
                                       style_check.witness->description);

  EdgeBoundReport report;
  report.style = style.name();
  const auto n = static_cast<long>(d.vertex_count());
  const Rational degree(static_cast<long>(d.max_degree()));
  const Rational edges(static_cast<long>(d.edge_count()));

  auto add = [&](const std::string& name, const Rational& bound, const Rational& actual) {
    const bool holds = actual <= bound;
    report.checks.push_back(EdgeBoundCheck{name, bound, actual, holds});
    report.all_hold = report.all_hold && holds;
  };

  switch (style.kind) {
    case StyleKind::Separated:
      add("max degree <= (n-1)(n-2)", Rational(n - 1) * Rational(n - 2), degree);
      add("e <= C(n,2)(n-2)", Rational(n) * Rational(n - 1) * Rational(n - 2) / 2, edges);
      break;
    case StyleKind::LocallyStarlike:
    case StyleKind::Branching:
      add("max degree <= 2n-4", Rational(2 * n - 4), degree);
      add("e <= n(n-2)", Rational(n) * Rational(n - 2), edges);
      break;
    case StyleKind::Multiplicity:
      add("e <= m C(n,2)", Rational(*style.m) * Rational(n) * Rational(n - 1) / 2, edges);
      break;
    case StyleKind::Girth:
    case StyleKind::SingleCrossing:
      break;
  }
  if ((style.kind == StyleKind::Separated || style.kind == StyleKind::Branching ||
       style.kind == StyleKind::LocallyStarlike) &&
      n >= 3 && crossing_number(d) == 0) {
    add("crossing-free: e <= 3n-6", Rational(3 * n - 6), edges);
  }
  return report;
}

std::vector<BigFloat> tightness_ratio(const std::vector<BoundReport>& family) {
  std::vector<BigFloat> out;
  for (const auto& report : family) {
    const BigFloat scale =
        pow_bigfloat(BigFloat(static_cast<long>(report.e)), report.x + 2) /
        pow_bigfloat(BigFloat(static_cast<long>(report.n)), report.x + 1);
    out.push_back(scale == 0 ? BigFloat(0) : BigFloat(static_cast<long>(report.cr)) / scale);
  }
  return out;
}

}  // namespace tmg
