#include "assoc/table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace assoc {

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

OddsRatio OddsRatio::finite(double v) {
  if (!(v > 0.0) || std::isinf(v)) throw Error("finite odds ratio must be in (0, inf)");
  return OddsRatio(OddsRatioState::Finite, v);
}

OddsRatio OddsRatio::infinite() {
  return OddsRatio(OddsRatioState::Infinite, kInf);
}

OddsRatio OddsRatio::undefined() {
  return OddsRatio(OddsRatioState::Undefined,
                   std::numeric_limits<double>::quiet_NaN());
}

ProbTable2x2 make_prob_table(double p00, double p01, double p10, double p11) {
  if (p00 < 0.0 || p01 < 0.0 || p10 < 0.0 || p11 < 0.0 ||
      std::isnan(p00) || std::isnan(p01) || std::isnan(p10) || std::isnan(p11))
    throw NegativeEntry("table entries must be non-negative");
  const double z = p00 + p01 + p10 + p11;
  if (!(z > 0.0)) throw ZeroTable("table entries sum to zero");
  return ProbTable2x2{p00 / z, p01 / z, p10 / z, p11 / z};
}

std::pair<double, double> marginals(const ProbTable2x2& t) {
  return {t.row1(), t.col1()};
}

OddsRatio odds_ratio(const ProbTable2x2& t) {
  const double num = t.p00 * t.p11;
  const double den = t.p01 * t.p10;
  if (den > 0.0) {
    if (num > 0.0) return OddsRatio::finite(num / den);
    return OddsRatio::zero();
  }
  if (num > 0.0) return OddsRatio::infinite();
  return OddsRatio::undefined();
}

ProbTable2x2 margin_manipulate(const ProbTable2x2& t, double mu, double nu) {
  if (!(mu > 0.0) || !(nu > 0.0))
    throw NonPositiveScale("margin scales mu, nu must be > 0");
  return make_prob_table(mu * nu * t.p00, mu * t.p01, nu * t.p10, t.p11);
}

ProbTable2x2 canonical_table(double lambda) {
  if (!(lambda > 0.0) || std::isinf(lambda))
    throw DegenerateTable("canonical table requires a finite positive odds ratio");
  const double s = std::sqrt(lambda);
  const double diag = s / (2.0 * (1.0 + s));
  const double off = 1.0 / (2.0 * (1.0 + s));
  return make_prob_table(diag, off, off, diag);
}

ProbTable2x2 canonicalize(const ProbTable2x2& t) {
  const OddsRatio l = odds_ratio(t);
  if (!l.is_finite())
    throw DegenerateTable("canonicalize requires all four cells positive");
  return canonical_table(l.value());
}

double coefficient_D(const ProbTable2x2& t) {
  return t.p00 * t.p11 - t.p01 * t.p10;
}

ProbTable2x2 compose_from_margins_D(double p_row1, double p_col1, double D) {
  const double r1 = p_row1, c1 = p_col1;
  const double r0 = 1.0 - r1, c0 = 1.0 - c1;
  double cells[4] = {r0 * c0 + D, r0 * c1 - D, r1 * c0 - D, r1 * c1 + D};
  for (double& v : cells) {
    if (v < -1e-12) throw InfeasibleD("cell would be negative");
    v = std::max(v, 0.0);
  }
  return make_prob_table(cells[0], cells[1], cells[2], cells[3]);
}

ProbTable2x2 table_from_margins_odds(double p_x, double p_y, double lambda) {
  if (!(p_x > 0.0 && p_x < 1.0 && p_y > 0.0 && p_y < 1.0))
    throw NoValidRoot("marginals must lie strictly inside (0, 1)");
  if (std::isnan(lambda) || !(lambda > 0.0))
    throw NonPositiveLambda("odds ratio must be > 0");

  double p11;
  if (std::isinf(lambda)) {
    p11 = std::min(p_x, p_y);
  } else {
    const double a = lambda - 1.0;
    const double nb = lambda * (p_x + p_y) + 1.0 - p_x - p_y;  // -b
    const double c = lambda * p_x * p_y;
    const double disc = nb * nb - 4.0 * a * c;
    if (!(disc >= 0.0)) throw NoValidRoot("discriminant negative");
    // The feasible root of a*p^2 + b*p + c is (-b - sqrt(disc)) / (2a);
    // 2c / (-b + sqrt(disc)) is the same root without cancellation, and
    // degrades gracefully to c/(-b) = p_x*p_y as lambda -> 1.
    p11 = 2.0 * c / (nb + std::sqrt(disc));
  }

  const double lo = std::max(0.0, p_x + p_y - 1.0);
  const double hi = std::min(p_x, p_y);
  if (p11 < lo - 1e-12 || p11 > hi + 1e-12)
    throw NoValidRoot("root escaped the feasible interval");
  p11 = std::clamp(p11, lo, hi);

  const double p10 = p_x - p11;
  const double p01 = p_y - p11;
  const double p00 = 1.0 - p_x - p_y + p11;
  return make_prob_table(std::max(p00, 0.0), std::max(p01, 0.0),
                         std::max(p10, 0.0), p11);
}

}  // namespace assoc
