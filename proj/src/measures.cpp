#include "assoc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace assoc {

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kLn2 = 0.69314718055994530941723212145817657;
const double kLn10 = 2.30258509299404568401799145468436421;

double marginal_row(const ProbTable2x2& t, int row) {
  return row == 1 ? t.row1() : t.row0();
}
double marginal_col(const ProbTable2x2& t, int col) {
  return col == 1 ? t.col1() : t.col0();
}

// PMI in nats; marginals assumed positive.
double pmi_nats(const ProbTable2x2& t, Cell c) {
  const double p = t.cell(c.row, c.col);
  if (p == 0.0) return -kInf;
  return std::log(p / (marginal_row(t, c.row) * marginal_col(t, c.col)));
}

double entropy2(double p0, double p1) {
  double h = 0.0;
  if (p0 > 0.0) h -= p0 * std::log(p0);
  if (p1 > 0.0) h -= p1 * std::log(p1);
  return h;
}

// MI in nats.
double mi_nats(const ProbTable2x2& t) {
  double s = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const double p = t.cell(r, c);
      if (p > 0.0)
        s += p * std::log(p / (marginal_row(t, r) * marginal_col(t, c)));
    }
  return std::max(s, 0.0);
}

double joint_entropy_nats(const ProbTable2x2& t) {
  double h = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const double p = t.cell(r, c);
      if (p > 0.0) h -= p * std::log(p);
    }
  return h;
}

void require_open_marginals(const ProbTable2x2& t) {
  if (!(t.row0() > 0.0 && t.row1() > 0.0 && t.col0() > 0.0 && t.col1() > 0.0))
    throw DegenerateMarginal("a marginal is 0 or 1");
}

}  // namespace

double ln_of(LogBase b) {
  switch (b) {
    case LogBase::Two: return kLn2;
    case LogBase::E: return 1.0;
    case LogBase::Ten: return kLn10;
  }
  return kLn2;
}

const char* log_base_name(LogBase b) {
  switch (b) {
    case LogBase::Two: return "2";
    case LogBase::E: return "e";
    case LogBase::Ten: return "10";
  }
  return "2";
}

double yule_y(const OddsRatio& l) {
  switch (l.state()) {
    case OddsRatioState::Zero: return -1.0;
    case OddsRatioState::Infinite: return 1.0;
    case OddsRatioState::Undefined:
      throw UndefinedOdds("odds ratio undefined (0/0)");
    case OddsRatioState::Finite: break;
  }
  const double s = std::sqrt(l.value());
  return (s - 1.0) / (s + 1.0);
}

double yule_q(const OddsRatio& l) {
  switch (l.state()) {
    case OddsRatioState::Zero: return -1.0;
    case OddsRatioState::Infinite: return 1.0;
    case OddsRatioState::Undefined:
      throw UndefinedOdds("odds ratio undefined (0/0)");
    case OddsRatioState::Finite: break;
  }
  const double v = l.value();
  return (v - 1.0) / (v + 1.0);
}

double lewontin_d_prime(const ProbTable2x2& t) {
  require_open_marginals(t);
  const double d = coefficient_D(t);
  if (d == 0.0) return 0.0;
  const double r1 = t.row1(), r0 = t.row0(), c1 = t.col1(), c0 = t.col0();
  const double d_max =
      d > 0.0 ? std::min(r1 * c0, r0 * c1) : std::min(r1 * c1, r0 * c0);
  return std::clamp(d / d_max, -1.0, 1.0);
}

double binary_correlation(const ProbTable2x2& t) {
  require_open_marginals(t);
  const double d = coefficient_D(t);
  return std::clamp(
      d / std::sqrt(t.row0() * t.row1() * t.col0() * t.col1()), -1.0, 1.0);
}

double pmi(const ProbTable2x2& t, Cell cell, LogBase base) {
  if (!(marginal_row(t, cell.row) > 0.0 && marginal_col(t, cell.col) > 0.0))
    throw DegenerateMarginal("marginal of the chosen cell is 0");
  return pmi_nats(t, cell) / ln_of(base);
}

std::pair<double, Cell> max_cell_pmi(const ProbTable2x2& t, LogBase base) {
  require_open_marginals(t);
  // preference order breaks exact ties
  static const Cell kOrder[4] = {{1, 1}, {0, 0}, {0, 1}, {1, 0}};
  Cell best = kOrder[0];
  double best_v = pmi_nats(t, best);
  for (int i = 1; i < 4; ++i) {
    const double v = pmi_nats(t, kOrder[i]);
    if (v > best_v) {
      best_v = v;
      best = kOrder[i];
    }
  }
  return {best_v / ln_of(base), best};
}

double npmi(const ProbTable2x2& t, Cell cell) {
  if (!(marginal_row(t, cell.row) > 0.0 && marginal_col(t, cell.col) > 0.0))
    throw DegenerateMarginal("marginal of the chosen cell is 0");
  const double p = t.cell(cell.row, cell.col);
  if (p == 0.0) return -1.0;  // never co-occur
  if (p >= 1.0) return 1.0;   // always co-occur
  return std::clamp(pmi_nats(t, cell) / -std::log(p), -1.0, 1.0);
}

double mutual_information(const ProbTable2x2& t, LogBase base) {
  return mi_nats(t) / ln_of(base);
}

double nmi(const ProbTable2x2& t) {
  const double h = joint_entropy_nats(t);
  if (!(h > 0.0)) throw DegenerateTable("all mass in one cell");
  return std::clamp(mi_nats(t) / h, 0.0, 1.0);
}

double signed_nmi(const ProbTable2x2& t) {
  const double d = coefficient_D(t);
  const double v = nmi(t);
  return d < 0.0 ? -v : (d > 0.0 ? v : 0.0);
}

std::pair<double, double> uncertainty_coefficients(const ProbTable2x2& t) {
  const double hx = entropy2(t.row0(), t.row1());
  const double hy = entropy2(t.col0(), t.col1());
  if (!(hx > 0.0) || !(hy > 0.0))
    throw DegenerateMarginal("marginal entropy is 0");
  const double i = mi_nats(t);
  return {std::clamp(i / hx, 0.0, 1.0), std::clamp(i / hy, 0.0, 1.0)};
}

double rrr(const ProbTable2x2& t, Cell cell) {
  const double pr = marginal_row(t, cell.row);
  const double pc = marginal_col(t, cell.col);
  if (!(pr > 0.0 && pc > 0.0))
    throw DegenerateMarginal("marginal of the chosen cell is 0");
  return t.cell(cell.row, cell.col) / (pr * pc);
}

double prr(const ProbTable2x2& t, Cell cell) {
  const double px = marginal_row(t, cell.row);
  if (!(px > 0.0) || !(px < 1.0))
    throw DegenerateMarginal("conditioning event has probability 0 or 1");
  const double p_y_given_x = t.cell(cell.row, cell.col) / px;
  const double p_y_notx = t.cell(1 - cell.row, cell.col);
  const double p_y_given_notx = p_y_notx / (1.0 - px);
  if (p_y_given_notx == 0.0) {
    if (p_y_given_x == 0.0)
      throw UndefinedRatio("both conditionals are zero");
    return kInf;
  }
  return p_y_given_x / p_y_given_notx;
}

double i_lambda(double lambda, LogBase base) {
  if (std::isnan(lambda) || !(lambda > 0.0))
    throw NonPositiveLambda("lambda must be > 0");
  if (lambda < 1.0) lambda = 1.0 / lambda;  // favourable cell swaps
  const double s = std::sqrt(lambda);
  return std::log(2.0 * s / (1.0 + s)) / ln_of(base);
}

double big_i_lambda(double lambda, LogBase base) {
  if (std::isnan(lambda) || !(lambda > 0.0))
    throw NonPositiveLambda("lambda must be > 0");
  const double s = std::sqrt(lambda);
  const double nats =
      s / (1.0 + s) * std::log(s) - std::log(1.0 + s) + kLn2;
  return std::max(nats, 0.0) / ln_of(base);
}

MeasureReport full_report(const ProbTable2x2& t, LogBase base) {
  MeasureReport r;
  r.log_base = base;
  r.lambda = odds_ratio(t);

  try {
    r.yule_y = ReportValue::of(yule_y(r.lambda));
    r.yule_q = ReportValue::of(yule_q(r.lambda));
  } catch (const UndefinedOdds&) {
    r.yule_y = ReportValue::na("undefined_odds");
    r.yule_q = ReportValue::na("undefined_odds");
  }

  try {
    r.lewontin_d_prime = ReportValue::of(lewontin_d_prime(t));
    r.binary_r = ReportValue::of(binary_correlation(t));
  } catch (const DegenerateMarginal&) {
    r.lewontin_d_prime = ReportValue::na("degenerate_marginal");
    r.binary_r = ReportValue::na("degenerate_marginal");
  }

  try {
    auto [v, cell] = max_cell_pmi(t, base);
    r.pmi = ReportValue::of(v);
    r.pmi_cell = cell;
    r.npmi = ReportValue::of(npmi(t, cell));
    r.rrr = ReportValue::of(rrr(t, cell));
    try {
      r.prr = ReportValue::of(prr(t, cell));
    } catch (const UndefinedRatio&) {
      r.prr = ReportValue::na("undefined");
    }
  } catch (const DegenerateMarginal&) {
    r.pmi = ReportValue::na("degenerate_marginal");
    r.npmi = ReportValue::na("degenerate_marginal");
    r.rrr = ReportValue::na("degenerate_marginal");
    r.prr = ReportValue::na("degenerate_marginal");
  }

  r.mi = ReportValue::of(mutual_information(t, base));
  try {
    r.nmi = ReportValue::of(nmi(t));
    r.signed_nmi = ReportValue::of(signed_nmi(t));
  } catch (const DegenerateTable&) {
    r.nmi = ReportValue::na("degenerate_table");
    r.signed_nmi = ReportValue::na("degenerate_table");
  }
  try {
    auto [ux, uy] = uncertainty_coefficients(t);
    r.uncertainty_x = ReportValue::of(ux);
    r.uncertainty_y = ReportValue::of(uy);
  } catch (const DegenerateMarginal&) {
    r.uncertainty_x = ReportValue::na("degenerate_marginal");
    r.uncertainty_y = ReportValue::na("degenerate_marginal");
  }
  return r;
}

}  // namespace assoc
