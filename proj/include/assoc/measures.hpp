#ifndef ASSOC_MEASURES_HPP
#define ASSOC_MEASURES_HPP

#include <optional>
#include <string>
#include <utility>

#include "assoc/table.hpp"

namespace assoc {

// Logarithm base used wherever a measure takes a log. Base 2 ("bits") is
// the artifact-wide default.
enum class LogBase { Two, E, Ten };

// ln of the base, i.e. the divisor converting natural logs.
double ln_of(LogBase b);
const char* log_base_name(LogBase b);

// A cell of the 2x2 table, row/col in {0, 1}.
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// --- odds-ratio-only measures -----------------------------------------

// Yule's Y = (sqrt(l) - 1)/(sqrt(l) + 1). Y(0) = -1, Y(inf) = +1; odd in
// log(l). Throws UndefinedOdds when l is undefined (0/0 table).
double yule_y(const OddsRatio& l);

// Yule's Q = (l - 1)/(l + 1), same limits and errors.
double yule_q(const OddsRatio& l);

// --- margin-normalized difference measures ----------------------------

// D divided by its maximum attainable magnitude given the marginals
// (Lewontin's normalization). In [-1, 1]. Throws DegenerateMarginal when
// a marginal is 0 or 1.
double lewontin_d_prime(const ProbTable2x2& t);

// D / sqrt(p0. p.0 p1. p.1), the correlation coefficient of the two
// indicator variables. In [-1, 1]. Throws DegenerateMarginal.
double binary_correlation(const ProbTable2x2& t);

// --- information-theoretic measures ------------------------------------

// Pointwise mutual information log p(cell) / (p(row) p(col)) for one cell
// treated as the joint event. -inf when the cell is empty. Throws
// DegenerateMarginal when either marginal of the cell is 0.
double pmi(const ProbTable2x2& t, Cell cell, LogBase base);

// Maximum PMI over the four cells with the achieving cell; ties broken in
// the order (1,1), (0,0), (0,1), (1,0). Requires all marginals in (0,1).
std::pair<double, Cell> max_cell_pmi(const ProbTable2x2& t, LogBase base);

// PMI normalized by -log p(cell); in [-1, 1], independent of the base.
// -1 by convention when the cell is empty (events never co-occur),
// +1 iff p(cell) = p(row) = p(col).
double npmi(const ProbTable2x2& t, Cell cell);

// Mutual information; terms with p_ij = 0 contribute 0. Non-negative,
// zero iff independent.
double mutual_information(const ProbTable2x2& t, LogBase base);

// MI / H(X,Y), in [0, 1]; base-independent. Throws DegenerateTable when
// one cell carries all the mass.
double nmi(const ProbTable2x2& t);

// sign(D) * nmi.
double signed_nmi(const ProbTable2x2& t);

// (MI / H(X), MI / H(Y)). Throws DegenerateMarginal when a marginal
// entropy vanishes.
std::pair<double, double> uncertainty_coefficients(const ProbTable2x2& t);

// Relative reporting ratio p(cell)/(p(row) p(col)) = base^pmi.
double rrr(const ProbTable2x2& t, Cell cell);

// Proportional reporting ratio p(y|x) / p(y|not-x) for cell = (x, y).
// +inf when only the denominator conditional vanishes. Throws
// DegenerateMarginal when p(x) is 0 or 1, UndefinedRatio when both
// conditionals vanish.
double prr(const ProbTable2x2& t, Cell cell);

// --- closed-form curves on the canonical table -------------------------

// Max-cell PMI of the canonical table: log(2 sqrt(l)/(1 + sqrt(l))) for
// l >= 1; l < 1 is mapped to 1/l first (the favourable cell swaps).
// 0 at l = 1, -> log 2 as l -> inf. Throws NonPositiveLambda.
double i_lambda(double lambda, LogBase base);

// MI of the canonical table:
//   sqrt(l)/(1+sqrt(l)) log sqrt(l) - log(1+sqrt(l)) + log 2.
// Symmetric under l -> 1/l; -> log 2 at both extremes.
double big_i_lambda(double lambda, LogBase base);

// --- the full per-table report -----------------------------------------

// One measure slot: either a value or an explicit not-available marker.
struct ReportValue {
  std::optional<double> value;
  std::string na_reason;  // non-empty iff !value

  static ReportValue of(double v) { return {v, {}}; }
  static ReportValue na(std::string reason) { return {std::nullopt, std::move(reason)}; }
  bool ok() const { return value.has_value(); }
};

// Every measure for one table. Cell-dependent measures (pmi, npmi, rrr,
// prr) are evaluated at the max-PMI cell, which is reported alongside.
// Degeneracies surface as ReportValue::na, never as silently missing
// fields.
struct MeasureReport {
  OddsRatio lambda = OddsRatio::undefined();
  ReportValue yule_y, yule_q, lewontin_d_prime, binary_r;
  ReportValue pmi;
  std::optional<Cell> pmi_cell;
  ReportValue npmi, mi, nmi, signed_nmi, uncertainty_x, uncertainty_y, rrr, prr;
  LogBase log_base = LogBase::Two;
};

MeasureReport full_report(const ProbTable2x2& t, LogBase base = LogBase::Two);

}  // namespace assoc

#endif  // ASSOC_MEASURES_HPP
