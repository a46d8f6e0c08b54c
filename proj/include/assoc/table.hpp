#ifndef ASSOC_TABLE_HPP
#define ASSOC_TABLE_HPP

#include <cstdint>
#include <utility>

#include "assoc/errors.hpp"

namespace assoc {

// Joint distribution of two binary variables X (rows) and Y (columns):
//
//        Y=0    Y=1
//  X=0   p00    p01
//  X=1   p10    p11
//
// Entries are non-negative and sum to 1 (within 1e-12). Build through
// make_prob_table, which normalizes; the operations below keep the
// invariant. A plain immutable value: copy freely, share across threads.
struct ProbTable2x2 {
  double p00 = 0.25, p01 = 0.25, p10 = 0.25, p11 = 0.25;

  double cell(int row, int col) const {
    return row == 0 ? (col == 0 ? p00 : p01) : (col == 0 ? p10 : p11);
  }
  double row1() const { return p10 + p11; }  // p(X=1)
  double col1() const { return p01 + p11; }  // p(Y=1)
  double row0() const { return p00 + p01; }
  double col0() const { return p00 + p10; }
  double sum() const { return p00 + p01 + p10 + p11; }
};

// Raw cell counts, same layout.
struct CountTable2x2 {
  std::uint64_t n00 = 0, n01 = 0, n10 = 0, n11 = 0;

  std::uint64_t total() const { return n00 + n01 + n10 + n11; }
  std::uint64_t row1() const { return n10 + n11; }
  std::uint64_t col1() const { return n01 + n11; }
};

enum class OddsRatioState {
  Finite,     // value in (0, inf)
  Zero,       // p00*p11 = 0, p01*p10 > 0
  Infinite,   // p01*p10 = 0, p00*p11 > 0
  Undefined,  // both products 0
};

// The odds ratio lambda = p00*p11 / (p01*p10), with its degenerate states
// kept explicit so downstream measures can define their limits.
class OddsRatio {
 public:
  static OddsRatio finite(double v);
  static OddsRatio zero() { return OddsRatio(OddsRatioState::Zero, 0.0); }
  static OddsRatio infinite();
  static OddsRatio undefined();

  OddsRatioState state() const { return state_; }
  bool is_finite() const { return state_ == OddsRatioState::Finite; }
  bool is_zero() const { return state_ == OddsRatioState::Zero; }
  bool is_infinite() const { return state_ == OddsRatioState::Infinite; }
  bool is_undefined() const { return state_ == OddsRatioState::Undefined; }

  // 0 for Zero, +inf for Infinite, NaN for Undefined.
  double value() const { return value_; }

 private:
  OddsRatio(OddsRatioState s, double v) : state_(s), value_(v) {}
  OddsRatioState state_;
  double value_;
};

// Normalizes non-negative weights into a table (divides by the sum).
// Throws NegativeEntry / ZeroTable.
ProbTable2x2 make_prob_table(double p00, double p01, double p10, double p11);

// (p(X=1), p(Y=1)).
std::pair<double, double> marginals(const ProbTable2x2& t);

OddsRatio odds_ratio(const ProbTable2x2& t);

// Rescales rows/columns by (mu, nu) and renormalizes:
//   (mu*nu*p00, mu*p01, nu*p10, p11) / Z.
// Changes the marginals, preserves the odds ratio. Throws NonPositiveScale.
ProbTable2x2 margin_manipulate(const ProbTable2x2& t, double mu, double nu);

// The table with both marginals 1/2 and the same odds ratio as t:
// diagonal cells sqrt(l)/(2(1+sqrt(l))), off-diagonal 1/(2(1+sqrt(l))).
// Requires all four cells positive; throws DegenerateTable otherwise.
ProbTable2x2 canonicalize(const ProbTable2x2& t);

// Canonical table for a given finite odds ratio (lambda > 0).
ProbTable2x2 canonical_table(double lambda);

// D = p00*p11 - p01*p10 = p11 - p(X=1)p(Y=1), the deviation of the joint
// from the product of the marginals (linkage disequilibrium coefficient).
double coefficient_D(const ProbTable2x2& t);

// Inverse of (marginals, coefficient_D): rebuilds the table
//   p_ij = p(X=i)p(Y=j) +/- D  (+ on the diagonal).
// Throws InfeasibleD when a cell would be negative.
ProbTable2x2 compose_from_margins_D(double p_row1, double p_col1, double D);

// The unique table with p(X=1) = p_x, p(Y=1) = p_y and odds ratio lambda.
// p11 solves lambda (p_x - p11)(p_y - p11) = p11 (1 - p_x - p_y + p11);
// the feasible root is computed in the cancellation-free form
// 2c / (-b + sqrt(b^2 - 4ac)). lambda may be +inf (p11 = min(p_x, p_y)).
// Throws NonPositiveLambda, NoValidRoot.
ProbTable2x2 table_from_margins_odds(double p_x, double p_y, double lambda);

}  // namespace assoc

#endif  // ASSOC_TABLE_HPP
