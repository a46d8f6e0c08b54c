#include "assoc/special.hpp"

#include <cmath>
#include <limits>

namespace assoc {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's tabulation).
const double kLanczosG = 7.0;
const double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

const double kLogSqrtTwoPi = 0.91893853320467274178032973640562;
const double kPi = 3.14159265358979323846264338327950288;

double lanczos_log_gamma(double x) {
  // valid for x >= 0.5
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  const double t = x - 0.5 + kLanczosG;
  return kLogSqrtTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double log_gamma(double x) {
  if (std::isnan(x) || x <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (x < 0.5) {
    // reflection: log Gamma(x) = log(pi / sin(pi x)) - log Gamma(1 - x)
    return std::log(kPi / std::sin(kPi * x)) - lanczos_log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(x);
}

double digamma(double x) {
  if (std::isnan(x) || x <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum_{n>=1} B_{2n} / (2n x^{2n})
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = -0.5 * inv;
  series -= inv2 * (1.0 / 12.0 +
                    inv2 * (-1.0 / 120.0 +
                            inv2 * (1.0 / 252.0 +
                                    inv2 * (-1.0 / 240.0 +
                                            inv2 * (1.0 / 132.0 +
                                                    inv2 * (-691.0 / 32760.0))))));
  return acc + std::log(x) + series;
}

double log_sum_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = a > b ? a : b;
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

}  // namespace assoc
