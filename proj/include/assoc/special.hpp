#ifndef ASSOC_SPECIAL_HPP
#define ASSOC_SPECIAL_HPP

// Special functions with a fixed, documented evaluation scheme.
//
// The exact algorithms are part of the library's contract: golden values
// frozen in the test suite must be reproducible on any platform (and by
// re-implementations in other languages), which rules out libm's lgamma,
// whose last digits vary between C libraries.
//
//   log_gamma  — Lanczos approximation, g = 7, 9 coefficients, with the
//                reflection formula for x < 0.5. Absolute error on the
//                log scale is below 1e-13 for x > 0.
//   digamma    — recurrence psi(x) = psi(x+1) - 1/x up to x >= 10, then
//                the asymptotic series with Bernoulli terms through
//                1/x^12. Error below 1e-13 for x > 0.

namespace assoc {

double log_gamma(double x);
double digamma(double x);

// log(exp(a) + exp(b)) without overflow; either argument may be -inf.
double log_sum_exp(double a, double b);

}  // namespace assoc

#endif  // ASSOC_SPECIAL_HPP
