#ifndef ASSOC_BAYES_HPP
#define ASSOC_BAYES_HPP

#include <cstdint>

#include "assoc/measures.hpp"
#include "assoc/table.hpp"

namespace assoc {

// Dirichlet pseudo-counts over the four cells (conjugate prior of the
// multinomial sampling model for a table with fixed total).
struct DirichletPrior {
  double a00 = 1.0, a01 = 1.0, a10 = 1.0, a11 = 1.0;

  static DirichletPrior uniform() { return {1.0, 1.0, 1.0, 1.0}; }
  static DirichletPrior jeffreys() { return {0.5, 0.5, 0.5, 0.5}; }
  double total() const { return a00 + a01 + a10 + a11; }
};

// Real-valued cell weights produced by continuity correction.
struct RealCounts {
  double c00 = 0, c01 = 0, c10 = 0, c11 = 0;
};

enum class PosteriorMeasure { PmiMaxCell, LogOddsRatio, YuleY, Mi };

// Equal-tailed Monte Carlo credible interval for one measure.
struct IntervalEstimate {
  double point = 0;   // posterior mean over finite draws
  double lower = 0;   // (1-level)/2 quantile
  double upper = 0;   // 1-(1-level)/2 quantile
  double level = 0;
  int draws = 0;
  std::uint64_t seed = 0;
  int excluded = 0;   // non-finite draws dropped from the summary
};

// p_ij = n_ij / n. Throws EmptyData when the table is empty.
ProbTable2x2 mle_table(const CountTable2x2& c);

// Adds c to every cell (Haldane-Anscombe style); c = 0 is the identity.
// With c > 0 the corrected table has a finite positive odds ratio.
RealCounts continuity_correct(const CountTable2x2& t, double c = 0.5);

// Normalizes corrected counts into a table.
ProbTable2x2 normalize_counts(const RealCounts& rc);

// Conjugate update: alpha_ij + n_ij.
DirichletPrior dirichlet_posterior(const CountTable2x2& c, const DirichletPrior& prior);

// (n_ij + alpha_ij) / (n + sum alpha).
ProbTable2x2 posterior_mean_table(const DirichletPrior& posterior);

// Samples `draws` tables from the Dirichlet posterior of `counts` under
// `prior`, evaluates the measure on each, and summarizes with the mean and
// equal-tailed quantiles. Sampling is single-threaded and fully determined
// by `seed` (see RandomStream). Non-finite draws are excluded and counted.
// Throws TooFewDraws (draws < 1000) and InvalidLevel.
IntervalEstimate posterior_measure_interval(const CountTable2x2& counts,
                                            const DirichletPrior& prior,
                                            PosteriorMeasure measure,
                                            double level, int draws,
                                            std::uint64_t seed,
                                            LogBase base = LogBase::Two);

}  // namespace assoc

#endif  // ASSOC_BAYES_HPP
