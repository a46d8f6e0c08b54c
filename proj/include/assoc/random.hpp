#ifndef ASSOC_RANDOM_HPP
#define ASSOC_RANDOM_HPP

#include <array>
#include <cstdint>
#include <random>

namespace assoc {

// Deterministic variate stream. Everything downstream of a seed is part of
// the reproducibility contract (golden values in the tests depend on it),
// so the generation algorithms are fixed here rather than delegated to the
// implementation-defined std::*_distribution classes:
//
//   engine     std::mt19937_64 (bit-exact by the C++ standard)
//   uniform    (engine() >> 11) * 2^-53, in [0, 1)
//   normal     Box-Muller on (uniform pairs), second variate cached
//   gamma      Marsaglia-Tsang squeeze for shape >= 1;
//              shape < 1 boosted via Gamma(a+1) * U^(1/a)
//   poisson    Knuth product-of-uniforms, additive chunking above mean 500
//
// A stream is cheap to construct; use one stream per seeded task and draw
// single-threaded (results must not depend on thread count).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform();        // [0, 1)
  double uniform_open();   // (0, 1]
  double normal();         // standard normal
  double gamma(double shape);  // Gamma(shape, rate = 1), shape > 0
  std::array<double, 4> dirichlet4(const std::array<double, 4>& alpha);
  std::uint64_t poisson(double mean);  // mean >= 0
  // index into `probs` (need not be normalized), by CDF inversion
  int categorical(const double* probs, int k);

 private:
  std::uint64_t next_bits() { return engine_(); }

  std::mt19937_64 engine_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace assoc

#endif  // ASSOC_RANDOM_HPP
