#include "assoc/random.hpp"

#include <cmath>
#include <stdexcept>

namespace assoc {

namespace {
const double kTwoPi = 6.28318530717958647692528676655900577;
}

double RandomStream::uniform() {
  return static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_open() { return 1.0 - uniform(); }

double RandomStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  cached_normal_ = r * std::sin(kTwoPi * u2);
  has_cached_normal_ = true;
  return r * std::cos(kTwoPi * u2);
}

double RandomStream::gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be > 0");
  if (shape < 1.0) {
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform_open(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::array<double, 4> RandomStream::dirichlet4(const std::array<double, 4>& alpha) {
  std::array<double, 4> g;
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    g[i] = gamma(alpha[i]);
    total += g[i];
  }
  for (double& v : g) v /= total;
  return g;
}

std::uint64_t RandomStream::poisson(double mean) {
  if (!(mean >= 0.0)) throw std::invalid_argument("poisson mean must be >= 0");
  std::uint64_t count = 0;
  // Poisson(a + b) = Poisson(a) + Poisson(b); keep exp(-chunk) well above
  // the subnormal range.
  while (mean > 500.0) {
    count += poisson(500.0);
    mean -= 500.0;
  }
  const double limit = std::exp(-mean);
  double prod = uniform_open();
  while (prod > limit) {
    ++count;
    prod *= uniform_open();
  }
  return count;
}

int RandomStream::categorical(const double* probs, int k) {
  double total = 0.0;
  for (int i = 0; i < k; ++i) total += probs[i];
  double u = uniform() * total;
  for (int i = 0; i < k; ++i) {
    u -= probs[i];
    if (u < 0.0) return i;
  }
  return k - 1;
}

}  // namespace assoc
