#pragma once

#include <cstdint>
#include <random>

namespace stm {

/// Standard normal CDF.
double norm_cdf(double z);

/// Standard normal quantile function, accurate to ~1e-15 over (0, 1).
double norm_quantile(double p);

/// Deterministic random stream. All variates are derived from raw engine
/// output, so sequences are identical across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform on [0, 1).
  double uniform();

  /// Standard normal (Box-Muller).
  double normal();

  /// Normal(mean, sd) restricted to [lo, hi] by inverse-CDF sampling.
  double trunc_normal(double mean, double sd, double lo, double hi);

  std::uint64_t raw() { return eng_(); }

  /// Independent stream seed for a work unit (splitmix64 mix of master and index).
  static std::uint64_t substream(std::uint64_t master, std::uint64_t index);

 private:
  std::mt19937_64 eng_;
};

}  // namespace stm
