/**
 * @file rng.hpp
 * @brief Splittable deterministic random number generation.
 */
#ifndef OFIC_RNG_HPP
#define OFIC_RNG_HPP

#include <complex>
#include <cstdint>

namespace ofic {

/**
 * Splittable counter-based generator (splitmix64 core).
 *
 * Every source of randomness in the library draws from a SplitRng. Child
 * streams obtained via split() are statistically independent of the parent
 * and of each other, so Monte Carlo trials can be dispatched in any order
 * (or in parallel) without changing the numbers each trial sees.
 */
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed) {}

  /// Derive an independent child stream. The parent stream is unaffected.
  SplitRng split(std::uint64_t stream) const;

  /// Next raw 64-bit word.
  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard real Gaussian, Box-Muller (no library-dependent state).
  double gaussian();

  /// Circularly symmetric complex Gaussian with the given total variance.
  std::complex<double> cgaussian(double variance);

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace ofic

#endif  // OFIC_RNG_HPP
