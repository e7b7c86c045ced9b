#include "ofic/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ofic {

namespace {

// splitmix64 output mixing (Steele, Lea, Flood '14).
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t SplitRng::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

SplitRng SplitRng::split(std::uint64_t stream) const {
  // Child seed depends on the parent position and the stream label only,
  // so splitting is repeatable and does not advance the parent.
  return SplitRng(mix(state_ ^ mix(stream + kGolden)));
}

double SplitRng::uniform() {
  // 53-bit mantissa in [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitRng::gaussian() {
  // Box-Muller with a fresh pair each call; the discarded second value keeps
  // the generator stateless beyond the counter.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> SplitRng::cgaussian(double variance) {
  if (variance <= 0.0) {
    throw std::invalid_argument("cgaussian: variance must be positive");
  }
  const double s = std::sqrt(variance / 2.0);
  return {s * gaussian(), s * gaussian()};
}

}  // namespace ofic
