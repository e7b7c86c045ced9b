/**
 * @file phaseplan.hpp
 * @brief Antenna regimes, phase-duration constraints, and the two
 *        linear-fractional phase-duration optimizations.
 */
#ifndef OFIC_PHASEPLAN_HPP
#define OFIC_PHASEPLAN_HPP

#include <string>

#include "ofic/rational.hpp"

namespace ofic {

/// Antenna counts of the symmetric two-user channel: M per transmitter,
/// N per receiver.
struct AntennaConfig {
  int m = 1;
  int n = 1;
};

enum class Scheme { kSilent, kDecoding, kAlignment, kAlignmentCapped, kIaD };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// Phase durations in time slots. tau3 is zero where a scheme has no
/// recurrence phase.
struct PhasePlan {
  Scheme scheme = Scheme::kSilent;
  int tau1 = 0;
  int tau2 = 0;
  int tau3 = 0;

  /// Total transmission length: AN phase(s) + two data phases (+ recurrence).
  int total_slots() const;
};

enum class Regime { kSilent, kDecoding, kAlignment, kCapped };

std::string regime_name(Regime r);

/// Regime of (M, N) under the half-open boundaries
/// M <= N/2, N/2 < M <= N, N < M <= 2N, 2N < M.
Regime classify_regime(AntennaConfig config);

/// Streams actually driven per transmitter: min(M, 2N); above 2N extra
/// antennas stay idle because the interference can no longer be aligned.
int effective_m(AntennaConfig config, Scheme scheme);

/// Decoding-scheme security constraint: N(tau1 + tau2) <= 2M tau1.
bool check_security_decoding(AntennaConfig config, const PhasePlan& plan);

/// Alignment-scheme security constraint: N(tau1 + tau2) <= 2N tau1,
/// i.e. tau2 <= tau1.
bool check_security_alignment(AntennaConfig config, const PhasePlan& plan);

/// Alignment-scheme decoding constraint: M tau2 <= N(tau2 + tau3).
bool check_decoding_alignment(AntennaConfig config, const PhasePlan& plan);

/**
 * Closed-form optimal phase durations:
 *   silent           all zero            for M <= N/2
 *   decoding         (N, 2M - N, 0)      for N/2 < M <= N
 *   alignment        (N, N, M - N)       for N < M <= 2N
 *   alignment-capped (N, N, N), M' = 2N  for 2N < M
 */
PhasePlan optimal_plan(AntennaConfig config);

struct GridResult {
  Rational objective;
  PhasePlan plan;
};

/**
 * Exhaustive integer search over (tau1, tau2, tau3) in [0, max_tau]^3 for the
 * scheme's constrained ratio objective. Certifies the closed-form optimum.
 * Tie-break: smallest total duration, then lexicographic (tau1, tau2, tau3).
 */
GridResult grid_oracle(AntennaConfig config, Scheme scheme, int max_tau);

}  // namespace ofic

#endif  // OFIC_PHASEPLAN_HPP
