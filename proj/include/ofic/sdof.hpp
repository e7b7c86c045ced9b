/**
 * @file sdof.hpp
 * @brief Closed-form sum-SDoF evaluators: the achievable lower bound, the
 *        exactly characterized cases, the upper bound, and the two
 *        reference bounds (X channel with output feedback, perfect CSIT).
 */
#ifndef OFIC_SDOF_HPP
#define OFIC_SDOF_HPP

#include <optional>
#include <vector>

#include "ofic/phaseplan.hpp"
#include "ofic/rational.hpp"

namespace ofic {

/// Achievable sum-SDoF of the output-feedback schemes:
/// 0 | 2N(2M-N)/(4M-N) | 2MN/(M+2N) | N over the four antenna regimes.
Rational lower_bound(AntennaConfig config);

/// Exact sum-SDoF where lower and upper bounds meet:
/// 0 for M <= N/2, 2N/3 for M = N, N for 2N <= M; absent otherwise.
std::optional<Rational> exact_sdof(AntennaConfig config);

/// Sum-SDoF upper bound inherited from the X-channel and perfect-CSIT results.
Rational upper_bound(AntennaConfig config);

/// Reference: MIMO X channel with delayed CSIT and output feedback.
Rational xc_bound(AntennaConfig config);

/// Reference: MIMO interference channel with perfect CSIT.
Rational perfect_csit_bound(AntennaConfig config);

struct SDoFReport {
  AntennaConfig config;
  Regime regime;
  Rational lower;
  Rational upper;
  std::optional<Rational> exact;
};

SDoFReport evaluate_sdof(AntennaConfig config);

/// One report per requested configuration, in input order.
std::vector<SDoFReport> sdof_table(const std::vector<AntennaConfig>& configs);

}  // namespace ofic

#endif  // OFIC_SDOF_HPP
