/**
 * @file rates.hpp
 * @brief Finite-SNR Monte Carlo estimation of desired rate, leakage rate,
 *        secure sum-rate, and empirical SDoF slopes.
 */
#ifndef OFIC_RATES_HPP
#define OFIC_RATES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ofic/channel.hpp"
#include "ofic/schemes.hpp"

namespace ofic {

/**
 * Channel model for rate experiments. By default all links sit at unit
 * distance with unit gain and unit noise, so SNR is the single knob; supply a
 * trajectory and physical fading parameters to run a link-budget experiment
 * instead (the transmit power is then snr * noise power).
 */
struct RateChannelParams {
  FadingParams fading = FadingParams::unit();
  std::optional<Trajectory> trajectory;
};

struct RateReport {
  Scheme scheme = Scheme::kSilent;
  AntennaConfig config;
  PhasePlan plan;
  double snr_db = 0.0;
  std::size_t trials = 0;
  double desired_rate = 0.0;     // bits/slot, both receivers
  double leakage_rate = 0.0;     // bits/slot, both eavesdropping directions
  double secure_sum_rate = 0.0;  // bits/slot, per-receiver clamped at 0
  double std_error = 0.0;        // of the secure sum-rate estimate
};

struct SlopeReport {
  Scheme scheme = Scheme::kSilent;
  AntennaConfig config;
  std::array<double, 2> snr_pair_db{};
  double empirical_sdof = 0.0;
  double theoretical_sdof = 0.0;
};

/// Desired rate to each receiver from the scheme's rate chain, in bits over
/// the whole transmission (not yet slot-normalized). Index 0 = receiver 1.
std::array<double, 2> desired_rate_per_receiver(const Transcript& t, const ChannelSet& cs,
                                                double snr);

/// Leakage observed AT each eavesdropping receiver about the other user's
/// data, clamped at zero, in bits over the whole transmission.
std::array<double, 2> leakage_rate_per_receiver(const Transcript& t, const ChannelSet& cs,
                                                double snr);

/// Sum over receivers of the desired-rate chain, per slot.
double desired_rate(const Transcript& t, const ChannelSet& cs, double snr);

/// Sum over eavesdropping directions of the leakage chain, per slot.
double leakage_rate(const Transcript& t, const ChannelSet& cs, double snr);

/// Per-receiver clamped (desired - leakage), summed, per slot.
double secure_sum_rate(const Transcript& t, const ChannelSet& cs, double snr);

/// Monte Carlo secure sum-rate over fresh channel/compression/symbol/noise
/// draws; reports the standard error of the mean.
RateReport secure_sum_rate_mc(Scheme scheme, AntennaConfig config, const PhasePlan& plan,
                              double snr_db, std::size_t trials,
                              const RateChannelParams& params, SplitRng seed);

/// Two-point empirical SDoF slope with common random numbers across the two
/// SNR points; theoretical value from the closed-form lower bound.
SlopeReport sdof_slope(Scheme scheme, AntennaConfig config, const PhasePlan& plan,
                       std::array<double, 2> snr_pair_db, std::size_t trials,
                       const RateChannelParams& params, SplitRng seed);

/// `scheme,M,N,tau1,tau2,tau3,snr_db,trials,desired,leakage,secure_sum,stderr`.
void write_rate_csv(const std::vector<RateReport>& reports, const std::string& path);

}  // namespace ofic

#endif  // OFIC_RATES_HPP
