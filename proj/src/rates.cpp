#include "ofic/rates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "ofic/sdof.hpp"
#include "ofic/verify.hpp"

namespace ofic {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::pair<cx_mat, cx_mat> decode_chain(const Transcript& t, const ChannelSet& cs, int receiver) {
  switch (t.plan.scheme) {
    case Scheme::kDecoding:
      return build_decode_pair_decoding(cs, t.plan, t.comp, receiver);
    case Scheme::kAlignment:
    case Scheme::kAlignmentCapped:
      return build_decode_pair_alignment(cs, t.plan, t.comp, receiver);
    case Scheme::kIaD:
      return build_decode_pair_ia_d(cs, t.plan, t.comp, receiver);
    default:
      throw std::invalid_argument("rates: scheme carries no data");
  }
}

std::pair<cx_mat, cx_mat> leakage_chain(const Transcript& t, const ChannelSet& cs,
                                        int eavesdropper) {
  switch (t.plan.scheme) {
    case Scheme::kDecoding:
      return build_leakage_pair_decoding(cs, t.plan, t.comp, eavesdropper);
    case Scheme::kAlignment:
    case Scheme::kAlignmentCapped:
      return build_leakage_pair_alignment(cs, t.plan, t.comp, eavesdropper);
    case Scheme::kIaD:
      return build_leakage_pair_ia_d(cs, t.plan, t.comp, eavesdropper);
    default:
      throw std::invalid_argument("rates: scheme carries no data");
  }
}

Trajectory trial_trajectory(const RateChannelParams& params, std::size_t slots) {
  if (!params.trajectory.has_value()) return Trajectory(slots, 1.0);
  const Trajectory& full = *params.trajectory;
  if (full.slots() < slots) {
    throw std::invalid_argument("rate experiment: trajectory shorter than the plan");
  }
  Trajectory sliced(slots);
  for (std::size_t t = 1; t <= slots; ++t) {
    for (int tx = 1; tx <= 2; ++tx) {
      for (int rx = 1; rx <= 2; ++rx) {
        sliced.set_distance(tx, rx, t, full.distance(tx, rx, t));
      }
    }
  }
  return sliced;
}

Transcript run_scheme(Scheme scheme, const ChannelSet& cs, const PhasePlan& plan, double power,
                      const CompressionSet& comp, const SymbolSet& syms, bool noise_on,
                      SplitRng& noise_rng) {
  switch (scheme) {
    case Scheme::kDecoding:
      return run_decoding_scheme(cs, plan, power, comp, syms, noise_on, noise_rng);
    case Scheme::kAlignment:
    case Scheme::kAlignmentCapped:
      return run_alignment_scheme(cs, plan, power, comp, syms, noise_on, noise_rng);
    case Scheme::kIaD:
      return run_ia_d_scheme(cs, plan, power, comp, syms, noise_on, noise_rng);
    default:
      throw std::invalid_argument("rates: scheme cannot be simulated");
  }
}

}  // namespace

std::array<double, 2> desired_rate_per_receiver(const Transcript& t, const ChannelSet& cs,
                                                double snr) {
  if (t.plan.scheme == Scheme::kSilent) return {0.0, 0.0};
  std::array<double, 2> out{};
  for (int r = 1; r <= 2; ++r) {
    const auto [lhs, rhs] = decode_chain(t, cs, r);
    const double bits = logdet_capacity(lhs, snr) - logdet_capacity(rhs, snr);
    out[static_cast<std::size_t>(r - 1)] = std::max(0.0, bits);
  }
  return out;
}

std::array<double, 2> leakage_rate_per_receiver(const Transcript& t, const ChannelSet& cs,
                                                double snr) {
  if (t.plan.scheme == Scheme::kSilent) return {0.0, 0.0};
  std::array<double, 2> out{};
  for (int e = 1; e <= 2; ++e) {
    const auto [lhs, rhs] = leakage_chain(t, cs, e);
    const double bits = logdet_capacity(lhs, snr) - logdet_capacity(rhs, snr);
    out[static_cast<std::size_t>(e - 1)] = std::max(0.0, bits);
  }
  return out;
}

double desired_rate(const Transcript& t, const ChannelSet& cs, double snr) {
  if (t.plan.scheme == Scheme::kSilent) return 0.0;
  const auto d = desired_rate_per_receiver(t, cs, snr);
  return (d[0] + d[1]) / t.plan.total_slots();
}

double leakage_rate(const Transcript& t, const ChannelSet& cs, double snr) {
  if (t.plan.scheme == Scheme::kSilent) return 0.0;
  const auto l = leakage_rate_per_receiver(t, cs, snr);
  return (l[0] + l[1]) / t.plan.total_slots();
}

double secure_sum_rate(const Transcript& t, const ChannelSet& cs, double snr) {
  if (t.plan.scheme == Scheme::kSilent) return 0.0;
  const auto d = desired_rate_per_receiver(t, cs, snr);
  const auto l = leakage_rate_per_receiver(t, cs, snr);
  // User r's data leaks at the other receiver; clamp each secure rate at 0.
  const double s1 = std::max(0.0, d[0] - l[1]);
  const double s2 = std::max(0.0, d[1] - l[0]);
  return (s1 + s2) / t.plan.total_slots();
}

RateReport secure_sum_rate_mc(Scheme scheme, AntennaConfig config, const PhasePlan& plan,
                              double snr_db, std::size_t trials,
                              const RateChannelParams& params, SplitRng seed) {
  if (trials < 1) throw std::invalid_argument("secure_sum_rate_mc: trials must be >= 1");
  RateReport report;
  report.scheme = scheme;
  report.config = config;
  report.plan = plan;
  report.snr_db = snr_db;
  report.trials = trials;
  if (scheme == Scheme::kSilent) return report;

  const double snr = db_to_linear(snr_db);
  const double sigma2 = params.fading.noise_power_w();
  const double power = snr * sigma2;
  const std::size_t slots = static_cast<std::size_t>(plan.total_slots());
  const Trajectory traj = trial_trajectory(params, slots);

  std::vector<double> secure(trials);
  double desired_sum = 0.0;
  double leakage_sum = 0.0;
  for (std::size_t k = 0; k < trials; ++k) {
    SplitRng trial = seed.split(k);
    SplitRng chan_rng = trial.split(0);
    SplitRng comp_rng = trial.split(1);
    SplitRng sym_rng = trial.split(2);
    SplitRng noise_rng = trial.split(3);
    const ChannelSet cs = generate_channel(config, traj, params.fading, chan_rng);
    const CompressionSet comp = draw_compression(plan, config, comp_rng);
    const SymbolSet syms = draw_symbols(plan, config, power, sym_rng);
    const Transcript t = run_scheme(scheme, cs, plan, power, comp, syms, true, noise_rng);
    secure[k] = secure_sum_rate(t, cs, snr);
    desired_sum += desired_rate(t, cs, snr);
    leakage_sum += leakage_rate(t, cs, snr);
  }

  double mean = 0.0;
  for (const double v : secure) mean += v;
  mean /= static_cast<double>(trials);
  double var = 0.0;
  for (const double v : secure) var += (v - mean) * (v - mean);
  report.secure_sum_rate = mean;
  report.desired_rate = desired_sum / static_cast<double>(trials);
  report.leakage_rate = leakage_sum / static_cast<double>(trials);
  if (trials > 1) {
    var /= static_cast<double>(trials - 1);
    report.std_error = std::sqrt(var / static_cast<double>(trials));
  }
  return report;
}

SlopeReport sdof_slope(Scheme scheme, AntennaConfig config, const PhasePlan& plan,
                       std::array<double, 2> snr_pair_db, std::size_t trials,
                       const RateChannelParams& params, SplitRng seed) {
  if (snr_pair_db[0] == snr_pair_db[1]) {
    throw std::invalid_argument("sdof_slope: SNR points must be distinct");
  }
  if (snr_pair_db[0] < 30.0 || snr_pair_db[1] < 30.0) {
    throw std::invalid_argument("sdof_slope: both SNR points must be >= 30 dB");
  }
  if (scheme == Scheme::kIaD) {
    throw std::invalid_argument("sdof_slope: ia-d has no closed-form reference");
  }
  SlopeReport report;
  report.scheme = scheme;
  report.config = config;
  report.snr_pair_db = snr_pair_db;
  report.theoretical_sdof = lower_bound(config).to_double();
  if (scheme == Scheme::kSilent) {
    report.theoretical_sdof = 0.0;
    return report;
  }
  if (trials < 1) throw std::invalid_argument("sdof_slope: trials must be >= 1");

  const double snr_lo = db_to_linear(std::min(snr_pair_db[0], snr_pair_db[1]));
  const double snr_hi = db_to_linear(std::max(snr_pair_db[0], snr_pair_db[1]));
  const double sigma2 = params.fading.noise_power_w();
  const std::size_t slots = static_cast<std::size_t>(plan.total_slots());
  const Trajectory traj = trial_trajectory(params, slots);

  // Common random numbers: the same draws feed both SNR points, so the
  // finite-SNR constants cancel trial by trial.
  double mean_lo = 0.0;
  double mean_hi = 0.0;
  for (std::size_t k = 0; k < trials; ++k) {
    SplitRng trial = seed.split(k);
    SplitRng chan_rng = trial.split(0);
    SplitRng comp_rng = trial.split(1);
    SplitRng sym_rng = trial.split(2);
    SplitRng noise_rng = trial.split(3);
    const ChannelSet cs = generate_channel(config, traj, params.fading, chan_rng);
    const CompressionSet comp = draw_compression(plan, config, comp_rng);
    const SymbolSet syms = draw_symbols(plan, config, snr_lo * sigma2, sym_rng);
    const Transcript t = run_scheme(scheme, cs, plan, snr_lo * sigma2, comp, syms, true, noise_rng);
    mean_lo += secure_sum_rate(t, cs, snr_lo);
    mean_hi += secure_sum_rate(t, cs, snr_hi);
  }
  mean_lo /= static_cast<double>(trials);
  mean_hi /= static_cast<double>(trials);
  report.empirical_sdof = (mean_hi - mean_lo) / std::log2(snr_hi / snr_lo);
  return report;
}

void write_rate_csv(const std::vector<RateReport>& reports, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write rate report file: " + path);
  out << "scheme,M,N,tau1,tau2,tau3,snr_db,trials,desired,leakage,secure_sum,stderr\n";
  char buf[160];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%d,%d,%.2f,%zu,%.6f,%.6f,%.6f,%.6f",
                  scheme_name(r.scheme).c_str(), r.config.m, r.config.n, r.plan.tau1,
                  r.plan.tau2, r.plan.tau3, r.snr_db, r.trials, r.desired_rate, r.leakage_rate,
                  r.secure_sum_rate, r.std_error);
    out << buf << '\n';
  }
}

}  // namespace ofic
