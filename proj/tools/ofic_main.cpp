/**
 * @file ofic_main.cpp
 * @brief Command-line front end: bound tables, phase-duration optimization,
 *        rank verification, and Monte Carlo rate experiments.
 *
 * Exit status: 0 all checks passed, 1 check failure, 2 usage/config error.
 */
#include <CLI11.hpp>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ofic/channel.hpp"
#include "ofic/phaseplan.hpp"
#include "ofic/rates.hpp"
#include "ofic/schemes.hpp"
#include "ofic/sdof.hpp"
#include "ofic/verify.hpp"

namespace {

using namespace ofic;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

/// "64..2048x2" (geometric), "1..12" (step 1), "2,5,9", or "4".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> values;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int start = std::stoi(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    int factor = 0;
    const auto x = rest.find('x');
    if (x != std::string::npos) {
      factor = std::stoi(rest.substr(x + 1));
      rest = rest.substr(0, x);
    }
    const int stop = std::stoi(rest);
    if (start < 1 || stop < start) throw CLI::ValidationError("range", "bad range: " + text);
    if (factor > 1) {
      for (long long v = start; v <= stop; v *= factor) values.push_back(static_cast<int>(v));
    } else {
      for (int v = start; v <= stop; ++v) values.push_back(v);
    }
    return values;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    values.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (values.empty()) throw CLI::ValidationError("range", "empty range: " + text);
  return values;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = text.find(',', pos);
    values.push_back(std::stod(text.substr(pos, comma == std::string::npos ? comma : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (values.empty()) throw CLI::ValidationError("list", "empty list: " + text);
  return values;
}

std::string format_plan(const PhasePlan& p) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "tau=(%d,%d,%d) scheme=%s", p.tau1, p.tau2, p.tau3,
                scheme_name(p.scheme).c_str());
  return buf;
}

// ----- sdof-table ------------------------------------------------------------

struct SdofTableArgs {
  std::string m_range = "64..2048x2";
  std::string n_range = "64..1024x2";
  std::string out;
};

int cmd_sdof_table(const SdofTableArgs& args) {
  const auto ms = parse_range(args.m_range);
  const auto ns = parse_range(args.n_range);
  std::vector<AntennaConfig> configs;
  for (const int m : ms) {
    for (const int n : ns) configs.push_back({m, n});
  }
  const auto reports = sdof_table(configs);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) throw std::runtime_error("cannot write " + args.out);
    out = &file;
  }
  *out << "M,N,regime,lower,lower_value,upper,upper_value,exact,exact_value\n";
  for (const auto& r : reports) {
    *out << r.config.m << ',' << r.config.n << ',' << regime_name(r.regime) << ','
         << r.lower.to_string() << ',' << r.lower.to_decimal(4) << ',' << r.upper.to_string()
         << ',' << r.upper.to_decimal(4) << ',';
    if (r.exact.has_value()) {
      *out << r.exact->to_string() << ',' << r.exact->to_decimal(4);
    } else {
      *out << ',';
    }
    *out << '\n';
  }
  return kExitOk;
}

// ----- optimize ---------------------------------------------------------------

struct OptimizeArgs {
  int m = 0;
  int n = 0;
  int max_tau = 0;  // 0: default 4N
};

int cmd_optimize(const OptimizeArgs& args) {
  const AntennaConfig config{args.m, args.n};
  const Regime regime = classify_regime(config);
  const PhasePlan closed = optimal_plan(config);
  const Rational bound = lower_bound(config);

  std::printf("M=%d N=%d regime=%s\n", config.m, config.n, regime_name(regime).c_str());
  std::printf("closed-form: %s objective=%s\n", format_plan(closed).c_str(),
              bound.to_string().c_str());
  if (regime == Regime::kSilent) {
    std::printf("grid-oracle: skipped (silent regime)\nagreement: yes\n");
    return kExitOk;
  }

  const int max_tau = args.max_tau > 0 ? args.max_tau : 4 * config.n;
  const GridResult grid = grid_oracle(config, closed.scheme, max_tau);
  std::printf("grid-oracle: %s objective=%s (max_tau=%d)\n", format_plan(grid.plan).c_str(),
              grid.objective.to_string().c_str(), max_tau);

  const bool agree = grid.objective == bound;
  std::printf("agreement: %s\n", agree ? "yes" : "no");
  return agree ? kExitOk : kExitCheckFailure;
}

// ----- verify-ranks -------------------------------------------------------------

struct VerifyArgs {
  int m = 0;  // 0: sweep a grid
  int n = 0;
  int max_m = 6;
  int max_n = 6;
  int draws = 50;
  std::uint64_t seed = 1;
  std::string out;
  std::string violate;  // "", "security", "decoding"
  bool expect_violation = false;
  bool factorization = false;
};

PhasePlan violated_plan(AntennaConfig config, Regime regime, const std::string& kind) {
  const int n = config.n;
  if (regime == Regime::kDecoding) {
    if (kind != "security") {
      throw CLI::ValidationError("--violate", "decoding regime only supports security violation");
    }
    return {Scheme::kDecoding, n, 2 * config.m - n + 1, 0};
  }
  const Scheme scheme = regime == Regime::kCapped ? Scheme::kAlignmentCapped : Scheme::kAlignment;
  const int me = effective_m(config, scheme);
  if (kind == "security") {
    const int tau2 = n + 1;
    const int tau3 = (me - n) * tau2 % n == 0 ? (me - n) * tau2 / n : (me - n) * tau2 / n + 1;
    return {scheme, n, tau2, tau3};
  }
  return {scheme, n, n, 0};  // decoding violation: no recurrence phase
}

int cmd_verify_ranks(const VerifyArgs& args) {
  std::vector<AntennaConfig> configs;
  if (args.m > 0 && args.n > 0) {
    configs.push_back({args.m, args.n});
  } else {
    for (int m = 1; m <= args.max_m; ++m) {
      for (int n = 1; n <= args.max_n; ++n) {
        if (classify_regime({m, n}) != Regime::kSilent) configs.push_back({m, n});
      }
    }
  }

  SplitRng root(args.seed);
  std::vector<RankReport> reports;
  bool all_pass = true;

  std::uint64_t config_idx = 0;
  for (const AntennaConfig config : configs) {
    const Regime regime = classify_regime(config);
    if (regime == Regime::kSilent) continue;
    PhasePlan plan = optimal_plan(config);
    if (!args.violate.empty()) {
      if (regime == Regime::kDecoding && args.violate == "decoding") continue;
      plan = violated_plan(config, regime, args.violate);
    }
    const std::size_t nn = static_cast<std::size_t>(config.n);
    const std::size_t t1 = static_cast<std::size_t>(plan.tau1);
    const std::size_t t2 = static_cast<std::size_t>(plan.tau2);
    const std::size_t t3 = static_cast<std::size_t>(plan.tau3);
    const std::size_t me = static_cast<std::size_t>(effective_m(config, plan.scheme));

    SplitRng config_rng = root.split(config_idx++);
    for (int draw = 0; draw < args.draws; ++draw) {
      SplitRng draw_rng = config_rng.split(static_cast<std::uint64_t>(draw));
      SplitRng chan_rng = draw_rng.split(0);
      SplitRng comp_rng = draw_rng.split(1);
      const Trajectory traj(static_cast<std::size_t>(plan.total_slots()), 1.0);
      const ChannelSet cs = generate_channel(config, traj, FadingParams::unit(), chan_rng);
      const CompressionSet comp = draw_compression(plan, config, comp_rng);

      if (plan.scheme == Scheme::kDecoding) {
        const auto [a, b] = build_leakage_pair_decoding(cs, plan, comp);
        const auto [h1, g] = build_decode_pair_decoding(cs, plan, comp);
        reports.push_back(make_rank_report(plan.scheme, config, plan, "A",
                                           predicted_rank(config, plan, "A"), a));
        reports.push_back(make_rank_report(plan.scheme, config, plan, "B",
                                           predicted_rank(config, plan, "B"), b));
        reports.push_back(make_rank_report(plan.scheme, config, plan, "H1",
                                           predicted_rank(config, plan, "H1"), h1));
        reports.push_back(make_rank_report(plan.scheme, config, plan, "interferer",
                                           predicted_rank(config, plan, "interferer"), g));
        if (!args.violate.empty()) {
          const std::size_t gap =
              numeric_rank(a) - std::min(numeric_rank(a), numeric_rank(b));
          const std::size_t predicted_gap =
              args.expect_violation
                  ? nn * (t1 + t2) - std::min(nn * (t1 + t2), 2 * me * t1)
                  : 0;
          reports.push_back({plan.scheme, config, plan, "security-gap", predicted_gap, gap,
                             predicted_gap == gap});
        }
        if (args.factorization) {
          const auto rows = check_rank_factorization(cs, plan, comp, RankFactorization::kDecoding);
          reports.insert(reports.end(), rows.begin(), rows.end());
        }
      } else {
        const auto [c, d] = build_leakage_pair_alignment(cs, plan, comp);
        const auto [e, f] = build_decode_pair_alignment(cs, plan, comp);
        reports.push_back(make_rank_report(plan.scheme, config, plan, "C",
                                           predicted_rank(config, plan, "C"), c));
        reports.push_back(make_rank_report(plan.scheme, config, plan, "D",
                                           predicted_rank(config, plan, "D"), d));
        reports.push_back(make_rank_report(plan.scheme, config, plan, "E",
                                           predicted_rank(config, plan, "E"), e));
        reports.push_back(make_rank_report(plan.scheme, config, plan, "F",
                                           predicted_rank(config, plan, "F"), f));
        if (args.violate == "security") {
          const std::size_t gap =
              numeric_rank(c) - std::min(numeric_rank(c), numeric_rank(d));
          const std::size_t predicted_gap =
              args.expect_violation
                  ? nn * (t1 + t2) - std::min(nn * (t1 + t2), 2 * nn * t1)
                  : 0;
          reports.push_back({plan.scheme, config, plan, "security-gap", predicted_gap, gap,
                             predicted_gap == gap});
        } else if (args.violate == "decoding") {
          const std::size_t diff = numeric_rank(e) - numeric_rank(f);
          const std::size_t gap = me * t2 - std::min(me * t2, diff);
          const std::size_t predicted_gap =
              args.expect_violation ? me * t2 - std::min(nn * (t2 + t3), me * t2) : 0;
          reports.push_back({plan.scheme, config, plan, "decode-gap", predicted_gap, gap,
                             predicted_gap == gap});
        }
        if (args.factorization) {
          const auto rows = check_rank_factorization(cs, plan, comp, RankFactorization::kAlignment);
          reports.insert(reports.end(), rows.begin(), rows.end());
        }
      }
    }
  }

  if (reports.empty()) {
    std::fprintf(stderr, "verify-ranks: no applicable configurations\n");
    return kExitUsage;
  }
  for (const auto& r : reports) {
    if (!r.pass) {
      all_pass = false;
      std::fprintf(stderr, "rank check failed: %s M=%d N=%d matrix=%s predicted=%zu measured=%zu\n",
                   scheme_name(r.scheme).c_str(), r.config.m, r.config.n, r.matrix.c_str(),
                   r.predicted, r.measured);
      break;
    }
  }
  if (!args.out.empty()) write_rank_csv(reports, args.out);
  std::printf("verify-ranks: %zu rows, %s\n", reports.size(), all_pass ? "all pass" : "FAILURES");
  return all_pass ? kExitOk : kExitCheckFailure;
}

// ----- simulate / sweep -----------------------------------------------------------

struct SimulateArgs {
  std::string scheme = "auto";
  int m = 0;
  int n = 0;
  std::string snr_list = "10,20,30,40";
  std::string slope;  // "40,60" to add a slope check
  std::string compare;
  int trials = 10000;
  std::uint64_t seed = 1;
  int tau1 = -1, tau2 = -1, tau3 = -1;
  std::string out;
  std::string plot;
  std::string traj_file;
  std::string synth;  // "fixed:<d>" or "roundabout"
  double eta_db = -40.0;
  double pathloss_exp = 2.5;
  double noise_dbm = -89.0;
  std::string dump_transcript_path;
};

Scheme pick_scheme(const std::string& name, AntennaConfig config) {
  if (name != "auto") return scheme_from_name(name);
  switch (classify_regime(config)) {
    case Regime::kSilent:
      return Scheme::kSilent;
    case Regime::kDecoding:
      return Scheme::kDecoding;
    case Regime::kAlignment:
      return Scheme::kAlignment;
    case Regime::kCapped:
      return Scheme::kAlignmentCapped;
  }
  return Scheme::kSilent;
}

RateChannelParams make_channel_params(const SimulateArgs& args, std::size_t min_slots) {
  RateChannelParams params;
  if (!args.traj_file.empty() || !args.synth.empty()) {
    params.fading.eta_db = args.eta_db;
    params.fading.pathloss_exponent = args.pathloss_exp;
    params.fading.noise_power_dbm = args.noise_dbm;
    if (!args.traj_file.empty()) {
      params.trajectory = load_trajectory_csv(args.traj_file);
    } else if (args.synth.rfind("fixed:", 0) == 0) {
      TrajectoryGeometry geo;
      geo.distance_m = std::stod(args.synth.substr(6));
      params.trajectory = synth_trajectory(TrajectoryKind::kFixedDistance, min_slots, geo);
    } else if (args.synth == "roundabout") {
      params.trajectory = synth_trajectory(TrajectoryKind::kRoundabout, min_slots);
    } else {
      throw CLI::ValidationError("--synth", "expected fixed:<d> or roundabout");
    }
  }
  return params;
}

void write_plot_data(const std::vector<RateReport>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "x,y,series\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.2f,%.6f,%s-%dx%d", r.snr_db, r.secure_sum_rate,
                  scheme_name(r.scheme).c_str(), r.config.m, r.config.n);
    out << buf << '\n';
  }
}

int cmd_simulate(const SimulateArgs& args) {
  const AntennaConfig config{args.m, args.n};
  const Scheme scheme = pick_scheme(args.scheme, config);
  const Regime regime = classify_regime(config);

  // Scheme/regime compatibility is a usage error, surfaced before any work.
  if ((scheme == Scheme::kDecoding && regime != Regime::kDecoding) ||
      (scheme == Scheme::kAlignment && regime != Regime::kAlignment) ||
      (scheme == Scheme::kAlignmentCapped && regime != Regime::kCapped) ||
      (scheme == Scheme::kIaD && regime != Regime::kAlignment) ||
      (scheme == Scheme::kSilent && regime != Regime::kSilent)) {
    throw CLI::ValidationError("--scheme", "scheme does not match the antenna regime");
  }

  PhasePlan plan = optimal_plan(config);
  plan.scheme = scheme;
  if (args.tau1 >= 0) plan.tau1 = args.tau1;
  if (args.tau2 >= 0) plan.tau2 = args.tau2;
  if (args.tau3 >= 0) plan.tau3 = args.tau3;

  std::vector<PhasePlan> plans{plan};
  std::vector<Scheme> schemes{scheme};
  if (!args.compare.empty()) {
    if (args.compare != "ia-d") throw CLI::ValidationError("--compare", "only ia-d is supported");
    if (regime != Regime::kAlignment) {
      throw CLI::ValidationError("--compare", "ia-d comparison needs N < M <= 2N");
    }
    PhasePlan iad = plan;
    iad.scheme = Scheme::kIaD;
    plans.push_back(iad);
    schemes.push_back(Scheme::kIaD);
  }

  const auto snrs = parse_double_list(args.snr_list);
  const std::size_t max_slots =
      static_cast<std::size_t>(std::max(plans.front().total_slots(),
                                        plans.back().total_slots()));
  const RateChannelParams params = make_channel_params(args, std::max<std::size_t>(max_slots, 1));

  std::vector<RateReport> rows;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    for (const double snr_db : snrs) {
      rows.push_back(secure_sum_rate_mc(schemes[i], config, plans[i], snr_db,
                                        static_cast<std::size_t>(args.trials), params,
                                        SplitRng(args.seed)));
      const auto& r = rows.back();
      std::printf("%s M=%d N=%d snr=%.1f dB: desired=%.4f leakage=%.4f secure=%.4f (se %.4f)\n",
                  scheme_name(r.scheme).c_str(), config.m, config.n, r.snr_db, r.desired_rate,
                  r.leakage_rate, r.secure_sum_rate, r.std_error);
    }
  }

  int status = kExitOk;
  if (!args.slope.empty()) {
    const auto pair = parse_double_list(args.slope);
    if (pair.size() != 2) throw CLI::ValidationError("--slope", "expected two dB values");
    const auto slope = sdof_slope(scheme, config, plan, {pair[0], pair[1]},
                                  static_cast<std::size_t>(args.trials), params,
                                  SplitRng(args.seed));
    std::printf("slope: empirical=%.4f theoretical=%.4f\n", slope.empirical_sdof,
                slope.theoretical_sdof);
    const double tol = 0.05 * std::max(slope.theoretical_sdof, 1e-3);
    if (std::abs(slope.empirical_sdof - slope.theoretical_sdof) > tol) {
      std::fprintf(stderr, "slope check failed (beyond 5%% of theory)\n");
      status = kExitCheckFailure;
    }
  }

  if (!args.dump_transcript_path.empty() && scheme != Scheme::kSilent) {
    SplitRng trial = SplitRng(args.seed).split(0);
    SplitRng chan_rng = trial.split(0);
    SplitRng comp_rng = trial.split(1);
    SplitRng sym_rng = trial.split(2);
    SplitRng noise_rng = trial.split(3);
    const std::size_t slots = static_cast<std::size_t>(plan.total_slots());
    const Trajectory traj = params.trajectory.value_or(Trajectory(slots, 1.0));
    const ChannelSet cs = generate_channel(config, traj, params.fading, chan_rng);
    const double sigma2 = params.fading.noise_power_w();
    const double power = std::pow(10.0, snrs.front() / 10.0) * sigma2;
    const CompressionSet comp = draw_compression(plan, config, comp_rng);
    const SymbolSet syms = draw_symbols(plan, config, power, sym_rng);
    Transcript t;
    if (scheme == Scheme::kDecoding) {
      t = run_decoding_scheme(cs, plan, power, comp, syms, true, noise_rng);
    } else if (scheme == Scheme::kIaD) {
      t = run_ia_d_scheme(cs, plan, power, comp, syms, true, noise_rng);
    } else {
      t = run_alignment_scheme(cs, plan, power, comp, syms, true, noise_rng);
    }
    t.seed = args.seed;
    dump_transcript(t, args.dump_transcript_path);
  }

  if (!args.out.empty()) write_rate_csv(rows, args.out);
  if (!args.plot.empty()) write_plot_data(rows, args.plot);
  return status;
}

struct SweepArgs {
  std::string m_list = "2,3,4";
  std::string n_list = "2,3,4";
  std::string snr_list = "10,20,30,40";
  int trials = 1000;
  std::uint64_t seed = 1;
  std::string out;
  std::string plot;
};

int cmd_sweep(const SweepArgs& args) {
  const auto ms = parse_range(args.m_list);
  const auto ns = parse_range(args.n_list);
  const auto snrs = parse_double_list(args.snr_list);
  std::vector<RateReport> rows;
  for (const int m : ms) {
    for (const int n : ns) {
      const AntennaConfig config{m, n};
      const Scheme scheme = pick_scheme("auto", config);
      const PhasePlan plan = optimal_plan(config);
      for (const double snr_db : snrs) {
        rows.push_back(secure_sum_rate_mc(scheme, config, plan, snr_db,
                                          static_cast<std::size_t>(args.trials),
                                          RateChannelParams{}, SplitRng(args.seed)));
        const auto& r = rows.back();
        std::printf("%s M=%d N=%d snr=%.1f dB: secure=%.4f (se %.4f)\n",
                    scheme_name(r.scheme).c_str(), m, n, r.snr_db, r.secure_sum_rate,
                    r.std_error);
      }
    }
  }
  if (!args.out.empty()) write_rate_csv(rows, args.out);
  if (!args.plot.empty()) write_plot_data(rows, args.plot);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure-rate simulator for the two-user MIMO interference channel "
               "with local output feedback"};
  app.set_config("--config", "", "flat key=value configuration file");
  app.require_subcommand(1);

  SdofTableArgs sdof_args;
  auto* sdof_cmd = app.add_subcommand("sdof-table", "closed-form sum-SDoF bound table");
  sdof_cmd->add_option("--m", sdof_args.m_range, "M values, e.g. 64..2048x2 or 2,3,4");
  sdof_cmd->add_option("--n", sdof_args.n_range, "N values");
  sdof_cmd->add_option("--out,-o", sdof_args.out, "output CSV path");

  OptimizeArgs opt_args;
  auto* opt_cmd = app.add_subcommand("optimize", "phase-duration optimization and grid check");
  opt_cmd->add_option("--m", opt_args.m, "transmit antennas")->required();
  opt_cmd->add_option("--n", opt_args.n, "receive antennas")->required();
  opt_cmd->add_option("--max-tau", opt_args.max_tau, "grid bound (default 4N)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-ranks", "rank identities of the chain matrices");
  verify_cmd->add_option("--m", verify_args.m, "single config M");
  verify_cmd->add_option("--n", verify_args.n, "single config N");
  verify_cmd->add_option("--max-m", verify_args.max_m, "grid bound on M");
  verify_cmd->add_option("--max-n", verify_args.max_n, "grid bound on N");
  verify_cmd->add_option("--draws", verify_args.draws, "channel draws per config");
  verify_cmd->add_option("--seed", verify_args.seed, "root seed");
  verify_cmd->add_option("--out,-o", verify_args.out, "rank report CSV path");
  verify_cmd->add_option("--violate", verify_args.violate,
                         "run a constraint-violating plan: security or decoding")
      ->check(CLI::IsMember({"security", "decoding"}));
  verify_cmd->add_flag("--expect-violation", verify_args.expect_violation,
                       "treat the predicted rank gap as the pass condition");
  verify_cmd->add_flag("--factorization", verify_args.factorization,
                       "include the U*L factorization checks");

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo secure sum-rate");
  sim_cmd->add_option("--scheme", sim_args.scheme,
                      "silent|decoding|alignment|alignment-capped|ia-d|auto");
  sim_cmd->add_option("--m", sim_args.m, "transmit antennas")->required();
  sim_cmd->add_option("--n", sim_args.n, "receive antennas")->required();
  sim_cmd->add_option("--snr", sim_args.snr_list, "SNR list in dB, e.g. 10,20,30");
  sim_cmd->add_option("--trials", sim_args.trials, "Monte Carlo trials");
  sim_cmd->add_option("--seed", sim_args.seed, "root seed");
  sim_cmd->add_option("--slope", sim_args.slope, "two dB points for an SDoF slope check");
  sim_cmd->add_option("--compare", sim_args.compare, "add a comparison scheme (ia-d)");
  sim_cmd->add_option("--tau1", sim_args.tau1, "override tau1");
  sim_cmd->add_option("--tau2", sim_args.tau2, "override tau2");
  sim_cmd->add_option("--tau3", sim_args.tau3, "override tau3");
  sim_cmd->add_option("--out,-o", sim_args.out, "rate report CSV path");
  sim_cmd->add_option("--plot", sim_args.plot, "plot-data CSV path (x,y,series)");
  sim_cmd->add_option("--traj", sim_args.traj_file, "trajectory CSV (t,tx,rx,distance_m)");
  sim_cmd->add_option("--synth", sim_args.synth, "synthetic trajectory: fixed:<d> or roundabout");
  sim_cmd->add_option("--eta-db", sim_args.eta_db, "pathloss gain at 1 m (dB)");
  sim_cmd->add_option("--pathloss-exp", sim_args.pathloss_exp, "pathloss exponent");
  sim_cmd->add_option("--noise-dbm", sim_args.noise_dbm, "noise power (dBm)");
  sim_cmd->add_option("--dump-transcript", sim_args.dump_transcript_path,
                      "write one run's transcript to a file");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "rate sweep over antenna configurations");
  sweep_cmd->add_option("--m-list", sweep_args.m_list, "M values");
  sweep_cmd->add_option("--n-list", sweep_args.n_list, "N values");
  sweep_cmd->add_option("--snr", sweep_args.snr_list, "SNR list in dB");
  sweep_cmd->add_option("--trials", sweep_args.trials, "Monte Carlo trials");
  sweep_cmd->add_option("--seed", sweep_args.seed, "root seed");
  sweep_cmd->add_option("--out,-o", sweep_args.out, "rate report CSV path");
  sweep_cmd->add_option("--plot", sweep_args.plot, "plot-data CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sdof_cmd->parsed()) return cmd_sdof_table(sdof_args);
    if (opt_cmd->parsed()) return cmd_optimize(opt_args);
    if (verify_cmd->parsed()) return cmd_verify_ranks(verify_args);
    if (sim_cmd->parsed()) return cmd_simulate(sim_args);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailure;
  }
  return kExitUsage;
}
