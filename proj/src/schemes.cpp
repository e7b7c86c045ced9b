#include "ofic/schemes.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ofic {

namespace {

cx_mat gaussian_or_empty(std::size_t rows, std::size_t cols, SplitRng& rng) {
  if (rows == 0 || cols == 0) return cx_mat(rows, cols);
  return sample_gaussian(rows, cols, 1.0, rng);
}

cx_vec symbols_or_empty(std::size_t len, double variance, SplitRng& rng) {
  if (len == 0) return cx_vec();
  cx_vec v(len);
  for (arma::uword i = 0; i < len; ++i) v(i) = rng.cgaussian(variance);
  return v;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::size_t u(int v) { return static_cast<std::size_t>(v); }

/// Effective channel of `span` from transmitter `tx` to receiver `rx`.
cx_mat eff(const ChannelSet& cs, int tx, int rx, const PhaseSpan& span) {
  const int streams = (tx == 1) ? span.streams1 : span.streams2;
  return effective_phase_matrix(cs, tx, rx, span.first_slot, span.last_slot, streams);
}

/// Scale factor bringing component `comp_mat * y` (covariance cov_y) to a
/// total budget of `budget_per_slot * slots`.
double component_scale(const cx_mat& comp_mat, const cx_mat& cov_y, double budget_per_slot,
                       int slots) {
  if (comp_mat.n_rows == 0 || slots == 0) return 1.0;
  const double expected = std::real(arma::trace(comp_mat * cov_y * comp_mat.t()));
  if (expected <= 0.0) {
    throw std::runtime_error("power policy: degenerate feedback covariance");
  }
  return std::sqrt(budget_per_slot * static_cast<double>(slots) / expected);
}

struct PhaseChannels {
  cx_mat h11, h21, h12, h22;  // h{tx}{rx}
};

PhaseChannels phase_channels(const ChannelSet& cs, const PhaseSpan& span) {
  return {eff(cs, 1, 1, span), eff(cs, 2, 1, span), eff(cs, 1, 2, span), eff(cs, 2, 2, span)};
}

PhaseRecord run_phase(const ChannelSet& cs, const PhaseSpan& span, cx_vec x1, cx_vec x2,
                      bool noise_on, SplitRng& rng) {
  const PhaseChannels h = phase_channels(cs, span);
  PhaseRecord rec;
  rec.span = span;
  const arma::uword ny = h.h11.n_rows;
  rec.y1_clean = cx_vec(ny, arma::fill::zeros);
  rec.y2_clean = cx_vec(ny, arma::fill::zeros);
  if (x1.n_elem > 0) {
    rec.y1_clean += h.h11 * x1;
    rec.y2_clean += h.h12 * x1;
  }
  if (x2.n_elem > 0) {
    rec.y1_clean += h.h21 * x2;
    rec.y2_clean += h.h22 * x2;
  }
  rec.y1 = rec.y1_clean;
  rec.y2 = rec.y2_clean;
  if (noise_on) {
    const double sigma2 = cs.noise_power();
    for (arma::uword i = 0; i < ny; ++i) rec.y1(i) += rng.cgaussian(sigma2);
    for (arma::uword i = 0; i < ny; ++i) rec.y2(i) += rng.cgaussian(sigma2);
  }
  rec.x1 = std::move(x1);
  rec.x2 = std::move(x2);
  return rec;
}

void check_dims(const cx_mat& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.n_rows != rows || m.n_cols != cols) {
    throw std::invalid_argument(std::string("dimension mismatch for ") + what);
  }
}

void check_len(const cx_vec& v, std::size_t len, const char* what) {
  if (v.n_elem != len) {
    throw std::invalid_argument(std::string("length mismatch for ") + what);
  }
}

}  // namespace

std::vector<PhaseSpan> phase_layout(AntennaConfig config, const PhasePlan& plan) {
  const int n = config.n;
  const int me = effective_m(config, plan.scheme);
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);
  const auto t3 = u(plan.tau3);
  std::vector<PhaseSpan> spans;
  switch (plan.scheme) {
    case Scheme::kSilent:
      break;
    case Scheme::kDecoding: {
      const int m = config.m;
      spans.push_back({"I", 1, t1, m, m});
      spans.push_back({"II", t1 + 1, t1 + t2, m, n - m});
      spans.push_back({"III", t1 + t2 + 1, t1 + 2 * t2, n - m, m});
      break;
    }
    case Scheme::kAlignment:
    case Scheme::kAlignmentCapped: {
      spans.push_back({"I", 1, t1, n, n});
      spans.push_back({"II", t1 + 1, t1 + t2, me, me});
      spans.push_back({"III", t1 + t2 + 1, t1 + 2 * t2, me, me});
      if (t3 > 0) spans.push_back({"IV", t1 + 2 * t2 + 1, t1 + 2 * t2 + t3, n, n});
      break;
    }
    case Scheme::kIaD: {
      spans.push_back({"Ia", 1, t1, n, 0});
      spans.push_back({"Ib", t1 + 1, 2 * t1, 0, n});
      spans.push_back({"II", 2 * t1 + 1, 2 * t1 + t2, me, me});
      spans.push_back({"III", 2 * t1 + t2 + 1, 2 * t1 + 2 * t2, me, me});
      if (t3 > 0) spans.push_back({"IV", 2 * t1 + 2 * t2 + 1, 2 * t1 + 2 * t2 + t3, n, n});
      break;
    }
  }
  return spans;
}

const PhaseRecord& Transcript::phase(const std::string& label) const {
  for (const auto& p : phases) {
    if (p.span.label == label) return p;
  }
  throw std::invalid_argument("transcript has no phase " + label);
}

CompressionSet draw_compression(const PhasePlan& plan, AntennaConfig config, SplitRng& rng) {
  const auto n = u(config.n);
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);
  const auto t3 = u(plan.tau3);
  CompressionSet comp;
  switch (plan.scheme) {
    case Scheme::kSilent:
      break;
    case Scheme::kDecoding: {
      if (config.m > config.n) {
        throw std::invalid_argument("draw_compression: decoding scheme needs M <= N");
      }
      const auto m = u(config.m);
      comp.phi1a = gaussian_or_empty(m * t2, n * t1, rng);
      comp.phi2a = gaussian_or_empty((n - m) * t2, n * t1, rng);
      comp.phi1b = gaussian_or_empty((n - m) * t2, n * t1, rng);
      comp.phi2b = gaussian_or_empty(m * t2, n * t1, rng);
      break;
    }
    case Scheme::kAlignment:
    case Scheme::kAlignmentCapped:
    case Scheme::kIaD: {
      const auto me = u(effective_m(config, plan.scheme));
      comp.phi = gaussian_or_empty(me * t2, n * t1, rng);
      comp.theta = gaussian_or_empty(n * t3, n * t2, rng);
      break;
    }
  }
  return comp;
}

SymbolSet draw_symbols(const PhasePlan& plan, AntennaConfig config, double power, SplitRng& rng) {
  if (power <= 0.0) throw std::invalid_argument("draw_symbols: power must be positive");
  const auto n = u(config.n);
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);
  SymbolSet syms;
  switch (plan.scheme) {
    case Scheme::kSilent:
      break;
    case Scheme::kDecoding: {
      const auto m = u(config.m);
      // AN carries the full per-slot budget; data phases split the budget with
      // the feedback component.
      syms.u1 = symbols_or_empty(m * t1, power / static_cast<double>(m), rng);
      syms.u2 = symbols_or_empty(m * t1, power / static_cast<double>(m), rng);
      const double data_var_m = power / (2.0 * static_cast<double>(m));
      const double data_var_r =
          (n > m) ? power / (2.0 * static_cast<double>(n - m)) : 0.0;
      syms.s1a = symbols_or_empty(m * t2, data_var_m, rng);
      syms.s2a = (n > m) ? symbols_or_empty((n - m) * t2, data_var_r, rng) : cx_vec();
      syms.s1b = (n > m) ? symbols_or_empty((n - m) * t2, data_var_r, rng) : cx_vec();
      syms.s2b = symbols_or_empty(m * t2, data_var_m, rng);
      break;
    }
    case Scheme::kAlignment:
    case Scheme::kAlignmentCapped:
    case Scheme::kIaD: {
      const auto me = u(effective_m(config, plan.scheme));
      syms.u1 = symbols_or_empty(n * t1, power / static_cast<double>(n), rng);
      syms.u2 = symbols_or_empty(n * t1, power / static_cast<double>(n), rng);
      const double data_var = power / (2.0 * static_cast<double>(me));
      syms.s1 = symbols_or_empty(me * t2, data_var, rng);
      syms.s2 = symbols_or_empty(me * t2, data_var, rng);
      break;
    }
  }
  return syms;
}

// ----- interference decoding scheme ----------------------------------------

Transcript run_decoding_scheme(const ChannelSet& cs, const PhasePlan& plan, double power,
                               const CompressionSet& comp, const SymbolSet& syms, bool noise_on,
                               SplitRng& noise_rng) {
  const AntennaConfig config = cs.config();
  require(plan.scheme == Scheme::kDecoding, "run_decoding_scheme: plan is not a decoding plan");
  require(classify_regime(config) == Regime::kDecoding,
          "run_decoding_scheme: regime mismatch (need N/2 < M <= N)");
  require(plan.tau1 >= 1 && plan.tau2 >= 1 && plan.tau3 == 0,
          "run_decoding_scheme: invalid phase durations");
  require(cs.slots() >= u(plan.total_slots()), "run_decoding_scheme: channel set too short");
  require(power > 0.0, "run_decoding_scheme: power must be positive");

  const auto m = u(config.m);
  const auto n = u(config.n);
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);
  check_dims(comp.phi1a, m * t2, n * t1, "phi1a");
  check_dims(comp.phi2a, (n - m) * t2, n * t1, "phi2a");
  check_dims(comp.phi1b, (n - m) * t2, n * t1, "phi1b");
  check_dims(comp.phi2b, m * t2, n * t1, "phi2b");
  check_len(syms.u1, m * t1, "u1");
  check_len(syms.u2, m * t1, "u2");
  check_len(syms.s1a, m * t2, "s1a");
  check_len(syms.s2a, (n - m) * t2, "s2a");
  check_len(syms.s1b, (n - m) * t2, "s1b");
  check_len(syms.s2b, m * t2, "s2b");

  Transcript t;
  t.config = config;
  t.plan = plan;
  t.power = power;
  t.noise_on = noise_on;
  t.comp = comp;
  t.syms = syms;

  const auto spans = phase_layout(config, plan);
  const PhaseSpan& sp1 = spans[0];
  const PhaseSpan& sp2 = spans[1];
  const PhaseSpan& sp3 = spans[2];
  t.phases.reserve(spans.size());

  // Phase-I: joint AN on all M antennas.
  t.phases.push_back(run_phase(cs, sp1, syms.u1, syms.u2, noise_on, noise_rng));
  const cx_vec y1_i = t.phases[0].y1;  // fed back to transmitter 1
  const cx_vec y2_i = t.phases[0].y2;  // fed back to transmitter 2

  // Deterministic feedback scales from the phase-I output covariance.
  const double pu = power / static_cast<double>(m);
  const double sigma2 = cs.noise_power();
  const PhaseChannels h1 = phase_channels(cs, sp1);
  const cx_mat eye1 = arma::eye<cx_mat>(n * t1, n * t1);
  const cx_mat cov_y1 = pu * (h1.h11 * h1.h11.t() + h1.h21 * h1.h21.t()) + sigma2 * eye1;
  const cx_mat cov_y2 = pu * (h1.h12 * h1.h12.t() + h1.h22 * h1.h22.t()) + sigma2 * eye1;
  const double half = power / 2.0;
  t.scal.beta1a = component_scale(comp.phi1a, cov_y1, half, plan.tau2);
  t.scal.beta2a = component_scale(comp.phi2a, cov_y2, half, plan.tau2);
  t.scal.beta1b = component_scale(comp.phi1b, cov_y1, half, plan.tau2);
  t.scal.beta2b = component_scale(comp.phi2b, cov_y2, half, plan.tau2);

  // Phase-II: fresh data superposed on compressed phase-I feedback.
  cx_vec x1_ii = syms.s1a + t.scal.beta1a * (comp.phi1a * y1_i);
  cx_vec x2_ii = (n > m) ? cx_vec(syms.s2a + t.scal.beta2a * (comp.phi2a * y2_i)) : cx_vec();
  t.phases.push_back(run_phase(cs, sp2, std::move(x1_ii), std::move(x2_ii), noise_on, noise_rng));

  // Phase-III: roles of the stream counts swap.
  cx_vec x1_iii = (n > m) ? cx_vec(syms.s1b + t.scal.beta1b * (comp.phi1b * y1_i)) : cx_vec();
  cx_vec x2_iii = syms.s2b + t.scal.beta2b * (comp.phi2b * y2_i);
  t.phases.push_back(
      run_phase(cs, sp3, std::move(x1_iii), std::move(x2_iii), noise_on, noise_rng));
  return t;
}

// ----- interference alignment scheme ----------------------------------------

Transcript run_alignment_scheme(const ChannelSet& cs, const PhasePlan& plan, double power,
                                const CompressionSet& comp, const SymbolSet& syms, bool noise_on,
                                SplitRng& noise_rng) {
  const AntennaConfig config = cs.config();
  const Regime regime = classify_regime(config);
  if (plan.scheme == Scheme::kAlignment) {
    require(regime == Regime::kAlignment,
            "run_alignment_scheme: regime mismatch (need N < M <= 2N)");
  } else if (plan.scheme == Scheme::kAlignmentCapped) {
    require(regime == Regime::kCapped,
            "run_alignment_scheme: regime mismatch (capped scheme needs 2N < M)");
  } else {
    throw std::invalid_argument("run_alignment_scheme: plan is not an alignment plan");
  }
  require(plan.tau1 >= 1 && plan.tau2 >= 1 && plan.tau3 >= 0,
          "run_alignment_scheme: invalid phase durations");
  require(cs.slots() >= u(plan.total_slots()), "run_alignment_scheme: channel set too short");
  require(power > 0.0, "run_alignment_scheme: power must be positive");

  const auto me = u(effective_m(config, plan.scheme));
  const auto n = u(config.n);
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);
  const auto t3 = u(plan.tau3);
  check_dims(comp.phi, me * t2, n * t1, "phi");
  check_dims(comp.theta, n * t3, n * t2, "theta");
  check_len(syms.u1, n * t1, "u1");
  check_len(syms.u2, n * t1, "u2");
  check_len(syms.s1, me * t2, "s1");
  check_len(syms.s2, me * t2, "s2");

  Transcript t;
  t.config = config;
  t.plan = plan;
  t.power = power;
  t.noise_on = noise_on;
  t.comp = comp;
  t.syms = syms;

  const auto spans = phase_layout(config, plan);
  t.phases.reserve(spans.size());

  // Phase-I: joint AN on N antennas.
  t.phases.push_back(run_phase(cs, spans[0], syms.u1, syms.u2, noise_on, noise_rng));
  const cx_vec y1_i = t.phases[0].y1;
  const cx_vec y2_i = t.phases[0].y2;

  const double pu = power / static_cast<double>(n);
  const double ps = power / (2.0 * static_cast<double>(me));
  const double sigma2 = cs.noise_power();
  const PhaseChannels h1 = phase_channels(cs, spans[0]);
  const cx_mat eye1 = arma::eye<cx_mat>(n * t1, n * t1);
  const cx_mat cov_y1_i = pu * (h1.h11 * h1.h11.t() + h1.h21 * h1.h21.t()) + sigma2 * eye1;
  const cx_mat cov_y2_i = pu * (h1.h12 * h1.h12.t() + h1.h22 * h1.h22.t()) + sigma2 * eye1;
  t.scal.beta1 = component_scale(comp.phi, cov_y1_i, power / 2.0, plan.tau2);
  t.scal.beta2 = component_scale(comp.phi, cov_y2_i, power / 2.0, plan.tau2);

  // Phase-II: transmitter 1 only; transmitter 2 sends an explicit zero block.
  cx_vec x1_ii = syms.s1 + t.scal.beta1 * (comp.phi * y1_i);
  t.phases.push_back(run_phase(cs, spans[1], std::move(x1_ii),
                               cx_vec(me * t2, arma::fill::zeros), noise_on, noise_rng));
  const cx_vec y2_ii = t.phases[1].y2;  // fed back to transmitter 2 afterwards

  // Phase-III: mirror image.
  cx_vec x2_iii = syms.s2 + t.scal.beta2 * (comp.phi * y2_i);
  t.phases.push_back(run_phase(cs, spans[2], cx_vec(me * t2, arma::fill::zeros),
                               std::move(x2_iii), noise_on, noise_rng));
  const cx_vec y1_iii = t.phases[2].y1;  // fed back to transmitter 1 afterwards

  if (t3 > 0) {
    // Phase-IV: interference recurrence from the fed-back outputs.
    const cx_mat h21_iii = eff(cs, 2, 1, spans[2]);
    const cx_mat h12_ii = eff(cs, 1, 2, spans[1]);
    const auto eye_s = arma::eye<cx_mat>(me * t2, me * t2);
    const cx_mat cov_y1_iii =
        h21_iii * (ps * eye_s + t.scal.beta2 * t.scal.beta2 * comp.phi * cov_y2_i * comp.phi.t()) *
            h21_iii.t() +
        sigma2 * arma::eye<cx_mat>(n * t2, n * t2);
    const cx_mat cov_y2_ii =
        h12_ii * (ps * eye_s + t.scal.beta1 * t.scal.beta1 * comp.phi * cov_y1_i * comp.phi.t()) *
            h12_ii.t() +
        sigma2 * arma::eye<cx_mat>(n * t2, n * t2);
    t.scal.gamma1 = component_scale(comp.theta, cov_y1_iii, power, plan.tau3);
    t.scal.gamma2 = component_scale(comp.theta, cov_y2_ii, power, plan.tau3);

    cx_vec x1_iv = t.scal.gamma1 * (comp.theta * y1_iii);
    cx_vec x2_iv = t.scal.gamma2 * (comp.theta * y2_ii);
    t.phases.push_back(
        run_phase(cs, spans[3], std::move(x1_iv), std::move(x2_iv), noise_on, noise_rng));
  }
  return t;
}

Transcript run_silent_scheme(AntennaConfig config) {
  Transcript t;
  t.config = config;
  t.plan = {Scheme::kSilent, 0, 0, 0};
  t.power = 0.0;
  t.noise_on = false;
  return t;
}

// ----- IA-D comparison scheme ------------------------------------------------

Transcript run_ia_d_scheme(const ChannelSet& cs, const PhasePlan& plan, double power,
                           const CompressionSet& comp, const SymbolSet& syms, bool noise_on,
                           SplitRng& noise_rng) {
  const AntennaConfig config = cs.config();
  require(plan.scheme == Scheme::kIaD, "run_ia_d_scheme: plan is not an ia-d plan");
  require(classify_regime(config) == Regime::kAlignment,
          "run_ia_d_scheme: regime mismatch (need N < M <= 2N)");
  require(plan.tau1 >= 1 && plan.tau2 >= 1 && plan.tau3 >= 0,
          "run_ia_d_scheme: invalid phase durations");
  require(cs.slots() >= u(plan.total_slots()), "run_ia_d_scheme: channel set too short");
  require(power > 0.0, "run_ia_d_scheme: power must be positive");

  const auto me = u(effective_m(config, plan.scheme));
  const auto n = u(config.n);
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);
  const auto t3 = u(plan.tau3);
  check_dims(comp.phi, me * t2, n * t1, "phi");
  check_dims(comp.theta, n * t3, n * t2, "theta");
  check_len(syms.u1, n * t1, "u1");
  check_len(syms.u2, n * t1, "u2");
  check_len(syms.s1, me * t2, "s1");
  check_len(syms.s2, me * t2, "s2");

  Transcript t;
  t.config = config;
  t.plan = plan;
  t.power = power;
  t.noise_on = noise_on;
  t.comp = comp;
  t.syms = syms;

  const auto spans = phase_layout(config, plan);
  t.phases.reserve(spans.size());

  // Separate AN phases: transmitter 1, then transmitter 2, alone.
  t.phases.push_back(run_phase(cs, spans[0], syms.u1, cx_vec(), noise_on, noise_rng));
  t.phases.push_back(run_phase(cs, spans[1], cx_vec(), syms.u2, noise_on, noise_rng));

  // Delayed CSIT: each transmitter reconstructs its receiver's AN-phase output
  // noiselessly from its own symbols and the (now known) channel.
  const cx_mat h11_ia = eff(cs, 1, 1, spans[0]);
  const cx_mat h22_ib = eff(cs, 2, 2, spans[1]);
  const cx_vec y1_ia_hat = h11_ia * syms.u1;
  const cx_vec y2_ib_hat = h22_ib * syms.u2;

  const double pu = power / static_cast<double>(n);
  const double ps = power / (2.0 * static_cast<double>(me));
  const cx_mat cov_y1_ia = pu * (h11_ia * h11_ia.t());
  const cx_mat cov_y2_ib = pu * (h22_ib * h22_ib.t());
  t.scal.beta1 = component_scale(comp.phi, cov_y1_ia, power / 2.0, plan.tau2);
  t.scal.beta2 = component_scale(comp.phi, cov_y2_ib, power / 2.0, plan.tau2);

  // Phase-II / Phase-III mirror the alignment scheme with reconstructed
  // outputs in place of fed-back ones.
  cx_vec x1_ii = syms.s1 + t.scal.beta1 * (comp.phi * y1_ia_hat);
  t.phases.push_back(run_phase(cs, spans[2], std::move(x1_ii),
                               cx_vec(me * t2, arma::fill::zeros), noise_on, noise_rng));
  cx_vec x2_iii = syms.s2 + t.scal.beta2 * (comp.phi * y2_ib_hat);
  t.phases.push_back(run_phase(cs, spans[3], cx_vec(me * t2, arma::fill::zeros),
                               std::move(x2_iii), noise_on, noise_rng));

  if (t3 > 0) {
    // Phase-IV: each transmitter retransmits the interference it caused at the
    // other receiver, reconstructed from delayed CSI.
    const cx_mat h12_ii = eff(cs, 1, 2, spans[2]);
    const cx_mat h21_iii = eff(cs, 2, 1, spans[3]);
    const cx_vec x1_ii_sent = t.phases[2].x1;
    const cx_vec x2_iii_sent = t.phases[3].x2;
    const cx_vec y2_ii_hat = h12_ii * x1_ii_sent;
    const cx_vec y1_iii_hat = h21_iii * x2_iii_sent;

    const auto eye_s = arma::eye<cx_mat>(me * t2, me * t2);
    const cx_mat cov_y2_ii =
        h12_ii *
        (ps * eye_s + t.scal.beta1 * t.scal.beta1 * comp.phi * cov_y1_ia * comp.phi.t()) *
        h12_ii.t();
    const cx_mat cov_y1_iii =
        h21_iii *
        (ps * eye_s + t.scal.beta2 * t.scal.beta2 * comp.phi * cov_y2_ib * comp.phi.t()) *
        h21_iii.t();
    t.scal.gamma1 = component_scale(comp.theta, cov_y2_ii, power, plan.tau3);
    t.scal.gamma2 = component_scale(comp.theta, cov_y1_iii, power, plan.tau3);

    cx_vec x1_iv = t.scal.gamma1 * (comp.theta * y2_ii_hat);
    cx_vec x2_iv = t.scal.gamma2 * (comp.theta * y1_iii_hat);
    t.phases.push_back(
        run_phase(cs, spans[4], std::move(x1_iv), std::move(x2_iv), noise_on, noise_rng));
  }
  return t;
}

// ----- receiver decoding -----------------------------------------------------

namespace {

cx_vec solve_square(const cx_mat& g, const cx_vec& b) {
  cx_vec w;
  if (!arma::solve(w, g, b, arma::solve_opts::no_approx)) {
    throw std::runtime_error("decode failure: singular effective decoding system");
  }
  return w;
}

cx_vec solve_ls(const cx_mat& g, const cx_vec& b) {
  cx_vec w;
  if (!arma::solve(w, g, b)) {
    throw std::runtime_error("decode failure: effective decoding solve failed");
  }
  return w;
}

DecodeResult decode_decoding(const Transcript& t, const ChannelSet& cs) {
  const auto spans = phase_layout(t.config, t.plan);
  const PhaseChannels h2 = phase_channels(cs, spans[1]);
  const PhaseChannels h3 = phase_channels(cs, spans[2]);
  const auto m = u(t.config.m);
  const auto n = u(t.config.n);
  const auto t2 = u(t.plan.tau2);

  const cx_vec& y1_i = t.phase("I").y1;
  const cx_vec& y2_i = t.phase("I").y2;

  // Receiver 1: subtract its own feedback contribution, then solve the square
  // system in [s1a; s2a + phi2a y2_i; s1b; s2b + phi2b y2_i].
  const cx_mat zero_half(n * t2, n * t2, arma::fill::zeros);
  cx_vec b1 = arma::join_cols(
      cx_vec(t.phase("II").y1 - t.scal.beta1a * (h2.h11 * (t.comp.phi1a * y1_i))),
      cx_vec(t.phase("III").y1 - t.scal.beta1b * (h3.h11 * (t.comp.phi1b * y1_i))));
  const cx_mat g1 = arma::join_cols(arma::join_rows(h2.h11, h2.h21, zero_half),
                                    arma::join_rows(zero_half, h3.h11, h3.h21));
  const cx_vec w1 = solve_square(g1, b1);

  cx_vec b2 = arma::join_cols(
      cx_vec(t.phase("II").y2 - t.scal.beta2a * (h2.h22 * (t.comp.phi2a * y2_i))),
      cx_vec(t.phase("III").y2 - t.scal.beta2b * (h3.h22 * (t.comp.phi2b * y2_i))));
  const cx_mat g2 = arma::join_cols(arma::join_rows(h2.h12, h2.h22, zero_half),
                                    arma::join_rows(zero_half, h3.h12, h3.h22));
  const cx_vec w2 = solve_square(g2, b2);

  DecodeResult out;
  // w1 = [s1a; v2a; s1b; v2b], w2 = [v1a; s2a; v1b; s2b]
  const std::size_t rem = (n - m) * t2;
  out.s1_hat = w1.head(m * t2);
  out.s2_hat = w2.tail(m * t2);
  if (rem > 0) {
    out.s1_hat = arma::join_cols(out.s1_hat, cx_vec(w1.subvec(n * t2, n * t2 + rem - 1)));
    out.s2_hat = arma::join_cols(cx_vec(w2.subvec(m * t2, n * t2 - 1)), out.s2_hat);
  }
  return out;
}

DecodeResult decode_alignment_like(const Transcript& t, const ChannelSet& cs) {
  const bool iad = t.plan.scheme == Scheme::kIaD;
  const auto spans = phase_layout(t.config, t.plan);
  const std::size_t ii = iad ? 2 : 1;
  const std::size_t iii = iad ? 3 : 2;
  const cx_mat h11_ii = eff(cs, 1, 1, spans[ii]);
  const cx_mat h12_ii = eff(cs, 1, 2, spans[ii]);
  const cx_mat h21_iii = eff(cs, 2, 1, spans[iii]);
  const cx_mat h22_iii = eff(cs, 2, 2, spans[iii]);

  const cx_vec& y1_an = iad ? t.phase("Ia").y1 : t.phase("I").y1;
  const cx_vec& y2_an = iad ? t.phase("Ib").y2 : t.phase("I").y2;

  cx_vec r1 = t.phase("II").y1 - t.scal.beta1 * (h11_ii * (t.comp.phi * y1_an));
  cx_vec r2 = t.phase("III").y2 - t.scal.beta2 * (h22_iii * (t.comp.phi * y2_an));

  cx_mat g1 = h11_ii;
  cx_mat g2 = h22_iii;
  if (t.plan.tau3 > 0) {
    const auto& sp4 = spans.back();
    const cx_mat h11_iv = eff(cs, 1, 1, sp4);
    const cx_mat h21_iv = eff(cs, 2, 1, sp4);
    const cx_mat h12_iv = eff(cs, 1, 2, sp4);
    const cx_mat h22_iv = eff(cs, 2, 2, sp4);
    const cx_vec& y1_iii = t.phase("III").y1;
    const cx_vec& y2_ii = t.phase("II").y2;
    const auto& th = t.comp.theta;
    const auto& ph = t.comp.phi;
    const double g1s = t.scal.gamma1;
    const double g2s = t.scal.gamma2;

    cx_vec r1_iv, r2_iv;
    cx_mat g1_iv, g2_iv;
    if (!iad) {
      // x1_IV = g1 Theta y1_III, x2_IV = g2 Theta y2_II
      r1_iv = t.phase("IV").y1 - g1s * (h11_iv * (th * y1_iii)) -
              g2s * t.scal.beta1 * (h21_iv * (th * (h12_ii * (ph * y1_an))));
      g1_iv = g2s * h21_iv * th * h12_ii;
      r2_iv = t.phase("IV").y2 - g2s * (h22_iv * (th * y2_ii)) -
              g1s * t.scal.beta2 * (h12_iv * (th * (h21_iii * (ph * y2_an))));
      g2_iv = g1s * h12_iv * th * h21_iii;
    } else {
      // x1_IV = g1 Theta y2_II_hat, x2_IV = g2 Theta y1_III_hat
      r1_iv = t.phase("IV").y1 - g2s * (h21_iv * (th * y1_iii)) -
              g1s * t.scal.beta1 * (h11_iv * (th * (h12_ii * (ph * y1_an))));
      g1_iv = g1s * h11_iv * th * h12_ii;
      r2_iv = t.phase("IV").y2 - g1s * (h12_iv * (th * y2_ii)) -
              g2s * t.scal.beta2 * (h22_iv * (th * (h21_iii * (ph * y2_an))));
      g2_iv = g2s * h22_iv * th * h21_iii;
    }
    r1 = arma::join_cols(r1, r1_iv);
    g1 = arma::join_cols(g1, g1_iv);
    r2 = arma::join_cols(r2, r2_iv);
    g2 = arma::join_cols(g2, g2_iv);
  }

  DecodeResult out;
  out.s1_hat = solve_ls(g1, r1);
  out.s2_hat = solve_ls(g2, r2);
  return out;
}

}  // namespace

DecodeResult decode_receivers(const Transcript& t, const ChannelSet& cs) {
  switch (t.plan.scheme) {
    case Scheme::kSilent:
      return {};
    case Scheme::kDecoding:
      return decode_decoding(t, cs);
    case Scheme::kAlignment:
    case Scheme::kAlignmentCapped:
    case Scheme::kIaD:
      return decode_alignment_like(t, cs);
  }
  throw std::invalid_argument("decode_receivers: unsupported scheme");
}

// ----- transcript dump -------------------------------------------------------

namespace {

void dump_matrix(std::ofstream& out, const std::string& section, const cx_mat& m) {
  out << "# section=" << section << ",rows=" << m.n_rows << ",cols=" << m.n_cols << '\n';
  char buf[80];
  for (arma::uword r = 0; r < m.n_rows; ++r) {
    for (arma::uword c = 0; c < m.n_cols; ++c) {
      std::snprintf(buf, sizeof(buf), "%.9g%+.9gj", m(r, c).real(), m(r, c).imag());
      out << buf << (c + 1 < m.n_cols ? "," : "");
    }
    out << '\n';
  }
}

}  // namespace

void dump_transcript(const Transcript& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write transcript file: " + path);
  out << "# transcript,scheme=" << scheme_name(t.plan.scheme) << ",M=" << t.config.m
      << ",N=" << t.config.n << ",tau1=" << t.plan.tau1 << ",tau2=" << t.plan.tau2
      << ",tau3=" << t.plan.tau3 << ",power=" << t.power << ",noise=" << (t.noise_on ? 1 : 0)
      << ",seed=" << t.seed << '\n';
  if (t.comp.phi1a.n_elem > 0) dump_matrix(out, "compression.phi1a", t.comp.phi1a);
  if (t.comp.phi2a.n_elem > 0) dump_matrix(out, "compression.phi2a", t.comp.phi2a);
  if (t.comp.phi1b.n_elem > 0) dump_matrix(out, "compression.phi1b", t.comp.phi1b);
  if (t.comp.phi2b.n_elem > 0) dump_matrix(out, "compression.phi2b", t.comp.phi2b);
  if (t.comp.phi.n_elem > 0) dump_matrix(out, "compression.phi", t.comp.phi);
  if (t.comp.theta.n_elem > 0) dump_matrix(out, "compression.theta", t.comp.theta);
  for (const auto& p : t.phases) {
    const std::string base = "phase." + p.span.label;
    out << "# section=" << base << ",slots=" << p.span.first_slot << ".." << p.span.last_slot
        << ",streams1=" << p.span.streams1 << ",streams2=" << p.span.streams2 << '\n';
    dump_matrix(out, base + ".x1", cx_mat(p.x1));
    dump_matrix(out, base + ".x2", cx_mat(p.x2));
    dump_matrix(out, base + ".y1", cx_mat(p.y1));
    dump_matrix(out, base + ".y2", cx_mat(p.y2));
    dump_matrix(out, base + ".y1_clean", cx_mat(p.y1_clean));
    dump_matrix(out, base + ".y2_clean", cx_mat(p.y2_clean));
  }
}

}  // namespace ofic
