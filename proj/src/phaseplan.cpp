#include "ofic/phaseplan.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace ofic {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kSilent:
      return "silent";
    case Scheme::kDecoding:
      return "decoding";
    case Scheme::kAlignment:
      return "alignment";
    case Scheme::kAlignmentCapped:
      return "alignment-capped";
    case Scheme::kIaD:
      return "ia-d";
  }
  return "?";
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "silent") return Scheme::kSilent;
  if (name == "decoding") return Scheme::kDecoding;
  if (name == "alignment") return Scheme::kAlignment;
  if (name == "alignment-capped") return Scheme::kAlignmentCapped;
  if (name == "ia-d") return Scheme::kIaD;
  throw std::invalid_argument("unknown scheme: " + name);
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kSilent:
      return "M<=N/2";
    case Regime::kDecoding:
      return "N/2<M<=N";
    case Regime::kAlignment:
      return "N<M<=2N";
    case Regime::kCapped:
      return "2N<M";
  }
  return "?";
}

int PhasePlan::total_slots() const {
  switch (scheme) {
    case Scheme::kSilent:
      return 0;
    case Scheme::kDecoding:
      return tau1 + 2 * tau2;
    case Scheme::kAlignment:
    case Scheme::kAlignmentCapped:
      return tau1 + 2 * tau2 + tau3;
    case Scheme::kIaD:
      return 2 * tau1 + 2 * tau2 + tau3;
  }
  return 0;
}

Regime classify_regime(AntennaConfig config) {
  if (config.m < 1 || config.n < 1) {
    throw std::invalid_argument("classify_regime: M and N must be >= 1");
  }
  const int m = config.m;
  const int n = config.n;
  if (2 * m <= n) return Regime::kSilent;
  if (m <= n) return Regime::kDecoding;
  if (m <= 2 * n) return Regime::kAlignment;
  return Regime::kCapped;
}

int effective_m(AntennaConfig config, Scheme scheme) {
  if (scheme == Scheme::kAlignmentCapped) return std::min(config.m, 2 * config.n);
  return config.m;
}

bool check_security_decoding(AntennaConfig config, const PhasePlan& plan) {
  if (plan.scheme != Scheme::kDecoding) {
    throw std::invalid_argument("check_security_decoding: plan is not a decoding plan");
  }
  const long long n = config.n;
  const long long m = config.m;
  return n * (plan.tau1 + plan.tau2) <= 2 * m * plan.tau1;
}

bool check_security_alignment(AntennaConfig config, const PhasePlan& plan) {
  if (plan.scheme != Scheme::kAlignment && plan.scheme != Scheme::kAlignmentCapped &&
      plan.scheme != Scheme::kIaD) {
    throw std::invalid_argument("check_security_alignment: plan is not an alignment plan");
  }
  (void)config;  // N(tau1 + tau2) <= 2N tau1 reduces to tau2 <= tau1
  return plan.tau2 <= plan.tau1;
}

bool check_decoding_alignment(AntennaConfig config, const PhasePlan& plan) {
  if (plan.scheme != Scheme::kAlignment && plan.scheme != Scheme::kAlignmentCapped &&
      plan.scheme != Scheme::kIaD) {
    throw std::invalid_argument("check_decoding_alignment: plan is not an alignment plan");
  }
  const long long m = effective_m(config, plan.scheme);
  const long long n = config.n;
  return m * plan.tau2 <= n * (plan.tau2 + plan.tau3);
}

PhasePlan optimal_plan(AntennaConfig config) {
  const int m = config.m;
  const int n = config.n;
  switch (classify_regime(config)) {
    case Regime::kSilent:
      return {Scheme::kSilent, 0, 0, 0};
    case Regime::kDecoding:
      return {Scheme::kDecoding, n, 2 * m - n, 0};
    case Regime::kAlignment:
      return {Scheme::kAlignment, n, n, m - n};
    case Regime::kCapped:
      // Run the alignment scheme as if M were 2N.
      return {Scheme::kAlignmentCapped, n, n, n};
  }
  return {Scheme::kSilent, 0, 0, 0};
}

namespace {

bool plan_feasible(AntennaConfig config, const PhasePlan& plan) {
  if (plan.scheme == Scheme::kDecoding) {
    return check_security_decoding(config, plan);
  }
  return check_security_alignment(config, plan) && check_decoding_alignment(config, plan);
}

Rational plan_objective(AntennaConfig config, const PhasePlan& plan) {
  const int slots = plan.total_slots();
  if (slots == 0) return Rational(0);
  if (plan.scheme == Scheme::kDecoding) {
    return Rational(2LL * config.n * plan.tau2, slots);
  }
  return Rational(2LL * effective_m(config, plan.scheme) * plan.tau2, slots);
}

}  // namespace

GridResult grid_oracle(AntennaConfig config, Scheme scheme, int max_tau) {
  if (scheme != Scheme::kDecoding && scheme != Scheme::kAlignment &&
      scheme != Scheme::kAlignmentCapped) {
    throw std::invalid_argument("grid_oracle: scheme has no duration optimization");
  }
  if (max_tau < 2 * config.n) {
    throw std::invalid_argument("grid_oracle: max_tau must be at least 2N");
  }
  const bool has_tau3 = scheme != Scheme::kDecoding;

  GridResult best{Rational(0), {scheme, 0, 0, 0}};
  bool found = false;
  for (int t1 = 0; t1 <= max_tau; ++t1) {
    for (int t2 = 0; t2 <= max_tau; ++t2) {
      const int t3_hi = has_tau3 ? max_tau : 0;
      for (int t3 = 0; t3 <= t3_hi; ++t3) {
        const PhasePlan plan{scheme, t1, t2, t3};
        if (plan.total_slots() == 0) continue;
        if (!plan_feasible(config, plan)) continue;
        const Rational obj = plan_objective(config, plan);
        if (!found || obj > best.objective) {
          best = {obj, plan};
          found = true;
        } else if (obj == best.objective) {
          const auto key = [](const PhasePlan& p) {
            return std::tuple(p.total_slots(), p.tau1, p.tau2, p.tau3);
          };
          if (key(plan) < key(best.plan)) best.plan = plan;
        }
      }
    }
  }
  if (!found) {
    throw std::runtime_error("grid_oracle: no feasible plan in range");
  }
  return best;
}

}  // namespace ofic
