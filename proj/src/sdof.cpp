#include "ofic/sdof.hpp"

#include <stdexcept>

namespace ofic {

namespace {

void require_valid(AntennaConfig config) {
  if (config.m < 1 || config.n < 1) {
    throw std::invalid_argument("sdof: M and N must be >= 1");
  }
}

}  // namespace

Rational lower_bound(AntennaConfig config) {
  require_valid(config);
  const long long m = config.m;
  const long long n = config.n;
  switch (classify_regime(config)) {
    case Regime::kSilent:
      return Rational(0);
    case Regime::kDecoding:
      return Rational(2 * n * (2 * m - n), 4 * m - n);
    case Regime::kAlignment:
      return Rational(2 * m * n, m + 2 * n);
    case Regime::kCapped:
      return Rational(n);
  }
  return Rational(0);
}

std::optional<Rational> exact_sdof(AntennaConfig config) {
  require_valid(config);
  const long long m = config.m;
  const long long n = config.n;
  if (2 * m <= n) return Rational(0);
  if (m == n) return Rational(2 * n, 3);
  if (m >= 2 * n) return Rational(n);
  return std::nullopt;
}

Rational upper_bound(AntennaConfig config) {
  require_valid(config);
  const long long m = config.m;
  const long long n = config.n;
  if (2 * m <= n) return Rational(0);
  if (4 * m <= 3 * n) return Rational(n * (2 * m - n), m);
  if (m <= n) return Rational(2 * n, 3);
  if (4 * m <= 5 * n) return Rational(4 * m - 2 * n, 3);
  return Rational(n);
}

Rational xc_bound(AntennaConfig config) {
  require_valid(config);
  const long long m = config.m;
  const long long n = config.n;
  if (2 * m <= n) return Rational(0);
  if (m <= n) return Rational(n * (2 * m - n), m);
  return Rational(n);
}

Rational perfect_csit_bound(AntennaConfig config) {
  require_valid(config);
  const long long m = config.m;
  const long long n = config.n;
  if (2 * m <= n) return Rational(0);
  if (3 * m <= 2 * n) return Rational(4 * m - 2 * n);
  if (m <= n) return Rational(2 * n, 3);
  if (m <= 2 * n) return Rational(4 * m - 2 * n, 3);
  return Rational(2 * n);
}

SDoFReport evaluate_sdof(AntennaConfig config) {
  return {config, classify_regime(config), lower_bound(config), upper_bound(config),
          exact_sdof(config)};
}

std::vector<SDoFReport> sdof_table(const std::vector<AntennaConfig>& configs) {
  std::vector<SDoFReport> out;
  out.reserve(configs.size());
  for (const auto& c : configs) out.push_back(evaluate_sdof(c));
  return out;
}

}  // namespace ofic
