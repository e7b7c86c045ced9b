#include <catch2/catch_amalgamated.hpp>

#include "ofic/phaseplan.hpp"
#include "ofic/sdof.hpp"

// Covered tests:
// - Regime classification with half-open boundaries
// - Security and decoding constraint predicates, including wrong-scheme errors
// - Closed-form optimal plans against the closed-form duration table
// - Grid oracle equals the closed-form objective as exact rationals
// - Ratio invariance under integer plan scaling

using namespace ofic;

TEST_CASE("regime classification") {
  CHECK(classify_regime({2, 3}) == Regime::kDecoding);
  CHECK(classify_regime({3, 2}) == Regime::kAlignment);
  CHECK(classify_regime({1, 2}) == Regime::kSilent);  // boundary M = N/2
  CHECK(classify_regime({4, 4}) == Regime::kDecoding);
  CHECK(classify_regime({4, 2}) == Regime::kAlignment);  // boundary M = 2N
  CHECK(classify_regime({5, 2}) == Regime::kCapped);
  CHECK(classify_regime({1, 1}) == Regime::kDecoding);
  CHECK_THROWS_AS(classify_regime({0, 1}), std::invalid_argument);
}

TEST_CASE("decoding-scheme security constraint") {
  CHECK(check_security_decoding({2, 3}, {Scheme::kDecoding, 3, 1, 0}));
  CHECK_FALSE(check_security_decoding({2, 3}, {Scheme::kDecoding, 1, 3, 0}));
  CHECK(check_security_decoding({4, 4}, {Scheme::kDecoding, 1, 1, 0}));  // equality 2N <= 2N
  CHECK_THROWS_AS(check_security_decoding({2, 3}, {Scheme::kAlignment, 3, 1, 0}),
                  std::invalid_argument);
}

TEST_CASE("alignment-scheme security constraint") {
  CHECK(check_security_alignment({3, 2}, {Scheme::kAlignment, 2, 2, 1}));
  CHECK_FALSE(check_security_alignment({3, 2}, {Scheme::kAlignment, 1, 2, 1}));
  CHECK(check_security_alignment({3, 2}, {Scheme::kAlignment, 5, 0, 0}));
  CHECK_THROWS_AS(check_security_alignment({3, 2}, {Scheme::kDecoding, 2, 2, 0}),
                  std::invalid_argument);
}

TEST_CASE("alignment-scheme decoding constraint") {
  CHECK(check_decoding_alignment({3, 2}, {Scheme::kAlignment, 2, 2, 1}));
  CHECK_FALSE(check_decoding_alignment({3, 2}, {Scheme::kAlignment, 2, 2, 0}));
  CHECK(check_decoding_alignment({2, 2}, {Scheme::kAlignment, 1, 1, 0}));  // M = N
  CHECK_THROWS_AS(check_decoding_alignment({3, 2}, {Scheme::kDecoding, 2, 2, 0}),
                  std::invalid_argument);
}

TEST_CASE("optimal plans match the closed-form duration table") {
  {
    const PhasePlan p = optimal_plan({2, 3});
    CHECK(p.scheme == Scheme::kDecoding);
    CHECK(p.tau1 == 3);
    CHECK(p.tau2 == 1);
    CHECK(p.tau3 == 0);
    CHECK(p.total_slots() == 5);
  }
  {
    const PhasePlan p = optimal_plan({3, 2});
    CHECK(p.scheme == Scheme::kAlignment);
    CHECK(p.tau1 == 2);
    CHECK(p.tau2 == 2);
    CHECK(p.tau3 == 1);
    CHECK(p.total_slots() == 7);
  }
  {
    const PhasePlan p = optimal_plan({5, 2});
    CHECK(p.scheme == Scheme::kAlignmentCapped);
    CHECK(p.tau1 == 2);
    CHECK(p.tau2 == 2);
    CHECK(p.tau3 == 2);
    CHECK(effective_m({5, 2}, p.scheme) == 4);
  }
  {
    const PhasePlan p = optimal_plan({1, 2});
    CHECK(p.scheme == Scheme::kSilent);
    CHECK(p.total_slots() == 0);
  }
}

TEST_CASE("optimal plans satisfy their own constraints") {
  for (int m = 1; m <= 12; ++m) {
    for (int n = 1; n <= 12; ++n) {
      const AntennaConfig config{m, n};
      const PhasePlan p = optimal_plan(config);
      switch (p.scheme) {
        case Scheme::kSilent:
          break;
        case Scheme::kDecoding:
          CHECK(check_security_decoding(config, p));
          break;
        default:
          CHECK(check_security_alignment(config, p));
          CHECK(check_decoding_alignment(config, p));
          break;
      }
    }
  }
}

TEST_CASE("grid oracle reproduces the worked objectives") {
  {
    const GridResult g = grid_oracle({2, 3}, Scheme::kDecoding, 12);
    CHECK(g.objective == Rational(6, 5));
    CHECK(g.plan.tau1 == 3);
    CHECK(g.plan.tau2 == 1);
  }
  {
    const GridResult g = grid_oracle({3, 2}, Scheme::kAlignment, 12);
    CHECK(g.objective == Rational(12, 7));
    CHECK(g.plan.tau1 == 2);
    CHECK(g.plan.tau2 == 2);
    CHECK(g.plan.tau3 == 1);
  }
  {
    const GridResult g = grid_oracle({4, 4}, Scheme::kDecoding, 16);
    CHECK(g.objective == Rational(8, 3));
  }
  CHECK_THROWS_AS(grid_oracle({2, 3}, Scheme::kDecoding, 5), std::invalid_argument);
}

TEST_CASE("grid oracle agrees with the closed-form bound on a small grid") {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      const AntennaConfig config{m, n};
      if (classify_regime(config) == Regime::kSilent) continue;
      const PhasePlan plan = optimal_plan(config);
      const GridResult g = grid_oracle(config, plan.scheme, 4 * n);
      REQUIRE(g.objective == lower_bound(config));
      // The closed-form plan attains the same objective.
      const int slots = plan.total_slots();
      const long long delivered = (plan.scheme == Scheme::kDecoding)
                                      ? 2LL * n * plan.tau2
                                      : 2LL * effective_m(config, plan.scheme) * plan.tau2;
      REQUIRE(Rational(delivered, slots) == g.objective);
    }
  }
}

TEST_CASE("objective is invariant under integer scaling of a plan") {
  const AntennaConfig config{3, 2};
  const PhasePlan base = optimal_plan(config);
  const Rational r0(2LL * config.m * base.tau2, base.total_slots());
  for (int k = 2; k <= 5; ++k) {
    const PhasePlan scaled{base.scheme, k * base.tau1, k * base.tau2, k * base.tau3};
    CHECK(Rational(2LL * config.m * scaled.tau2, scaled.total_slots()) == r0);
    CHECK(check_security_alignment(config, scaled));
    CHECK(check_decoding_alignment(config, scaled));
  }
}
