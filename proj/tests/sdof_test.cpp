#include <catch2/catch_amalgamated.hpp>

#include "ofic/sdof.hpp"

// Covered tests:
// - All five closed-form evaluators on worked values
// - The reference 6x5 bound table, to four decimal places
// - lower <= upper with equality exactly on the characterized regimes
// - Monotonicity in M, saturation at M >= 2N, branch continuity
// - Exact rational arithmetic and decimal rendering

using namespace ofic;

TEST_CASE("lower bound worked values") {
  CHECK(lower_bound({64, 64}) == Rational(128, 3));
  CHECK(lower_bound({128, 64}) == Rational(64));
  CHECK(lower_bound({2, 3}) == Rational(6, 5));
  CHECK(lower_bound({3, 2}) == Rational(12, 7));
  CHECK(lower_bound({1, 2}) == Rational(0));
}

TEST_CASE("exact sum-SDoF cases") {
  CHECK(exact_sdof({64, 64}).value() == Rational(128, 3));
  CHECK_FALSE(exact_sdof({3, 2}).has_value());
  CHECK(exact_sdof({4, 2}).value() == Rational(2));
  CHECK(exact_sdof({1, 2}).value() == Rational(0));
}

TEST_CASE("upper bound worked values") {
  CHECK(upper_bound({3, 4}) == Rational(8, 3));  // N(2M-N)/M branch
  CHECK(upper_bound({4, 4}) == Rational(8, 3));
  CHECK(upper_bound({8, 4}) == Rational(4));
}

TEST_CASE("reference bounds") {
  CHECK(xc_bound({2, 3}) == Rational(3, 2));
  CHECK(xc_bound({1, 2}) == Rational(0));
  CHECK(xc_bound({5, 2}) == Rational(2));

  CHECK(perfect_csit_bound({4, 4}) == Rational(8, 3));
  CHECK(perfect_csit_bound({3, 2}) == Rational(8, 3));
  CHECK(perfect_csit_bound({8, 2}) == Rational(4));
}

TEST_CASE("reference bound table to four decimal places") {
  // Rows M = 64..2048, columns N = 64..1024, both doubling.
  const char* expected[6][5] = {
      {"42.6667", "0.0000", "0.0000", "0.0000", "0.0000"},
      {"64.0000", "85.3333", "0.0000", "0.0000", "0.0000"},
      {"64.0000", "128.0000", "170.6667", "0.0000", "0.0000"},
      {"64.0000", "128.0000", "256.0000", "341.3333", "0.0000"},
      {"64.0000", "128.0000", "256.0000", "512.0000", "682.6667"},
      {"64.0000", "128.0000", "256.0000", "512.0000", "1024.0000"},
  };
  int mi = 0;
  for (int m = 64; m <= 2048; m *= 2, ++mi) {
    int ni = 0;
    for (int n = 64; n <= 1024; n *= 2, ++ni) {
      CHECK(lower_bound({m, n}).to_decimal(4) == expected[mi][ni]);
    }
  }
}

TEST_CASE("lower <= upper, equality exactly on the characterized regimes") {
  for (int m = 1; m <= 64; ++m) {
    for (int n = 1; n <= 64; ++n) {
      const AntennaConfig c{m, n};
      const Rational lo = lower_bound(c);
      const Rational hi = upper_bound(c);
      REQUIRE(lo <= hi);
      const bool characterized = (2 * m <= n) || (m == n) || (m >= 2 * n);
      REQUIRE((lo == hi) == characterized);
      if (characterized) {
        REQUIRE(exact_sdof(c).has_value());
        REQUIRE(exact_sdof(c).value() == lo);
      } else {
        REQUIRE_FALSE(exact_sdof(c).has_value());
      }
    }
  }
}

TEST_CASE("lower bound is monotone in M and saturates at M >= 2N") {
  for (int n = 1; n <= 64; ++n) {
    for (int m = 2; m <= 64; ++m) {
      REQUIRE(lower_bound({m, n}) >= lower_bound({m - 1, n}));
    }
    for (int m = 2 * n; m <= 64; ++m) {
      REQUIRE(lower_bound({m, n}) == Rational(n));
    }
  }
}

TEST_CASE("branch formulas agree at regime boundaries") {
  for (long long n = 1; n <= 32; ++n) {
    // At M = N: 2N(2M-N)/(4M-N) = 2MN/(M+2N) = 2N/3.
    CHECK(Rational(2 * n * (2 * n - n), 4 * n - n) == Rational(2 * n, 3));
    CHECK(Rational(2 * n * n, n + 2 * n) == Rational(2 * n, 3));
    // At M = 2N: 2MN/(M+2N) = N.
    CHECK(Rational(2 * (2 * n) * n, (2 * n) + 2 * n) == Rational(n));
  }
}

TEST_CASE("rational arithmetic and rendering") {
  CHECK(Rational(128, 3).to_decimal(4) == "42.6667");
  CHECK(Rational(0).to_decimal(4) == "0.0000");
  CHECK(Rational(1, 2).to_decimal(4) == "0.5000");
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(6, 5).to_string() == "6/5");
  CHECK(Rational(64).to_string() == "64");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(3, 2) * Rational(4, 9)) == Rational(2, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

  // Report assembly keeps lower <= exact <= upper coherent.
  const SDoFReport r = evaluate_sdof({4, 2});
  CHECK(r.lower == r.upper);
  CHECK(r.exact.value() == r.lower);
  CHECK(r.regime == Regime::kAlignment);
}
