#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>

#include "ofic/verify.hpp"

// Covered tests:
// - A/B chain dimensions and ranks for the worked decoding example
// - C/D chain ranks for the worked alignment example, plus violated plans
// - H1/interferer and E/F rank differences, including the M = N boundary
// - Leakage-map factorizations: exact reconstruction and every factor rank
// - Security and decodability predicates <=> rank equalities, across plans
// - Product rank equals min of factor ranks on random instances
// - IA-D chains: identity count, AN rank, and the leaked dimension count

using namespace ofic;

namespace {

struct Draw {
  ChannelSet cs;
  CompressionSet comp;
};

Draw make_draw(AntennaConfig config, const PhasePlan& plan, std::uint64_t seed) {
  SplitRng root(seed);
  SplitRng chan_rng = root.split(0);
  SplitRng comp_rng = root.split(1);
  const Trajectory traj(static_cast<std::size_t>(plan.total_slots()), 1.0);
  return {generate_channel(config, traj, FadingParams::unit(), chan_rng),
          draw_compression(plan, config, comp_rng)};
}

}  // namespace

TEST_CASE("decoding leakage chain: worked example ranks") {
  const AntennaConfig config{2, 3};
  const PhasePlan plan{Scheme::kDecoding, 3, 1, 0};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Draw d = make_draw(config, plan, seed);
    const auto [a, b] = build_leakage_pair_decoding(d.cs, plan, d.comp);
    REQUIRE(a.n_rows == 12);  // N(tau1+tau2) identity
    REQUIRE(a.n_cols == 12);
    REQUIRE(b.n_rows == 15);  // one block row per phase: N(tau1 + 2 tau2)
    REQUIRE(b.n_cols == 12);  // 2 M tau1 AN symbols
    REQUIRE(numeric_rank(a) == 12);
    REQUIRE(numeric_rank(b) == 12);  // min{N(tau1+tau2), 2 M tau1}
  }
}

TEST_CASE("decoding decode chain: worked example ranks") {
  const AntennaConfig config{2, 3};
  const PhasePlan plan{Scheme::kDecoding, 3, 1, 0};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Draw d = make_draw(config, plan, seed);
    const auto [h1, g1] = build_decode_pair_decoding(d.cs, plan, d.comp, 1);
    const auto [h2, g2] = build_decode_pair_decoding(d.cs, plan, d.comp, 2);
    REQUIRE(numeric_rank(h1) == 6);  // 2 N tau2
    REQUIRE(numeric_rank(g1) == 3);  // N tau2
    // Symmetric antenna configuration: receiver 2 sees identical ranks.
    REQUIRE(numeric_rank(h2) == numeric_rank(h1));
    REQUIRE(numeric_rank(g2) == numeric_rank(g1));
  }
}

TEST_CASE("decoding decode chain at the M = N boundary") {
  const AntennaConfig config{2, 2};
  const PhasePlan plan{Scheme::kDecoding, 1, 1, 0};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Draw d = make_draw(config, plan, seed);
    const auto [h1, g1] = build_decode_pair_decoding(d.cs, plan, d.comp, 1);
    // Transmitter 2 contributes zero fresh streams in Phase-II.
    REQUIRE(numeric_rank(h1) - numeric_rank(g1) == 2);  // N tau2
  }
}

TEST_CASE("alignment leakage chain: worked example and violated plan") {
  const AntennaConfig config{3, 2};
  {
    const PhasePlan plan{Scheme::kAlignment, 2, 2, 1};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Draw d = make_draw(config, plan, seed);
      const auto [c, dd] = build_leakage_pair_alignment(d.cs, plan, d.comp);
      REQUIRE(numeric_rank(c) == 8);   // N(tau1+tau2)
      REQUIRE(numeric_rank(dd) == 8);  // min{N(tau1+tau2), 2 N tau1}
    }
  }
  {
    // tau2 > tau1 violates the security constraint; the rank gap is the
    // leaked dimension count N(tau2 - tau1).
    const PhasePlan plan{Scheme::kAlignment, 2, 3, 2};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Draw d = make_draw(config, plan, seed);
      const auto [c, dd] = build_leakage_pair_alignment(d.cs, plan, d.comp);
      REQUIRE(numeric_rank(c) == 10);
      REQUIRE(numeric_rank(dd) == 8);
    }
  }
}

TEST_CASE("alignment decode chain: worked example, violated plan, boundary") {
  const AntennaConfig config{3, 2};
  {
    const PhasePlan plan{Scheme::kAlignment, 2, 2, 1};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Draw d = make_draw(config, plan, seed);
      const auto [e, f] = build_decode_pair_alignment(d.cs, plan, d.comp);
      REQUIRE(numeric_rank(e) == 10);  // N tau2 + min{N(tau2+tau3), M tau2}
      REQUIRE(numeric_rank(f) == 4);   // N tau2
    }
  }
  {
    const PhasePlan plan{Scheme::kAlignment, 2, 2, 0};  // no recurrence phase
    const Draw d = make_draw(config, plan, 3);
    const auto [e, f] = build_decode_pair_alignment(d.cs, plan, d.comp);
    REQUIRE(numeric_rank(e) - numeric_rank(f) == 4);  // min{N tau2, M tau2} < M tau2
  }
  {
    const AntennaConfig boundary{4, 2};  // M = 2N exactly
    const PhasePlan plan = optimal_plan(boundary);
    const Draw d = make_draw(boundary, plan, 4);
    const auto [e, f] = build_decode_pair_alignment(d.cs, plan, d.comp);
    REQUIRE(numeric_rank(e) - numeric_rank(f) == 8);  // M tau2 with tau3 = N
  }
}

TEST_CASE("leakage-map factorization, decoding case") {
  const AntennaConfig config{2, 3};
  const PhasePlan plan{Scheme::kDecoding, 3, 1, 0};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Draw d = make_draw(config, plan, seed);
    const auto rows = check_rank_factorization(d.cs, plan, d.comp, RankFactorization::kDecoding);
    for (const auto& r : rows) {
      INFO(r.matrix << " predicted=" << r.predicted << " measured=" << r.measured);
      REQUIRE(r.pass);
    }
    // Spot-check the stated values.
    for (const auto& r : rows) {
      if (r.matrix == "L") REQUIRE(r.measured == 12);  // 2 M tau1
      if (r.matrix == "Q") REQUIRE(r.measured == 3);   // min{N tau2, N tau1}
      if (r.matrix == "P") REQUIRE(r.measured == 3);   // N tau2
    }
  }
}

TEST_CASE("leakage-map factorization, alignment case") {
  const AntennaConfig config{3, 2};
  const PhasePlan plan{Scheme::kAlignment, 2, 2, 1};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Draw d = make_draw(config, plan, seed);
    const auto rows = check_rank_factorization(d.cs, plan, d.comp, RankFactorization::kAlignment);
    for (const auto& r : rows) {
      INFO(r.matrix << " predicted=" << r.predicted << " measured=" << r.measured);
      REQUIRE(r.pass);
    }
    for (const auto& r : rows) {
      if (r.matrix == "L") REQUIRE(r.measured == 8);            // 2 N tau1
      if (r.matrix == "H12_II*Phi") REQUIRE(r.measured == 4);   // min{N tau1, N tau2}
    }
  }
}

TEST_CASE("product rank equals min of factor ranks on random instances") {
  // The rank argument leans on generic-rank multiplication; check it on
  // the actual U, L, and product rows emitted by the factorization check.
  const AntennaConfig config{3, 2};
  const PhasePlan plan{Scheme::kAlignment, 2, 2, 1};
  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    const Draw d = make_draw(config, plan, seed);
    const auto rows = check_rank_factorization(d.cs, plan, d.comp, RankFactorization::kAlignment);
    std::size_t rank_u = 0, rank_l = 0, rank_d = 0;
    for (const auto& r : rows) {
      if (r.matrix == "U") rank_u = r.measured;
      if (r.matrix == "L") rank_l = r.measured;
      if (r.matrix == "D") rank_d = r.measured;
    }
    REQUIRE(rank_d == std::min(rank_u, rank_l));
  }
}

TEST_CASE("security predicate equivalence on satisfied and violated plans") {
  {
    const AntennaConfig config{2, 3};
    for (const PhasePlan plan : {PhasePlan{Scheme::kDecoding, 3, 1, 0},
                                 PhasePlan{Scheme::kDecoding, 3, 2, 0},
                                 PhasePlan{Scheme::kDecoding, 4, 1, 0},
                                 PhasePlan{Scheme::kDecoding, 1, 3, 0}}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Draw d = make_draw(config, plan, seed);
        const auto [a, b] = build_leakage_pair_decoding(d.cs, plan, d.comp);
        const bool ranks_equal = numeric_rank(a) == numeric_rank(b);
        REQUIRE(ranks_equal == check_security_decoding(config, plan));
      }
    }
  }
  {
    const AntennaConfig config{3, 2};
    for (const PhasePlan plan : {PhasePlan{Scheme::kAlignment, 2, 2, 1},
                                 PhasePlan{Scheme::kAlignment, 3, 2, 1},
                                 PhasePlan{Scheme::kAlignment, 1, 2, 2},
                                 PhasePlan{Scheme::kAlignment, 2, 3, 2}}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Draw d = make_draw(config, plan, seed);
        const auto [c, dd] = build_leakage_pair_alignment(d.cs, plan, d.comp);
        const bool ranks_equal = numeric_rank(c) == numeric_rank(dd);
        REQUIRE(ranks_equal == check_security_alignment(config, plan));
      }
    }
  }
}

TEST_CASE("decodability predicate equivalence") {
  const AntennaConfig config{3, 2};
  for (const PhasePlan plan :
       {PhasePlan{Scheme::kAlignment, 2, 2, 1}, PhasePlan{Scheme::kAlignment, 2, 2, 0},
        PhasePlan{Scheme::kAlignment, 3, 2, 2}, PhasePlan{Scheme::kAlignment, 2, 1, 1}}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Draw d = make_draw(config, plan, seed);
      const auto [e, f] = build_decode_pair_alignment(d.cs, plan, d.comp);
      const std::size_t diff = numeric_rank(e) - numeric_rank(f);
      const bool full = diff == static_cast<std::size_t>(config.m * plan.tau2);
      REQUIRE(full == check_decoding_alignment(config, plan));
    }
  }
}

TEST_CASE("rank identities across the small grid, optimal plans") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const AntennaConfig config{m, n};
      if (classify_regime(config) == Regime::kSilent) continue;
      const PhasePlan plan = optimal_plan(config);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Draw d = make_draw(config, plan, 100 * seed + 7);
        if (plan.scheme == Scheme::kDecoding) {
          const auto [a, b] = build_leakage_pair_decoding(d.cs, plan, d.comp);
          REQUIRE(numeric_rank(a) == predicted_rank(config, plan, "A"));
          REQUIRE(numeric_rank(b) == predicted_rank(config, plan, "B"));
          const auto [h1, g] = build_decode_pair_decoding(d.cs, plan, d.comp);
          REQUIRE(numeric_rank(h1) == predicted_rank(config, plan, "H1"));
          REQUIRE(numeric_rank(g) == predicted_rank(config, plan, "interferer"));
        } else {
          const auto [c, dd] = build_leakage_pair_alignment(d.cs, plan, d.comp);
          REQUIRE(numeric_rank(c) == predicted_rank(config, plan, "C"));
          REQUIRE(numeric_rank(dd) == predicted_rank(config, plan, "D"));
          const auto [e, f] = build_decode_pair_alignment(d.cs, plan, d.comp);
          REQUIRE(numeric_rank(e) == predicted_rank(config, plan, "E"));
          REQUIRE(numeric_rank(f) == predicted_rank(config, plan, "F"));
        }
      }
    }
  }
}

TEST_CASE("ia-d chains: AN rank and the leaked dimension count") {
  const AntennaConfig config{3, 2};
  PhasePlan plan = optimal_plan(config);
  plan.scheme = Scheme::kIaD;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Draw d = make_draw(config, plan, seed);
    const auto [a, b] = build_leakage_pair_ia_d(d.cs, plan, d.comp);
    REQUIRE(a.n_rows == 12);  // N(2 tau1 + tau2)
    REQUIRE(numeric_rank(a) == 12);
    // Separate AN transmission halves the usable AN dimensions: rank 2 N tau1.
    REQUIRE(numeric_rank(b) == 8);
    // The eavesdropper therefore gains N tau2 clean data dimensions.
    REQUIRE(numeric_rank(a) - numeric_rank(b) == 4);

    const auto [e, f] = build_decode_pair_ia_d(d.cs, plan, d.comp);
    REQUIRE(numeric_rank(e) - numeric_rank(f) == 6);  // M tau2, decodable
  }
}

TEST_CASE("rank report CSV format") {
  const AntennaConfig config{2, 3};
  const PhasePlan plan{Scheme::kDecoding, 3, 1, 0};
  const Draw d = make_draw(config, plan, 1);
  const auto [a, b] = build_leakage_pair_decoding(d.cs, plan, d.comp);
  std::vector<RankReport> reports;
  reports.push_back(make_rank_report(plan.scheme, config, plan, "A", 12, a));
  const std::string path = "rank_report_test.csv";
  write_rank_csv(reports, path);
  std::ifstream in(path);
  std::string header, row;
  REQUIRE(std::getline(in, header));
  REQUIRE(header == "scheme,M,N,tau1,tau2,tau3,matrix,predicted,measured,pass");
  REQUIRE(std::getline(in, row));
  REQUIRE(row == "decoding,2,3,3,1,0,A,12,12,1");
  std::remove(path.c_str());
}
