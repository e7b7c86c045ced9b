#include "ofic/verify.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace ofic {

namespace {

std::size_t u(int v) { return static_cast<std::size_t>(v); }

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

struct ChainContext {
  AntennaConfig config;
  PhasePlan plan;
  std::vector<PhaseSpan> spans;
  const ChannelSet* cs;

  cx_mat h(int tx, int rx, std::size_t phase_idx) const {
    const PhaseSpan& sp = spans.at(phase_idx);
    const int streams = (tx == 1) ? sp.streams1 : sp.streams2;
    return effective_phase_matrix(*cs, tx, rx, sp.first_slot, sp.last_slot, streams);
  }
};

ChainContext make_context(const ChannelSet& cs, const PhasePlan& plan) {
  ChainContext ctx;
  ctx.config = cs.config();
  ctx.plan = plan;
  ctx.spans = phase_layout(ctx.config, plan);
  ctx.cs = &cs;
  return ctx;
}

void check_eavesdropper(int e) {
  if (e != 1 && e != 2) throw std::invalid_argument("receiver index must be 1 or 2");
}

}  // namespace

RankReport make_rank_report(Scheme scheme, AntennaConfig config, const PhasePlan& plan,
                            std::string matrix, std::size_t predicted, const cx_mat& m) {
  const std::size_t measured = numeric_rank(m);
  return {scheme, config, plan, std::move(matrix), predicted, measured, predicted == measured};
}

// ----- decoding scheme chains ------------------------------------------------

std::pair<cx_mat, cx_mat> build_leakage_pair_decoding(const ChannelSet& cs, const PhasePlan& plan,
                                                      const CompressionSet& comp,
                                                      int eavesdropper) {
  require(plan.scheme == Scheme::kDecoding, "build_leakage_pair_decoding: not a decoding plan");
  check_eavesdropper(eavesdropper);
  const auto ctx = make_context(cs, plan);
  const int e = eavesdropper;
  const auto n = u(ctx.config.n);
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);

  const cx_mat a = arma::eye<cx_mat>(n * (t1 + t2), n * (t1 + t2));

  // One column block per AN vector; phase-I feedback enters through the
  // compression matrices paired with each transmitter's own receiver output.
  const cx_mat h11_i = ctx.h(1, 1, 0), h21_i = ctx.h(2, 1, 0);
  const cx_mat h12_i = ctx.h(1, 2, 0), h22_i = ctx.h(2, 2, 0);
  const cx_mat h1e_i = (e == 1) ? h11_i : h12_i;
  const cx_mat h2e_i = (e == 1) ? h21_i : h22_i;
  const cx_mat h1e_ii = ctx.h(1, e, 1), h2e_ii = ctx.h(2, e, 1);
  const cx_mat h1e_iii = ctx.h(1, e, 2), h2e_iii = ctx.h(2, e, 2);

  const cx_mat row1 = arma::join_rows(h1e_i, h2e_i);
  const cx_mat row2 =
      arma::join_rows(cx_mat(h1e_ii * comp.phi1a * h11_i + h2e_ii * comp.phi2a * h12_i),
                      cx_mat(h1e_ii * comp.phi1a * h21_i + h2e_ii * comp.phi2a * h22_i));
  const cx_mat row3 =
      arma::join_rows(cx_mat(h1e_iii * comp.phi1b * h11_i + h2e_iii * comp.phi2b * h12_i),
                      cx_mat(h1e_iii * comp.phi1b * h21_i + h2e_iii * comp.phi2b * h22_i));
  return {a, arma::join_cols(row1, row2, row3)};
}

std::pair<cx_mat, cx_mat> build_decode_pair_decoding(const ChannelSet& cs, const PhasePlan& plan,
                                                     const CompressionSet& comp, int receiver) {
  require(plan.scheme == Scheme::kDecoding, "build_decode_pair_decoding: not a decoding plan");
  check_eavesdropper(receiver);
  (void)comp;
  const auto ctx = make_context(cs, plan);
  const int r = receiver;
  const auto n = u(ctx.config.n);
  const auto t2 = u(plan.tau2);

  const cx_mat h1r_ii = ctx.h(1, r, 1), h2r_ii = ctx.h(2, r, 1);
  const cx_mat h1r_iii = ctx.h(1, r, 2), h2r_iii = ctx.h(2, r, 2);
  const cx_mat zero_half(n * t2, n * t2, arma::fill::zeros);
  const cx_mat h_r = arma::join_cols(arma::join_rows(h1r_ii, h2r_ii, zero_half),
                                     arma::join_rows(zero_half, h1r_iii, h2r_iii));
  // Interference seen by receiver r comes from the other transmitter's fresh
  // data blocks in both data phases.
  const cx_mat g = (r == 1) ? block_diagonal({h2r_ii, h2r_iii}) : block_diagonal({h1r_ii, h1r_iii});
  return {h_r, g};
}

// ----- alignment scheme chains ----------------------------------------------

std::pair<cx_mat, cx_mat> build_leakage_pair_alignment(const ChannelSet& cs, const PhasePlan& plan,
                                                       const CompressionSet& comp,
                                                       int eavesdropper) {
  require(plan.scheme == Scheme::kAlignment || plan.scheme == Scheme::kAlignmentCapped,
          "build_leakage_pair_alignment: not an alignment plan");
  check_eavesdropper(eavesdropper);
  const auto ctx = make_context(cs, plan);
  const int e = eavesdropper;
  const auto n = u(ctx.config.n);
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);
  const bool has_iv = plan.tau3 > 0;

  const cx_mat eye_t1 = arma::eye<cx_mat>(n * t1, n * t1);
  const cx_mat eye_t2 = arma::eye<cx_mat>(n * t2, n * t2);
  const cx_mat zero_12(n * t1, n * t2, arma::fill::zeros);
  const cx_mat zero_21(n * t2, n * t1, arma::fill::zeros);

  const cx_mat h11_i = ctx.h(1, 1, 0), h21_i = ctx.h(2, 1, 0);
  const cx_mat h12_i = ctx.h(1, 2, 0), h22_i = ctx.h(2, 2, 0);
  const cx_mat h1e_i = (e == 1) ? h11_i : h12_i;
  const cx_mat h2e_i = (e == 1) ? h21_i : h22_i;
  const cx_mat h1e_ii = ctx.h(1, e, 1);
  const cx_mat h2e_iii = ctx.h(2, e, 2);
  const cx_mat h12_ii = ctx.h(1, 2, 1);
  const cx_mat h21_iii = ctx.h(2, 1, 2);

  // C: observations of the data-processing middle (w1, w2), where w1 is the
  // eavesdropper's noiseless AN-phase output and w2 its noiseless observation
  // of the other transmitter's data phase.
  cx_mat c = arma::join_cols(arma::join_rows(eye_t1, zero_12), arma::join_rows(zero_21, eye_t2),
                             arma::join_rows(eye_t1, zero_12));
  // D: the map from [u1; u2] to all conditioned observations.
  cx_mat d_row1 = arma::join_rows(h1e_i, h2e_i);
  cx_mat d_row2 = arma::join_rows(cx_mat(h1e_ii * comp.phi * h11_i),
                                  cx_mat(h1e_ii * comp.phi * h21_i));
  cx_mat d_row3 = arma::join_rows(cx_mat(h2e_iii * comp.phi * h12_i),
                                  cx_mat(h2e_iii * comp.phi * h22_i));
  cx_mat d = arma::join_cols(d_row1, d_row2, d_row3);

  if (has_iv) {
    const std::size_t iv = 3;
    const cx_mat h1e_iv = ctx.h(1, e, iv);
    const cx_mat h2e_iv = ctx.h(2, e, iv);
    cx_mat c_row4, d_row4;
    if (e == 2) {
      // x1_IV carries y1_III = H21_III(s2 + Phi y2_I); x2_IV carries w2.
      c_row4 = arma::join_rows(cx_mat(h1e_iv * comp.theta * h21_iii * comp.phi),
                               cx_mat(h2e_iv * comp.theta));
    } else {
      // x2_IV carries y2_II = H12_II(s1 + Phi y1_I); x1_IV carries w2.
      c_row4 = arma::join_rows(cx_mat(h2e_iv * comp.theta * h12_ii * comp.phi),
                               cx_mat(h1e_iv * comp.theta));
    }
    d_row4 = arma::join_rows(
        cx_mat(h1e_iv * comp.theta * h21_iii * comp.phi * h12_i +
               h2e_iv * comp.theta * h12_ii * comp.phi * h11_i),
        cx_mat(h1e_iv * comp.theta * h21_iii * comp.phi * h22_i +
               h2e_iv * comp.theta * h12_ii * comp.phi * h21_i));
    c = arma::join_cols(c, c_row4);
    d = arma::join_cols(d, d_row4);
  }
  return {c, d};
}

std::pair<cx_mat, cx_mat> build_decode_pair_alignment(const ChannelSet& cs, const PhasePlan& plan,
                                                      const CompressionSet& comp, int receiver) {
  require(plan.scheme == Scheme::kAlignment || plan.scheme == Scheme::kAlignmentCapped,
          "build_decode_pair_alignment: not an alignment plan");
  check_eavesdropper(receiver);
  const auto ctx = make_context(cs, plan);
  const int r = receiver;
  const auto n = u(ctx.config.n);
  const auto t2 = u(plan.tau2);
  const auto me = u(effective_m(ctx.config, plan.scheme));
  const bool has_iv = plan.tau3 > 0;

  const cx_mat eye_t2 = arma::eye<cx_mat>(n * t2, n * t2);
  // Own data phase: II for receiver 1, III for receiver 2.
  const cx_mat h_data = (r == 1) ? ctx.h(1, 1, 1) : ctx.h(2, 2, 2);
  const cx_mat zero_d(n * t2, n * t2, arma::fill::zeros);
  const cx_mat zero_i(n * t2, me * t2, arma::fill::zeros);

  cx_mat e_mat = arma::join_cols(arma::join_rows(h_data, zero_d), arma::join_rows(zero_i, eye_t2));
  cx_mat f_mat = eye_t2;
  if (has_iv) {
    const std::size_t iv = 3;
    cx_mat cross, own;
    if (r == 1) {
      cross = ctx.h(2, r, iv) * comp.theta * ctx.h(1, 2, 1);  // s1 returns via x2_IV
      own = ctx.h(1, r, iv) * comp.theta;                     // known y1_III recurrence
    } else {
      cross = ctx.h(1, r, iv) * comp.theta * ctx.h(2, 1, 2);  // s2 returns via x1_IV
      own = ctx.h(2, r, iv) * comp.theta;
    }
    e_mat = arma::join_cols(e_mat, arma::join_rows(cross, own));
    f_mat = arma::join_cols(f_mat, own);
  }
  return {e_mat, f_mat};
}

// ----- IA-D chains ------------------------------------------------------------

std::pair<cx_mat, cx_mat> build_leakage_pair_ia_d(const ChannelSet& cs, const PhasePlan& plan,
                                                  const CompressionSet& comp, int eavesdropper) {
  require(plan.scheme == Scheme::kIaD, "build_leakage_pair_ia_d: not an ia-d plan");
  check_eavesdropper(eavesdropper);
  const auto ctx = make_context(cs, plan);
  const int e = eavesdropper;
  const auto n = u(ctx.config.n);
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);

  const cx_mat a = arma::eye<cx_mat>(n * (2 * t1 + t2), n * (2 * t1 + t2));

  const cx_mat h11_ia = ctx.h(1, 1, 0);
  const cx_mat h22_ib = ctx.h(2, 2, 1);
  const cx_mat h1e_ia = ctx.h(1, e, 0);
  const cx_mat h2e_ib = ctx.h(2, e, 1);
  const cx_mat h1e_ii = ctx.h(1, e, 2);
  const cx_mat h2e_iii = ctx.h(2, e, 3);

  const cx_mat zero_1(n * t1, n * t1, arma::fill::zeros);
  const cx_mat zero_2(n * t2, n * t1, arma::fill::zeros);
  cx_mat b = arma::join_cols(
      arma::join_rows(h1e_ia, zero_1), arma::join_rows(zero_1, h2e_ib),
      arma::join_rows(cx_mat(h1e_ii * comp.phi * h11_ia), zero_2),
      arma::join_rows(zero_2, cx_mat(h2e_iii * comp.phi * h22_ib)));
  if (plan.tau3 > 0) {
    const std::size_t iv = 4;
    const cx_mat h1e_iv = ctx.h(1, e, iv);
    const cx_mat h2e_iv = ctx.h(2, e, iv);
    const cx_mat h12_ii = ctx.h(1, 2, 2);
    const cx_mat h21_iii = ctx.h(2, 1, 3);
    b = arma::join_cols(
        b, arma::join_rows(cx_mat(h1e_iv * comp.theta * h12_ii * comp.phi * h11_ia),
                           cx_mat(h2e_iv * comp.theta * h21_iii * comp.phi * h22_ib)));
  }
  return {a, b};
}

std::pair<cx_mat, cx_mat> build_decode_pair_ia_d(const ChannelSet& cs, const PhasePlan& plan,
                                                 const CompressionSet& comp, int receiver) {
  require(plan.scheme == Scheme::kIaD, "build_decode_pair_ia_d: not an ia-d plan");
  check_eavesdropper(receiver);
  const auto ctx = make_context(cs, plan);
  const int r = receiver;
  const auto n = u(ctx.config.n);
  const auto t2 = u(plan.tau2);
  const auto me = u(effective_m(ctx.config, plan.scheme));

  const cx_mat eye_t2 = arma::eye<cx_mat>(n * t2, n * t2);
  const cx_mat h_data = (r == 1) ? ctx.h(1, 1, 2) : ctx.h(2, 2, 3);
  const cx_mat zero_d(n * t2, n * t2, arma::fill::zeros);
  const cx_mat zero_i(n * t2, me * t2, arma::fill::zeros);

  cx_mat e_mat = arma::join_cols(arma::join_rows(h_data, zero_d), arma::join_rows(zero_i, eye_t2));
  cx_mat f_mat = eye_t2;
  if (plan.tau3 > 0) {
    const std::size_t iv = 4;
    cx_mat cross, own;
    if (r == 1) {
      cross = ctx.h(1, r, iv) * comp.theta * ctx.h(1, 2, 2);  // s1 returns via x1_IV
      own = ctx.h(2, r, iv) * comp.theta;                     // known y1_III via x2_IV
    } else {
      cross = ctx.h(2, r, iv) * comp.theta * ctx.h(2, 1, 3);
      own = ctx.h(1, r, iv) * comp.theta;
    }
    e_mat = arma::join_cols(e_mat, arma::join_rows(cross, own));
    f_mat = arma::join_cols(f_mat, own);
  }
  return {e_mat, f_mat};
}

// ----- leakage-map factorizations -----------------------------------------------

namespace {

RankReport equality_report(Scheme scheme, AntennaConfig config, const PhasePlan& plan,
                           const std::string& name, const cx_mat& lhs, const cx_mat& rhs) {
  const double scale = std::max(1.0, arma::norm(lhs, "fro"));
  const bool ok = arma::norm(lhs - rhs, "fro") / scale < 1e-10;
  return {scheme, config, plan, name, 1, ok ? std::size_t{1} : std::size_t{0}, ok};
}

}  // namespace

std::vector<RankReport> check_rank_factorization(const ChannelSet& cs, const PhasePlan& plan,
                                                     const CompressionSet& comp,
                                                 RankFactorization which) {
  const auto ctx = make_context(cs, plan);
  const AntennaConfig config = ctx.config;
  const auto n = u(config.n);
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);
  std::vector<RankReport> out;

  if (which == RankFactorization::kDecoding) {
    require(plan.scheme == Scheme::kDecoding, "decoding-factorization check needs a decoding plan");
    const auto m = u(config.m);
    const auto [a, b] = build_leakage_pair_decoding(cs, plan, comp, 2);
    (void)a;
    const cx_mat h12_i = ctx.h(1, 2, 0), h22_i = ctx.h(2, 2, 0);
    const cx_mat h11_i = ctx.h(1, 1, 0), h21_i = ctx.h(2, 1, 0);
    const cx_mat h12_ii = ctx.h(1, 2, 1), h22_ii = ctx.h(2, 2, 1);
    const cx_mat h12_iii = ctx.h(1, 2, 2), h22_iii = ctx.h(2, 2, 2);

    const cx_mat eye_t1 = arma::eye<cx_mat>(n * t1, n * t1);
    const cx_mat zero_1(n * t1, n * t1, arma::fill::zeros);
    const cx_mat u_mat = arma::join_cols(
        arma::join_rows(eye_t1, zero_1),
        arma::join_rows(cx_mat(h22_ii * comp.phi2a), cx_mat(h12_ii * comp.phi1a)),
        arma::join_rows(cx_mat(h22_iii * comp.phi2b), cx_mat(h12_iii * comp.phi1b)));
    const cx_mat l_mat = arma::join_cols(arma::join_rows(h12_i, h22_i),
                                         arma::join_rows(h11_i, h21_i));
    out.push_back(equality_report(plan.scheme, config, plan, "B=U*L", b, u_mat * l_mat));

    const cx_mat zero_2(n * t2, n * t1, arma::fill::zeros);
    const cx_mat u_tilde = arma::join_cols(
        arma::join_rows(eye_t1, zero_1),
        arma::join_rows(zero_2, cx_mat(h12_ii * comp.phi1a)),
        arma::join_rows(zero_2, cx_mat(h12_iii * comp.phi1b)));
    const cx_mat p_mat = block_diagonal({h12_ii, h12_iii});
    const cx_mat q_mat = arma::join_cols(comp.phi1a, comp.phi1b);

    const std::size_t rank_u = std::min(n * (t1 + t2), 2 * n * t1);
    out.push_back(make_rank_report(plan.scheme, config, plan, "U", rank_u, u_mat));
    out.push_back(make_rank_report(plan.scheme, config, plan, "U~", rank_u, u_tilde));
    out.push_back(make_rank_report(plan.scheme, config, plan, "L", 2 * m * t1, l_mat));
    out.push_back(make_rank_report(plan.scheme, config, plan, "P", n * t2, p_mat));
    out.push_back(
        make_rank_report(plan.scheme, config, plan, "Q", std::min(n * t2, n * t1), q_mat));
    out.push_back(make_rank_report(plan.scheme, config, plan, "B",
                                   std::min(n * (t1 + t2), 2 * m * t1), b));
  } else {
    require(plan.scheme == Scheme::kAlignment || plan.scheme == Scheme::kAlignmentCapped,
            "alignment-factorization check needs an alignment plan");
    const auto [c, d] = build_leakage_pair_alignment(cs, plan, comp, 2);
    (void)c;
    const cx_mat h12_i = ctx.h(1, 2, 0), h22_i = ctx.h(2, 2, 0);
    const cx_mat h11_i = ctx.h(1, 1, 0), h21_i = ctx.h(2, 1, 0);
    const cx_mat h12_ii = ctx.h(1, 2, 1);
    const cx_mat h22_iii = ctx.h(2, 2, 2);

    const cx_mat eye_t1 = arma::eye<cx_mat>(n * t1, n * t1);
    const cx_mat zero_1(n * t1, n * t1, arma::fill::zeros);
    const cx_mat zero_2(n * t2, n * t1, arma::fill::zeros);
    cx_mat u_mat = arma::join_cols(
        arma::join_rows(eye_t1, zero_1),
        arma::join_rows(zero_2, cx_mat(h12_ii * comp.phi)),
        arma::join_rows(cx_mat(h22_iii * comp.phi), zero_2));
    if (plan.tau3 > 0) {
      const cx_mat h12_iv = ctx.h(1, 2, 3);
      const cx_mat h22_iv = ctx.h(2, 2, 3);
      const cx_mat h21_iii = ctx.h(2, 1, 2);
      u_mat = arma::join_cols(
          u_mat, arma::join_rows(cx_mat(h12_iv * comp.theta * h21_iii * comp.phi),
                                 cx_mat(h22_iv * comp.theta * h12_ii * comp.phi)));
    }
    const cx_mat l_mat = arma::join_cols(arma::join_rows(h12_i, h22_i),
                                         arma::join_rows(h11_i, h21_i));
    out.push_back(equality_report(plan.scheme, config, plan, "D=U*L", d, u_mat * l_mat));

    const std::size_t rank_u = std::min(n * (t1 + t2), 2 * n * t1);
    out.push_back(make_rank_report(plan.scheme, config, plan, "U", rank_u, u_mat));
    out.push_back(make_rank_report(plan.scheme, config, plan, "L", 2 * n * t1, l_mat));
    out.push_back(make_rank_report(plan.scheme, config, plan, "H12_II*Phi",
                                   std::min(n * t1, n * t2), cx_mat(h12_ii * comp.phi)));
    out.push_back(make_rank_report(plan.scheme, config, plan, "D",
                                   std::min(n * (t1 + t2), 2 * n * t1), d));
  }
  return out;
}

std::size_t predicted_rank(AntennaConfig config, const PhasePlan& plan,
                           const std::string& matrix) {
  const auto n = u(config.n);
  const auto m = u(config.m);
  const auto me = u(effective_m(config, plan.scheme));
  const auto t1 = u(plan.tau1);
  const auto t2 = u(plan.tau2);
  const auto t3 = u(plan.tau3);
  if (matrix == "A") return n * (t1 + t2);
  if (matrix == "B") return std::min(n * (t1 + t2), 2 * m * t1);
  if (matrix == "H1" || matrix == "H2") return 2 * n * t2;
  if (matrix == "interferer") return n * t2;
  if (matrix == "C") return n * (t1 + t2);
  if (matrix == "D") return std::min(n * (t1 + t2), 2 * n * t1);
  if (matrix == "E") return n * t2 + std::min(n * (t2 + t3), me * t2);
  if (matrix == "F") return n * t2;
  if (matrix == "A_iad") return n * (2 * t1 + t2);
  if (matrix == "B_iad") return 2 * n * t1;
  throw std::invalid_argument("predicted_rank: unknown matrix " + matrix);
}

void write_rank_csv(const std::vector<RankReport>& reports, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write rank report file: " + path);
  out << "scheme,M,N,tau1,tau2,tau3,matrix,predicted,measured,pass\n";
  for (const auto& r : reports) {
    out << scheme_name(r.scheme) << ',' << r.config.m << ',' << r.config.n << ',' << r.plan.tau1
        << ',' << r.plan.tau2 << ',' << r.plan.tau3 << ',' << r.matrix << ',' << r.predicted
        << ',' << r.measured << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

}  // namespace ofic
