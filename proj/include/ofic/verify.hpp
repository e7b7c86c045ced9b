/**
 * @file verify.hpp
 * @brief Construction of the security and decodability chain matrices
 *        (A/B, C/D, E/F, effective decoding channels) and numeric checks of
 *        their rank identities, including the U*L leakage-map factorizations.
 */
#ifndef OFIC_VERIFY_HPP
#define OFIC_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ofic/channel.hpp"
#include "ofic/schemes.hpp"

namespace ofic {

struct RankReport {
  Scheme scheme;
  AntennaConfig config;
  PhasePlan plan;
  std::string matrix;
  std::size_t predicted = 0;
  std::size_t measured = 0;
  bool pass = false;
};

RankReport make_rank_report(Scheme scheme, AntennaConfig config, const PhasePlan& plan,
                            std::string matrix, std::size_t predicted, const cx_mat& m);

/**
 * Decoding-scheme leakage chain at eavesdropping receiver e: returns (A, B)
 * where A is the identity of the data-processing middle (size N(tau1+tau2))
 * and B maps the AN symbols [u1; u2] to the eavesdropper's conditioned
 * observations. rank A = rank B iff the security constraint holds.
 */
std::pair<cx_mat, cx_mat> build_leakage_pair_decoding(const ChannelSet& cs, const PhasePlan& plan,
                                                      const CompressionSet& comp,
                                                      int eavesdropper = 2);

/// Alignment-scheme leakage chain (C, D) at eavesdropping receiver e.
std::pair<cx_mat, cx_mat> build_leakage_pair_alignment(const ChannelSet& cs, const PhasePlan& plan,
                                                       const CompressionSet& comp,
                                                       int eavesdropper = 2);

/// IA-D leakage chain at eavesdropping receiver e (separate AN phases).
std::pair<cx_mat, cx_mat> build_leakage_pair_ia_d(const ChannelSet& cs, const PhasePlan& plan,
                                                  const CompressionSet& comp,
                                                  int eavesdropper = 2);

/**
 * Decoding-scheme rate chain at receiver r: (H_r, bd of the interfering data
 * blocks). The rank difference is the decodable symbol count N tau2.
 */
std::pair<cx_mat, cx_mat> build_decode_pair_decoding(const ChannelSet& cs, const PhasePlan& plan,
                                                     const CompressionSet& comp, int receiver = 1);

/**
 * Alignment-scheme rate chain (E, F) at receiver r. The rank difference is
 * min{N(tau2+tau3), M tau2}, i.e. M tau2 exactly when the decoding
 * constraint holds.
 */
std::pair<cx_mat, cx_mat> build_decode_pair_alignment(const ChannelSet& cs, const PhasePlan& plan,
                                                      const CompressionSet& comp,
                                                      int receiver = 1);

/// IA-D rate chain at receiver r; same structure as the alignment chain with
/// the recurrence cross-links swapped.
std::pair<cx_mat, cx_mat> build_decode_pair_ia_d(const ChannelSet& cs, const PhasePlan& plan,
                                                 const CompressionSet& comp, int receiver = 1);

enum class RankFactorization { kDecoding, kAlignment };

/**
 * Explicitly factor B = U L (decoding) or D = U L (alignment) and check every
 * rank claim along the argument: the factor ranks, the eliminated/inner
 * factors, the reconstruction residual, and the product-rank formula.
 */
std::vector<RankReport> check_rank_factorization(const ChannelSet& cs, const PhasePlan& plan,
                                                     const CompressionSet& comp,
                                                 RankFactorization which);

/// Predicted ranks of the standard chain matrices for a plan.
std::size_t predicted_rank(AntennaConfig config, const PhasePlan& plan,
                           const std::string& matrix);

/// `scheme,M,N,tau1,tau2,tau3,matrix,predicted,measured,pass` rows.
void write_rank_csv(const std::vector<RankReport>& reports, const std::string& path);

}  // namespace ofic

#endif  // OFIC_VERIFY_HPP
