/**
 * @file schemes.hpp
 * @brief End-to-end execution of the transmission schemes over a ChannelSet:
 *        AN and data symbol draws, output compression, per-phase transmit and
 *        receive signals, and receiver-side decoding.
 */
#ifndef OFIC_SCHEMES_HPP
#define OFIC_SCHEMES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ofic/channel.hpp"
#include "ofic/matcore.hpp"
#include "ofic/phaseplan.hpp"
#include "ofic/rng.hpp"

namespace ofic {

/**
 * Pre-assigned full-rank compression matrices, standard complex Gaussian,
 * known at all transmitters and receivers.
 *
 * Decoding scheme: phi1a (M t2 x N t1), phi2a ((N-M) t2 x N t1),
 * phi1b ((N-M) t2 x N t1), phi2b (M t2 x N t1).
 * Alignment / IA-D: phi (M' t2 x N t1), theta (N t3 x N t2).
 */
struct CompressionSet {
  cx_mat phi1a, phi2a, phi1b, phi2b;
  cx_mat phi, theta;
};

/// Fresh AN and data symbols, i.i.d. complex Gaussian at the power-policy
/// per-symbol variances.
struct SymbolSet {
  cx_vec u1, u2;              // AN (phase I, or phases Ia/Ib for IA-D)
  cx_vec s1a, s2a, s1b, s2b;  // decoding-scheme data
  cx_vec s1, s2;              // alignment / IA-D data
};

/**
 * Deterministic scale factors that bring each superposed signal component to
 * its power-policy budget. They are computed from second-order statistics
 * (CSI, symbol powers, noise power), so every node can reproduce them and the
 * receivers can invert them.
 */
struct PowerScalars {
  double beta1a = 1.0, beta2a = 1.0, beta1b = 1.0, beta2b = 1.0;  // decoding feedback
  double beta1 = 1.0, beta2 = 1.0;                                // alignment feedback
  double gamma1 = 1.0, gamma2 = 1.0;                              // recurrence phase
};

/// Slot range and active stream counts of one phase.
struct PhaseSpan {
  std::string label;
  std::size_t first_slot = 0;
  std::size_t last_slot = 0;
  int streams1 = 0;  // transmitter 1 active streams (first antennas)
  int streams2 = 0;
};

/// Phase labels, slot ranges, and stream counts for a plan. One entry per
/// phase in transmission order.
std::vector<PhaseSpan> phase_layout(AntennaConfig config, const PhasePlan& plan);

/// Signals of one phase, stacked over its slots.
struct PhaseRecord {
  PhaseSpan span;
  cx_vec x1, x2;              // transmit stacks (length streams x slots)
  cx_vec y1, y2;              // receiver outputs, noisy iff the run had noise
  cx_vec y1_clean, y2_clean;  // channel x transmit, exactly
};

struct Transcript {
  AntennaConfig config;
  PhasePlan plan;
  double power = 1.0;
  bool noise_on = true;
  std::uint64_t seed = 0;  // informational, for dumps
  CompressionSet comp;
  SymbolSet syms;
  PowerScalars scal;
  std::vector<PhaseRecord> phases;

  const PhaseRecord& phase(const std::string& label) const;
};

/// Draw the scheme's compression matrices for the plan.
CompressionSet draw_compression(const PhasePlan& plan, AntennaConfig config, SplitRng& rng);

/// Draw AN and data symbols at the power-policy variances.
SymbolSet draw_symbols(const PhasePlan& plan, AntennaConfig config, double power, SplitRng& rng);

/**
 * Three-phase interference decoding scheme (N/2 < M <= N): joint AN, then two
 * simultaneous data phases where each transmitter superposes fresh data on
 * compressed output feedback.
 */
Transcript run_decoding_scheme(const ChannelSet& cs, const PhasePlan& plan, double power,
                               const CompressionSet& comp, const SymbolSet& syms, bool noise_on,
                               SplitRng& noise_rng);

/**
 * Four-phase interference alignment scheme (N < M <= 2N, capped at M' = 2N
 * above): joint AN, one data phase per transmitter, then an interference
 * recurrence phase retransmitting compressed fed-back outputs.
 */
Transcript run_alignment_scheme(const ChannelSet& cs, const PhasePlan& plan, double power,
                                const CompressionSet& comp, const SymbolSet& syms, bool noise_on,
                                SplitRng& noise_rng);

/// Silent scheme for M <= N/2: nothing is transmitted.
Transcript run_silent_scheme(AntennaConfig config);

/**
 * Five-phase delayed-CSIT comparison scheme: each transmitter sends AN alone
 * in its own phase, then the alignment phases follow with every retransmitted
 * output reconstructed noiselessly from delayed CSI instead of fed back.
 */
Transcript run_ia_d_scheme(const ChannelSet& cs, const PhasePlan& plan, double power,
                           const CompressionSet& comp, const SymbolSet& syms, bool noise_on,
                           SplitRng& noise_rng);

struct DecodeResult {
  cx_vec s1_hat;  // receiver 1's desired symbols ([s1a; s1b] for decoding)
  cx_vec s2_hat;
};

/**
 * Receiver-side decoding using only locally available quantities: the
 * receiver's own outputs, global CSI, the pre-assigned compression matrices,
 * and the deterministic power scalars. Throws on a singular square decoding
 * system (a probability-zero event, surfaced rather than masked).
 */
DecodeResult decode_receivers(const Transcript& t, const ChannelSet& cs);

/// Per-phase CSV-block dump: one section per phase with dimensions and seeds.
void dump_transcript(const Transcript& t, const std::string& path);

}  // namespace ofic

#endif  // OFIC_SCHEMES_HPP
