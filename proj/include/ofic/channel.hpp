/**
 * @file channel.hpp
 * @brief Per-slot CSI generation with pathloss and Rayleigh fading, distance
 *        trajectories, and per-phase effective block-diagonal channels.
 */
#ifndef OFIC_CHANNEL_HPP
#define OFIC_CHANNEL_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ofic/matcore.hpp"
#include "ofic/phaseplan.hpp"
#include "ofic/rng.hpp"

namespace ofic {

/// Large-scale fading and receiver noise parameters.
struct FadingParams {
  double eta_db = -40.0;          // gain at 1 m
  double pathloss_exponent = 2.5;
  double noise_power_dbm = -89.0;

  double noise_power_w() const;

  /// Unit-gain, unit-noise parameters for rank and DoF-slope work, where
  /// pathloss is irrelevant and SNR is the single knob.
  static FadingParams unit();
};

/// Amplitude gain sqrt(eta_lin * d^-exponent); the power gain is its square.
double pathloss_gain(double distance_m, const FadingParams& params);

/**
 * Distances in meters for each ordered (transmitter, receiver) link over T
 * slots. Links are 1-based, matching the channel subscripts.
 */
class Trajectory {
 public:
  Trajectory(std::size_t slots, double initial_distance = 1.0);

  std::size_t slots() const { return slots_; }
  double distance(int tx, int rx, std::size_t slot) const;
  void set_distance(int tx, int rx, std::size_t slot, double d);

 private:
  std::size_t slots_;
  std::vector<std::array<double, 4>> d_;  // slot-major, link index (tx-1)*2+(rx-1)
};

enum class TrajectoryKind { kFixedDistance, kRoundabout };

/// Geometry for synthetic trajectories. Fixed-distance uses only `distance_m`;
/// the roundabout drives four agents along crossing approach+circle paths.
struct TrajectoryGeometry {
  double distance_m = 10.0;       // fixed-distance value
  double radius_m = 20.0;         // roundabout radius
  double approach_m = 60.0;       // straight approach length
  double speed_m_per_slot = 1.0;  // advance per slot along the path
};

Trajectory synth_trajectory(TrajectoryKind kind, std::size_t slots,
                            const TrajectoryGeometry& geometry = {});

/// CSV with header `t,tx,rx,distance_m`, one row per (slot, tx, rx).
Trajectory load_trajectory_csv(const std::string& path);
void save_trajectory_csv(const Trajectory& traj, const std::string& path);

/**
 * All per-slot CSI of one experiment: h(i, j, t) is the N x M matrix from
 * transmitter i to receiver j at slot t (1-based). Matrices are immutable
 * after generation and independently drawn across slots and links.
 */
class ChannelSet {
 public:
  ChannelSet(AntennaConfig config, std::size_t slots, double noise_power_w);

  AntennaConfig config() const { return config_; }
  std::size_t slots() const { return slots_; }
  double noise_power() const { return noise_power_; }

  const cx_mat& h(int tx, int rx, std::size_t slot) const;
  cx_mat& h(int tx, int rx, std::size_t slot);

 private:
  AntennaConfig config_;
  std::size_t slots_;
  double noise_power_;
  std::vector<cx_mat> h_;
};

/// Entry (i,j,t): pathloss amplitude times an independent CN(0,1) draw.
ChannelSet generate_channel(AntennaConfig config, const Trajectory& traj,
                            const FadingParams& params, SplitRng& rng);

/**
 * Block-diagonal effective channel of one phase:
 * bd{ H_{i,j}[t_first], ..., H_{i,j}[t_last] }, keeping the first
 * `tx_antennas` columns of each slot matrix (antenna subselection for phases
 * that drive fewer than M streams).
 */
cx_mat effective_phase_matrix(const ChannelSet& cs, int tx, int rx, std::size_t first_slot,
                              std::size_t last_slot, int tx_antennas);

}  // namespace ofic

#endif  // OFIC_CHANNEL_HPP
