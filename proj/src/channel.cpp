#include "ofic/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ofic {

double FadingParams::noise_power_w() const {
  return std::pow(10.0, (noise_power_dbm - 30.0) / 10.0);
}

FadingParams FadingParams::unit() {
  FadingParams p;
  p.eta_db = 0.0;
  p.pathloss_exponent = 2.5;
  p.noise_power_dbm = 30.0;  // 1 W
  return p;
}

double pathloss_gain(double distance_m, const FadingParams& params) {
  if (distance_m <= 0.0) {
    throw std::invalid_argument("pathloss_gain: distance must be positive");
  }
  if (params.pathloss_exponent <= 0.0) {
    throw std::invalid_argument("pathloss_gain: pathloss exponent must be positive");
  }
  const double eta_lin = std::pow(10.0, params.eta_db / 10.0);
  return std::sqrt(eta_lin * std::pow(distance_m, -params.pathloss_exponent));
}

// ----- Trajectory ---------------------------------------------------------

Trajectory::Trajectory(std::size_t slots, double initial_distance) : slots_(slots) {
  if (slots < 1) throw std::invalid_argument("Trajectory: slots must be >= 1");
  if (initial_distance <= 0.0) {
    throw std::invalid_argument("Trajectory: distances must be positive");
  }
  d_.assign(slots, {initial_distance, initial_distance, initial_distance, initial_distance});
}

namespace {

std::size_t link_index(int tx, int rx) {
  if (tx < 1 || tx > 2 || rx < 1 || rx > 2) {
    throw std::invalid_argument("Trajectory: tx and rx must be 1 or 2");
  }
  return static_cast<std::size_t>((tx - 1) * 2 + (rx - 1));
}

}  // namespace

double Trajectory::distance(int tx, int rx, std::size_t slot) const {
  if (slot < 1 || slot > slots_) throw std::invalid_argument("Trajectory: slot out of range");
  return d_[slot - 1][link_index(tx, rx)];
}

void Trajectory::set_distance(int tx, int rx, std::size_t slot, double d) {
  if (slot < 1 || slot > slots_) throw std::invalid_argument("Trajectory: slot out of range");
  if (d <= 0.0) throw std::invalid_argument("Trajectory: distances must be positive");
  d_[slot - 1][link_index(tx, rx)] = d;
}

namespace {

struct Agent {
  double angle;  // approach direction, radians
};

// Position along approach + circular arc, `s` meters into the path.
std::array<double, 2> roundabout_position(const Agent& a, double s, double radius,
                                          double approach) {
  if (s < approach) {
    const double r = radius + (approach - s);
    return {r * std::cos(a.angle), r * std::sin(a.angle)};
  }
  // On the circle, counterclockwise from the entry point.
  const double phi = a.angle + (s - approach) / radius;
  return {radius * std::cos(phi), radius * std::sin(phi)};
}

}  // namespace

Trajectory synth_trajectory(TrajectoryKind kind, std::size_t slots,
                            const TrajectoryGeometry& geometry) {
  if (slots < 1) throw std::invalid_argument("synth_trajectory: slots must be >= 1");
  if (kind == TrajectoryKind::kFixedDistance) {
    if (geometry.distance_m <= 0.0) {
      throw std::invalid_argument("synth_trajectory: distance must be positive");
    }
    return Trajectory(slots, geometry.distance_m);
  }

  if (geometry.radius_m <= 0.0 || geometry.approach_m <= 0.0 ||
      geometry.speed_m_per_slot <= 0.0) {
    throw std::invalid_argument("synth_trajectory: geometry parameters must be positive");
  }
  // Transmitters enter from the east and north arms, receivers from the west
  // and south, all converging on the same circle.
  const double pi = std::numbers::pi;
  const std::array<Agent, 4> agents = {
      Agent{0.0}, Agent{pi / 2.0}, Agent{pi}, Agent{3.0 * pi / 2.0}};

  Trajectory traj(slots, geometry.distance_m);
  for (std::size_t t = 1; t <= slots; ++t) {
    const double s = static_cast<double>(t - 1) * geometry.speed_m_per_slot;
    std::array<std::array<double, 2>, 4> pos;
    for (std::size_t k = 0; k < 4; ++k) {
      pos[k] = roundabout_position(agents[k], s, geometry.radius_m, geometry.approach_m);
    }
    for (int tx = 1; tx <= 2; ++tx) {
      for (int rx = 1; rx <= 2; ++rx) {
        const auto& p = pos[static_cast<std::size_t>(tx - 1)];
        const auto& q = pos[static_cast<std::size_t>(rx + 1)];
        const double d = std::hypot(p[0] - q[0], p[1] - q[1]);
        traj.set_distance(tx, rx, t, d);
      }
    }
  }
  return traj;
}

Trajectory load_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trajectory file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,tx,rx,distance_m", 0) != 0) {
    throw std::runtime_error("trajectory file missing `t,tx,rx,distance_m` header: " + path);
  }
  struct Row {
    std::size_t t;
    int tx, rx;
    double d;
  };
  std::vector<Row> rows;
  std::size_t max_t = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    Row r{};
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(ss >> r.t >> c1 >> r.tx >> c2 >> r.rx >> c3 >> r.d) || c1 != ',' || c2 != ',' ||
        c3 != ',') {
      throw std::runtime_error("malformed trajectory row: " + line);
    }
    rows.push_back(r);
    max_t = std::max(max_t, r.t);
  }
  if (max_t == 0) throw std::runtime_error("trajectory file has no rows: " + path);
  Trajectory traj(max_t);
  std::vector<int> seen(max_t * 4, 0);
  for (const auto& r : rows) {
    traj.set_distance(r.tx, r.rx, r.t, r.d);
    seen[(r.t - 1) * 4 + static_cast<std::size_t>((r.tx - 1) * 2 + (r.rx - 1))] += 1;
  }
  for (const int count : seen) {
    if (count != 1) {
      throw std::runtime_error("trajectory file must cover each (t,tx,rx) exactly once");
    }
  }
  return traj;
}

void save_trajectory_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trajectory file: " + path);
  out << "t,tx,rx,distance_m\n";
  char buf[64];
  for (std::size_t t = 1; t <= traj.slots(); ++t) {
    for (int tx = 1; tx <= 2; ++tx) {
      for (int rx = 1; rx <= 2; ++rx) {
        std::snprintf(buf, sizeof(buf), "%.6f", traj.distance(tx, rx, t));
        out << t << ',' << tx << ',' << rx << ',' << buf << '\n';
      }
    }
  }
}

// ----- ChannelSet ----------------------------------------------------------

ChannelSet::ChannelSet(AntennaConfig config, std::size_t slots, double noise_power_w)
    : config_(config), slots_(slots), noise_power_(noise_power_w) {
  if (config.m < 1 || config.n < 1) {
    throw std::invalid_argument("ChannelSet: M and N must be >= 1");
  }
  if (slots < 1) throw std::invalid_argument("ChannelSet: slots must be >= 1");
  if (noise_power_w <= 0.0) {
    throw std::invalid_argument("ChannelSet: noise power must be positive");
  }
  h_.assign(slots * 4, cx_mat());
}

const cx_mat& ChannelSet::h(int tx, int rx, std::size_t slot) const {
  if (slot < 1 || slot > slots_) throw std::invalid_argument("ChannelSet: slot out of range");
  return h_[(slot - 1) * 4 + link_index(tx, rx)];
}

cx_mat& ChannelSet::h(int tx, int rx, std::size_t slot) {
  if (slot < 1 || slot > slots_) throw std::invalid_argument("ChannelSet: slot out of range");
  return h_[(slot - 1) * 4 + link_index(tx, rx)];
}

ChannelSet generate_channel(AntennaConfig config, const Trajectory& traj,
                            const FadingParams& params, SplitRng& rng) {
  ChannelSet cs(config, traj.slots(), params.noise_power_w());
  const auto rows = static_cast<std::size_t>(config.n);
  const auto cols = static_cast<std::size_t>(config.m);
  for (std::size_t t = 1; t <= traj.slots(); ++t) {
    for (int tx = 1; tx <= 2; ++tx) {
      for (int rx = 1; rx <= 2; ++rx) {
        const double amp = pathloss_gain(traj.distance(tx, rx, t), params);
        cs.h(tx, rx, t) = amp * sample_gaussian(rows, cols, 1.0, rng);
      }
    }
  }
  return cs;
}

cx_mat effective_phase_matrix(const ChannelSet& cs, int tx, int rx, std::size_t first_slot,
                              std::size_t last_slot, int tx_antennas) {
  if (first_slot < 1 || last_slot > cs.slots() || first_slot > last_slot) {
    throw std::invalid_argument("effective_phase_matrix: slot range out of bounds");
  }
  if (tx_antennas < 0 || tx_antennas > cs.config().m) {
    throw std::invalid_argument("effective_phase_matrix: tx_antennas out of range");
  }
  std::vector<cx_mat> blocks;
  blocks.reserve(last_slot - first_slot + 1);
  for (std::size_t t = first_slot; t <= last_slot; ++t) {
    const cx_mat& full = cs.h(tx, rx, t);
    if (tx_antennas == 0) {
      blocks.emplace_back(full.n_rows, 0);
    } else {
      blocks.push_back(full.cols(0, static_cast<arma::uword>(tx_antennas) - 1));
    }
  }
  return block_diagonal(blocks);
}

}  // namespace ofic
