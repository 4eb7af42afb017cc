#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "movsig/channel.hpp"
#include "movsig/freqplan.hpp"
#include "movsig/geometry.hpp"
#include "movsig/reconfig.hpp"

namespace movsig {

/// Uniform grid of S subchannel center frequencies with f_1 = f_min and
/// f_S = f_max, spacing B = (f_max - f_min) / (S - 1).
struct SubchannelGrid {
  std::vector<double> frequencies_hz;
  double bandwidth_hz = 0.0;
};

/// Throws "grid too small" for fewer than two subchannels.
SubchannelGrid subchannel_grid(const FrequencyRange& range, int subchannels);

/// Multi-antenna transmitter with a fixed precoder serving a far-field
/// receiver over the direct link.
struct LosScenario {
  UlaGeometry geom;
  double distance_m;
  double angle_rad;
  Precoder precoder;
};

/// Single-antenna transmitter and receiver linked through an N-element
/// surface with a fixed reflection configuration; the direct link is
/// obstructed.
struct NlosScenario {
  UlaGeometry geom;
  double dist_rx_m;
  double angle_rx_rad;
  double dist_tx_m;
  double angle_tx_rad;
  SurfaceMatrix surface;
};

struct Scenario {
  std::variant<LosScenario, NlosScenario> link;
  double transmit_power_w = 1.0;
  bool include_path_gain = false;
};

/// Received power at carrier f. Small-scale channels are scaled by the
/// free-space path gain of every hop when include_path_gain is set.
double received_power(const Scenario& scenario, double f_hz);

struct SelectionResult {
  std::size_t selected_index = 0;  // 0-based; lowest index among power ties
  double selected_frequency_hz = 0.0;
  std::vector<double> profile_w;
};

/// Three-stage pilot sweep: measure the received power on every subchannel,
/// pick the strongest (lowest index on ties), transmit there. Noiseless and
/// fully deterministic.
SelectionResult pilot_sweep(const Scenario& scenario, const SubchannelGrid& grid);

/// Received-power upper bound: P_T N for the direct link, 4 P_T N^2 through
/// a surface. With path gain enabled the bound is evaluated at f_min, where
/// the path gain is largest.
double upper_bound(const Scenario& scenario, double f_min_hz);

}  // namespace movsig
