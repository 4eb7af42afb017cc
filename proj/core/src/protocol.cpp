#include "movsig/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "movsig/units.hpp"

namespace movsig {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

SubchannelGrid subchannel_grid(const FrequencyRange& range, int subchannels) {
  if (subchannels < 2) throw std::invalid_argument("grid too small");
  SubchannelGrid grid;
  grid.bandwidth_hz = (range.f_max_hz - range.f_min_hz) / (subchannels - 1);
  grid.frequencies_hz.resize(static_cast<std::size_t>(subchannels));
  for (int s = 0; s < subchannels; ++s) {
    grid.frequencies_hz[static_cast<std::size_t>(s)] =
        range.f_min_hz + s * grid.bandwidth_hz;
  }
  grid.frequencies_hz.back() = range.f_max_hz;  // pin the endpoint exactly
  return grid;
}

double received_power(const Scenario& scenario, double f_hz) {
  if (!(f_hz > 0.0)) throw std::invalid_argument("frequency must be positive");
  const Wavelength wl = Wavelength::from_frequency_hz(f_hz);
  const double pt = scenario.transmit_power_w;
  return std::visit(
      overloaded{
          [&](const LosScenario& s) {
            const CVec h = los_channel(s.geom, FarFieldLink(s.distance_m, s.angle_rad), wl);
            const double rho =
                scenario.include_path_gain ? path_gain(s.distance_m, wl) : 1.0;
            return pt * rho * std::norm(dot(h, s.precoder.weights));
          },
          [&](const NlosScenario& s) {
            const CVec h_rx =
                fis_link_channel(s.geom, FarFieldLink(s.dist_rx_m, s.angle_rx_rad), wl);
            const CVec h_tx =
                fis_link_channel(s.geom, FarFieldLink(s.dist_tx_m, s.angle_tx_rad), wl);
            const double rho = scenario.include_path_gain
                                   ? path_gain(s.dist_rx_m, wl) * path_gain(s.dist_tx_m, wl)
                                   : 1.0;
            return pt * rho * std::norm(cascaded_channel(h_rx, s.surface, h_tx));
          },
      },
      scenario.link);
}

SelectionResult pilot_sweep(const Scenario& scenario, const SubchannelGrid& grid) {
  SelectionResult result;
  result.profile_w.resize(grid.frequencies_hz.size());
  for (std::size_t s = 0; s < grid.frequencies_hz.size(); ++s) {
    result.profile_w[s] = received_power(scenario, grid.frequencies_hz[s]);
  }
  std::size_t best = 0;
  for (std::size_t s = 1; s < result.profile_w.size(); ++s) {
    if (result.profile_w[s] > result.profile_w[best]) best = s;  // ties keep lowest index
  }
  result.selected_index = best;
  result.selected_frequency_hz = grid.frequencies_hz[best];
  return result;
}

double upper_bound(const Scenario& scenario, double f_min_hz) {
  const double pt = scenario.transmit_power_w;
  return std::visit(
      overloaded{
          [&](const LosScenario& s) {
            const double n = s.geom.n_elements;
            double rho = 1.0;
            if (scenario.include_path_gain) {
              rho = path_gain(s.distance_m, Wavelength::from_frequency_hz(f_min_hz));
            }
            return pt * rho * n;
          },
          [&](const NlosScenario& s) {
            const double n = s.geom.n_elements;
            double rho = 1.0;
            if (scenario.include_path_gain) {
              const Wavelength wl = Wavelength::from_frequency_hz(f_min_hz);
              rho = path_gain(s.dist_rx_m, wl) * path_gain(s.dist_tx_m, wl);
            }
            return 4.0 * pt * rho * n * n;
          },
      },
      scenario.link);
}

}  // namespace movsig
