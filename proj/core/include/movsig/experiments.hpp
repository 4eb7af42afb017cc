#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "movsig/result_table.hpp"
#include "movsig/units.hpp"

namespace movsig {

/// Link configuration strategies compared by the experiments.
///
///   movable         fixed uniform precoder, frequency picked by pilot sweep
///   egt_1bit        one-bit equal gain transmission at f_min
///   egt_ideal       ideal equal gain transmission at f_min
///   movable_egt     per-subchannel best of {uniform, one-bit EGT}, best f
///   fis_movable     short-circuited surface, frequency picked by pilot sweep
///   ris_1bit        one-bit surface at f_min
///   ris_continuous  continuous-phase surface at f_min
///   movable_ris     per-subchannel best of {short-circuit, one-bit}, best f
enum class Baseline {
  kMovable,
  kEgtOneBit,
  kEgtIdeal,
  kMovableEgt,
  kFisMovable,
  kRisOneBit,
  kRisContinuous,
  kMovableRis,
};

std::string baseline_name(Baseline baseline);
Baseline baseline_from_name(const std::string& name);  // throws on unknown

/// Direct-link numerology. The element spacing is derived from f_min so the
/// lowest optimal frequency lands on the bottom of the range: d_A = c / f_min.
struct LosSetup {
  int n_elements = 64;
  double transmit_power_w = 1.0;
  double distance_m = 10.0;
  bool include_path_gain = true;
};

/// Cascaded-link numerology. d_A = c / (f_min (1 + |sin theta_T|)) so that
/// the lowest optimal frequency over receiver directions equals f_min.
struct NlosSetup {
  int n_elements = 64;
  double transmit_power_w = 1.0;
  double dist_rx_m = 5.0;
  double dist_tx_m = 10.0;
  double tx_angle_rad = 0.0;
  bool include_path_gain = true;
};

struct SweepConfig {
  std::variant<LosSetup, NlosSetup> setup;
  double f_min_hz = 8e9;
  double width_ratio = 1.8;
  int subchannels = 1024;
  double angle_step_rad = deg2rad(0.25);
  std::vector<Baseline> baselines;  // empty: defaults for the setup kind
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Received power of every baseline versus the receiver direction.
/// Columns: angle_deg, power_w_<baseline>..., upper_bound_w.
ResultTable sweep_receiver_angle(const SweepConfig& config);

struct AverageConfig {
  std::variant<LosSetup, NlosSetup> setup;
  double f_min_hz = 8e9;
  std::vector<double> width_ratios;
  std::vector<int> subchannel_counts;  // one entry, or one per width ratio
  int trials = 10000;
  std::vector<Baseline> baselines;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Received power averaged over a uniformly random receiver direction, one
/// row per width ratio. Trial t draws the same direction in every row.
/// Columns: W, then mean_power_w_<baseline>, stderr_w_<baseline> per baseline.
ResultTable average_over_angles(const AverageConfig& config);

struct ScalingConfig {
  std::vector<int> n_values{4, 16, 64, 256};
  int trials = 20000;
  double transmit_power_w = 1.0;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Surface-size scaling study on small-scale channels with both endpoint
/// directions uniformly random: a short-circuited surface driven at the
/// closed-form optimal frequency versus a continuous-phase surface at the
/// fixed half-wavelength frequency f = c / (2 d_A).
/// Columns: N, mean_power_fis_w, mean_power_ris_w, theory_fis_w, theory_ris_w.
ResultTable scaling_study(const ScalingConfig& config);

/// Per-trial samples behind scaling_study, for statistics beyond the mean.
/// ris_closed_form_w holds P_T (N + |hR hT|)^2 evaluated per realization.
struct ScalingSamples {
  std::vector<double> fis_power_w;
  std::vector<double> ris_power_w;
  std::vector<double> ris_closed_form_w;
};

ScalingSamples scaling_samples(int n_elements, int trials,
                               double transmit_power_w, std::uint64_t seed,
                               int threads);

}  // namespace movsig
