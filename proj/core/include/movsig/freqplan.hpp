#pragma once

#include <optional>
#include <vector>

#include "movsig/channel.hpp"
#include "movsig/geometry.hpp"

namespace movsig {

/// Usable frequency range [f_min, W * f_min] with W > 1.
struct FrequencyRange {
  double f_min_hz;
  double width_ratio;
  double f_max_hz;

  FrequencyRange(double f_min_hz, double width_ratio);
};

/// Result of a closed-form frequency optimization. An empty f_star means the
/// co-phasing condition holds at every frequency (broadside or specular
/// direction); callers resolve it to f_min, which maximizes the path gain.
struct OptimalFrequency {
  std::optional<double> f_star_hz;

  bool any() const { return !f_star_hz.has_value(); }
  double resolve(double f_min_hz) const;
};

/// f_A = c / d_A: the frequency whose wavelength equals the element spacing.
double array_frequency(const UlaGeometry& geom);

/// Lowest frequency co-phasing a uniformly fed ULA toward angle theta:
/// f* = f_A / |sin(theta)|; any frequency for theta = 0.
OptimalFrequency optimal_frequency_los(double angle_rad,
                                       double array_frequency_hz);

/// Lowest frequency co-phasing the cascaded surface channel:
/// f* = f_A / |sin(theta_R) + sin(theta_T)|; any frequency in the specular
/// direction theta_R = -theta_T.
OptimalFrequency optimal_frequency_nlos(double rx_angle_rad,
                                        double tx_angle_rad,
                                        double array_frequency_hz);

/// Deviation of the per-element co-phasing quantities from integrality,
/// reported as max_n 2 pi dist((n / lambda) dA sin(theta), Z). Zero iff the
/// array is perfectly co-phased at this wavelength.
double cophasing_residual_los(const UlaGeometry& geom, double angle_rad,
                              Wavelength wl);

/// Cascaded variant with co-phasing quantity (n / lambda) dA (sin thR + sin thT).
double cophasing_residual_nlos(const UlaGeometry& geom, double rx_angle_rad,
                               double tx_angle_rad, Wavelength wl);

/// Closed angular interval [lo, hi] within [-pi/2, pi/2].
struct AngleInterval {
  double lo_rad;
  double hi_rad;
};

/// Angular region where the received-power bound is attainable with the
/// optimal frequency confined to the range, plus the boundary angles.
/// f_min is pinned to the geometry (f_A in the direct case,
/// f_A / (1 + |sin theta_T|) in the cascaded case); the closed forms assume
/// that choice.
struct CoverageReport {
  double width_ratio;
  std::optional<double> tx_angle_rad;        // engaged surface case only
  std::optional<double> theta_plus_rad;      // direct-link boundary
  std::optional<double> theta_r_minus_rad;   // cascaded lower boundary
  std::optional<double> theta_r_plus_rad;    // cascaded upper boundary, if any
  double coverage_rad = 0.0;
  std::vector<AngleInterval> covered;
};

/// Direct-link coverage: theta+ = arcsin(1/W), C = pi - 2 theta+,
/// covered set [-pi/2, -theta+] u [theta+, pi/2]. Throws
/// "invalid range width" for W < 1.
CoverageReport coverage_los(double width_ratio);

/// Cascaded coverage as a function of W and the (fixed) transmitter angle.
/// For tx_angle > 0 the report is computed at -tx_angle and mirrored.
CoverageReport coverage_nlos(double width_ratio, double tx_angle_rad);

/// Sweeps a uniform angle grid and verifies that membership of f* in
/// [f_min, f_max] matches the analytic covered set everywhere except within
/// one grid step of the boundary angles and of the degenerate direction.
bool coverage_numeric_check(const CoverageReport& report, double grid_step_rad);

}  // namespace movsig
