#include "movsig/freqplan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "movsig/units.hpp"

namespace movsig {

namespace {

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

void check_width(double width_ratio) {
  if (!(width_ratio >= 1.0)) throw std::invalid_argument("invalid range width");
}

void check_angle(double angle_rad) {
  if (!(std::abs(angle_rad) <= kPi / 2.0 + 1e-9))
    throw std::invalid_argument("angle must lie in [-pi/2, pi/2]");
}

// Max over n = 1..N of the phase distance of q*n from the nearest 2 pi
// multiple, where q is the per-element co-phasing increment in cycles.
double residual_from_increment(int n_elements, double increment_cycles) {
  double worst = 0.0;
  for (int n = 1; n <= n_elements; ++n) {
    const double q = increment_cycles * n;
    worst = std::max(worst, std::abs(q - std::round(q)));
  }
  return 2.0 * kPi * worst;
}

}  // namespace

FrequencyRange::FrequencyRange(double f_min, double width)
    : f_min_hz(f_min), width_ratio(width), f_max_hz(f_min * width) {
  if (!(f_min_hz > 0.0)) throw std::invalid_argument("f_min must be positive");
  if (!(width_ratio > 1.0)) throw std::invalid_argument("invalid range width");
}

double OptimalFrequency::resolve(double f_min_hz) const {
  return f_star_hz.value_or(f_min_hz);
}

double array_frequency(const UlaGeometry& geom) {
  return kSpeedOfLight / geom.spacing_m;
}

OptimalFrequency optimal_frequency_los(double angle_rad, double array_frequency_hz) {
  check_angle(angle_rad);
  const double s = std::sin(angle_rad);
  if (s == 0.0) return OptimalFrequency{};
  return OptimalFrequency{array_frequency_hz / std::abs(s)};
}

OptimalFrequency optimal_frequency_nlos(double rx_angle_rad, double tx_angle_rad,
                                        double array_frequency_hz) {
  check_angle(rx_angle_rad);
  check_angle(tx_angle_rad);
  const double s = std::sin(rx_angle_rad) + std::sin(tx_angle_rad);
  if (s == 0.0) return OptimalFrequency{};
  return OptimalFrequency{array_frequency_hz / std::abs(s)};
}

double cophasing_residual_los(const UlaGeometry& geom, double angle_rad, Wavelength wl) {
  check_angle(angle_rad);
  const double increment = geom.spacing_m * std::sin(angle_rad) / wl.meters;
  return residual_from_increment(geom.n_elements, increment);
}

double cophasing_residual_nlos(const UlaGeometry& geom, double rx_angle_rad,
                               double tx_angle_rad, Wavelength wl) {
  check_angle(rx_angle_rad);
  check_angle(tx_angle_rad);
  const double increment =
      geom.spacing_m * (std::sin(rx_angle_rad) + std::sin(tx_angle_rad)) / wl.meters;
  return residual_from_increment(geom.n_elements, increment);
}

CoverageReport coverage_los(double width_ratio) {
  check_width(width_ratio);
  CoverageReport report;
  report.width_ratio = width_ratio;
  const double theta_plus = std::asin(clamp_unit(1.0 / width_ratio));
  report.theta_plus_rad = theta_plus;
  report.coverage_rad = kPi - 2.0 * theta_plus;
  report.covered = {{-kPi / 2.0, -theta_plus}, {theta_plus, kPi / 2.0}};
  return report;
}

CoverageReport coverage_nlos(double width_ratio, double tx_angle_rad) {
  check_width(width_ratio);
  check_angle(tx_angle_rad);
  const bool mirrored = tx_angle_rad > 0.0;
  const double tx = mirrored ? -tx_angle_rad : tx_angle_rad;  // tx <= 0
  const double st = std::sin(tx);
  const double w = width_ratio;

  const double theta_minus = -std::asin(clamp_unit((1.0 + (w - 1.0) * st) / w));
  const bool has_plus = tx >= std::asin(clamp_unit((1.0 - w) / (1.0 + w)));

  CoverageReport report;
  report.width_ratio = width_ratio;
  report.tx_angle_rad = tx_angle_rad;
  if (has_plus) {
    const double theta_plus = std::asin(clamp_unit((1.0 - (w + 1.0) * st) / w));
    report.coverage_rad = kPi + theta_minus - theta_plus;
    if (mirrored) {
      report.theta_r_minus_rad = -theta_minus;
      report.theta_r_plus_rad = -theta_plus;
      report.covered = {{-kPi / 2.0, -theta_plus}, {-theta_minus, kPi / 2.0}};
    } else {
      report.theta_r_minus_rad = theta_minus;
      report.theta_r_plus_rad = theta_plus;
      report.covered = {{-kPi / 2.0, theta_minus}, {theta_plus, kPi / 2.0}};
    }
  } else {
    report.coverage_rad = theta_minus + kPi / 2.0;
    if (mirrored) {
      report.theta_r_minus_rad = -theta_minus;
      report.covered = {{-theta_minus, kPi / 2.0}};
    } else {
      report.theta_r_minus_rad = theta_minus;
      report.covered = {{-kPi / 2.0, theta_minus}};
    }
  }
  return report;
}

bool coverage_numeric_check(const CoverageReport& report, double grid_step_rad) {
  if (!(grid_step_rad > 0.0)) throw std::invalid_argument("grid step must be positive");
  const bool cascaded = report.tx_angle_rad.has_value();
  const double tx = cascaded ? *report.tx_angle_rad : 0.0;

  // Normalized to f_A = 1; membership is scale-free. f_min follows the
  // geometry-pinned rule the closed forms assume.
  const double f_min = cascaded ? 1.0 / (1.0 + std::abs(std::sin(tx))) : 1.0;
  const double f_max = report.width_ratio * f_min;

  std::vector<double> exempt;
  for (const auto& interval : report.covered) {
    exempt.push_back(interval.lo_rad);
    exempt.push_back(interval.hi_rad);
  }
  exempt.push_back(cascaded ? -tx : 0.0);  // bound attained at any frequency here

  const int count = std::max(2, static_cast<int>(std::lround(kPi / grid_step_rad)) + 1);
  for (int i = 0; i < count; ++i) {
    double theta = -kPi / 2.0 + (kPi * i) / (count - 1);
    if (i == 0) theta = -kPi / 2.0;
    if (i == count - 1) theta = kPi / 2.0;

    const OptimalFrequency opt =
        cascaded ? optimal_frequency_nlos(theta, tx, 1.0) : optimal_frequency_los(theta, 1.0);
    const bool member =
        opt.any() || (*opt.f_star_hz >= f_min && *opt.f_star_hz <= f_max);

    bool analytic = false;
    for (const auto& interval : report.covered) {
      if (theta >= interval.lo_rad && theta <= interval.hi_rad) {
        analytic = true;
        break;
      }
    }

    if (member != analytic) {
      double nearest = kPi;
      for (const double e : exempt) nearest = std::min(nearest, std::abs(theta - e));
      if (nearest > grid_step_rad * (1.0 + 1e-9)) return false;
    }
  }
  return true;
}

}  // namespace movsig
