#include "movsig/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "movsig/units.hpp"

namespace movsig {

Wavelength Wavelength::from_meters(double m) {
  if (!(m > 0.0)) throw std::invalid_argument("wavelength must be positive");
  return Wavelength{m};
}

Wavelength Wavelength::from_frequency_hz(double f_hz) {
  if (!(f_hz > 0.0)) throw std::invalid_argument("frequency must be positive");
  return Wavelength{kSpeedOfLight / f_hz};
}

double Wavelength::frequency_hz() const { return kSpeedOfLight / meters; }

TwoRayEnvironment::TwoRayEnvironment(double rt, double ro, double ot,
                                     std::complex<double> gamma)
    : dist_rx_tx_m(rt), dist_rx_obj_m(ro), dist_obj_tx_m(ot), reflection(gamma) {
  if (!(dist_rx_tx_m > 0.0 && dist_rx_obj_m > 0.0 && dist_obj_tx_m > 0.0))
    throw std::invalid_argument("two-ray distances must be positive");
  if (std::abs(reflection) > 1.0 + 1e-12)
    throw std::invalid_argument("reflection coefficient magnitude must not exceed 1");
}

CVec los_channel(const UlaGeometry& geom, const FarFieldLink& link, Wavelength wl) {
  const double k = 2.0 * kPi / wl.meters;
  const double sin_theta = std::sin(link.angle_rad);
  const std::vector<double> x = element_positions(geom);
  CVec h(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dist = link.distance_m - x[i] * sin_theta;
    h[i] = std::polar(1.0, -k * dist);
  }
  return h;
}

CVec fis_link_channel(const UlaGeometry& geom, const FarFieldLink& link, Wavelength wl) {
  return los_channel(geom, link, wl);
}

std::complex<double> cascaded_channel(const CVec& h_rx, const SurfaceMatrix& surface,
                                      const CVec& h_tx) {
  if (h_rx.size() != surface.size() || h_tx.size() != surface.size())
    throw std::invalid_argument("length mismatch");
  std::complex<double> reflected{0.0, 0.0};
  std::complex<double> structural{0.0, 0.0};
  for (std::size_t n = 0; n < surface.size(); ++n) {
    const std::complex<double> product = h_rx[n] * h_tx[n];
    reflected += product * surface.reflection(n);
    structural += product;
  }
  return reflected - structural;
}

double path_gain(double distance_m, Wavelength wl) {
  if (!(distance_m > 0.0)) throw std::invalid_argument("distance must be positive");
  const double ratio = wl.meters / (4.0 * kPi * distance_m);
  return ratio * ratio;
}

CVec steering_vector(double angle_rad, const UlaGeometry& geom, Wavelength wl) {
  const int n = geom.n_elements;
  const double phase_step = 2.0 * kPi / wl.meters * geom.spacing_m * std::sin(angle_rad);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CVec a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] = std::polar(scale, phase_step * i);
  }
  return a;
}

std::vector<double> radiation_pattern_los(const std::vector<double>& angles_rad,
                                          const Precoder& precoder,
                                          const UlaGeometry& geom, Wavelength wl) {
  std::vector<double> pattern(angles_rad.size());
  for (std::size_t i = 0; i < angles_rad.size(); ++i) {
    const CVec a = steering_vector(angles_rad[i], geom, wl);
    pattern[i] = std::norm(dot(a, precoder.weights));
  }
  return pattern;
}

std::vector<double> radiation_pattern_nlos(const std::vector<double>& rx_angles_rad,
                                           double tx_angle_rad,
                                           const UlaGeometry& geom, Wavelength wl) {
  const CVec a_tx = steering_vector(tx_angle_rad, geom, wl);
  std::vector<double> pattern(rx_angles_rad.size());
  for (std::size_t i = 0; i < rx_angles_rad.size(); ++i) {
    const CVec a_rx = steering_vector(rx_angles_rad[i], geom, wl);
    pattern[i] = std::norm(dot(a_rx, a_tx));
  }
  return pattern;
}

std::complex<double> two_ray_channel(const TwoRayEnvironment& env, Wavelength wl) {
  const double f = wl.frequency_hz();
  const double amp_direct = wl.meters / (4.0 * kPi * env.dist_rx_tx_m);
  const double reflected_length = env.dist_rx_obj_m + env.dist_obj_tx_m;
  const double amp_reflected = wl.meters / (4.0 * kPi * reflected_length);
  const std::complex<double> direct =
      amp_direct * std::polar(1.0, -2.0 * kPi * f * env.dist_rx_tx_m / kSpeedOfLight);
  const std::complex<double> reflected =
      amp_reflected *
      std::polar(1.0, -2.0 * kPi * f * env.dist_rx_obj_m / kSpeedOfLight) *
      env.reflection *
      std::polar(1.0, -2.0 * kPi * f * env.dist_obj_tx_m / kSpeedOfLight);
  return direct + reflected;
}

}  // namespace movsig
