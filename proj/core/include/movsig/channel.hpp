#pragma once

#include <complex>
#include <vector>

#include "movsig/cvec.hpp"
#include "movsig/geometry.hpp"
#include "movsig/reconfig.hpp"

namespace movsig {

struct Wavelength {
  double meters;

  static Wavelength from_meters(double m);
  static Wavelength from_frequency_hz(double f_hz);
  double frequency_hz() const;
};

/// Single-reflector two-ray environment; the reflecting object sits between
/// a single-antenna transmitter and receiver.
struct TwoRayEnvironment {
  double dist_rx_tx_m;              // direct path
  double dist_rx_obj_m;             // receiver to object
  double dist_obj_tx_m;             // object to transmitter
  std::complex<double> reflection;  // |Gamma| <= 1

  TwoRayEnvironment(double dist_rx_tx_m, double dist_rx_obj_m,
                    double dist_obj_tx_m, std::complex<double> reflection);
};

/// Small-scale deterministic channel between a ULA and a far-field point:
/// [h]_n = exp(-j (2 pi / lambda) (d - x_n sin(theta))). Unit-modulus
/// entries; path gain is composed separately.
CVec los_channel(const UlaGeometry& geom, const FarFieldLink& link,
                 Wavelength wl);

/// Surface-to-endpoint link channel. Same construction as los_channel;
/// the alias keeps call sites in cascaded setups readable.
CVec fis_link_channel(const UlaGeometry& geom, const FarFieldLink& link,
                      Wavelength wl);

/// Cascaded scalar channel through an N-element surface, including the
/// specular structural-scattering term:
///   h = sum_n hR_n e^{j theta_n} hT_n - sum_n hR_n hT_n.
/// Throws "length mismatch" if the dimensions disagree.
std::complex<double> cascaded_channel(const CVec& h_rx,
                                      const SurfaceMatrix& surface,
                                      const CVec& h_tx);

/// Free-space power path gain rho = (4 pi d / lambda)^-2.
double path_gain(double distance_m, Wavelength wl);

/// a(theta) = [1, e^{j(2pi/lambda) dA sin}, ..., e^{j(2pi/lambda) dA (N-1) sin}] / sqrt(N).
CVec steering_vector(double angle_rad, const UlaGeometry& geom, Wavelength wl);

/// Transmit radiation pattern R(theta) = |a(theta) w|^2 over an angle grid.
std::vector<double> radiation_pattern_los(const std::vector<double>& angles_rad,
                                          const Precoder& precoder,
                                          const UlaGeometry& geom,
                                          Wavelength wl);

/// Reflected radiation pattern of a short-circuited surface illuminated from
/// tx_angle: R(theta_R) = |a(theta_R) a(theta_T)^T|^2. Equals 1 exactly in
/// the specular direction theta_R = -theta_T.
std::vector<double> radiation_pattern_nlos(const std::vector<double>& rx_angles_rad,
                                           double tx_angle_rad,
                                           const UlaGeometry& geom,
                                           Wavelength wl);

/// Two-ray channel with free-space amplitudes lambda/(4 pi d_path) on the
/// direct path and on the total reflected path length.
std::complex<double> two_ray_channel(const TwoRayEnvironment& env,
                                     Wavelength wl);

}  // namespace movsig
