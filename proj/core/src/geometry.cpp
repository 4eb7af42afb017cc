#include "movsig/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "movsig/units.hpp"

namespace movsig {

namespace {
// Degree inputs converted through deg2rad can overshoot pi/2 by a few ulp.
constexpr double kAngleSlack = 1e-9;
}  // namespace

UlaGeometry::UlaGeometry(int n, double spacing) : n_elements(n), spacing_m(spacing) {
  if (n_elements < 1) throw std::invalid_argument("element count must be at least 1");
  if (!(spacing_m > 0.0)) throw std::invalid_argument("element spacing must be positive");
}

FarFieldLink::FarFieldLink(double distance, double angle)
    : distance_m(distance), angle_rad(angle) {
  if (!(distance_m > 0.0)) throw std::invalid_argument("link distance must be positive");
  if (!(std::abs(angle_rad) <= kPi / 2.0 + kAngleSlack))
    throw std::invalid_argument("link angle must lie in [-pi/2, pi/2]");
  if (angle_rad > kPi / 2.0) angle_rad = kPi / 2.0;
  if (angle_rad < -kPi / 2.0) angle_rad = -kPi / 2.0;
}

std::vector<double> element_positions(const UlaGeometry& geom) {
  const int n = geom.n_elements;
  std::vector<double> x(static_cast<std::size_t>(n));
  const double center = (n + 1) / 2.0;
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = ((i + 1) - center) * geom.spacing_m;
  }
  return x;
}

double element_distance(const FarFieldLink& link, double element_x_m) {
  return link.distance_m - element_x_m * std::sin(link.angle_rad);
}

}  // namespace movsig
