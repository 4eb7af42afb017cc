#pragma once

#include <vector>

namespace movsig {

/// Uniform linear array along the x-axis, centered at x = 0.
struct UlaGeometry {
  int n_elements;
  double spacing_m;

  UlaGeometry(int n_elements, double spacing_m);
};

/// Far-field link to a point: distance from the array center and angle
/// measured from the array normal, in [-pi/2, pi/2].
struct FarFieldLink {
  double distance_m;
  double angle_rad;

  FarFieldLink(double distance_m, double angle_rad);
};

/// Element x-coordinates x_n = (n - (N+1)/2) * d_A for n = 1..N, ascending.
/// The same centering is used for odd and even N.
std::vector<double> element_positions(const UlaGeometry& geom);

/// Far-field distance between the link endpoint and the element at x:
/// d_n = d - x * sin(theta).
double element_distance(const FarFieldLink& link, double element_x_m);

}  // namespace movsig
