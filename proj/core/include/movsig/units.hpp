#pragma once

namespace movsig {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s, exact by definition
inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline constexpr double deg2rad(double deg) { return deg * (kPi / 180.0); }
inline constexpr double rad2deg(double rad) { return rad * (180.0 / kPi); }

}  // namespace movsig
