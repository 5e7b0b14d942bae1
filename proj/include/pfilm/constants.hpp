#pragma once

#include <numbers>

namespace pfilm {

// cgs units throughout: cm/s (SI definition, exact).
inline constexpr double speed_of_light = 2.99792458e10;

inline constexpr double pi = std::numbers::pi;

inline constexpr double deg2rad(double degrees) { return degrees * (pi / 180.0); }
inline constexpr double rad2deg(double radians) { return radians * (180.0 / pi); }

}  // namespace pfilm
