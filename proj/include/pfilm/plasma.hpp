#pragma once

#include "pfilm/constants.hpp"
#include "pfilm/errors.hpp"

namespace pfilm {

// Electron-gas constants of the metal film.
// omega_p, nu in rad/s; v_F in cm/s.
struct PlasmaParams {
  double omega_p = 0.0;  // plasma (Langmuir) frequency
  double v_F = 0.0;      // Fermi velocity
  double nu = 0.0;       // effective electron collision frequency

  double collision_ratio() const { return nu / omega_p; }         // nu / omega_p
  double velocity_ratio() const { return v_F / speed_of_light; }  // v_F / c

  void validate() const {
    if (!(omega_p > 0.0)) throw config_error("PlasmaParams: omega_p must be positive");
    if (!(v_F > 0.0)) throw config_error("PlasmaParams: v_F must be positive");
    if (!(v_F < speed_of_light)) throw config_error("PlasmaParams: v_F must be below the speed of light");
    if (!(nu >= 0.0)) throw config_error("PlasmaParams: nu must be non-negative");
  }

  static PlasmaParams sodium(double nu_over_omega_p = 1e-3) {
    PlasmaParams p;
    p.omega_p = 6.5e15;
    p.v_F = 8.52e7;
    p.nu = nu_over_omega_p * p.omega_p;
    return p;
  }
};

}  // namespace pfilm
