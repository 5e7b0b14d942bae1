#pragma once

#include <complex>

namespace pfilm {

using Complex = std::complex<double>;

// q1 -> 0 limit of both permittivities: 1 - 1/(Omega (Omega + i eps)).
Complex drude_limit(double omega_ratio, double collision_ratio);

// Transverse / longitudinal permittivity of the degenerate electron gas.
// q1: wavenumber in units of omega_p/v_F; omega_ratio = omega/omega_p;
// collision_ratio = nu/omega_p. Frequencies enter as Omega + i*eps (retarded
// prescription); for collision_ratio == 0 the principal branch of the
// logarithm with a +0 imaginary part reproduces the eps -> 0+ limit.
Complex transverse_permittivity(double q1, double omega_ratio, double collision_ratio);
Complex longitudinal_permittivity(double q1, double omega_ratio, double collision_ratio);

struct PermittivityPair {
  Complex tr;
  Complex l;
};

// Both permittivities sharing one logarithm / power-series evaluation.
PermittivityPair permittivity_pair(double q1, double omega_ratio, double collision_ratio);

// Below this wavenumber both closed forms are replaced by drude_limit().
inline constexpr double small_q_threshold = 1e-6;

}  // namespace pfilm
