#include "pfilm/dielectric.hpp"

#include <cmath>

#include "pfilm/errors.hpp"

namespace pfilm {

namespace {

// Switch between the power series in u = q1/(Omega + i eps) and the closed
// form. The closed forms cancel like q1^3 for small q1 and are unusable in
// double precision below |u| ~ 1e-3; the series converges for |u| < 1.
constexpr double series_radius = 0.5;

void check_inputs(double q1, double omega_ratio, double collision_ratio) {
  if (!(omega_ratio > 0.0)) throw domain_error("permittivity: omega_ratio must be positive");
  if (!(q1 >= 0.0)) throw domain_error("permittivity: q1 must be non-negative");
  if (!(collision_ratio >= 0.0)) throw domain_error("permittivity: collision_ratio must be non-negative");
  if (collision_ratio == 0.0 && q1 == omega_ratio)
    throw domain_error("permittivity: logarithm singularity at q1 == omega_ratio with zero collision rate");
}

void check_finite(const Complex& v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw domain_error(std::string("permittivity: non-finite ") + what);
}

}  // namespace

Complex drude_limit(double omega_ratio, double collision_ratio) {
  const Complex w(omega_ratio, collision_ratio);
  return 1.0 - 1.0 / (omega_ratio * w);
}

PermittivityPair permittivity_pair(double q1, double omega_ratio, double collision_ratio) {
  check_inputs(q1, omega_ratio, collision_ratio);

  if (q1 < small_q_threshold) {
    const Complex d = drude_limit(omega_ratio, collision_ratio);
    return {d, d};
  }

  const Complex w(omega_ratio, collision_ratio);
  const Complex u = q1 / w;

  Complex eps_tr, eps_l;
  if (std::abs(u) <= series_radius) {
    // tr bracket: sum_j u^{2j} / ((2j+1)(2j+3))
    // l numerator: sum_j 3 u^{2j} / (2j+3), denominator sum_j u^{2j} / (2j+1)
    const Complex u2 = u * u;
    Complex s_tr = 0.0, s_num = 0.0, s_den = 0.0;
    Complex upow = 1.0;
    for (int j = 0; j < 96; ++j) {
      const double k1 = 2.0 * j + 1.0;
      const double k3 = 2.0 * j + 3.0;
      s_tr += upow / (k1 * k3);
      s_num += 3.0 * upow / k3;
      s_den += upow / k1;
      upow *= u2;
      if (std::abs(upow) < 1e-20) break;
    }
    eps_tr = 1.0 - 3.0 / (omega_ratio * w) * s_tr;
    const Complex dl = 1.0 - (Complex(0.0, collision_ratio) / w) * s_den;
    if (dl == 0.0) throw domain_error("longitudinal_permittivity: vanishing denominator bracket");
    eps_l = 1.0 - s_num / (w * w * dl);
  } else {
    const Complex log_arg = (w - q1) / (w + q1);
    const Complex L = std::log(log_arg);
    eps_tr = 1.0 - 3.0 / (4.0 * omega_ratio * q1 * q1 * q1) *
                       (2.0 * w * q1 + (w * w - q1 * q1) * L);
    const Complex dl = 1.0 + Complex(0.0, collision_ratio) * L / (2.0 * q1);
    if (dl == 0.0) throw domain_error("longitudinal_permittivity: vanishing denominator bracket");
    eps_l = 1.0 + 3.0 / (q1 * q1) * (1.0 + w * L / (2.0 * q1)) / dl;
  }

  check_finite(eps_tr, "transverse value");
  check_finite(eps_l, "longitudinal value");
  return {eps_tr, eps_l};
}

Complex transverse_permittivity(double q1, double omega_ratio, double collision_ratio) {
  return permittivity_pair(q1, omega_ratio, collision_ratio).tr;
}

Complex longitudinal_permittivity(double q1, double omega_ratio, double collision_ratio) {
  return permittivity_pair(q1, omega_ratio, collision_ratio).l;
}

}  // namespace pfilm
