#pragma once

#include <complex>

#include "pfilm/plasma.hpp"

namespace pfilm {

// Film stack: thickness in nm, surrounding permittivities, incidence angle in
// radians. eps1 (incidence side) must be real and positive; eps2 (substrate)
// may be complex.
struct StackConfig {
  double d_nm = 0.0;
  double eps1 = 1.0;
  std::complex<double> eps2{1.0, 0.0};
  double theta = 0.0;  // radians, [0, pi/2)

  void validate() const;
};

// Truncation policy for the harmonic sums.
struct SeriesControl {
  double rel_tol = 1e-10;
  int n_max = 200000;
  int consecutive_below = 3;

  void validate() const;
};

// Per-harmonic dimensionless wavevector components.
struct ModeTerm {
  int n = 0;
  double Qx = 0.0;  // pi n / W
  double Qz = 0.0;  // sqrt(eps1) Omega sin(theta)
  double q1 = 0.0;  // (v_F/c) sqrt(Qx^2 + Qz^2)
};

// One impedance sum with its truncation diagnostics.
struct SeriesSum {
  std::complex<double> value{0.0, 0.0};
  int n_used = 0;             // harmonics evaluated
  int last_n = 0;             // highest harmonic index reached
  double tail_estimate = 0.0; // relative bound on the truncated remainder
  bool converged = false;
};

struct ImpedancePair {
  std::complex<double> Z1{0.0, 0.0};  // antisymmetric (odd harmonics)
  std::complex<double> Z2{0.0, 0.0};  // symmetric (even harmonics)
  int n_used_odd = 0;
  int n_used_even = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

// W = omega_p d / c with d in nm (1 nm = 1e-7 cm).
double film_width_parameter(double d_nm, const PlasmaParams& plasma);

ModeTerm mode_term(int n, double width, double omega_ratio, double theta, double eps1,
                   const PlasmaParams& plasma);

// General two-bracket summand:
//   (1/Q^2) [ Qz^2/(Omega^2 eps_l) + Qx^2/(Omega^2 eps_tr - Q^2) ].
std::complex<double> impedance_term(const ModeTerm& t, double omega_ratio,
                                    double collision_ratio);

SeriesSum impedance_antisymmetric(const StackConfig& cfg, double omega_ratio,
                                  const PlasmaParams& plasma, const SeriesControl& ctrl);
SeriesSum impedance_symmetric(const StackConfig& cfg, double omega_ratio,
                              const PlasmaParams& plasma, const SeriesControl& ctrl);
ImpedancePair impedance_pair(const StackConfig& cfg, double omega_ratio,
                             const PlasmaParams& plasma, const SeriesControl& ctrl);

namespace detail {

// Quantities shared by every harmonic of one parameter point.
struct SumGeometry {
  double omega = 0.0;       // omega/omega_p
  double omega2 = 0.0;      // omega^2
  double coll = 0.0;        // nu/omega_p
  double width = 0.0;       // W(d)
  double Qz = 0.0;
  double Qz2 = 0.0;
  double x = 0.0;           // W Qz / pi
  double gamma = 0.0;       // eps1 sin^2(theta) - 1: coefficient of the 1/Q^2 tail
  double c4 = 0.0;          // coefficient of the 1/Q^4 tail
  double vratio = 0.0;      // v_F/c
  double cinv2 = 0.0;       // (c/v_F)^2

  static SumGeometry make(const StackConfig& cfg, double omega_ratio,
                          const PlasmaParams& plasma);
};

// Asymptote-subtracted summands, each rearranged so no cancellation occurs:
//   t1 = term(n) - gamma/Q^2          (decays like n^-4)
//   t2 = term(n) - gamma/Q^2 - c4/Q^4 (decays like n^-5)
// t1 - t2 == c4/Q^4 exactly.
struct CorrectedTerms {
  std::complex<double> t1;
  std::complex<double> t2;
};
CorrectedTerms corrected_terms(const SumGeometry& g, double Qx);
std::complex<double> corrected_term(const SumGeometry& g, double Qx);  // t2 only

// n = 0 contribution of the symmetric sum (before the -2i Omega/W prefactor).
// Only the longitudinal bracket survives; at theta = 0 the q1 -> 0 limit
// applies and equals the local (Drude) value.
std::complex<double> n0_term(const SumGeometry& g);

}  // namespace detail

}  // namespace pfilm
