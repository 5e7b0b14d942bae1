#pragma once

#include <string>
#include <utility>

#include "pfilm/optics.hpp"

namespace pfilm {
namespace oracle {

// Production-vs-reference comparison record.
struct OracleReport {
  std::string quantity;
  std::complex<double> production{0.0, 0.0};
  std::complex<double> reference{0.0, 0.0};
  double abs_discrepancy = 0.0;
  double rel_discrepancy = 0.0;
};

OracleReport make_report(std::string quantity, std::complex<double> production,
                         std::complex<double> reference);

// Plain summation of the general two-bracket summand up to harmonic index N
// (no early stopping) with twofold (error-free) accumulation; the analytic
// 1/Q^2 and 1/Q^4 tails beyond N are completed with Euler–Maclaurin
// integrals. N must be at least 1e4.
ImpedancePair impedance_bruteforce(const StackConfig& cfg, double omega_ratio,
                                   const PlasmaParams& plasma, long N);

// Same machinery for the single-denominator variant that keeps only
// 1/(Omega^2 eps_tr - Q^2); computed for comparison reports only.
ImpedancePair impedance_transformed(const StackConfig& cfg, double omega_ratio,
                                    const PlasmaParams& plasma, long N);

// Energy coefficients from the pre-rewrite forms carrying explicit
// sqrt(eps2 - eps1 sin^2 theta) and sqrt(eps1) cos(theta). Real eps only.
// Returns {T, R}.
std::pair<double, double> tra_via_eq9_eq11(const AmplitudePair& p, const StackConfig& cfg);

// Transmittance as the Poynting-flux ratio built from the interface
// amplitude combinations a1 b2 - a2 b1 and b2 - b1.
double transmittance_via_flux(const AmplitudePair& p, const StackConfig& cfg);

}  // namespace oracle
}  // namespace pfilm
