#include "pfilm/oracle.hpp"

#include <cmath>

#include "pfilm/accum.hpp"
#include "pfilm/constants.hpp"
#include "pfilm/dielectric.hpp"
#include "pfilm/errors.hpp"
#include "pfilm/lattice_sums.hpp"

namespace pfilm {
namespace oracle {

OracleReport make_report(std::string quantity, std::complex<double> production,
                         std::complex<double> reference) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.production = production;
  r.reference = reference;
  r.abs_discrepancy = std::abs(production - reference);
  const double scale = std::max(std::abs(production), std::abs(reference));
  r.rel_discrepancy = scale > 0.0 ? r.abs_discrepancy / scale : 0.0;
  return r;
}

namespace {

struct HalfBrute {
  std::complex<double> value{0.0, 0.0};
  int terms = 0;
  double tail_rel = 0.0;
};

// Raw half-axis sum of `summand` for the given parity up to N, plus analytic
// gamma/Q^2 and c4/Q^4 tails beyond the last included index.
template <typename Summand>
HalfBrute brute_half(bool odd, const detail::SumGeometry& g, long N, double gamma,
                     double c4, Summand&& summand) {
  const int first = odd ? 1 : 2;
  TwofoldComplexSum acc;
  int terms = 0;
  long last = 0;
  for (long n = first; n <= N; n += 2) {
    acc.add(summand(static_cast<double>(n)));
    ++terms;
    last = n;
  }
  const double w_pi = g.width / pi;
  const double w_pi2 = w_pi * w_pi;
  const double a = static_cast<double>(last);
  const std::complex<double> total =
      acc.value() + gamma * w_pi2 * tail_inv_square(a, g.x) +
      c4 * w_pi2 * w_pi2 * tail_inv_quartic(a, g.x);

  // Residual bound from the last corrected term (~n^-5 decay).
  const double Qx = pi * a / g.width;
  const double Q2 = Qx * Qx + g.Qz2;
  const std::complex<double> t2 =
      summand(a) - gamma / Q2 - c4 / (Q2 * Q2);
  const double tail_abs = std::abs(t2) * a / 4.0;
  HalfBrute h;
  h.value = total;
  h.terms = terms;
  h.tail_rel = std::abs(total) > 0.0 ? tail_abs / std::abs(total) : tail_abs;
  return h;
}

}  // namespace

ImpedancePair impedance_bruteforce(const StackConfig& cfg, double omega_ratio,
                                   const PlasmaParams& plasma, long N) {
  if (N < 10000) throw domain_error("impedance_bruteforce: N must be at least 1e4");
  cfg.validate();
  const auto g = detail::SumGeometry::make(cfg, omega_ratio, plasma);
  const double coll = plasma.collision_ratio();

  const auto summand = [&](double n) {
    ModeTerm t;
    t.n = static_cast<int>(n);
    t.Qx = pi * n / g.width;
    t.Qz = g.Qz;
    t.q1 = g.vratio * std::hypot(t.Qx, t.Qz);
    return impedance_term(t, omega_ratio, coll);
  };

  const HalfBrute odd = brute_half(true, g, N, g.gamma, g.c4, summand);
  const HalfBrute even = brute_half(false, g, N, g.gamma, g.c4, summand);
  const std::complex<double> pref(0.0, -2.0 * omega_ratio / g.width);

  ImpedancePair p;
  p.Z1 = pref * (2.0 * odd.value);
  p.Z2 = pref * (detail::n0_term(g) + 2.0 * even.value);
  p.n_used_odd = odd.terms;
  p.n_used_even = even.terms;
  p.tail_estimate = std::max(odd.tail_rel, even.tail_rel);
  p.converged = true;
  return p;
}

ImpedancePair impedance_transformed(const StackConfig& cfg, double omega_ratio,
                                    const PlasmaParams& plasma, long N) {
  if (N < 10000) throw domain_error("impedance_transformed: N must be at least 1e4");
  cfg.validate();
  const auto g = detail::SumGeometry::make(cfg, omega_ratio, plasma);
  const double coll = plasma.collision_ratio();
  const double om2 = g.omega2;

  const auto summand = [&](double n) {
    const double Qx = pi * n / g.width;
    const double Q2 = Qx * Qx + g.Qz2;
    const double q1 = g.vratio * std::sqrt(Q2);
    const Complex eps_tr = transverse_permittivity(q1, omega_ratio, coll);
    const std::complex<double> den = om2 * eps_tr - Q2;
    if (den == 0.0) throw domain_error("impedance_transformed: resonance pole");
    return 1.0 / den;
  };

  // Asymptote of 1/(Omega^2 eps_tr - Q^2): -1/Q^2 - Omega^2/Q^4 + O(n^-5).
  const HalfBrute odd = brute_half(true, g, N, -1.0, -om2, summand);
  const HalfBrute even = brute_half(false, g, N, -1.0, -om2, summand);

  // n = 0 term of the symmetric case in the same single-denominator form.
  const Complex eps_tr0 = transverse_permittivity(g.vratio * g.Qz, omega_ratio, coll);
  const std::complex<double> n0 = 1.0 / (om2 * eps_tr0 - g.Qz2);

  const std::complex<double> pref(0.0, -2.0 * omega_ratio / g.width);
  ImpedancePair p;
  p.Z1 = pref * (2.0 * odd.value);
  p.Z2 = pref * (n0 + 2.0 * even.value);
  p.n_used_odd = odd.terms;
  p.n_used_even = even.terms;
  p.tail_estimate = std::max(odd.tail_rel, even.tail_rel);
  p.converged = true;
  return p;
}

std::pair<double, double> tra_via_eq9_eq11(const AmplitudePair& p, const StackConfig& cfg) {
  cfg.validate();
  if (cfg.eps2.imag() != 0.0)
    throw domain_error("tra_via_eq9_eq11: requires real permittivities");
  const double eps1 = cfg.eps1;
  const double eps2 = cfg.eps2.real();
  const double st = std::sin(cfg.theta);
  const double ct = std::cos(cfg.theta);
  const double sin2 = st * st;
  const double s1 = std::sqrt(eps1);
  const double beta1 = 1.0 - sin2 / eps1;
  const double beta2 = 1.0 - sin2 / eps2;
  if (beta2 == 0.0) throw domain_error("tra_via_eq9_eq11: beta2 = 0");
  const double b12 = beta1 / beta2;

  const std::complex<double> k2r = sqrt_upper(std::complex<double>(eps2 - eps1 * sin2, 0.0));
  const std::complex<double> prod = p.p1 * p.p2;
  const std::complex<double> den =
      b12 * k2r * (1.0 + p.p_bar) + s1 * ct * (1.0 - p.p_bar);
  if (den == 0.0) throw domain_error("tra_via_eq9_eq11: degenerate denominator");

  const std::complex<double> num_r =
      b12 * k2r * (p.p_bar + prod) + s1 * ct * (p.p_bar - prod);
  const double R = std::norm(num_r / den);

  const std::complex<double> root =
      sqrt_upper(std::complex<double>(eps1 * (eps2 - eps1 * sin2), 0.0));
  double T = ct * b12 * root.real() * std::norm((p.p1 - p.p2) / den);
  if (T == 0.0) T = 0.0;  // clears the sign of -0 in the TIR regime
  return {T, R};
}

double transmittance_via_flux(const AmplitudePair& p, const StackConfig& cfg) {
  cfg.validate();
  const double st = std::sin(cfg.theta);
  const double ct = std::cos(cfg.theta);
  const double sin2 = st * st;
  const double k1x = std::sqrt(cfg.eps1) * ct;
  const std::complex<double> k2x = sqrt_upper(cfg.eps2 - cfg.eps1 * sin2);
  const double beta1 = 1.0 - sin2 / cfg.eps1;
  if (beta1 == 0.0) throw domain_error("transmittance_via_flux: beta1 = 0");
  const std::complex<double> beta2 = 1.0 - sin2 / cfg.eps2;
  if (beta2 == 0.0) throw domain_error("transmittance_via_flux: beta2 = 0");
  const std::complex<double> b1k2 = beta1 * k2x;
  const std::complex<double> b2k1 = beta2 * k1x;

  const std::complex<double> ab = b2k1 / b1k2 * (p.p2 - p.p1);      // a1 b2 - a2 b1
  const std::complex<double> bd =
      (b2k1 + b1k2) / b1k2 + (b1k2 - b2k1) / (2.0 * b1k2) * (p.p1 + p.p2);  // b2 - b1
  if (bd == 0.0) throw domain_error("transmittance_via_flux: degenerate denominator");

  const std::complex<double> beta12 = beta1 / beta2;
  const double T = (beta12 * k2x / k1x).real() * std::norm(ab / bd);
  return T == 0.0 ? 0.0 : T;
}

}  // namespace oracle
}  // namespace pfilm
