#include "pfilm/impedance.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pfilm/accum.hpp"
#include "pfilm/constants.hpp"
#include "pfilm/dielectric.hpp"
#include "pfilm/errors.hpp"
#include "pfilm/lattice_sums.hpp"

namespace pfilm {

void StackConfig::validate() const {
  if (!(d_nm > 0.0)) throw config_error("StackConfig: d_nm must be positive");
  if (!(eps1 > 0.0)) throw config_error("StackConfig: eps1 must be positive and real");
  if (!(theta >= 0.0 && theta < pi / 2.0))
    throw config_error("StackConfig: theta must lie in [0, pi/2)");
  if (eps2 == 0.0) throw config_error("StackConfig: eps2 must be nonzero");
}

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) throw config_error("SeriesControl: rel_tol must be positive");
  if (n_max < 8) throw config_error("SeriesControl: n_max must be at least 8");
  if (consecutive_below < 2)
    throw config_error("SeriesControl: consecutive_below must be at least 2");
}

double film_width_parameter(double d_nm, const PlasmaParams& plasma) {
  plasma.validate();
  if (!(d_nm > 0.0)) throw domain_error("film_width_parameter: d_nm must be positive");
  return plasma.omega_p / speed_of_light * d_nm * 1e-7;
}

ModeTerm mode_term(int n, double width, double omega_ratio, double theta, double eps1,
                   const PlasmaParams& plasma) {
  if (!(width > 0.0)) throw domain_error("mode_term: width must be positive");
  ModeTerm t;
  t.n = n;
  t.Qx = pi * static_cast<double>(n) / width;
  t.Qz = std::sqrt(eps1) * omega_ratio * std::sin(theta);
  t.q1 = plasma.velocity_ratio() * std::hypot(t.Qx, t.Qz);
  return t;
}

std::complex<double> impedance_term(const ModeTerm& t, double omega_ratio,
                                    double collision_ratio) {
  const double Q2 = t.Qx * t.Qx + t.Qz * t.Qz;
  if (Q2 == 0.0)
    throw domain_error("impedance_term: Qx = Qz = 0 (the n = 0, theta = 0 term is caller-defined)");
  const auto [eps_tr, eps_l] = permittivity_pair(t.q1, omega_ratio, collision_ratio);
  const double om2 = omega_ratio * omega_ratio;
  const std::complex<double> den_tr = om2 * eps_tr - Q2;
  if (den_tr == 0.0) throw domain_error("impedance_term: transverse-mode resonance pole");
  if (eps_l == 0.0) throw domain_error("impedance_term: longitudinal pole (eps_l = 0)");
  return (t.Qz * t.Qz / (om2 * eps_l) + t.Qx * t.Qx / den_tr) / Q2;
}

namespace detail {

SumGeometry SumGeometry::make(const StackConfig& cfg, double omega_ratio,
                              const PlasmaParams& plasma) {
  if (!(omega_ratio > 0.0)) throw domain_error("impedance: omega_ratio must be positive");
  SumGeometry g;
  g.omega = omega_ratio;
  g.omega2 = omega_ratio * omega_ratio;
  g.coll = plasma.collision_ratio();
  g.width = film_width_parameter(cfg.d_nm, plasma);
  g.Qz = std::sqrt(cfg.eps1) * omega_ratio * std::sin(cfg.theta);
  g.Qz2 = g.Qz * g.Qz;
  g.x = g.width * g.Qz / pi;
  g.gamma = cfg.eps1 * std::sin(cfg.theta) * std::sin(cfg.theta) - 1.0;
  g.vratio = plasma.velocity_ratio();
  g.cinv2 = 1.0 / (g.vratio * g.vratio);
  g.c4 = g.omega2 * g.gamma - 3.0 * g.cinv2 * (1.0 + g.gamma);
  return g;
}

CorrectedTerms corrected_terms(const SumGeometry& g, double Qx) {
  const double Q2 = Qx * Qx + g.Qz2;
  const double q1 = g.vratio * std::sqrt(Q2);
  const auto [eps_tr, eps_l] = permittivity_pair(q1, g.omega, g.coll);
  const std::complex<double> den_tr = g.omega2 * eps_tr - Q2;
  if (den_tr == 0.0) throw domain_error("impedance: transverse-mode resonance pole");
  if (eps_l == 0.0) throw domain_error("impedance: longitudinal pole (eps_l = 0)");
  const double Q4 = Q2 * Q2;
  const std::complex<double> one_minus_l = 1.0 - eps_l;
  CorrectedTerms t;
  t.t1 = (g.omega2 * eps_tr - g.Qz2) / (den_tr * Q2) +
         (g.Qz2 / g.omega2) * one_minus_l / (eps_l * Q2);
  t.t2 = g.omega2 * (Q2 * (eps_tr - 1.0) + eps_tr * (g.omega2 - g.Qz2)) / (den_tr * Q4) +
         (g.Qz2 / g.omega2) * (Q2 * one_minus_l + 3.0 * g.cinv2 * eps_l) / (eps_l * Q4);
  return t;
}

std::complex<double> corrected_term(const SumGeometry& g, double Qx) {
  return corrected_terms(g, Qx).t2;
}

std::complex<double> n0_term(const SumGeometry& g) {
  const Complex eps_l = longitudinal_permittivity(g.vratio * g.Qz, g.omega, g.coll);
  if (eps_l == 0.0) throw domain_error("impedance: longitudinal pole at n = 0");
  return 1.0 / (g.omega2 * eps_l);
}

}  // namespace detail

namespace {

struct HalfSum {
  std::complex<double> value{0.0, 0.0};  // sum over the half axis n >= 1 (or 2)
  int terms = 0;
  int last_n = 0;
  double tail_abs = 0.0;   // absolute bound on the truncated corrected series
  double scale = 0.0;      // |offset + value|, the magnitude tail_abs is relative to
  bool converged = false;
};

// One half-axis sum with the analytic completion:
//   sum_n term(n) = sum_{n<=N} [corrected(n) (+ c4/Q^4 while n <= n_switch)]
//                   + gamma (W/pi)^2 F_parity(x) + c4 (W/pi)^4 tail_quartic
// Stopping needs `consecutive_below` corrected terms under rel_tol * |sum| and
// the n^-5 tail bound under the same tolerance.
HalfSum sum_half(bool odd, const detail::SumGeometry& g, const SeriesControl& ctrl,
                 std::complex<double> offset) {
  const int first = odd ? 1 : 2;
  const double w_pi = g.width / pi;
  const double w_pi2 = w_pi * w_pi;
  const double w_pi4 = w_pi2 * w_pi2;
  const double lattice =
      odd ? lattice_inv_square_odd(g.x) : lattice_inv_square_even(g.x);
  const double gamma_part = g.gamma * w_pi2 * lattice;

  // Beyond n_switch the 1/Q^4 asymptote is carried by the analytic tail
  // instead of the terms; boundary where |c4|/Q^4 ~ |gamma|/Q^2.
  int n_switch = static_cast<int>(std::ceil(
      w_pi * std::sqrt(std::abs(g.c4) / std::max(std::abs(g.gamma), 0.02))));
  n_switch = std::clamp(n_switch, 128, 40000);

  const int window = ctrl.consecutive_below;
  std::vector<double> recent(static_cast<size_t>(window), 0.0);

  KahanSum<std::complex<double>> acc;
  HalfSum h;
  int below = 0;
  int c4_last = 0;
  for (int n = first; n <= ctrl.n_max; n += 2) {
    const double Qx = pi * static_cast<double>(n) / g.width;
    const detail::CorrectedTerms t = detail::corrected_terms(g, Qx);
    // While n <= n_switch the 1/Q^4 asymptote stays inside the terms (as t1,
    // computed without cancellation); beyond it the analytic tail carries it.
    if (n <= n_switch) {
      acc.add(t.t1);
      c4_last = n;
    } else {
      acc.add(t.t2);
    }
    ++h.terms;
    h.last_n = n;

    const double mag = std::abs(t.t2);
    const double nd = static_cast<double>(n);
    recent[static_cast<size_t>(h.terms % window)] = mag * nd * nd * nd * nd * nd;

    const double scale = std::abs(offset + acc.value() + gamma_part);
    if (mag < ctrl.rel_tol * scale) ++below; else below = 0;

    if (below >= window && h.terms >= 16) {
      const double a5 = *std::max_element(recent.begin(), recent.end());
      const double bound = a5 / (4.0 * nd * nd * nd * nd);  // 2x safety on A5/(8 n^4)
      if (bound <= ctrl.rel_tol * scale) {
        h.tail_abs = bound;
        h.converged = true;
        break;
      }
    }
  }

  if (!h.converged) {
    const double a5 = *std::max_element(recent.begin(), recent.end());
    const double nd = static_cast<double>(h.last_n);
    h.tail_abs = a5 / (4.0 * nd * nd * nd * nd);
  }

  // c4_last is always set: n_switch >= 128 covers the first harmonic.
  const double c4_part =
      g.c4 * w_pi4 * tail_inv_quartic(static_cast<double>(c4_last), g.x);
  h.value = acc.value() + gamma_part + c4_part;
  h.scale = std::abs(offset + h.value);
  return h;
}

}  // namespace

SeriesSum impedance_antisymmetric(const StackConfig& cfg, double omega_ratio,
                                  const PlasmaParams& plasma, const SeriesControl& ctrl) {
  cfg.validate();
  ctrl.validate();
  const auto g = detail::SumGeometry::make(cfg, omega_ratio, plasma);
  const HalfSum h = sum_half(true, g, ctrl, {0.0, 0.0});
  SeriesSum s;
  s.value = std::complex<double>(0.0, -2.0 * omega_ratio / g.width) * (2.0 * h.value);
  s.n_used = h.terms;
  s.last_n = h.last_n;
  s.tail_estimate = h.scale > 0.0 ? h.tail_abs / h.scale : h.tail_abs;
  s.converged = h.converged;
  return s;
}

SeriesSum impedance_symmetric(const StackConfig& cfg, double omega_ratio,
                              const PlasmaParams& plasma, const SeriesControl& ctrl) {
  cfg.validate();
  ctrl.validate();
  const auto g = detail::SumGeometry::make(cfg, omega_ratio, plasma);
  const std::complex<double> t0 = detail::n0_term(g);
  const HalfSum h = sum_half(false, g, ctrl, 0.5 * t0);
  SeriesSum s;
  s.value = std::complex<double>(0.0, -2.0 * omega_ratio / g.width) * (t0 + 2.0 * h.value);
  s.n_used = h.terms;
  s.last_n = h.last_n;
  s.tail_estimate = h.scale > 0.0 ? h.tail_abs / h.scale : h.tail_abs;
  s.converged = h.converged;
  return s;
}

ImpedancePair impedance_pair(const StackConfig& cfg, double omega_ratio,
                             const PlasmaParams& plasma, const SeriesControl& ctrl) {
  const SeriesSum z1 = impedance_antisymmetric(cfg, omega_ratio, plasma, ctrl);
  const SeriesSum z2 = impedance_symmetric(cfg, omega_ratio, plasma, ctrl);
  ImpedancePair p;
  p.Z1 = z1.value;
  p.Z2 = z2.value;
  p.n_used_odd = z1.n_used;
  p.n_used_even = z2.n_used;
  p.tail_estimate = std::max(z1.tail_estimate, z2.tail_estimate);
  p.converged = z1.converged && z2.converged;
  return p;
}

}  // namespace pfilm
