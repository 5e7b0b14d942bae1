#include "pfilm/optics.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>

#include "pfilm/constants.hpp"
#include "pfilm/errors.hpp"

namespace pfilm {

namespace {

// grazing flag for theta beyond this (TIR takes precedence)
const double grazing_threshold = deg2rad(89.5);

}  // namespace

std::complex<double> sqrt_upper(std::complex<double> z) {
  std::complex<double> r = std::sqrt(z);
  if (r.imag() < 0.0) r = -r;
  return r;
}

GeometryFactors geometry(const StackConfig& cfg) {
  cfg.validate();
  GeometryFactors ge;
  ge.sin_theta = std::sin(cfg.theta);
  ge.cos_theta = std::cos(cfg.theta);
  ge.sin2 = ge.sin_theta * ge.sin_theta;
  ge.sqrt_eps1 = std::sqrt(cfg.eps1);
  ge.beta1 = 1.0 - ge.sin2 / cfg.eps1;
  ge.beta2 = 1.0 - ge.sin2 / cfg.eps2;
  if (ge.beta2 == 0.0)
    throw domain_error("geometry: beta2 = 0 (sin^2 theta equals eps2)");
  ge.beta12 = ge.beta1 / ge.beta2;
  ge.eps12 = cfg.eps2 / cfg.eps1;
  ge.s_sub = sqrt_upper(ge.eps12 - ge.sin2);
  ge.k2x = sqrt_upper(cfg.eps2 - cfg.eps1 * ge.sin2);
  ge.eps_real = cfg.eps2.imag() == 0.0;
  // The snap factor absorbs deg->rad rounding when theta sits exactly at the
  // critical angle.
  const double ratio = cfg.eps2.real() / cfg.eps1;
  ge.tir = ge.eps_real && ge.sin2 >= ratio * (1.0 - 8.0 * DBL_EPSILON);
  return ge;
}

AmplitudePair amplitudes(std::complex<double> Z1, std::complex<double> Z2,
                         const GeometryFactors& ge) {
  if (ge.beta1 == 0.0)
    throw domain_error("amplitudes: beta1 = 0 (sin^2 theta equals eps1)");
  const double k1 = ge.sqrt_eps1 * ge.cos_theta;
  const auto one = [&](std::complex<double> Z) {
    const std::complex<double> den = k1 * Z - ge.beta1;
    if (den == 0.0)
      throw domain_error("amplitudes: singular denominator (sqrt(eps1) cos(theta) Z = beta1)");
    return (k1 * Z + ge.beta1) / den;
  };
  AmplitudePair p;
  p.p1 = one(Z1);
  p.p2 = one(Z2);
  p.p_bar = 0.5 * (p.p1 + p.p2);
  return p;
}

AmplitudePair amplitudes(const ImpedancePair& Z, const StackConfig& cfg) {
  return amplitudes(Z.Z1, Z.Z2, geometry(cfg));
}

double reflectance(const AmplitudePair& p, const GeometryFactors& ge) {
  const std::complex<double> bs = ge.beta12 * ge.s_sub;
  const std::complex<double> prod = p.p1 * p.p2;
  const std::complex<double> num =
      bs * (p.p_bar + prod) + ge.cos_theta * (p.p_bar - prod);
  const std::complex<double> den =
      bs * (1.0 + p.p_bar) + ge.cos_theta * (1.0 - p.p_bar);
  if (den == 0.0) throw domain_error("reflectance: degenerate denominator");
  return std::norm(num / den);
}

double reflectance(const AmplitudePair& p, const StackConfig& cfg) {
  return reflectance(p, geometry(cfg));
}

double transmittance(const AmplitudePair& p, const GeometryFactors& ge) {
  const std::complex<double> bs = ge.beta12 * ge.s_sub;
  const std::complex<double> den =
      bs * (1.0 + p.p_bar) + ge.cos_theta * (1.0 - p.p_bar);
  if (den == 0.0) throw domain_error("transmittance: degenerate denominator");
  // Re(beta12 * s) keeps T real for complex eps2 and vanishes identically in
  // total internal reflection (s purely imaginary, beta12 real).
  const double T = ge.cos_theta * bs.real() * std::norm((p.p1 - p.p2) / den);
  return T == 0.0 ? 0.0 : T;
}

double transmittance(const AmplitudePair& p, const StackConfig& cfg) {
  return transmittance(p, geometry(cfg));
}

double absorptance(double T, double R) { return 1.0 - T - R; }

PointResult evaluate_point(const StackConfig& cfg, double omega_ratio,
                           const PlasmaParams& plasma, const SeriesControl& ctrl) {
  const auto context = [&](const char* what) {
    std::ostringstream os;
    os << what << " [at omega_ratio = " << omega_ratio << ", theta = "
       << rad2deg(cfg.theta) << " deg, d = " << cfg.d_nm << " nm, eps1 = " << cfg.eps1
       << ", eps2 = (" << cfg.eps2.real() << ", " << cfg.eps2.imag() << ")]";
    return os.str();
  };
  try {
    const GeometryFactors ge = geometry(cfg);
    const SeriesSum z1 = impedance_antisymmetric(cfg, omega_ratio, plasma, ctrl);
    const SeriesSum z2 = impedance_symmetric(cfg, omega_ratio, plasma, ctrl);
    if (!z1.converged || !z2.converged) {
      std::ostringstream os;
      os << "impedance series did not converge within n_max = " << ctrl.n_max
         << " (partial Z1 = " << z1.value << ", tail " << z1.tail_estimate
         << "; partial Z2 = " << z2.value << ", tail " << z2.tail_estimate << ")";
      throw convergence_error(os.str());
    }
    const AmplitudePair p = amplitudes(z1.value, z2.value, ge);

    PointResult r;
    r.R = reflectance(p, ge);
    r.T = transmittance(p, ge);
    if (ge.tir) r.T = 0.0;
    r.A = absorptance(r.T, r.R);
    r.flag = ge.tir ? PointFlag::total_internal_reflection
                     : (cfg.theta > grazing_threshold ? PointFlag::grazing
                                                      : PointFlag::normal);
    r.Z1 = z1.value;
    r.Z2 = z2.value;
    r.p1 = p.p1;
    r.p2 = p.p2;
    r.n_used_odd = z1.n_used;
    r.n_used_even = z2.n_used;
    r.tail_estimate = std::max(z1.tail_estimate, z2.tail_estimate);
    return r;
  } catch (const convergence_error& e) {
    throw convergence_error(context(e.what()));
  } catch (const domain_error& e) {
    throw domain_error(context(e.what()));
  }
}

}  // namespace pfilm
