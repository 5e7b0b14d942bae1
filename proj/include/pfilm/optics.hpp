#pragma once

#include <complex>

#include "pfilm/impedance.hpp"

namespace pfilm {

enum class PointFlag { normal, total_internal_reflection, grazing };

// Angle/permittivity factors shared by the amplitude and energy formulas.
struct GeometryFactors {
  double sin_theta = 0.0;
  double cos_theta = 1.0;
  double sin2 = 0.0;
  double sqrt_eps1 = 1.0;
  double beta1 = 1.0;                   // 1 - sin^2(theta)/eps1
  std::complex<double> beta2{1.0, 0.0}; // 1 - sin^2(theta)/eps2
  std::complex<double> beta12{1.0, 0.0};
  std::complex<double> eps12{1.0, 0.0}; // eps2/eps1
  std::complex<double> s_sub{1.0, 0.0}; // sqrt(eps12 - sin^2 theta), Im >= 0
  std::complex<double> k2x{1.0, 0.0};   // sqrt(eps2 - eps1 sin^2 theta), Im >= 0
  bool eps_real = true;
  bool tir = false;
};

struct AmplitudePair {
  std::complex<double> p1{0.0, 0.0};
  std::complex<double> p2{0.0, 0.0};
  std::complex<double> p_bar{0.0, 0.0};  // (p1 + p2)/2
};

struct TraResult {
  double T = 0.0;
  double R = 0.0;
  double A = 0.0;
  PointFlag flag = PointFlag::normal;
};

// Full per-point record: energy coefficients plus the intermediates a sweep
// row reports.
struct PointResult {
  double T = 0.0;
  double R = 0.0;
  double A = 0.0;
  PointFlag flag = PointFlag::normal;
  std::complex<double> Z1{0.0, 0.0};
  std::complex<double> Z2{0.0, 0.0};
  std::complex<double> p1{0.0, 0.0};
  std::complex<double> p2{0.0, 0.0};
  int n_used_odd = 0;
  int n_used_even = 0;
  double tail_estimate = 0.0;

  TraResult tra() const { return {T, R, A, flag}; }
};

// Principal square root reflected into the closed upper half plane.
std::complex<double> sqrt_upper(std::complex<double> z);

GeometryFactors geometry(const StackConfig& cfg);

// p_j = (sqrt(eps1) cos(theta) Z_j + beta1) / (sqrt(eps1) cos(theta) Z_j - beta1)
AmplitudePair amplitudes(std::complex<double> Z1, std::complex<double> Z2,
                         const GeometryFactors& ge);
AmplitudePair amplitudes(const ImpedancePair& Z, const StackConfig& cfg);

double reflectance(const AmplitudePair& p, const GeometryFactors& ge);
double reflectance(const AmplitudePair& p, const StackConfig& cfg);
double transmittance(const AmplitudePair& p, const GeometryFactors& ge);
double transmittance(const AmplitudePair& p, const StackConfig& cfg);
double absorptance(double T, double R);

PointResult evaluate_point(const StackConfig& cfg, double omega_ratio,
                           const PlasmaParams& plasma, const SeriesControl& ctrl);

inline TraResult evaluate_tra(const StackConfig& cfg, double omega_ratio,
                              const PlasmaParams& plasma, const SeriesControl& ctrl) {
  return evaluate_point(cfg, omega_ratio, plasma, ctrl).tra();
}

}  // namespace pfilm
