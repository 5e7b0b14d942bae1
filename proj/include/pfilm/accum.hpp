#pragma once

#include <complex>

namespace pfilm {

// Kahan-compensated accumulator. Works for double and std::complex<double>;
// the compensation identity holds per component.
template <typename T>
struct KahanSum {
  T sum{};
  T comp{};

  void add(const T& v) {
    const T y = v - comp;
    const T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  T value() const { return sum; }
};

// Cascaded error-free accumulation: the running error of every addition is
// captured exactly (TwoSum) and collected in a second double, giving ~32
// effective digits for the partial sums of double-precision terms.
struct TwofoldSum {
  double hi = 0.0;
  double lo = 0.0;

  void add(double v) {
    const double s = hi + v;
    const double bp = s - hi;
    lo += (hi - (s - bp)) + (v - bp);
    hi = s;
  }
  double value() const { return hi + lo; }
};

struct TwofoldComplexSum {
  TwofoldSum re, im;

  void add(const std::complex<double>& v) {
    re.add(v.real());
    im.add(v.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace pfilm
