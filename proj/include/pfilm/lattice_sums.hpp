#pragma once

namespace pfilm {

// Closed forms of the harmonic lattice sums that carry the analytic tails of
// the impedance series. x is real (x = W*Qz/pi).

// sum over odd n >= 1 of 1/(n^2 + x^2)  =  (pi/(4x)) tanh(pi x / 2)
double lattice_inv_square_odd(double x);

// sum over even n >= 2 of 1/(n^2 + x^2)
double lattice_inv_square_even(double x);

// Euler–Maclaurin tails starting after a last included index:
// sum over n = last_n + 2, last_n + 4, ... of the integrand.
double tail_inv_square(double last_n, double x);   // 1/(n^2 + x^2)
double tail_inv_quartic(double last_n, double x);  // 1/(n^2 + x^2)^2

}  // namespace pfilm
