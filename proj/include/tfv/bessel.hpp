#ifndef TFV_BESSEL_HPP
#define TFV_BESSEL_HPP

#include <complex>

namespace tfv {

// J_n(x) for integer n, real x.  Relative error <= 1e-12 away from zeros of J
// on |x| <= 1e4, n <= ~60.  Series in its cancellation-free zone, Miller
// backward recurrence (normalized by J_0 + 2*sum J_{2m} = 1) in the mid
// range, Hankel asymptotics plus forward recurrence for large x.
double bessel_j(int n, double x);

// I_n(z) for integer n >= 0 and complex z (the GR 6.615 right-hand side
// needs I at complex and purely imaginary argument).  Series for small |z|,
// backward recurrence normalized by exp(z) = I_0 + 2*sum I_m in the mid
// range, two-term asymptotics for large |z|.
std::complex<double> bessel_i(int n, std::complex<double> z);
double bessel_i(int n, double x);

// small-argument power series truncated at 'terms' terms; the independent
// test oracle for both J (x real) and I (via z*i)
double bessel_j_series_oracle(int n, double x, int terms);

} // namespace tfv

#endif
