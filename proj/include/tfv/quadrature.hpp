#ifndef TFV_QUADRATURE_HPP
#define TFV_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace tfv {

using Integrand = std::function<std::complex<double>(double)>;
using RealIntegrand = std::function<double(double)>;

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0; // estimate
    long evals = 0;
    long panels = 0;
};

// Adaptive Gauss-Kronrod 7/15 on [a,b].  Throws NonconvergentAfterMaxPanels.
QuadResult integrate(const Integrand& f, double a, double b, double tol,
                     long max_panels = 20000);

QuadResult integrate_real(const RealIntegrand& f, double a, double b,
                          double tol, long max_panels = 20000);

// Oscillation-aware integration on [a,b]: panels no longer than half the
// local wavelength(x), each panel integrated adaptively.
QuadResult integrate_oscillatory(const Integrand& f, double a, double b,
                                 const std::function<double(double)>& wavelength,
                                 double tol, long max_panels = 200000);

// Integral over [a, infinity) of an oscillatory integrand with slowly varying
// envelope: partitions at the supplied consecutive break points (roughly half
// periods), forms partial sums, and applies iterated averaging (repeated
// pairwise means) to accelerate the alternating tail.  'next_break(t)' must
// return a strictly increasing sequence.  error = last averaging difference.
QuadResult oscillatory_series_sum(const Integrand& f, double a,
                                  const std::function<double(double)>& next_break,
                                  double tol, int max_segments = 400,
                                  int min_segments = 24);

} // namespace tfv

#endif
