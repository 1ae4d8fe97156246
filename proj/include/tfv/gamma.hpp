#ifndef TFV_GAMMA_HPP
#define TFV_GAMMA_HPP

#include <complex>

namespace tfv {

using Cplx = std::complex<double>;

// Complex Gamma via the 15-term Lanczos approximation (g = 607/128), with
// reflection for Re z < 0.5.  Throws PoleAtNonpositiveInteger at poles.
Cplx complex_gamma(Cplx z);

// A logarithm of Gamma(z) (branch not normalized; exact modulo 2*pi*i, which
// is what exponentiated Gamma-ratio formulas need).
Cplx complex_lgamma(Cplx z);

} // namespace tfv

#endif
