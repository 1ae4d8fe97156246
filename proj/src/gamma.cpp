#include "tfv/gamma.hpp"

#include <cmath>
#include <numbers>

#include "tfv/errors.hpp"

namespace tfv {

namespace {

// Lanczos g = 607/128, 15 coefficients (standard published set)
constexpr double kG = 607.0 / 128.0;
constexpr double kCoef[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool is_nonpositive_integer(Cplx z) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

Cplx lanczos_sum(Cplx zm1) {
    Cplx s = kCoef[0];
    for (int k = 1; k < 15; ++k) s += kCoef[k] / (zm1 + static_cast<double>(k));
    return s;
}

} // namespace

Cplx complex_gamma(Cplx z) {
    if (is_nonpositive_integer(z))
        throw PoleAtNonpositiveInteger("gamma pole at z = " +
                                       std::to_string(z.real()));
    const double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
    }
    Cplx zm1 = z - 1.0;
    Cplx t = zm1 + kG + 0.5;
    Cplx s = lanczos_sum(zm1);
    return std::sqrt(2.0 * pi) * std::pow(t, zm1 + 0.5) * std::exp(-t) * s;
}

Cplx complex_lgamma(Cplx z) {
    if (is_nonpositive_integer(z))
        throw PoleAtNonpositiveInteger("lgamma pole at z = " +
                                       std::to_string(z.real()));
    const double pi = std::numbers::pi;
    if (z.real() < 0.5)
        return std::log(pi) - std::log(std::sin(pi * z)) -
               complex_lgamma(1.0 - z);
    Cplx zm1 = z - 1.0;
    Cplx t = zm1 + kG + 0.5;
    return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t +
           std::log(lanczos_sum(zm1));
}

} // namespace tfv
