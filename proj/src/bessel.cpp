#include "tfv/bessel.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "tfv/errors.hpp"

namespace tfv {

namespace {

constexpr double kPi = std::numbers::pi;

// ---- power series sum_m (-1)^m (x/2)^{n+2m} / (m! (n+m)!), used only where
// terms decrease from the start (x <= 2*sqrt(n+1)), so no cancellation.
double j_series(int n, double x) {
    double h = 0.5 * x;
    double term = 1.0;
    for (int i = 1; i <= n; ++i) term *= h / i; // (x/2)^n / n!
    double sum = term;
    double h2 = -h * h;
    for (int m = 1; m < 300; ++m) {
        term *= h2 / (static_cast<double>(m) * (n + m));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

// ---- Hankel asymptotic expansion, x large (used for J_0, J_1 at x >= 40)
double j_asymptotic(int n, double x) {
    const double mu = 4.0 * n * n;
    const double ix8 = 1.0 / (8.0 * x);
    // P ~ sum (-1)^k a_{2k}, Q ~ sum (-1)^k a_{2k+1} with
    // a_k = prod_{j=1..k} (mu - (2j-1)^2) / (k! 8^k x^k)
    double P = 1.0, Q = 0.0;
    double ak = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 34; ++k) {
        double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) * ix8 / k;
        ak *= f;
        if (std::abs(ak) > std::abs(prev)) break; // divergence onset
        prev = ak;
        switch (k % 4) {
            case 1: Q += ak; break;
            case 2: P -= ak; break;
            case 3: Q -= ak; break;
            case 0: P += ak; break;
        }
        if (std::abs(ak) < 1e-19) break;
    }
    // phase reduced in long double
    long double om = static_cast<long double>(x) -
                     (0.5L * n + 0.25L) * static_cast<long double>(kPi);
    double c = static_cast<double>(std::cos(om));
    double s = static_cast<double>(std::sin(om));
    return std::sqrt(2.0 / (kPi * x)) * (P * c - Q * s);
}

// ---- Miller backward recurrence, all orders 0..n at once, normalization
// J_0 + 2 sum_{m>=1} J_{2m} = 1
double j_miller(int n, double x) {
    int start = std::max(n, static_cast<int>(std::ceil(x))) + 60;
    if (start % 2) ++start;
    double bp = 0.0;      // J_{start+1} trial
    double b = 1e-280;    // J_{start} trial
    double norm = 0.0;    // accumulates J_0 + 2 sum J_{2m}
    double result = 0.0;
    for (int m = start; m >= 1; --m) {
        double bm = (2.0 * m / x) * b - bp;
        bp = b;
        b = bm;
        if (m - 1 == n) result = b;
        if ((m - 1) % 2 == 0) norm += (m - 1 == 0) ? b : 2.0 * b;
        if (std::abs(b) > 1e250) { // rescale
            b *= 1e-250;
            bp *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
    }
    return result / norm;
}

} // namespace

double bessel_j(int n, double x) {
    double sign = 1.0;
    if (n < 0) {
        n = -n;
        if (n % 2) sign = -sign;
    }
    if (x < 0.0) {
        x = -x;
        if (n % 2) sign = -sign; // J_n(-x) = (-1)^n J_n(x)
    }
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;

    if (x >= 40.0) {
        if (n <= 1) return sign * j_asymptotic(n, x);
        if (n <= x) {
            // forward recurrence from asymptotic J0, J1 (stable for n <= x)
            double jm = j_asymptotic(0, x), j = j_asymptotic(1, x);
            for (int m = 1; m < n; ++m) {
                double jn = (2.0 * m / x) * j - jm;
                jm = j;
                j = jn;
            }
            return sign * j;
        }
        return sign * j_miller(n, x);
    }
    if (x <= 2.0 * std::sqrt(static_cast<double>(n) + 1.0))
        return sign * j_series(n, x);
    return sign * j_miller(n, x);
}

double bessel_j_series_oracle(int n, double x, int terms) {
    double h = 0.5 * x;
    double term = 1.0;
    for (int i = 1; i <= n; ++i) term *= h / i;
    double sum = term;
    double h2 = -h * h;
    for (int m = 1; m < terms; ++m) {
        term *= h2 / (static_cast<double>(m) * (n + m));
        sum += term;
    }
    return sum;
}

namespace {

using Cd = std::complex<double>;

Cd i_series(int n, Cd z) {
    Cd h = 0.5 * z;
    Cd term = 1.0;
    for (int i = 1; i <= n; ++i) term *= h / static_cast<double>(i);
    Cd sum = term;
    Cd h2 = h * h;
    for (int m = 1; m < 400; ++m) {
        term *= h2 / (static_cast<double>(m) * static_cast<double>(n + m));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

Cd i_miller(int n, Cd z) {
    int start = std::max(n, static_cast<int>(std::ceil(std::abs(z)))) + 60;
    Cd bp = 0.0;
    Cd b = 1e-280;
    Cd norm = 0.0; // e^z = I_0 + 2 sum_{m>=1} I_m
    Cd result = 0.0;
    for (int m = start; m >= 1; --m) {
        Cd bm = (2.0 * m / z) * b + bp;
        bp = b;
        b = bm;
        if (m - 1 == n) result = b;
        norm += (m - 1 == 0) ? b : 2.0 * b;
        if (std::abs(b) > 1e250) {
            b *= 1e-250;
            bp *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
    }
    return result * std::exp(z) / norm;
}

Cd i_asymptotic(int n, Cd z) {
    // I_n(z) ~ e^z/sqrt(2 pi z) sum (-)^k a_k/z^k
    //        + e^{+-(n+1/2) pi i} e^{-z}/sqrt(2 pi z) sum a_k/z^k
    const double mu = 4.0 * n * n;
    Cd sum1 = 1.0, sum2 = 1.0, ak = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 30; ++k) {
        ak *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k) / z;
        if (std::abs(ak) > prev) break;
        prev = std::abs(ak);
        sum1 += (k % 2 ? -ak : ak);
        sum2 += ak;
        if (std::abs(ak) < 1e-19) break;
    }
    double sgn = z.imag() >= 0 ? 1.0 : -1.0;
    Cd phase = std::exp(Cd(0.0, sgn * (n + 0.5) * kPi));
    Cd pref = 1.0 / std::sqrt(2.0 * kPi * z);
    return pref * (std::exp(z) * sum1 + phase * std::exp(-z) * sum2);
}

} // namespace

std::complex<double> bessel_i(int n, std::complex<double> z) {
    if (n < 0) n = -n; // I_{-n} = I_n for integer n
    if (z == Cd(0.0, 0.0)) return n == 0 ? Cd(1.0, 0.0) : Cd(0.0, 0.0);
    double az = std::abs(z);
    // keep to the right half plane: I_n(-z) = (-1)^n I_n(z)
    if (z.real() < 0.0) {
        Cd v = bessel_i(n, -z);
        return (n % 2) ? -v : v;
    }
    if (az <= 8.0 || (std::abs(z.imag()) <= 8.0 && az <= 30.0))
        return i_series(n, z);
    // asymptotic series terms ~ (4n^2/(8|z|))^k: need |z| well past n^2/2
    double need = std::max(400.0, 2.0 * n * n);
    if (az > need) return i_asymptotic(n, z);
    return i_miller(n, z);
}

double bessel_i(int n, double x) { return bessel_i(n, Cd(x, 0.0)).real(); }

} // namespace tfv
