#ifndef TFV_ARITH_HPP
#define TFV_ARITH_HPP

// Exact integer / rational / residue arithmetic underlying the exponential
// sums.  Every exponent of e(x) = exp(2*pi*i*x) is carried as an exact
// rational in [0,1) until the final complex evaluation, so purely arithmetic
// identities are checked with residual exactly zero.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "tfv/errors.hpp"

namespace tfv {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------- integers

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// a^e mod m, e >= 0, m >= 1
Int mod_pow(const Int& a, const Int& e, const Int& m);

// prime factorization by trial division (exponents collected)
std::vector<std::pair<Int, int>> factorize(const Int& n);
std::vector<Int> prime_divisors(const Int& n);
bool is_squarefree(const Int& n);
bool is_prime(const Int& n);
Int euler_phi(const Int& n);
int moebius(const Int& n);
std::vector<Int> divisors(const Int& n);
// number-of-divisors d(n)
long divisor_count(const Int& n);

// --------------------------------------------------------------- residues

// Residue class value mod modulus, 0 <= value < modulus.
struct Residue {
    Int value;
    Int modulus;

    Residue() : value(0), modulus(1) {}
    Residue(Int v, Int m);

    bool operator==(const Residue& o) const {
        return value == o.value && modulus == o.modulus;
    }
};

// x with a*x == 1 (mod m).  Throws NotCoprime if gcd(a,m) > 1.
Residue mod_inverse(const Int& a, const Int& m);

// Unique residue mod m1*m2 reducing to r1, r2.  Throws ModuliNotCoprime.
Residue crt_lift(const Residue& r1, const Residue& r2);

// ------------------------------------------------------------ RationalMod1

// Exact rational residue in [0,1); the argument of e(x) = exp(2*pi*i*x).
class RationalMod1 {
  public:
    RationalMod1() : q_(0) {}
    explicit RationalMod1(const Rat& q) : q_(q) { reduce(); }
    RationalMod1(const Int& num, const Int& den);
    // num/den with machine integers
    RationalMod1(long num, long den);

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }
    const Rat& rat() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    double to_double() const { return q_.get_d(); }

    // exp(2*pi*i*value)
    std::complex<double> to_complex() const;

    RationalMod1 operator+(const RationalMod1& o) const;
    RationalMod1 operator-(const RationalMod1& o) const;
    RationalMod1 operator-() const;
    RationalMod1 times(const Int& k) const;

    bool operator==(const RationalMod1& o) const { return q_ == o.q_; }
    bool operator!=(const RationalMod1& o) const { return q_ != o.q_; }
    bool operator<(const RationalMod1& o) const { return q_ < o.q_; }

  private:
    void reduce();
    Rat q_; // canonical, 0 <= q_ < 1
};

RationalMod1 mod1_add(const RationalMod1& x, const RationalMod1& y);

// e(a/c) exponent for integer a, positive c
RationalMod1 unit_fraction(const Int& a, const Int& c);

// ------------------------------------------------------- fast 64-bit path

// Word-sized helpers used in hot enumeration loops (c within machine range).
// Same contracts as the Int versions.
namespace fast {
// extended-gcd modular inverse; returns -1 when gcd(a,m) > 1
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t gcd(std::int64_t a, std::int64_t b);
} // namespace fast

} // namespace tfv

#endif
