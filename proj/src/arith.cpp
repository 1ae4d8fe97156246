#include "tfv/arith.hpp"

#include <cmath>
#include <numbers>

namespace tfv {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int mod_pow(const Int& a, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    std::vector<std::pair<Int, int>> fac;
    Int m = abs(n);
    if (m <= 1) return fac;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (m > 1) fac.emplace_back(m, 1);
    return fac;
}

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Int euler_phi(const Int& n) {
    Int phi = 1;
    for (auto& [p, e] : factorize(n)) {
        Int pe = 1;
        for (int i = 0; i < e - 1; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

int moebius(const Int& n) {
    if (n == 1) return 1;
    int sign = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> ds{1};
    for (auto& [p, e] : factorize(n)) {
        size_t cur = ds.size();
        Int pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (size_t j = 0; j < cur; ++j) ds.push_back(ds[j] * pe);
        }
    }
    return ds;
}

long divisor_count(const Int& n) {
    long d = 1;
    for (auto& [p, e] : factorize(n)) d *= (e + 1);
    return d;
}

// --------------------------------------------------------------- residues

Residue::Residue(Int v, Int m) : modulus(std::move(m)) {
    if (modulus < 1) throw Error("Residue: modulus must be positive");
    value = ((v % modulus) + modulus) % modulus;
}

Residue mod_inverse(const Int& a, const Int& m) {
    if (m < 1) throw Error("mod_inverse: modulus must be positive");
    if (m == 1) return Residue(0, 1);
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), Int(((a % m) + m) % m).get_mpz_t(),
                   m.get_mpz_t()) == 0)
        throw NotCoprime("mod_inverse: gcd(" + a.get_str() + "," + m.get_str() +
                         ") > 1");
    return Residue(inv, m);
}

Residue crt_lift(const Residue& r1, const Residue& r2) {
    if (gcd(r1.modulus, r2.modulus) != 1)
        throw ModuliNotCoprime("crt_lift: moduli " + r1.modulus.get_str() +
                               ", " + r2.modulus.get_str() + " not coprime");
    // x = r1 + m1 * t, t == (r2 - r1) * m1^{-1} (mod m2)
    Int m1 = r1.modulus, m2 = r2.modulus;
    Int t = (mod_inverse(m1, m2).value * (r2.value - r1.value)) % m2;
    t = (t + m2) % m2;
    return Residue(r1.value + m1 * t, m1 * m2);
}

// ------------------------------------------------------------ RationalMod1

RationalMod1::RationalMod1(const Int& num, const Int& den) {
    if (den <= 0) throw Error("RationalMod1: denominator must be positive");
    q_ = Rat(num, den);
    reduce();
}

RationalMod1::RationalMod1(long num, long den) {
    if (den <= 0) throw Error("RationalMod1: denominator must be positive");
    q_ = Rat(num, den);
    reduce();
}

void RationalMod1::reduce() {
    q_.canonicalize();
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q_.get_num().get_mpz_t(),
               q_.get_den().get_mpz_t());
    q_ -= Rat(fl);
    q_.canonicalize();
}

std::complex<double> RationalMod1::to_complex() const {
    double t = q_.get_d();
    double a = 2.0 * std::numbers::pi * t;
    return {std::cos(a), std::sin(a)};
}

RationalMod1 RationalMod1::operator+(const RationalMod1& o) const {
    return RationalMod1(q_ + o.q_);
}
RationalMod1 RationalMod1::operator-(const RationalMod1& o) const {
    return RationalMod1(q_ - o.q_);
}
RationalMod1 RationalMod1::operator-() const { return RationalMod1(-q_); }
RationalMod1 RationalMod1::times(const Int& k) const {
    return RationalMod1(q_ * Rat(k));
}

RationalMod1 mod1_add(const RationalMod1& x, const RationalMod1& y) {
    return x + y;
}

RationalMod1 unit_fraction(const Int& a, const Int& c) {
    return RationalMod1(a, c);
}

// ------------------------------------------------------- fast 64-bit path

namespace fast {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { std::int64_t t = a % b; a = b; b = t; }
    return a;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    a %= m;
    if (a < 0) a += m;
    std::int64_t r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1; r0 = r1; r1 = r2;
        std::int64_t s2 = s0 - q * s1; s0 = s1; s1 = s2;
    }
    if (r0 != 1) return -1;
    return s0 < 0 ? s0 + m : s0;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(
        (static_cast<__int128>(a) * b) % m);
}

} // namespace fast

} // namespace tfv
