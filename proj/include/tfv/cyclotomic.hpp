#ifndef TFV_CYCLOTOMIC_HPP
#define TFV_CYCLOTOMIC_HPP

// Exact arithmetic with finite Z-linear combinations of roots of unity.
// A CyclotomicSum is sum_j  m_j * e(q_j)  with integer multiplicities m_j and
// exact rational exponents q_j in [0,1).  Zero testing reduces the attached
// polynomial modulo the cyclotomic polynomial Phi_L, L = lcm of denominators,
// which decides vanishing in Z[zeta_L] deterministically.

#include <complex>
#include <map>
#include <vector>

#include "tfv/arith.hpp"

namespace tfv {

// Phi_n as integer coefficient vector, constant term first.  Memoized.
const std::vector<Int>& cyclotomic_polynomial(long n);

// Exact statement  sum_{j=0}^{M-1} e(j/M) == 0  for M > 1, certified once
// per M by dividing 1 + x + ... + x^{M-1} by Phi_M exactly.  Memoized.
bool geometric_root_sum_is_zero(long M);

class CyclotomicSum {
  public:
    CyclotomicSum() = default;

    void add(const RationalMod1& exponent, const Int& mult = 1);
    CyclotomicSum& operator+=(const CyclotomicSum& o);
    CyclotomicSum& operator-=(const CyclotomicSum& o);
    // multiply by m * e(q)
    CyclotomicSum rotated(const RationalMod1& q, const Int& mult = 1) const;
    CyclotomicSum operator*(const CyclotomicSum& o) const;

    bool empty() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // exact zero test in Z[zeta_L]
    bool is_zero_exact() const;

    std::complex<double> to_complex() const;

    const std::map<RationalMod1, Int>& terms() const { return terms_; }

  private:
    std::map<RationalMod1, Int> terms_;
};

} // namespace tfv

#endif
