#ifndef TFV_EXPSUMS_HPP
#define TFV_EXPSUMS_HPP

// Twisted Kloosterman sums S_chi(a,b,c) = sum_{x(c)*} conj(chi(x)) e((ax+b*xbar)/c)
// and the finite arithmetic identities of the derivation chain, each checked
// in exact arithmetic (residual exactly 0 on pass).

#include <complex>
#include <map>
#include <string>

#include "tfv/arith.hpp"
#include "tfv/characters.hpp"
#include "tfv/cyclotomic.hpp"

namespace tfv {

struct KloostermanParams {
    Int a;
    Int b;
    Int c; // modulus, >= 1
    DirichletCharacter chi;
};

// floating evaluation; exponent arithmetic exact per term, one complex
// evaluation per term.  Fast 64-bit path when c fits a machine word.
std::complex<double> kloosterman(const KloostermanParams& p);

// exact cyclotomic representation (small moduli; used by identity checks)
CyclotomicSum kloosterman_exact(const KloostermanParams& p);

struct IdentityCheckResult {
    std::string id;
    std::string params;
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double residual = 0.0; // 0 for exact checks
    bool exact = true;
    bool pass = false;
};

using IdentityParams = std::map<std::string, Int>;

// Registered identities: orthogonality, reciprocity, poisson_arith,
// crt_regroup, gauss_vanish, kloosterman_shift.
// chi is ignored by identities that do not involve a character.
IdentityCheckResult check_identity(const std::string& id,
                                   const IdentityParams& params,
                                   const DirichletCharacter& chi = {});

std::vector<std::string> registered_identities();

} // namespace tfv

#endif
