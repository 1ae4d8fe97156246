#ifndef TFV_CHARACTERS_HPP
#define TFV_CHARACTERS_HPP

// Dirichlet characters modulo squarefree D, built per prime factor and glued
// by CRT.  Each prime component is the image of a fixed generator of
// (Z/pZ)^* as an exact root-of-unity exponent r/(p-1); evaluation goes
// through per-prime discrete-log tables, so chi(n) is an exact RationalMod1
// exponent (or zero).

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tfv/arith.hpp"
#include "tfv/cyclotomic.hpp"

namespace tfv {

struct CharComponent {
    long p;         // prime
    long generator; // fixed primitive root mod p
    long r;         // chi(generator) = e(r/(p-1)), 0 <= r < p-1
};

class DirichletCharacter {
  public:
    // trivial character mod 1 (primitive by convention)
    DirichletCharacter();
    // components must cover exactly the prime factors of D (squarefree)
    DirichletCharacter(const Int& modulus, std::vector<long> component_exponents);

    const Int& modulus() const { return D_; }
    const std::vector<CharComponent>& components() const { return comps_; }

    bool is_primitive() const { return primitive_; }
    bool is_trivial() const;
    int parity() const { return parity_; } // chi(-1)

    // exact exponent of chi(n); nullopt encodes chi(n) = 0
    std::optional<RationalMod1> exponent(const Int& n) const;
    std::complex<double> evaluate(const Int& n) const;

    DirichletCharacter conjugate() const;

    // order of chi in the character group
    long order() const;

    std::string spec_string() const;

    bool operator==(const DirichletCharacter& o) const;

  private:
    Int D_;
    std::vector<CharComponent> comps_;
    std::vector<std::vector<long>> log_tables_; // per component: dlog of 1..p-1
    bool primitive_ = true;
    int parity_ = 1;
    void build_tables();
};

// smallest primitive root mod p
long primitive_root(long p);

// all characters mod squarefree D (component exponent tuples in odometer order)
std::vector<DirichletCharacter> all_characters(const Int& D);
std::vector<DirichletCharacter> primitive_characters(const Int& D);

// the quadratic character mod an odd prime p
DirichletCharacter quadratic_character(long p);

// Parse CLI spec `D=p1*p2:g1^e1,g2^e2` or `D=1`; exponents are the
// RationalMod1 numerators r_i over p_i-1 at the listed generators.
DirichletCharacter parse_character_spec(const std::string& spec);

struct GaussSumValue {
    std::complex<double> value;
    CyclotomicSum exact; // exact cyclotomic representation
};

// tau(chi) = sum_{a mod D} chi(a) e(a/D); D=1 gives 1.
GaussSumValue gauss_sum(const DirichletCharacter& chi);

} // namespace tfv

#endif
