#include "tfv/characters.hpp"

#include <algorithm>
#include <sstream>

namespace tfv {

long primitive_root(long p) {
    if (p == 2) return 1;
    std::vector<long> qs;
    long n = p - 1;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            qs.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) qs.push_back(n);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs) {
            if (mod_pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw Error("primitive_root: none found (not prime?)");
}

DirichletCharacter::DirichletCharacter() : D_(1) {}

DirichletCharacter::DirichletCharacter(const Int& modulus,
                                       std::vector<long> component_exponents)
    : D_(modulus) {
    if (D_ < 1) throw Error("character modulus must be positive");
    if (!is_squarefree(D_))
        throw Error("character modulus must be squarefree: " + D_.get_str());
    auto ps = prime_divisors(D_);
    if (ps.size() != component_exponents.size())
        throw Error("character: need one exponent per prime factor");
    for (size_t i = 0; i < ps.size(); ++i) {
        if (!ps[i].fits_slong_p())
            throw Error("character: prime factor too large");
        long p = ps[i].get_si();
        long r = component_exponents[i] % (p - 1);
        if (r < 0) r += p - 1;
        comps_.push_back({p, primitive_root(p), r});
    }
    build_tables();
}

void DirichletCharacter::build_tables() {
    primitive_ = true;
    parity_ = 1;
    log_tables_.clear();
    for (auto& c : comps_) {
        // p = 2 has trivial unit group; the only character is principal and
        // never primitive as a mod-2 character
        if (c.p == 2) {
            primitive_ = false;
            log_tables_.push_back({0});
            continue;
        }
        if (c.r == 0) primitive_ = false;
        std::vector<long> logt(c.p, -1);
        long x = 1;
        for (long j = 0; j < c.p - 1; ++j) {
            logt[x] = j;
            x = (x * c.generator) % c.p;
        }
        log_tables_.push_back(std::move(logt));
        // chi_p(-1) = e(r * dlog(-1) / (p-1)), dlog(-1) = (p-1)/2
        long num = (c.r * ((c.p - 1) / 2)) % (c.p - 1);
        if (num != 0) parity_ = -parity_;
    }
}

bool DirichletCharacter::is_trivial() const {
    for (auto& c : comps_)
        if (c.r != 0) return false;
    return true;
}

std::optional<RationalMod1> DirichletCharacter::exponent(const Int& n) const {
    if (D_ == 1) return RationalMod1();
    if (gcd(n, D_) != 1) return std::nullopt;
    RationalMod1 q;
    for (size_t i = 0; i < comps_.size(); ++i) {
        const auto& c = comps_[i];
        if (c.p == 2) continue;
        long np = mpz_class(((n % c.p) + c.p) % c.p).get_si();
        long dl = log_tables_[i][np];
        q = q + RationalMod1(Int(c.r) * dl, Int(c.p - 1));
    }
    return q;
}

std::complex<double> DirichletCharacter::evaluate(const Int& n) const {
    auto q = exponent(n);
    if (!q) return {0.0, 0.0};
    return q->to_complex();
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<long> exps;
    for (auto& c : comps_) exps.push_back(c.r == 0 ? 0 : (c.p - 1) - c.r);
    return DirichletCharacter(D_, exps);
}

long DirichletCharacter::order() const {
    Int ord = 1;
    for (auto& c : comps_) {
        long g = std::gcd(c.r, c.p - 1);
        ord = lcm(ord, Int((c.p - 1) / g));
    }
    return ord.get_si();
}

std::string DirichletCharacter::spec_string() const {
    if (D_ == 1) return "D=1";
    std::ostringstream os;
    os << "D=";
    for (size_t i = 0; i < comps_.size(); ++i)
        os << (i ? "*" : "") << comps_[i].p;
    os << ":";
    for (size_t i = 0; i < comps_.size(); ++i)
        os << (i ? "," : "") << comps_[i].generator << "^" << comps_[i].r;
    return os.str();
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
    if (D_ != o.D_ || comps_.size() != o.comps_.size()) return false;
    for (size_t i = 0; i < comps_.size(); ++i)
        if (comps_[i].p != o.comps_[i].p || comps_[i].r != o.comps_[i].r)
            return false;
    return true;
}

std::vector<DirichletCharacter> all_characters(const Int& D) {
    if (D == 1) return {DirichletCharacter()};
    auto ps = prime_divisors(D);
    std::vector<long> sizes;
    for (auto& p : ps) sizes.push_back(p.get_si() - 1);
    std::vector<long> idx(ps.size(), 0);
    std::vector<DirichletCharacter> out;
    while (true) {
        out.emplace_back(D, idx);
        size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < sizes[i]) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    return out;
}

std::vector<DirichletCharacter> primitive_characters(const Int& D) {
    std::vector<DirichletCharacter> out;
    for (auto& chi : all_characters(D))
        if (chi.is_primitive()) out.push_back(chi);
    return out;
}

DirichletCharacter quadratic_character(long p) {
    if (p == 2 || !is_prime(Int(p)))
        throw Error("quadratic_character: need odd prime");
    return DirichletCharacter(Int(p), {(p - 1) / 2});
}

DirichletCharacter parse_character_spec(const std::string& spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || spec.substr(0, eq) != "D")
        throw ParseError("character spec must start with D=");
    std::string rest = spec.substr(eq + 1);
    auto colon = rest.find(':');
    std::string dpart = colon == std::string::npos ? rest : rest.substr(0, colon);
    Int D = 1;
    std::vector<Int> ps;
    {
        std::istringstream is(dpart);
        std::string tok;
        while (std::getline(is, tok, '*')) {
            if (tok.empty()) throw ParseError("bad modulus in character spec");
            Int p(tok);
            ps.push_back(p);
            D *= p;
        }
    }
    if (D == 1) return DirichletCharacter();
    if (colon == std::string::npos)
        throw ParseError("character spec for D>1 needs :g^e components");
    std::vector<long> exps;
    std::istringstream is(rest.substr(colon + 1));
    std::string tok;
    size_t i = 0;
    while (std::getline(is, tok, ',')) {
        auto caret = tok.find('^');
        if (caret == std::string::npos)
            throw ParseError("character component must be g^e");
        long g = std::stol(tok.substr(0, caret));
        long e = std::stol(tok.substr(caret + 1));
        if (i >= ps.size()) throw ParseError("too many character components");
        long p = ps[i].get_si();
        long g0 = primitive_root(p);
        if (g == g0) {
            exps.push_back(e);
        } else {
            // translate exponent from the user's generator to the fixed one
            std::vector<long> logt(p, -1);
            long x = 1;
            for (long j = 0; j < p - 1; ++j) { logt[x] = j; x = (x * g0) % p; }
            long dl = logt[((g % p) + p) % p];
            if (dl < 0 || std::gcd(dl, p - 1) != 1)
                throw ParseError("character spec: " + std::to_string(g) +
                                 " is not a generator mod " + std::to_string(p));
            exps.push_back(static_cast<long>(
                (static_cast<__int128>(e) * dl) % (p - 1)));
        }
        ++i;
    }
    if (i != ps.size()) throw ParseError("character spec: missing components");
    return DirichletCharacter(D, exps);
}

GaussSumValue gauss_sum(const DirichletCharacter& chi) {
    GaussSumValue g;
    const Int& D = chi.modulus();
    if (D == 1) {
        g.exact.add(RationalMod1(), 1);
        g.value = {1.0, 0.0};
        return g;
    }
    for (Int a = 1; a < D; ++a) {
        auto q = chi.exponent(a);
        if (!q) continue;
        g.exact.add(*q + unit_fraction(a, D), 1);
    }
    g.value = g.exact.to_complex();
    return g;
}

} // namespace tfv
