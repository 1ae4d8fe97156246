#include "tfv/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace tfv {

namespace {

// exact division assuming divisor monic and division exact
std::vector<Int> poly_div_exact(std::vector<Int> num,
                                const std::vector<Int>& den) {
    std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1
                                                : 0,
                       Int(0));
    for (long i = static_cast<long>(num.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        Int c = num[i];
        if (c == 0) continue;
        long shift = i - (static_cast<long>(den.size()) - 1);
        q[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    for (auto& c : num)
        if (c != 0) throw Error("poly_div_exact: division not exact");
    return q;
}

// remainder of num modulo monic den
std::vector<Int> poly_rem(std::vector<Int> num, const std::vector<Int>& den) {
    for (long i = static_cast<long>(num.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        Int c = num[i];
        if (c == 0) continue;
        long shift = i - (static_cast<long>(den.size()) - 1);
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    if (num.size() > den.size() - 1) num.resize(den.size() - 1);
    return num;
}

std::map<long, std::vector<Int>> phi_cache;
std::map<long, bool> geo_cache;
std::mutex cache_mutex;

std::vector<Int> compute_phi(long n) {
    if (n == 1) return {Int(-1), Int(1)}; // x - 1
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = phi_cache.find(n);
        if (it != phi_cache.end()) return it->second;
    }
    // compute divisors bottom-up without holding the lock recursively
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        {
            std::lock_guard<std::mutex> lk(cache_mutex);
            if (phi_cache.count(d)) continue;
        }
        auto phi = compute_phi(d);
        std::lock_guard<std::mutex> lk(cache_mutex);
        phi_cache.emplace(d, std::move(phi));
    }
    std::lock_guard<std::mutex> lk(cache_mutex);
    return phi_cache.at(n);
}

bool geometric_root_sum_is_zero(long M) {
    if (M <= 1) return false;
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = geo_cache.find(M);
        if (it != geo_cache.end()) return it->second;
    }
    const auto& phi = cyclotomic_polynomial(M);
    std::vector<Int> ones(M, Int(1));
    auto rem = poly_rem(std::move(ones), phi);
    bool zero = true;
    for (auto& c : rem)
        if (c != 0) { zero = false; break; }
    std::lock_guard<std::mutex> lk(cache_mutex);
    geo_cache[M] = zero;
    return zero;
}

void CyclotomicSum::add(const RationalMod1& exponent, const Int& mult) {
    if (mult == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, mult);
    } else {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& o) {
    for (auto& [q, m] : o.terms_) add(q, m);
    return *this;
}

CyclotomicSum& CyclotomicSum::operator-=(const CyclotomicSum& o) {
    for (auto& [q, m] : o.terms_) add(q, -m);
    return *this;
}

CyclotomicSum CyclotomicSum::rotated(const RationalMod1& q,
                                     const Int& mult) const {
    CyclotomicSum r;
    for (auto& [e, m] : terms_) r.add(e + q, m * mult);
    return r;
}

CyclotomicSum CyclotomicSum::operator*(const CyclotomicSum& o) const {
    CyclotomicSum r;
    for (auto& [e1, m1] : terms_)
        for (auto& [e2, m2] : o.terms_) r.add(e1 + e2, m1 * m2);
    return r;
}

bool CyclotomicSum::is_zero_exact() const {
    if (terms_.empty()) return true;
    Int L = 1;
    for (auto& [q, m] : terms_) L = lcm(L, q.den());
    if (!L.fits_slong_p())
        throw Error("CyclotomicSum: common denominator too large for exact test");
    long Ll = L.get_si();
    std::vector<Int> poly(Ll, Int(0));
    for (auto& [q, m] : terms_) {
        Int idx = q.num() * (L / q.den());
        poly[idx.get_ui()] += m;
    }
    if (Ll == 1) return poly[0] == 0;
    auto rem = poly_rem(std::move(poly), cyclotomic_polynomial(Ll));
    for (auto& c : rem)
        if (c != 0) return false;
    return true;
}

std::complex<double> CyclotomicSum::to_complex() const {
    std::complex<double> s{0.0, 0.0};
    for (auto& [q, m] : terms_) s += m.get_d() * q.to_complex();
    return s;
}

} // namespace tfv
