#pragma once

// Generators and independent oracles shared by the unit, property and
// acceptance tests. Oracles deliberately avoid the library's own kernels:
// they work with plain mpz arithmetic, permutations and brute force.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "padicres/ok_arith.hpp"
#include "padicres/polynomial.hpp"
#include "padicres/series.hpp"

namespace testing {

using namespace padicres;

inline FieldRef z2(int N) { return FieldSpec::zp(2, N); }
inline FieldRef z3(int N) { return FieldSpec::zp(3, N); }
// Q_2(sqrt 2): E = x^2 - 2.
inline FieldRef ram2(int N) { return FieldSpec::create(2, {mpz_class(-2), mpz_class(0), mpz_class(1)}, N); }

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    mpz_class big_below(const mpz_class& bound) {
        mpz_class acc = 0;
        const size_t words = mpz_sizeinbase(bound.get_mpz_t(), 2) / 32 + 2;
        for (size_t k = 0; k < words; ++k) {
            acc <<= 32;
            acc += static_cast<unsigned long>(rng_() & 0xffffffffULL);
        }
        return acc % bound;
    }

    // Uniform element of O_K / pi^N.
    OKElement element(const FieldRef& f) {
        mpz_class bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(f->p()),
                      static_cast<unsigned long>(f->coefficient_precision()));
        std::vector<mpz_class> c(f->e());
        for (auto& x : c) x = big_below(bound);
        return OKElement::from_coords(f, std::move(c));
    }

    OKElement unit(const FieldRef& f) {
        for (;;) {
            OKElement x = element(f);
            if (x.is_unit()) return x;
        }
    }

    // Element of valuation >= v.
    OKElement in_ideal(const FieldRef& f, int v) { return OKElement::uniformizer_power(f, v) * element(f); }

    // Series with exactly `wideg` leading non-units; xprec M.
    PowerSeries series_with_wideg(const FieldRef& f, int wideg, int M) {
        PowerSeries s(f, M);
        for (int i = 0; i < M; ++i) {
            if (i < wideg) s.set_coeff(i, in_ideal(f, 1));
            else if (i == wideg) s.set_coeff(i, unit(f));
            else s.set_coeff(i, element(f));
        }
        return s;
    }

    PowerSeries series(const FieldRef& f, int M) {
        PowerSeries s(f, M);
        for (int i = 0; i < M; ++i) s.set_coeff(i, element(f));
        return s;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline mpz_class pow_p(long p, int k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

inline mpz_class mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Z_p integer of an e = 1 element.
inline mpz_class as_integer(const OKElement& x) { return x.coords().at(0); }

// Inverse mod m by the extended Euclidean algorithm.
inline mpz_class egcd_inverse(const mpz_class& a, const mpz_class& m) {
    mpz_class r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        mpz_class q = r0 / r1;
        mpz_class t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return r0 == 1 ? mod(s0, m) : mpz_class(-1);
}

// Exact integer polynomial product (no truncation).
inline std::vector<mpz_class> int_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// f(g(X)) over Z by full expansion, then truncated to M terms.
inline std::vector<mpz_class> int_compose(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g, size_t M) {
    std::vector<mpz_class> result(M, 0), power{1};
    for (size_t i = 0; i < f.size(); ++i) {
        for (size_t k = 0; k < std::min(M, power.size()); ++k) result[k] += f[i] * power[k];
        power = int_mul(power, g);
        if (power.size() > M) power.resize(M);
    }
    return result;
}

// Leibniz expansion over all permutations.
inline OKElement leibniz_det(const std::vector<std::vector<OKElement>>& a) {
    const size_t n = a.size();
    const FieldRef& f = a[0][0].field();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    OKElement total = OKElement::zero(f);
    do {
        int inversions = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        OKElement term = OKElement::one(f);
        for (size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        total += inversions % 2 == 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// All z in [0, p^N) with f(z) = 0 mod p^N and val(z) >= 1, by exhaustion.
inline std::vector<mpz_class> brute_roots(const std::vector<mpz_class>& f, long p, int N) {
    const mpz_class m = pow_p(p, N);
    std::vector<mpz_class> roots;
    for (mpz_class z = 0; z < m; z += p) {
        mpz_class acc = 0;
        for (size_t i = f.size(); i-- > 0;) acc = mod(acc * z + f[i], m);
        if (acc == 0) roots.push_back(z);
    }
    return roots;
}

}  // namespace testing
