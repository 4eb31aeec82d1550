#pragma once

// Finite-precision arithmetic in O_K, the ring of integers of a totally
// ramified extension K/Q_p given by a monic Eisenstein polynomial E.
//
// An element is sum_{i<e} a_i pi^i with a_i in Z/p^B, known modulo pi^N.
// Values are kept canonical: a_i is reduced modulo p^{k_i} with
// k_i = ceil((N - i) / e), so two elements are congruent mod pi^N exactly
// when their coordinates agree.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "padicres/errors.hpp"

namespace padicres {

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

class FieldSpec {
public:
    // Validates primality of p and the Eisenstein condition on
    // eisenstein = (c_0, ..., c_e) with c_e = 1.
    static FieldRef create(long p, std::vector<mpz_class> eisenstein, int precision);
    // Z_p itself (E = x - p, pi = p).
    static FieldRef zp(long p, int precision);

    long p() const { return p_; }
    int e() const { return e_; }
    int precision() const { return N_; }
    // Coefficient precision ceil(N/e) + 1.
    int coefficient_precision() const { return B_; }
    const std::vector<mpz_class>& eisenstein() const { return eis_; }

    // p^{k_i}: modulus of coordinate i in canonical form.
    const mpz_class& coordinate_modulus(int i) const { return mods_[i]; }
    int coordinate_exponent(int i) const { return kexp_[i]; }

    // Same field with another working precision.
    FieldRef with_precision(int precision) const;

    bool same_as(const FieldSpec& other) const;

    // Raw product kernel: `raw` holds 2e-1 integer coefficients of a
    // polynomial in pi; it is reduced by E and then canonicalised into
    // `out` (e coordinates). `raw` is clobbered.
    int raw_width() const { return 2 * e_ - 1; }
    void reduce_raw(mpz_class* raw, mpz_class* out) const;
    void canonicalize(mpz_class* coords) const;

private:
    FieldSpec() = default;

    long p_ = 0;
    int e_ = 0;
    int N_ = 0;
    int B_ = 0;
    std::vector<mpz_class> eis_;
    std::vector<mpz_class> mods_;
    std::vector<int> kexp_;
};

void require_same_field(const FieldRef& a, const FieldRef& b);

// pi-adic valuation of an element known mod pi^N.
struct Valuation {
    int value = 0;       // exact valuation, or N when !exact
    bool exact = true;   // false means "at least N"

    static Valuation exactly(int v) { return {v, true}; }
    static Valuation at_least(int n) { return {n, false}; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

std::string to_string(const Valuation& v);

// p-adic valuation of a nonzero integer.
int p_valuation(const mpz_class& a, long p);

class OKElement {
public:
    OKElement() = default;
    OKElement(FieldRef field, long value);
    OKElement(FieldRef field, const mpz_class& value);

    static OKElement from_coords(FieldRef field, std::vector<mpz_class> coords);
    static OKElement zero(FieldRef field) { return OKElement(std::move(field), 0L); }
    static OKElement one(FieldRef field) { return OKElement(std::move(field), 1L); }
    static OKElement uniformizer(FieldRef field);
    static OKElement uniformizer_power(FieldRef field, int k);

    const FieldRef& field() const { return field_; }
    const std::vector<mpz_class>& coords() const { return c_; }

    Valuation valuation() const;
    bool is_zero() const;
    bool is_unit() const;
    long residue() const;

    // x^{-1}; throws NotAUnit when valuation >= 1.
    OKElement inverse() const;
    OKElement pow(unsigned k) const;

    OKElement& operator+=(const OKElement& y);
    OKElement& operator-=(const OKElement& y);
    OKElement& operator*=(const OKElement& y);

    friend OKElement operator+(OKElement x, const OKElement& y) { return x += y; }
    friend OKElement operator-(OKElement x, const OKElement& y) { return x -= y; }
    friend OKElement operator*(OKElement x, const OKElement& y) { return x *= y; }
    OKElement operator-() const;

    // Congruence modulo pi^N.
    friend bool operator==(const OKElement& x, const OKElement& y);

    // Image in O_K / pi^k for k <= N.
    OKElement reduced(int k) const;
    bool congruent(const OKElement& y, int k) const;

    std::string to_string() const;

private:
    FieldRef field_;
    std::vector<mpz_class> c_;
};

enum class ArithKind { add, sub, mul };

OKElement arith(const OKElement& x, const OKElement& y, ArithKind kind);

}  // namespace padicres
