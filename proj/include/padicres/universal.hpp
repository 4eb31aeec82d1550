#pragma once

// Truncated universal formulas over Z.
//
// A UniversalSeries is a finite sum of integer multiples of monomials in
// named variables. One variable may be "inverted": its negative powers are
// printed as powers of V (so F_n V = 1 holds by construction). A set of
// "small" variables generates the ideal I; terms of I-degree above `order`
// are discarded, so a UniversalSeries is exact modulo I^{order+1}.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "padicres/ok_arith.hpp"
#include "padicres/resultant.hpp"
#include "padicres/series.hpp"
#include "padicres/weierstrass.hpp"

namespace padicres {

using Exponents = std::vector<int>;

// Graded order: total |degree| first, then lexicographic with larger
// exponents of earlier variables first.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MPoly {
public:
    using TermMap = std::map<Exponents, mpz_class>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}
    static MPoly constant(int nvars, const mpz_class& c);
    static MPoly monomial(int nvars, const Exponents& exps, const mpz_class& c = 1);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::vector<std::pair<Exponents, mpz_class>> sorted_terms() const;  // GradedLex
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponents& exps, const mpz_class& c);
    MPoly& operator+=(const MPoly& b);
    MPoly& operator-=(const MPoly& b);
    MPoly operator-() const;
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

private:
    int nvars_;
    TermMap terms_;
};

// Discards terms whose degree in `small` exceeds `order`; `max_terms` caps
// the size of any intermediate product.
struct Truncation {
    std::vector<int> small;
    int order = 0;
    std::size_t max_terms = 4'000'000;

    int small_degree(const Exponents& e) const;
};

MPoly multiply(const MPoly& a, const MPoly& b, const Truncation& tr);

struct UniversalSeries {
    std::vector<std::string> names;
    std::vector<int> small;
    int order = 0;
    int inverted = -1;  // variable allowed negative exponents (printed as V)
    int n = 0;
    int kmax = 0;
    MPoly poly;

    // Exponent map for output: {"F0": 2, "V": 3, ...}.
    std::vector<std::pair<std::string, int>> labelled(const Exponents& e) const;
    std::string to_string() const;
};

struct UniversalPreparation {
    std::vector<UniversalSeries> P;  // P_0 .. P_{n-1}
    std::vector<UniversalSeries> U;  // U_0 .. U_{u_xprec-1}
    int u_xprec = 0;
    int sweeps = 0;
};

// P and U of the universal Weierstrass preparation of
// F = F_0 + F_1 X + ... + F_kmax X^kmax (F_k = 0 for k > kmax), modulo
// (F_0, ..., F_{n-1})^{D+1}. U is returned to X-precision u_xprec
// (defaults to kmax + 1; 0 skips it).
UniversalPreparation universal_prepare(int n, int D, int kmax, int u_xprec = -1);

// The closed n = 1 double sum for P_0, truncated at F_0-degree D. Every
// rational coefficient is checked to be an integer (IntegralityViolation).
UniversalSeries bgw_p0(int D, int kmax);

// Which normalization the closed n = 1 formula computes, compared with
// universal_prepare(1, D, kmax).
struct BgwComparison {
    bool equals_p0 = false;            // bgw == P_0
    bool equals_f1_times_p0 = false;   // bgw == F_1 * P_0
    int D = 0;
    int kmax = 0;
};
BgwComparison compare_bgw_with_prepare(int D, int kmax);

// ResPol_n in variables P_0..P_{n-1}, G_0..G_gmax built from monomial
// symmetric functions of the roots; exact modulo P-degree > dmax / n when
// gmax >= dmax.
UniversalSeries respol_symmetric(int n, int dmax, int gmax);

// Evaluates s at O_K values. The certified precision is
// min(N, (order + 1) * min val(small values)).
CertifiedElement specialize(const UniversalSeries& s, const std::map<std::string, OKElement>& assignment);

// {"F0": f_0, ..., "F<kmax>": f_kmax}
std::map<std::string, OKElement> assignment_from_series(const PowerSeries& f, int kmax);
// {"P0": p_0, ..., "G0": g_0, ...}
std::map<std::string, OKElement> assignment_for_respol(const DistinguishedPoly& p, const Polynomial& g, int gmax);

}  // namespace padicres
