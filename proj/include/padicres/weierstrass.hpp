#pragma once

// Weierstrass division and preparation over O_K at finite precision.
//
// Input series are read with polynomial semantics: the stored coefficients
// c_0..c_{M-1} are taken as an exact polynomial. All outputs are then exact
// modulo pi^N, and the product contracts hold modulo (pi^N, X^M).

#include <vector>

#include "padicres/polynomial.hpp"
#include "padicres/series.hpp"

namespace padicres {

// Monic X^n + p_{n-1} X^{n-1} + ... + p_0 with every p_i in m_K.
class DistinguishedPoly {
public:
    // Throws UsageError when some p_i is a unit.
    DistinguishedPoly(FieldRef field, std::vector<OKElement> lows);
    static DistinguishedPoly from_polynomial(const Polynomial& p);

    const FieldRef& field() const { return field_; }
    int degree() const { return static_cast<int>(lows_.size()); }
    const std::vector<OKElement>& lows() const { return lows_; }
    Polynomial to_polynomial() const;

    friend bool operator==(const DistinguishedPoly& a, const DistinguishedPoly& b);

private:
    FieldRef field_;
    std::vector<OKElement> lows_;
};

struct WeierstrassDivision {
    PowerSeries quotient;     // X-precision min(M_g, M_f)
    Polynomial remainder;     // degree < wideg(f)
    int sweeps = 0;           // successive-approximation passes used
};

// g = q f + r with deg r < n = wideg(f).
WeierstrassDivision weierstrass_divide(const PowerSeries& g, const PowerSeries& f);

struct WeierstrassFactorization {
    DistinguishedPoly p;
    PowerSeries u;            // unit, X-precision M

    // p * u == f mod (pi^N, X^M)
    bool reconstructs(const PowerSeries& f) const;
};

WeierstrassFactorization weierstrass_prepare(const PowerSeries& f);

}  // namespace padicres
