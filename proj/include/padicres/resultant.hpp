#pragma once

// Res_n and Disc_n of power series over O_K.
//
// res_n(f, g) is the product of g over the roots of f in the open unit disk.
// It is computed as the determinant of multiplication by (g mod p) on
// O_K[X]/(p), p the distinguished factor of f, with a division-free
// (Berkowitz) characteristic polynomial.

#include <string>
#include <vector>

#include "padicres/ok_arith.hpp"
#include "padicres/polynomial.hpp"
#include "padicres/series.hpp"
#include "padicres/weierstrass.hpp"

namespace padicres {

// A value known modulo pi^precision (precision <= N); the stored element is
// reduced to that precision.
struct CertifiedElement {
    OKElement value;
    int precision = 0;

    Valuation valuation() const;
    bool certified_nonzero() const { return valuation().exact; }
};

struct ReducedPoly {
    Polynomial poly;    // degree < n
    int precision = 0;  // certified pi-adic precision
};

// g mod p. A series g of X-precision M leaves an unknown tail whose image
// mod p has valuation >= floor(M / n); the reported precision is lowered
// accordingly.
ReducedPoly reduce_mod_distinguished(const PowerSeries& g, const DistinguishedPoly& p);
ReducedPoly reduce_mod_distinguished(const Polynomial& g, const DistinguishedPoly& p);

// det of a square matrix over O_K / pi^N, division free.
OKElement berkowitz_determinant(const std::vector<std::vector<OKElement>>& a);
// Coefficients of det(xI - A), leading coefficient first.
std::vector<OKElement> berkowitz_charpoly(const std::vector<std::vector<OKElement>>& a);

CertifiedElement respol(const DistinguishedPoly& p, const PowerSeries& g);
CertifiedElement respol(const DistinguishedPoly& p, const Polynomial& g);

CertifiedElement res_n(const PowerSeries& f, const PowerSeries& g);
CertifiedElement res_n(const PowerSeries& f, const Polynomial& g);
CertifiedElement disc_n(const PowerSeries& f);

struct CommonRootVerdict {
    enum class Kind { no_common_root, possible_common_root };
    Kind kind;
    CertifiedElement resultant;

    std::string describe() const;
};

CommonRootVerdict common_root_test(const PowerSeries& f, const PowerSeries& g);

}  // namespace padicres
