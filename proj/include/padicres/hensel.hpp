#pragma once

// Hensel factorization of restricted power series: f = P U where P is monic
// of degree d = mu_max - mu_min carrying exactly the roots on the unit
// sphere, and U reduces to f_{mu_max} X^{mu_min}.
//
// A restricted series at finite precision is a PowerSeries whose
// coefficients of index >= M are taken to be O(pi^N); it is therefore
// handled as the polynomial c_0 + ... + c_{M-1} X^{M-1}.

#include <vector>

#include "padicres/polynomial.hpp"
#include "padicres/series.hpp"

namespace padicres {

struct MuIndices {
    int n = 0;  // mu_min
    int d = 0;  // mu_max - mu_min
};

MuIndices mu_indices(const PowerSeries& f);

struct HenselFactorization {
    MuIndices mu;
    Polynomial P;   // monic, degree d, P(0) a unit
    PowerSeries U;  // X-precision M
    int rounds = 0;

    // P * U == f mod (pi^N, X^M)
    bool reconstructs(const PowerSeries& f) const;
};

HenselFactorization hensel_factor(const PowerSeries& f);

// Monic factor of F whose roots all have valuation 0.
Polynomial slope_zero_factor(const Polynomial& F);

namespace fp {

// Polynomials over F_p as coefficient vectors (low degree first, trimmed).
using Poly = std::vector<long>;

Poly trim(Poly a);
Poly sub(const Poly& a, const Poly& b, long p);
Poly mul(const Poly& a, const Poly& b, long p);
// a = q b + r
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, long p);
// s a + t b = 1 for coprime a, b; throws UsageError otherwise.
std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, long p);

}  // namespace fp

}  // namespace padicres
