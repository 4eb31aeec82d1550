#include "padicres/resultant.hpp"

#include <algorithm>

namespace padicres {

Valuation CertifiedElement::valuation() const {
    const Valuation v = value.valuation();
    if (!v.exact || v.value >= precision) return Valuation::at_least(precision);
    return v;
}

namespace {

ReducedPoly reduce_polynomial(const Polynomial& g, const DistinguishedPoly& p, int precision) {
    const FieldRef& field = p.field();
    if (p.degree() == 0) return {Polynomial(field), precision};
    // X^k mod p has valuation >= floor(k/n): terms of degree >= nN vanish.
    const int cap = p.degree() * field->precision();
    auto [q, r] = g.truncated(cap).divrem_monic(p.to_polynomial());
    std::vector<OKElement> c;
    for (const auto& a : r.coeffs()) c.push_back(a.reduced(precision));
    return {Polynomial(field, std::move(c)), precision};
}

CertifiedElement respol_reduced(const DistinguishedPoly& p, const ReducedPoly& gbar) {
    const FieldRef& field = p.field();
    const int n = p.degree();
    // Column j of the multiplication-by-gbar matrix is X^j gbar mod p.
    std::vector<std::vector<OKElement>> a(n, std::vector<OKElement>(n, OKElement::zero(field)));
    std::vector<OKElement> v(n, OKElement::zero(field));
    for (int i = 0; i < n; ++i) v[i] = gbar.poly.coeff(i);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) a[i][j] = v[i];
        const OKElement lead = v[n - 1];
        for (int i = n - 1; i > 0; --i) v[i] = v[i - 1];
        v[0] = OKElement::zero(field);
        if (!lead.is_zero())
            for (int i = 0; i < n; ++i) v[i] -= lead * p.lows()[i];
    }
    return {berkowitz_determinant(a).reduced(gbar.precision), gbar.precision};
}

}  // namespace

ReducedPoly reduce_mod_distinguished(const PowerSeries& g, const DistinguishedPoly& p) {
    require_same_field(g.field(), p.field());
    const int N = p.field()->precision();
    const int n = p.degree();
    const int precision = n == 0 ? N : std::min(N, g.xprec() / n);
    return reduce_polynomial(g.low_part(g.xprec()), p, precision);
}

ReducedPoly reduce_mod_distinguished(const Polynomial& g, const DistinguishedPoly& p) {
    require_same_field(g.field(), p.field());
    return reduce_polynomial(g, p, p.field()->precision());
}

std::vector<OKElement> berkowitz_charpoly(const std::vector<std::vector<OKElement>>& a) {
    const size_t n = a.size();
    if (n == 0) return {};
    const FieldRef field = a[0][0].field();
    const OKElement zero = OKElement::zero(field);
    std::vector<OKElement> vect{OKElement::one(field)};
    for (size_t r = 0; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R S, -R A_r S, ..., -R A_r^{r-1} S
        std::vector<OKElement> t(r + 2, zero);
        t[0] = OKElement::one(field);
        t[1] = -a[r][r];
        std::vector<OKElement> col(r, zero);
        for (size_t i = 0; i < r; ++i) col[i] = a[i][r];
        for (size_t k = 0; k < r; ++k) {
            OKElement dot = zero;
            for (size_t i = 0; i < r; ++i) dot += a[r][i] * col[i];
            t[k + 2] = -dot;
            if (k + 1 < r) {
                std::vector<OKElement> next(r, zero);
                for (size_t i = 0; i < r; ++i)
                    for (size_t j = 0; j < r; ++j) next[i] += a[i][j] * col[j];
                col = std::move(next);
            }
        }
        std::vector<OKElement> next(r + 2, zero);
        for (size_t i = 0; i < r + 2; ++i)
            for (size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * vect[j];
        vect = std::move(next);
    }
    return vect;
}

OKElement berkowitz_determinant(const std::vector<std::vector<OKElement>>& a) {
    if (a.empty()) throw UsageError("determinant of an empty matrix needs a field; use respol");
    for (const auto& row : a)
        if (row.size() != a.size()) throw UsageError("determinant of a non-square matrix");
    const auto cp = berkowitz_charpoly(a);
    const OKElement last = cp.back();
    return a.size() % 2 == 0 ? last : -last;
}

CertifiedElement respol(const DistinguishedPoly& p, const PowerSeries& g) {
    if (p.degree() == 0) return {OKElement::one(p.field()), p.field()->precision()};
    return respol_reduced(p, reduce_mod_distinguished(g, p));
}

CertifiedElement respol(const DistinguishedPoly& p, const Polynomial& g) {
    if (p.degree() == 0) return {OKElement::one(p.field()), p.field()->precision()};
    return respol_reduced(p, reduce_mod_distinguished(g, p));
}

CertifiedElement res_n(const PowerSeries& f, const PowerSeries& g) {
    require_same_field(f.field(), g.field());
    if (wideg(f) == 0) return {OKElement::one(f.field()), f.field()->precision()};
    return respol(weierstrass_prepare(f).p, g);
}

CertifiedElement res_n(const PowerSeries& f, const Polynomial& g) {
    require_same_field(f.field(), g.field());
    if (wideg(f) == 0) return {OKElement::one(f.field()), f.field()->precision()};
    return respol(weierstrass_prepare(f).p, g);
}

CertifiedElement disc_n(const PowerSeries& f) { return res_n(f, ps_derivative(f)); }

std::string CommonRootVerdict::describe() const {
    if (kind == Kind::no_common_root) return "NoCommonRoot";
    return "PossibleCommonRoot(precision " + std::to_string(resultant.precision) + ")";
}

CommonRootVerdict common_root_test(const PowerSeries& f, const PowerSeries& g) {
    CertifiedElement r = res_n(f, g);
    const auto kind = r.certified_nonzero() ? CommonRootVerdict::Kind::no_common_root
                                            : CommonRootVerdict::Kind::possible_common_root;
    return {kind, std::move(r)};
}

}  // namespace padicres
