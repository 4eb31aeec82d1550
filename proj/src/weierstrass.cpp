#include "padicres/weierstrass.hpp"

#include <stdexcept>

namespace padicres {

DistinguishedPoly::DistinguishedPoly(FieldRef field, std::vector<OKElement> lows)
    : field_(std::move(field)), lows_(std::move(lows)) {
    for (size_t i = 0; i < lows_.size(); ++i) {
        require_same_field(field_, lows_[i].field());
        if (lows_[i].is_unit())
            throw UsageError("coefficient p_" + std::to_string(i) + " is a unit; polynomial is not distinguished");
    }
}

DistinguishedPoly DistinguishedPoly::from_polynomial(const Polynomial& p) {
    if (!p.is_monic()) throw UsageError("distinguished polynomial must be monic");
    std::vector<OKElement> lows(p.coeffs().begin(), p.coeffs().end() - 1);
    return DistinguishedPoly(p.field(), std::move(lows));
}

Polynomial DistinguishedPoly::to_polynomial() const {
    std::vector<OKElement> c = lows_;
    c.push_back(OKElement::one(field_));
    return Polynomial(field_, std::move(c));
}

bool operator==(const DistinguishedPoly& a, const DistinguishedPoly& b) {
    if (a.lows_.size() != b.lows_.size()) return false;
    for (size_t i = 0; i < a.lows_.size(); ++i)
        if (!(a.lows_[i] == b.lows_[i])) return false;
    return true;
}

WeierstrassDivision weierstrass_divide(const PowerSeries& g, const PowerSeries& f) {
    require_same_field(g.field(), f.field());
    const int n = wideg(f);
    const int M = std::min(g.xprec(), f.xprec());
    if (M <= n)
        throw InsufficientXPrecision("X-precision " + std::to_string(M) + " does not exceed wideg " +
                                     std::to_string(n));
    const FieldRef& field = f.field();
    const int N = field->precision();

    // Every sweep consumes n coefficients of X-precision and gains at least
    // one power of pi, so N sweeps at working precision M + n(N+1) leave
    // the quotient known through X^{M-1}.
    const int W = M + n * (N + 1);
    const PowerSeries fw = f.padded(W);
    const Polynomial t = fw.low_part(n);
    const PowerSeries unit_inv = fw.shifted_down(n).inverse();

    WeierstrassDivision out{PowerSeries(field, M), Polynomial(field), 0};
    PowerSeries gk = g.padded(W);
    std::optional<PowerSeries> q;
    while (!gk.is_zero()) {
        if (out.sweeps > N) throw std::logic_error("Weierstrass division failed to converge");
        out.remainder += gk.low_part(n);
        PowerSeries qk = gk.shifted_down(n) * unit_inv;
        q = q ? *q + qk : qk;
        gk = n == 0 ? PowerSeries(field, qk.xprec()) : -(qk * t.to_series(qk.xprec()));
        ++out.sweeps;
    }
    if (q) out.quotient = q->truncated(M);
    return out;
}

bool WeierstrassFactorization::reconstructs(const PowerSeries& f) const {
    const int M = f.xprec();
    if (u.xprec() < M || p.degree() >= M) return false;
    const PowerSeries prod = p.to_polynomial().to_series(M) * u.truncated(M);
    return prod == f;
}

WeierstrassFactorization weierstrass_prepare(const PowerSeries& f) {
    const int n = wideg(f);
    const FieldRef& field = f.field();
    const auto div = weierstrass_divide(PowerSeries::monomial(field, n, f.xprec()), f);
    std::vector<OKElement> lows;
    lows.reserve(n);
    for (int i = 0; i < n; ++i) lows.push_back(-div.remainder.coeff(i));
    WeierstrassFactorization fac{DistinguishedPoly(field, std::move(lows)), div.quotient.inverse()};
    if (!fac.reconstructs(f)) throw std::logic_error("Weierstrass preparation failed its reconstruction check");
    return fac;
}

}  // namespace padicres
