#include "padicres/hensel.hpp"

#include <stdexcept>
#include <utility>

namespace padicres {

namespace fp {

namespace {

long mod(long a, long p) {
    a %= p;
    return a < 0 ? a + p : a;
}

long inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = mod(a, p);
    while (nr != 0) {
        const long q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw UsageError("residue not invertible mod p");
    return mod(t, p);
}

}  // namespace

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly sub(const Poly& a, const Poly& b, long p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = mod((i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0), p);
    return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
    return trim(std::move(r));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, long p) {
    const Poly bb = trim(b);
    if (bb.empty()) throw UsageError("division by zero polynomial over F_p");
    Poly r = trim(a);
    if (r.size() < bb.size()) return {{}, r};
    Poly q(r.size() - bb.size() + 1, 0);
    const long li = inv(bb.back(), p);
    for (size_t k = r.size(); k-- >= bb.size();) {
        const long c = mod(r[k] * li, p);
        q[k - bb.size() + 1] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < bb.size(); ++j) r[k - bb.size() + 1 + j] = mod(r[k - bb.size() + 1 + j] - c * bb[j], p);
    }
    return {trim(std::move(q)), trim(std::move(r))};
}

std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, long p) {
    // Extended Euclid: r0 = a, r1 = b with s_i a + t_i b = r_i.
    Poly r0 = trim(a), r1 = trim(b);
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1, p);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, sub(s0, mul(q, s1, p), p));
        t0 = std::exchange(t1, sub(t0, mul(q, t1, p), p));
    }
    if (r0.size() != 1) throw UsageError("polynomials are not coprime over F_p");
    const long c = inv(r0[0], p);
    return {mul(s0, {c}, p), mul(t0, {c}, p)};
}

}  // namespace fp

MuIndices mu_indices(const PowerSeries& f) {
    int lo = -1, hi = -1;
    for (int i = 0; i < f.xprec(); ++i) {
        if (f.coeff_residue(i) == 0) continue;
        if (lo < 0) lo = i;
        hi = i;
    }
    if (lo < 0) throw NoUnitCoefficient("no unit coefficient among c_0..c_" + std::to_string(f.xprec() - 1));
    return {lo, hi - lo};
}

namespace {

Polynomial lift(const FieldRef& field, const fp::Poly& a) {
    std::vector<OKElement> c;
    for (long x : a) c.emplace_back(field, x);
    return Polynomial(field, std::move(c));
}

int lifting_rounds(int N) {
    int r = 0;
    while ((1 << r) < N) ++r;
    return r + 1;
}

}  // namespace

bool HenselFactorization::reconstructs(const PowerSeries& f) const {
    const int M = f.xprec();
    if (P.degree() >= M || U.xprec() < M) return false;
    return P.to_series(M) * U.truncated(M) == f;
}

HenselFactorization hensel_factor(const PowerSeries& f) {
    const FieldRef& field = f.field();
    const long p = field->p();
    const MuIndices mu = mu_indices(f);
    const int M = f.xprec();
    if (mu.d == 0) return {mu, Polynomial::monomial(field, 0), f, 0};

    const Polynomial F = f.low_part(M);
    const int D = F.degree();
    const OKElement lead = f.coeff(mu.n + mu.d);
    const OKElement lead_inv = lead.inverse();

    std::vector<OKElement> pc;
    for (int j = 0; j <= mu.d; ++j) pc.push_back(f.coeff(mu.n + j) * lead_inv);
    Polynomial h(field, std::move(pc));                                        // P, monic
    Polynomial g = Polynomial::monomial(field, mu.n).scaled(lead);             // U

    // Residue Bezout relation s U + t P = 1 with deg s < d.
    fp::Poly pbar, ubar(static_cast<size_t>(mu.n) + 1, 0);
    for (const auto& a : h.coeffs()) pbar.push_back(a.residue());
    ubar[mu.n] = lead.residue();
    auto [sbar, tbar] = fp::bezout(ubar, pbar, p);
    sbar = fp::divrem(sbar, pbar, p).second;
    tbar = fp::divrem(fp::sub({1}, fp::mul(sbar, ubar, p), p), pbar, p).first;
    Polynomial s = lift(field, sbar), t = lift(field, tbar);

    const Polynomial one = Polynomial::monomial(field, 0);
    const int rounds = lifting_rounds(field->precision());
    for (int round = 0; round < rounds; ++round) {
        const Polynomial err = F - g * h;
        auto [q, r] = (s * err).divrem_monic(h);
        g = (g + t * err + q * g).truncated(D - mu.d + 1);
        h = h + r;
        const Polynomial b = s * g + t * h - one;
        auto [c, dd] = (s * b).divrem_monic(h);
        s = s - dd;
        t = (one - s * g).divrem_monic(h).first;
    }

    auto [U, rem] = F.divrem_monic(h);
    if (!rem.is_zero()) throw std::logic_error("Hensel lifting left a nonzero remainder");
    HenselFactorization out{mu, h, U.to_series(M), rounds};
    return out;
}

Polynomial slope_zero_factor(const Polynomial& F) {
    if (F.is_zero()) throw NoUnitCoefficient("zero polynomial has no unit coefficient");
    return hensel_factor(F.to_series(F.degree() + 1)).P;
}

}  // namespace padicres
