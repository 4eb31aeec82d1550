#include "padicres/universal.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "padicres/errors.hpp"

namespace padicres {

namespace {

int abs_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += std::abs(x);
    return d;
}

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    const int da = abs_degree(a), db = abs_degree(b);
    if (da != db) return da < db;
    return a > b;
}

MPoly MPoly::constant(int nvars, const mpz_class& c) { return monomial(nvars, Exponents(nvars, 0), c); }

MPoly MPoly::monomial(int nvars, const Exponents& exps, const mpz_class& c) {
    if (static_cast<int>(exps.size()) != nvars) throw UsageError("exponent vector has the wrong length");
    MPoly m(nvars);
    m.add_term(exps, c);
    return m;
}

std::vector<std::pair<Exponents, mpz_class>> MPoly::sorted_terms() const {
    std::vector<std::pair<Exponents, mpz_class>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return GradedLex{}(a.first, b.first); });
    return out;
}

void MPoly::add_term(const Exponents& exps, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& b) {
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& b) {
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

int Truncation::small_degree(const Exponents& e) const {
    int d = 0;
    for (int i : small) d += e[i];
    return d;
}

MPoly multiply(const MPoly& a, const MPoly& b, const Truncation& tr) {
    MPoly r(a.nvars());
    if (a.is_zero() || b.is_zero()) return r;
    Exponents e(a.nvars());
    mpz_class c;
    for (const auto& [ea, ca] : a.terms()) {
        const int da = tr.small_degree(ea);
        if (da > tr.order) continue;
        for (const auto& [eb, cb] : b.terms()) {
            if (da + tr.small_degree(eb) > tr.order) continue;
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            c = ca * cb;
            r.add_term(e, c);
        }
        if (r.size() > tr.max_terms)
            throw TruncationOverflow("product exceeds " + std::to_string(tr.max_terms) + " terms");
    }
    return r;
}

std::vector<std::pair<std::string, int>> UniversalSeries::labelled(const Exponents& e) const {
    std::vector<std::pair<std::string, int>> out;
    int v = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (static_cast<int>(i) == inverted && e[i] < 0)
            v = -e[i];
        else
            out.emplace_back(names[i], e[i]);
    }
    if (v > 0) out.emplace_back("V", v);
    return out;
}

std::string UniversalSeries::to_string() const {
    if (poly.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : poly.sorted_terms()) {
        const bool neg = c < 0;
        const mpz_class mag = neg ? mpz_class(-c) : c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        const auto vars = labelled(e);
        if (mag != 1 || vars.empty()) os << mag.get_str() << (vars.empty() ? "" : "*");
        for (size_t k = 0; k < vars.size(); ++k) {
            if (k > 0) os << "*";
            os << vars[k].first;
            if (vars[k].second != 1) os << "^" << vars[k].second;
        }
    }
    return os.str();
}

namespace {

// Series in X with MPoly coefficients, known mod X^size().
using XSeries = std::vector<MPoly>;

XSeries xs_mul(const XSeries& a, const XSeries& b, const Truncation& tr) {
    const size_t len = std::min(a.size(), b.size());
    const int nv = a.empty() ? 0 : a[0].nvars();
    XSeries c(len, MPoly(nv));
    for (size_t i = 0; i < len; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j < len; ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] += multiply(a[i], b[j], tr);
        }
    }
    return c;
}

// Inverse in the truncated ring. The I-degree-0 part must be a single term
// +-(inverted variable)^k.
MPoly ring_inverse(const MPoly& a, const Truncation& tr, int inverted) {
    const int nv = a.nvars();
    std::optional<std::pair<Exponents, mpz_class>> lead;
    for (const auto& [e, c] : a.terms()) {
        if (tr.small_degree(e) != 0) continue;
        if (lead) throw NotAUnit("degree-0 part is not a monomial");
        lead.emplace(e, c);
    }
    if (!lead || abs(lead->second) != 1) throw NotAUnit("degree-0 part is not a unit");
    for (int i = 0; i < nv; ++i)
        if (i != inverted && lead->first[i] != 0) throw NotAUnit("degree-0 part involves a non-inverted variable");
    Exponents inv_e(nv);
    for (int i = 0; i < nv; ++i) inv_e[i] = -lead->first[i];
    const MPoly m_inv = MPoly::monomial(nv, inv_e, lead->second);

    MPoly rest = a;
    rest.add_term(lead->first, -lead->second);
    const MPoly b = -multiply(m_inv, rest, tr);  // a = m (1 - b), b in I
    MPoly sum = MPoly::constant(nv, 1), power = sum;
    for (int j = 1; j <= tr.order; ++j) {
        power = multiply(power, b, tr);
        if (power.is_zero()) break;
        sum += power;
    }
    return multiply(m_inv, sum, tr);
}

XSeries xs_inverse(const XSeries& a, const Truncation& tr, int inverted) {
    XSeries u(a.size(), MPoly(a.empty() ? 0 : a[0].nvars()));
    if (a.empty()) return u;
    u[0] = ring_inverse(a[0], tr, inverted);
    for (size_t k = 1; k < a.size(); ++k) {
        MPoly acc(a[0].nvars());
        for (size_t j = 1; j <= k; ++j)
            if (!a[j].is_zero() && !u[k - j].is_zero()) acc += multiply(a[j], u[k - j], tr);
        u[k] = -multiply(u[0], acc, tr);
    }
    return u;
}

bool xs_is_zero(const XSeries& a) {
    return std::all_of(a.begin(), a.end(), [](const MPoly& c) { return c.is_zero(); });
}

UniversalSeries make_series(std::vector<std::string> names, std::vector<int> small, int order, int inverted, int n,
                            int kmax, MPoly poly) {
    UniversalSeries s;
    s.names = std::move(names);
    s.small = std::move(small);
    s.order = order;
    s.inverted = inverted;
    s.n = n;
    s.kmax = kmax;
    s.poly = std::move(poly);
    return s;
}

std::vector<std::string> f_names(int kmax) {
    std::vector<std::string> names;
    for (int k = 0; k <= kmax; ++k) names.push_back("F" + std::to_string(k));
    return names;
}

}  // namespace

UniversalPreparation universal_prepare(int n, int D, int kmax, int u_xprec) {
    if (n < 1) throw UsageError("n must be >= 1");
    if (D < 1) throw UsageError("D must be >= 1");
    if (kmax < n) throw UsageError("kmax must be >= n");
    if (u_xprec < 0) u_xprec = kmax + 1;
    const int nv = kmax + 1;
    Truncation tr;
    for (int i = 0; i < n; ++i) tr.small.push_back(i);
    tr.order = D;

    // g_k lives in I^k, so D + 1 sweeps leave nothing; each costs n in X.
    const int W = u_xprec + n * (D + 2);
    auto var = [&](int k) {
        Exponents e(nv, 0);
        e[k] = 1;
        return MPoly::monomial(nv, e);
    };
    XSeries T(W, MPoly(nv)), E(W - n, MPoly(nv));
    for (int k = 0; k < n; ++k) T[k] = var(k);
    for (int k = n; k <= kmax && k < W; ++k) E[k - n] = var(k);

    UniversalPreparation out;
    out.u_xprec = u_xprec;
    std::vector<MPoly> r(n, MPoly(nv));
    XSeries q(W - n, MPoly(nv));
    try {
        const XSeries Einv = xs_inverse(E, tr, n);
        XSeries g(W, MPoly(nv));
        g[n] = MPoly::constant(nv, 1);
        while (!xs_is_zero(g)) {
            if (out.sweeps > D) throw std::logic_error("universal division did not terminate");
            ++out.sweeps;
            for (int i = 0; i < n; ++i) r[i] += g[i];
            const XSeries high(g.begin() + n, g.end());
            const XSeries qk = xs_mul(high, Einv, tr);
            for (size_t i = 0; i < qk.size(); ++i) q[i] += qk[i];
            XSeries next = xs_mul(qk, T, tr);
            for (auto& c : next) c = -c;
            g = std::move(next);
        }
        q.resize(u_xprec);
        const XSeries U = u_xprec > 0 ? xs_inverse(q, tr, n) : XSeries{};
        for (int i = 0; i < n; ++i) out.P.push_back(make_series(f_names(kmax), tr.small, D, n, n, kmax, -r[i]));
        for (const auto& c : U) out.U.push_back(make_series(f_names(kmax), tr.small, D, n, n, kmax, c));
    } catch (const TruncationOverflow& e) {
        throw TruncationOverflow(std::string(e.what()) + "; reached I-order " +
                                 std::to_string(std::max(0, out.sweeps - 1)) + " of " + std::to_string(D));
    }
    return out;
}

UniversalSeries bgw_p0(int D, int kmax) {
    if (D < 1) throw UsageError("D must be >= 1");
    if (kmax < 1) throw UsageError("kmax must be >= 1");
    const int nv = kmax + 1;
    MPoly poly(nv);
    std::vector<mpz_class> fact(2 * D + 1);
    fact[0] = 1;
    for (size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<unsigned long>(i);

    // F_0-degree m + 1 <= D, so m runs over 0..D-1.
    for (int m = 0; m < D; ++m) {
        std::vector<int> mult(m + 1, 0);  // mult[k] = i_k, parts of size k
        std::function<void(int, int)> rec = [&](int part, int remaining) {
            if (remaining == 0) {
                int j = 0;
                for (int k = 1; k <= m; ++k) j += mult[k];
                mpz_class denom = fact[m + 1];
                for (int k = 1; k <= m; ++k) denom *= fact[mult[k]];
                if (!mpz_divisible_p(fact[m + j].get_mpz_t(), denom.get_mpz_t()))
                    throw IntegralityViolation("coefficient " + fact[m + j].get_str() + "/" + denom.get_str() +
                                               " at F_0-degree " + std::to_string(m + 1));
                mpz_class c = fact[m + j] / denom;
                if ((m + j) % 2 != 0) c = -c;
                Exponents e(nv, 0);
                e[0] = m + 1;
                e[1] = -(m + j);
                for (int k = 1; k <= m; ++k) {
                    if (mult[k] == 0) continue;
                    if (k + 1 > kmax) return;  // F_{k+1} = 0
                    e[k + 1] = mult[k];
                }
                poly.add_term(e, c);
                return;
            }
            if (part > remaining) return;
            for (int count = remaining / part; count >= 0; --count) {
                mult[part] = count;
                rec(part + 1, remaining - count * part);
            }
            mult[part] = 0;
        };
        rec(1, m);
    }
    return make_series(f_names(kmax), {0}, D, 1, 1, kmax, std::move(poly));
}

BgwComparison compare_bgw_with_prepare(int D, int kmax) {
    const UniversalSeries bgw = bgw_p0(D, kmax);
    const UniversalPreparation prep = universal_prepare(1, D, kmax, 0);
    const MPoly& p0 = prep.P[0].poly;
    Exponents f1(kmax + 1, 0);
    f1[1] = 1;
    Truncation tr{{0}, D};
    const MPoly f1p0 = multiply(MPoly::monomial(kmax + 1, f1), p0, tr);
    return {bgw.poly == p0, bgw.poly == f1p0, D, kmax};
}

namespace {

// Monomial symmetric polynomial m_d in n variables, written in elementary
// symmetric polynomials: map from (b_1..b_n) to the coefficient of
// e_1^{b_1} ... e_n^{b_n}.
std::map<Exponents, mpz_class> monomial_to_elementary(const std::vector<int>& d, const std::vector<MPoly>& elem) {
    const int n = static_cast<int>(d.size());
    const Truncation none{{}, 0};
    MPoly s(n);
    std::vector<int> perm = d;
    std::sort(perm.begin(), perm.end());
    do {
        s.add_term(perm, 1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<Exponents, mpz_class> out;
    while (!s.is_zero()) {
        const auto& [a, c] = *s.terms().rbegin();  // lex leading term
        Exponents b(n);
        for (int k = 0; k < n; ++k) b[k] = a[k] - (k + 1 < n ? a[k + 1] : 0);
        if (std::any_of(b.begin(), b.end(), [](int x) { return x < 0; }))
            throw std::logic_error("leading term of a symmetric polynomial is not a partition");
        const mpz_class coeff = c;
        out[b] += coeff;
        MPoly prod = MPoly::constant(n, coeff);
        for (int k = 0; k < n; ++k)
            for (int t = 0; t < b[k]; ++t) prod = multiply(prod, elem[k], none);
        s -= prod;
    }
    return out;
}

}  // namespace

UniversalSeries respol_symmetric(int n, int dmax, int gmax) {
    if (n < 1) throw UsageError("n must be >= 1");
    if (dmax < 0 || gmax < 0) throw UsageError("dmax and gmax must be >= 0");
    const int nv = n + gmax + 1;
    const int order = dmax / n;

    std::vector<MPoly> elem;  // e_1..e_n in Z_1..Z_n
    for (int k = 1; k <= n; ++k) {
        MPoly e(n);
        std::vector<int> sel(n, 0);
        std::fill(sel.end() - k, sel.end(), 1);
        do {
            e.add_term(sel, 1);
        } while (std::next_permutation(sel.begin(), sel.end()));
        elem.push_back(std::move(e));
    }

    MPoly poly(nv);
    std::vector<int> d(n, 0);
    std::function<void(int, int, int)> rec = [&](int idx, int lo, int budget) {
        if (idx == n) {
            int total = std::accumulate(d.begin(), d.end(), 0);
            for (const auto& [b, c] : monomial_to_elementary(d, elem)) {
                Exponents e(nv, 0);
                int pdeg = 0;
                for (int k = 1; k <= n; ++k) {
                    e[n - k] += b[k - 1];
                    pdeg += b[k - 1];
                }
                if (pdeg > order) continue;
                for (int x : d) e[n + x] += 1;
                poly.add_term(e, total % 2 == 0 ? c : mpz_class(-c));
            }
            return;
        }
        for (int x = lo; x <= std::min(gmax, budget); ++x) {
            d[idx] = x;
            rec(idx + 1, x, budget - x);
        }
    };
    rec(0, 0, dmax);

    std::vector<std::string> names;
    std::vector<int> small;
    for (int i = 0; i < n; ++i) {
        names.push_back("P" + std::to_string(i));
        small.push_back(i);
    }
    for (int k = 0; k <= gmax; ++k) names.push_back("G" + std::to_string(k));
    return make_series(std::move(names), std::move(small), order, -1, n, gmax, std::move(poly));
}

CertifiedElement specialize(const UniversalSeries& s, const std::map<std::string, OKElement>& assignment) {
    if (assignment.empty()) throw UsageError("empty assignment");
    const FieldRef field = assignment.begin()->second.field();
    const int N = field->precision();
    const int nv = static_cast<int>(s.names.size());

    std::vector<bool> used(nv, false), negative(nv, false);
    for (const auto& [e, c] : s.poly.terms())
        for (int i = 0; i < nv; ++i) {
            if (e[i] != 0) used[i] = true;
            if (e[i] < 0) negative[i] = true;
        }

    std::vector<OKElement> value(nv), inverse(nv);
    for (int i = 0; i < nv; ++i) {
        const bool is_small = std::find(s.small.begin(), s.small.end(), i) != s.small.end();
        if (!used[i] && !is_small) continue;
        auto it = assignment.find(s.names[i]);
        if (it == assignment.end()) {
            if (used[i]) throw UsageError("no value for variable " + s.names[i]);
            continue;
        }
        require_same_field(field, it->second.field());
        value[i] = it->second;
        if (is_small && value[i].valuation().value < 1 && value[i].valuation().exact)
            throw PreconditionViolation(s.names[i] + " must have positive valuation");
        if (i == s.inverted) {
            if (!value[i].is_unit()) throw NotAUnit(s.names[i] + " must be a unit");
            if (negative[i]) inverse[i] = value[i].inverse();
        }
    }

    int min_small = N;
    for (int i : s.small)
        if (value[i].field()) min_small = std::min(min_small, value[i].valuation().value);
    const long tail = static_cast<long>(s.order + 1) * min_small;
    const int precision = static_cast<int>(std::min<long>(N, tail));

    OKElement total = OKElement::zero(field);
    for (const auto& [e, c] : s.poly.terms()) {
        OKElement term(field, c);
        for (int i = 0; i < nv; ++i) {
            if (e[i] > 0) term *= value[i].pow(static_cast<unsigned>(e[i]));
            if (e[i] < 0) term *= inverse[i].pow(static_cast<unsigned>(-e[i]));
        }
        total += term;
    }
    return {total.reduced(precision), precision};
}

std::map<std::string, OKElement> assignment_from_series(const PowerSeries& f, int kmax) {
    std::map<std::string, OKElement> a;
    for (int k = 0; k <= kmax; ++k)
        a.emplace("F" + std::to_string(k), k < f.xprec() ? f.coeff(k) : OKElement::zero(f.field()));
    return a;
}

std::map<std::string, OKElement> assignment_for_respol(const DistinguishedPoly& p, const Polynomial& g, int gmax) {
    std::map<std::string, OKElement> a;
    for (int i = 0; i < p.degree(); ++i) a.emplace("P" + std::to_string(i), p.lows()[i]);
    for (int k = 0; k <= gmax; ++k) a.emplace("G" + std::to_string(k), g.coeff(k));
    return a;
}

}  // namespace padicres
