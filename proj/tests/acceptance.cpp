// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "padicres/dynamics.hpp"
#include "padicres/errors.hpp"
#include "padicres/hensel.hpp"
#include "padicres/resultant.hpp"
#include "padicres/universal.hpp"
#include "padicres/weierstrass.hpp"
#include "support.hpp"

using namespace padicres;
using namespace testing;

namespace {

// Pinned counts and limits.
constexpr int kAc1Cases = 210;          // >= 200
constexpr int kAc1MaxWideg = 5;
constexpr int kAc1MaxN = 32;
constexpr int kAc1MaxM = 64;
constexpr double kAc1Seconds = 10.0;
constexpr int kAc2Cases = 120;          // >= 100
constexpr double kAc2Seconds = 5.0;
constexpr int kAc3Cases = 120;          // >= 100
constexpr int kAc4Cases = 60;           // per kind
constexpr int kAc5MaxN = 16;
constexpr int kAc6Perturbations = 60;   // >= 50
constexpr int kAc7Cases = 120;          // >= 100
constexpr int kAc8Series = 102;         // >= 100, split over p = 2, 3, 5
constexpr int kAc8M = 400;
constexpr int kAc8MaxN = 2;
constexpr double kAc8Seconds = 60.0;
constexpr int kAc9N = 16;
constexpr int kAc9Budget = 500;
constexpr std::uint64_t kAc9Seed = 1;
constexpr int kAc10Cases = 60;          // >= 50
constexpr int kAc10D = 6;
constexpr int kAc10Kmax = 6;
constexpr int kAc10Precision = 7;       // compare mod 2^7
constexpr int kAc10BgwMaxD = 12;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body, double limit_s = 0) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << s << " s";
    if (limit_s > 0) {
        time << " (limit " << limit_s << " s)";
        if (s >= limit_s) o.pass = false;
    }
    if (!o.pass) ++failures;
    std::printf("AC%d %s %s: %s, %s\n", id, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                time.str().c_str());
    std::fflush(stdout);
}

std::string count(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total); }

Polynomial random_poly(Gen& g, const FieldRef& f, int max_deg) {
    std::vector<OKElement> c;
    const int d = static_cast<int>(g.uniform(0, max_deg));
    for (int i = 0; i <= d; ++i) c.push_back(g.element(f));
    return Polynomial(f, c);
}

// Roots in pi O_K of the base field Z_p (integers), as O_K elements.
std::vector<OKElement> base_roots(Gen& g, const FieldRef& f, int n) {
    std::vector<OKElement> r;
    for (int i = 0; i < n; ++i) {
        const mpz_class z = g.big_below(pow_p(f->p(), f->coefficient_precision())) * f->p();
        r.emplace_back(f, z);
    }
    return r;
}

OKElement product_over_roots(const std::vector<OKElement>& roots, const Polynomial& g) {
    OKElement r = OKElement::one(g.field());
    for (const auto& z : roots) r *= g.evaluate(z);
    return r;
}

Outcome ac1() {
    Gen g(1001);
    int ok = 0;
    for (int k = 0; k < kAc1Cases; ++k) {
        const int N = static_cast<int>(g.uniform(1, kAc1MaxN));
        const FieldRef f = k % 3 == 0 ? z2(N) : k % 3 == 1 ? z3(N) : ram2(N);
        const int n = static_cast<int>(g.uniform(0, kAc1MaxWideg));
        const int M = static_cast<int>(g.uniform(n + 1, kAc1MaxM));
        const PowerSeries s = g.series_with_wideg(f, n, M);
        const WeierstrassFactorization w = weierstrass_prepare(s);
        bool good = w.reconstructs(s) && w.p.degree() == n && w.u.xprec() == M && w.u.coeff(0).is_unit();
        for (const auto& c : w.p.lows()) good = good && c.valuation().value >= 1;
        ok += good;
    }
    return {ok == kAc1Cases, count(ok, kAc1Cases) + " reconstruct exactly over Z_2, Z_3, Q_2(sqrt 2)"};
}

Outcome ac2() {
    Gen g(1002);
    int ok = 0;
    for (int k = 0; k < kAc2Cases; ++k) {
        const FieldRef f = k % 2 == 0 ? z2(static_cast<int>(g.uniform(4, 24))) : z3(static_cast<int>(g.uniform(3, 16)));
        const int n = static_cast<int>(g.uniform(1, 4));
        const auto roots = base_roots(g, f, n);
        const DistinguishedPoly p = DistinguishedPoly::from_polynomial(Polynomial::from_roots(f, roots));
        const Polynomial gp = random_poly(g, f, 8);
        const CertifiedElement r = respol(p, gp);
        // the same g as a series long enough to need no tail allowance
        const CertifiedElement rs = respol(p, gp.to_series(std::max(n * f->precision() + 1, gp.degree() + 1)));
        ok += r.precision == f->precision() && r.value == product_over_roots(roots, gp) && rs.value == r.value &&
              rs.precision == f->precision();
    }
    return {ok == kAc2Cases, count(ok, kAc2Cases) + " equal the product over roots"};
}

Outcome ac3() {
    Gen g(1003);
    int ok = 0;
    for (int k = 0; k < kAc3Cases; ++k) {
        const FieldRef f = k % 3 == 0 ? z2(12) : k % 3 == 1 ? z3(8) : ram2(12);
        const int n = static_cast<int>(g.uniform(1, 3));
        const int M = n * f->precision() + 1;
        const PowerSeries fs = g.series_with_wideg(f, n, M);
        const PowerSeries a = g.series(f, M), b = g.series(f, M);
        const CertifiedElement ab = res_n(fs, a * b), ra = res_n(fs, a), rb = res_n(fs, b);
        ok += ab.precision == f->precision() && ab.value == ra.value * rb.value;
    }
    return {ok == kAc3Cases, count(ok, kAc3Cases) + " triples multiplicative, zero tolerance"};
}

Outcome ac4() {
    Gen g(1004);
    const int N = 24;
    int shared_ok = 0, disjoint_ok = 0, disjoint_total = 0;
    for (int k = 0; k < kAc4Cases; ++k) {
        const FieldRef f = k % 2 == 0 ? z2(N) : ram2(N);
        const OKElement z = g.in_ideal(f, 1);
        std::vector<OKElement> fr{z}, gr{z};
        for (int i = 0; i < g.uniform(0, 2); ++i) fr.push_back(g.in_ideal(f, 1));
        for (int i = 0; i < g.uniform(0, 2); ++i) gr.push_back(g.in_ideal(f, 1));
        PowerSeries u = g.series(f, 4 * N);
        u.set_coeff(0, g.unit(f));
        const PowerSeries fs = Polynomial::from_roots(f, fr).to_series(4 * N) * u;
        const PowerSeries gs = Polynomial::from_roots(f, gr).to_series(4 * N) * g.series(f, 4 * N);
        shared_ok += !res_n(fs, gs).certified_nonzero();
    }
    // Disjoint roots, pairwise distances of small valuation. res is
    // certified nonzero when the summed distance valuations stay below N.
    while (disjoint_total < kAc4Cases) {
        const FieldRef f = disjoint_total % 2 == 0 ? z2(N) : ram2(N);
        std::vector<OKElement> fr, gr;
        for (int i = 0; i < g.uniform(1, 3); ++i) fr.push_back(g.in_ideal(f, 1));
        for (int i = 0; i < g.uniform(1, 3); ++i) gr.push_back(g.in_ideal(f, 1));
        int total = 0;
        bool distinct = true;
        for (const auto& a : fr)
            for (const auto& b : gr) {
                const Valuation v = (a - b).valuation();
                distinct = distinct && v.exact;
                total += v.value;
            }
        if (!distinct || total >= N) continue;
        ++disjoint_total;
        PowerSeries u = g.series(f, 4 * N);
        u.set_coeff(0, g.unit(f));
        PowerSeries w = g.series(f, 4 * N);
        w.set_coeff(0, g.unit(f));
        const PowerSeries fs = Polynomial::from_roots(f, fr).to_series(4 * N) * u;
        const PowerSeries gs = Polynomial::from_roots(f, gr).to_series(4 * N) * w;
        const CertifiedElement r = res_n(fs, gs);
        disjoint_ok += r.certified_nonzero() && r.valuation().value == total;
    }
    return {shared_ok == kAc4Cases && disjoint_ok == disjoint_total,
            "shared root " + count(shared_ok, kAc4Cases) + " vanish, disjoint " + count(disjoint_ok, disjoint_total) +
                " certified nonzero with the predicted valuation"};
}

Outcome ac5() {
    Gen g(1005);
    int dbl = 0;
    const int cases = 40;
    for (int k = 0; k < cases; ++k) {
        const FieldRef f = k % 2 == 0 ? z2(12) : ram2(12);
        const OKElement z = g.in_ideal(f, 1);
        PowerSeries u = g.series(f, 40);
        u.set_coeff(0, g.unit(f));
        dbl += !disc_n(Polynomial::from_roots(f, {z, z}).to_series(40) * u).certified_nonzero();
    }
    int sq = 0, sq_total = 0;
    for (int N = 1; N <= kAc5MaxN; ++N) {
        for (const FieldRef& f : {z2(N), ram2(N)}) {
            ++sq_total;
            const CertifiedElement d = disc_n(PowerSeries::from_integers(f, {-2, 0, 1}, 2 * N + 2));
            sq += d.precision == N && d.value == OKElement(f, -8);
        }
    }
    return {dbl == cases && sq == sq_total, "double roots " + count(dbl, cases) + " vanish; disc(X^2-2) = -8 for " +
                                                count(sq, sq_total) + " (N <= 16, Z_2 and Q_2(sqrt 2))"};
}

Outcome ac6() {
    Gen g(1006);
    const FieldRef f = z2(16);
    int ok = 0, total = 0, bases = 0;
    while (total < kAc6Perturbations) {
        const int n = static_cast<int>(g.uniform(2, 3));
        const PowerSeries fs = g.series_with_wideg(f, n, n * 16 + 2);
        const CertifiedElement d = disc_n(fs);
        if (!d.certified_nonzero() || d.valuation().value >= 15) continue;
        ++bases;
        const int v = d.valuation().value;
        for (int j = 0; j < 6 && total < kAc6Perturbations; ++j, ++total) {
            const PowerSeries h = g.series(f, fs.xprec()).scaled(OKElement::uniformizer_power(f, v + 1));
            ok += disc_n(fs + h).valuation() == Valuation::exactly(v);
        }
    }
    return {ok == total, count(ok, total) + " perturbations keep val(disc) over " + std::to_string(bases) + " bases"};
}

Outcome ac7() {
    Gen g(1007);
    int ok = 0;
    for (int k = 0; k < kAc7Cases; ++k) {
        const FieldRef f = k % 3 == 0 ? z2(16) : k % 3 == 1 ? z3(10) : ram2(14);
        const int M = static_cast<int>(g.uniform(2, 16));
        PowerSeries s = g.series(f, M);
        const int lo = static_cast<int>(g.uniform(0, M - 1));
        const int hi = static_cast<int>(g.uniform(lo, M - 1));
        for (int i = 0; i < M; ++i) {
            if (i == lo || i == hi) s.set_coeff(i, g.unit(f));
            else if (i < lo || i > hi) s.set_coeff(i, g.in_ideal(f, 1));
        }
        const HenselFactorization h = hensel_factor(s);
        ok += h.reconstructs(s) && h.P.degree() == hi - lo && h.P.is_monic() && h.P.coeff(0).is_unit();
    }
    int exact = 0;
    for (int N = 2; N <= 40; ++N) {
        const FieldRef f = z2(N);
        const HenselFactorization h = hensel_factor(PowerSeries::from_integers(f, {2, -3, 1}, 3));
        exact += h.P == Polynomial::from_integers(f, {-1, 1}) && h.U == PowerSeries::from_integers(f, {-2, 1}, 3);
    }
    return {ok == kAc7Cases && exact == 39,
            count(ok, kAc7Cases) + " random factorizations; 2-3X+X^2 = (X-1)(X-2) for " + count(exact, 39) + " N"};
}

Outcome ac8() {
    Gen g(1008);
    int determined = 0, passed = 0, vacuous = 0, indeterminate = 0;
    for (int k = 0; k < kAc8Series; ++k) {
        const long p = k % 3 == 0 ? 2 : k % 3 == 1 ? 3 : 5;
        std::vector<long> c(kAc8M, 0);
        c[1] = 1;
        for (int i = 2; i < kAc8M; ++i) c[i] = g.uniform(0, p - 1);
        const SenReport r = sen_check(ResidueSeries(p, c, kAc8M), kAc8MaxN, SenPolicy::record_indeterminate);
        for (const auto& s : r.pairs) {
            if (s.status == SenPair::Status::vacuous) ++vacuous;
            else if (s.status == SenPair::Status::indeterminate) ++indeterminate;
            else {
                ++determined;
                passed += s.status == SenPair::Status::pass;
            }
        }
    }
    const ResidueSeries w(2, {0, 1, 1}, kAc8M);
    const RamificationIndex i0 = i_n(w, 0), i1 = i_n(w, 1);
    const bool pair_ok = i0 == RamificationIndex{1, true} && i1 == RamificationIndex{3, true};
    return {passed == determined && pair_ok,
            count(passed, determined) + " determined pairs congruent (" + std::to_string(vacuous) + " vacuous, " +
                std::to_string(indeterminate) + " indeterminate); X+X^2 over F_2 gives (i_0, i_1) = (" +
                to_string(i0) + ", " + to_string(i1) + ")"};
}

Outcome ac9() {
    const FieldRef f = z2(kAc9N);
    const ResidueSeries w(2, {0, 1, 1}, 8);
    LiftOptions opt;
    opt.ns = {0, 1};
    opt.budget = kAc9Budget;
    opt.seed = kAc9Seed;
    const LiftReport a = good_lift_search(w, f, opt);
    const LiftReport b = good_lift_search(w, f, opt);
    opt.threads = 4;
    const LiftReport c = good_lift_search(w, f, opt);
    bool certified = a.checked == std::set<int>{0, 1};
    for (const auto& [n, v] : a.disc_valuations) certified = certified && v.exact;
    bool reduces = true;
    for (int i = 0; i < w.xprec(); ++i) reduces = reduces && a.lift.coeff_residue(i) == w.coeff(i);
    const bool same = a.lift == b.lift && a.lift == c.lift && a.accepted_candidate == b.accepted_candidate &&
                      a.accepted_candidate == c.accepted_candidate;
    return {certified && reduces && same, "accepted candidate " + std::to_string(a.accepted_candidate) +
                                              ", val(disc) n=0: " + to_string(a.disc_valuations.at(0)) +
                                              ", n=1: " + to_string(a.disc_valuations.at(1)) +
                                              (same ? ", identical across runs and 1/4 threads" : ", NOT deterministic")};
}

Outcome ac10() {
    Gen g(1010);
    const FieldRef f = z2(10);
    const UniversalPreparation prep = universal_prepare(1, kAc10D, kAc10Kmax);
    int spec_ok = 0;
    for (int k = 0; k < kAc10Cases; ++k) {
        const int deg = static_cast<int>(g.uniform(1, 6));
        PowerSeries s = g.series_with_wideg(f, 1, deg + 1);
        const WeierstrassFactorization w = weierstrass_prepare(s);
        const CertifiedElement c = specialize(prep.P[0], assignment_from_series(s, kAc10Kmax));
        spec_ok += c.precision >= kAc10Precision &&
                   c.value.reduced(kAc10Precision) == w.p.lows()[0].reduced(kAc10Precision);
    }

    // criterion-2 style cases with n = 2 through the symmetric ResPol
    Gen h(1002);
    const FieldRef f8 = z2(8);
    const UniversalSeries rp = respol_symmetric(2, 14, 14);
    int rp_ok = 0;
    const int rp_cases = 30;
    for (int k = 0; k < rp_cases; ++k) {
        const auto roots = base_roots(h, f8, 2);
        const DistinguishedPoly p = DistinguishedPoly::from_polynomial(Polynomial::from_roots(f8, roots));
        const Polynomial gp = random_poly(h, f8, 6);
        const CertifiedElement c = specialize(rp, assignment_for_respol(p, gp, 14));
        rp_ok += c.precision == 8 && c.value == product_over_roots(roots, gp);
    }
    const DistinguishedPoly p15 = DistinguishedPoly::from_polynomial(Polynomial::from_integers(f8, {8, -6, 1}));
    const bool fifteen =
        specialize(rp, assignment_for_respol(p15, Polynomial::from_integers(f8, {1, 1}), 14)).value == OKElement(f8, 15);

    for (int D = 1; D <= kAc10BgwMaxD; ++D) bgw_p0(D, D + 1);  // throws IntegralityViolation on failure

    const BgwComparison cmp = compare_bgw_with_prepare(kAc10D, kAc10Kmax);
    const bool one_normalization = cmp.equals_p0 != cmp.equals_f1_times_p0;
    const std::string which = cmp.equals_p0 ? "bgw = P_0" : cmp.equals_f1_times_p0 ? "bgw = F_1*P_0" : "neither";
    return {spec_ok == kAc10Cases && rp_ok == rp_cases && fifteen && one_normalization,
            "specialize " + count(spec_ok, kAc10Cases) + " mod 2^7; ResPol_2 " + count(rp_ok, rp_cases) +
                (fifteen ? " (15 reproduced)" : " (15 NOT reproduced)") + "; bgw integral through D = 12; normalization: " +
                which + " at D = 6, kmax = 6"};
}

}  // namespace

int main() {
    report(1, "Weierstrass reconstruction", ac1, kAc1Seconds);
    report(2, "resultant-oracle equivalence", ac2, kAc2Seconds);
    report(3, "multiplicativity", ac3);
    report(4, "common-root detection", ac4);
    report(5, "discriminant", ac5);
    report(6, "openness of simple roots", ac6);
    report(7, "Hensel factorization", ac7);
    report(8, "Sen congruence corpus", ac8, kAc8Seconds);
    report(9, "good-lift search", ac9);
    report(10, "universal coherence", ac10);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures;
}
