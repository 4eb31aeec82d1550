#include <doctest.h>

#include "padicres/dynamics.hpp"
#include "padicres/errors.hpp"
#include "support.hpp"

using namespace padicres;
using namespace testing;

namespace {

// Composition over F_p through the integer expansion oracle.
ResidueSeries oracle_iterate(const ResidueSeries& w, long count) {
    std::vector<mpz_class> acc{0, 1};
    std::vector<mpz_class> wc(w.coeffs().begin(), w.coeffs().end());
    for (long k = 0; k < count; ++k) {
        acc = int_compose(wc, acc, static_cast<size_t>(w.xprec()));
        for (auto& x : acc) x = mod(x, w.p());
    }
    std::vector<long> out;
    for (auto& x : acc) out.push_back(x.get_si());
    out.resize(w.xprec(), 0);
    return ResidueSeries(w.p(), out, w.xprec());
}

ResidueSeries random_w(Gen& g, long p, int M) {
    std::vector<long> c(M, 0);
    c[1] = 1;
    for (int i = 2; i < M; ++i) c[i] = g.uniform(0, p - 1);
    return ResidueSeries(p, c, M);
}

}  // namespace

TEST_CASE("residue series validation") {
    CHECK_THROWS_AS(ResidueSeries(2, {1, 1}, 4), UsageError);
    CHECK_THROWS_AS(ResidueSeries(3, {0, 2}, 4), UsageError);
    CHECK(ResidueSeries(3, {0, 4, -1}, 4).coeffs() == std::vector<long>{0, 1, 2, 0});
}

TEST_CASE("iteration examples") {
    const ResidueSeries w(2, {0, 1, 1}, 8);
    CHECK(iterate_p(w, 0) == w);
    CHECK(iterate_p(w, 1) == ResidueSeries(2, {0, 1, 0, 0, 1}, 8));
    const ResidueSeries id = ResidueSeries::identity(5, 10);
    CHECK(iterate_p(id, 3) == id);
}

TEST_CASE("iteration matches repeated integer composition") {
    Gen g(61);
    for (long p : {2L, 3L, 5L}) {
        for (int k = 0; k < 10; ++k) {
            const ResidueSeries w = random_w(g, p, 14);
            CHECK(iterate_p(w, 1) == oracle_iterate(w, p));
            if (p <= 3) CHECK(iterate_p(w, 2) == oracle_iterate(w, p * p));
        }
    }
}

TEST_CASE("ramification indices") {
    CHECK(i_index(ResidueSeries(2, {0, 1, 1}, 6)) == RamificationIndex{1, true});
    CHECK(i_index(ResidueSeries(2, {0, 1, 0, 1}, 6)) == RamificationIndex{2, true});
    CHECK(i_index(ResidueSeries::identity(2, 6)) == RamificationIndex{5, false});
    CHECK(to_string(i_index(ResidueSeries::identity(2, 6))) == ">=5");

    const ResidueSeries w(2, {0, 1, 1}, 40);
    CHECK(i_n(w, 0) == RamificationIndex{1, true});
    CHECK(i_n(w, 1) == RamificationIndex{3, true});
    CHECK_FALSE(i_n(ResidueSeries::identity(3, 50), 2).exact);
}

TEST_CASE("adaptive windows agree with full-length iteration") {
    Gen g(62);
    for (int k = 0; k < 20; ++k) {
        ResidueSeries w = random_w(g, 2, 120);
        // push the first nonzero coefficient out so windows must grow
        std::vector<long> c = w.coeffs();
        std::fill(c.begin() + 2, c.begin() + 40, 0L);
        w = ResidueSeries(2, c, 120);
        CHECK(i_n(w, 1) == i_index(iterate_p(w, 1)));
    }
}

TEST_CASE("Sen check") {
    const SenReport r = sen_check(ResidueSeries(2, {0, 1, 1}, 40), 1);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].i_prev.value == 1);
    CHECK(r.pairs[0].i.value == 3);
    CHECK(r.pairs[0].modulus == 2);
    CHECK(r.pairs[0].status == SenPair::Status::pass);
    CHECK(r.all_pass());

    const SenReport v = sen_check(ResidueSeries::identity(2, 30), 2);
    CHECK(v.all_pass());
    CHECK(v.pairs[0].status == SenPair::Status::vacuous);

    // i_0 = 28 is visible but i_1 is not at M = 30
    std::vector<long> c(30, 0);
    c[1] = 1;
    c[29] = 1;
    const ResidueSeries late(2, c, 30);
    CHECK_THROWS_AS(sen_check(late, 1), IndeterminateAtPrecision);
    CHECK(sen_check(late, 1, SenPolicy::record_indeterminate).pairs[0].status == SenPair::Status::indeterminate);
}

TEST_CASE("Sen congruence on random series over F_3") {
    Gen g(63);
    for (int k = 0; k < 20; ++k) CHECK(sen_check(random_w(g, 3, 200), 1, SenPolicy::record_indeterminate).all_pass());
}

TEST_CASE("Weierstrass degree of iterates") {
    const FieldRef f = z2(8);
    const ResidueSeries w(2, {0, 1, 1}, 12);
    const PowerSeries lift = digit_lift(w, f, 12);
    CHECK(wideg_of_iterate_minus_x(lift, 1) == 4);
    CHECK(wideg_of_iterate_minus_x(lift, 0) == 2);
    CHECK_THROWS_AS(wideg_of_iterate_minus_x(PowerSeries::monomial(f, 1, 8), 1), WidegNotCertified);
    CHECK_THROWS_AS(iterate_p(PowerSeries::from_integers(f, {1, 1}, 4), 1), CompositionDomain);

    Gen g(64);
    for (int k = 0; k < 10; ++k) {
        const ResidueSeries r = random_w(g, 3, 30);
        const RamificationIndex i = i_n(r, 1);
        if (!i.exact) continue;
        CHECK(wideg_of_iterate_minus_x(digit_lift(r, z3(3), 30), 1) == i.value + 1);
    }
}

TEST_CASE("lift search") {
    const FieldRef f = z2(8);
    const ResidueSeries w(2, {0, 1, 1}, 8);

    LiftOptions none;
    const LiftReport empty = good_lift_search(w, f, none);
    CHECK(empty.accepted_candidate == 0);
    CHECK(empty.checked.empty());

    LiftOptions opt;
    opt.ns = {0};
    opt.seed = 3;
    opt.budget = 50;
    const LiftReport r = good_lift_search(w, f, opt);
    CHECK(r.accepted_candidate > 0);  // X + X^2 itself has the double root 0
    CHECK(r.checked == std::set<int>{0});
    CHECK(r.disc_valuations.at(0).exact);
    for (int i = 0; i < w.xprec(); ++i) CHECK(r.lift.coeff_residue(i) == w.coeff(i));

    opt.threads = 3;
    const LiftReport t = good_lift_search(w, f, opt);
    CHECK(t.accepted_candidate == r.accepted_candidate);
    CHECK(t.lift == r.lift);

    LiftOptions tiny;
    tiny.ns = {0};
    tiny.budget = 1;
    CHECK_THROWS_AS(good_lift_search(w, f, tiny), BudgetExhausted);

    LiftOptions undetermined;
    undetermined.ns = {1};
    CHECK_THROWS_AS(good_lift_search(ResidueSeries::identity(2, 8), f, undetermined), IndeterminateAtPrecision);
}
