#pragma once

// Iteration of power series in characteristic p: lower ramification numbers
// i_n(w) = i(w^{o p^n}), Sen's congruence i_{n-1} = i_n mod p^n, and a
// randomized search for a characteristic-zero lift f of w whose iterates
// f^{o p^n}(X) - X have only simple roots in the open disk.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "padicres/resultant.hpp"
#include "padicres/series.hpp"

namespace padicres {

// w(X) = X + sum_{i>=2} w_i X^i over F_p, known mod X^M.
class ResidueSeries {
public:
    // Coefficients are reduced mod p and padded with zeros up to xprec.
    // Requires c_0 = 0 and c_1 = 1 (when xprec > 1).
    ResidueSeries(long p, std::vector<long> coeffs, int xprec);

    static ResidueSeries identity(long p, int xprec);

    long p() const { return p_; }
    int xprec() const { return static_cast<int>(c_.size()); }
    long coeff(int i) const { return c_.at(i); }
    const std::vector<long>& coeffs() const { return c_; }

    ResidueSeries truncated(int m) const;

    friend bool operator==(const ResidueSeries&, const ResidueSeries&) = default;

private:
    ResidueSeries() = default;
    friend ResidueSeries compose(const ResidueSeries&, const ResidueSeries&);

    long p_ = 2;
    std::vector<long> c_;
};

// f(g(X)) mod X^min(M_f, M_g).
ResidueSeries compose(const ResidueSeries& f, const ResidueSeries& g);
// w composed with itself p^n times.
ResidueSeries iterate_p(const ResidueSeries& w, int n);

// i(w) = m - 1 for the least m >= 2 with w_m != 0. When no such m lies below
// M the value is the bound M - 1 and `exact` is false.
struct RamificationIndex {
    long value = 0;
    bool exact = true;

    friend bool operator==(const RamificationIndex&, const RamificationIndex&) = default;
};

std::string to_string(const RamificationIndex& i);

RamificationIndex i_index(const ResidueSeries& w);
RamificationIndex i_n(const ResidueSeries& w, int n);

struct SenPair {
    enum class Status { pass, fail, vacuous, indeterminate };
    int n = 0;
    RamificationIndex i_prev;
    RamificationIndex i;
    long modulus = 1;  // p^n
    Status status = Status::pass;
};

struct SenReport {
    std::vector<SenPair> pairs;
    bool all_pass() const;
};

enum class SenPolicy { throw_on_indeterminate, record_indeterminate };

// Checks i_{n-1} = i_n mod p^n for 1 <= n <= n_max. Pairs where both indices
// are bounds pass vacuously; a pair with exactly one bound is indeterminate
// and raises IndeterminateAtPrecision under the default policy.
SenReport sen_check(const ResidueSeries& w, int n_max, SenPolicy policy = SenPolicy::throw_on_indeterminate);

// f composed with itself p^n times over O_K; f(0) must vanish.
PowerSeries iterate_p(const PowerSeries& f, int n);
// wideg(f^{o p^n}(X) - X).
int wideg_of_iterate_minus_x(const PowerSeries& f, int n);

// w_i lifted to {0, ..., p-1} in O_K, at X-precision xprec >= M_w.
PowerSeries digit_lift(const ResidueSeries& w, const FieldRef& field, int xprec);

struct LiftOptions {
    std::set<int> ns;
    int budget = 100;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct LiftReport {
    PowerSeries lift;
    std::set<int> checked;
    std::map<int, Valuation> disc_valuations;
    std::map<int, CertifiedElement> discriminants;
    std::map<int, long> ramification;      // i_n(w) for n in checked
    int accepted_candidate = 0;            // 0 is the unperturbed lift
    std::uint64_t seed = 0;
    int budget = 0;
    int working_xprec = 0;
};

// Candidates are w~ + pi h with h drawn deterministically from (seed, index);
// the accepted candidate is the one of smallest index whose discriminants
// disc_{i_n + 1}(f^{o p^n} - X) are all certified nonzero. Throws
// BudgetExhausted when no candidate below `budget` qualifies.
LiftReport good_lift_search(const ResidueSeries& w, const FieldRef& field, const LiftOptions& options);

}  // namespace padicres
