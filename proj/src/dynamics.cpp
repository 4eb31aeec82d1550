#include "padicres/dynamics.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

namespace padicres {

ResidueSeries::ResidueSeries(long p, std::vector<long> coeffs, int xprec) : p_(p) {
    if (p < 2) throw UsageError("residue characteristic must be a prime >= 2");
    if (static_cast<int>(coeffs.size()) > xprec) throw UsageError("more coefficients than X-precision");
    coeffs.resize(xprec, 0);
    for (auto& a : coeffs) a = ((a % p) + p) % p;
    if (xprec > 0 && coeffs[0] != 0) throw UsageError("w(0) must be 0");
    if (xprec > 1 && coeffs[1] != 1) throw UsageError("w must have the form X + sum_{i>=2} w_i X^i");
    c_ = std::move(coeffs);
}

ResidueSeries ResidueSeries::identity(long p, int xprec) {
    std::vector<long> c;
    if (xprec > 1) c = {0, 1};
    return ResidueSeries(p, std::move(c), xprec);
}

ResidueSeries ResidueSeries::truncated(int m) const {
    if (m > xprec()) throw UsageError("cannot raise X-precision by truncation");
    ResidueSeries r;
    r.p_ = p_;
    r.c_.assign(c_.begin(), c_.begin() + m);
    return r;
}

ResidueSeries compose(const ResidueSeries& f, const ResidueSeries& g) {
    if (f.p_ != g.p_) throw UsageError("residue series over different primes");
    const int M = std::min(f.xprec(), g.xprec());
    const auto p = static_cast<unsigned __int128>(f.p_);
    std::vector<unsigned long> acc(M, 0), next(M, 0);
    std::vector<unsigned __int128> sum(M);
    std::vector<int> gnz;
    for (int j = 1; j < M; ++j)
        if (g.c_[j] != 0) gnz.push_back(j);
    bool acc_zero = true;
    // Horner: acc <- acc * g + f_i; g(0) = 0 keeps this exact mod X^M.
    for (int i = M - 1; i >= 0; --i) {
        if (!acc_zero) {
            std::fill(sum.begin(), sum.end(), 0);
            for (int a = 0; a < M; ++a) {
                if (acc[a] == 0) continue;
                const unsigned long x = acc[a];
                for (int j : gnz) {
                    if (a + j >= M) break;
                    sum[a + j] += static_cast<unsigned __int128>(x) * static_cast<unsigned long>(g.c_[j]);
                }
            }
            for (int k = 0; k < M; ++k) next[k] = static_cast<unsigned long>(sum[k] % p);
            acc.swap(next);
        }
        acc[0] = static_cast<unsigned long>((acc[0] + static_cast<unsigned long>(f.c_[i])) % f.p_);
        acc_zero = std::all_of(acc.begin(), acc.end(), [](unsigned long x) { return x == 0; });
    }
    ResidueSeries r;
    r.p_ = f.p_;
    r.c_.assign(acc.begin(), acc.end());
    return r;
}

namespace {

template <typename Series, typename Compose>
Series compose_power(const Series& w, long count, Compose&& comp) {
    // w^{o count} by square-and-multiply on composition.
    std::optional<Series> result;
    Series base = w;
    while (count > 0) {
        if (count & 1) result = result ? comp(*result, base) : base;
        count >>= 1;
        if (count > 0) base = comp(base, base);
    }
    return *result;
}

long ipow(long p, int n) {
    long r = 1;
    for (int i = 0; i < n; ++i) r *= p;
    return r;
}

RamificationIndex first_index(const ResidueSeries& w) {
    for (int m = 2; m < w.xprec(); ++m)
        if (w.coeff(m) != 0) return {m - 1, true};
    return {std::max(w.xprec() - 1, 0), false};
}

}  // namespace

ResidueSeries iterate_p(const ResidueSeries& w, int n) {
    if (n < 0) throw UsageError("iterate_p: negative n");
    if (w.xprec() < 2) return w;
    return compose_power(w, ipow(w.p(), n), [](const ResidueSeries& a, const ResidueSeries& b) { return compose(a, b); });
}

std::string to_string(const RamificationIndex& i) {
    return i.exact ? std::to_string(i.value) : ">=" + std::to_string(i.value);
}

RamificationIndex i_index(const ResidueSeries& w) { return first_index(w); }

RamificationIndex i_n(const ResidueSeries& w, int n) {
    // Coefficients below L of an iterate depend only on w mod X^L, so try
    // small windows first.
    for (int L = std::min(w.xprec(), 32);; L = std::min(2 * L, w.xprec())) {
        const RamificationIndex r = first_index(iterate_p(w.truncated(L), n));
        if (r.exact || L == w.xprec()) return r;
    }
}

bool SenReport::all_pass() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const SenPair& s) {
        return s.status == SenPair::Status::pass || s.status == SenPair::Status::vacuous;
    });
}

SenReport sen_check(const ResidueSeries& w, int n_max, SenPolicy policy) {
    SenReport report;
    RamificationIndex prev = i_n(w, 0);
    for (int n = 1; n <= n_max; ++n) {
        const RamificationIndex cur = i_n(w, n);
        SenPair s{n, prev, cur, ipow(w.p(), n), SenPair::Status::pass};
        if (!prev.exact && !cur.exact) {
            s.status = SenPair::Status::vacuous;
        } else if (!prev.exact || !cur.exact) {
            s.status = SenPair::Status::indeterminate;
            if (policy == SenPolicy::throw_on_indeterminate)
                throw IndeterminateAtPrecision("i_" + std::to_string(n) + " is not determined at X-precision " +
                                               std::to_string(w.xprec()));
        } else {
            s.status = (cur.value - prev.value) % s.modulus == 0 ? SenPair::Status::pass : SenPair::Status::fail;
        }
        report.pairs.push_back(s);
        prev = cur;
    }
    return report;
}

PowerSeries iterate_p(const PowerSeries& f, int n) {
    if (n < 0) throw UsageError("iterate_p: negative n");
    if (f.xprec() > 0 && !f.coeff_is_zero(0)) throw CompositionDomain("iterated series must vanish at 0");
    return compose_power(f, ipow(f.field()->p(), n), [](const PowerSeries& a, const PowerSeries& b) {
        return ps_compose(a, b);
    });
}

int wideg_of_iterate_minus_x(const PowerSeries& f, int n) {
    const PowerSeries it = iterate_p(f, n);
    return wideg(it - PowerSeries::monomial(f.field(), 1, f.xprec()));
}

PowerSeries digit_lift(const ResidueSeries& w, const FieldRef& field, int xprec) {
    if (field->p() != w.p()) throw UsageError("lift field has a different residue characteristic");
    if (xprec < w.xprec()) throw UsageError("lift X-precision below that of w");
    PowerSeries f(field, xprec);
    for (int i = 0; i < w.xprec(); ++i)
        if (w.coeff(i) != 0) f.set_coeff(i, OKElement(field, w.coeff(i)));
    return f;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform element of O_K / pi^N (coordinates drawn modulo p^B).
OKElement random_element(const FieldRef& field, std::mt19937_64& rng) {
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(field->p()),
                  static_cast<unsigned long>(field->coefficient_precision()));
    const size_t words = mpz_sizeinbase(bound.get_mpz_t(), 2) / 64 + 2;
    std::vector<mpz_class> coords(field->e());
    for (auto& c : coords) {
        mpz_class acc = 0;
        for (size_t k = 0; k < words; ++k) {
            acc <<= 64;
            acc += mpz_class(static_cast<unsigned long>(rng()));
        }
        mpz_fdiv_r(c.get_mpz_t(), acc.get_mpz_t(), bound.get_mpz_t());
    }
    return OKElement::from_coords(field, std::move(coords));
}

struct Candidate {
    bool accepted = false;
    PowerSeries lift;
    std::map<int, CertifiedElement> discs;
};

}  // namespace

LiftReport good_lift_search(const ResidueSeries& w, const FieldRef& field, const LiftOptions& options) {
    if (options.budget < 1) throw UsageError("budget must be >= 1");
    std::map<int, long> ram;
    long max_wideg = 1;
    for (int n : options.ns) {
        const RamificationIndex r = i_n(w, n);
        if (!r.exact)
            throw IndeterminateAtPrecision("i_" + std::to_string(n) + "(w) is not finite at X-precision " +
                                           std::to_string(w.xprec()));
        ram[n] = r.value;
        max_wideg = std::max(max_wideg, r.value + 1);
    }
    const int N = field->precision();
    // disc_n is certified to full precision once X-precision >= wideg * N.
    const int W = std::max<int>(w.xprec(), static_cast<int>(max_wideg) * N + 1);
    const PowerSeries base = digit_lift(w, field, W);
    const OKElement pi = OKElement::uniformizer(field);
    const int support = static_cast<int>(std::min<long>(max_wideg, W - 1));

    auto evaluate = [&](int index) {
        Candidate c;
        c.lift = base;
        if (index > 0) {
            std::mt19937_64 rng(splitmix64(options.seed ^ splitmix64(static_cast<std::uint64_t>(index))));
            for (int j = 1; j <= support; ++j) c.lift.set_coeff(j, c.lift.coeff(j) + pi * random_element(field, rng));
        }
        c.accepted = true;
        for (const auto& [n, i] : ram) {
            const PowerSeries g = iterate_p(c.lift, n) - PowerSeries::monomial(field, 1, W);
            if (wideg(g) != i + 1) throw std::logic_error("lift does not reduce to the iterate of w");
            CertifiedElement d = disc_n(g);
            if (!d.certified_nonzero()) c.accepted = false;
            c.discs.emplace(n, std::move(d));
            if (!c.accepted) break;
        }
        return c;
    };

    const int threads = std::max(1, options.threads);
    for (int start = 0; start < options.budget; start += threads) {
        const int count = std::min(threads, options.budget - start);
        std::vector<Candidate> batch(count);
        if (count == 1) {
            batch[0] = evaluate(start);
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(count);
            for (int k = 0; k < count; ++k) {
                pool.emplace_back([&, k] {
                    try {
                        batch[k] = evaluate(start + k);
                    } catch (...) {
                        errors[k] = std::current_exception();
                    }
                });
            }
            for (auto& t : pool) t.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        for (int k = 0; k < count; ++k) {
            if (!batch[k].accepted) continue;
            LiftReport report;
            report.lift = batch[k].lift;
            report.discriminants = batch[k].discs;
            for (const auto& [n, d] : report.discriminants) {
                report.checked.insert(n);
                report.disc_valuations[n] = d.valuation();
            }
            report.ramification = ram;
            report.accepted_candidate = start + k;
            report.seed = options.seed;
            report.budget = options.budget;
            report.working_xprec = W;
            return report;
        }
    }
    throw BudgetExhausted("no lift with certified simple roots among " + std::to_string(options.budget) +
                          " candidates");
}

}  // namespace padicres
