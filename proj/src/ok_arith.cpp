#include "padicres/ok_arith.hpp"

#include <algorithm>
#include <sstream>

namespace padicres {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

mpz_class ipow(long p, int k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

mpz_class mod_p_power(const mpz_class& a, long p, int k) {
    mpz_class m = ipow(p, k), r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

FieldRef FieldSpec::create(long p, std::vector<mpz_class> eisenstein, int precision) {
    if (!is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not prime");
    if (precision < 1) throw UsageError("precision must be >= 1");
    if (eisenstein.size() < 2) throw UsageError("Eisenstein polynomial must have degree >= 1");
    if (eisenstein.back() != 1) throw UsageError("Eisenstein polynomial must be monic");
    const int e = static_cast<int>(eisenstein.size()) - 1;
    for (int i = 0; i < e; ++i) {
        if (mpz_divisible_ui_p(eisenstein[i].get_mpz_t(), static_cast<unsigned long>(p)) == 0)
            throw UsageError("Eisenstein condition fails: p does not divide c_" + std::to_string(i));
    }
    mpz_class p2 = mpz_class(p) * p;
    if (mpz_divisible_p(eisenstein[0].get_mpz_t(), p2.get_mpz_t()) != 0)
        throw UsageError("Eisenstein condition fails: p^2 divides c_0");

    std::shared_ptr<FieldSpec> f(new FieldSpec());
    f->p_ = p;
    f->e_ = e;
    f->N_ = precision;
    f->B_ = ceil_div(precision, e) + 1;
    f->eis_ = std::move(eisenstein);
    f->mods_.resize(e);
    f->kexp_.resize(e);
    for (int i = 0; i < e; ++i) {
        f->kexp_[i] = ceil_div(precision - i, e);
        f->mods_[i] = ipow(p, f->kexp_[i]);
    }
    return f;
}

FieldRef FieldSpec::zp(long p, int precision) {
    return create(p, {mpz_class(-p), mpz_class(1)}, precision);
}

FieldRef FieldSpec::with_precision(int precision) const {
    return create(p_, eis_, precision);
}

bool FieldSpec::same_as(const FieldSpec& o) const {
    return this == &o || (p_ == o.p_ && N_ == o.N_ && eis_ == o.eis_);
}

void require_same_field(const FieldRef& a, const FieldRef& b) {
    if (!a || !b) throw UsageError("element has no field");
    if (a != b && !a->same_as(*b)) throw UsageError("operands live in different fields");
}

void FieldSpec::reduce_raw(mpz_class* raw, mpz_class* out) const {
    // pi^e = -(c_{e-1} pi^{e-1} + ... + c_0)
    for (int k = 2 * e_ - 2; k >= e_; --k) {
        if (raw[k] == 0) continue;
        for (int j = 0; j < e_; ++j) {
            if (eis_[j] != 0) mpz_submul(raw[k - e_ + j].get_mpz_t(), raw[k].get_mpz_t(), eis_[j].get_mpz_t());
        }
        raw[k] = 0;
    }
    for (int i = 0; i < e_; ++i) mpz_fdiv_r(out[i].get_mpz_t(), raw[i].get_mpz_t(), mods_[i].get_mpz_t());
}

void FieldSpec::canonicalize(mpz_class* coords) const {
    for (int i = 0; i < e_; ++i) mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), mods_[i].get_mpz_t());
}

std::string to_string(const Valuation& v) {
    return v.exact ? std::to_string(v.value) : ">=" + std::to_string(v.value);
}

int p_valuation(const mpz_class& a, long p) {
    if (a == 0) throw UsageError("p_valuation of zero");
    if (p == 2) return static_cast<int>(mpz_scan1(a.get_mpz_t(), 0));
    mpz_class t = a;
    int v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

OKElement::OKElement(FieldRef field, long value) : OKElement(std::move(field), mpz_class(value)) {}

OKElement::OKElement(FieldRef field, const mpz_class& value) : field_(std::move(field)) {
    if (!field_) throw UsageError("null field");
    c_.assign(field_->e(), mpz_class(0));
    c_[0] = value;
    field_->canonicalize(c_.data());
}

OKElement OKElement::from_coords(FieldRef field, std::vector<mpz_class> coords) {
    if (!field) throw UsageError("null field");
    if (static_cast<int>(coords.size()) != field->e())
        throw UsageError("expected " + std::to_string(field->e()) + " coordinates, got " +
                         std::to_string(coords.size()));
    OKElement x;
    x.field_ = std::move(field);
    x.c_ = std::move(coords);
    x.field_->canonicalize(x.c_.data());
    return x;
}

OKElement OKElement::uniformizer(FieldRef field) {
    if (field->e() == 1) return OKElement(field, mpz_class(-field->eisenstein()[0]));
    std::vector<mpz_class> c(field->e(), mpz_class(0));
    c[1] = 1;
    return from_coords(std::move(field), std::move(c));
}

OKElement OKElement::uniformizer_power(FieldRef field, int k) {
    return uniformizer(std::move(field)).pow(static_cast<unsigned>(k));
}

Valuation OKElement::valuation() const {
    const int N = field_->precision(), e = field_->e();
    int best = N;
    for (int i = 0; i < e; ++i) {
        if (c_[i] == 0) continue;
        best = std::min(best, e * p_valuation(c_[i], field_->p()) + i);
    }
    return best < N ? Valuation::exactly(best) : Valuation::at_least(N);
}

bool OKElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpz_class& a) { return a == 0; });
}

bool OKElement::is_unit() const { return residue() != 0; }

long OKElement::residue() const {
    return static_cast<long>(mpz_fdiv_ui(c_[0].get_mpz_t(), static_cast<unsigned long>(field_->p())));
}

OKElement OKElement::inverse() const {
    const long r = residue();
    if (r == 0) throw NotAUnit("element " + to_string() + " has positive valuation");
    mpz_class inv0, p(field_->p()), rr(r);
    mpz_invert(inv0.get_mpz_t(), rr.get_mpz_t(), p.get_mpz_t());
    OKElement y(field_, inv0);
    const OKElement two(field_, 2L);
    // Newton: y <- y (2 - x y); each step doubles the pi-adic precision.
    for (int prec = 1; prec < field_->precision(); prec *= 2) y = y * (two - *this * y);
    return y;
}

OKElement OKElement::pow(unsigned k) const {
    OKElement result = one(field_), base = *this;
    while (k != 0) {
        if (k & 1U) result *= base;
        base *= base;
        k >>= 1U;
    }
    return result;
}

OKElement& OKElement::operator+=(const OKElement& y) {
    require_same_field(field_, y.field_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += y.c_[i];
    field_->canonicalize(c_.data());
    return *this;
}

OKElement& OKElement::operator-=(const OKElement& y) {
    require_same_field(field_, y.field_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= y.c_[i];
    field_->canonicalize(c_.data());
    return *this;
}

OKElement& OKElement::operator*=(const OKElement& y) {
    require_same_field(field_, y.field_);
    const int e = field_->e();
    if (e == 1) {
        c_[0] *= y.c_[0];
        field_->canonicalize(c_.data());
        return *this;
    }
    std::vector<mpz_class> raw(field_->raw_width(), mpz_class(0));
    for (int a = 0; a < e; ++a)
        for (int b = 0; b < e; ++b) mpz_addmul(raw[a + b].get_mpz_t(), c_[a].get_mpz_t(), y.c_[b].get_mpz_t());
    field_->reduce_raw(raw.data(), c_.data());
    return *this;
}

OKElement OKElement::operator-() const {
    OKElement r = *this;
    for (auto& a : r.c_) a = -a;
    field_->canonicalize(r.c_.data());
    return r;
}

bool operator==(const OKElement& x, const OKElement& y) {
    require_same_field(x.field_, y.field_);
    return x.c_ == y.c_;
}

OKElement OKElement::reduced(int k) const {
    const int e = field_->e();
    OKElement r = *this;
    for (int i = 0; i < e; ++i) r.c_[i] = mod_p_power(c_[i], field_->p(), ceil_div(k - i, e));
    return r;
}

bool OKElement::congruent(const OKElement& y, int k) const {
    require_same_field(field_, y.field_);
    return reduced(k).c_ == y.reduced(k).c_;
}

std::string OKElement::to_string() const {
    if (c_.size() == 1) return c_[0].get_str();
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
    os << ')';
    return os.str();
}

OKElement arith(const OKElement& x, const OKElement& y, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return x + y;
        case ArithKind::sub: return x - y;
        case ArithKind::mul: return x * y;
    }
    throw UsageError("unknown arithmetic kind");
}

}  // namespace padicres
