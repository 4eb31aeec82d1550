#include "padicres/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "padicres/series.hpp"

namespace padicres {

Polynomial::Polynomial(FieldRef field, std::vector<OKElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& a : c_) require_same_field(field_, a.field());
    trim();
}

Polynomial Polynomial::from_integers(FieldRef field, const std::vector<long>& coeffs) {
    std::vector<OKElement> c;
    c.reserve(coeffs.size());
    for (long a : coeffs) c.emplace_back(field, a);
    return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::monomial(FieldRef field, int k) {
    std::vector<OKElement> c(static_cast<size_t>(k) + 1, OKElement::zero(field));
    c[k] = OKElement::one(field);
    return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::from_roots(FieldRef field, const std::vector<OKElement>& roots) {
    Polynomial r = monomial(field, 0);
    for (const auto& z : roots) r = r * Polynomial(field, {-z, OKElement::one(field)});
    return r;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::is_monic() const {
    return !c_.empty() && c_.back() == OKElement::one(field_);
}

OKElement Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return OKElement::zero(field_);
    return c_[i];
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    require_same_field(field_, g.field_);
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), OKElement::zero(field_));
    for (size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    require_same_field(field_, g.field_);
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), OKElement::zero(field_));
    for (size_t i = 0; i < g.c_.size(); ++i) c_[i] -= g.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field_, g.field_);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.field_);
    std::vector<OKElement> c(f.c_.size() + g.c_.size() - 1, OKElement::zero(f.field_));
    for (size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i].is_zero()) continue;
        for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
    }
    return Polynomial(f.field_, std::move(c));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

Polynomial Polynomial::scaled(const OKElement& a) const {
    Polynomial r = *this;
    for (auto& x : r.c_) x *= a;
    r.trim();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem_monic(const Polynomial& divisor) const {
    require_same_field(field_, divisor.field_);
    if (!divisor.is_monic()) throw UsageError("divrem_monic: divisor is not monic");
    const int n = divisor.degree();
    std::vector<OKElement> r = c_;
    if (degree() < n) return {Polynomial(field_), *this};
    std::vector<OKElement> q(static_cast<size_t>(degree() - n) + 1, OKElement::zero(field_));
    for (int k = degree(); k >= n; --k) {
        const OKElement lead = r[k];
        q[k - n] = lead;
        if (lead.is_zero()) continue;
        for (int j = 0; j <= n; ++j) r[k - n + j] -= lead * divisor.c_[j];
    }
    r.resize(n, OKElement::zero(field_));
    return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
}

OKElement Polynomial::evaluate(const OKElement& x) const {
    OKElement acc = OKElement::zero(field_);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<OKElement> c;
    for (int i = 1; i <= degree(); ++i) c.push_back(c_[i] * OKElement(field_, static_cast<long>(i)));
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::truncated(int k) const {
    Polynomial r = *this;
    if (static_cast<int>(r.c_.size()) > k) r.c_.resize(std::max(k, 0), OKElement::zero(field_));
    r.trim();
    return r;
}

PowerSeries Polynomial::to_series(int xprec) const {
    if (degree() >= xprec) throw UsageError("polynomial degree exceeds requested X-precision");
    return PowerSeries::from_coeffs(field_, c_, xprec);
}

bool operator==(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field_, g.field_);
    if (f.c_.size() != g.c_.size()) return false;
    for (size_t i = 0; i < f.c_.size(); ++i)
        if (!(f.c_[i] == g.c_[i])) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].to_string();
        if (i > 0) os << "*X^" << i;
    }
    return os.str();
}

}  // namespace padicres
