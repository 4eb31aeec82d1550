#include "padicres/series.hpp"

#include <algorithm>
#include <sstream>

namespace padicres {

PowerSeries::PowerSeries(FieldRef field, int xprec) : field_(std::move(field)), M_(xprec) {
    if (!field_) throw UsageError("null field");
    if (xprec < 0) throw UsageError("negative X-precision");
    e_ = field_->e();
    data_.assign(static_cast<size_t>(M_) * e_, mpz_class(0));
}

PowerSeries PowerSeries::from_coeffs(FieldRef field, const std::vector<OKElement>& coeffs, int xprec) {
    if (static_cast<int>(coeffs.size()) > xprec) {
        // Allowed only when the excess coefficients vanish.
        for (size_t i = xprec; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero()) throw UsageError("more coefficients than X-precision");
    }
    PowerSeries f(std::move(field), xprec);
    for (int i = 0; i < std::min<int>(xprec, static_cast<int>(coeffs.size())); ++i) f.set_coeff(i, coeffs[i]);
    return f;
}

PowerSeries PowerSeries::from_integers(FieldRef field, const std::vector<long>& coeffs, int xprec) {
    std::vector<OKElement> c;
    for (long a : coeffs) c.emplace_back(field, a);
    return from_coeffs(std::move(field), c, xprec);
}

PowerSeries PowerSeries::monomial(FieldRef field, int k, int xprec) {
    PowerSeries f(field, xprec);
    if (k < xprec) f.set_coeff(k, OKElement::one(field));
    return f;
}

OKElement PowerSeries::coeff(int i) const {
    if (i < 0 || i >= M_) throw UsageError("coefficient index " + std::to_string(i) + " outside X-precision");
    return OKElement::from_coords(field_, std::vector<mpz_class>(coords(i), coords(i) + e_));
}

void PowerSeries::set_coeff(int i, const OKElement& a) {
    if (i < 0 || i >= M_) throw UsageError("coefficient index " + std::to_string(i) + " outside X-precision");
    require_same_field(field_, a.field());
    std::copy(a.coords().begin(), a.coords().end(), coords(i));
}

std::vector<OKElement> PowerSeries::coeffs() const {
    std::vector<OKElement> c;
    c.reserve(M_);
    for (int i = 0; i < M_; ++i) c.push_back(coeff(i));
    return c;
}

bool PowerSeries::coeff_is_zero(int i) const {
    const mpz_class* c = coords(i);
    for (int a = 0; a < e_; ++a)
        if (c[a] != 0) return false;
    return true;
}

long PowerSeries::coeff_residue(int i) const {
    return static_cast<long>(mpz_fdiv_ui(coords(i)[0].get_mpz_t(), static_cast<unsigned long>(field_->p())));
}

PowerSeries PowerSeries::truncated(int m) const {
    if (m > M_) throw UsageError("cannot raise X-precision by truncation");
    PowerSeries r(field_, m);
    std::copy(data_.begin(), data_.begin() + static_cast<long>(m) * e_, r.data_.begin());
    return r;
}

PowerSeries PowerSeries::padded(int m) const {
    PowerSeries r(field_, m);
    const int k = std::min(m, M_);
    std::copy(data_.begin(), data_.begin() + static_cast<long>(k) * e_, r.data_.begin());
    return r;
}

Polynomial PowerSeries::low_part(int k) const {
    std::vector<OKElement> c;
    for (int i = 0; i < std::min(k, M_); ++i) c.push_back(coeff(i));
    return Polynomial(field_, std::move(c));
}

PowerSeries PowerSeries::shifted_down(int k) const {
    PowerSeries r(field_, std::max(M_ - k, 0));
    std::copy(data_.begin() + static_cast<long>(std::min(k, M_)) * e_, data_.end(), r.data_.begin());
    return r;
}

PowerSeries PowerSeries::shifted_up(int k) const {
    PowerSeries r(field_, M_ + k);
    std::copy(data_.begin(), data_.end(), r.data_.begin() + static_cast<long>(k) * e_);
    return r;
}

bool PowerSeries::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const mpz_class& a) { return a == 0; });
}

PowerSeries PowerSeries::inverse() const {
    if (M_ == 0) return *this;
    const OKElement u0 = coeff(0).inverse();
    const OKElement minus_u0 = -u0;
    PowerSeries r(field_, M_);
    r.set_coeff(0, u0);
    std::vector<mpz_class> raw(field_->raw_width());
    std::vector<mpz_class> acc(e_);
    for (int k = 1; k < M_; ++k) {
        for (auto& x : raw) x = 0;
        for (int j = 1; j <= k; ++j) {
            if (coeff_is_zero(j)) continue;
            const mpz_class* a = coords(j);
            const mpz_class* b = r.coords(k - j);
            for (int s = 0; s < e_; ++s)
                for (int t = 0; t < e_; ++t) mpz_addmul(raw[s + t].get_mpz_t(), a[s].get_mpz_t(), b[t].get_mpz_t());
        }
        field_->reduce_raw(raw.data(), acc.data());
        r.set_coeff(k, OKElement::from_coords(field_, acc) * minus_u0);
    }
    return r;
}

PowerSeries PowerSeries::scaled(const OKElement& a) const {
    PowerSeries r(field_, M_);
    for (int i = 0; i < M_; ++i)
        if (!coeff_is_zero(i)) r.set_coeff(i, coeff(i) * a);
    return r;
}

OKElement PowerSeries::evaluate(const OKElement& z) const {
    OKElement acc = OKElement::zero(field_);
    for (int i = M_ - 1; i >= 0; --i) acc = acc * z + coeff(i);
    return acc;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& g) {
    require_same_field(field_, g.field_);
    if (g.M_ < M_) *this = truncated(g.M_);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += g.data_[i];
    for (int i = 0; i < M_; ++i) field_->canonicalize(coords(i));
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& g) {
    require_same_field(field_, g.field_);
    if (g.M_ < M_) *this = truncated(g.M_);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= g.data_[i];
    for (int i = 0; i < M_; ++i) field_->canonicalize(coords(i));
    return *this;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    require_same_field(f.field_, g.field_);
    const int M = std::min(f.M_, g.M_);
    const int e = f.e_;
    PowerSeries r(f.field_, M);
    std::vector<int> fnz, gnz;
    for (int i = 0; i < M; ++i) {
        if (!f.coeff_is_zero(i)) fnz.push_back(i);
    }
    std::vector<char> gflag(M, 0);
    for (int j = 0; j < M; ++j) gflag[j] = g.coeff_is_zero(j) ? 0 : 1;
    std::vector<mpz_class> raw(f.field_->raw_width());
    for (int k = 0; k < M; ++k) {
        for (auto& x : raw) x = 0;
        bool any = false;
        for (int i : fnz) {
            if (i > k) break;
            if (!gflag[k - i]) continue;
            any = true;
            const mpz_class* a = f.coords(i);
            const mpz_class* b = g.coords(k - i);
            for (int s = 0; s < e; ++s)
                for (int t = 0; t < e; ++t) mpz_addmul(raw[s + t].get_mpz_t(), a[s].get_mpz_t(), b[t].get_mpz_t());
        }
        if (any) f.field_->reduce_raw(raw.data(), r.coords(k));
    }
    return r;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& a : r.data_) a = -a;
    for (int i = 0; i < M_; ++i) field_->canonicalize(r.coords(i));
    return r;
}

bool operator==(const PowerSeries& f, const PowerSeries& g) {
    require_same_field(f.field_, g.field_);
    return f.M_ == g.M_ && f.data_ == g.data_;
}

bool PowerSeries::congruent(const PowerSeries& g, int k, int m) const {
    require_same_field(field_, g.field_);
    if (m > M_ || m > g.M_) throw UsageError("congruence requested beyond X-precision");
    for (int i = 0; i < m; ++i)
        if (!coeff(i).congruent(g.coeff(i), k)) return false;
    return true;
}

std::string PowerSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < M_; ++i) {
        if (coeff_is_zero(i)) continue;
        if (!first) os << " + ";
        first = false;
        os << coeff(i).to_string();
        if (i > 0) os << "*X^" << i;
    }
    if (first) os << "0";
    os << " + O(X^" << M_ << ")";
    return os.str();
}

PowerSeries ps_arith(const PowerSeries& f, const PowerSeries& g, SeriesArithKind kind) {
    switch (kind) {
        case SeriesArithKind::add: return f + g;
        case SeriesArithKind::sub: return f - g;
        case SeriesArithKind::mul: return f * g;
    }
    throw UsageError("unknown series arithmetic kind");
}

PowerSeries ps_derivative(const PowerSeries& f) {
    if (f.xprec() == 0) throw UsageError("derivative of a series with X-precision 0");
    PowerSeries r(f.field(), f.xprec() - 1);
    for (int i = 1; i < f.xprec(); ++i)
        if (!f.coeff_is_zero(i)) r.set_coeff(i - 1, f.coeff(i) * OKElement(f.field(), static_cast<long>(i)));
    return r;
}

PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
    require_same_field(f.field(), g.field());
    if (g.xprec() > 0 && !g.coeff_is_zero(0))
        throw CompositionDomain("inner series has constant term " + g.coeff(0).to_string() +
                                ", not zero at precision N");
    const int M = std::min(f.xprec(), g.xprec());
    const PowerSeries inner = g.truncated(M);
    PowerSeries acc(f.field(), M);
    // Horner: acc <- acc * g + f_i
    for (int i = M - 1; i >= 0; --i) {
        if (!acc.is_zero()) acc = acc * inner;
        if (!f.coeff_is_zero(i)) acc.set_coeff(0, acc.coeff(0) + f.coeff(i));
    }
    return acc;
}

int wideg(const PowerSeries& f) {
    for (int i = 0; i < f.xprec(); ++i)
        if (f.coeff_residue(i) != 0) return i;
    throw WidegNotCertified("no unit coefficient among c_0..c_" + std::to_string(f.xprec() - 1));
}

namespace {

struct HullPoint {
    long long x, y;
};

// Lower hull, left to right, strictly convex (collinear points dropped).
std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts) {
    std::vector<HullPoint> h;
    for (const auto& q : pts) {
        while (h.size() >= 2) {
            const auto& a = h[h.size() - 2];
            const auto& b = h[h.size() - 1];
            // drop b unless it lies strictly below segment a-q
            const long long cross = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
            if (cross <= 0) h.pop_back();
            else break;
        }
        h.push_back(q);
    }
    return h;
}

}  // namespace

int NewtonPolygon::positive_slope_length() const {
    int total = 0;
    for (const auto& s : segments)
        if (s.slope > 0) total += s.length;
    return total;
}

NewtonPolygon newton_polygon(const PowerSeries& f) {
    NewtonPolygon np;
    np.wideg = wideg(f);
    const int N = f.field()->precision();
    int first = 0;
    while (first < np.wideg && f.coeff_is_zero(first)) ++first;
    np.zero_multiplicity = first;

    std::vector<HullPoint> pts;
    for (int i = first; i <= np.wideg; ++i) {
        if (f.coeff_is_zero(i)) continue;
        pts.push_back({i, f.coeff(i).valuation().value});
    }
    const auto hull = lower_hull(pts);
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        NewtonSegment s;
        s.start = static_cast<int>(hull[k].x);
        s.length = static_cast<int>(hull[k + 1].x - hull[k].x);
        s.slope = Rational(hull[k].y - hull[k + 1].y, s.length);
        np.segments.push_back(s);
    }
    if (first == 0) return np;

    // Unknown coefficients below `first` could be as small as pi^N. A
    // segment is certified when it survives in the hull that includes the
    // worst case point (0, N).
    std::vector<HullPoint> worst{{0, N}};
    worst.insert(worst.end(), pts.begin(), pts.end());
    const auto whull = lower_hull(worst);
    auto is_edge = [&](long long a, long long b) {
        for (size_t k = 0; k + 1 < whull.size(); ++k)
            if (whull[k].x == a && whull[k + 1].x == b) return true;
        return false;
    };
    long long frontier = np.wideg;
    for (auto& s : np.segments) s.certified = is_edge(s.start, s.start + s.length);
    for (auto it = np.segments.rbegin(); it != np.segments.rend() && it->certified; ++it) frontier = it->start;
    for (size_t k = 0; k + 1 < whull.size(); ++k) {
        if (whull[k + 1].x == frontier) {
            np.certified_up_to = Rational(whull[k].y - whull[k + 1].y, whull[k + 1].x - whull[k].x);
            break;
        }
    }
    return np;
}

int count_roots_open_disk(const PowerSeries& f) { return wideg(f); }

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace padicres
