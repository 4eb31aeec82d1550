#pragma once

// Truncated power series over O_K, known modulo (pi^N, X^M).

#include <boost/rational.hpp>
#include <optional>
#include <vector>

#include "padicres/ok_arith.hpp"
#include "padicres/polynomial.hpp"

namespace padicres {

using Rational = boost::rational<long long>;

class PowerSeries {
public:
    PowerSeries() = default;
    // The zero series with X-precision xprec.
    PowerSeries(FieldRef field, int xprec);

    // Missing trailing coefficients are zero; more than xprec is an error.
    static PowerSeries from_coeffs(FieldRef field, const std::vector<OKElement>& coeffs, int xprec);
    static PowerSeries from_integers(FieldRef field, const std::vector<long>& coeffs, int xprec);
    static PowerSeries monomial(FieldRef field, int k, int xprec);

    const FieldRef& field() const { return field_; }
    int xprec() const { return M_; }

    OKElement coeff(int i) const;
    void set_coeff(int i, const OKElement& a);
    std::vector<OKElement> coeffs() const;

    // Coordinate block of coefficient i (field()->e() integers).
    const mpz_class* coords(int i) const { return &data_[static_cast<size_t>(i) * e_]; }
    mpz_class* coords(int i) { return &data_[static_cast<size_t>(i) * e_]; }
    bool coeff_is_zero(int i) const;
    long coeff_residue(int i) const;

    // Reduce the X-precision to m <= xprec.
    PowerSeries truncated(int m) const;
    // Reads the stored coefficients as an exact polynomial and re-embeds it
    // at X-precision m (zero tail). Used only where polynomial semantics
    // are the documented contract.
    PowerSeries padded(int m) const;
    // sum_{i<k} c_i X^i as an exact polynomial.
    Polynomial low_part(int k) const;
    // (f - low_part(k)) / X^k, X-precision M - k.
    PowerSeries shifted_down(int k) const;
    // X^k f, X-precision M + k.
    PowerSeries shifted_up(int k) const;

    bool is_zero() const;
    // Inverse of a series whose constant term is a unit.
    PowerSeries inverse() const;
    PowerSeries scaled(const OKElement& a) const;
    OKElement evaluate(const OKElement& z) const;

    PowerSeries& operator+=(const PowerSeries& g);
    PowerSeries& operator-=(const PowerSeries& g);
    friend PowerSeries operator+(PowerSeries f, const PowerSeries& g) { return f += g; }
    friend PowerSeries operator-(PowerSeries f, const PowerSeries& g) { return f -= g; }
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
    PowerSeries operator-() const;

    // Same X-precision and coefficients congruent mod pi^N.
    friend bool operator==(const PowerSeries& f, const PowerSeries& g);
    // Congruence modulo (pi^k, X^m).
    bool congruent(const PowerSeries& g, int k, int m) const;

    std::string to_string() const;

private:
    FieldRef field_;
    int M_ = 0;
    int e_ = 1;
    std::vector<mpz_class> data_;
};

enum class SeriesArithKind { add, sub, mul };

PowerSeries ps_arith(const PowerSeries& f, const PowerSeries& g, SeriesArithKind kind);
PowerSeries ps_derivative(const PowerSeries& f);
// f(g(X)); requires g(0) = 0 at precision N. Result X-precision min(M_f, M_g).
PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g);

// Index of the first unit coefficient. Throws WidegNotCertified when none of
// c_0..c_{M-1} is a unit.
int wideg(const PowerSeries& f);

struct NewtonSegment {
    Rational slope;      // common pi-adic valuation of the roots
    int length = 0;      // number of roots
    int start = 0;       // abscissa of the left vertex
    bool certified = true;
};

// Lower convex hull of {(i, val c_i)} between the first coefficient that is
// nonzero at precision N and wideg. Segments are listed left to right, so
// root valuations decrease along the list.
struct NewtonPolygon {
    std::vector<NewtonSegment> segments;
    // Multiplicity of the root 0 as seen at precision N.
    int zero_multiplicity = 0;
    int wideg = 0;
    // Every root of valuation < certified_up_to is represented exactly by a
    // certified segment. Empty means all segments are exact.
    std::optional<Rational> certified_up_to;

    int positive_slope_length() const;
};

NewtonPolygon newton_polygon(const PowerSeries& f);
int count_roots_open_disk(const PowerSeries& f);

std::string to_string(const Rational& r);

}  // namespace padicres
