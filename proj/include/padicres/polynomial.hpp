#pragma once

#include <utility>
#include <vector>

#include "padicres/ok_arith.hpp"

namespace padicres {

class PowerSeries;

// Dense polynomial over O_K / pi^N. Coefficients that vanish mod pi^N are
// trimmed from the top, so degree() is the degree of the class mod pi^N.
class Polynomial {
public:
    explicit Polynomial(FieldRef field) : field_(std::move(field)) {}
    Polynomial(FieldRef field, std::vector<OKElement> coeffs);

    static Polynomial from_integers(FieldRef field, const std::vector<long>& coeffs);
    static Polynomial monomial(FieldRef field, int k);
    // (X - z_1)...(X - z_k)
    static Polynomial from_roots(FieldRef field, const std::vector<OKElement>& roots);

    const FieldRef& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    OKElement coeff(int i) const;
    const std::vector<OKElement>& coeffs() const { return c_; }

    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    Polynomial operator-() const;
    Polynomial scaled(const OKElement& a) const;

    // Division by a monic polynomial: *this = q * divisor + r, deg r < deg divisor.
    std::pair<Polynomial, Polynomial> divrem_monic(const Polynomial& divisor) const;

    OKElement evaluate(const OKElement& x) const;
    Polynomial derivative() const;
    // Drops coefficients of degree >= k.
    Polynomial truncated(int k) const;
    PowerSeries to_series(int xprec) const;

    friend bool operator==(const Polynomial& f, const Polynomial& g);

    std::string to_string() const;

private:
    void trim();

    FieldRef field_;
    std::vector<OKElement> c_;
};

}  // namespace padicres
