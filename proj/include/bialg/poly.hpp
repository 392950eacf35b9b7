#pragma once

#include <map>
#include <optional>
#include <string>

#include "bialg/scalar.hpp"

namespace bialg {

/// Univariate polynomial in X with rational coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Scalar& c);

    static Poly monomial(unsigned exponent, const Scalar& c = 1);
    static Poly x() { return monomial(1); }

    const std::map<unsigned, Scalar>& coefficients() const noexcept { return coeffs_; }
    Scalar coeff(unsigned exponent) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<unsigned> degree() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Descending exponents, e.g. "6X^2+6X+1"; the zero polynomial is "0".
    std::string str() const;

private:
    void add_term(unsigned e, const Scalar& c);

    std::map<unsigned, Scalar> coeffs_;
};

/// Exact value of the integral of p over [-1, 0].
Scalar integrate_unit_interval(const Poly& p);

} // namespace bialg
