#include "bialg/poly.hpp"

namespace bialg {

Poly::Poly(const Scalar& c) { add_term(0, c); }

Poly Poly::monomial(unsigned exponent, const Scalar& c)
{
    Poly p;
    p.add_term(exponent, c);
    return p;
}

Scalar Poly::coeff(unsigned exponent) const
{
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Scalar() : it->second;
}

std::optional<unsigned> Poly::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.rbegin()->first;
}

void Poly::add_term(unsigned e, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [e, c] : o.coeffs_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [e, c] : o.coeffs_)
        add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& s)
{
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, c] : coeffs_)
        c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

std::string Poly::str() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        Scalar mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        bool integral = mag.denominator() == 1;
        if (e == 0)
            out += mag.str();
        else if (!mag.is_one())
            out += integral ? mag.str() : "(" + mag.str() + ")";
        if (e >= 1)
            out += "X";
        if (e >= 2)
            out += "^" + std::to_string(e);
    }
    return out;
}

Scalar integrate_unit_interval(const Poly& p)
{
    // int_{-1}^{0} t^k dt = -(-1)^{k+1}/(k+1) = (-1)^k/(k+1)
    Scalar total;
    for (const auto& [e, c] : p.coefficients()) {
        Scalar term = c / Scalar(static_cast<long>(e) + 1);
        if (e % 2 == 1)
            term = -term;
        total += term;
    }
    return total;
}

} // namespace bialg
