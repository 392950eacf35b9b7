#include "bialg/scalar.hpp"

#include <cctype>

#include "bialg/error.hpp"

namespace bialg {

namespace {

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!is_integer_text(s))
        throw input_error("malformed rational '" + std::string(s) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Scalar::Scalar(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw domain_error("zero divisor");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Scalar(parse_integer(text), 1);
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den < 0)
        throw input_error("malformed rational '" + std::string(text) + "'");
    return Scalar(parse_integer(text.substr(0, slash)), den);
}

std::string Scalar::str() const
{
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw domain_error("zero divisor");
    q_ /= o.q_;
    return *this;
}

Scalar binomial(unsigned n, unsigned k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Scalar(r, 1);
}

Scalar factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Scalar(r, 1);
}

} // namespace bialg
