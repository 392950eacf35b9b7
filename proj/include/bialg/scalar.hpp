#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bialg {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}
    Scalar(const mpz_class& num, const mpz_class& den);
    explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Scalar parse(std::string_view text);

    const mpq_class& value() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return q_ == 1; }
    int sign() const noexcept { return sgn(q_); }

    /// "p/q" with the denominator omitted when it is 1.
    std::string str() const;

    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.q_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

/// n choose k as an exact integer scalar.
Scalar binomial(unsigned n, unsigned k);
Scalar factorial(unsigned n);

} // namespace bialg
