#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bialg/scalar.hpp"

namespace bialg {

/// Finite linear combination of basis keys with rational coefficients.
/// Zero coefficients are never stored, so structural equality is equality of
/// vectors. Iteration follows the key order.
template <class Key, class Compare = std::less<Key>>
class LinComb {
public:
    using key_type = Key;
    using map_type = std::map<Key, Scalar, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;
    explicit LinComb(const Key& k, const Scalar& c = 1) { add(k, c); }

    void add(const Key& k, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Scalar coeff(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar() : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    LinComb& operator+=(const LinComb& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }
    LinComb& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    /// this += s * o
    void axpy(const Scalar& s, const LinComb& o)
    {
        if (s.is_zero())
            return;
        for (const auto& [k, c] : o.terms_)
            add(k, s * c);
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
    friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
    friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    /// Applies a key-valued map linearly.
    template <class F>
    auto map_keys(F&& f) const
    {
        using R = std::decay_t<decltype(f(std::declval<const Key&>()))>;
        LinComb<R> out;
        for (const auto& [k, c] : terms_)
            out.add(f(k), c);
        return out;
    }

    /// Applies a map whose values are linear combinations, extended linearly.
    template <class F>
    auto apply(F&& f) const
    {
        using R = std::decay_t<decltype(f(std::declval<const Key&>()))>;
        R out;
        for (const auto& [k, c] : terms_)
            out.axpy(c, f(k));
        return out;
    }

private:
    map_type terms_;
};

template <class A, class B>
LinComb<std::pair<A, B>> tensor(const LinComb<A>& x, const LinComb<B>& y)
{
    LinComb<std::pair<A, B>> out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            out.add({a, b}, ca * cb);
    return out;
}

/// Text form "c1*k1 + c2*k2"; unit coefficients are omitted, the empty
/// combination prints as "0".
template <class Key, class Compare, class KeyFmt>
std::string format_terms(const LinComb<Key, Compare>& x, KeyFmt&& key_str)
{
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : x) {
        if (!first)
            out += " + ";
        first = false;
        if (!c.is_one())
            out += c.str() + "*";
        out += key_str(k);
    }
    return out;
}

/// (coefficient, basis) string pairs in key order; shared by the JSON writers.
template <class Key, class Compare, class KeyFmt>
std::vector<std::pair<std::string, std::string>> term_strings(const LinComb<Key, Compare>& x,
                                                              KeyFmt&& key_str)
{
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(x.size());
    for (const auto& [k, c] : x)
        out.emplace_back(c.str(), key_str(k));
    return out;
}

} // namespace bialg
