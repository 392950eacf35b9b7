#pragma once

#include <map>
#include <vector>

#include "bialg/lincomb.hpp"

namespace bialg {

/// Incremental row echelon basis over the rationals. Each stored vector is
/// normalized to leading coefficient 1 on its smallest key.
template <class Key, class Compare = std::less<Key>>
class EchelonBasis {
public:
    using Vec = LinComb<Key, Compare>;

    /// Reduces v against the current basis and returns the remainder.
    Vec reduce(Vec v) const
    {
        while (!v.is_zero()) {
            Key lead = v.begin()->first;
            Scalar c = v.begin()->second;
            auto it = pivots_.find(lead);
            if (it == pivots_.end())
                return v;
            v.axpy(-c, it->second);
        }
        return v;
    }

    /// Returns true when v was independent of the basis (and adds it).
    bool insert(const Vec& v)
    {
        Vec r = reduce(v);
        if (r.is_zero())
            return false;
        Key lead = r.begin()->first;
        Scalar inv = Scalar(1) / r.begin()->second;
        r *= inv;
        pivots_.emplace(lead, std::move(r));
        return true;
    }

    bool contains(const Vec& v) const { return reduce(v).is_zero(); }
    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    std::map<Key, Vec, Compare> pivots_;
};

template <class Key, class Compare>
std::size_t rank(const std::vector<LinComb<Key, Compare>>& vs)
{
    EchelonBasis<Key, Compare> b;
    for (const auto& v : vs)
        b.insert(v);
    return b.rank();
}

} // namespace bialg
