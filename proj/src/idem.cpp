#include "bialg/idem.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "bialg/error.hpp"

namespace bialg {

namespace {

// prefix[k][i] = sum over decompositions of w[0, i) into k nonempty blocks of
// the product of the blocks.
std::vector<std::vector<TensorElem>> prefix_products(const BInftyStructure& b, const Word& w)
{
    const std::size_t n = w.size();
    std::vector<std::vector<TensorElem>> prefix(n + 1, std::vector<TensorElem>(n + 1));
    prefix[0][0] = TensorElem(Word{});
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = k; i <= n; ++i)
            for (std::size_t j = k - 1; j < i; ++j)
                if (!prefix[k - 1][j].is_zero())
                    prefix[k][i] += b.product(prefix[k - 1][j], TensorElem(w.slice(j, i)));
    return prefix;
}

Scalar alternating(std::size_t k)
{
    Scalar c(1, static_cast<long>(k));
    return k % 2 == 1 ? c : -c;
}

} // namespace

TensorElem eulerian_idempotent(const BInftyStructure& b, const Word& w)
{
    const std::size_t n = w.size();
    if (n == 0)
        return {};
    const auto prefix = prefix_products(b, w);
    TensorElem out;
    for (std::size_t k = 1; k <= n; ++k)
        out.axpy(alternating(k), prefix[k][n]);
    return out;
}

TensorElem eulerian_idempotent(const BInftyStructure& b, const TensorElem& x)
{
    return x.apply([&b](const Word& w) { return eulerian_idempotent(b, w); });
}

LetterComb varpi(const BInftyStructure& b, const Word& w)
{
    const std::size_t n = w.size();
    if (n == 0)
        return {};
    // suffix[m][j]: decompositions of w[j, n) into m nonempty blocks
    std::vector<std::vector<TensorElem>> suffix(n + 1, std::vector<TensorElem>(n + 1));
    suffix[0][n] = TensorElem(Word{});
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t j = n - m + 1; j-- > 0;)
            for (std::size_t i = j + 1; i + (m - 1) <= n; ++i)
                if (!suffix[m - 1][i].is_zero())
                    suffix[m][j] += b.product(TensorElem(w.slice(j, i)), suffix[m - 1][i]);
    LetterComb out;
    for (std::size_t i = 1; i <= n; ++i) {
        const TensorElem head(w.slice(0, i));
        for (std::size_t k = 1; k <= n; ++k)
            if (!suffix[k - 1][i].is_zero())
                out.axpy(alternating(k), b.bracket(head, suffix[k - 1][i]));
    }
    return out;
}

LetterMap varpi_map(const BInftyStructure& b)
{
    return LetterMap::memoized([b](const Word& w) { return varpi(b, w); });
}

// ---------------------------------------------------------------------------

TangentEndo::TangentEndo(Fn fn, std::size_t bound)
    : fn_(std::move(fn)), bound_(bound), report_(std::make_shared<std::optional<TangentReport>>())
{
}

TangentEndo TangentEndo::eulerian(const BInftyStructure& b, std::size_t bound)
{
    return TangentEndo([b](const Word& w) { return eulerian_idempotent(b, w); }, bound);
}

TensorElem TangentEndo::operator()(const TensorElem& x) const
{
    return x.apply([this](const Word& w) { return fn_(w); });
}

TangentReport TangentEndo::verify(const BInftyStructure& b) const
{
    if (*report_)
        return **report_;
    TangentReport r;
    r.bound = bound_;
    r.unit_vanishes = fn_(Word{}).is_zero();
    r.letters_fixed = true;
    for (std::size_t l = 0; l < b.alphabet().size(); ++l) {
        const Word v{Letter(l)};
        if (!(fn_(v) == TensorElem(v))) {
            r.letters_fixed = false;
            break;
        }
    }
    r.products_vanish = true;
    const auto words = all_words(b.alphabet().size(), bound_ > 0 ? bound_ - 1 : 0, 1);
    for (const auto& w : words) {
        for (const auto& w2 : words) {
            if (w.size() + w2.size() > bound_)
                continue;
            if (!(*this)(b.product(w, w2)).is_zero()) {
                r.products_vanish = false;
                break;
            }
        }
        if (!r.products_vanish)
            break;
    }
    *report_ = r;
    return r;
}

// ---------------------------------------------------------------------------

namespace {

LetterMap omega_from(const TangentEndo& phi)
{
    return LetterMap::memoized([phi](const Word& w) { return project_letters(phi(w)); });
}

} // namespace

ShuffleIsomorphism::ShuffleIsomorphism(const BInftyStructure& b, const TangentEndo& phi)
    : omega_(omega_from(phi)), inverse_map_(inverse_structure_map(omega_))
{
    if (!phi.verify(b).ok())
        throw domain_error("not tangent to identity");
}

ShuffleIsomorphism ShuffleIsomorphism::canonical(const BInftyStructure& b, std::size_t bound)
{
    return ShuffleIsomorphism(b, TangentEndo::eulerian(b, bound));
}

TensorElem ShuffleIsomorphism::forward(const TensorElem& x) const { return structure_endo(omega_, x); }

TensorElem ShuffleIsomorphism::inverse(const TensorElem& x) const
{
    return structure_endo(inverse_map_, x);
}

TensorElem omega_tilde(const BInftyStructure& b, const TangentEndo& phi, const TensorElem& x)
{
    return ShuffleIsomorphism(b, phi).forward(x);
}

// ---------------------------------------------------------------------------

namespace {

struct ZetaState {
    explicit ZetaState(const BInftyStructure& b) : varpi(varpi_map(b)) {}
    LetterMap varpi;
    std::shared_mutex mutex;
    std::map<Word, LetterComb> values;
};

LetterComb zeta_value(ZetaState& st, const Word& w)
{
    if (w.size() <= 1)
        return w.empty() ? LetterComb() : LetterComb(w[0]);
    {
        std::shared_lock lock(st.mutex);
        auto it = st.values.find(w);
        if (it != st.values.end())
            return it->second;
    }
    // Sum over decompositions into at least two blocks of
    // zeta(w_1)...zeta(w_k), as a tensor.
    TensorElem blocks;
    for_each_composition(w.size(), [&](const std::vector<std::size_t>& cuts) {
        if (cuts.size() < 3)
            return;
        TensorElem t(Word{});
        for (std::size_t i = 0; i + 1 < cuts.size() && !t.is_zero(); ++i)
            t = concat(t, as_tensor(zeta_value(st, w.slice(cuts[i], cuts[i + 1]))));
        blocks += t;
    });
    LetterComb out = -st.varpi(blocks);
    std::unique_lock lock(st.mutex);
    return st.values.try_emplace(w, std::move(out)).first->second;
}

} // namespace

LetterMap zeta_map(const BInftyStructure& b)
{
    auto state = std::make_shared<ZetaState>(b);
    return LetterMap([state](const Word& w) { return zeta_value(*state, w); });
}

LetterComb zeta(const BInftyStructure& b, const Word& w) { return zeta_map(b)(w); }

TensorElem zeta_tilde(const BInftyStructure& b, const TensorElem& x) { return structure_endo(zeta_map(b), x); }

TensorElem zeta_tilde_generic(const BInftyStructure& b, const TensorElem& x)
{
    return inverse_structure_endo(varpi_map(b), x);
}

// ---------------------------------------------------------------------------

namespace {

void require_commutative_associative(const LetterProduct& mult)
{
    if (!mult.is_total() || !mult.is_associative() || !mult.is_commutative())
        throw domain_error("Hoffman maps need a total, associative and commutative letter product");
}

} // namespace

LetterComb hoffman_log(const LetterProduct& mult, const Word& w)
{
    require_commutative_associative(mult);
    if (w.empty())
        return {};
    return mult.product_of(w) * alternating(w.size());
}

LetterComb hoffman_exp(const LetterProduct& mult, const Word& w)
{
    require_commutative_associative(mult);
    if (w.empty())
        return {};
    return mult.product_of(w) * (Scalar(1) / factorial(static_cast<unsigned>(w.size())));
}

TensorElem hoffman_log_tilde(const LetterProduct& mult, const TensorElem& x)
{
    require_commutative_associative(mult);
    return structure_endo(LetterMap([mult](const Word& w) { return hoffman_log(mult, w); }), x);
}

TensorElem hoffman_exp_tilde(const LetterProduct& mult, const TensorElem& x)
{
    require_commutative_associative(mult);
    return structure_endo(LetterMap([mult](const Word& w) { return hoffman_exp(mult, w); }), x);
}

} // namespace bialg
