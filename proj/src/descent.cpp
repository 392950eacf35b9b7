#include "bialg/descent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <numeric>

#include "bialg/error.hpp"
#include "bialg/linalg.hpp"
#include "text.hpp"

namespace bialg::desc {

using detail::trim;

namespace {

void check_degree(int n, int lo = 0)
{
    if (n < lo)
        throw input_error("degree must be at least " + std::to_string(lo));
    if (n > max_degree)
        throw size_bound_error("size bound: degree " + std::to_string(n) + " exceeds " +
                               std::to_string(max_degree));
}

unsigned position_mask(int n, const std::vector<int>& positions)
{
    unsigned mask = 0;
    for (int p : positions) {
        if (p == n)
            continue;  // tolerate the implicit element n
        if (p < 1 || p > n - 1)
            throw input_error("descent position " + std::to_string(p) + " outside [1," +
                              std::to_string(n - 1) + "]");
        mask |= 1u << (p - 1);
    }
    return mask;
}

unsigned descent_mask(const Permutation& p)
{
    unsigned mask = 0;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1))
            mask |= 1u << (i - 1);
    return mask;
}

} // namespace

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<std::uint8_t> v) : images(std::move(v))
{
    std::vector<bool> seen(images.size() + 1, false);
    for (auto x : images) {
        if (x < 1 || x > images.size() || seen[x])
            throw input_error("not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), std::uint8_t{1});
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text)
{
    std::vector<std::uint8_t> v;
    std::size_t i = 0;
    text = trim(text);
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ')
            ++i;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ')
            ++j;
        if (j > i) {
            unsigned long x = 0;
            if (!detail::parse_unsigned(text.substr(i, j - i), x) || x > 255)
                throw input_error("bad permutation entry '" + std::string(text.substr(i, j - i)) + "'");
            v.push_back(static_cast<std::uint8_t>(x));
        }
        i = j;
    }
    if (static_cast<int>(v.size()) > max_degree)
        throw size_bound_error("size bound: permutation longer than " + std::to_string(max_degree));
    return Permutation(std::move(v));
}

std::string Permutation::str() const
{
    std::string out;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(images[i]);
    }
    return out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau)
{
    if (sigma.size() != tau.size())
        throw domain_error("degree mismatch in composition");
    std::vector<std::uint8_t> v(tau.images.size());
    for (int i = 1; i <= tau.size(); ++i)
        v[i - 1] = static_cast<std::uint8_t>(sigma(tau(i)));
    Permutation out;
    out.images = std::move(v);
    return out;
}

std::vector<Permutation> all_permutations(int n)
{
    check_degree(n);
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do
        out.push_back(p);
    while (std::next_permutation(p.images.begin(), p.images.end()));
    return out;
}

std::vector<int> descent_set(const Permutation& p)
{
    std::vector<int> out;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1))
            out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------
// Group algebra

GroupAlgElem::GroupAlgElem(int degree, LinComb<Permutation> t) : n(degree), terms(std::move(t))
{
    for (const auto& [p, c] : terms)
        if (p.size() != n)
            throw domain_error("permutation of the wrong degree in a group algebra element");
}

GroupAlgElem GroupAlgElem::identity(int n)
{
    check_degree(n);
    return GroupAlgElem(n, LinComb<Permutation>(Permutation::identity(n)));
}

GroupAlgElem GroupAlgElem::parse(std::string_view text)
{
    text = trim(text);
    auto named = [&](std::string_view prefix) -> std::optional<int> {
        if (text.substr(0, prefix.size()) != prefix)
            return std::nullopt;
        unsigned long n = 0;
        if (!detail::parse_unsigned(text.substr(prefix.size()), n))
            return std::nullopt;
        if (n > static_cast<unsigned long>(max_degree))
            throw size_bound_error("size bound: degree exceeds " + std::to_string(max_degree));
        return static_cast<int>(n);
    };
    if (auto n = named("id"))
        return identity(*n);
    if (auto n = named("dyn"))
        return dynkin(*n);
    if (auto n = named("sol"))
        return solomon(*n);

    std::optional<int> degree;
    LinComb<Permutation> terms;
    for (auto term : detail::split(text, '+')) {
        term = trim(term);
        Scalar c = 1;
        auto open = term.find('[');
        auto close = term.find(']');
        if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
            !trim(term.substr(close + 1)).empty())
            throw input_error("expected terms like '1/2*[2 1]' or a name id<n>, dyn<n>, sol<n>");
        auto coeff = trim(term.substr(0, open));
        if (!coeff.empty()) {
            if (coeff == "-")
                c = -1;
            else if (coeff.back() == '*')
                c = Scalar::parse(coeff.substr(0, coeff.size() - 1));
            else
                throw input_error("bad coefficient '" + std::string(coeff) + "'");
        }
        Permutation p = Permutation::parse(term.substr(open + 1, close - open - 1));
        if (degree && *degree != p.size())
            throw input_error("terms of different degrees");
        degree = p.size();
        terms.add(p, c);
    }
    return GroupAlgElem(degree.value_or(0), std::move(terms));
}

std::string GroupAlgElem::str() const
{
    return format_terms(terms, [](const Permutation& p) { return "[" + p.str() + "]"; });
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o)
{
    if (n != o.n && !o.terms.is_zero() && !terms.is_zero())
        throw domain_error("degree mismatch");
    if (terms.is_zero())
        n = o.n;
    terms += o.terms;
    return *this;
}

GroupAlgElem& GroupAlgElem::operator-=(const GroupAlgElem& o)
{
    if (n != o.n && !o.terms.is_zero() && !terms.is_zero())
        throw domain_error("degree mismatch");
    if (terms.is_zero())
        n = o.n;
    terms -= o.terms;
    return *this;
}

GroupAlgElem& GroupAlgElem::operator*=(const Scalar& s)
{
    terms *= s;
    return *this;
}

GroupAlgElem de_equal(int n, const std::vector<int>& positions)
{
    check_degree(n, 1);
    const unsigned mask = position_mask(n, positions);
    LinComb<Permutation> terms;
    for (const auto& p : all_permutations(n))
        if (descent_mask(p) == mask)
            terms.add(p, 1);
    return GroupAlgElem(n, std::move(terms));
}

GroupAlgElem de_subset(int n, const std::vector<int>& positions)
{
    check_degree(n, 1);
    const unsigned mask = position_mask(n, positions);
    LinComb<Permutation> terms;
    for (const auto& p : all_permutations(n))
        if ((descent_mask(p) & ~mask) == 0)
            terms.add(p, 1);
    return GroupAlgElem(n, std::move(terms));
}

GroupAlgElem dynkin(int n)
{
    check_degree(n, 1);
    GroupAlgElem out(n);
    for (const auto& p : all_permutations(n)) {
        // De_{={1..i}} holds the permutations whose descent set is {1..i}
        const unsigned mask = descent_mask(p);
        if ((mask & (mask + 1)) != 0)
            continue;
        const int i = __builtin_popcount(mask);
        out.terms.add(p, i % 2 == 0 ? 1 : -1);
    }
    return out;
}

GroupAlgElem solomon(int n)
{
    check_degree(n, 1);
    GroupAlgElem out(n);
    for (const auto& p : all_permutations(n)) {
        const unsigned k = static_cast<unsigned>(__builtin_popcount(descent_mask(p)));
        Scalar c = Scalar(1) / (Scalar(n) * binomial(static_cast<unsigned>(n - 1), k));
        out.terms.add(p, k % 2 == 0 ? c : -c);
    }
    return out;
}

TensorElem act_on_tensor(const GroupAlgElem& g, const Word& w)
{
    if (static_cast<int>(w.size()) != g.n)
        throw domain_error("word length " + std::to_string(w.size()) + " does not match degree " +
                           std::to_string(g.n));
    TensorElem out;
    for (const auto& [p, c] : g.terms) {
        Word u;
        u.letters.reserve(w.size());
        for (int i = 1; i <= g.n; ++i)
            u.letters.push_back(w[static_cast<std::size_t>(p(i) - 1)]);
        out.add(u, c);
    }
    return out;
}

TensorElem act_on_tensor(const GroupAlgElem& g, const TensorElem& x)
{
    return x.apply([&g](const Word& w) { return act_on_tensor(g, w); });
}

GroupAlgElem convolution(const GroupAlgElem& g, const GroupAlgElem& h)
{
    const int p = g.n, q = h.n, n = p + q;
    check_degree(n);
    LinComb<Permutation> terms;
    // Unshuffles of x_1...x_n with |I| = p, I listed increasingly.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != p)
            continue;
        Word left, right;
        for (int i = 0; i < n; ++i)
            (mask & (1u << i) ? left : right).letters.push_back(static_cast<Letter>(i + 1));
        for (const auto& [wl, cl] : act_on_tensor(g, left))
            for (const auto& [wr, cr] : act_on_tensor(h, right)) {
                Word u = concat(wl, wr);
                std::vector<std::uint8_t> v(u.letters.begin(), u.letters.end());
                Permutation perm;
                perm.images = std::move(v);
                terms.add(perm, cl * cr);
            }
    }
    return GroupAlgElem(n, std::move(terms));
}

GroupAlgElem internal_product(const GroupAlgElem& g, const GroupAlgElem& h)
{
    if (g.n != h.n)
        throw domain_error("degree mismatch in internal product");
    LinComb<Permutation> terms;
    for (const auto& [s, cs] : g.terms)
        for (const auto& [t, ct] : h.terms)
            terms.add(compose(s, t), cs * ct);
    return GroupAlgElem(g.n, std::move(terms));
}

// ---------------------------------------------------------------------------
// Descent algebra

std::string composition_str(const Composition& c)
{
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(c[i]);
    }
    return out + ")";
}

std::vector<Composition> compositions(int n)
{
    if (n == 0)
        return {Composition{}};
    std::vector<Composition> out;
    for_each_composition(static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& cuts) {
        Composition c;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            c.push_back(static_cast<int>(cuts[i + 1] - cuts[i]));
        out.push_back(std::move(c));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> composition_positions(const Composition& c)
{
    std::vector<int> out;
    int s = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        out.push_back(s += c[i]);
    return out;
}

Composition positions_composition(int n, const std::vector<int>& positions)
{
    const unsigned mask = position_mask(n, positions);
    Composition c;
    int last = 0;
    for (int i = 1; i < n; ++i)
        if (mask & (1u << (i - 1))) {
            c.push_back(i - last);
            last = i;
        }
    if (n > 0)
        c.push_back(n - last);
    return c;
}

GroupAlgElem de_composition(const Composition& c)
{
    GroupAlgElem acc = GroupAlgElem::identity(0);
    for (int part : c) {
        if (part < 1)
            throw input_error("composition parts must be positive");
        acc = convolution(acc, GroupAlgElem::identity(part));
    }
    return acc;
}

std::string DescElem::str() const
{
    const char* name = basis == DescBasis::equal ? "De=" : "De";
    return format_terms(terms, [name](const Composition& c) { return name + composition_str(c); });
}

DescElem to_desc(const GroupAlgElem& g, DescBasis basis)
{
    check_degree(g.n);
    // Coefficients must be constant on each descent class.
    std::map<unsigned, Scalar> by_class;
    std::map<unsigned, std::size_t> support;
    for (const auto& [p, c] : g.terms) {
        const unsigned m = descent_mask(p);
        auto [it, inserted] = by_class.try_emplace(m, c);
        if (!inserted && !(it->second == c))
            throw domain_error("not in the descent algebra");
        ++support[m];
    }
    std::map<unsigned, std::size_t> class_size;
    for (const auto& p : all_permutations(g.n))
            ++class_size[descent_mask(p)];
    for (const auto& [m, count] : support)
        if (count != class_size[m])
            throw domain_error("not in the descent algebra");

    DescElem d;
    d.n = g.n;
    d.basis = DescBasis::equal;
    for (const auto& [m, c] : by_class) {
        std::vector<int> pos;
        for (int i = 1; i < g.n; ++i)
            if (m & (1u << (i - 1)))
                pos.push_back(i);
        d.terms.add(positions_composition(g.n, pos), c);
    }
    return change_basis(d, basis);
}

DescElem change_basis(const DescElem& d, DescBasis target)
{
    if (d.basis == target)
        return d;
    // De_{=S} = sum_{T subset S} (-1)^{|S-T|} De_T and De_S = sum_{T subset S} De_{=T}
    const bool to_subset = target == DescBasis::subset;
    DescElem out;
    out.n = d.n;
    out.basis = target;
    for (const auto& [comp, c] : d.terms) {
        const auto pos = composition_positions(comp);
        const std::size_t k = pos.size();
        for (unsigned sub = 0; sub < (1u << k); ++sub) {
            std::vector<int> t;
            for (std::size_t i = 0; i < k; ++i)
                if (sub & (1u << i))
                    t.push_back(pos[i]);
            const bool odd = (k - t.size()) % 2 == 1;
            out.terms.add(positions_composition(d.n, t), to_subset && odd ? -c : c);
        }
    }
    return out;
}

GroupAlgElem to_group_algebra(const DescElem& d)
{
    const DescElem e = change_basis(d, DescBasis::equal);
    GroupAlgElem out(d.n);
    for (const auto& [comp, c] : e.terms) {
        GroupAlgElem part = d.n == 0 ? GroupAlgElem::identity(0) : de_equal(d.n, composition_positions(comp));
        out.terms.axpy(c, part.terms);
    }
    return out;
}

LinComb<CompositionPair> desc_coproduct(const DescElem& d)
{
    const DescElem s = change_basis(d, DescBasis::subset);
    LinComb<CompositionPair> out;
    for (const auto& [comp, c] : s.terms) {
        // componentwise splits a + b = comp, zero parts dropped
        std::vector<int> a(comp.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == comp.size()) {
                Composition left, right;
                for (std::size_t j = 0; j < comp.size(); ++j) {
                    if (a[j] > 0)
                        left.push_back(a[j]);
                    if (comp[j] - a[j] > 0)
                        right.push_back(comp[j] - a[j]);
                }
                out.add({left, right}, c);
                return;
            }
            for (a[i] = 0; a[i] <= comp[i]; ++a[i])
                rec(i + 1);
        };
        rec(0);
    }
    return out;
}

bool is_primitive(const DescElem& d)
{
    const DescElem s = change_basis(d, DescBasis::subset);
    LinComb<CompositionPair> expected;
    for (const auto& [comp, c] : s.terms) {
        expected.add({comp, Composition{}}, c);
        expected.add({Composition{}, comp}, c);
    }
    return desc_coproduct(s) == expected;
}

Alphabet standard_alphabet(int n) { return Alphabet::numbered("x", static_cast<std::size_t>(n)); }

Word standard_word(int n)
{
    Word w;
    for (int i = 0; i < n; ++i)
        w.letters.push_back(static_cast<Letter>(i));
    return w;
}

bool lie_projection_check(const GroupAlgElem& g, int n)
{
    if (n < 1)
        throw input_error("degree must be at least 1");
    if (n > max_lie_degree)
        throw size_bound_error("size bound: Lie check limited to degree " + std::to_string(max_lie_degree));
    if (g.n != n)
        throw domain_error("element degree does not match n");
    auto bracket = [](const TensorElem& a, const TensorElem& b) { return concat(a, b) - concat(b, a); };
    EchelonBasis<Word> lie;
    std::vector<Letter> head(static_cast<std::size_t>(n - 1));
    std::iota(head.begin(), head.end(), Letter{0});
    do {
        TensorElem v(Word{static_cast<Letter>(n - 1)});
        for (std::size_t i = head.size(); i-- > 0;)
            v = bracket(TensorElem(Word{head[i]}), v);
        lie.insert(v);
    } while (std::next_permutation(head.begin(), head.end()));
    return lie.contains(act_on_tensor(g, standard_word(n)));
}

} // namespace bialg::desc
