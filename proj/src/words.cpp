#include "bialg/words.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "bialg/error.hpp"
#include "text.hpp"

namespace bialg {

using detail::trim;

// ---------------------------------------------------------------------------
// Alphabet and text forms

Alphabet Alphabet::parse(std::string_view text)
{
    Alphabet a;
    text = trim(text);
    if (text.empty())
        throw input_error("empty alphabet");
    for (auto item : detail::split(text, ',')) {
        item = trim(item);
        auto colon = item.find(':');
        std::string_view name = trim(item.substr(0, colon));
        unsigned long degree = 1;
        if (colon != std::string_view::npos && !detail::parse_unsigned(item.substr(colon + 1), degree))
            throw input_error("bad degree in alphabet entry '" + std::string(item) + "'");
        a.add(std::string(name), static_cast<unsigned>(degree));
    }
    return a;
}

Alphabet Alphabet::numbered(std::string_view prefix, std::size_t n)
{
    Alphabet a;
    for (std::size_t i = 1; i <= n; ++i)
        a.add(std::string(prefix) + std::to_string(i));
    return a;
}

Letter Alphabet::add(std::string name, unsigned degree)
{
    if (!detail::is_identifier(name))
        throw input_error("letter name '" + name + "' is not an identifier");
    if (degree < 1)
        throw input_error("letter '" + name + "' must have degree >= 1");
    if (find(name))
        throw input_error("duplicate letter '" + name + "'");
    if (names_.size() >= 0xffff)
        throw size_bound_error("size bound: alphabet too large");
    names_.push_back(std::move(name));
    degrees_.push_back(degree);
    return static_cast<Letter>(names_.size() - 1);
}

unsigned Alphabet::degree(const Word& w) const
{
    unsigned d = 0;
    for (Letter l : w.letters)
        d += degree(l);
    return d;
}

std::optional<Letter> Alphabet::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<Letter>(i);
    return std::nullopt;
}

Letter Alphabet::at(std::string_view name) const
{
    if (auto l = find(name))
        return *l;
    throw input_error("unknown letter '" + std::string(name) + "'");
}

std::string Alphabet::str() const
{
    std::string out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i)
            out += ",";
        out += names_[i] + ":" + std::to_string(degrees_[i]);
    }
    return out;
}

Word Alphabet::parse_word(std::string_view text) const
{
    text = trim(text);
    if (text.empty())
        throw input_error("empty word text (use 1 for the unit word)");
    if (text == "1")
        return {};
    Word w;
    for (auto part : detail::split(text, '.'))
        w.letters.push_back(at(trim(part)));
    return w;
}

std::string Alphabet::format(const Word& w) const
{
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ".";
        out += name(w[i]);
    }
    return out;
}

TensorElem Alphabet::parse_tensor(std::string_view text) const
{
    text = trim(text);
    if (text.empty())
        throw input_error("empty tensor text");
    TensorElem x;
    if (text == "0")
        return x;
    for (auto term : detail::split(text, '+')) {
        term = trim(term);
        if (term.empty())
            throw input_error("empty term in '" + std::string(text) + "'");
        Scalar c = 1;
        auto star = term.find('*');
        if (star != std::string_view::npos) {
            c = Scalar::parse(term.substr(0, star));
            term = trim(term.substr(star + 1));
        } else if (term.front() == '-') {
            c = -1;
            term = trim(term.substr(1));
        }
        x.add(parse_word(term), c);
    }
    return x;
}

std::string Alphabet::format(const TensorElem& x) const
{
    return format_terms(x, [this](const Word& w) { return format(w); });
}

LetterComb Alphabet::parse_letters(std::string_view text) const
{
    LetterComb out;
    for (const auto& [w, c] : parse_tensor(text)) {
        if (w.size() != 1)
            throw input_error("expected a combination of letters, got word '" + format(w) + "'");
        out.add(w[0], c);
    }
    return out;
}

std::string Alphabet::format(const LetterComb& x) const
{
    return format_terms(x, [this](Letter l) { return name(l); });
}

// ---------------------------------------------------------------------------
// Coalgebra structure

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_len, std::size_t min_len)
{
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len >= min_len)
            out.insert(out.end(), layer.begin(), layer.end());
        if (len == max_len)
            break;
        std::vector<Word> next;
        next.reserve(layer.size() * alphabet_size);
        for (const auto& w : layer)
            for (std::size_t a = 0; a < alphabet_size; ++a) {
                Word u = w;
                u.letters.push_back(static_cast<Letter>(a));
                next.push_back(std::move(u));
            }
        layer = std::move(next);
    }
    return out;
}

Word concat(const Word& a, const Word& b)
{
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

TensorElem concat(const TensorElem& a, const TensorElem& b)
{
    TensorElem out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b)
            out.add(concat(u, v), cu * cv);
    return out;
}

TensorElem as_tensor(const LetterComb& x)
{
    return x.map_keys([](Letter l) { return Word{l}; });
}

LetterComb project_letters(const TensorElem& x)
{
    LetterComb out;
    for (const auto& [w, c] : x)
        if (w.size() == 1)
            out.add(w[0], c);
    return out;
}

Scalar counit(const TensorElem& x) { return x.coeff(Word{}); }

LinComb<WordPair> deconcat(const Word& w)
{
    LinComb<WordPair> out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        out.add({w.slice(0, i), w.slice(i, w.size())}, 1);
    return out;
}

LinComb<WordPair> deconcat(const TensorElem& x)
{
    return x.apply([](const Word& w) { return deconcat(w); });
}

namespace {

// Splits of w into k nonempty blocks, appended to out with coefficient c.
void add_splits(const Word& w, std::size_t k, const Scalar& c, LinComb<WordTuple>& out)
{
    const std::size_t n = w.size();
    if (k > n)
        return;
    std::vector<std::size_t> cuts(k + 1);
    cuts[0] = 0;
    cuts[k] = n;
    // cuts[1..k-1] strictly increasing in [1, n-1]
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == k) {
            WordTuple t;
            t.reserve(k);
            for (std::size_t b = 0; b < k; ++b)
                t.push_back(w.slice(cuts[b], cuts[b + 1]));
            out.add(t, c);
            return;
        }
        const std::size_t lo = cuts[j - 1] + 1;
        const std::size_t hi = n - (k - j);
        for (std::size_t p = lo; p <= hi; ++p) {
            cuts[j] = p;
            rec(j + 1);
        }
    };
    rec(1);
}

} // namespace

LinComb<WordTuple> reduced_coproduct(const TensorElem& x, std::size_t k)
{
    if (k == 0)
        throw domain_error("reduced coproduct needs k >= 1");
    if (!counit(x).is_zero())
        throw domain_error("not augmentation-reduced");
    LinComb<WordTuple> out;
    for (const auto& [w, c] : x)
        add_splits(w, k, c, out);
    return out;
}

std::size_t coradical_degree(const TensorElem& x)
{
    if (x.is_zero())
        throw domain_error("coradical degree of zero is undefined");
    for (std::size_t n = 1;; ++n)
        if (reduced_coproduct(x, n + 1).is_zero())
            return n;
}

void for_each_composition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    if (n == 0)
        return;
    // bit i of mask set = cut after letter i+1
    const std::size_t masks = std::size_t{1} << (n - 1);
    std::vector<std::size_t> cuts;
    for (std::size_t mask = 0; mask < masks; ++mask) {
        cuts.assign(1, 0);
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (mask & (std::size_t{1} << i))
                cuts.push_back(i + 1);
        cuts.push_back(n);
        f(cuts);
    }
}

// ---------------------------------------------------------------------------
// Letter-valued maps

LetterComb LetterMap::operator()(const TensorElem& x) const
{
    LetterComb out;
    for (const auto& [w, c] : x) {
        if (w.empty())
            continue;
        out.axpy(c, fn_(w));
    }
    return out;
}

LetterMap LetterMap::canonical_projection()
{
    return LetterMap([](const Word& w) { return w.size() == 1 ? LetterComb(w[0]) : LetterComb(); });
}

LetterMap LetterMap::from_table(std::map<Word, LetterComb> table, std::optional<std::size_t> max_length,
                                bool identity_on_letters)
{
    auto shared = std::make_shared<const std::map<Word, LetterComb>>(std::move(table));
    return LetterMap([shared, max_length, identity_on_letters](const Word& w) {
        auto it = shared->find(w);
        if (it != shared->end())
            return it->second;
        if (identity_on_letters && w.size() == 1)
            return LetterComb(w[0]);
        if (max_length && w.size() > *max_length)
            throw domain_error("partial map: no value for a word of length " + std::to_string(w.size()));
        return LetterComb();
    });
}

namespace {

struct LetterMapCache {
    std::shared_mutex mutex;
    std::map<Word, LetterComb> values;
};

} // namespace

LetterMap LetterMap::memoized(Fn fn)
{
    auto cache = std::make_shared<LetterMapCache>();
    return LetterMap([cache, fn = std::move(fn)](const Word& w) {
        {
            std::shared_lock lock(cache->mutex);
            auto it = cache->values.find(w);
            if (it != cache->values.end())
                return it->second;
        }
        LetterComb v = fn(w);
        std::unique_lock lock(cache->mutex);
        return cache->values.try_emplace(w, std::move(v)).first->second;
    });
}

namespace {

TensorElem tensor_power(const LetterMap& phi, const WordTuple& blocks)
{
    TensorElem acc(Word{});
    for (const auto& b : blocks) {
        acc = concat(acc, as_tensor(phi(b)));
        if (acc.is_zero())
            break;
    }
    return acc;
}

// Sum over block decompositions of w of pi(w_1)...pi(w_k), by dynamic
// programming over suffixes.
TensorElem block_sum(const LetterMap& pi, const Word& w)
{
    const std::size_t n = w.size();
    std::vector<TensorElem> suffix(n + 1);
    suffix[n] = TensorElem(Word{});
    for (std::size_t i = n; i-- > 0;) {
        TensorElem acc;
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (suffix[j].is_zero())
                continue;
            LetterComb head = pi(w.slice(i, j));
            for (const auto& [l, c] : head)
                for (const auto& [tail, ct] : suffix[j]) {
                    Word u;
                    u.letters.reserve(tail.size() + 1);
                    u.letters.push_back(l);
                    u.letters.insert(u.letters.end(), tail.letters.begin(), tail.letters.end());
                    acc.add(u, c * ct);
                }
        }
        suffix[i] = std::move(acc);
    }
    return suffix[0];
}

void require_fixes_letters(const LetterMap& pi, const TensorElem& x)
{
    std::vector<bool> seen;
    for (const auto& [w, c] : x)
        for (Letter l : w.letters) {
            if (l >= seen.size())
                seen.resize(l + 1u, false);
            if (seen[l])
                continue;
            seen[l] = true;
            if (!(pi(Word{l}) == LetterComb(l)))
                throw domain_error("structure map must restrict to the identity on letters");
        }
}

} // namespace

TensorElem cofree_lift(const LetterMap& phi, const TensorElem& d)
{
    Scalar eps = counit(d);
    TensorElem out;
    out.add(Word{}, eps);
    TensorElem reduced = d;
    reduced.add(Word{}, -eps);
    std::size_t max_len = 0;
    for (const auto& [w, c] : reduced)
        max_len = std::max(max_len, w.size());
    for (std::size_t n = 1; n <= max_len; ++n)
        for (const auto& [blocks, c] : reduced_coproduct(reduced, n))
            out.axpy(c, tensor_power(phi, blocks));
    return out;
}

TensorElem structure_endo(const LetterMap& pi, const TensorElem& x)
{
    require_fixes_letters(pi, x);
    TensorElem out;
    for (const auto& [w, c] : x)
        out.axpy(c, block_sum(pi, w));
    return out;
}

namespace {

struct InverseState {
    explicit InverseState(LetterMap p) : pi(std::move(p)) {}
    LetterMap pi;
    std::shared_mutex mutex;
    std::map<Word, LetterComb> values;
};

LetterComb inverse_value(InverseState& st, const Word& w)
{
    {
        std::shared_lock lock(st.mutex);
        auto it = st.values.find(w);
        if (it != st.values.end())
            return it->second;
    }
    LetterComb out;
    if (w.size() == 1) {
        if (!(st.pi(w) == LetterComb(w[0])))
            throw domain_error("structure map must restrict to the identity on letters");
        out = LetterComb(w[0]);
    } else {
        // block_sum(pi, w) = w + (terms of length < n)
        TensorElem shorter = block_sum(st.pi, w);
        shorter.add(w, -1);
        for (const auto& [u, c] : shorter)
            out.axpy(-c, inverse_value(st, u));
    }
    std::unique_lock lock(st.mutex);
    return st.values.try_emplace(w, std::move(out)).first->second;
}

} // namespace

LetterMap inverse_structure_map(const LetterMap& pi)
{
    auto state = std::make_shared<InverseState>(pi);
    return LetterMap([state](const Word& w) { return inverse_value(*state, w); });
}

TensorElem inverse_structure_endo(const LetterMap& pi, const TensorElem& x)
{
    require_fixes_letters(pi, x);
    LetterMap mu = inverse_structure_map(pi);
    TensorElem out;
    for (const auto& [w, c] : x)
        out.axpy(c, block_sum(mu, w));
    return out;
}

} // namespace bialg
