#include "bialg/binfty.hpp"

#include <fstream>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "bialg/error.hpp"
#include "text.hpp"

namespace bialg {

using detail::trim;

// ---------------------------------------------------------------------------
// LetterProduct

LetterProduct::LetterProduct(std::size_t alphabet_size)
    : size_(alphabet_size), table_(alphabet_size * alphabet_size)
{
}

void LetterProduct::set(Letter a, Letter b, LetterComb value)
{
    if (a >= size_ || b >= size_)
        throw input_error("letter product entry outside the alphabet");
    for (const auto& [l, c] : value)
        if (l >= size_)
            throw input_error("letter product value outside the alphabet");
    table_[a * size_ + b] = std::move(value);
}

bool LetterProduct::has(Letter a, Letter b) const
{
    return a < size_ && b < size_ && table_[a * size_ + b].has_value();
}

LetterComb LetterProduct::operator()(Letter a, Letter b) const
{
    if (!has(a, b))
        throw domain_error("letter product undefined on a pair");
    return *table_[a * size_ + b];
}

LetterComb LetterProduct::operator()(const LetterComb& a, const LetterComb& b) const
{
    LetterComb out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            out.axpy(cx * cy, (*this)(x, y));
    return out;
}

LetterComb LetterProduct::product_of(const Word& w) const
{
    if (w.empty())
        throw domain_error("letter product of the empty word");
    LetterComb acc(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
        acc = (*this)(acc, LetterComb(w[i]));
    return acc;
}

bool LetterProduct::is_total() const
{
    for (const auto& e : table_)
        if (!e)
            return false;
    return true;
}

bool LetterProduct::is_commutative() const
{
    for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = a + 1; b < size_; ++b)
            if (!((*this)(Letter(a), Letter(b)) == (*this)(Letter(b), Letter(a))))
                return false;
    return true;
}

bool LetterProduct::is_associative() const
{
    for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = 0; b < size_; ++b)
            for (std::size_t c = 0; c < size_; ++c) {
                const LetterComb la{Letter(a)}, lb{Letter(b)}, lc{Letter(c)};
                if (!((*this)((*this)(la, lb), lc) == (*this)(la, (*this)(lb, lc))))
                    return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
// BInftyStructure

struct BInftyStructure::Cache {
    std::shared_mutex mutex;
    std::map<std::pair<Word, Word>, TensorElem> products;
};

BInftyStructure::BInftyStructure(Alphabet alphabet, BracketMode mode)
    : alphabet_(std::move(alphabet)), mode_(mode), cache_(std::make_shared<Cache>())
{
}

BInftyStructure BInftyStructure::shuffle(Alphabet alphabet)
{
    return BInftyStructure(std::move(alphabet), BracketMode::shuffle);
}

BInftyStructure BInftyStructure::quasi_shuffle(Alphabet alphabet, LetterProduct mult)
{
    if (mult.alphabet_size() != alphabet.size())
        throw input_error("letter product table does not match the alphabet");
    if (!mult.is_total())
        throw input_error("letter product table must cover every pair of letters");
    BInftyStructure b(std::move(alphabet), BracketMode::quasi_shuffle);
    b.mult_ = std::move(mult);
    return b;
}

BInftyStructure BInftyStructure::explicit_bracket(Alphabet alphabet, BracketTable table,
                                                  std::optional<std::size_t> bound)
{
    for (auto it = table.begin(); it != table.end();) {
        const auto& [key, value] = *it;
        if (key.first.empty() || key.second.empty())
            throw input_error("bracket table entries need nonempty words");
        if (bound && (key.first.size() > *bound || key.second.size() > *bound))
            throw input_error("bracket table entry longer than the declared bound");
        for (const auto& w : {key.first, key.second})
            for (Letter l : w.letters)
                if (l >= alphabet.size())
                    throw input_error("bracket table entry outside the alphabet");
        for (const auto& [l, c] : value)
            if (l >= alphabet.size())
                throw input_error("bracket table value outside the alphabet");
        it = value.is_zero() ? table.erase(it) : std::next(it);
    }
    BInftyStructure b(std::move(alphabet), BracketMode::explicit_table);
    b.table_ = std::move(table);
    b.bound_ = bound;
    return b;
}

LetterComb BInftyStructure::bracket(const Word& w, const Word& w2) const
{
    if (w.empty() || w2.empty()) {
        const Word& other = w.empty() ? w2 : w;
        return other.size() == 1 ? LetterComb(other[0]) : LetterComb();
    }
    switch (mode_) {
    case BracketMode::shuffle:
        return {};
    case BracketMode::quasi_shuffle:
        if (w.size() == 1 && w2.size() == 1)
            return mult_(w[0], w2[0]);
        return {};
    case BracketMode::explicit_table:
        break;
    }
    if (bound_ && (w.size() > *bound_ || w2.size() > *bound_))
        throw domain_error("partial map: bracket requested outside the table bound " +
                           std::to_string(*bound_));
    auto it = table_.find({w, w2});
    return it == table_.end() ? LetterComb() : it->second;
}

LetterComb BInftyStructure::bracket(const TensorElem& x, const TensorElem& y) const
{
    LetterComb out;
    for (const auto& [u, cu] : x)
        for (const auto& [v, cv] : y)
            out.axpy(cu * cv, bracket(u, v));
    return out;
}

TensorElem BInftyStructure::product(const Word& w, const Word& w2) const
{
    const std::pair<Word, Word> key{w, w2};
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->products.find(key);
        if (it != cache_->products.end())
            return it->second;
    }
    const std::size_t n = w.size(), m = w2.size();
    // Longer blocks only matter for explicit brackets.
    const bool letters_only = mode_ != BracketMode::explicit_table;
    // tail[i][j] = product of the suffixes w[i..), w2[j..)
    std::vector<std::vector<TensorElem>> tail(n + 1, std::vector<TensorElem>(m + 1));
    tail[n][m] = TensorElem(Word{});
    for (std::size_t i = n + 1; i-- > 0;)
        for (std::size_t j = m + 1; j-- > 0;) {
            if (i == n && j == m)
                continue;
            TensorElem acc;
            const std::size_t imax = letters_only ? std::min(n, i + 1) : n;
            const std::size_t jmax = letters_only ? std::min(m, j + 1) : m;
            for (std::size_t i2 = i; i2 <= imax; ++i2)
                for (std::size_t j2 = j; j2 <= jmax; ++j2) {
                    if (i2 == i && j2 == j)
                        continue;
                    LetterComb head = bracket(w.slice(i, i2), w2.slice(j, j2));
                    if (head.is_zero() || tail[i2][j2].is_zero())
                        continue;
                    acc += concat(as_tensor(head), tail[i2][j2]);
                }
            tail[i][j] = std::move(acc);
        }
    std::unique_lock lock(cache_->mutex);
    return cache_->products.try_emplace(key, std::move(tail[0][0])).first->second;
}

TensorElem BInftyStructure::product(const TensorElem& x, const TensorElem& y) const
{
    TensorElem out;
    for (const auto& [u, cu] : x)
        for (const auto& [v, cv] : y)
            out.axpy(cu * cv, product(u, v));
    return out;
}

TensorElem BInftyStructure::product(const std::vector<TensorElem>& factors) const
{
    TensorElem acc(Word{});
    for (const auto& f : factors) {
        acc = product(acc, f);
        if (acc.is_zero())
            break;
    }
    return acc;
}

bool BInftyStructure::is_graded() const
{
    auto homogeneous = [this](const LetterComb& v, unsigned degree) {
        for (const auto& [l, c] : v)
            if (alphabet_.degree(l) != degree)
                return false;
        return true;
    };
    switch (mode_) {
    case BracketMode::shuffle:
        return true;
    case BracketMode::quasi_shuffle:
        for (std::size_t a = 0; a < alphabet_.size(); ++a)
            for (std::size_t b = 0; b < alphabet_.size(); ++b)
                if (!homogeneous(mult_(Letter(a), Letter(b)),
                                 alphabet_.degree(Letter(a)) + alphabet_.degree(Letter(b))))
                    return false;
        return true;
    case BracketMode::explicit_table:
        for (const auto& [key, value] : table_)
            if (!homogeneous(value, alphabet_.degree(key.first) + alphabet_.degree(key.second)))
                return false;
        return true;
    }
    return false;
}

std::string BInftyStructure::str() const
{
    std::ostringstream out;
    switch (mode_) {
    case BracketMode::shuffle:
        out << "mode: shuffle\n";
        break;
    case BracketMode::quasi_shuffle:
        out << "mode: qshuffle\n";
        break;
    case BracketMode::explicit_table:
        out << "mode: explicit\n";
        break;
    }
    out << "alphabet: " << alphabet_.str() << "\n";
    if (mode_ == BracketMode::quasi_shuffle) {
        for (std::size_t a = 0; a < alphabet_.size(); ++a)
            for (std::size_t b = 0; b < alphabet_.size(); ++b)
                out << alphabet_.name(Letter(a)) << " * " << alphabet_.name(Letter(b)) << " = "
                    << alphabet_.format(mult_(Letter(a), Letter(b))) << "\n";
    }
    if (mode_ == BracketMode::explicit_table) {
        out << "bound: " << (bound_ ? std::to_string(*bound_) : std::string("none")) << "\n";
        for (const auto& [key, value] : table_)
            out << alphabet_.format(key.first) << " , " << alphabet_.format(key.second) << " -> "
                << alphabet_.format(value) << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

Error line_error(std::size_t number, const std::string& what)
{
    return input_error("line " + std::to_string(number) + ": " + what);
}

} // namespace

BInftyStructure BInftyStructure::parse(std::string_view text)
{
    std::optional<std::string> mode;
    std::optional<Alphabet> alphabet;
    std::optional<std::optional<std::size_t>> bound;
    std::vector<Line> brackets, products;

    std::size_t number = 0;
    for (auto raw : detail::split(text, '\n')) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        auto line = trim(raw);
        if (line.empty())
            continue;
        if (line.find("->") != std::string_view::npos) {
            brackets.push_back({number, line});
        } else if (line.find('=') != std::string_view::npos) {
            products.push_back({number, line});
        } else if (auto colon = line.find(':'); colon != std::string_view::npos) {
            auto key = trim(line.substr(0, colon));
            auto value = trim(line.substr(colon + 1));
            if (key == "mode") {
                if (mode)
                    throw line_error(number, "duplicate mode");
                if (value != "shuffle" && value != "qshuffle" && value != "explicit")
                    throw line_error(number, "unknown mode '" + std::string(value) + "'");
                mode = std::string(value);
            } else if (key == "alphabet") {
                if (alphabet)
                    throw line_error(number, "duplicate alphabet");
                try {
                    alphabet = Alphabet::parse(value);
                } catch (const Error& e) {
                    throw line_error(number, e.what());
                }
            } else if (key == "bound") {
                if (bound)
                    throw line_error(number, "duplicate bound");
                unsigned long b = 0;
                if (value == "none")
                    bound = std::optional<std::size_t>();
                else if (detail::parse_unsigned(value, b) && b >= 1)
                    bound = std::optional<std::size_t>(b);
                else
                    throw line_error(number, "bound must be a positive integer or 'none'");
            } else {
                throw line_error(number, "unknown directive '" + std::string(key) + "'");
            }
        } else {
            throw line_error(number, "unrecognized line '" + std::string(line) + "'");
        }
    }
    if (!mode)
        throw input_error("missing 'mode:' line");
    if (!alphabet)
        throw input_error("missing 'alphabet:' line");

    if (*mode != "explicit" && !brackets.empty())
        throw line_error(brackets.front().number, "bracket entries need mode explicit");
    if (*mode != "qshuffle" && !products.empty())
        throw line_error(products.front().number, "letter products need mode qshuffle");
    if (*mode != "explicit" && bound)
        throw input_error("'bound:' only applies to mode explicit");

    if (*mode == "shuffle")
        return shuffle(std::move(*alphabet));

    if (*mode == "qshuffle") {
        LetterProduct mult(alphabet->size());
        for (const auto& [num, line] : products) {
            auto eq = line.find('=');
            auto lhs = line.substr(0, eq);
            auto star = lhs.find('*');
            if (star == std::string_view::npos)
                throw line_error(num, "expected 'a * b = value'");
            try {
                Letter a = alphabet->at(trim(lhs.substr(0, star)));
                Letter b = alphabet->at(trim(lhs.substr(star + 1)));
                if (mult.has(a, b))
                    throw input_error("duplicate product entry");
                mult.set(a, b, alphabet->parse_letters(line.substr(eq + 1)));
            } catch (const Error& e) {
                throw line_error(num, e.what());
            }
        }
        if (!mult.is_total())
            throw input_error("letter product table must cover every pair of letters");
        return quasi_shuffle(std::move(*alphabet), std::move(mult));
    }

    if (!bound)
        throw input_error("mode explicit needs a 'bound:' line (a word length or 'none')");
    BracketTable table;
    for (const auto& [num, line] : brackets) {
        auto arrow = line.find("->");
        auto lhs = line.substr(0, arrow);
        auto comma = lhs.find(',');
        if (comma == std::string_view::npos)
            throw line_error(num, "expected 'w , w2 -> value'");
        try {
            Word w = alphabet->parse_word(lhs.substr(0, comma));
            Word w2 = alphabet->parse_word(lhs.substr(comma + 1));
            if (w.empty() || w2.empty())
                throw input_error("bracket entries need nonempty words (unit rules are fixed)");
            if (*bound && (w.size() > **bound || w2.size() > **bound))
                throw input_error("entry longer than the declared bound");
            if (table.count({w, w2}))
                throw input_error("duplicate bracket entry");
            table.emplace(std::make_pair(w, w2), alphabet->parse_letters(line.substr(arrow + 2)));
        } catch (const Error& e) {
            throw line_error(num, e.what());
        }
    }
    return explicit_bracket(std::move(*alphabet), std::move(table), *bound);
}

BInftyStructure BInftyStructure::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot read table file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

TensorElem concat_letters(const std::vector<LetterComb>& parts)
{
    TensorElem acc(Word{});
    for (const auto& p : parts) {
        acc = concat(acc, as_tensor(p));
        if (acc.is_zero())
            break;
    }
    return acc;
}

// All weakly increasing cut vectors 0 = c_0 <= ... <= c_k = n.
void for_each_weak_split(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> cuts(k + 1, 0);
    cuts[k] = n;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == k) {
            f(cuts);
            return;
        }
        for (std::size_t p = cuts[j - 1]; p <= n; ++p) {
            cuts[j] = p;
            rec(j + 1);
        }
    };
    if (k == 0)
        return;
    rec(1);
}

} // namespace

TensorElem decomposition_product_oracle(const BInftyStructure& b, const Word& w, const Word& w2)
{
    const std::size_t n = w.size(), m = w2.size();
    if (n == 0 && m == 0)
        return TensorElem(Word{});
    TensorElem out;
    for (std::size_t k = 1; k <= n + m; ++k)
        for_each_weak_split(n, k, [&](const std::vector<std::size_t>& a) {
            for_each_weak_split(m, k, [&](const std::vector<std::size_t>& c) {
                std::vector<LetterComb> parts;
                parts.reserve(k);
                for (std::size_t i = 0; i < k; ++i) {
                    if (a[i] == a[i + 1] && c[i] == c[i + 1])
                        return;
                    parts.push_back(b.bracket(w.slice(a[i], a[i + 1]), w2.slice(c[i], c[i + 1])));
                    if (parts.back().is_zero())
                        return;
                }
                out += concat_letters(parts);
            });
        });
    return out;
}

TensorElem surjection_product_oracle(const BInftyStructure& b, const Word& w, const Word& w2)
{
    if (b.mode() == BracketMode::explicit_table)
        return decomposition_product_oracle(b, w, w2);
    const std::size_t k = w.size(), l = w2.size();
    if (k == 0 && l == 0)
        return TensorElem(Word{});
    TensorElem out;
    // sigma is determined by its image sets A = sigma([1,k]) and
    // B = sigma([k+1,k+l]) with A u B = [n].
    for (std::size_t n = std::max(k, l); n <= k + l; ++n) {
        for (std::uint32_t amask = 0; amask < (1u << n); ++amask) {
            if (static_cast<std::size_t>(__builtin_popcount(amask)) != k)
                continue;
            for (std::uint32_t bmask = 0; bmask < (1u << n); ++bmask) {
                if (static_cast<std::size_t>(__builtin_popcount(bmask)) != l)
                    continue;
                if ((amask | bmask) != (1u << n) - 1)
                    continue;
                std::vector<LetterComb> parts;
                std::size_t ia = 0, ib = 0;
                bool zero = false;
                for (std::size_t j = 0; j < n && !zero; ++j) {
                    Word left, right;
                    if (amask & (1u << j))
                        left = Word{w[ia++]};
                    if (bmask & (1u << j))
                        right = Word{w2[ib++]};
                    parts.push_back(b.bracket(left, right));
                    zero = parts.back().is_zero();
                }
                if (!zero)
                    out += concat_letters(parts);
            }
        }
    }
    return out;
}

TensorElem quasi_shuffle_recursive(const BInftyStructure& b, const Word& w, const Word& w2)
{
    if (b.mode() == BracketMode::explicit_table)
        throw domain_error("the (quasi-)shuffle recursion needs mode shuffle or qshuffle");
    if (w.empty())
        return TensorElem(w2);
    if (w2.empty())
        return TensorElem(w);
    const Word wt = w.slice(1, w.size()), w2t = w2.slice(1, w2.size());
    TensorElem out = concat(TensorElem(Word{w[0]}), quasi_shuffle_recursive(b, wt, w2));
    out += concat(TensorElem(Word{w2[0]}), quasi_shuffle_recursive(b, w, w2t));
    if (b.mode() == BracketMode::quasi_shuffle) {
        LetterComb merged = b.letter_product()(w[0], w2[0]);
        if (!merged.is_zero())
            out += concat(as_tensor(merged), quasi_shuffle_recursive(b, wt, w2t));
    }
    return out;
}

AxiomReport check_axioms(const BInftyStructure& b, std::size_t length_budget)
{
    if (length_budget < 1)
        throw input_error("length budget must be at least 1");
    AxiomReport r;
    std::size_t budget = length_budget;
    // Every bracket evaluated below pairs two nonempty words of total length
    // at most the budget.
    if (b.bound())
        budget = std::min(budget, *b.bound() + 1);
    r.budget = budget;
    const std::size_t s = b.alphabet().size();
    const std::vector<Word> words = all_words(s, budget);

    r.unit = true;
    for (const auto& w : words) {
        LetterComb proj = w.size() == 1 ? LetterComb(w[0]) : LetterComb();
        if (!(b.bracket(w, Word{}) == proj) || !(b.bracket(Word{}, w) == proj)) {
            r.unit = false;
            break;
        }
    }

    r.comm = true;
    r.trivial = true;
    for (const auto& w : words)
        for (const auto& w2 : words) {
            if (w.empty() || w2.empty() || w.size() + w2.size() > budget)
                continue;
            LetterComb v = b.bracket(w, w2);
            if (!v.is_zero())
                r.trivial = false;
            if (r.comm && !(v == b.bracket(w2, w)))
                r.comm = false;
        }

    r.assoc = true;
    for (const auto& w : words)
        for (const auto& w2 : words) {
            if (w.empty() || w2.empty() || w.size() + w2.size() >= budget)
                continue;
            const TensorElem p12 = b.product(w, w2);
            for (const auto& w3 : words) {
                if (w3.empty() || w.size() + w2.size() + w3.size() > budget)
                    continue;
                LetterComb left = b.bracket(TensorElem(w), b.product(w2, w3));
                LetterComb right = b.bracket(p12, TensorElem(w3));
                if (!(left == right)) {
                    r.assoc = false;
                    return r;
                }
            }
        }
    return r;
}

} // namespace bialg
