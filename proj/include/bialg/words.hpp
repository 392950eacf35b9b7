#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bialg/lincomb.hpp"

namespace bialg {

using Letter = std::uint16_t;

/// A word over an alphabet, stored as letter indices. The empty word is the
/// unit 1. Words are ordered by length first, then lexicographically.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> ls) : letters(ls) {}
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }
    Letter operator[](std::size_t i) const { return letters[i]; }

    /// Letters [from, to).
    Word slice(std::size_t from, std::size_t to) const
    {
        return Word(std::vector<Letter>(letters.begin() + from, letters.begin() + to));
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        return a.letters <=> b.letters;
    }
};

using TensorElem = LinComb<Word>;
using LetterComb = LinComb<Letter>;
using WordPair = std::pair<Word, Word>;
using WordTuple = std::vector<Word>;

/// Named letters with positive degrees. Letter i of the alphabet has index i.
class Alphabet {
public:
    Alphabet() = default;

    /// Parses "a:1,b:2"; a letter without ":d" has degree 1.
    static Alphabet parse(std::string_view text);

    /// Letters named by `prefix` followed by 1..n, all of degree 1.
    static Alphabet numbered(std::string_view prefix, std::size_t n);

    Letter add(std::string name, unsigned degree = 1);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Letter l) const { return names_.at(l); }
    unsigned degree(Letter l) const { return degrees_.at(l); }
    unsigned degree(const Word& w) const;
    std::optional<Letter> find(std::string_view name) const;
    Letter at(std::string_view name) const;

    std::string str() const;

    /// Word grammar: letters joined by "."; "1" is the empty word.
    Word parse_word(std::string_view text) const;
    std::string format(const Word& w) const;

    /// Tensor grammar: "3/2*a.b + -1*c"; a term without "coeff*" has
    /// coefficient 1 (or -1 with a leading "-").
    TensorElem parse_tensor(std::string_view text) const;
    std::string format(const TensorElem& x) const;

    /// A tensor whose support consists of single letters.
    LetterComb parse_letters(std::string_view text) const;
    std::string format(const LetterComb& x) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
    std::vector<unsigned> degrees_;
};

/// All words of length in [min_len, max_len] over `alphabet_size` letters, in
/// word order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_len, std::size_t min_len = 0);

Word concat(const Word& a, const Word& b);
/// Concatenation product, extended bilinearly.
TensorElem concat(const TensorElem& a, const TensorElem& b);

TensorElem as_tensor(const LetterComb& x);
/// Canonical projection onto the letters.
LetterComb project_letters(const TensorElem& x);
/// Coefficient of the empty word.
Scalar counit(const TensorElem& x);

LinComb<WordPair> deconcat(const Word& w);
LinComb<WordPair> deconcat(const TensorElem& x);

/// k-fold reduced deconcatenation: every split of each word into k nonempty
/// blocks. k = 1 is the identity. Throws if x has a component on the empty
/// word.
LinComb<WordTuple> reduced_coproduct(const TensorElem& x, std::size_t k);

/// Least n with vanishing (n+1)-fold reduced coproduct.
std::size_t coradical_degree(const TensorElem& x);

/// Calls f(cuts) for every composition of a word of length n into nonempty
/// blocks; `cuts` lists block boundaries 0 = c_0 < c_1 < ... < c_k = n.
void for_each_composition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& f);

/// A linear map from nonempty words to linear combinations of letters.
/// Maps supplied as finite tables report words outside their table's length
/// bound as a "partial map" error.
class LetterMap {
public:
    using Fn = std::function<LetterComb(const Word&)>;

    explicit LetterMap(Fn fn) : fn_(std::move(fn)) {}

    /// Keeps letters, kills longer words.
    static LetterMap canonical_projection();

    /// Words absent from the table are sent to zero, except letters, which
    /// are fixed when identity_on_letters is set. Words longer than
    /// max_length (when given) are an error.
    static LetterMap from_table(std::map<Word, LetterComb> table, std::optional<std::size_t> max_length,
                                bool identity_on_letters = true);

    /// Wraps the map with a thread-safe cache of computed values.
    static LetterMap memoized(Fn fn);

    LetterComb operator()(const Word& w) const { return fn_(w); }
    LetterComb operator()(const TensorElem& x) const;

private:
    Fn fn_;
};

/// Universal lift of phi into the cofree coalgebra:
///   d |-> eps(d) 1 + sum_{n>=1} phi^{(x)n} (reduced_coproduct(d - eps(d), n)).
TensorElem cofree_lift(const LetterMap& phi, const TensorElem& d);

/// Coalgebra endomorphism induced by a structure map pi that fixes letters:
/// v_1...v_n |-> sum over block decompositions w_1...w_k of pi(w_1)...pi(w_k).
TensorElem structure_endo(const LetterMap& pi, const TensorElem& x);

/// Structure map mu of the inverse endomorphism, defined by mu(v) = v and
///   mu(v_1...v_n) = -sum_{k<n} sum_{w_1...w_k = v_1...v_n} mu(pi(w_1)...pi(w_k)).
LetterMap inverse_structure_map(const LetterMap& pi);

TensorElem inverse_structure_endo(const LetterMap& pi, const TensorElem& x);

} // namespace bialg
