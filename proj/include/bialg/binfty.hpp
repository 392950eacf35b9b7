#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bialg/words.hpp"

namespace bialg {

/// Bilinear product on letters, given by a total table (possibly zero or
/// non-commutative entries).
class LetterProduct {
public:
    LetterProduct() = default;
    explicit LetterProduct(std::size_t alphabet_size);

    std::size_t alphabet_size() const noexcept { return size_; }
    void set(Letter a, Letter b, LetterComb value);
    bool has(Letter a, Letter b) const;

    LetterComb operator()(Letter a, Letter b) const;
    LetterComb operator()(const LetterComb& a, const LetterComb& b) const;
    /// v_1 . v_2 . ... . v_n, left to right. Throws on the empty word.
    LetterComb product_of(const Word& w) const;

    bool is_total() const;
    bool is_commutative() const;
    bool is_associative() const;

private:
    std::size_t size_ = 0;
    std::vector<std::optional<LetterComb>> table_;
};

enum class BracketMode { shuffle, quasi_shuffle, explicit_table };

struct AxiomReport {
    bool unit = false;
    bool assoc = false;
    bool comm = false;
    bool trivial = false;
    /// Budget actually checked; smaller than requested when the bracket table
    /// is bounded below it.
    std::size_t budget = 0;
};

/// A B-infinity bracket <-,->: pairs of words -> letters, with the unit rules
/// <1,v> = <v,1> = v on letters and 0 on the unit and on longer words.
/// Copies share a thread-safe product cache.
class BInftyStructure {
public:
    using BracketTable = std::map<std::pair<Word, Word>, LetterComb>;

    static BInftyStructure shuffle(Alphabet alphabet);
    static BInftyStructure quasi_shuffle(Alphabet alphabet, LetterProduct mult);
    /// Explicit table on pairs of nonempty words; absent pairs are 0. When a
    /// bound is given, pairs involving a word longer than the bound are
    /// outside the table and evaluating them is an error.
    static BInftyStructure explicit_bracket(Alphabet alphabet, BracketTable table,
                                            std::optional<std::size_t> bound);

    /// Text format, one directive per line, '#' starts a comment:
    ///   mode: shuffle | qshuffle | explicit
    ///   alphabet: a:1,b:2
    ///   bound: N | none          (explicit only, required)
    ///   a.b , c -> 2*a + b       (explicit only)
    ///   a * b = c                (qshuffle only, every pair required)
    static BInftyStructure parse(std::string_view text);
    static BInftyStructure load(const std::string& path);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    BracketMode mode() const noexcept { return mode_; }
    const LetterProduct& letter_product() const { return mult_; }
    const BracketTable& table() const noexcept { return table_; }
    std::optional<std::size_t> bound() const noexcept { return bound_; }

    LetterComb bracket(const Word& w, const Word& w2) const;
    LetterComb bracket(const TensorElem& x, const TensorElem& y) const;

    /// Induced product: sum over pairs of decompositions of w and w2 into the
    /// same number of blocks (empty blocks allowed) of the concatenated
    /// brackets of corresponding blocks.
    TensorElem product(const Word& w, const Word& w2) const;
    TensorElem product(const TensorElem& x, const TensorElem& y) const;
    /// x_1 * x_2 * ... * x_k, left to right; 1 for an empty list.
    TensorElem product(const std::vector<TensorElem>& factors) const;

    /// True when every bracket value is homogeneous of the summed degree.
    bool is_graded() const;

    /// Inverse of parse (round trips).
    std::string str() const;

private:
    struct Cache;

    BInftyStructure(Alphabet alphabet, BracketMode mode);

    Alphabet alphabet_;
    BracketMode mode_;
    LetterProduct mult_;
    BracketTable table_;
    std::optional<std::size_t> bound_;
    std::shared_ptr<Cache> cache_;
};

/// Shuffle and quasi-shuffle products written out by enumerating maps
/// sigma: [k+l] -> [n], surjective and strictly increasing on both [1,k] and
/// [k+1,k+l]; for explicit brackets, by enumerating pairs of block
/// decompositions directly.
TensorElem surjection_product_oracle(const BInftyStructure& b, const Word& w, const Word& w2);

/// Direct enumeration of pairs of block decompositions (any mode).
TensorElem decomposition_product_oracle(const BInftyStructure& b, const Word& w, const Word& w2);

/// Classical three-term recursion for (quasi-)shuffles.
TensorElem quasi_shuffle_recursive(const BInftyStructure& b, const Word& w, const Word& w2);

/// Unit, associativity, commutativity and triviality of the bracket, checked
/// exhaustively on words whose total length is at most the budget.
AxiomReport check_axioms(const BInftyStructure& b, std::size_t length_budget);

} // namespace bialg
