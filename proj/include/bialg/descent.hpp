#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bialg/lincomb.hpp"
#include "bialg/words.hpp"

namespace bialg::desc {

/// Largest degree accepted by every routine here.
inline constexpr int max_degree = 7;
/// Largest degree accepted by the Lie projection check.
inline constexpr int max_lie_degree = 6;

/// One-line notation (sigma(1), ..., sigma(n)), values 1-based.
struct Permutation {
    std::vector<std::uint8_t> images;

    Permutation() = default;
    explicit Permutation(std::vector<std::uint8_t> v);
    static Permutation identity(int n);
    /// "3 1 2"
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i - 1]; }
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// (sigma o tau)(i) = sigma(tau(i))
Permutation compose(const Permutation& sigma, const Permutation& tau);
std::vector<Permutation> all_permutations(int n);

/// {i < n : sigma(i) > sigma(i+1)}, ascending.
std::vector<int> descent_set(const Permutation& p);

/// Element of the group algebra Q[S_n].
struct GroupAlgElem {
    int n = 0;
    LinComb<Permutation> terms;

    GroupAlgElem() = default;
    GroupAlgElem(int degree, LinComb<Permutation> t = {});
    static GroupAlgElem identity(int n);

    /// Terms "c*[3 1 2]" joined by "+", or a named element: id<n>, dyn<n>,
    /// sol<n>.
    static GroupAlgElem parse(std::string_view text);
    /// "1/2*[1 2] + -1/2*[2 1]"
    std::string str() const;

    GroupAlgElem& operator+=(const GroupAlgElem& o);
    GroupAlgElem& operator-=(const GroupAlgElem& o);
    GroupAlgElem& operator*=(const Scalar& s);
    friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
    friend GroupAlgElem operator-(GroupAlgElem a, const GroupAlgElem& b) { return a -= b; }
    friend GroupAlgElem operator*(const Scalar& s, GroupAlgElem a) { return a *= s; }
    friend bool operator==(const GroupAlgElem& a, const GroupAlgElem& b)
    {
        return a.n == b.n && a.terms == b.terms;
    }
};

/// A subset S of [n] containing n is given by the positions S \ {n}
/// (all < n); n itself is implicit in both functions below.
GroupAlgElem de_equal(int n, const std::vector<int>& positions);
GroupAlgElem de_subset(int n, const std::vector<int>& positions);

/// Dyn_n = sum_{i=0}^{n-1} (-1)^i De_{={1..i}}.
GroupAlgElem dynkin(int n);
/// sol_n = sum_{S'} (-1)^{|S'|}/n C(n-1,|S'|)^{-1} De_{=S'}.
GroupAlgElem solomon(int n);

/// Place-permutation action sigma(y_1...y_n) = y_{sigma(1)}...y_{sigma(n)},
/// extended linearly. With this action act(g o h) = act(h) o act(g).
TensorElem act_on_tensor(const GroupAlgElem& g, const Word& w);
TensorElem act_on_tensor(const GroupAlgElem& g, const TensorElem& x);

/// m_conc o (g (x) h) o Delta_shuffle on x_1...x_{p+q}, read back as a
/// permutation of degree p+q.
GroupAlgElem convolution(const GroupAlgElem& g, const GroupAlgElem& h);
GroupAlgElem internal_product(const GroupAlgElem& g, const GroupAlgElem& h);

/// Compositions of n; the empty composition is the unit in degree 0.
using Composition = std::vector<int>;
std::string composition_str(const Composition& c);
std::vector<Composition> compositions(int n);
/// Composition (i_1, ..., i_k) <-> descent positions {i_1, i_1+i_2, ...}.
std::vector<int> composition_positions(const Composition& c);
Composition positions_composition(int n, const std::vector<int>& positions);

/// 1_{i_1} * ... * 1_{i_k} (convolution of identities).
GroupAlgElem de_composition(const Composition& c);

enum class DescBasis {
    equal,   // De_{=S}
    subset,  // De_S = 1_{i_1} * ... * 1_{i_k}
};

/// Element of the descent algebra in degree n, keyed by compositions.
struct DescElem {
    int n = 0;
    DescBasis basis = DescBasis::subset;
    LinComb<Composition> terms;

    std::string str() const;
    friend bool operator==(const DescElem&, const DescElem&) = default;
};

/// Coordinates of g in the chosen basis; throws when g does not lie in the
/// descent algebra (coefficients not constant on descent classes).
DescElem to_desc(const GroupAlgElem& g, DescBasis basis = DescBasis::subset);
DescElem change_basis(const DescElem& d, DescBasis target);
GroupAlgElem to_group_algebra(const DescElem& d);

using CompositionPair = std::pair<Composition, Composition>;
/// Multiplicative extension of Delta(1_n) = sum_k 1_k (x) 1_{n-k}, in the
/// De_S (x) De_S basis.
LinComb<CompositionPair> desc_coproduct(const DescElem& d);
bool is_primitive(const DescElem& d);

/// True iff g(x_1...x_n) lies in the multilinear part of the free Lie
/// algebra, spanned by [x_{t(1)},[x_{t(2)},...,[x_{t(n-1)},x_n]...]].
bool lie_projection_check(const GroupAlgElem& g, int n);

/// Letters x1..xn, and the word x1...xn over them.
Alphabet standard_alphabet(int n);
Word standard_word(int n);

} // namespace bialg::desc
