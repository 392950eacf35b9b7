#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bialg/lincomb.hpp"
#include "bialg/poly.hpp"

namespace bialg::topo {

/// Largest vertex count of a labeled quasi-order.
inline constexpr int max_vertices = 15;
/// Largest vertex count with canonical forms (and hence isoclasses).
inline constexpr int max_canonical = 8;
/// Largest vertex count for the contraction coproduct and everything built on
/// it.
inline constexpr int max_delta = 7;
/// Largest vertex count for the Eulerian idempotent.
inline constexpr int max_eulerian = 6;

using Mask = std::uint32_t;

/// Reflexive transitive relation on {0, ..., n-1}; up[i] holds every j with
/// i <= j. Open sets of the associated topology are the up-closed subsets.
class QuasiOrder {
public:
    QuasiOrder() = default;
    /// Discrete order on n points.
    explicit QuasiOrder(int n);
    /// Reflexive-transitive closure of the given rows.
    static QuasiOrder closure(int n, std::vector<Mask> rows);

    /// "n; 1<2, 2<3, 4~5" (1-based, closure taken), or a name: 1 (the empty
    /// topology), l<n>, c<n>, d<n> (n-1 minima under one maximum), disc<n>.
    static QuasiOrder parse(std::string_view text);

    int size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }
    bool leq(int i, int j) const { return (up_[i] >> j) & 1u; }
    bool less(int i, int j) const { return leq(i, j) && !leq(j, i); }
    bool equiv(int i, int j) const { return leq(i, j) && leq(j, i); }
    Mask up(int i) const { return up_[i]; }
    Mask down(int i) const;
    Mask all() const noexcept { return n_ == 0 ? 0 : (Mask(1) << n_) - 1; }
    const std::vector<Mask>& rows() const noexcept { return up_; }

    bool is_up_closed(Mask s) const;
    bool is_down_closed(Mask s) const;
    /// True when <= is symmetric.
    bool is_equivalence() const;
    /// Union of the minimal classes.
    Mask minimal() const;
    /// Equivalence classes, each as a mask, in order of smallest element.
    std::vector<Mask> classes() const;
    /// Connected components of the comparability graph.
    std::vector<Mask> components() const;

    /// Induced order on the vertices of s, renumbered increasingly.
    QuasiOrder restrict_to(Mask s) const;
    /// vertex i of the result is perm[i] of this order
    QuasiOrder relabel(const std::vector<int>& perm) const;

    /// "n; 1<2, 1~3" listing covers between class minima and the class
    /// memberships, 1-based.
    std::string relations_str() const;

    friend bool operator==(const QuasiOrder&, const QuasiOrder&) = default;
    friend auto operator<=>(const QuasiOrder&, const QuasiOrder&) = default;

private:
    int n_ = 0;
    std::vector<Mask> up_;
};

/// Isomorphism class of a finite topology with at most max_canonical points.
/// The representative is the relabeling whose code (the relation bits read
/// as rel(k,0), rel(0,k), rel(k,1), rel(1,k), ..., rel(k,k-1), rel(k-1,k) for
/// k = 1, ..., n-1) is lexicographically minimal. Classes order by size, then
/// code.
class QuasiOrderClass {
public:
    QuasiOrderClass() = default;  // the empty topology
    explicit QuasiOrderClass(const QuasiOrder& q);

    int size() const noexcept { return canon_.size(); }
    bool is_unit() const noexcept { return canon_.empty(); }
    const QuasiOrder& canon() const noexcept { return canon_; }
    std::uint64_t code() const noexcept { return code_; }

    /// Named form when one applies (1, l<n>, c<n>, d<n>, disc<n>), else
    /// "[relations]" on the canonical labels.
    std::string str() const;

    friend bool operator==(const QuasiOrderClass& a, const QuasiOrderClass& b)
    {
        return a.size() == b.size() && a.code_ == b.code_;
    }
    friend std::strong_ordering operator<=>(const QuasiOrderClass& a, const QuasiOrderClass& b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        return a.code_ <=> b.code_;
    }

private:
    friend QuasiOrderClass canonicalize(const QuasiOrder& q);
    QuasiOrderClass(QuasiOrder canon, std::uint64_t code) : canon_(std::move(canon)), code_(code) {}

    QuasiOrder canon_;
    std::uint64_t code_ = 0;
};

/// Canonical form by exhaustive relabeling (branch and bound over codes).
QuasiOrderClass canonicalize(const QuasiOrder& q);

using TopoElem = LinComb<QuasiOrderClass>;
using TopoPair = std::pair<QuasiOrderClass, QuasiOrderClass>;
using TopoTensor2 = LinComb<TopoPair>;
using TopoTuple = std::vector<QuasiOrderClass>;
using TopoTensor = LinComb<TopoTuple>;

TopoElem parse_elem(std::string_view text);
std::string format(const TopoElem& x);
std::string format(const TopoTensor2& x);
std::string format(const TopoTensor& x);

QuasiOrderClass unit();
QuasiOrderClass point();
QuasiOrderClass ladder(int n);
/// One minimum with n-1 maximal points above it.
QuasiOrderClass corolla(int n);
/// n-1 minima below one maximum.
QuasiOrderClass dual_corolla(int n);
QuasiOrderClass discrete(int n);
/// Single class of n equivalent points.
QuasiOrderClass clique(int n);

/// All up-closed subsets, in increasing mask order.
std::vector<Mask> open_sets(const QuasiOrder& q);

QuasiOrder disjoint_union(const QuasiOrder& a, const QuasiOrder& b);
/// Every point of a below every point of b.
QuasiOrder stack(const QuasiOrder& a, const QuasiOrder& b);

QuasiOrderClass product_m(const QuasiOrderClass& a, const QuasiOrderClass& b);
TopoElem product_m(const TopoElem& x, const TopoElem& y);
QuasiOrderClass down_product(const QuasiOrderClass& a, const QuasiOrderClass& b);
TopoElem down_product(const TopoElem& x, const TopoElem& y);

/// Delta(T) = sum over open sets O of T|(E\O) (x) T|O.
TopoTensor2 coproduct_Delta(const QuasiOrderClass& t);
TopoTensor2 coproduct_Delta(const TopoElem& x);

/// k-fold reduced coproduct: ordered partitions (A_1, ..., A_k) into
/// nonempty parts whose suffix unions are open, giving T|A_1 (x) ... (x) T|A_k.
TopoTensor reduced_coproduct(const QuasiOrderClass& t, int k);

/// Projection onto primitives parallel to the span of nontrivial
/// down-products: sum_k (-1)^(k+1) (down-product of the layers of the k-fold
/// reduced coproduct). Throws on a unit component.
TopoElem inf_pi(const TopoElem& x);

/// pi((x_1 v ... v x_k) (y_1 v ... v y_l)), v the down-product.
TopoElem binf_bracket(const std::vector<TopoElem>& xs, const std::vector<TopoElem>& ys);

/// Antipode of the down-product bialgebra: S(1) = 1 and
/// sum_O S(T|(E\O)) v T|O = 0 for nonempty T.
TopoElem antipode(const TopoElem& x);

/// Set partition of {0..n-1} by block index per vertex; blocks are numbered
/// in order of first appearance.
struct Partition {
    std::vector<int> block_of;

    int size() const noexcept { return static_cast<int>(block_of.size()); }
    int blocks() const;
    std::vector<Mask> block_masks() const;
    static Partition from_blocks(int n, const std::vector<Mask>& blocks);
    std::string str() const;
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::vector<Partition> set_partitions(int n);

/// Keep only relations inside blocks.
QuasiOrder restrict(const QuasiOrder& t, const Partition& p);
/// Reflexive-transitive closure of <= together with the blocks.
QuasiOrder quotient(const QuasiOrder& t, const Partition& p);

/// Partitions whose blocks are the connected components of restrict(t, p)
/// and the equivalence classes of quotient(t, p).
std::vector<Partition> ec_partitions(const QuasiOrder& t);

/// delta(T) = sum over ec_partitions of T/~ (x) T|~.
TopoTensor2 coproduct_delta(const QuasiOrderClass& t);
TopoTensor2 coproduct_delta(const TopoElem& x);

/// 1 when <= is an equivalence relation, else 0.
Scalar eps_delta(const QuasiOrderClass& t);

enum class UpsilonMethod { recursive, surjections };
/// Throws "unit topology" on the empty topology.
Poly upsilon(const QuasiOrderClass& t, UpsilonMethod method = UpsilonMethod::recursive);

enum class LambdaMethod { integral, series };
/// lambda(1) = 0.
Scalar lambda_char(const QuasiOrderClass& t, LambdaMethod method = LambdaMethod::integral);
Scalar lambda_char(const TopoElem& x, LambdaMethod method = LambdaMethod::integral);

enum class EulerianMethod { via_delta, direct };
TopoElem eulerian_e(const QuasiOrderClass& t, EulerianMethod method = EulerianMethod::via_delta);
TopoElem eulerian_e(const TopoElem& x, EulerianMethod method = EulerianMethod::via_delta);

/// inf_pi o eulerian_e
TopoElem canonical_pi_idem(const TopoElem& x);

/// Number of surjections [n] -> [k+1].
mpz_class surjection_count(int n, int k);
/// Closed form of lambda on corollas (c_1 is the point).
Scalar corolla_lambda(int n);

enum class ClosedFormKind { ladder, corolla };
TopoElem closed_form_e(ClosedFormKind kind, int n);

/// Every isoclass with n points (n <= 6), in class order.
std::vector<QuasiOrderClass> enumerate_isoclasses(int n);

} // namespace bialg::topo
