#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "bialg/binfty.hpp"
#include "bialg/words.hpp"

namespace bialg {

/// e(w) = sum over decompositions w = w_1...w_k into nonempty blocks of
/// (-1)^(k-1)/k w_1 * ... * w_k; e(1) = 0.
TensorElem eulerian_idempotent(const BInftyStructure& b, const Word& w);
TensorElem eulerian_idempotent(const BInftyStructure& b, const TensorElem& x);

/// varpi(w) = sum of (-1)^(k-1)/k <w_1, w_2 * ... * w_k>; equals the letter
/// part of e(w).
LetterComb varpi(const BInftyStructure& b, const Word& w);
LetterMap varpi_map(const BInftyStructure& b);

struct TangentReport {
    bool unit_vanishes = false;
    bool products_vanish = false;
    bool letters_fixed = false;
    std::size_t bound = 0;

    bool ok() const noexcept { return unit_vanishes && products_vanish && letters_fixed; }
};

/// A linear endomorphism of T(V) given on words, to be checked against a
/// product for the tangent-to-identity property: it kills 1 and every
/// product w * w' of nonempty words, and fixes letters. The check runs on
/// words up to `bound` letters.
class TangentEndo {
public:
    using Fn = std::function<TensorElem(const Word&)>;

    TangentEndo(Fn fn, std::size_t bound);
    static TangentEndo eulerian(const BInftyStructure& b, std::size_t bound);

    std::size_t bound() const noexcept { return bound_; }
    TensorElem operator()(const Word& w) const { return fn_(w); }
    TensorElem operator()(const TensorElem& x) const;

    /// Runs (once per structure alphabet, then cached) the bounded check.
    TangentReport verify(const BInftyStructure& b) const;

private:
    Fn fn_;
    std::size_t bound_;
    std::shared_ptr<std::optional<TangentReport>> report_;
};

/// The shuffle presentation attached to a tangent-to-identity endomorphism
/// phi: omega = pi_V o phi, and omega~ its block-sum coalgebra map, an
/// isomorphism (T(V), *) -> (T(V), shuffle). Values are cached.
class ShuffleIsomorphism {
public:
    /// Throws "not tangent to identity" when phi fails verification.
    ShuffleIsomorphism(const BInftyStructure& b, const TangentEndo& phi);
    /// With phi = e.
    static ShuffleIsomorphism canonical(const BInftyStructure& b, std::size_t bound);

    const LetterMap& omega() const noexcept { return omega_; }
    TensorElem forward(const TensorElem& x) const;
    /// Inverse computed through the generic structure-map inversion.
    TensorElem inverse(const TensorElem& x) const;

private:
    LetterMap omega_;
    LetterMap inverse_map_;
};

TensorElem omega_tilde(const BInftyStructure& b, const TangentEndo& phi, const TensorElem& x);

/// zeta(v) = v and zeta(w) = -sum_{k>=2} varpi(zeta(w_1)...zeta(w_k)) over
/// decompositions into k nonempty blocks.
LetterMap zeta_map(const BInftyStructure& b);
LetterComb zeta(const BInftyStructure& b, const Word& w);
/// Block-sum extension of zeta; inverse of the canonical omega~.
TensorElem zeta_tilde(const BInftyStructure& b, const TensorElem& x);
/// Same map through inverse_structure_endo applied to varpi.
TensorElem zeta_tilde_generic(const BInftyStructure& b, const TensorElem& x);

/// Closed forms for a commutative associative letter product:
///   log: v_1...v_n |-> (-1)^(n-1)/n v_1 . ... . v_n
///   exp: v_1...v_n |-> 1/n! v_1 . ... . v_n
LetterComb hoffman_log(const LetterProduct& mult, const Word& w);
LetterComb hoffman_exp(const LetterProduct& mult, const Word& w);
/// Block-sum extensions of the two closed forms.
TensorElem hoffman_log_tilde(const LetterProduct& mult, const TensorElem& x);
TensorElem hoffman_exp_tilde(const LetterProduct& mult, const TensorElem& x);

} // namespace bialg
