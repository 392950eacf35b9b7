#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "bialg/binfty.hpp"
#include "bialg/error.hpp"
#include "bialg/idem.hpp"
#include "support.hpp"

using namespace bialg;
using testing_support::load;
using testing_support::T;
using testing_support::W;

namespace {

// Plain shuffle on letter vectors.
TensorElem sh(const Word& u, const Word& v)
{
    if (u.empty())
        return TensorElem(v);
    if (v.empty())
        return TensorElem(u);
    return concat(TensorElem(Word{u[0]}), sh(u.slice(1, u.size()), v)) +
           concat(TensorElem(Word{v[0]}), sh(u, v.slice(1, v.size())));
}

TensorElem sh(const TensorElem& x, const TensorElem& y)
{
    TensorElem out;
    for (const auto& [u, c] : x)
        for (const auto& [v, c2] : y)
            out.axpy(c * c2, sh(u, v));
    return out;
}

TensorElem apply_linear(const std::function<TensorElem(const Word&)>& f, const TensorElem& x)
{
    TensorElem out;
    for (const auto& [w, c] : x)
        out.axpy(c, f(w));
    return out;
}

// Renames letters through a letter-to-letter map between two alphabets.
TensorElem rename(const std::vector<Letter>& to, const TensorElem& x)
{
    TensorElem out;
    for (const auto& [w, c] : x) {
        std::vector<Letter> letters;
        for (std::size_t i = 0; i < w.size(); ++i)
            letters.push_back(to[w[i]]);
        out.add(Word(letters), c);
    }
    return out;
}

} // namespace

TEST(Eulerian, FixesLetters)
{
    for (const char* name : {"flalg.tbl", "nplus3.tbl", "z3.tbl"}) {
        const auto b = load(name);
        for (const auto& w : all_words(b.alphabet().size(), 1, 1))
            EXPECT_EQ(eulerian_idempotent(b, w), TensorElem(w)) << name;
        EXPECT_TRUE(eulerian_idempotent(b, Word{}).is_zero());
    }
}

TEST(Eulerian, ShuffleTwoLetters)
{
    const auto b = BInftyStructure::shuffle(Alphabet::parse("v1,v2"));
    const auto& a = b.alphabet();
    EXPECT_EQ(eulerian_idempotent(b, W(a, "v1.v2")), T(a, "1/2*v1.v2 + -1/2*v2.v1"));
    EXPECT_TRUE(eulerian_idempotent(b, W(a, "v1.v1")).is_zero());
}

TEST(Eulerian, StaysInLengthFiltration)
{
    const auto b = load("flalg.tbl");
    for (const auto& w : all_words(2, 4, 1))
        for (const auto& [u, c] : eulerian_idempotent(b, w))
            EXPECT_LE(u.size(), w.size());
}

TEST(Eulerian, Idempotent)
{
    std::vector<BInftyStructure> structures{BInftyStructure::shuffle(Alphabet::parse("a,b")), load("nplus3.tbl"),
                                            load("flalg.tbl")};
    for (const auto& b : structures)
        for (const auto& w : all_words(b.alphabet().size(), 4, 1)) {
            const auto e = eulerian_idempotent(b, w);
            EXPECT_EQ(eulerian_idempotent(b, e), e) << b.alphabet().format(w);
        }
}

TEST(Eulerian, VanishesOnProducts)
{
    std::vector<BInftyStructure> structures{BInftyStructure::shuffle(Alphabet::parse("a,b")), load("nplus3.tbl"),
                                            load("flalg.tbl"), load("z3.tbl")};
    for (const auto& b : structures) {
        const auto words = all_words(b.alphabet().size(), 3, 1);
        for (const auto& u : words)
            for (const auto& v : words) {
                if (u.size() + v.size() > 4)
                    continue;
                EXPECT_TRUE(eulerian_idempotent(b, b.product(u, v)).is_zero());
            }
    }
}

TEST(Varpi, Examples)
{
    const auto fl = load("flalg.tbl");
    const auto& a = fl.alphabet();
    EXPECT_EQ(varpi(fl, W(a, "t")), LetterComb(a.at("t")));
    // -1/2 <t,t> = -z
    EXPECT_EQ(a.format(varpi(fl, W(a, "t.t"))), "-1*z");
    const auto q = load("nplus3.tbl");
    const auto& n = q.alphabet();
    EXPECT_EQ(n.format(varpi(q, W(n, "n1.n2"))), "-1/2*n3");
    const auto s = BInftyStructure::shuffle(Alphabet::parse("a,b"));
    for (const auto& w : all_words(2, 4, 2))
        EXPECT_TRUE(varpi(s, w).is_zero());
}

TEST(Varpi, IsLetterPartOfEulerian)
{
    for (const char* name : {"flalg.tbl", "nplus3.tbl", "z3.tbl"}) {
        const auto b = load(name);
        for (const auto& w : all_words(b.alphabet().size(), 4, 1))
            EXPECT_EQ(varpi(b, w), project_letters(eulerian_idempotent(b, w))) << name;
    }
}

TEST(Omega, ShuffleIsIdentity)
{
    const auto b = BInftyStructure::shuffle(Alphabet::parse("a,b"));
    const auto iso = ShuffleIsomorphism::canonical(b, 4);
    for (const auto& w : all_words(2, 4))
        EXPECT_EQ(iso.forward(TensorElem(w)), TensorElem(w));
}

TEST(Omega, QuasiShuffleExample)
{
    const auto b = load("nplus3.tbl");
    const auto& a = b.alphabet();
    const auto iso = ShuffleIsomorphism::canonical(b, 4);
    EXPECT_EQ(iso.forward(T(a, "n1.n2")), T(a, "n1.n2 + -1/2*n3"));
    EXPECT_EQ(iso.forward(T(a, "1")), T(a, "1"));
    EXPECT_EQ(omega_tilde(b, TangentEndo::eulerian(b, 4), T(a, "n1.n2")), T(a, "n1.n2 + -1/2*n3"));
}

TEST(Omega, IsomorphismLaw)
{
    for (const char* name : {"z3.tbl", "flalg.tbl"}) {
        const auto b = load(name);
        const auto iso = ShuffleIsomorphism::canonical(b, 5);
        const auto words = all_words(b.alphabet().size(), 5);
        for (const auto& u : words)
            for (const auto& v : words) {
                if (u.size() + v.size() > 5)
                    continue;
                const auto lhs = iso.forward(b.product(u, v));
                EXPECT_EQ(lhs, sh(iso.forward(TensorElem(u)), iso.forward(TensorElem(v))))
                    << name << " " << b.alphabet().format(u) << " " << b.alphabet().format(v);
            }
    }
}

TEST(Omega, CoalgebraLaw)
{
    for (const char* name : {"z3.tbl", "flalg.tbl"}) {
        const auto b = load(name);
        const auto iso = ShuffleIsomorphism::canonical(b, 5);
        for (const auto& w : all_words(b.alphabet().size(), 5)) {
            LinComb<WordPair> rhs;
            for (const auto& [p, c] : deconcat(w))
                rhs.axpy(c, tensor(iso.forward(TensorElem(p.first)), iso.forward(TensorElem(p.second))));
            EXPECT_EQ(deconcat(iso.forward(TensorElem(w))), rhs) << name;
        }
    }
}

TEST(Omega, Naturality)
{
    // n_i |-> n_{2i} is a semigroup morphism from the truncation at 3 into the
    // truncation at 6.
    const auto V = load("nplus3.tbl");
    const auto Wd = load("nplus6.tbl");
    const std::vector<Letter> to{Wd.alphabet().at("n2"), Wd.alphabet().at("n4"), Wd.alphabet().at("n6")};
    const auto iso_v = ShuffleIsomorphism::canonical(V, 4);
    const auto iso_w = ShuffleIsomorphism::canonical(Wd, 4);
    for (const auto& w : all_words(3, 4)) {
        const TensorElem x(w);
        EXPECT_EQ(rename(to, iso_v.forward(x)), iso_w.forward(rename(to, x))) << V.alphabet().format(w);
    }
}

TEST(Omega, RejectsNonTangentEndo)
{
    const auto b = load("nplus3.tbl");
    const TangentEndo id([](const Word& w) { return TensorElem(w); }, 3);
    EXPECT_FALSE(id.verify(b).ok());
    EXPECT_TRUE(id.verify(b).unit_vanishes == false);
    try {
        ShuffleIsomorphism iso(b, id);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("not tangent to identity"), std::string::npos);
    }
    EXPECT_THROW(omega_tilde(b, id, TensorElem(W(b.alphabet(), "n1"))), Error);
}

TEST(Omega, AcceptsOtherTangentEndo)
{
    // e_* followed by the projection onto letters is tangent to identity and
    // gives the same omega.
    const auto b = load("flalg.tbl");
    const TangentEndo phi([&b](const Word& w) { return as_tensor(project_letters(eulerian_idempotent(b, w))); }, 4);
    const auto report = phi.verify(b);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.bound, 4u);
    const ShuffleIsomorphism iso(b, phi);
    const auto canonical = ShuffleIsomorphism::canonical(b, 4);
    for (const auto& w : all_words(2, 4))
        EXPECT_EQ(iso.forward(TensorElem(w)), canonical.forward(TensorElem(w)));
}

TEST(Zeta, Examples)
{
    const auto b = load("nplus3.tbl");
    const auto& a = b.alphabet();
    EXPECT_EQ(a.format(zeta(b, W(a, "n1.n2"))), "1/2*n3");
    EXPECT_EQ(zeta(b, W(a, "n2")), LetterComb(a.at("n2")));
    EXPECT_EQ(zeta_tilde(b, T(a, "n1")), T(a, "n1"));
}

TEST(Zeta, RecursionMatchesGenericInverse)
{
    for (const char* name : {"nplus3.tbl", "flalg.tbl", "z3.tbl"}) {
        const auto b = load(name);
        for (const auto& w : all_words(b.alphabet().size(), 4))
            EXPECT_EQ(zeta_tilde(b, TensorElem(w)), zeta_tilde_generic(b, TensorElem(w))) << name;
    }
}

TEST(Zeta, InvertsOmega)
{
    for (const char* name : {"nplus3.tbl", "z3.tbl", "flalg.tbl"}) {
        const auto b = load(name);
        const auto iso = ShuffleIsomorphism::canonical(b, 5);
        for (const auto& w : all_words(b.alphabet().size(), 5)) {
            const TensorElem x(w);
            EXPECT_EQ(zeta_tilde(b, iso.forward(x)), x) << name;
            EXPECT_EQ(iso.forward(zeta_tilde(b, x)), x) << name;
            EXPECT_EQ(iso.inverse(iso.forward(x)), x) << name;
        }
    }
}

TEST(Hoffman, ClosedFormExamples)
{
    const auto b = load("nplus3.tbl");
    const auto& a = b.alphabet();
    EXPECT_EQ(a.format(hoffman_log(b.letter_product(), W(a, "n1.n1.n1"))), "1/3*n3");
    EXPECT_EQ(a.format(hoffman_exp(b.letter_product(), W(a, "n1.n1"))), "1/2*n2");
}

TEST(Hoffman, AgreesWithVarpiAndZeta)
{
    for (const char* name : {"nplus3.tbl", "nplus6.tbl", "z3.tbl"}) {
        const auto b = load(name);
        const auto& m = b.letter_product();
        for (const auto& w : all_words(b.alphabet().size(), 4, 1)) {
            EXPECT_EQ(hoffman_log(m, w), varpi(b, w)) << name;
            EXPECT_EQ(hoffman_exp(m, w), zeta(b, w)) << name;
        }
    }
}

TEST(Hoffman, RoundTrip)
{
    for (const char* name : {"nplus3.tbl", "z3.tbl"}) {
        const auto b = load(name);
        const auto& m = b.letter_product();
        for (const auto& w : all_words(b.alphabet().size(), 4)) {
            const TensorElem x(w);
            EXPECT_EQ(hoffman_exp_tilde(m, hoffman_log_tilde(m, x)), x);
            EXPECT_EQ(hoffman_log_tilde(m, hoffman_exp_tilde(m, x)), x);
        }
    }
}

TEST(Hoffman, LogTildeIsOmega)
{
    const auto b = load("z3.tbl");
    const auto iso = ShuffleIsomorphism::canonical(b, 4);
    for (const auto& w : all_words(3, 4))
        EXPECT_EQ(hoffman_log_tilde(b.letter_product(), TensorElem(w)), iso.forward(TensorElem(w)));
    const auto words = all_words(3, 2);
    for (const auto& u : words)
        for (const auto& v : words)
            EXPECT_EQ(apply_linear([&b](const Word& w) { return hoffman_log_tilde(b.letter_product(), TensorElem(w)); },
                            b.product(u, v)),
                      sh(iso.forward(TensorElem(u)), iso.forward(TensorElem(v))));
}
