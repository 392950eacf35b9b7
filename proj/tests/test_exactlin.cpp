#include <gtest/gtest.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bialg/error.hpp"
#include "bialg/lincomb.hpp"
#include "bialg/poly.hpp"
#include "bialg/scalar.hpp"

using bialg::LinComb;
using bialg::Poly;
using bialg::Scalar;

TEST(Scalar, AddsFractions) { EXPECT_EQ((Scalar(1, 2) + Scalar(1, 3)).str(), "5/6"); }

TEST(Scalar, NormalizesOnConstruction)
{
    Scalar s(2, 4);
    EXPECT_EQ(s.str(), "1/2");
    EXPECT_EQ(Scalar(3, -6).str(), "-1/2");
    EXPECT_EQ(Scalar(0, 5).denominator(), 1);
}

TEST(Scalar, ZeroDivisor)
{
    try {
        Scalar(-1, 3) / Scalar(0);
        FAIL() << "expected an error";
    } catch (const bialg::Error& e) {
        EXPECT_NE(std::string(e.what()).find("zero divisor"), std::string::npos);
    }
    EXPECT_THROW(Scalar(1, 0), bialg::Error);
}

TEST(Scalar, ParsesAndPrints)
{
    EXPECT_EQ(Scalar::parse("-3/9").str(), "-1/3");
    EXPECT_EQ(Scalar::parse("7").str(), "7");
    EXPECT_EQ(Scalar::parse("0/4").str(), "0");
    EXPECT_THROW(Scalar::parse("1/"), bialg::Error);
    EXPECT_THROW(Scalar::parse("x"), bialg::Error);
    EXPECT_THROW(Scalar::parse("1/0"), bialg::Error);
}

TEST(Scalar, AgreesWithIntegerArithmetic)
{
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int i = 0; i < 1000; ++i) {
        const long a = d(gen), b = d(gen);
        EXPECT_EQ(Scalar(a) + Scalar(b), Scalar(a + b));
        EXPECT_EQ(Scalar(a) - Scalar(b), Scalar(a - b));
        EXPECT_EQ(Scalar(a) * Scalar(b), Scalar(a * b));
        if (b != 0 && a % b == 0) {
            EXPECT_EQ(Scalar(a) / Scalar(b), Scalar(a / b));
        }
    }
}

TEST(Scalar, BinomialAndFactorial)
{
    EXPECT_EQ(bialg::binomial(5, 2), Scalar(10));
    EXPECT_EQ(bialg::binomial(3, 5), Scalar(0));
    EXPECT_EQ(bialg::factorial(6), Scalar(720));
}

namespace {

Poly random_poly(std::mt19937_64& gen)
{
    std::uniform_int_distribution<long> c(-9, 9);
    std::uniform_int_distribution<unsigned> deg(0, 8);
    Poly p;
    const unsigned n = deg(gen);
    for (unsigned e = 0; e <= n; ++e)
        p += Poly::monomial(e, Scalar(c(gen), 1 + static_cast<long>(e)));
    return p;
}

} // namespace

TEST(Poly, MultipliesExample)
{
    const Poly p = Poly::x() * (Poly::monomial(1, 2) + Poly(Scalar(1)));
    EXPECT_EQ(p.str(), "2X^2+X");
}

TEST(Poly, AdditiveIdentityAndPrinting)
{
    const Poly p = Poly::monomial(2, 6) + Poly::monomial(1, 6) + Poly(Scalar(1));
    EXPECT_EQ((p + Poly()).str(), "6X^2+6X+1");
    EXPECT_EQ((p * Scalar(1)).str(), "6X^2+6X+1");
    EXPECT_EQ(Poly().str(), "0");
    EXPECT_FALSE(Poly().degree().has_value());
    EXPECT_EQ(*p.degree(), 2u);
    EXPECT_EQ((Poly::monomial(3, Scalar(-1, 2)) - Poly::x()).str(), "-(1/2)X^3-X");
}

TEST(Poly, PrunesZeroCoefficients)
{
    Poly p = Poly::x() - Poly::x();
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.coefficients().empty());
}

TEST(Poly, RingAxiomsOnRandomTriples)
{
    std::mt19937_64 gen(5);
    for (int i = 0; i < 50; ++i) {
        const Poly a = random_poly(gen), b = random_poly(gen), c = random_poly(gen);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(Poly, IntegratesOverUnitInterval)
{
    EXPECT_EQ(bialg::integrate_unit_interval(Poly::x()), Scalar(-1, 2));
    EXPECT_EQ(bialg::integrate_unit_interval(Poly::monomial(2, 2) + Poly::x()), Scalar(1, 6));
    EXPECT_EQ(bialg::integrate_unit_interval(Poly()), Scalar(0));
    EXPECT_EQ(bialg::integrate_unit_interval(Poly::monomial(2)), Scalar(1, 3));
}

TEST(Poly, IntegralIsLinear)
{
    std::mt19937_64 gen(9);
    for (int i = 0; i < 50; ++i) {
        const Poly a = random_poly(gen), b = random_poly(gen);
        EXPECT_EQ(bialg::integrate_unit_interval(a + b),
                  bialg::integrate_unit_interval(a) + bialg::integrate_unit_interval(b));
    }
}

TEST(LinComb, Examples)
{
    using L = LinComb<std::string>;
    L a("a");
    L diff = a;
    diff += a * Scalar(-1);
    EXPECT_TRUE(diff.is_zero());
    EXPECT_EQ(diff.size(), 0u);

    L x = L("a", 2) + L("b");
    x *= Scalar(1, 2);
    EXPECT_EQ(x.coeff("a"), Scalar(1));
    EXPECT_EQ(x.coeff("b"), Scalar(1, 2));

    const auto t = bialg::tensor(L("a") + L("b"), L("c"));
    EXPECT_EQ(t.size(), 2u);
    EXPECT_EQ(t.coeff({"a", "c"}), Scalar(1));
    EXPECT_EQ(t.coeff({"b", "c"}), Scalar(1));
}

TEST(LinComb, MatchesAssociationListOracle)
{
    using L = LinComb<int>;
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<int> key(0, 6), coeff(-3, 3), op(0, 2);
    for (int round = 0; round < 200; ++round) {
        L x;
        std::vector<std::pair<int, Scalar>> naive;
        auto naive_add = [&naive](int k, const Scalar& c) {
            for (auto& [nk, nc] : naive)
                if (nk == k) {
                    nc += c;
                    return;
                }
            naive.emplace_back(k, c);
        };
        for (int step = 0; step < 12; ++step) {
            const int k = key(gen);
            const Scalar c(coeff(gen), 1 + coeff(gen) * coeff(gen) % 3 + 3);
            switch (op(gen)) {
            case 0:
                x.add(k, c);
                naive_add(k, c);
                break;
            case 1:
                x += L(k, c);
                naive_add(k, c);
                break;
            default:
                x *= c;
                for (auto& [nk, nc] : naive)
                    nc *= c;
            }
        }
        std::size_t nonzero = 0;
        for (const auto& [k, c] : naive) {
            EXPECT_EQ(x.coeff(k), c);
            if (!c.is_zero())
                ++nonzero;
        }
        EXPECT_EQ(x.size(), nonzero);
        for (const auto& [k, c] : x)
            EXPECT_FALSE(c.is_zero());
    }
}
