#include <gtest/gtest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "bialg.h"

namespace {

// Takes ownership of a string returned by the library.
std::string take(char* s)
{
    std::string out = s ? s : "";
    bialg_string_free(s);
    return out;
}

std::string data(const char* name) { return std::string(BIALG_TEST_DATA) + "/" + name; }

struct Owned {
    bialg_structure* s = nullptr;
    ~Owned() { bialg_structure_free(s); }
};

} // namespace

TEST(CApi, ShuffleProduct)
{
    Owned o;
    const char* words[] = {"a.b", "c"};
    ASSERT_EQ(bialg_structure_shuffle(nullptr, words, 2, &o.s), BIALG_OK);
    EXPECT_EQ(bialg_structure_alphabet_size(o.s), 3u);
    char* out = nullptr;
    ASSERT_EQ(bialg_product(o.s, "a.b", "c", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "a.b.c + a.c.b + c.a.b");
}

TEST(CApi, ExplicitAlphabet)
{
    Owned o;
    ASSERT_EQ(bialg_structure_shuffle("x,y", nullptr, 0, &o.s), BIALG_OK);
    char* out = nullptr;
    ASSERT_EQ(bialg_eulerian(o.s, "x.y", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "1/2*x.y + -1/2*y.x");
    EXPECT_EQ(bialg_product(o.s, "x", "z", BIALG_TEXT, &out), BIALG_E_INPUT);
    EXPECT_NE(std::string(bialg_last_error()).find("z"), std::string::npos);
}

TEST(CApi, TableStructure)
{
    Owned o;
    ASSERT_EQ(bialg_structure_load(data("flalg.tbl").c_str(), &o.s), BIALG_OK);
    char* out = nullptr;
    ASSERT_EQ(bialg_product(o.s, "t", "t", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "2*z + 2*t.t");
    ASSERT_EQ(bialg_structure_str(o.s, &out), BIALG_OK);
    Owned again;
    const std::string text = take(out);
    ASSERT_EQ(bialg_structure_parse(text.c_str(), &again.s), BIALG_OK);
    ASSERT_EQ(bialg_structure_str(again.s, &out), BIALG_OK);
    EXPECT_EQ(take(out), text);
    ASSERT_EQ(bialg_check_axioms(o.s, 4, BIALG_JSON, &out), BIALG_OK);
    const auto report = nlohmann::json::parse(take(out));
    EXPECT_TRUE(report["associative"].get<bool>());
    EXPECT_FALSE(report["trivial"].get<bool>());
    EXPECT_EQ(report["budget"].get<int>(), 4);
}

TEST(CApi, IsomorphismsOnQuasiShuffle)
{
    Owned o;
    ASSERT_EQ(bialg_structure_load(data("nplus3.tbl").c_str(), &o.s), BIALG_OK);
    char* out = nullptr;
    ASSERT_EQ(bialg_varpi(o.s, "n1.n2", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "-1/2*n3");
    ASSERT_EQ(bialg_omega(o.s, "n1.n2", 2, BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "-1/2*n3 + n1.n2");
    ASSERT_EQ(bialg_zeta(o.s, "n1.n2", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "1/2*n3 + n1.n2");
    ASSERT_EQ(bialg_hoffman(o.s, BIALG_HOFFMAN_EXP, "n1.n1", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "1/2*n2 + n1.n1");
}

TEST(CApi, HoffmanNeedsQuasiShuffle)
{
    Owned o;
    ASSERT_EQ(bialg_structure_load(data("flalg.tbl").c_str(), &o.s), BIALG_OK);
    char* out = nullptr;
    EXPECT_NE(bialg_hoffman(o.s, BIALG_HOFFMAN_LOG, "t.t", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(out, nullptr);
}

TEST(CApi, Descent)
{
    char* out = nullptr;
    ASSERT_EQ(bialg_desc_solomon(2, BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "1/2*[1 2] + -1/2*[2 1]");
    ASSERT_EQ(bialg_desc_conv("id1", "id1", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "[1 2] + [2 1]");
    ASSERT_EQ(bialg_desc_compose("dyn2", "dyn2", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "2*[1 2] + -2*[2 1]");
    ASSERT_EQ(bialg_desc_check(4, BIALG_JSON, &out), BIALG_OK);
    const auto report = nlohmann::json::parse(take(out));
    EXPECT_TRUE(report["sol idempotent"].get<bool>());
    EXPECT_TRUE(report["dyn squared"].get<bool>());
    EXPECT_EQ(bialg_desc_dynkin(40, BIALG_TEXT, &out), BIALG_E_SIZE_BOUND);
    EXPECT_EQ(bialg_desc_compose("[2 1]", "[1 2 3]", BIALG_TEXT, &out), BIALG_E_DOMAIN);
}

TEST(CApi, Topology)
{
    char* out = nullptr;
    ASSERT_EQ(bialg_topo(BIALG_TOPO_LAMBDA, "l2", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "-1/2");
    ASSERT_EQ(bialg_topo(BIALG_TOPO_UPSILON, "3; 1<2, 1<3", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "2X^2+X");
    ASSERT_EQ(bialg_topo(BIALG_TOPO_EULERIAN, "l3", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "1/3*disc3 + -1*[3; 2<3] + l3");
    ASSERT_EQ(bialg_topo(BIALG_TOPO_PI, "disc2", BIALG_JSON, &out), BIALG_OK);
    const auto pi = nlohmann::json::parse(take(out));
    ASSERT_EQ(pi["terms"].size(), 2u);
    EXPECT_EQ(pi["terms"][1]["coeff"], "-2");
    EXPECT_EQ(pi["terms"][1]["basis"], "l2");
    ASSERT_EQ(bialg_topo_canonical("2; 2<1", &out), BIALG_OK);
    EXPECT_EQ(take(out), "l2");
    ASSERT_EQ(bialg_topo_family_eulerian(BIALG_FAMILY_LADDER, 2, BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "-1/2*disc2 + l2");
}

TEST(CApi, TopologyErrors)
{
    char* out = nullptr;
    EXPECT_EQ(bialg_topo(BIALG_TOPO_UPSILON, "1", BIALG_TEXT, &out), BIALG_E_DOMAIN);
    EXPECT_NE(std::string(bialg_last_error()).find("unit topology"), std::string::npos);
    EXPECT_EQ(bialg_topo(BIALG_TOPO_PI, "1 + l1", BIALG_TEXT, &out), BIALG_E_DOMAIN);
    EXPECT_EQ(bialg_topo(BIALG_TOPO_LAMBDA, "2; 1<3", BIALG_TEXT, &out), BIALG_E_INPUT);
    EXPECT_EQ(bialg_topo(BIALG_TOPO_EULERIAN, "disc7", BIALG_TEXT, &out), BIALG_E_SIZE_BOUND);
    EXPECT_EQ(bialg_topo_canonical("disc9", &out), BIALG_E_SIZE_BOUND);
    EXPECT_EQ(out, nullptr);
}

TEST(CApi, NullArguments)
{
    char* out = nullptr;
    EXPECT_EQ(bialg_product(nullptr, "a", "b", BIALG_TEXT, &out), BIALG_E_INPUT);
    EXPECT_EQ(bialg_topo(BIALG_TOPO_LAMBDA, nullptr, BIALG_TEXT, &out), BIALG_E_INPUT);
    EXPECT_EQ(bialg_topo(BIALG_TOPO_LAMBDA, "l2", BIALG_TEXT, nullptr), BIALG_E_INPUT);
    EXPECT_EQ(bialg_structure_load(data("missing.tbl").c_str(), nullptr), BIALG_E_INPUT);
    bialg_structure* s = nullptr;
    EXPECT_EQ(bialg_structure_load(data("missing.tbl").c_str(), &s), BIALG_E_INPUT);
    EXPECT_EQ(s, nullptr);
    bialg_structure_free(nullptr);
    bialg_string_free(nullptr);
}

TEST(CApi, LastErrorIsPerCall)
{
    char* out = nullptr;
    EXPECT_NE(bialg_topo(BIALG_TOPO_LAMBDA, "q7", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_STRNE(bialg_last_error(), "");
    ASSERT_EQ(bialg_topo(BIALG_TOPO_LAMBDA, "l1", BIALG_TEXT, &out), BIALG_OK);
    EXPECT_EQ(take(out), "1");
    EXPECT_STREQ(bialg_last_error(), "");
}
