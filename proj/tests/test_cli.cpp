#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Case {
    std::string name;
    int exit_code = 0;
    std::string args;
};

struct Outcome {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Case> manifest()
{
    std::vector<Case> cases;
    std::ifstream in(std::string(BIALG_GOLDEN) + "/manifest.tsv");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto t1 = line.find('\t'), t2 = line.find('\t', t1 + 1);
        Case c{line.substr(0, t1), std::stoi(line.substr(t1 + 1, t2 - t1 - 1)), line.substr(t2 + 1)};
        for (std::size_t at; (at = c.args.find("@DATA@")) != std::string::npos;)
            c.args.replace(at, 6, BIALG_TEST_DATA);
        cases.push_back(c);
    }
    return cases;
}

// Runs the CLI through the shell so the manifest can use shell quoting.
Outcome run(const std::string& args)
{
    const auto err_path = std::filesystem::temp_directory_path() / ("bialg_cli_err_" + std::to_string(::getpid()));
    const std::string cmd = std::string("'") + BIALG_CLI + "' " + args + " 2>'" + err_path.string() + "'";
    Outcome r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    std::filesystem::remove(err_path);
    return r;
}

} // namespace

TEST(Cli, GoldenOutputs)
{
    const auto cases = manifest();
    ASSERT_GE(cases.size(), 30u);
    for (const auto& c : cases) {
        SCOPED_TRACE(c.name + ": " + c.args);
        const std::string golden = slurp(std::string(BIALG_GOLDEN) + "/" + c.name + ".out");
        ASSERT_FALSE(golden.empty());
        const Outcome r = run(c.args);
        EXPECT_EQ(r.exit_code, c.exit_code);
        if (c.exit_code == 0) {
            EXPECT_EQ(r.out, golden);
            EXPECT_EQ(r.err, "");
        } else {
            // errors: empty stdout, stderr opens with the golden line
            EXPECT_EQ(r.out, "");
            EXPECT_EQ(r.err.rfind(golden.substr(0, golden.size() - 1), 0), 0u) << r.err;
        }
    }
}

TEST(Cli, Deterministic)
{
    for (const auto& c : manifest()) {
        const Outcome a = run(c.args), b = run(c.args);
        EXPECT_EQ(a.out, b.out) << c.name;
        EXPECT_EQ(a.exit_code, b.exit_code) << c.name;
    }
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("").exit_code, 2);
    EXPECT_EQ(run("shuffle a").exit_code, 2);
    EXPECT_EQ(run("topo frobnicate l2").exit_code, 2);
    EXPECT_EQ(run("hoffman sideways --table x n1").exit_code, 2);
    const Outcome help = run("--help");
    EXPECT_EQ(help.exit_code, 0);
    EXPECT_NE(help.out.find("topo"), std::string::npos);
}

TEST(Cli, JsonIsWellFormedForEveryTopologyOp)
{
    for (const char* op : {"delta", "delta2", "pi", "upsilon", "lambda", "eulerian", "pieul", "antipode"}) {
        const Outcome r = run(std::string("--json topo ") + op + " c3");
        EXPECT_EQ(r.exit_code, 0) << op;
        ASSERT_FALSE(r.out.empty()) << op;
        EXPECT_EQ(r.out.rfind("{\"terms\":[", 0), 0u) << op << ": " << r.out;
    }
}
