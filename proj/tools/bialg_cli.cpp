#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bialg.h"

namespace {

struct Failure {
    bialg_status status;
};

int exit_code(bialg_status s)
{
    switch (s) {
    case BIALG_OK:
        return 0;
    case BIALG_E_INPUT:
    case BIALG_E_DOMAIN:
        return 2;
    case BIALG_E_SIZE_BOUND:
        return 3;
    default:
        return 1;
    }
}

void check(bialg_status s)
{
    if (s != BIALG_OK)
        throw Failure{s};
}

void print_owned(char* text)
{
    std::cout << text << '\n';
    bialg_string_free(text);
}

class Structure {
public:
    Structure() = default;
    Structure(const Structure&) = delete;
    Structure& operator=(const Structure&) = delete;
    ~Structure() { bialg_structure_free(s_); }

    bialg_structure** out() { return &s_; }
    const bialg_structure* get() const { return s_; }

private:
    bialg_structure* s_ = nullptr;
};

// Options shared by every command acting on a tensor algebra.
struct StructureOpts {
    std::string table;
    std::string mode;
    std::string alphabet;

    void add_to(CLI::App* app)
    {
        app->add_option("--table", table, "structure table file");
        app->add_option("--mode", mode, "shuffle (when no table is given)")->check(CLI::IsMember({"shuffle"}));
        app->add_option("--alphabet", alphabet, "alphabet for --mode shuffle, e.g. a,b:2");
    }

    void open(Structure& s, const std::vector<std::string>& words) const
    {
        if (!table.empty()) {
            check(bialg_structure_load(table.c_str(), s.out()));
            return;
        }
        std::vector<const char*> ptrs;
        for (const auto& w : words)
            ptrs.push_back(w.c_str());
        check(bialg_structure_shuffle(alphabet.empty() ? nullptr : alphabet.c_str(), ptrs.data(), ptrs.size(),
                                      s.out()));
    }
};

std::size_t longest_word(const std::string& x)
{
    std::size_t best = 0, cur = 1;
    bool in_word = false;
    for (char ch : x) {
        if (ch == '.') {
            ++cur;
        } else if (ch == '+' || ch == '*' || ch == ' ') {
            if (in_word)
                best = std::max(best, cur);
            cur = 1;
            in_word = false;
        } else {
            in_word = true;
        }
    }
    if (in_word)
        best = std::max(best, cur);
    return best;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with B-infinity structures, descent algebras and finite topologies"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "JSON output")->configurable(false);
    auto fmt = [&json] { return json ? BIALG_JSON : BIALG_TEXT; };

    std::function<void()> action;

    // tensor algebra
    std::string w1, w2;
    StructureOpts sh_opts;
    auto* shuffle = app.add_subcommand("shuffle", "shuffle product of two tensors");
    shuffle->add_option("x", w1)->required();
    shuffle->add_option("y", w2)->required();
    shuffle->add_option("--alphabet", sh_opts.alphabet, "alphabet, e.g. a,b:2");
    shuffle->callback([&] {
        action = [&] {
            Structure s;
            sh_opts.open(s, {w1, w2});
            char* out = nullptr;
            check(bialg_product(s.get(), w1.c_str(), w2.c_str(), fmt(), &out));
            print_owned(out);
        };
    });

    StructureOpts q_opts;
    auto* qshuffle = app.add_subcommand("qshuffle", "quasi-shuffle product of two tensors");
    qshuffle->add_option("--table", q_opts.table, "qshuffle table file")->required();
    qshuffle->add_option("x", w1)->required();
    qshuffle->add_option("y", w2)->required();
    qshuffle->callback([&] {
        action = [&] {
            Structure s;
            q_opts.open(s, {});
            char* out = nullptr;
            check(bialg_product(s.get(), w1.c_str(), w2.c_str(), fmt(), &out));
            print_owned(out);
        };
    });

    StructureOpts b_opts;
    std::size_t budget = 4;
    auto* binf = app.add_subcommand("binf", "B-infinity structure operations");
    binf->require_subcommand(1);
    auto* prod = binf->add_subcommand("prod", "induced product of two tensors");
    b_opts.add_to(prod);
    prod->add_option("x", w1)->required();
    prod->add_option("y", w2)->required();
    prod->callback([&] {
        action = [&] {
            Structure s;
            b_opts.open(s, {w1, w2});
            char* out = nullptr;
            check(bialg_product(s.get(), w1.c_str(), w2.c_str(), fmt(), &out));
            print_owned(out);
        };
    });
    auto* axioms = binf->add_subcommand("check", "unit, associativity, commutativity and triviality report");
    b_opts.add_to(axioms);
    axioms->add_option("--budget", budget, "total word length checked")->check(CLI::Range(0, 12));
    axioms->callback([&] {
        action = [&] {
            Structure s;
            b_opts.open(s, {});
            char* out = nullptr;
            check(bialg_check_axioms(s.get(), budget, fmt(), &out));
            print_owned(out);
        };
    });

    using UnaryFn = std::function<bialg_status(const bialg_structure*, const char*, char**)>;
    auto unary = [&](const char* name, const char* help, StructureOpts& opts, UnaryFn fn) {
        auto* cmd = app.add_subcommand(name, help);
        opts.add_to(cmd);
        cmd->add_option("x", w1)->required();
        cmd->callback([&opts, fn, &action, &w1] {
            action = [&opts, fn, &w1] {
                Structure s;
                opts.open(s, {w1});
                char* out = nullptr;
                check(fn(s.get(), w1.c_str(), &out));
                print_owned(out);
            };
        });
        return cmd;
    };
    StructureOpts e_opts, v_opts, o_opts, z_opts;
    unary("eulerian", "canonical idempotent e*", e_opts,
          [&](const bialg_structure* s, const char* x, char** out) { return bialg_eulerian(s, x, fmt(), out); });
    unary("varpi", "structure map onto letters", v_opts,
          [&](const bialg_structure* s, const char* x, char** out) { return bialg_varpi(s, x, fmt(), out); });
    std::optional<std::size_t> omega_budget;
    auto* omega = unary("omega", "isomorphism onto the shuffle algebra", o_opts,
                        [&](const bialg_structure* s, const char* x, char** out) {
                            const std::size_t b = omega_budget ? *omega_budget : longest_word(x);
                            return bialg_omega(s, x, b, fmt(), out);
                        });
    omega->add_option("--budget", omega_budget, "total length for the tangency check")->check(CLI::Range(0, 12));
    unary("zeta", "inverse isomorphism from the shuffle algebra", z_opts,
          [&](const bialg_structure* s, const char* x, char** out) { return bialg_zeta(s, x, fmt(), out); });

    StructureOpts h_opts;
    std::string direction;
    auto* hoffman = app.add_subcommand("hoffman", "Hoffman isomorphism of a quasi-shuffle algebra");
    hoffman->add_option("direction", direction, "log or exp")->required()->check(CLI::IsMember({"log", "exp"}));
    h_opts.add_to(hoffman);
    hoffman->add_option("x", w1)->required();
    hoffman->callback([&] {
        action = [&] {
            Structure s;
            h_opts.open(s, {w1});
            char* out = nullptr;
            const auto dir = direction == "exp" ? BIALG_HOFFMAN_EXP : BIALG_HOFFMAN_LOG;
            check(bialg_hoffman(s.get(), dir, w1.c_str(), fmt(), &out));
            print_owned(out);
        };
    });

    // descent algebra
    int degree = 0;
    std::string g, h;
    auto* desc = app.add_subcommand("desc", "descent algebra");
    desc->require_subcommand(1);
    auto degree_cmd = [&](const char* name, const char* help, std::function<bialg_status(int, char**)> fn) {
        auto* cmd = desc->add_subcommand(name, help);
        cmd->add_option("n", degree)->required();
        cmd->callback([&action, &degree, fn] {
            action = [&degree, fn] {
                char* out = nullptr;
                check(fn(degree, &out));
                print_owned(out);
            };
        });
    };
    degree_cmd("dynkin", "Dynkin element", [&](int n, char** out) { return bialg_desc_dynkin(n, fmt(), out); });
    degree_cmd("solomon", "Solomon idempotent", [&](int n, char** out) { return bialg_desc_solomon(n, fmt(), out); });
    degree_cmd("check", "idempotence, primitivity and Lie checks",
               [&](int n, char** out) { return bialg_desc_check(n, fmt(), out); });
    auto pair_cmd = [&](const char* name, const char* help,
                        std::function<bialg_status(const char*, const char*, char**)> fn) {
        auto* cmd = desc->add_subcommand(name, help);
        cmd->add_option("left", g)->required();
        cmd->add_option("right", h)->required();
        cmd->callback([&action, &g, &h, fn] {
            action = [&g, &h, fn] {
                char* out = nullptr;
                check(fn(g.c_str(), h.c_str(), &out));
                print_owned(out);
            };
        });
    };
    pair_cmd("conv", "convolution product",
             [&](const char* a, const char* b, char** out) { return bialg_desc_conv(a, b, fmt(), out); });
    pair_cmd("compose", "internal product",
             [&](const char* a, const char* b, char** out) { return bialg_desc_compose(a, b, fmt(), out); });

    // finite topologies
    std::string topo_text;
    auto* topo = app.add_subcommand("topo", "finite topologies");
    topo->require_subcommand(1);
    const std::vector<std::pair<const char*, bialg_topo_op>> ops{
        {"delta", BIALG_TOPO_DELTA},       {"delta2", BIALG_TOPO_DELTA2},     {"pi", BIALG_TOPO_PI},
        {"upsilon", BIALG_TOPO_UPSILON},   {"lambda", BIALG_TOPO_LAMBDA},     {"eulerian", BIALG_TOPO_EULERIAN},
        {"pieul", BIALG_TOPO_PIEUL},       {"antipode", BIALG_TOPO_ANTIPODE},
    };
    for (const auto& [name, op] : ops) {
        auto* cmd = topo->add_subcommand(name);
        cmd->add_option("topology", topo_text)->required();
        cmd->callback([&action, &topo_text, &fmt, op = op] {
            action = [&topo_text, &fmt, op] {
                char* out = nullptr;
                check(bialg_topo(op, topo_text.c_str(), fmt(), &out));
                print_owned(out);
            };
        });
    }
    auto* canon = topo->add_subcommand("canon", "canonical name");
    canon->add_option("topology", topo_text)->required();
    canon->callback([&] {
        action = [&] {
            char* out = nullptr;
            check(bialg_topo_canonical(topo_text.c_str(), &out));
            print_owned(out);
        };
    });
    for (const auto& [name, family] : {std::pair{"ladder", BIALG_FAMILY_LADDER}, {"corolla", BIALG_FAMILY_COROLLA}}) {
        auto* cmd = topo->add_subcommand(name, "closed form of e");
        cmd->add_option("n", degree)->required();
        cmd->callback([&action, &degree, &fmt, family = family] {
            action = [&degree, &fmt, family] {
                char* out = nullptr;
                check(bialg_topo_family_eulerian(family, degree, fmt(), &out));
                print_owned(out);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    try {
        action();
    } catch (const Failure& f) {
        std::cerr << "error: " << bialg_last_error() << '\n';
        return exit_code(f.status);
    }
    return 0;
}
