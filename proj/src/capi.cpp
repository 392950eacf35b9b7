#include "bialg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bialg/binfty.hpp"
#include "bialg/descent.hpp"
#include "bialg/error.hpp"
#include "bialg/idem.hpp"
#include "bialg/topo.hpp"

struct bialg_structure {
    bialg::BInftyStructure b;
};

namespace {

using Terms = std::vector<std::pair<std::string, std::string>>;

thread_local std::string last_error;

bialg_status fail(bialg_status code, const char* what)
{
    last_error = what;
    return code;
}

template <class F>
bialg_status guarded(F&& f)
{
    try {
        f();
        last_error.clear();
        return BIALG_OK;
    } catch (const bialg::Error& e) {
        switch (e.kind()) {
        case bialg::Error::Kind::input:
            return fail(BIALG_E_INPUT, e.what());
        case bialg::Error::Kind::size_bound:
            return fail(BIALG_E_SIZE_BOUND, e.what());
        case bialg::Error::Kind::domain:
            return fail(BIALG_E_DOMAIN, e.what());
        }
        return fail(BIALG_E_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(BIALG_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BIALG_E_INTERNAL, e.what());
    }
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void need(const void* p, const char* what)
{
    if (!p)
        throw bialg::input_error(std::string("missing ") + what);
}

void put(char** out, const std::string& s)
{
    need(out, "output pointer");
    *out = dup(s);
}

std::string terms_json(const Terms& terms)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [c, basis] : terms)
        arr.push_back({{"coeff", c}, {"basis", basis}});
    nlohmann::ordered_json doc;
    doc["terms"] = std::move(arr);
    return doc.dump();
}

// Writes either the text form or the JSON term list of x.
template <class Key, class Compare, class KeyFmt>
void emit(const bialg::LinComb<Key, Compare>& x, KeyFmt&& key_str, bialg_format fmt, char** out)
{
    put(out, fmt == BIALG_JSON ? terms_json(bialg::term_strings(x, key_str)) : bialg::format_terms(x, key_str));
}

void emit_tensor(const bialg::Alphabet& a, const bialg::TensorElem& x, bialg_format fmt, char** out)
{
    emit(x, [&a](const bialg::Word& w) { return a.format(w); }, fmt, out);
}

void emit_letters(const bialg::Alphabet& a, const bialg::LetterComb& x, bialg_format fmt, char** out)
{
    emit(x, [&a](bialg::Letter l) { return a.name(l); }, fmt, out);
}

void emit_scalar(const bialg::Scalar& s, bialg_format fmt, char** out)
{
    if (fmt == BIALG_JSON) {
        Terms t;
        if (!s.is_zero())
            t.emplace_back(s.str(), "1");
        put(out, terms_json(t));
    } else {
        put(out, s.str());
    }
}

void emit_poly(const bialg::Poly& p, bialg_format fmt, char** out)
{
    if (fmt == BIALG_JSON) {
        Terms t;
        for (const auto& [e, c] : p.coefficients())
            t.emplace_back(c.str(), e == 0 ? "1" : e == 1 ? "X" : "X^" + std::to_string(e));
        put(out, terms_json(t));
    } else {
        put(out, p.str());
    }
}

void emit_report(const std::vector<std::pair<std::string, bool>>& checks,
                 const std::vector<std::pair<std::string, long>>& extra, bialg_format fmt, char** out)
{
    if (fmt == BIALG_JSON) {
        nlohmann::ordered_json doc;
        for (const auto& [name, ok] : checks)
            doc[name] = ok;
        for (const auto& [name, v] : extra)
            doc[name] = v;
        put(out, doc.dump());
        return;
    }
    std::string text;
    for (const auto& [name, ok] : checks)
        text += name + ": " + (ok ? "yes" : "no") + "\n";
    for (const auto& [name, v] : extra)
        text += name + ": " + std::to_string(v) + "\n";
    text.pop_back();
    put(out, text);
}

// Letter names of a tensor text, in order of appearance; coefficients,
// signs and the unit word are skipped.
std::vector<std::string> letter_names(std::string_view text)
{
    std::vector<std::string> out;
    std::string cur;
    bool coeff = false;
    auto flush = [&] {
        if (!cur.empty() && !coeff && cur != "1")
            out.push_back(cur);
        cur.clear();
        coeff = false;
    };
    for (char ch : text) {
        if (ch == '*') {
            cur.clear();
            coeff = false;
        } else if (ch == '.' || ch == '+' || ch == ' ') {
            flush();
        } else if (ch == '-' && cur.empty()) {
            continue;
        } else {
            if (cur.empty() && (ch == '/' || (ch >= '0' && ch <= '9')))
                coeff = true;
            cur += ch;
        }
    }
    flush();
    return out;
}

std::string perm_str(const bialg::desc::Permutation& p) { return "[" + p.str() + "]"; }

void emit_group(const bialg::desc::GroupAlgElem& g, bialg_format fmt, char** out)
{
    emit(g.terms, perm_str, fmt, out);
}

} // namespace

extern "C" {

const char* bialg_last_error(void) { return last_error.c_str(); }

void bialg_string_free(char* s) { std::free(s); }

bialg_status bialg_structure_shuffle(const char* alphabet, const char* const* words, size_t nwords,
                                     bialg_structure** out)
{
    return guarded([&] {
        need(out, "output handle");
        bialg::Alphabet a;
        if (alphabet) {
            a = bialg::Alphabet::parse(alphabet);
        } else {
            for (size_t i = 0; i < nwords; ++i) {
                need(words[i], "word");
                for (const auto& name : letter_names(words[i]))
                    if (!a.find(name))
                        a.add(name);
            }
        }
        *out = new bialg_structure{bialg::BInftyStructure::shuffle(std::move(a))};
    });
}

bialg_status bialg_structure_parse(const char* text, bialg_structure** out)
{
    return guarded([&] {
        need(text, "table text");
        need(out, "output handle");
        *out = new bialg_structure{bialg::BInftyStructure::parse(text)};
    });
}

bialg_status bialg_structure_load(const char* path, bialg_structure** out)
{
    return guarded([&] {
        need(path, "table path");
        need(out, "output handle");
        *out = new bialg_structure{bialg::BInftyStructure::load(path)};
    });
}

void bialg_structure_free(bialg_structure* s) { delete s; }

bialg_status bialg_structure_str(const bialg_structure* s, char** out)
{
    return guarded([&] {
        need(s, "structure");
        put(out, s->b.str());
    });
}

size_t bialg_structure_alphabet_size(const bialg_structure* s) { return s ? s->b.alphabet().size() : 0; }

bialg_status bialg_product(const bialg_structure* s, const char* x, const char* y, bialg_format fmt, char** out)
{
    return guarded([&] {
        need(s, "structure");
        need(x, "left factor");
        need(y, "right factor");
        const auto& a = s->b.alphabet();
        emit_tensor(a, s->b.product(a.parse_tensor(x), a.parse_tensor(y)), fmt, out);
    });
}

bialg_status bialg_check_axioms(const bialg_structure* s, size_t budget, bialg_format fmt, char** out)
{
    return guarded([&] {
        need(s, "structure");
        const auto r = bialg::check_axioms(s->b, budget);
        emit_report({{"unit", r.unit}, {"associative", r.assoc}, {"commutative", r.comm}, {"trivial", r.trivial}},
                    {{"budget", static_cast<long>(r.budget)}}, fmt, out);
    });
}

bialg_status bialg_eulerian(const bialg_structure* s, const char* x, bialg_format fmt, char** out)
{
    return guarded([&] {
        need(s, "structure");
        need(x, "input");
        const auto& a = s->b.alphabet();
        emit_tensor(a, bialg::eulerian_idempotent(s->b, a.parse_tensor(x)), fmt, out);
    });
}

bialg_status bialg_varpi(const bialg_structure* s, const char* x, bialg_format fmt, char** out)
{
    return guarded([&] {
        need(s, "structure");
        need(x, "input");
        const auto& a = s->b.alphabet();
        emit_letters(a, bialg::varpi_map(s->b)(a.parse_tensor(x)), fmt, out);
    });
}

bialg_status bialg_hoffman(const bialg_structure* s, bialg_hoffman_dir dir, const char* x, bialg_format fmt,
                           char** out)
{
    return guarded([&] {
        need(s, "structure");
        need(x, "input");
        const auto& a = s->b.alphabet();
        const auto t = a.parse_tensor(x);
        const auto& mult = s->b.letter_product();
        emit_tensor(a, dir == BIALG_HOFFMAN_EXP ? bialg::hoffman_exp_tilde(mult, t) : bialg::hoffman_log_tilde(mult, t),
                    fmt, out);
    });
}

bialg_status bialg_omega(const bialg_structure* s, const char* x, size_t budget, bialg_format fmt, char** out)
{
    return guarded([&] {
        need(s, "structure");
        need(x, "input");
        const auto& a = s->b.alphabet();
        const auto iso = bialg::ShuffleIsomorphism::canonical(s->b, budget);
        emit_tensor(a, iso.forward(a.parse_tensor(x)), fmt, out);
    });
}

bialg_status bialg_zeta(const bialg_structure* s, const char* x, bialg_format fmt, char** out)
{
    return guarded([&] {
        need(s, "structure");
        need(x, "input");
        const auto& a = s->b.alphabet();
        emit_tensor(a, bialg::zeta_tilde(s->b, a.parse_tensor(x)), fmt, out);
    });
}

bialg_status bialg_desc_dynkin(int n, bialg_format fmt, char** out)
{
    return guarded([&] { emit_group(bialg::desc::dynkin(n), fmt, out); });
}

bialg_status bialg_desc_solomon(int n, bialg_format fmt, char** out)
{
    return guarded([&] { emit_group(bialg::desc::solomon(n), fmt, out); });
}

bialg_status bialg_desc_conv(const char* g, const char* h, bialg_format fmt, char** out)
{
    return guarded([&] {
        need(g, "left element");
        need(h, "right element");
        using bialg::desc::GroupAlgElem;
        emit_group(bialg::desc::convolution(GroupAlgElem::parse(g), GroupAlgElem::parse(h)), fmt, out);
    });
}

bialg_status bialg_desc_compose(const char* g, const char* h, bialg_format fmt, char** out)
{
    return guarded([&] {
        need(g, "left element");
        need(h, "right element");
        using bialg::desc::GroupAlgElem;
        emit_group(bialg::desc::internal_product(GroupAlgElem::parse(g), GroupAlgElem::parse(h)), fmt, out);
    });
}

bialg_status bialg_desc_check(int n, bialg_format fmt, char** out)
{
    return guarded([&] {
        using namespace bialg::desc;
        if (n < 1)
            throw bialg::input_error("degree must be positive");
        const auto sol = solomon(n);
        const auto dyn = dynkin(n);
        const bool lie = n <= max_lie_degree;
        std::vector<std::pair<std::string, bool>> checks{
            {"sol idempotent", internal_product(sol, sol) == sol},
            {"sol primitive", is_primitive(to_desc(sol))},
            {"dyn primitive", is_primitive(to_desc(dyn))},
            {"dyn squared", internal_product(dyn, dyn) == bialg::Scalar(n) * dyn},
        };
        if (lie) {
            checks.emplace_back("sol lie", lie_projection_check(sol, n));
            checks.emplace_back("dyn lie", lie_projection_check(dyn, n));
        }
        emit_report(checks, {{"degree", n}}, fmt, out);
    });
}

bialg_status bialg_topo(bialg_topo_op op, const char* x, bialg_format fmt, char** out)
{
    return guarded([&] {
        namespace t = bialg::topo;
        need(x, "topology");
        const auto elem = t::parse_elem(x);
        auto name = [](const t::QuasiOrderClass& c) { return c.str(); };
        auto pair_name = [](const t::TopoPair& p) { return p.first.str() + " | " + p.second.str(); };
        switch (op) {
        case BIALG_TOPO_DELTA:
            emit(t::coproduct_Delta(elem), pair_name, fmt, out);
            return;
        case BIALG_TOPO_DELTA2:
            emit(t::coproduct_delta(elem), pair_name, fmt, out);
            return;
        case BIALG_TOPO_PI:
            emit(t::inf_pi(elem), name, fmt, out);
            return;
        case BIALG_TOPO_UPSILON: {
            bialg::Poly p;
            for (const auto& [c, coeff] : elem)
                p += coeff * t::upsilon(c);
            emit_poly(p, fmt, out);
            return;
        }
        case BIALG_TOPO_LAMBDA:
            emit_scalar(t::lambda_char(elem), fmt, out);
            return;
        case BIALG_TOPO_EULERIAN:
            emit(t::eulerian_e(elem), name, fmt, out);
            return;
        case BIALG_TOPO_PIEUL:
            emit(t::canonical_pi_idem(elem), name, fmt, out);
            return;
        case BIALG_TOPO_ANTIPODE:
            emit(t::antipode(elem), name, fmt, out);
            return;
        }
        throw bialg::input_error("unknown topology operation");
    });
}

bialg_status bialg_topo_family_eulerian(bialg_topo_family family, int n, bialg_format fmt, char** out)
{
    return guarded([&] {
        namespace t = bialg::topo;
        const auto kind = family == BIALG_FAMILY_COROLLA ? t::ClosedFormKind::corolla : t::ClosedFormKind::ladder;
        emit(t::closed_form_e(kind, n), [](const t::QuasiOrderClass& c) { return c.str(); }, fmt, out);
    });
}

bialg_status bialg_topo_canonical(const char* x, char** out)
{
    return guarded([&] {
        need(x, "topology");
        put(out, bialg::topo::canonicalize(bialg::topo::QuasiOrder::parse(x)).str());
    });
}

} // extern "C"
