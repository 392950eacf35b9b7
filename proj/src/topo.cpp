#include "bialg/topo.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <shared_mutex>

#include "bialg/error.hpp"
#include "bialg/words.hpp"
#include "text.hpp"

namespace bialg::topo {

using detail::trim;

namespace {

inline Mask bit(int i) { return Mask(1) << i; }

void check_vertices(int n)
{
    if (n < 0)
        throw input_error("negative vertex count");
    if (n > max_vertices)
        throw size_bound_error("size bound: more than " + std::to_string(max_vertices) + " points");
}

void check_size(int n, int bound, const char* what)
{
    if (n > bound)
        throw size_bound_error(std::string("size bound: ") + what + " limited to " + std::to_string(bound) +
                               " points");
}

template <class F>
void for_each_bit(Mask m, F&& f)
{
    while (m) {
        int i = std::countr_zero(m);
        f(i);
        m &= m - 1;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// QuasiOrder

QuasiOrder::QuasiOrder(int n) : n_(n), up_(static_cast<std::size_t>(n))
{
    check_vertices(n);
    for (int i = 0; i < n; ++i)
        up_[i] = bit(i);
}

QuasiOrder QuasiOrder::closure(int n, std::vector<Mask> rows)
{
    check_vertices(n);
    if (static_cast<int>(rows.size()) != n)
        throw input_error("row count does not match the vertex count");
    const Mask full = n == 0 ? 0 : (Mask(1) << n) - 1;
    for (int i = 0; i < n; ++i) {
        if (rows[i] & ~full)
            throw input_error("relation outside the vertex set");
        rows[i] |= bit(i);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (rows[i] & bit(k))
                rows[i] |= rows[k];
    QuasiOrder q;
    q.n_ = n;
    q.up_ = std::move(rows);
    return q;
}

namespace {

std::optional<int> named_size(std::string_view text, std::string_view prefix)
{
    if (text.size() <= prefix.size() || text.substr(0, prefix.size()) != prefix)
        return std::nullopt;
    unsigned long n = 0;
    if (!detail::parse_unsigned(text.substr(prefix.size()), n))
        return std::nullopt;
    if (n > static_cast<unsigned long>(max_vertices))
        throw size_bound_error("size bound: more than " + std::to_string(max_vertices) + " points");
    return static_cast<int>(n);
}

QuasiOrder ladder_order(int n)
{
    std::vector<Mask> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rows[i] = ~((Mask(1) << i) - 1) & ((Mask(1) << n) - 1);
    return QuasiOrder::closure(n, rows);
}

QuasiOrder corolla_order(int n)
{
    std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
    if (n > 0)
        rows[0] = (Mask(1) << n) - 1;
    return QuasiOrder::closure(n, rows);
}

QuasiOrder dual_corolla_order(int n)
{
    std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i + 1 < n; ++i)
        rows[i] = bit(n - 1);
    return QuasiOrder::closure(n, rows);
}

QuasiOrder clique_order(int n)
{
    std::vector<Mask> rows(static_cast<std::size_t>(n), n == 0 ? 0 : (Mask(1) << n) - 1);
    return QuasiOrder::closure(n, rows);
}

} // namespace

QuasiOrder QuasiOrder::parse(std::string_view text)
{
    text = trim(text);
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
        text = trim(text.substr(1, text.size() - 2));
    if (text.empty())
        throw input_error("empty topology text");
    if (text == "1")
        return QuasiOrder(0);
    if (text.find(';') == std::string_view::npos) {
        if (auto n = named_size(text, "disc"))
            return QuasiOrder(*n);
        if (auto n = named_size(text, "l"); n && *n >= 1)
            return ladder_order(*n);
        if (auto n = named_size(text, "c"); n && *n >= 1)
            return corolla_order(*n);
        if (auto n = named_size(text, "d"); n && *n >= 1)
            return dual_corolla_order(*n);
        if (auto n = named_size(text, "k"); n && *n >= 1)
            return clique_order(*n);
        throw input_error("bad topology '" + std::string(text) +
                          "' (expected 'n; i<j, i~j' or a name 1, l<n>, c<n>, d<n>, k<n>, disc<n>)");
    }
    auto semi = text.find(';');
    unsigned long n = 0;
    if (!detail::parse_unsigned(text.substr(0, semi), n))
        throw input_error("bad vertex count in '" + std::string(text) + "'");
    if (n > static_cast<unsigned long>(max_vertices))
        throw size_bound_error("size bound: more than " + std::to_string(max_vertices) + " points");
    const int nv = static_cast<int>(n);
    std::vector<Mask> rows(n, 0);
    auto rest = trim(text.substr(semi + 1));
    if (!rest.empty()) {
        for (auto rel : detail::split(rest, ',')) {
            rel = trim(rel);
            auto op = rel.find_first_of("<~");
            if (op == std::string_view::npos)
                throw input_error("bad relation '" + std::string(rel) + "'");
            unsigned long i = 0, j = 0;
            if (!detail::parse_unsigned(rel.substr(0, op), i) || !detail::parse_unsigned(rel.substr(op + 1), j) ||
                i < 1 || j < 1 || i > n || j > n)
                throw input_error("bad relation '" + std::string(rel) + "'");
            rows[i - 1] |= bit(static_cast<int>(j - 1));
            if (rel[op] == '~')
                rows[j - 1] |= bit(static_cast<int>(i - 1));
        }
    }
    return closure(nv, std::move(rows));
}

Mask QuasiOrder::down(int i) const
{
    Mask d = 0;
    for (int j = 0; j < n_; ++j)
        if (leq(j, i))
            d |= bit(j);
    return d;
}

bool QuasiOrder::is_up_closed(Mask s) const
{
    for (int i = 0; i < n_; ++i)
        if ((s & bit(i)) && (up_[i] & ~s))
            return false;
    return true;
}

bool QuasiOrder::is_down_closed(Mask s) const { return is_up_closed(all() & ~s); }

bool QuasiOrder::is_equivalence() const
{
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (leq(i, j) != leq(j, i))
                return false;
    return true;
}

Mask QuasiOrder::minimal() const
{
    Mask m = 0;
    for (int i = 0; i < n_; ++i) {
        bool is_min = true;
        for (int j = 0; j < n_ && is_min; ++j)
            if (less(j, i))
                is_min = false;
        if (is_min)
            m |= bit(i);
    }
    return m;
}

std::vector<Mask> QuasiOrder::classes() const
{
    std::vector<Mask> out;
    Mask seen = 0;
    for (int i = 0; i < n_; ++i) {
        if (seen & bit(i))
            continue;
        Mask c = up_[i] & down(i);
        out.push_back(c);
        seen |= c;
    }
    return out;
}

std::vector<Mask> QuasiOrder::components() const
{
    std::vector<Mask> out;
    Mask seen = 0;
    for (int i = 0; i < n_; ++i) {
        if (seen & bit(i))
            continue;
        Mask comp = bit(i), frontier = bit(i);
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](int v) { next |= up_[v] | down(v); });
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        seen |= comp;
    }
    return out;
}

QuasiOrder QuasiOrder::restrict_to(Mask s) const
{
    std::vector<int> keep;
    for_each_bit(s & all(), [&](int i) { keep.push_back(i); });
    return relabel(keep);
}

QuasiOrder QuasiOrder::relabel(const std::vector<int>& perm) const
{
    const int m = static_cast<int>(perm.size());
    QuasiOrder q;
    q.n_ = m;
    q.up_.assign(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (leq(perm[a], perm[b]))
                q.up_[a] |= bit(b);
    return q;
}

std::string QuasiOrder::relations_str() const
{
    std::string out = std::to_string(n_) + ";";
    std::vector<std::string> rels;
    const auto cls = classes();
    for (Mask c : cls) {
        int lo = std::countr_zero(c);
        for_each_bit(c & ~bit(lo), [&](int j) { rels.push_back(std::to_string(lo + 1) + "~" + std::to_string(j + 1)); });
    }
    // covers between classes, written on the class minima
    for (Mask a : cls)
        for (Mask b : cls) {
            int i = std::countr_zero(a), j = std::countr_zero(b);
            if (!less(i, j))
                continue;
            bool cover = true;
            for (Mask c : cls) {
                int k = std::countr_zero(c);
                if (less(i, k) && less(k, j)) {
                    cover = false;
                    break;
                }
            }
            if (cover)
                rels.push_back(std::to_string(i + 1) + "<" + std::to_string(j + 1));
        }
    for (std::size_t r = 0; r < rels.size(); ++r)
        out += (r ? ", " : " ") + rels[r];
    return out;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

struct CanonSearch {
    const QuasiOrder& q;
    int n;
    std::vector<int> perm;
    std::vector<int> best_perm;
    std::uint64_t best = 0;
    bool have_best = false;
    std::vector<Mask> twins;  // twins[u] has v when swapping u, v is an automorphism

    explicit CanonSearch(const QuasiOrder& order) : q(order), n(order.size()), perm(static_cast<std::size_t>(n)), twins(static_cast<std::size_t>(n), 0)
    {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (q.leq(u, v) != q.leq(v, u))
                    continue;
                bool same = true;
                for (int w = 0; w < n && same; ++w) {
                    if (w == u || w == v)
                        continue;
                    same = q.leq(u, w) == q.leq(v, w) && q.leq(w, u) == q.leq(w, v);
                }
                if (same) {
                    twins[u] |= bit(v);
                    twins[v] |= bit(u);
                }
            }
    }

    static int bits_before(int k) { return k * (k - 1); }

    void run(int k, std::uint64_t prefix, Mask used)
    {
        if (k == n) {
            if (!have_best || prefix < best) {
                best = prefix;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        const int total = bits_before(n);
        const int width = 2 * k;
        struct Cand {
            std::uint64_t bits;
            int v;
        };
        std::vector<Cand> cands;
        for (int v = 0; v < n; ++v) {
            if (used & bit(v))
                continue;
            std::uint64_t b = 0;
            for (int j = 0; j < k; ++j) {
                b = (b << 1) | (q.leq(v, perm[j]) ? 1u : 0u);
                b = (b << 1) | (q.leq(perm[j], v) ? 1u : 0u);
            }
            cands.push_back({b, v});
        }
        std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.bits < b.bits; });
        Mask tried = 0;
        for (const auto& [b, v] : cands) {
            if (twins[v] & tried)
                continue;
            tried |= bit(v);
            const std::uint64_t next = width == 0 ? prefix : ((prefix << width) | b);
            if (have_best) {
                const std::uint64_t best_prefix = best >> (total - bits_before(k + 1));
                if (next > best_prefix)
                    continue;
            }
            perm[k] = v;
            run(k + 1, next, used | bit(v));
        }
    }
};

struct CanonCache {
    std::shared_mutex mutex;
    std::map<std::vector<Mask>, QuasiOrderClass> classes;
};

CanonCache& canon_cache()
{
    static CanonCache cache;
    return cache;
}

} // namespace

QuasiOrderClass::QuasiOrderClass(const QuasiOrder& q) : QuasiOrderClass(canonicalize(q)) {}

QuasiOrderClass canonicalize(const QuasiOrder& q)
{
    if (q.size() > max_canonical)
        throw size_bound_error("size bound: canonical forms limited to " + std::to_string(max_canonical) +
                               " points");
    auto& cache = canon_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.classes.find(q.rows());
        if (it != cache.classes.end())
            return it->second;
    }
    CanonSearch s(q);
    s.run(0, 0, 0);
    QuasiOrderClass c(q.relabel(s.best_perm), s.best);
    std::unique_lock lock(cache.mutex);
    return cache.classes.try_emplace(q.rows(), std::move(c)).first->second;
}

// ---------------------------------------------------------------------------
// Names and text

QuasiOrderClass unit() { return QuasiOrderClass(); }
QuasiOrderClass point() { return canonicalize(QuasiOrder(1)); }
QuasiOrderClass ladder(int n)
{
    if (n < 1)
        throw input_error("ladder needs n >= 1");
    return canonicalize(ladder_order(n));
}
QuasiOrderClass corolla(int n)
{
    if (n < 1)
        throw input_error("corolla needs n >= 1");
    return canonicalize(corolla_order(n));
}
QuasiOrderClass dual_corolla(int n)
{
    if (n < 1)
        throw input_error("dual corolla needs n >= 1");
    return canonicalize(dual_corolla_order(n));
}
QuasiOrderClass discrete(int n) { return canonicalize(QuasiOrder(n)); }
QuasiOrderClass clique(int n)
{
    if (n < 1)
        throw input_error("clique needs n >= 1");
    return canonicalize(clique_order(n));
}

std::string QuasiOrderClass::str() const
{
    const int n = size();
    if (n == 0)
        return "1";
    if (*this == ladder(n))
        return "l" + std::to_string(n);
    if (n >= 3 && *this == corolla(n))
        return "c" + std::to_string(n);
    if (n >= 3 && *this == dual_corolla(n))
        return "d" + std::to_string(n);
    if (*this == discrete(n))
        return "disc" + std::to_string(n);
    if (*this == clique(n))
        return "k" + std::to_string(n);
    return "[" + canon_.relations_str() + "]";
}

TopoElem parse_elem(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw input_error("empty topology text");
    TopoElem x;
    if (text == "0")
        return x;
    for (auto term : detail::split(text, '+')) {
        term = trim(term);
        if (term.empty())
            throw input_error("empty term in '" + std::string(text) + "'");
        Scalar c = 1;
        auto star = term.find('*');
        if (star != std::string_view::npos) {
            c = Scalar::parse(term.substr(0, star));
            term = trim(term.substr(star + 1));
        } else if (term.front() == '-') {
            c = -1;
            term = trim(term.substr(1));
        }
        x.add(canonicalize(QuasiOrder::parse(term)), c);
    }
    return x;
}

std::string format(const TopoElem& x)
{
    return format_terms(x, [](const QuasiOrderClass& c) { return c.str(); });
}

std::string format(const TopoTensor2& x)
{
    return format_terms(x, [](const TopoPair& p) { return p.first.str() + " | " + p.second.str(); });
}

std::string format(const TopoTensor& x)
{
    return format_terms(x, [](const TopoTuple& t) {
        std::string out;
        for (std::size_t i = 0; i < t.size(); ++i)
            out += (i ? " | " : "") + t[i].str();
        return out;
    });
}

// ---------------------------------------------------------------------------
// Products and the coproduct Delta

std::vector<Mask> open_sets(const QuasiOrder& q)
{
    std::vector<Mask> out;
    const Mask full = q.all();
    for (Mask s = 0;; ++s) {
        if (q.is_up_closed(s))
            out.push_back(s);
        if (s == full)
            break;
    }
    return out;
}

QuasiOrder disjoint_union(const QuasiOrder& a, const QuasiOrder& b)
{
    const int n = a.size() + b.size();
    check_vertices(n);
    std::vector<Mask> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < a.size(); ++i)
        rows[i] = a.up(i);
    for (int i = 0; i < b.size(); ++i)
        rows[a.size() + i] = b.up(i) << a.size();
    return QuasiOrder::closure(n, std::move(rows));
}

QuasiOrder stack(const QuasiOrder& a, const QuasiOrder& b)
{
    const int n = a.size() + b.size();
    check_vertices(n);
    std::vector<Mask> rows(static_cast<std::size_t>(n));
    const Mask upper = b.all() << a.size();
    for (int i = 0; i < a.size(); ++i)
        rows[i] = a.up(i) | upper;
    for (int i = 0; i < b.size(); ++i)
        rows[a.size() + i] = b.up(i) << a.size();
    return QuasiOrder::closure(n, std::move(rows));
}

QuasiOrderClass product_m(const QuasiOrderClass& a, const QuasiOrderClass& b)
{
    return canonicalize(disjoint_union(a.canon(), b.canon()));
}

TopoElem product_m(const TopoElem& x, const TopoElem& y)
{
    TopoElem out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            out.add(product_m(a, b), ca * cb);
    return out;
}

QuasiOrderClass down_product(const QuasiOrderClass& a, const QuasiOrderClass& b)
{
    return canonicalize(stack(a.canon(), b.canon()));
}

TopoElem down_product(const TopoElem& x, const TopoElem& y)
{
    TopoElem out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            out.add(down_product(a, b), ca * cb);
    return out;
}

TopoTensor2 coproduct_Delta(const QuasiOrderClass& t)
{
    const QuasiOrder& q = t.canon();
    TopoTensor2 out;
    for (Mask o : open_sets(q))
        out.add({canonicalize(q.restrict_to(q.all() & ~o)), canonicalize(q.restrict_to(o))}, 1);
    return out;
}

TopoTensor2 coproduct_Delta(const TopoElem& x)
{
    TopoTensor2 out;
    for (const auto& [t, c] : x)
        out.axpy(c, coproduct_Delta(t));
    return out;
}

namespace {

// Calls f(layers) for each sequence of nonempty layers A_1, ..., A_k
// (k >= 1) covering the order, such that every prefix union is down-closed.
void for_each_layering(const QuasiOrder& q, const std::function<void(const std::vector<Mask>&)>& f)
{
    const Mask full = q.all();
    if (full == 0)
        return;
    std::vector<Mask> downsets;
    for (Mask o : open_sets(q))
        downsets.push_back(full & ~o);
    std::vector<Mask> layers;
    std::function<void(Mask)> rec = [&](Mask done) {
        if (done == full) {
            f(layers);
            return;
        }
        for (Mask d : downsets) {
            if ((d & done) != done || d == done)
                continue;
            layers.push_back(d & ~done);
            rec(d);
            layers.pop_back();
        }
    };
    rec(0);
}

Scalar alternating(std::size_t k)
{
    Scalar c(1, static_cast<long>(k));
    return k % 2 == 1 ? c : -c;
}

} // namespace

TopoTensor reduced_coproduct(const QuasiOrderClass& t, int k)
{
    if (k < 1)
        throw input_error("reduced coproduct needs k >= 1");
    if (t.is_unit())
        throw domain_error("not augmentation-reduced");
    const QuasiOrder& q = t.canon();
    TopoTensor out;
    for_each_layering(q, [&](const std::vector<Mask>& layers) {
        if (static_cast<int>(layers.size()) != k)
            return;
        TopoTuple parts;
        for (Mask a : layers)
            parts.push_back(canonicalize(q.restrict_to(a)));
        out.add(parts, 1);
    });
    return out;
}

TopoElem inf_pi(const TopoElem& x)
{
    TopoElem out;
    for (const auto& [t, c] : x) {
        if (t.is_unit())
            throw domain_error("projection onto primitives is defined on the augmentation ideal; unit component present");
        const QuasiOrder& q = t.canon();
        for_each_layering(q, [&](const std::vector<Mask>& layers) {
            QuasiOrder acc(0);
            for (Mask a : layers)
                acc = stack(acc, q.restrict_to(a));
            out.add(canonicalize(acc), layers.size() % 2 == 1 ? c : -c);
        });
    }
    return out;
}

TopoElem binf_bracket(const std::vector<TopoElem>& xs, const std::vector<TopoElem>& ys)
{
    auto stacked = [](const std::vector<TopoElem>& v) {
        TopoElem acc(unit());
        for (const auto& x : v)
            acc = down_product(acc, x);
        return acc;
    };
    return inf_pi(product_m(stacked(xs), stacked(ys)));
}

namespace {

struct AntipodeCache {
    std::shared_mutex mutex;
    std::map<QuasiOrderClass, TopoElem> values;
};

TopoElem antipode_class(const QuasiOrderClass& t)
{
    static AntipodeCache cache;
    if (t.is_unit())
        return TopoElem(t);
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.values.find(t);
        if (it != cache.values.end())
            return it->second;
    }
    const QuasiOrder& q = t.canon();
    TopoElem out;
    out.add(t, -1);
    for (Mask o : open_sets(q)) {
        if (o == 0 || o == q.all())
            continue;
        TopoElem lower = antipode_class(canonicalize(q.restrict_to(q.all() & ~o)));
        out -= down_product(lower, TopoElem(canonicalize(q.restrict_to(o))));
    }
    std::unique_lock lock(cache.mutex);
    return cache.values.try_emplace(t, std::move(out)).first->second;
}

} // namespace

TopoElem antipode(const TopoElem& x)
{
    TopoElem out;
    for (const auto& [t, c] : x)
        out.axpy(c, antipode_class(t));
    return out;
}

// ---------------------------------------------------------------------------
// Partitions and the contraction coproduct delta

int Partition::blocks() const
{
    int b = 0;
    for (int x : block_of)
        b = std::max(b, x + 1);
    return b;
}

std::vector<Mask> Partition::block_masks() const
{
    std::vector<Mask> out(static_cast<std::size_t>(blocks()), 0);
    for (int i = 0; i < size(); ++i)
        out[block_of[i]] |= bit(i);
    return out;
}

Partition Partition::from_blocks(int n, const std::vector<Mask>& blocks)
{
    Partition p;
    p.block_of.assign(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::map<std::size_t, int> renumber;
    for (int i = 0; i < n; ++i) {
        std::size_t b = blocks.size();
        for (std::size_t j = 0; j < blocks.size(); ++j)
            if (blocks[j] & bit(i))
                b = j;
        if (b == blocks.size())
            throw input_error("blocks do not cover the vertex set");
        auto [it, inserted] = renumber.try_emplace(b, next);
        if (inserted)
            ++next;
        p.block_of[i] = it->second;
    }
    return p;
}

std::string Partition::str() const
{
    std::string out = "{";
    const auto masks = block_masks();
    for (std::size_t b = 0; b < masks.size(); ++b) {
        out += b ? ",{" : "{";
        bool first = true;
        for_each_bit(masks[b], [&](int i) {
            out += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        });
        out += "}";
    }
    return out + "}";
}

std::vector<Partition> set_partitions(int n)
{
    check_size(n, max_delta, "set partitions");
    std::vector<Partition> out;
    Partition p;
    p.block_of.assign(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            out.push_back(p);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            p.block_of[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    if (n == 0)
        return {p};
    p.block_of[0] = 0;
    rec(1, 1);
    return out;
}

QuasiOrder restrict(const QuasiOrder& t, const Partition& p)
{
    if (p.size() != t.size())
        throw input_error("partition size does not match the topology");
    std::vector<Mask> rows(static_cast<std::size_t>(t.size()));
    const auto masks = p.block_masks();
    for (int i = 0; i < t.size(); ++i)
        rows[i] = t.up(i) & masks[p.block_of[i]];
    return QuasiOrder::closure(t.size(), std::move(rows));
}

QuasiOrder quotient(const QuasiOrder& t, const Partition& p)
{
    if (p.size() != t.size())
        throw input_error("partition size does not match the topology");
    std::vector<Mask> rows(static_cast<std::size_t>(t.size()));
    const auto masks = p.block_masks();
    for (int i = 0; i < t.size(); ++i)
        rows[i] = t.up(i) | masks[p.block_of[i]];
    return QuasiOrder::closure(t.size(), std::move(rows));
}

std::vector<Partition> ec_partitions(const QuasiOrder& t)
{
    check_size(t.size(), max_delta, "contraction coproduct");
    std::vector<Partition> out;
    for (const auto& p : set_partitions(t.size())) {
        const auto blocks = p.block_masks();
        auto comps = restrict(t, p).components();
        std::sort(comps.begin(), comps.end());
        auto sorted_blocks = blocks;
        std::sort(sorted_blocks.begin(), sorted_blocks.end());
        if (comps != sorted_blocks)
            continue;
        auto cls = quotient(t, p).classes();
        std::sort(cls.begin(), cls.end());
        if (cls != sorted_blocks)
            continue;
        out.push_back(p);
    }
    return out;
}

TopoTensor2 coproduct_delta(const QuasiOrderClass& t)
{
    const QuasiOrder& q = t.canon();
    check_size(q.size(), max_delta, "contraction coproduct");
    TopoTensor2 out;
    if (t.is_unit()) {
        out.add({t, t}, 1);
        return out;
    }
    for (const auto& p : ec_partitions(q))
        out.add({canonicalize(quotient(q, p)), canonicalize(restrict(q, p))}, 1);
    return out;
}

TopoTensor2 coproduct_delta(const TopoElem& x)
{
    TopoTensor2 out;
    for (const auto& [t, c] : x)
        out.axpy(c, coproduct_delta(t));
    return out;
}

Scalar eps_delta(const QuasiOrderClass& t) { return t.canon().is_equivalence() ? 1 : 0; }

// ---------------------------------------------------------------------------
// Upsilon and lambda

namespace {

struct UpsilonCache {
    std::shared_mutex mutex;
    std::map<QuasiOrderClass, Poly> values;
};

Poly upsilon_recursive(const QuasiOrderClass& t)
{
    static UpsilonCache cache;
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.values.find(t);
        if (it != cache.values.end())
            return it->second;
    }
    const QuasiOrder& q = t.canon();
    std::vector<Mask> min_classes;
    const Mask mins = q.minimal();
    for (Mask c : q.classes())
        if (c & mins)
            min_classes.push_back(c);
    Poly out;
    const std::size_t r = min_classes.size();
    for (unsigned sel = 1; sel < (1u << r); ++sel) {
        Mask removed = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (sel & (1u << j))
                removed |= min_classes[j];
        const Mask rest = q.all() & ~removed;
        if (rest == 0)
            out += Poly(Scalar(1));  // X * Upsilon(1) = X * X^{-1}
        else
            out += Poly::x() * upsilon_recursive(canonicalize(q.restrict_to(rest)));
    }
    std::unique_lock lock(cache.mutex);
    return cache.values.try_emplace(t, std::move(out)).first->second;
}

Poly upsilon_surjections(const QuasiOrder& q)
{
    // Work on the classes: f is constant on classes and strictly increasing
    // along the strict order between them.
    const auto cls = q.classes();
    const int r = static_cast<int>(cls.size());
    std::vector<int> rep(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        rep[i] = std::countr_zero(cls[i]);
    Poly out;
    std::vector<int> f(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k) {
        long count = 0;
        std::function<void(int)> rec = [&](int i) {
            if (i == r) {
                std::vector<bool> hit(static_cast<std::size_t>(k), false);
                for (int v : f)
                    hit[v] = true;
                if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }))
                    ++count;
                return;
            }
            for (int v = 0; v < k; ++v) {
                bool ok = true;
                for (int j = 0; j < i && ok; ++j) {
                    if (q.less(rep[j], rep[i]) && !(f[j] < v))
                        ok = false;
                    if (q.less(rep[i], rep[j]) && !(v < f[j]))
                        ok = false;
                }
                if (!ok)
                    continue;
                f[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
        if (count)
            out += Poly::monomial(static_cast<unsigned>(k - 1), Scalar(count));
    }
    return out;
}

} // namespace

Poly upsilon(const QuasiOrderClass& t, UpsilonMethod method)
{
    if (t.is_unit())
        throw domain_error("unit topology");
    if (method == UpsilonMethod::recursive)
        return upsilon_recursive(t);
    return upsilon_surjections(t.canon());
}

Scalar lambda_char(const QuasiOrderClass& t, LambdaMethod method)
{
    if (t.is_unit())
        return 0;
    if (method == LambdaMethod::integral)
        return integrate_unit_interval(upsilon(t));
    const QuasiOrder& q = t.canon();
    Scalar out;
    for_each_layering(q, [&](const std::vector<Mask>& layers) {
        for (Mask a : layers)
            if (!q.restrict_to(a).is_equivalence())
                return;
        out += alternating(layers.size());
    });
    return out;
}

Scalar lambda_char(const TopoElem& x, LambdaMethod method)
{
    Scalar out;
    for (const auto& [t, c] : x)
        out += c * lambda_char(t, method);
    return out;
}

// ---------------------------------------------------------------------------
// Eulerian idempotent

TopoElem eulerian_e(const QuasiOrderClass& t, EulerianMethod method)
{
    const QuasiOrder& q = t.canon();
    check_size(q.size(), max_eulerian, "Eulerian idempotent");
    TopoElem out;
    if (t.is_unit())
        return out;
    if (method == EulerianMethod::via_delta) {
        for (const auto& p : ec_partitions(q))
            out.add(canonicalize(restrict(q, p)), lambda_char(canonicalize(quotient(q, p))));
        return out;
    }
    for_each_layering(q, [&](const std::vector<Mask>& layers) {
        Partition p = Partition::from_blocks(q.size(), layers);
        out.add(canonicalize(restrict(q, p)), alternating(layers.size()));
    });
    return out;
}

TopoElem eulerian_e(const TopoElem& x, EulerianMethod method)
{
    TopoElem out;
    for (const auto& [t, c] : x)
        out.axpy(c, eulerian_e(t, method));
    return out;
}

TopoElem canonical_pi_idem(const TopoElem& x) { return inf_pi(eulerian_e(x)); }

mpz_class surjection_count(int n, int k)
{
    if (n < 0 || k < 0)
        throw input_error("surjection count needs n, k >= 0");
    // inclusion-exclusion over the missed values of [k+1]
    const unsigned m = static_cast<unsigned>(k + 1);
    mpz_class total = 0;
    for (unsigned j = 0; j <= m; ++j) {
        mpz_class c, p;
        mpz_bin_uiui(c.get_mpz_t(), m, j);
        mpz_ui_pow_ui(p.get_mpz_t(), m - j, static_cast<unsigned long>(n));
        if (j % 2 == 0)
            total += c * p;
        else
            total -= c * p;
    }
    return total;
}

Scalar corolla_lambda(int n)
{
    if (n < 1)
        throw input_error("corolla needs n >= 1");
    if (n == 1)
        return 1;
    Scalar out;
    for (int k = 0; k <= n - 2; ++k) {
        Scalar term(surjection_count(n - 1, k), mpz_class(k + 2));
        out += k % 2 == 0 ? -term : term;
    }
    return out;
}

TopoElem closed_form_e(ClosedFormKind kind, int n)
{
    if (n < 1)
        throw input_error("closed forms need n >= 1");
    check_size(n, max_canonical, "closed forms");
    TopoElem out;
    if (kind == ClosedFormKind::ladder) {
        for_each_composition(static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& cuts) {
            QuasiOrder acc(0);
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                acc = disjoint_union(acc, ladder_order(static_cast<int>(cuts[i + 1] - cuts[i])));
            out.add(canonicalize(acc), alternating(cuts.size() - 1));
        });
        return out;
    }
    for (int i = 0; i <= n - 1; ++i) {
        Scalar c = binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(i)) * corolla_lambda(i + 1);
        out.add(canonicalize(disjoint_union(QuasiOrder(i), corolla_order(n - i))), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<QuasiOrderClass> enumerate_isoclasses(int n)
{
    if (n < 0)
        throw input_error("negative size");
    check_size(n, 6, "isoclass enumeration");
    static std::mutex mutex;
    static std::map<int, std::vector<QuasiOrderClass>> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(n); it != memo.end())
            return it->second;
    }
    std::set<QuasiOrderClass> found;
    if (n == 0) {
        found.insert(unit());
    } else {
        for (const auto& base : enumerate_isoclasses(n - 1)) {
            const QuasiOrder& q = base.canon();
            const int m = q.size();
            std::vector<Mask> downs, ups;
            for (Mask o : open_sets(q)) {
                ups.push_back(o);
                downs.push_back(q.all() & ~o);
            }
            for (Mask d : downs)
                for (Mask u : ups) {
                    // the new vertex sits above d and below u; the old order
                    // must already contain d x u
                    bool ok = true;
                    for_each_bit(d, [&](int i) {
                        if ((q.up(i) & u) != u)
                            ok = false;
                    });
                    if (!ok)
                        continue;
                    std::vector<Mask> rows(q.rows());
                    for_each_bit(d, [&](int i) { rows[i] |= bit(m); });
                    rows.push_back(u | bit(m));
                    found.insert(canonicalize(QuasiOrder::closure(m + 1, std::move(rows))));
                }
        }
    }
    std::vector<QuasiOrderClass> out(found.begin(), found.end());
    std::lock_guard lock(mutex);
    return memo.try_emplace(n, std::move(out)).first->second;
}

} // namespace bialg::topo
