#pragma once
// Independent reference implementations shared by the test suites. Nothing
// here calls into the navigation or solving code it is used to check.

#include <rabin/rabin.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace rabin::testing {

inline BitNode bn(std::initializer_list<std::pair<const char*, Colour>> es)
{
    BitNode n;
    for (auto [l, c] : es) n.push_back({BitLabel(std::string_view(l)), c});
    return n;
}

inline NatNode nn(std::initializer_list<std::pair<NatLabel, Colour>> es)
{
    NatNode n;
    for (auto [l, c] : es) n.push_back({l, c});
    return n;
}

/// Sort key with 0 < ε < 1 spelled as 'a' < 'b' < 'c': every label becomes
/// its bits as a/c followed by a 'b' terminator, then the colour byte.
inline std::string order_key(const BitNode& n)
{
    std::string key;
    for (const auto& e : n.entries()) {
        for (std::size_t i = 0; i < e.label.size(); ++i) key += e.label[i] ? 'c' : 'a';
        key += 'b';
        key += static_cast<char>(e.colour);
    }
    return key;
}

inline std::vector<BitLabel> labels_up_to(std::size_t len)
{
    std::vector<BitLabel> out{BitLabel{}};
    for (std::size_t l = 1; l <= len; ++l)
        for (std::size_t x = 0; x < (std::size_t{1} << l); ++x) {
            BitLabel w;
            for (std::size_t b = l; b-- > 0;) w.push_back((x >> b) & 1u);
            out.push_back(w);
        }
    return out;
}

/// Every node of U^ℓ over colours 1..h by definition: distinct colours,
/// ⊥ only last, at most ℓ bits, and a ⊥ entry under all h colours using
/// exactly the remaining bits. Returned in ≺ order via order_key.
inline std::vector<BitNode> all_valid_nodes(std::size_t ell, unsigned h)
{
    std::vector<BitNode> out;
    std::vector<bool> used(h + 1, false);
    BitNode cur;
    auto rec = [&](auto&& self, std::size_t budget, unsigned depth) -> void {
        out.push_back(cur);
        if (!cur.is_root() && cur.back().colour == kBottom) return;
        for (const auto& w : labels_up_to(budget)) {
            for (unsigned c = 1; c <= h; ++c) {
                if (used[c]) continue;
                used[c] = true;
                cur.push_back({w, static_cast<Colour>(c)});
                self(self, budget - w.size(), depth + 1);
                cur.pop_back();
                used[c] = false;
            }
            if (depth == h && w.size() != budget) continue;
            cur.push_back({w, kBottom});
            out.push_back(cur);
            cur.pop_back();
        }
    };
    rec(rec, ell, 0);
    std::sort(out.begin(), out.end(), [](const BitNode& a, const BitNode& b) { return order_key(a) < order_key(b); });
    return out;
}

/// Rabin condition on an infinity set.
inline bool rabin_on(const RabinGame& g, const std::vector<VertexId>& inf)
{
    for (unsigned c = 0; c < g.colours; ++c) {
        bool good = false, bad = false;
        for (VertexId v : inf) {
            good = good || g.vertices[v].good.contains(static_cast<Colour>(c));
            bad = bad || g.vertices[v].bad.contains(static_cast<Colour>(c));
        }
        if (good && !bad) return true;
    }
    return false;
}

/// Vertex sets of all simple cycles, each cycle reported once from its
/// smallest vertex.
inline std::vector<std::vector<VertexId>> simple_cycles(const RabinGame& g)
{
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> path;
    std::vector<bool> on(g.size(), false);
    auto rec = [&](auto&& self, VertexId start, VertexId v) -> void {
        for (VertexId w : g.vertices[v].succs) {
            if (w == start) {
                auto s = path;
                std::sort(s.begin(), s.end());
                out.push_back(s);
            } else if (w > start && !on[w]) {
                on[w] = true;
                path.push_back(w);
                self(self, start, w);
                path.pop_back();
                on[w] = false;
            }
        }
    };
    for (VertexId s = 0; s < g.size(); ++s) {
        path = {s};
        on.assign(g.size(), false);
        on[s] = true;
        rec(rec, s, s);
    }
    return out;
}

/// True when the subgraph on `s` is strongly connected and has an edge.
inline bool strongly_connected_set(const RabinGame& g, const std::vector<VertexId>& s)
{
    std::vector<bool> in(g.size(), false);
    for (VertexId v : s) in[v] = true;
    auto reach = [&](VertexId from, bool forward) {
        std::vector<bool> seen(g.size(), false);
        std::vector<VertexId> stack{from};
        seen[from] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u = 0; u < g.size(); ++u) {
                if (!in[u] || seen[u]) continue;
                const auto& e = forward ? g.vertices[v].succs : g.vertices[u].succs;
                if (std::find(e.begin(), e.end(), forward ? u : v) != e.end()) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        return seen;
    };
    auto f = reach(s.front(), true), b = reach(s.front(), false);
    for (VertexId v : s)
        if (!f[v] || !b[v]) return false;
    for (VertexId v : s)
        for (VertexId w : g.vertices[v].succs)
            if (in[w]) return true;
    return false;
}

/// Whether some infinite path of the one-player graph violates the Rabin
/// condition: some strongly connected vertex set fails it. Exponential.
inline bool some_path_violates(const RabinGame& g)
{
    for (std::uint32_t m = 1; m < (1u << g.size()); ++m) {
        std::vector<VertexId> s;
        for (VertexId v = 0; v < g.size(); ++v)
            if (m >> v & 1u) s.push_back(v);
        if (strongly_connected_set(g, s) && !rabin_on(g, s)) return true;
    }
    return false;
}

inline RabinGame random_small_game(std::uint64_t seed, unsigned max_n, unsigned max_k, unsigned max_degree = 3,
                                   double p_controller = 0.5)
{
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 1);
    GeneratorParams p;
    p.n = 1 + static_cast<unsigned>(rng() % max_n);
    p.colours = 1 + static_cast<unsigned>(rng() % max_k);
    p.max_degree = std::min(max_degree, p.n);
    p.p_good = 0.15 + 0.35 * static_cast<double>(rng() % 100) / 100.0;
    p.p_bad = 0.1 + 0.3 * static_cast<double>(rng() % 100) / 100.0;
    p.p_controller = p_controller;
    p.seed = rng();
    return random_game(p);
}

inline RabinGame random_one_player(std::uint64_t seed, unsigned max_n, unsigned max_k)
{
    return random_small_game(seed, max_n, max_k, 3, 0.0);
}

/// Random parity arena encoded as a Rabin game.
inline RabinGame random_parity_game(std::uint64_t seed, unsigned max_n, unsigned max_priority)
{
    std::mt19937_64 rng(seed ^ 0xC0FFEEull);
    const unsigned n = 1 + static_cast<unsigned>(rng() % max_n);
    std::vector<unsigned> pr(n);
    std::vector<Owner> owners(n);
    std::vector<std::vector<VertexId>> succs(n);
    for (unsigned v = 0; v < n; ++v) {
        pr[v] = static_cast<unsigned>(rng() % (max_priority + 1));
        owners[v] = rng() % 2 ? Owner::Controller : Owner::Environment;
        const unsigned d = 1 + static_cast<unsigned>(rng() % std::min(3u, n));
        while (succs[v].size() < d) {
            auto w = static_cast<VertexId>(rng() % n);
            if (std::find(succs[v].begin(), succs[v].end(), w) == succs[v].end()) succs[v].push_back(w);
        }
        std::sort(succs[v].begin(), succs[v].end());
    }
    return parity_to_rabin(pr, succs, owners, max_priority);
}

/// Random (c0,C)-colourful tree with at most `max_leaves` leaves over the
/// colours in `available`.
inline ExplicitTree random_explicit_tree(std::mt19937_64& rng, std::size_t max_leaves, ColourSet available,
                                         Colour root = kRootColour)
{
    ExplicitTree t{root, {}};
    std::size_t budget = max_leaves;
    const std::size_t width = 1 + rng() % std::max<std::size_t>(1, std::min<std::size_t>(budget, 4));
    for (std::size_t i = 0; i < width && budget > 0; ++i) {
        auto colours = available.members();
        if (colours.empty() || rng() % 3 == 0) {
            t.children.push_back(ExplicitTree::bottom());
            --budget;
            continue;
        }
        Colour c = colours[rng() % colours.size()];
        ColourSet below = available;
        below.erase(c);
        std::size_t share = 1 + rng() % budget;
        ExplicitTree child = random_explicit_tree(rng, share, below, c);
        budget -= std::min(budget, child.leaves());
        t.children.push_back(std::move(child));
    }
    if (t.children.empty()) t.children.push_back(ExplicitTree::bottom());
    return t;
}

/// Uniform node of a small tree, or ⊤ with probability `p_top`.
inline BitValue random_value(std::mt19937_64& rng, const std::vector<BitNode>& nodes, double p_top = 0.1)
{
    if (std::uniform_real_distribution<double>(0, 1)(rng) < p_top) return BitValue::top();
    return nodes[rng() % nodes.size()];
}

} // namespace rabin::testing
