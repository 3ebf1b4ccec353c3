#pragma once
// oracle.hpp - ground truth for small instances: colourful decompositions
// of one-player graphs, the decomposition-to-measure translation, the
// all-paths-Rabin decision and a strategy-enumeration solver.
//
// A one-player graph is a RabinGame whose owners are ignored, restricted
// to a vertex domain given as a mask.

#include <rabin/measure.hpp>
#include <rabin/solver.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rabin {

using Mask = std::vector<bool>;
using VertexList = std::vector<VertexId>;

inline Mask full_mask(const RabinGame& g) { return Mask(g.size(), true); }

inline Mask to_mask(std::size_t n, const VertexList& vs)
{
    Mask m(n, false);
    for (VertexId v : vs) m[v] = true;
    return m;
}

inline VertexList to_list(const Mask& m)
{
    VertexList out;
    for (VertexId v = 0; v < m.size(); ++v)
        if (m[v]) out.push_back(v);
    return out;
}

inline Mask mask_minus(Mask a, const Mask& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && !b[i];
    return a;
}

inline bool mask_empty(const Mask& m) { return std::none_of(m.begin(), m.end(), [](bool b) { return b; }); }

/// Vertices of `domain` from which every infinite path inside `domain`
/// visits `targets`: the complement of the largest target-free subset in
/// which every vertex keeps a successor.
inline Mask inevitable_reach(const RabinGame& g, const Mask& domain, const Mask& targets)
{
    Mask avoid(g.size(), false);
    for (VertexId v = 0; v < g.size(); ++v) avoid[v] = domain[v] && !targets[v];
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexId v = 0; v < g.size(); ++v) {
            if (!avoid[v]) continue;
            const auto& s = g.vertices[v].succs;
            if (std::none_of(s.begin(), s.end(), [&](VertexId w) { return avoid[w]; })) {
                avoid[v] = false;
                changed = true;
            }
        }
    }
    return mask_minus(domain, avoid);
}

/// Strongly connected components of the subgraph induced by `domain`,
/// each sorted, in order of their smallest vertex.
inline std::vector<VertexList> sccs(const RabinGame& g, const Mask& domain)
{
    const std::size_t n = g.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<VertexList> out;
    std::size_t counter = 0;

    struct Frame {
        VertexId v;
        std::size_t next;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (!domain[root] || index[root] != unvisited) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succ = g.vertices[f.v].succs;
            if (f.next < succ.size()) {
                VertexId w = succ[f.next++];
                if (!domain[w]) continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const VertexId v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] != index[v]) continue;
            VertexList comp;
            VertexId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    }
    std::sort(out.begin(), out.end(), [](const VertexList& a, const VertexList& b) { return a.front() < b.front(); });
    return out;
}

/// SCCs with no edge leaving them inside `domain`.
inline std::vector<VertexList> bottom_sccs(const RabinGame& g, const Mask& domain)
{
    std::vector<VertexList> out;
    for (auto& c : sccs(g, domain)) {
        Mask in = to_mask(g.size(), c);
        bool bottom = true;
        for (VertexId v : c)
            for (VertexId w : g.vertices[v].succs)
                if (domain[w] && !in[w]) bottom = false;
        if (bottom) out.push_back(std::move(c));
    }
    return out;
}

/// Vertices of `domain` with a path inside `domain` to `targets`.
inline Mask backward_reach(const RabinGame& g, const Mask& domain, const Mask& targets)
{
    const auto pred = predecessors(g);
    Mask seen(g.size(), false);
    std::deque<VertexId> queue;
    for (VertexId v = 0; v < g.size(); ++v)
        if (domain[v] && targets[v]) {
            seen[v] = true;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : pred[v])
            if (domain[u] && !seen[u]) {
                seen[u] = true;
                queue.push_back(u);
            }
    }
    return seen;
}

// ---------------------------------------------------------------------------
// Violation witnesses

struct ViolationWitness {
    VertexList scc;  // strongly connected, at least one edge
    VertexList stem; // a path ending in the first vertex of `scc` it meets
};

/// Every colour is good nowhere in S or bad somewhere in S, and S is a
/// strongly connected set with an edge.
inline bool witness_valid(const RabinGame& g, const VertexList& s)
{
    if (s.empty()) return false;
    const Mask in = to_mask(g.size(), s);
    auto comps = sccs(g, in);
    if (comps.size() != 1) return false;
    bool has_edge = false;
    for (VertexId v : s)
        for (VertexId w : g.vertices[v].succs)
            if (in[w]) has_edge = true;
    if (!has_edge) return false;
    for (unsigned c = 0; c < g.colours; ++c) {
        bool good_somewhere = false, bad_somewhere = false;
        for (VertexId v : s) {
            good_somewhere = good_somewhere || g.vertices[v].good.contains(static_cast<Colour>(c));
            bad_somewhere = bad_somewhere || g.vertices[v].bad.contains(static_cast<Colour>(c));
        }
        if (good_somewhere && !bad_somewhere) return false;
    }
    return true;
}

/// Shortest path inside `domain` from `from` into `target`, or empty.
inline VertexList path_into(const RabinGame& g, const Mask& domain, VertexId from, const Mask& target)
{
    std::vector<std::optional<VertexId>> parent(g.size());
    Mask seen(g.size(), false);
    std::deque<VertexId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (target[v]) {
            VertexList path{v};
            while (parent[path.back()]) path.push_back(*parent[path.back()]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (VertexId w : g.vertices[v].succs)
            if (domain[w] && !seen[w]) {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Colourful decompositions

struct Component;

struct Decomposition {
    Colour root = kRootColour;
    ColourSet colours;     // colours still available below the root
    VertexList vertices;   // V
    VertexList attractor;  // A; all of V for a leaf
    std::vector<Component> components;

    bool leaf() const { return colours.empty(); }
};

struct Component {
    Colour colour = kBottom; // c_i
    VertexList part;         // V_i
    Decomposition sub;       // D_i
    VertexList reach;        // A_i
};

using DecompositionResult = std::variant<Decomposition, ViolationWitness>;

enum class ColourChoice { Smallest, Largest };

namespace detail {

inline Mask good_in(const RabinGame& g, const Mask& domain, Colour c)
{
    Mask m(g.size(), false);
    for (VertexId v = 0; v < g.size(); ++v) m[v] = domain[v] && g.vertices[v].good.contains(c);
    return m;
}

inline ViolationWitness bottom_witness(const RabinGame& g, const Mask& domain)
{
    auto bottoms = bottom_sccs(g, domain);
    if (bottoms.empty()) throw internal_error("no bottom component in a non-empty subgraph");
    return ViolationWitness{bottoms.front(), {}};
}

} // namespace detail

/// Builds a (root, colours)-colourful decomposition of the subgraph on
/// `domain`, or returns a bottom SCC at which no admissible colour exists.
inline DecompositionResult build_decomposition(const RabinGame& g, const Mask& domain, Colour root, ColourSet colours,
                                               ColourChoice choice = ColourChoice::Smallest)
{
    for (VertexId v = 0; v < g.size(); ++v) {
        if (!domain[v]) continue;
        if (g.vertices[v].bad.contains(root))
            throw std::invalid_argument("root colour is bad at vertex " + std::to_string(v));
        const auto& s = g.vertices[v].succs;
        if (std::none_of(s.begin(), s.end(), [&](VertexId w) { return domain[w]; }))
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no successor in the subgraph");
    }

    Decomposition d;
    d.root = root;
    d.colours = colours;
    d.vertices = to_list(domain);
    const Mask attractor = inevitable_reach(g, domain, detail::good_in(g, domain, root));
    d.attractor = to_list(attractor);
    Mask w = mask_minus(domain, attractor);

    if (colours.empty()) {
        if (!mask_empty(w)) return detail::bottom_witness(g, w);
        return d;
    }

    while (!mask_empty(w)) {
        VertexList s = bottom_sccs(g, w).front();
        ColourSet bad_any, good_any;
        for (VertexId v : s) {
            bad_any = bad_any | g.vertices[v].bad;
            good_any = good_any | g.vertices[v].good;
        }
        const ColourSet admissible = (colours & good_any) - bad_any;
        if (admissible.empty()) return ViolationWitness{s, {}};
        const auto c = static_cast<Colour>(choice == ColourChoice::Smallest ? admissible.min() : admissible.max());

        const Mask part = to_mask(g.size(), s);
        ColourSet rest = colours;
        rest.erase(c);
        auto sub = build_decomposition(g, part, c, rest, choice);
        if (auto* wit = std::get_if<ViolationWitness>(&sub)) return std::move(*wit);

        const Mask reach = inevitable_reach(g, w, part);
        d.components.push_back(Component{c, s, std::move(std::get<Decomposition>(sub)), to_list(reach)});
        w = mask_minus(w, reach);
    }
    return d;
}

inline DecompositionResult build_decomposition(const RabinGame& g, ColourChoice choice = ColourChoice::Smallest)
{
    return build_decomposition(g, full_mask(g), kRootColour, ColourSet::range(1, static_cast<Colour>(g.colours)),
                               choice);
}

/// Checks every defining condition of a decomposition, recursively.
inline bool verify_decomposition(const RabinGame& g, const Decomposition& d)
{
    const Mask domain = to_mask(g.size(), d.vertices);
    for (VertexId v : d.vertices)
        if (g.vertices[v].bad.contains(d.root)) return false;
    const Mask attractor = inevitable_reach(g, domain, detail::good_in(g, domain, d.root));
    if (to_list(attractor) != d.attractor) return false;
    if (d.leaf()) return d.components.empty() && d.attractor == d.vertices;

    Mask w = mask_minus(domain, attractor);
    for (const auto& comp : d.components) {
        if (!d.colours.contains(comp.colour) || comp.part.empty()) return false;
        const Mask part = to_mask(g.size(), comp.part);
        for (VertexId v : comp.part) {
            if (!w[v] || g.vertices[v].bad.contains(comp.colour)) return false;
            for (VertexId x : g.vertices[v].succs)
                if (w[x] && !part[x]) return false;
        }
        ColourSet rest = d.colours;
        rest.erase(comp.colour);
        if (comp.sub.root != comp.colour || comp.sub.colours != rest || comp.sub.vertices != comp.part) return false;
        if (!verify_decomposition(g, comp.sub)) return false;
        const Mask reach = inevitable_reach(g, w, part);
        if (to_list(reach) != comp.reach) return false;
        w = mask_minus(w, reach);
    }
    return mask_empty(w);
}

namespace detail {

// Longest path inside `domain` from each vertex to `targets` (0 on
// targets, 1 at a vertex with no successor in the domain).
inline std::vector<std::uint64_t> longest_to(const RabinGame& g, const Mask& domain, const Mask& targets,
                                             const Mask& which)
{
    constexpr std::uint64_t unknown = static_cast<std::uint64_t>(-1);
    std::vector<std::uint64_t> rank(g.size(), unknown);
    std::vector<bool> active(g.size(), false);
    std::function<std::uint64_t(VertexId)> visit = [&](VertexId v) -> std::uint64_t {
        if (targets[v]) return 0;
        if (rank[v] != unknown) return rank[v];
        if (active[v]) throw internal_error("cycle avoiding the target inside an inevitable-reach set");
        active[v] = true;
        std::uint64_t best = 0;
        for (VertexId w : g.vertices[v].succs)
            if (domain[w]) best = std::max(best, visit(w));
        active[v] = false;
        return rank[v] = best + 1;
    };
    for (VertexId v = 0; v < g.size(); ++v)
        if (which[v]) rank[v] = visit(v);
    return rank;
}

inline void assign_measure(const RabinGame& g, const Decomposition& d, const NatNode& prefix, NatMeasure& mu)
{
    const Mask domain = to_mask(g.size(), d.vertices);
    const Mask targets = good_in(g, domain, d.root);
    const Mask attractor = to_mask(g.size(), d.attractor);

    NatLabel offset = 0;
    auto layer = [&](const Mask& within, const Mask& goal, const Mask& members) {
        auto rank = longest_to(g, within, goal, mask_minus(members, goal));
        std::uint64_t top = 0;
        for (VertexId v = 0; v < g.size(); ++v) {
            if (!members[v] || goal[v]) continue;
            NatNode n = prefix;
            n.push_back({offset + rank[v], kBottom});
            mu[v] = n;
            top = std::max(top, rank[v]);
        }
        return top;
    };

    for (VertexId v : d.attractor)
        if (targets[v]) mu[v] = prefix;
    offset += layer(domain, targets, attractor) + 1;

    Mask w = mask_minus(domain, attractor);
    for (const auto& comp : d.components) {
        NatNode head = prefix;
        head.push_back({offset, comp.colour});
        assign_measure(g, comp.sub, head, mu);
        const Mask part = to_mask(g.size(), comp.part);
        const Mask reach = to_mask(g.size(), comp.reach);
        offset += layer(w, part, reach) + 1;
        w = mask_minus(w, reach);
    }
}

} // namespace detail

/// ℕ-labelled measure read off a valid decomposition. Vertices outside the
/// decomposition are mapped to ⊤; none inside are.
inline NatMeasure decomposition_to_measure(const RabinGame& g, const Decomposition& d)
{
    NatMeasure mu(g.size(), NatValue::top());
    detail::assign_measure(g, d, NatNode::root(), mu);
    return mu;
}

// ---------------------------------------------------------------------------
// One-player decision and brute force

struct RabinCheck {
    std::optional<ViolationWitness> witness;
    bool holds() const { return !witness.has_value(); }
};

/// Whether every infinite path inside `domain` satisfies the Rabin
/// condition. A returned witness has been checked directly and carries a
/// stem from the smallest vertex that reaches it.
inline RabinCheck all_paths_rabin(const RabinGame& g, const Mask& domain)
{
    if (mask_empty(domain)) return {};
    auto r = build_decomposition(g, domain, kRootColour, ColourSet::range(1, static_cast<Colour>(g.colours)));
    auto* wit = std::get_if<ViolationWitness>(&r);
    if (!wit) return {};
    if (!witness_valid(g, wit->scc)) throw internal_error("decomposition produced an invalid witness");
    const Mask s = to_mask(g.size(), wit->scc);
    const Mask reaching = backward_reach(g, domain, s);
    for (VertexId v = 0; v < g.size(); ++v)
        if (reaching[v]) {
            wit->stem = path_into(g, domain, v, s);
            break;
        }
    return RabinCheck{std::move(*wit)};
}

inline RabinCheck all_paths_rabin(const RabinGame& g) { return all_paths_rabin(g, full_mask(g)); }

/// The one-player graph left when Controller follows `sigma`; vertices
/// without a choice keep all their edges. Every vertex becomes Environment.
inline RabinGame restrict_to_strategy(const RabinGame& g, const Strategy& sigma)
{
    RabinGame out = g;
    for (VertexId v = 0; v < out.size(); ++v) {
        auto& vx = out.vertices[v];
        if (vx.owner == Owner::Controller) {
            if (auto it = sigma.find(v); it != sigma.end()) vx.succs = {it->second};
        }
        vx.owner = Owner::Environment;
    }
    return out;
}

/// Vertices of a one-player graph from which every path satisfies the
/// Rabin condition: strip whatever reaches a violating SCC until none is left.
inline Mask rabin_safe_region(const RabinGame& graph)
{
    Mask residual = full_mask(graph);
    for (;;) {
        auto check = all_paths_rabin(graph, residual);
        if (check.holds()) return residual;
        residual = mask_minus(residual, backward_reach(graph, residual, to_mask(graph.size(), check.witness->scc)));
    }
}

class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultStrategyBudget = 1'000'000;

/// Controller's winning region as the union, over all positional
/// strategies, of the vertices safe in the restricted graph.
inline VertexList brute_force_solve(const RabinGame& g, std::uint64_t budget = kDefaultStrategyBudget)
{
    VertexList controllers;
    std::uint64_t total = 1;
    for (VertexId v = 0; v < g.size(); ++v)
        if (g.vertices[v].owner == Owner::Controller) {
            controllers.push_back(v);
            total *= g.vertices[v].succs.size();
            if (total > budget)
                throw budget_exceeded("more than " + std::to_string(budget) + " positional strategies");
        }

    Mask region(g.size(), false);
    std::vector<std::size_t> choice(controllers.size(), 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        Strategy sigma;
        for (std::size_t j = 0; j < controllers.size(); ++j)
            sigma[controllers[j]] = g.vertices[controllers[j]].succs[choice[j]];
        const Mask safe = rabin_safe_region(restrict_to_strategy(g, sigma));
        for (VertexId v = 0; v < g.size(); ++v) region[v] = region[v] || safe[v];
        if (std::all_of(region.begin(), region.end(), [](bool b) { return b; })) break;
        for (std::size_t j = 0; j < controllers.size(); ++j) {
            if (++choice[j] < g.vertices[controllers[j]].succs.size()) break;
            choice[j] = 0;
        }
    }
    return to_list(region);
}

} // namespace rabin
