#pragma once
// solver.hpp - least simultaneous fixpoint of the Lift operators from the
// all-root measure, winning region and positional strategy extraction.

#include <rabin/measure.hpp>

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

namespace rabin {

using Strategy = std::map<VertexId, VertexId>;

struct SolveStats {
    std::uint64_t lifts = 0;        // strict increases of some μ(v)
    std::uint64_t evaluations = 0;  // Lift_v applications
    std::uint64_t navigations = 0;  // tree successor queries
};

struct SolveResult {
    TreeParams params;
    BitMeasure measure;
    std::vector<VertexId> region; // vertices not at ⊤, ascending
    Strategy strategy;
    SolveStats stats;

    bool wins(VertexId v) const { return !measure[v].is_top(); }
};

class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// For each Controller vertex off ⊤, its smallest-id successor along a
/// consistent edge.
template <TreeLabel Label>
Strategy extract_strategy(const RabinGame& g, const Measure<Label>& mu)
{
    Strategy s;
    for (VertexId v = 0; v < g.size(); ++v) {
        const auto& vx = g.vertices[v];
        if (vx.owner != Owner::Controller || mu[v].is_top()) continue;
        std::optional<VertexId> pick;
        for (VertexId w : vx.succs)
            if (edge_consistent(g, mu, v, w).consistent() && (!pick || w < *pick)) pick = w;
        if (!pick) throw internal_error("no consistent edge at winning Controller vertex " + std::to_string(v));
        s[v] = *pick;
    }
    return s;
}

inline std::vector<std::vector<VertexId>> predecessors(const RabinGame& g)
{
    std::vector<std::vector<VertexId>> pred(g.size());
    for (VertexId v = 0; v < g.size(); ++v)
        for (VertexId w : g.vertices[v].succs) pred[w].push_back(v);
    return pred;
}

/// Worklist lifting: FIFO queue seeded with every vertex; when μ(v) grows,
/// its predecessors are re-queued. Vertices at ⊤ are never revisited.
inline SolveResult solve(const RabinGame& g, std::optional<std::size_t> bits = std::nullopt)
{
    SolveResult r;
    r.params = TreeParams{bits.value_or(default_bits(g.size())), g.colours};
    r.measure.assign(g.size(), BitValue(BitNode::root()));

    const auto pred = predecessors(g);
    std::deque<VertexId> queue;
    std::vector<bool> queued(g.size(), true);
    for (VertexId v = 0; v < g.size(); ++v) queue.push_back(v);

    LiftStats nav;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        queued[v] = false;
        if (r.measure[v].is_top()) continue;
        ++r.stats.evaluations;
        BitValue lifted = lift_vertex(r.params, g, r.measure, v, &nav);
        if (!(lifted > r.measure[v])) continue;
        r.measure[v] = std::move(lifted);
        ++r.stats.lifts;
        for (VertexId u : pred[v])
            if (!queued[u] && !r.measure[u].is_top()) {
                queued[u] = true;
                queue.push_back(u);
            }
        // a self-loop or other edges of v may now be violated
        if (!queued[v] && !r.measure[v].is_top()) {
            queued[v] = true;
            queue.push_back(v);
        }
    }
    r.stats.navigations = nav.navigations;

    for (VertexId v = 0; v < g.size(); ++v)
        if (!r.measure[v].is_top()) r.region.push_back(v);
    r.strategy = extract_strategy(g, r.measure);
    return r;
}

/// Controller's Streett winning region: the complement of the Rabin region
/// of the owner-flipped game.
inline std::vector<VertexId> solve_streett_region(const RabinGame& g, std::optional<std::size_t> bits = std::nullopt)
{
    auto dual = solve(dualize_for_streett(g), bits);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.size(); ++v)
        if (!dual.wins(v)) out.push_back(v);
    return out;
}

} // namespace rabin
