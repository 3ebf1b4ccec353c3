#pragma once
// measure.hpp - Rabin measures: edge and vertex consistency, the per-edge
// lift and the per-vertex Lift operator over the universal tree.

#include <rabin/game.hpp>
#include <rabin/succinct_tree.hpp>
#include <rabin/tree.hpp>

#include <algorithm>
#include <vector>

namespace rabin {

template <TreeLabel Label>
using Measure = std::vector<MeasureValue<Label>>;

using BitMeasure = Measure<BitLabel>;
using NatMeasure = Measure<NatLabel>;

struct EdgeReport {
    bool decreases = false;  // G≻: μ(u) ≻ μ(v)
    bool descends = false;   // G↓: μ(u) is an ancestor of μ(v) and colour(μ(u)) ∈ G_u
    bool clean = false;      // B: ColourSet(μ(u)) ∩ B_u = ∅
    bool source_top = false;

    bool consistent() const { return source_top || ((decreases || descends) && clean); }
};

/// Consistency of u -> v when u sits at `at` and v at `target`.
template <TreeLabel Label>
EdgeReport edge_report(const Vertex& u, const MeasureValue<Label>& at, const MeasureValue<Label>& target)
{
    EdgeReport r;
    if (at.is_top()) {
        r.source_top = true;
        return r;
    }
    // against ⊤ nothing holds
    if (target.is_top()) return r;
    const auto& a = at.node();
    const auto& b = target.node();
    r.decreases = a > b;
    r.descends = is_ancestor(a, b) && u.good.contains(colour_of(a));
    r.clean = !colour_set(a).intersects(u.bad);
    return r;
}

template <TreeLabel Label>
EdgeReport edge_consistent(const RabinGame& g, const Measure<Label>& mu, VertexId u, VertexId v)
{
    return edge_report(g.vertices[u], mu[u], mu[v]);
}

/// Controller needs one consistent edge, Environment needs all of them.
template <TreeLabel Label>
bool vertex_consistent(const RabinGame& g, const Measure<Label>& mu, VertexId v)
{
    const auto& vx = g.vertices[v];
    auto ok = [&](VertexId w) { return edge_consistent(g, mu, v, w).consistent(); };
    if (vx.owner == Owner::Controller) return std::any_of(vx.succs.begin(), vx.succs.end(), ok);
    return std::all_of(vx.succs.begin(), vx.succs.end(), ok);
}

struct Verdict {
    bool ok = true;
    std::vector<VertexId> inconsistent;
};

/// Works for any label type, so measures built by the oracle (natural-number
/// labels) and solver output (bit labels) are checked the same way.
template <TreeLabel Label>
Verdict verify_measure(const RabinGame& g, const Measure<Label>& mu)
{
    Verdict out;
    for (VertexId v = 0; v < g.size(); ++v)
        if (!vertex_consistent(g, mu, v)) out.inconsistent.push_back(v);
    out.ok = out.inconsistent.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Lifting over the universal tree

struct LiftStats {
    std::uint64_t navigations = 0; // successor computations
};

/// Least t ⪰ μ(u) making u -> v consistent when u is moved to t (v keeps
/// its current value, also for a self-loop).
///
/// A candidate either descends to μ(v) (an ancestor of μ(v) with a good
/// colour) or lies strictly above μ(v); both must avoid B_u. The first
/// family is a short scan, the second is one restricted-successor query.
inline BitValue lift_edge(const TreeParams& p, const RabinGame& g, const BitMeasure& mu, VertexId u, VertexId v,
                          LiftStats* stats = nullptr)
{
    const BitValue& at = mu[u];
    const BitValue& target = mu[v];
    if (at.is_top() || target.is_top()) return BitValue::top();
    const Vertex& src = g.vertices[u];
    if (edge_report(src, at, target).consistent()) return at;

    const ColourSet allowed = p.ordinary() - src.bad;
    const BitNode& a = at.node();
    const BitNode& x = target.node();
    BitValue best = BitValue::top();

    // ancestors of μ(v), increasing: the first admissible one is least
    for (std::size_t d = 0; d <= x.depth(); ++d) {
        BitNode t = x.prefix(d);
        if (t < a) continue;
        if (!src.good.contains(colour_of(t))) continue;
        if (colour_set(t).intersects(src.bad)) continue;
        best = t;
        break;
    }

    if (stats) ++stats->navigations;
    BitValue above = a > x ? ceil_in_subset(p, a, allowed) : next_in_subset(p, x, allowed);
    return std::min(best, above);
}

/// Naive reference: walk ≺-successors from μ(u) until the edge is consistent.
inline BitValue lift_edge_naive(const TreeParams& p, const RabinGame& g, const BitMeasure& mu, VertexId u,
                                VertexId v)
{
    BitValue t = mu[u];
    while (!t.is_top()) {
        if (edge_report(g.vertices[u], t, mu[v]).consistent()) return t;
        t = next_node(p, t.node());
    }
    return t;
}

/// Lift_v(μ)(v): min over edges for Controller, max for Environment.
inline BitValue lift_vertex(const TreeParams& p, const RabinGame& g, const BitMeasure& mu, VertexId v,
                            LiftStats* stats = nullptr)
{
    const Vertex& vx = g.vertices[v];
    const bool controller = vx.owner == Owner::Controller;
    BitValue acc = controller ? BitValue::top() : mu[v];
    for (VertexId w : vx.succs) {
        BitValue l = lift_edge(p, g, mu, v, w, stats);
        if (controller) {
            if (l < acc) acc = std::move(l);
        } else {
            if (l > acc) acc = std::move(l);
            if (acc.is_top()) break;
        }
    }
    return acc;
}

} // namespace rabin
