#pragma once
// bench.hpp - one CSV row per solved game.

#include <rabin/game.hpp>
#include <rabin/solver.hpp>
#include <rabin/succinct_tree.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace rabin {

struct BenchRow {
    std::string name;
    std::size_t n = 0;
    std::size_t m = 0;
    unsigned k = 0;
    std::size_t ell = 0;
    std::uint64_t lifts = 0;
    std::uint64_t nodes_visited = 0;
    double wall_ms = 0;
    std::size_t region_size = 0;

    /// n times the node count of the tree the solver ran on.
    BigInt lift_bound() const { return BigInt(n) * node_count(ell, k - 1); }
    bool within_bound() const { return BigInt(lifts) <= lift_bound(); }
};

inline constexpr const char* kBenchHeader = "name,n,m,k,ell,lifts,nodes_visited,wall_ms,region_size";

inline std::string csv_row(const BenchRow& r)
{
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    return r.name + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," + std::to_string(r.k) + "," +
           std::to_string(r.ell) + "," + std::to_string(r.lifts) + "," + std::to_string(r.nodes_visited) + "," + ms +
           "," + std::to_string(r.region_size);
}

inline BenchRow bench_game(const std::string& name, const RabinGame& g)
{
    auto t0 = std::chrono::steady_clock::now();
    SolveResult r = solve(g);
    auto t1 = std::chrono::steady_clock::now();

    BenchRow row;
    row.name = name;
    row.n = g.size();
    row.m = g.edge_count();
    row.k = g.colours;
    row.ell = r.params.bits;
    row.lifts = r.stats.lifts;
    row.nodes_visited = r.stats.navigations;
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.region_size = r.region.size();
    return row;
}

/// Games for a generator sweep over vertex counts, named `sweep_n<n>_k<k>_s<seed>`.
inline std::vector<std::pair<std::string, RabinGame>> sweep_games(const std::vector<unsigned>& ns, unsigned k,
                                                                  std::uint64_t seed)
{
    std::vector<std::pair<std::string, RabinGame>> out;
    for (unsigned n : ns) {
        GeneratorParams p;
        p.n = n;
        p.colours = k;
        p.min_degree = 1;
        p.max_degree = std::min(3u, n);
        p.seed = seed;
        out.emplace_back("sweep_n" + std::to_string(n) + "_k" + std::to_string(k) + "_s" + std::to_string(seed),
                         random_game(p));
    }
    return out;
}

} // namespace rabin
