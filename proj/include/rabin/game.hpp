#pragma once
// game.hpp - colourful Rabin games: data model, validation, text format,
// random generation and the parity encoding.

#include <rabin/colour.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rabin {

using VertexId = std::uint32_t;

enum class Owner : std::uint8_t { Controller, Environment };

inline Owner opponent(Owner o)
{
    return o == Owner::Controller ? Owner::Environment : Owner::Controller;
}

struct Vertex {
    Owner owner = Owner::Controller;
    ColourSet good;
    ColourSet bad;
    std::vector<VertexId> succs;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A game over colours {0..colours-1}; colour 0 is c0. Vertex ids are
/// indices into `vertices`. A game with every vertex owned by Environment
/// is a plain Rabin graph (every edge must be respected).
struct RabinGame {
    unsigned colours = 1;
    std::vector<Vertex> vertices;
    std::optional<VertexId> start;

    std::size_t size() const { return vertices.size(); }
    std::size_t edge_count() const
    {
        std::size_t m = 0;
        for (const auto& v : vertices) m += v.succs.size();
        return m;
    }
    // ordinary colours c1..ch
    ColourSet ordinary_colours() const { return ColourSet::range(1, static_cast<Colour>(colours)); }

    friend bool operator==(const RabinGame&, const RabinGame&) = default;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class infeasible_parameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::vector<std::string> validate(const RabinGame& g)
{
    std::vector<std::string> out;
    if (g.colours < 1 || g.colours > kMaxColours)
        out.push_back("colour count " + std::to_string(g.colours) + " outside 1.." + std::to_string(kMaxColours));
    if (g.vertices.empty()) out.push_back("game has no vertices");
    const ColourSet all = ColourSet::range(0, static_cast<Colour>(std::min(g.colours, kMaxColours)));
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        const std::string who = "vertex " + std::to_string(i) + ": ";
        if (v.succs.empty()) out.push_back(who + "no outgoing edge");
        if (v.bad.contains(kRootColour)) out.push_back(who + "c0 in bad set");
        if (!v.good.subset_of(all)) out.push_back(who + "good colour out of range");
        if (!v.bad.subset_of(all)) out.push_back(who + "bad colour out of range");
        std::vector<VertexId> seen;
        for (VertexId s : v.succs) {
            if (s >= g.vertices.size()) out.push_back(who + "successor " + std::to_string(s) + " out of range");
            if (std::find(seen.begin(), seen.end(), s) != seen.end())
                out.push_back(who + "duplicate successor " + std::to_string(s));
            seen.push_back(s);
        }
    }
    if (g.start && *g.start >= g.vertices.size())
        out.push_back("start vertex " + std::to_string(*g.start) + " out of range");
    return out;
}

/// Flips every owner. Controller wins the Streett game at v iff v is not in
/// Controller's Rabin winning region of the result.
inline RabinGame dualize_for_streett(RabinGame g)
{
    for (auto& v : g.vertices) v.owner = opponent(v.owner);
    return g;
}

// ---------------------------------------------------------------------------
// Text format

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline unsigned long parse_nat(std::string_view tok, std::size_t line, const char* what)
{
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw parse_error(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
    try {
        return std::stoul(std::string(tok));
    } catch (const std::out_of_range&) {
        throw parse_error(line, std::string(what) + " too large");
    }
}

inline std::vector<unsigned long> parse_list(std::string_view tok, std::size_t line, const char* what, bool allow_empty)
{
    std::vector<unsigned long> out;
    if (tok == "-") {
        if (!allow_empty) throw parse_error(line, std::string("empty ") + what + " list");
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        auto comma = tok.find(',', pos);
        out.push_back(parse_nat(tok.substr(pos, comma - pos), line, what));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::string render_set(ColourSet s)
{
    auto ms = s.members();
    if (ms.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(unsigned{ms[i]});
    }
    return out;
}

} // namespace detail

/// Parses `rabin <n> <k>` followed by one line per vertex
/// `<id> <C|E> G <list|-> B <list|-> -> <succ,...>` and an optional
/// `start <id>`. Lines starting with '%' are comments.
inline RabinGame parse_game(std::string_view text)
{
    using detail::parse_nat;
    RabinGame g;
    std::vector<bool> defined;
    bool have_header = false;
    std::size_t header_line = 0;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '%') continue;

        if (!have_header) {
            if (toks.size() != 3 || toks[0] != "rabin") throw parse_error(lineno, "expected header 'rabin <n> <k>'");
            auto n = parse_nat(toks[1], lineno, "vertex count");
            auto k = parse_nat(toks[2], lineno, "colour count");
            if (n < 1) throw parse_error(lineno, "vertex count must be at least 1");
            if (k < 1 || k > kMaxColours)
                throw parse_error(lineno, "colour count must be in 1.." + std::to_string(kMaxColours));
            g.colours = static_cast<unsigned>(k);
            g.vertices.resize(n);
            defined.assign(n, false);
            have_header = true;
            header_line = lineno;
            continue;
        }
        if (toks[0] == "start") {
            if (toks.size() != 2) throw parse_error(lineno, "expected 'start <id>'");
            auto s = parse_nat(toks[1], lineno, "vertex id");
            if (s >= g.vertices.size()) throw parse_error(lineno, "start vertex out of range");
            if (g.start) throw parse_error(lineno, "duplicate start line");
            g.start = static_cast<VertexId>(s);
            continue;
        }
        if (g.start) throw parse_error(lineno, "vertex line after start line");
        if (toks.size() != 8 || toks[2] != "G" || toks[4] != "B" || toks[6] != "->")
            throw parse_error(lineno, "expected '<id> <C|E> G <colours> B <colours> -> <succs>'");
        auto id = parse_nat(toks[0], lineno, "vertex id");
        if (id >= g.vertices.size()) throw parse_error(lineno, "vertex id " + toks[0] + " out of range");
        if (defined[id]) throw parse_error(lineno, "vertex " + toks[0] + " defined twice");
        defined[id] = true;
        Vertex& v = g.vertices[id];
        if (toks[1] == "C")
            v.owner = Owner::Controller;
        else if (toks[1] == "E")
            v.owner = Owner::Environment;
        else
            throw parse_error(lineno, "owner must be C or E");
        for (auto c : detail::parse_list(toks[3], lineno, "colour", true)) {
            if (c >= g.colours) throw parse_error(lineno, "good colour " + std::to_string(c) + " out of range");
            v.good.insert(static_cast<Colour>(c));
        }
        for (auto c : detail::parse_list(toks[5], lineno, "colour", true)) {
            if (c >= g.colours) throw parse_error(lineno, "bad colour " + std::to_string(c) + " out of range");
            if (c == kRootColour) throw parse_error(lineno, "c0 in bad set");
            v.bad.insert(static_cast<Colour>(c));
        }
        for (auto s : detail::parse_list(toks[7], lineno, "successor", false)) {
            if (s >= g.vertices.size()) throw parse_error(lineno, "successor " + std::to_string(s) + " out of range");
            if (std::find(v.succs.begin(), v.succs.end(), s) != v.succs.end())
                throw parse_error(lineno, "duplicate successor " + std::to_string(s));
            v.succs.push_back(static_cast<VertexId>(s));
        }
    }
    if (!have_header) throw parse_error(lineno, "missing header");
    for (std::size_t i = 0; i < defined.size(); ++i)
        if (!defined[i]) throw parse_error(header_line, "vertex " + std::to_string(i) + " never defined");
    return g;
}

inline std::string serialize_game(const RabinGame& g)
{
    std::string out = "rabin " + std::to_string(g.size()) + " " + std::to_string(g.colours) + "\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertices[i];
        out += std::to_string(i);
        out += v.owner == Owner::Controller ? " C G " : " E G ";
        out += detail::render_set(v.good) + " B " + detail::render_set(v.bad) + " -> ";
        for (std::size_t j = 0; j < v.succs.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(v.succs[j]);
        }
        out += '\n';
    }
    if (g.start) out += "start " + std::to_string(*g.start) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Generators

struct GeneratorParams {
    unsigned n = 4;
    unsigned colours = 2;
    unsigned min_degree = 1;
    unsigned max_degree = 2;
    double p_good = 0.3;
    double p_bad = 0.2;
    double p_controller = 0.5;
    std::uint64_t seed = 0;
};

namespace detail {

// std distributions differ between standard libraries; these do not.
struct PortableRng {
    std::mt19937_64 engine;
    explicit PortableRng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t below(std::uint64_t bound) { return engine() % bound; }
    double unit() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
};

} // namespace detail

inline RabinGame random_game(const GeneratorParams& p)
{
    if (p.n < 1) throw infeasible_parameters("n must be at least 1");
    if (p.colours < 1 || p.colours > kMaxColours) throw infeasible_parameters("colour count out of range");
    if (p.min_degree < 1 || p.min_degree > p.max_degree) throw infeasible_parameters("degree range must satisfy 1 <= min <= max");
    if (p.max_degree > p.n) throw infeasible_parameters("max degree exceeds vertex count");
    for (double q : {p.p_good, p.p_bad, p.p_controller})
        if (!(q >= 0.0 && q <= 1.0)) throw infeasible_parameters("probabilities must lie in [0,1]");

    detail::PortableRng rng(p.seed);
    RabinGame g;
    g.colours = p.colours;
    g.vertices.resize(p.n);
    std::vector<VertexId> pool(p.n);
    for (auto& v : g.vertices) {
        v.owner = rng.chance(p.p_controller) ? Owner::Controller : Owner::Environment;
        for (unsigned c = 0; c < p.colours; ++c) {
            if (rng.chance(p.p_good)) v.good.insert(static_cast<Colour>(c));
            if (c != kRootColour && rng.chance(p.p_bad)) v.bad.insert(static_cast<Colour>(c));
        }
        auto degree = p.min_degree + static_cast<unsigned>(rng.below(p.max_degree - p.min_degree + 1));
        for (unsigned i = 0; i < p.n; ++i) pool[i] = i;
        for (unsigned i = 0; i < degree; ++i) {
            auto j = i + static_cast<unsigned>(rng.below(p.n - i));
            std::swap(pool[i], pool[j]);
            v.succs.push_back(pool[i]);
        }
        std::sort(v.succs.begin(), v.succs.end());
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.vertices[i].succs.empty()) g.vertices[i].succs.push_back(static_cast<VertexId>(i));
    return g;
}

/// Max-parity encoding: Controller wins iff the largest priority seen
/// infinitely often is even. With priorities in 0..max_priority and
/// h = ceil(max_priority/2), colour c_i (i = 1..h+1) is good at priority
/// 2(i-1) and bad at every priority above it.
inline RabinGame parity_to_rabin(const std::vector<unsigned>& priorities,
                                 const std::vector<std::vector<VertexId>>& succs,
                                 const std::vector<Owner>& owners,
                                 unsigned max_priority)
{
    if (priorities.size() != succs.size() || priorities.size() != owners.size())
        throw std::invalid_argument("priority, successor and owner lists differ in length");
    const unsigned h = (max_priority + 1) / 2;
    if (h + 2 > kMaxColours) throw std::invalid_argument("too many priorities");
    RabinGame g;
    g.colours = h + 2;
    g.vertices.resize(priorities.size());
    for (std::size_t v = 0; v < priorities.size(); ++v) {
        const unsigned pr = priorities[v];
        if (pr > max_priority)
            throw std::invalid_argument("priority " + std::to_string(pr) + " of vertex " + std::to_string(v) +
                                        " exceeds declared maximum " + std::to_string(max_priority));
        auto& out = g.vertices[v];
        out.owner = owners[v];
        out.succs = succs[v];
        for (unsigned i = 1; i <= h + 1; ++i) {
            const unsigned even = 2 * (i - 1);
            if (pr == even) out.good.insert(static_cast<Colour>(i));
            if (pr > even) out.bad.insert(static_cast<Colour>(i));
        }
    }
    return g;
}

inline RabinGame parity_to_rabin(const std::vector<unsigned>& priorities,
                                 const std::vector<std::vector<VertexId>>& succs,
                                 const std::vector<Owner>& owners)
{
    unsigned top = priorities.empty() ? 0 : *std::max_element(priorities.begin(), priorities.end());
    return parity_to_rabin(priorities, succs, owners, top);
}

/// A parity game as read from a PGSolver file.
struct ParityGame {
    std::vector<unsigned> priorities;
    std::vector<Owner> owners;
    std::vector<std::vector<VertexId>> succs;
    std::optional<VertexId> start;

    RabinGame to_rabin() const
    {
        RabinGame g = parity_to_rabin(priorities, succs, owners);
        g.start = start;
        return g;
    }
};

/// PGSolver format: `parity <max id>;`, optional `start <id>;`, then
/// `<id> <priority> <owner> <succ,...> ["name"];`. Owner 0 is Controller.
inline ParityGame parse_pgsolver(std::string_view text)
{
    using detail::parse_nat;
    ParityGame pg;
    std::vector<bool> defined;
    bool have_header = false;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (auto q = line.find('"'); q != std::string::npos) line.erase(q, line.rfind('"') - q + 1);
        if (auto semi = line.find(';'); semi != std::string::npos) line.erase(semi);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "parity") throw parse_error(lineno, "expected 'parity <max id>;'");
            auto n = parse_nat(toks[1], lineno, "vertex id") + 1;
            pg.priorities.assign(n, 0);
            pg.owners.assign(n, Owner::Controller);
            pg.succs.assign(n, {});
            defined.assign(n, false);
            have_header = true;
            continue;
        }
        if (toks[0] == "start") {
            if (toks.size() != 2) throw parse_error(lineno, "expected 'start <id>;'");
            auto s = parse_nat(toks[1], lineno, "vertex id");
            if (s >= defined.size()) throw parse_error(lineno, "start vertex out of range");
            pg.start = static_cast<VertexId>(s);
            continue;
        }
        if (toks.size() != 4) throw parse_error(lineno, "expected '<id> <priority> <owner> <succs>;'");
        auto id = parse_nat(toks[0], lineno, "vertex id");
        if (id >= defined.size()) throw parse_error(lineno, "vertex id out of range");
        if (defined[id]) throw parse_error(lineno, "vertex defined twice");
        defined[id] = true;
        pg.priorities[id] = static_cast<unsigned>(parse_nat(toks[1], lineno, "priority"));
        auto owner = parse_nat(toks[2], lineno, "owner");
        if (owner > 1) throw parse_error(lineno, "owner must be 0 or 1");
        pg.owners[id] = owner == 0 ? Owner::Controller : Owner::Environment;
        for (auto s : detail::parse_list(toks[3], lineno, "successor", false)) {
            if (s >= defined.size()) throw parse_error(lineno, "successor out of range");
            if (std::find(pg.succs[id].begin(), pg.succs[id].end(), s) == pg.succs[id].end())
                pg.succs[id].push_back(static_cast<VertexId>(s));
        }
    }
    if (!have_header) throw parse_error(lineno, "missing header");
    for (std::size_t i = 0; i < defined.size(); ++i)
        if (!defined[i]) throw parse_error(lineno, "vertex " + std::to_string(i) + " never defined");
    return pg;
}

} // namespace rabin
