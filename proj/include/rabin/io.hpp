#pragma once
// io.hpp - text formats for measures, strategies and winning regions.
//
//   measure:  `<id> <node>` per vertex, node as `(label·colour)...`, `()`
//             for the root, `TOP` for ⊤; labels are bit strings or `ε`
//   strategy: `<controller id> -> <successor id>` per line
//   region:   winning ids separated by single spaces on one line

#include <rabin/game.hpp>
#include <rabin/measure.hpp>
#include <rabin/solver.hpp>

#include <sstream>
#include <string>
#include <string_view>

namespace rabin {

inline std::string dump_measure(const BitMeasure& mu)
{
    std::string out;
    for (VertexId v = 0; v < mu.size(); ++v) out += std::to_string(v) + " " + render(mu[v]) + "\n";
    return out;
}

inline std::string dump_strategy(const Strategy& s)
{
    std::string out;
    for (const auto& [v, w] : s) out += std::to_string(v) + " -> " + std::to_string(w) + "\n";
    return out;
}

inline std::string render_region(const std::vector<VertexId>& region)
{
    std::string out;
    for (std::size_t i = 0; i < region.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(region[i]);
    }
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <class F>
void for_each_line(std::string_view text, F&& f)
{
    std::size_t line = 0;
    while (!text.empty()) {
        ++line;
        auto nl = text.find('\n');
        std::string_view l = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (l.empty() || l.front() == '%') continue;
        f(line, l);
    }
}

inline constexpr std::string_view kDot = "·";

} // namespace detail

/// Parses one rendered value; `colours` bounds the colour indices.
inline BitValue parse_value(std::string_view s, unsigned colours, std::size_t line = 0)
{
    if (s == "TOP") return BitValue::top();
    if (s == "()") return BitValue(BitNode::root());
    BitNode n;
    while (!s.empty()) {
        if (s.front() != '(') throw parse_error(line, "expected '(' in node");
        auto close = s.find(')');
        auto dot = s.find(detail::kDot);
        if (close == std::string_view::npos || dot == std::string_view::npos || dot > close)
            throw parse_error(line, "malformed node entry");
        std::string_view label = s.substr(1, dot - 1);
        std::string_view colour = s.substr(dot + detail::kDot.size(), close - dot - detail::kDot.size());
        BitLabel bits;
        if (label != "ε") {
            try {
                bits = BitLabel(label);
            } catch (const std::invalid_argument&) {
                throw parse_error(line, "bad label '" + std::string(label) + "'");
            }
        }
        Colour c = kBottom;
        if (colour != "BOT") {
            unsigned long x = detail::parse_nat(colour, line, "colour");
            if (x >= colours) throw parse_error(line, "colour " + std::string(colour) + " out of range");
            c = static_cast<Colour>(x);
        }
        n.push_back({bits, c});
        s.remove_prefix(close + 1);
    }
    if (!well_coloured(n, colours)) throw parse_error(line, "node is not well coloured");
    return n;
}

/// Reads a measure dump for a game with `n` vertices and `colours` colours;
/// every vertex must appear exactly once.
inline BitMeasure parse_measure(std::string_view text, std::size_t n, unsigned colours)
{
    BitMeasure mu(n);
    std::vector<bool> seen(n, false);
    detail::for_each_line(text, [&](std::size_t line, std::string_view l) {
        auto sp = l.find(' ');
        if (sp == std::string_view::npos) throw parse_error(line, "expected '<id> <value>'");
        unsigned long v = detail::parse_nat(l.substr(0, sp), line, "vertex id");
        if (v >= n) throw parse_error(line, "vertex " + std::to_string(v) + " out of range");
        if (seen[v]) throw parse_error(line, "vertex " + std::to_string(v) + " listed twice");
        seen[v] = true;
        mu[v] = parse_value(detail::trim(l.substr(sp + 1)), colours, line);
    });
    for (VertexId v = 0; v < n; ++v)
        if (!seen[v]) throw parse_error(0, "no value for vertex " + std::to_string(v));
    return mu;
}

inline Strategy parse_strategy(std::string_view text, const RabinGame& g)
{
    Strategy s;
    detail::for_each_line(text, [&](std::size_t line, std::string_view l) {
        auto toks = detail::split_ws(l);
        if (toks.size() != 3 || toks[1] != "->") throw parse_error(line, "expected '<id> -> <successor>'");
        unsigned long v = detail::parse_nat(toks[0], line, "vertex id");
        unsigned long w = detail::parse_nat(toks[2], line, "successor id");
        if (v >= g.size()) throw parse_error(line, "vertex " + toks[0] + " out of range");
        const auto& succ = g.vertices[v].succs;
        if (g.vertices[v].owner != Owner::Controller) throw parse_error(line, "vertex " + toks[0] + " is not Controller's");
        if (std::find(succ.begin(), succ.end(), w) == succ.end())
            throw parse_error(line, "no edge " + toks[0] + " -> " + toks[2]);
        if (!s.emplace(static_cast<VertexId>(v), static_cast<VertexId>(w)).second)
            throw parse_error(line, "vertex " + toks[0] + " listed twice");
    });
    return s;
}

} // namespace rabin
