#pragma once
// tree.hpp - nodes of labelled colourful trees, their order and ancestry,
// and measure values (a node or the top element).
//
// A node is the sequence of (label, colour) entries on the path from the
// root; the empty sequence is the root, whose colour is c0. Nodes are
// ordered with a strict prefix below its extensions and otherwise
// lexicographically, entries compared by label and then colour.

#include <rabin/bit_label.hpp>
#include <rabin/colour.hpp>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rabin {

template <class L>
concept TreeLabel = std::totally_ordered<L> && std::copyable<L>;

using NatLabel = std::uint64_t;

template <TreeLabel Label>
struct Entry {
    Label label{};
    Colour colour = kBottom;

    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry& a, const Entry& b)
    {
        if (auto c = a.label <=> b.label; c != 0) return c;
        return a.colour <=> b.colour;
    }
};

template <TreeLabel Label>
class Node {
public:
    using entry_type = Entry<Label>;

    Node() = default;
    Node(std::initializer_list<entry_type> es) : entries_(es) {}
    explicit Node(std::vector<entry_type> es) : entries_(std::move(es)) {}

    static Node root() { return Node{}; }

    bool is_root() const { return entries_.empty(); }
    std::size_t depth() const { return entries_.size(); }
    const std::vector<entry_type>& entries() const { return entries_; }
    const entry_type& operator[](std::size_t i) const { return entries_[i]; }
    const entry_type& back() const { return entries_.back(); }

    void push_back(entry_type e) { entries_.push_back(std::move(e)); }
    void pop_back() { entries_.pop_back(); }
    void truncate(std::size_t len) { entries_.resize(std::min(len, entries_.size())); }

    Node prefix(std::size_t len) const
    {
        return Node(std::vector<entry_type>(entries_.begin(), entries_.begin() + std::min(len, entries_.size())));
    }

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node& a, const Node& b)
    {
        return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                      b.entries_.end());
    }

private:
    std::vector<entry_type> entries_;
};

using NatNode = Node<NatLabel>;
using BitNode = Node<BitLabel>;

template <TreeLabel Label>
std::strong_ordering compare_nodes(const Node<Label>& a, const Node<Label>& b)
{
    auto c = a <=> b;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// Longest common prefix.
template <TreeLabel Label>
Node<Label> gca(const Node<Label>& a, const Node<Label>& b)
{
    std::size_t i = 0;
    while (i < a.depth() && i < b.depth() && a[i] == b[i]) ++i;
    return a.prefix(i);
}

/// True iff `a` is a (not necessarily strict) prefix of `b`.
template <TreeLabel Label>
bool is_ancestor(const Node<Label>& a, const Node<Label>& b)
{
    if (a.depth() > b.depth()) return false;
    return std::equal(a.entries().begin(), a.entries().end(), b.entries().begin());
}

template <TreeLabel Label>
Colour colour_of(const Node<Label>& n)
{
    return n.is_root() ? kRootColour : n.back().colour;
}

/// Colours seen from the root down to `n`, including c0, excluding ⊥.
template <TreeLabel Label>
ColourSet colour_set(const Node<Label>& n)
{
    ColourSet s{kRootColour};
    for (const auto& e : n.entries())
        if (e.colour != kBottom) s.insert(e.colour);
    return s;
}

/// Entry colours distinct, ⊥ only last, c0 absent, ordinary colours < `colours`.
template <TreeLabel Label>
bool well_coloured(const Node<Label>& n, unsigned colours)
{
    ColourSet seen;
    for (std::size_t i = 0; i < n.depth(); ++i) {
        Colour c = n[i].colour;
        if (c == kBottom) {
            if (i + 1 != n.depth()) return false;
            continue;
        }
        if (c == kRootColour || c >= colours || seen.contains(c)) return false;
        seen.insert(c);
    }
    return true;
}

/// A tree node or the top element ⊤, which lies above every node.
template <TreeLabel Label>
class MeasureValue {
public:
    MeasureValue() = default; // the root
    MeasureValue(Node<Label> n) : node_(std::move(n)) {}

    static MeasureValue top()
    {
        MeasureValue v;
        v.node_.reset();
        return v;
    }

    bool is_top() const { return !node_.has_value(); }
    const Node<Label>& node() const { return *node_; }

    friend bool operator==(const MeasureValue&, const MeasureValue&) = default;
    friend std::strong_ordering operator<=>(const MeasureValue& a, const MeasureValue& b)
    {
        if (a.is_top() || b.is_top()) return a.is_top() <=> b.is_top();
        return compare_nodes(*a.node_, *b.node_);
    }

private:
    std::optional<Node<Label>> node_{Node<Label>{}};
};

using BitValue = MeasureValue<BitLabel>;
using NatValue = MeasureValue<NatLabel>;

// ---------------------------------------------------------------------------
// Text rendering: `(label·colour)` per entry, `()` for the root, `TOP` for ⊤.

inline std::string render_label(NatLabel l) { return std::to_string(l); }
inline std::string render_label(const BitLabel& l) { return l.size() == 0 ? std::string("ε") : l.str(); }

template <TreeLabel Label>
std::string render(const Node<Label>& n)
{
    if (n.is_root()) return "()";
    std::string out;
    for (const auto& e : n.entries()) out += "(" + render_label(e.label) + "·" + colour_name(e.colour) + ")";
    return out;
}

template <TreeLabel Label>
std::string render(const MeasureValue<Label>& v)
{
    return v.is_top() ? std::string("TOP") : render(v.node());
}

} // namespace rabin
