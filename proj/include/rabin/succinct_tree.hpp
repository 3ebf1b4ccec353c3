#pragma once
// succinct_tree.hpp - the universal colourful tree U^ℓ over colours
// {c1..ch}, navigated through its bit-string labelling without ever
// being materialised.
//
// Nodes are exactly the bit-labelled sequences with distinct colours,
// ⊥ only last, and at most ℓ bits in total. A ⊥ entry placed after all h
// colours have been used (the colour-free subtree) carries exactly the
// remaining bit budget, so that subtree has 2^b leaves.

#include <rabin/bit_label.hpp>
#include <rabin/tree.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace rabin {

using BigInt = boost::multiprecision::cpp_int;

struct TreeParams {
    std::size_t bits = 0;   // ℓ
    unsigned colours = 1;   // k, including c0

    unsigned h() const { return colours - 1; }
    ColourSet ordinary() const { return ColourSet::range(1, static_cast<Colour>(colours)); }

    friend bool operator==(const TreeParams&, const TreeParams&) = default;
};

/// ⌈log2 n⌉, with 0 for n <= 1.
inline std::size_t default_bits(std::size_t n)
{
    std::size_t l = 0;
    while ((std::size_t{1} << l) < n) ++l;
    return l;
}

inline std::size_t bits_used(const BitNode& t)
{
    std::size_t b = 0;
    for (const auto& e : t.entries()) b += e.label.size();
    return b;
}

/// A node's value in ℒ^⊤, or ⊤.
using NextResult = BitValue;

class invalid_node : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_valid_node(const TreeParams& p, const BitNode& t)
{
    if (!well_coloured(t, p.colours)) return false;
    if (bits_used(t) > p.bits) return false;
    if (!t.is_root() && t.back().colour == kBottom && t.depth() == p.h() + 1)
        return bits_used(t) == p.bits;
    return true;
}

namespace detail {

inline void require_valid(const TreeParams& p, const BitNode& t)
{
    if (!is_valid_node(p, t)) throw invalid_node("not a node of the universal tree: " + render(t));
}

// Colours available to entry `depth` given the entries above it.
inline ColourSet remaining_colours(const TreeParams& p, const BitNode& t, std::size_t depth)
{
    ColourSet rem = p.ordinary();
    for (std::size_t i = 0; i < depth; ++i)
        if (t[i].colour != kBottom) rem.erase(t[i].colour);
    return rem;
}

inline std::size_t budget_before(const TreeParams& p, const BitNode& t, std::size_t depth)
{
    std::size_t used = 0;
    for (std::size_t i = 0; i < depth; ++i) used += t[i].label.size();
    return p.bits - used;
}

inline Colour least(ColourSet allowed)
{
    return allowed.empty() ? kBottom : static_cast<Colour>(allowed.min());
}

// Smallest child of a non-⊥ node whose entries take colours from `allowed`.
inline BitNode first_child(const TreeParams& p, BitNode t, ColourSet allowed)
{
    const std::size_t b = budget_before(p, t, t.depth());
    ColourSet rem = remaining_colours(p, t, t.depth());
    t.push_back({BitLabel::zeros(b), least(rem & allowed)});
    return t;
}

// Least sibling-or-later of the prefix of `t` ending at entry `j` (1-based),
// restricted to colours in `allowed` ∪ {⊥}; ⊤ when the tree runs out.
inline NextResult advance_from(const TreeParams& p, BitNode t, std::size_t j, ColourSet allowed)
{
    t.truncate(j);
    while (j >= 1) {
        const auto [label, colour] = t.back();
        t.pop_back();
        const ColourSet rem = remaining_colours(p, t, t.depth());
        const ColourSet admissible = rem & allowed;
        if (colour != kBottom) {
            int above = admissible.next_above(colour);
            t.push_back({label, above < 0 ? kBottom : static_cast<Colour>(above)});
            return t;
        }
        const std::size_t b = budget_before(p, t, t.depth());
        auto next_label = rem.empty() ? next_fixed_width(label) : nextbit(b, label);
        if (next_label) {
            t.push_back({*next_label, least(admissible)});
            return t;
        }
        --j;
    }
    return NextResult::top();
}

} // namespace detail

/// Immediate ≺-successor of `t` in the tree, or ⊤ after the greatest node.
inline NextResult next_node(const TreeParams& p, const BitNode& t)
{
    detail::require_valid(p, t);
    if (t.is_root() || t.back().colour != kBottom) return detail::first_child(p, t, p.ordinary());
    return detail::advance_from(p, t, t.depth(), p.ordinary());
}

/// Least node after `t` whose entry colours all lie in `allowed` ∪ {⊥}.
inline NextResult next_in_subset(const TreeParams& p, const BitNode& t, ColourSet allowed)
{
    detail::require_valid(p, t);
    allowed = allowed & p.ordinary();
    std::size_t s = 0;
    while (s < t.depth() && (t[s].colour == kBottom || allowed.contains(t[s].colour))) ++s;
    if (s < t.depth()) return detail::advance_from(p, t, s + 1, allowed);
    if (t.is_root() || t.back().colour != kBottom) return detail::first_child(p, t, allowed);
    return detail::advance_from(p, t, t.depth(), allowed);
}

/// Least node ⪰ `t` whose entry colours lie in `allowed` ∪ {⊥}.
inline NextResult ceil_in_subset(const TreeParams& p, const BitNode& t, ColourSet allowed)
{
    if ((colour_set(t) - ColourSet{kRootColour}).subset_of(allowed)) return t;
    return next_in_subset(p, t, allowed);
}

/// Forward iteration over every node in ≺ order, starting at the root.
class NodeCursor {
public:
    explicit NodeCursor(TreeParams p) : params_(p) {}

    bool done() const { return current_.is_top(); }
    const BitNode& node() const { return current_.node(); }
    void advance() { current_ = next_node(params_, current_.node()); }

private:
    TreeParams params_;
    NextResult current_{BitNode::root()};
};

// ---------------------------------------------------------------------------
// Counting

/// Leaves of U^ℓ with h ordinary colours: U(ℓ,0) = 2^ℓ, U(0,h) = h·U(0,h-1)+1,
/// U(ℓ,h) = 2·U(ℓ-1,h) + h·U(ℓ,h-1) + 1.
inline BigInt leaf_count(std::size_t ell, unsigned h)
{
    std::vector<std::vector<BigInt>> u(ell + 1, std::vector<BigInt>(h + 1));
    for (std::size_t l = 0; l <= ell; ++l) {
        u[l][0] = BigInt(1) << l;
        for (unsigned j = 1; j <= h; ++j)
            u[l][j] = (l == 0 ? BigInt(0) : 2 * u[l - 1][j]) + j * u[l][j - 1] + 1;
    }
    return u[ell][h];
}

/// All nodes of U^ℓ, root included.
inline BigInt node_count(std::size_t ell, unsigned h)
{
    // N(ℓ,0) = 1 + 2^ℓ; otherwise root, one ⊥ leaf per label of length <= ℓ,
    // and for every colour and first label w a subtree N(ℓ-|w|, h-1).
    std::vector<std::vector<BigInt>> nc(ell + 1, std::vector<BigInt>(h + 1));
    for (std::size_t l = 0; l <= ell; ++l) nc[l][0] = 1 + (BigInt(1) << l);
    for (unsigned j = 1; j <= h; ++j)
        for (std::size_t l = 0; l <= ell; ++l) {
            BigInt sub = 0;
            for (std::size_t w = 0; w <= l; ++w) sub += (BigInt(1) << w) * nc[l - w][j - 1];
            nc[l][j] = 1 + ((BigInt(1) << (l + 1)) - 1) + j * sub;
        }
    return nc[ell][h];
}

inline BigInt factorial(unsigned n)
{
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(std::size_t n, std::size_t r)
{
    if (r > n) return 0;
    BigInt b = 1;
    for (std::size_t i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

struct BoundCheck {
    BigInt leaves;
    BigInt bound_a; // 2^k · k! · 4^ℓ
    BigInt bound_b; // C(ℓ+k, k-1) · 2^ℓ · k!
    bool within() const { return leaves <= bound_a && leaves <= bound_b; }
};

inline BoundCheck bound_check(std::size_t ell, unsigned h)
{
    const unsigned k = h + 1;
    BoundCheck r;
    r.leaves = leaf_count(ell, h);
    r.bound_a = (BigInt(1) << k) * factorial(k) * (BigInt(1) << (2 * ell));
    r.bound_b = binomial(ell + k, k - 1) * (BigInt(1) << ell) * factorial(k);
    return r;
}

/// C(ℓ+k-1, ℓ)·(k-1)!, the size every n-universal tree must reach.
inline BigInt lower_bound_size(std::size_t ell, unsigned k)
{
    return binomial(ell + k - 1, ell) * factorial(k - 1);
}

} // namespace rabin
