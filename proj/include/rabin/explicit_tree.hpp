#pragma once
// explicit_tree.hpp - materialised colourful trees and their embedding into
// the succinct universal tree. Only the oracle and tests build these.

#include <rabin/succinct_tree.hpp>
#include <rabin/tree.hpp>

#include <map>
#include <optional>
#include <vector>

namespace rabin {

struct ExplicitTree {
    Colour colour = kRootColour;
    std::vector<ExplicitTree> children; // ordered; ⊥-coloured children are leaves

    static ExplicitTree bottom() { return ExplicitTree{kBottom, {}}; }

    std::size_t leaves() const
    {
        if (children.empty()) return 1;
        std::size_t n = 0;
        for (const auto& c : children) n += c.leaves();
        return n;
    }

    friend bool operator==(const ExplicitTree&, const ExplicitTree&) = default;
};

/// Children of `a` followed by children of `b`, under the root colour of `a`.
inline ExplicitTree concat(ExplicitTree a, const ExplicitTree& b)
{
    a.children.insert(a.children.end(), b.children.begin(), b.children.end());
    return a;
}

/// `copies` copies of `t` under a fresh root of colour `root`.
inline ExplicitTree power(const ExplicitTree& t, std::size_t copies, Colour root = kRootColour)
{
    return ExplicitTree{root, std::vector<ExplicitTree>(copies, t)};
}

/// Colours distinct along every path, drawn from `available` (⊥ allowed at
/// leaves only).
inline bool well_formed(const ExplicitTree& t, ColourSet available)
{
    for (const auto& c : t.children) {
        if (c.colour == kBottom) {
            if (!c.children.empty()) return false;
            continue;
        }
        if (!available.contains(c.colour)) return false;
        ColourSet below = available;
        below.erase(c.colour);
        if (!well_formed(c, below)) return false;
    }
    return true;
}

/// Path of child indices from the root.
using TreePath = std::vector<std::size_t>;
using Embedding = std::map<TreePath, BitNode>;

namespace detail {

inline std::size_t leaves_of(const std::vector<ExplicitTree>& kids, std::size_t lo, std::size_t hi)
{
    std::size_t n = 0;
    for (std::size_t i = lo; i < hi; ++i) n += kids[i].leaves();
    return n;
}

// Embeds children [lo,hi) of the tree at `path` (image `parent`) whose
// first labels all start with `stem`; `spare` bits remain after the stem.
struct Embedder {
    Embedding out;

    void children(const ExplicitTree& t, TreePath& path, const BitNode& parent, ColourSet remaining,
                  std::size_t lo, std::size_t hi, BitLabel stem, std::size_t spare)
    {
        if (lo >= hi) return;
        const auto& kids = t.children;
        if (remaining.empty()) {
            // colour-free subtree: only ⊥ leaves, labelled by fixed-width counters
            for (std::size_t i = lo; i < hi; ++i) {
                BitLabel label = stem;
                for (std::size_t b = spare; b-- > 0;) label.push_back(((i - lo) >> b) & 1u);
                place(kids[i], path, i, parent, remaining, label);
            }
            return;
        }
        const std::size_t n = leaves_of(kids, lo, hi);
        std::size_t p = lo;
        if (spare > 0) {
            // smallest p with at most n/2 leaves strictly left and strictly right
            for (p = lo; p < hi; ++p)
                if (2 * leaves_of(kids, lo, p) <= n && 2 * leaves_of(kids, p + 1, hi) <= n) break;
            BitLabel left = stem, right = stem;
            left.push_back(false);
            right.push_back(true);
            children(t, path, parent, remaining, lo, p, left, spare - 1);
            children(t, path, parent, remaining, p + 1, hi, right, spare - 1);
        }
        place(kids[p], path, p, parent, remaining, stem);
    }

    void place(const ExplicitTree& child, TreePath& path, std::size_t index, const BitNode& parent,
               ColourSet remaining, const BitLabel& label)
    {
        BitNode image = parent;
        image.push_back({label, child.colour});
        path.push_back(index);
        out[path] = image;
        if (child.colour != kBottom) {
            remaining.erase(child.colour);
            // the child's subtree starts with its own full remaining budget
            std::size_t budget = 0;
            for (const auto& e : image.entries()) budget += e.label.size();
            children(child, path, image, remaining, 0, child.children.size(), BitLabel{}, total_bits - budget);
        }
        path.pop_back();
    }

    std::size_t total_bits = 0;
};

} // namespace detail

/// Order- and colour-preserving map from the nodes of `t` (by path) into
/// U^ℓ. Returns nullopt when `t` has more than 2^ℓ leaves or is not a
/// well-formed tree over the colours of `p`.
inline std::optional<Embedding> embed_tree(const ExplicitTree& t, const TreeParams& p)
{
    if (t.colour != kRootColour || !well_formed(t, p.ordinary())) return std::nullopt;
    if (p.bits < 63 && t.leaves() > (std::size_t{1} << p.bits)) return std::nullopt;
    detail::Embedder e;
    e.total_bits = p.bits;
    TreePath path;
    e.out[path] = BitNode::root();
    e.children(t, path, BitNode::root(), p.ordinary(), 0, t.children.size(), BitLabel{}, p.bits);
    return std::move(e.out);
}

/// The tree spanned by a set of nodes (prefix closure), children ordered by
/// their entries, together with the path of each listed node.
template <TreeLabel Label>
std::pair<ExplicitTree, std::map<Node<Label>, TreePath>> span_tree(const std::vector<Node<Label>>& nodes)
{
    std::map<Node<Label>, TreePath> paths;
    std::vector<Node<Label>> closure;
    for (const auto& n : nodes)
        for (std::size_t d = 0; d <= n.depth(); ++d) closure.push_back(n.prefix(d));
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());

    // sorted order visits parents before children and siblings left to right
    ExplicitTree root;
    paths[Node<Label>::root()] = {};
    for (const auto& n : closure) {
        if (n.is_root()) continue;
        TreePath path = paths.at(n.prefix(n.depth() - 1));
        ExplicitTree* at = &root;
        for (std::size_t i : path) at = &at->children[i];
        at->children.push_back(ExplicitTree{n.back().colour, {}});
        path.push_back(at->children.size() - 1);
        paths[n] = path;
    }
    return {std::move(root), std::move(paths)};
}

/// Re-targets a measure into U^ℓ by composing it with the embedding of the
/// tree its values span. Top stays top.
template <TreeLabel Label>
std::optional<std::vector<BitValue>> compose_with_embedding(const std::vector<MeasureValue<Label>>& measure,
                                                            const TreeParams& p)
{
    std::vector<Node<Label>> image;
    for (const auto& v : measure)
        if (!v.is_top()) image.push_back(v.node());
    auto [tree, paths] = span_tree(image);
    auto emb = embed_tree(tree, p);
    if (!emb) return std::nullopt;
    std::vector<BitValue> out;
    out.reserve(measure.size());
    for (const auto& v : measure) out.push_back(v.is_top() ? BitValue::top() : BitValue(emb->at(paths.at(v.node()))));
    return out;
}

} // namespace rabin
