#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

using namespace rabin;
using namespace rabin::testing;

TEST(NodeOrder, PrefixBelowExtension)
{
    EXPECT_EQ(compare_nodes(nn({}), nn({{1, 1}})), std::strong_ordering::less);
    EXPECT_EQ(compare_nodes(bn({}), bn({{"", kBottom}})), std::strong_ordering::less);
}

TEST(NodeOrder, LexicographicWithBottomGreatest)
{
    EXPECT_EQ(compare_nodes(nn({{1, 1}, {1, 3}}), nn({{1, kBottom}})), std::strong_ordering::less);
    EXPECT_EQ(compare_nodes(nn({{2, 2}, {2, 1}}), nn({{2, 2}, {2, 1}})), std::strong_ordering::equal);
    EXPECT_EQ(compare_nodes(nn({{2, 1}}), nn({{1, 3}})), std::strong_ordering::greater);
}

TEST(NodeOrder, BitLabelsOrderZeroEpsilonOne)
{
    EXPECT_LT(bn({{"0", 1}}), bn({{"", 1}}));
    EXPECT_LT(bn({{"", 1}}), bn({{"1", 1}}));
    EXPECT_LT(bn({{"01", kBottom}}), bn({{"", 1}}));
    EXPECT_LT(bn({{"", 2}}), bn({{"", kBottom}}));
}

TEST(NodeOrder, TotalStrictTransitiveOnRandomNodes)
{
    auto nodes = all_valid_nodes(2, 2);
    std::mt19937_64 rng(3);
    std::vector<BitNode> sample;
    for (int i = 0; i < 60; ++i) sample.push_back(nodes[rng() % nodes.size()]);
    for (const auto& a : sample)
        for (const auto& b : sample) {
            auto ab = compare_nodes(a, b), ba = compare_nodes(b, a);
            EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
            EXPECT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
            EXPECT_EQ(ab == std::strong_ordering::less, order_key(a) < order_key(b));
            for (const auto& c : sample)
                if (a < b && b < c) {
                    EXPECT_LT(a, c);
                }
        }
}

TEST(Gca, Examples)
{
    EXPECT_EQ(gca(nn({{1, 1}, {1, 2}}), nn({{1, 1}, {2, 3}})), nn({{1, 1}}));
    EXPECT_EQ(gca(nn({{1, 1}, {1, 2}}), nn({})), nn({}));
    EXPECT_EQ(gca(nn({{1, 1}}), nn({{1, 1}, {2, 3}})), nn({{1, 1}}));
    EXPECT_EQ(gca(nn({{4, 2}}), nn({{4, 2}})), nn({{4, 2}}));
}

TEST(Ancestor, Examples)
{
    auto t = nn({{1, 1}, {2, kBottom}});
    EXPECT_TRUE(is_ancestor(nn({}), t));
    EXPECT_TRUE(is_ancestor(t, t));
    EXPECT_FALSE(is_ancestor(nn({{1, 1}}), nn({{2, 2}})));
    EXPECT_FALSE(is_ancestor(t, nn({{1, 1}})));
}

TEST(Ancestor, LawsOnSmallUniversalTree)
{
    auto nodes = all_valid_nodes(1, 2);
    for (const auto& a : nodes)
        for (const auto& b : nodes) {
            auto g = gca(a, b);
            EXPECT_TRUE(is_ancestor(g, a));
            EXPECT_TRUE(is_ancestor(g, b));
            if (is_ancestor(a, b) && a != b) {
                EXPECT_LT(a, b);
            }
            EXPECT_EQ(is_ancestor(a, b), gca(a, b) == a);
        }
    // any common ancestor lies above the gca
    for (const auto& a : nodes)
        for (const auto& b : nodes)
            for (std::size_t d = 0; d <= a.depth(); ++d) {
                auto c = a.prefix(d);
                if (is_ancestor(c, b)) {
                    EXPECT_TRUE(is_ancestor(c, gca(a, b)));
                }
            }
}

TEST(Ancestor, PropagatesOverSmallerNodes)
{
    // t ancestor of t', t'' ≺ t'  =>  t ancestor of t'' or t'' ≺ t
    auto nodes = all_valid_nodes(1, 2);
    for (const auto& t : nodes)
        for (const auto& t1 : nodes) {
            if (!is_ancestor(t, t1)) continue;
            for (const auto& t2 : nodes)
                if (t2 < t1) {
                    EXPECT_TRUE(is_ancestor(t, t2) || t2 < t);
                }
        }
}

TEST(Colours, ColourOf)
{
    EXPECT_EQ(colour_of(nn({})), kRootColour);
    EXPECT_EQ(colour_of(nn({{1, 1}, {1, kBottom}})), kBottom);
    EXPECT_EQ(colour_of(nn({{2, 3}})), 3);
}

TEST(Colours, ColourSet)
{
    EXPECT_EQ(colour_set(nn({})), ColourSet{kRootColour});
    EXPECT_EQ(colour_set(nn({{1, 1}, {2, kBottom}})), (ColourSet{0, 1}));
    EXPECT_EQ(colour_set(nn({{1, 1}, {1, 3}})), (ColourSet{0, 1, 3}));
}

TEST(Colours, WellColoured)
{
    EXPECT_TRUE(well_coloured(nn({{1, 1}, {1, 2}, {0, kBottom}}), 3));
    EXPECT_FALSE(well_coloured(nn({{1, 1}, {1, 1}}), 3));
    EXPECT_FALSE(well_coloured(nn({{1, kBottom}, {1, 1}}), 3));
    EXPECT_FALSE(well_coloured(nn({{1, 0}}), 3));
    EXPECT_FALSE(well_coloured(nn({{1, 3}}), 3));
}

TEST(MeasureValues, TopAboveEveryNode)
{
    for (const auto& n : all_valid_nodes(1, 2)) EXPECT_LT(BitValue(n), BitValue::top());
    EXPECT_EQ(BitValue::top(), BitValue::top());
    EXPECT_TRUE(BitValue().node().is_root());
}

TEST(Render, Formats)
{
    EXPECT_EQ(render(bn({})), "()");
    EXPECT_EQ(render(bn({{"01", 2}, {"", kBottom}})), "(01·2)(ε·BOT)");
    EXPECT_EQ(render(nn({{3, 1}})), "(3·1)");
    EXPECT_EQ(render(BitValue::top()), "TOP");
}

TEST(ExplicitTrees, Constructors)
{
    ExplicitTree leaf = ExplicitTree::bottom();
    auto t = power(leaf, 3);
    EXPECT_EQ(t.leaves(), 3u);
    EXPECT_EQ(concat(t, power(leaf, 2)).leaves(), 5u);
    ExplicitTree coloured{kRootColour, {ExplicitTree{1, {leaf, leaf}}, leaf}};
    EXPECT_TRUE(well_formed(coloured, ColourSet{1}));
    EXPECT_FALSE(well_formed(coloured, ColourSet{2}));
    ExplicitTree repeated{kRootColour, {ExplicitTree{1, {ExplicitTree{1, {leaf}}}}}};
    EXPECT_FALSE(well_formed(repeated, ColourSet{1, 2}));
}

TEST(Embedding, SingleLeafAtZeroBits)
{
    auto e = embed_tree(power(ExplicitTree::bottom(), 1), TreeParams{0, 2});
    ASSERT_TRUE(e);
    EXPECT_EQ(e->at({}), bn({}));
    EXPECT_EQ(e->at({0}), bn({{"", kBottom}}));
}

TEST(Embedding, TwoLeavesWithoutColours)
{
    auto e = embed_tree(power(ExplicitTree::bottom(), 2), TreeParams{1, 1});
    ASSERT_TRUE(e);
    EXPECT_EQ(e->at({0}), bn({{"0", kBottom}}));
    EXPECT_EQ(e->at({1}), bn({{"1", kBottom}}));
}

TEST(Embedding, TooManyLeavesFails)
{
    for (std::size_t ell = 0; ell <= 3; ++ell)
        EXPECT_FALSE(embed_tree(power(ExplicitTree::bottom(), (std::size_t{1} << ell) + 1), TreeParams{ell, 3}));
}

namespace {

// Order, root, colour and parent preservation of an embedding, with every
// image a node of the target tree.
void expect_faithful(const ExplicitTree& t, const Embedding& e, const TreeParams& p)
{
    static std::map<std::pair<std::size_t, unsigned>, std::set<std::string>> cache;
    auto& keys = cache[{p.bits, p.h()}];
    if (keys.empty())
        for (const auto& n : all_valid_nodes(p.bits, p.h())) keys.insert(order_key(n));
    auto valid = [&](const BitNode& n) { return keys.count(order_key(n)) == 1; };
    std::function<void(const ExplicitTree&, TreePath&)> walk = [&](const ExplicitTree& at, TreePath& path) {
        const BitNode& img = e.at(path);
        EXPECT_TRUE(valid(img)) << render(img);
        EXPECT_EQ(colour_of(img), at.colour);
        for (std::size_t i = 0; i < at.children.size(); ++i) {
            path.push_back(i);
            const BitNode& child = e.at(path);
            EXPECT_EQ(child.prefix(child.depth() - 1), img);
            if (i > 0) {
                TreePath prev = path;
                prev.back() = i - 1;
                EXPECT_LT(e.at(prev), child);
            }
            walk(at.children[i], path);
            path.pop_back();
        }
    };
    TreePath root;
    EXPECT_TRUE(e.at(root).is_root());
    walk(t, root);
}

} // namespace

TEST(Embedding, RandomTreesEmbedFaithfully)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const unsigned h = rng() % 4;
        const std::size_t ell = rng() % 5;
        auto t = random_explicit_tree(rng, std::size_t{1} << ell, ColourSet::range(1, static_cast<Colour>(h + 1)));
        ASSERT_LE(t.leaves(), std::size_t{1} << ell);
        TreeParams p{ell, h + 1};
        auto e = embed_tree(t, p);
        ASSERT_TRUE(e) << "leaves " << t.leaves() << " ell " << ell;
        expect_faithful(t, *e, p);
    }
}

TEST(Embedding, SpanAndCompose)
{
    std::vector<NatNode> nodes{nn({{5, 1}, {0, kBottom}}), nn({{2, kBottom}}), nn({{5, 1}})};
    auto [tree, paths] = span_tree(nodes);
    EXPECT_EQ(tree.children.size(), 2u);
    EXPECT_EQ(paths.at(nodes[1]), TreePath{0});
    EXPECT_EQ(paths.at(nodes[0]), (TreePath{1, 0}));

    NatMeasure mu{nodes[0], nodes[1], nodes[2], NatValue::top()};
    auto bits = compose_with_embedding(mu, TreeParams{2, 2});
    ASSERT_TRUE(bits);
    EXPECT_TRUE((*bits)[3].is_top());
    EXPECT_LT((*bits)[1], (*bits)[2]);
    EXPECT_TRUE(is_ancestor((*bits)[2].node(), (*bits)[0].node()));
    EXPECT_EQ(colour_of((*bits)[2].node()), 1);
}
