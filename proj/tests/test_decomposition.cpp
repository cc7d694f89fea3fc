#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

namespace permlcp {
namespace {

using testing::all_permutations;
using testing::for_each_permutation;
using testing::random_permutation;

const Permutation kFigure{5, 1, 10, 9, 6, 7, 8, 11, 2, 4, 3};

// Independent definition-level oracle for common intervals, O(n^3).
std::set<IntervalSpan> common_by_definition(const Permutation& sigma) {
    std::set<IntervalSpan> out;
    const int n = static_cast<int>(sigma.size());
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = lo; hi <= n; ++hi) {
            std::set<int> vals;
            for (int p = lo; p <= hi; ++p) vals.insert(sigma.at(static_cast<std::size_t>(p)));
            if (*vals.rbegin() - *vals.begin() == hi - lo) out.insert({lo, hi});
        }
    return out;
}

std::set<IntervalSpan> as_set(const std::vector<IntervalSpan>& v) { return {v.begin(), v.end()}; }

const DecompNode* find_span(const DecompNode& node, IntervalSpan span) {
    if (node.span == span) return &node;
    for (const auto& c : node.children)
        if (const auto* hit = find_span(c, span)) return hit;
    return nullptr;
}

TEST(CommonIntervals, FigureExample) {
    const auto spans = as_set(common_intervals(kFigure));
    EXPECT_TRUE(spans.contains({5, 7}));
    EXPECT_TRUE(spans.contains({3, 7}));
    EXPECT_TRUE(spans.contains({1, 11}));
    EXPECT_FALSE(spans.contains({1, 2}));
    EXPECT_EQ(spans, common_by_definition(kFigure));
}

TEST(CommonIntervals, IdentityAndSimple) {
    for (int n = 1; n <= 9; ++n)
        EXPECT_EQ(common_intervals(Permutation::identity(n)).size(), static_cast<std::size_t>(n * (n + 1) / 2));
    const std::set<IntervalSpan> expected{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {1, 4}};
    EXPECT_EQ(as_set(common_intervals(Permutation{2, 4, 1, 3})), expected);
}

TEST(CommonIntervals, MatchesDefinitionOnRandomPermutations) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto sigma = random_permutation(1 + trial % 14, rng);
        ASSERT_EQ(as_set(common_intervals(sigma)), common_by_definition(sigma)) << sigma;
    }
}

TEST(StrongIntervals, FigureExample) {
    std::set<IntervalSpan> expected{{1, 11}, {5, 7}, {3, 7}, {3, 8}, {10, 11}, {9, 11}};
    for (int p = 1; p <= 11; ++p) expected.insert({p, p});
    EXPECT_EQ(as_set(strong_intervals(kFigure)), expected);
}

TEST(StrongIntervals, IdentityOfSizeThree) {
    const std::set<IntervalSpan> expected{{1, 1}, {2, 2}, {3, 3}, {1, 3}};
    EXPECT_EQ(as_set(strong_intervals(Permutation::identity(3))), expected);
}

TEST(StrongIntervals, PropertiesOnRandomPermutations) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 12;
        const auto sigma = random_permutation(n, rng);
        const auto common = common_by_definition(sigma);
        const auto strong = strong_intervals(sigma);

        std::set<IntervalSpan> oracle;
        for (const auto& x : common) {
            bool ok = true;
            for (const auto& y : common) {
                const bool meet = std::max(x.lo, y.lo) <= std::min(x.hi, y.hi);
                const bool x_in_y = y.lo <= x.lo && x.hi <= y.hi;
                const bool y_in_x = x.lo <= y.lo && y.hi <= x.hi;
                if (meet && !x_in_y && !y_in_x) ok = false;
            }
            if (ok) oracle.insert(x);
        }
        ASSERT_EQ(as_set(strong), oracle);
        for (const auto& x : strong) {
            ASSERT_TRUE(common.contains(x));
            for (const auto& y : strong) ASSERT_FALSE(overlaps(x, y));
        }
        for (int p = 1; p <= n; ++p) ASSERT_TRUE(as_set(strong).contains({p, p}));
        ASSERT_TRUE(as_set(strong).contains({1, n}));
    }
}

TEST(DecompositionTree, FigureExample) {
    const auto tree = decomposition_tree(kFigure);
    EXPECT_FALSE(tree.expanded);
    EXPECT_EQ(tree.source_size, 11);
    EXPECT_EQ(to_bracket(tree), "P3142(5,1,+(-(10,9,+(6,7,8)),11),+(2,-(4,3)))");

    EXPECT_EQ(tree.root.kind, NodeKind::prime);
    EXPECT_EQ(tree.root.label, (Pattern{3, 1, 4, 2}));
    ASSERT_EQ(tree.root.arity(), 4u);
    EXPECT_EQ(tree.root.children[2].span, (IntervalSpan{3, 8}));
    EXPECT_EQ(tree.root.children[2].value_range, (ValueRange{6, 11}));

    const auto* plus_node = find_span(tree.root, {3, 8});
    ASSERT_NE(plus_node, nullptr);
    EXPECT_EQ(plus_node->kind, NodeKind::linear);
    EXPECT_EQ(plus_node->sign, Sign::plus);
    const auto* minus_node = find_span(tree.root, {3, 7});
    ASSERT_NE(minus_node, nullptr);
    EXPECT_EQ(minus_node->kind, NodeKind::linear);
    EXPECT_EQ(minus_node->sign, Sign::minus);
    EXPECT_EQ(minus_node->arity(), 3u);
}

TEST(DecompositionTree, SingleLeaf) {
    const auto tree = decomposition_tree(Permutation{1});
    EXPECT_TRUE(tree.root.is_leaf());
    EXPECT_EQ(tree.root.value, 1);
    EXPECT_EQ(to_bracket(tree), "1");
}

TEST(DecompositionTree, ContractedSeparatingTree) {
    const auto tree = decomposition_tree(Permutation{4, 2, 3, 1, 6, 5, 8, 9, 7});
    EXPECT_EQ(to_bracket(tree), "+(-(4,+(2,3),1),-(6,5),-(+(8,9),7))");
}

TEST(ExpandTree, FigureExample) {
    const auto expanded = expand_tree(decomposition_tree(kFigure));
    EXPECT_TRUE(expanded.expanded);
    EXPECT_EQ(to_bracket(expanded), "P3142(5,1,+(-(-(10,9),+(+(6,7),8)),11),+(2,-(4,3)))");
    EXPECT_EQ(tree_to_permutation(expanded), kFigure);
}

TEST(ExpandTree, LeftCombAndBinaryFixpoint) {
    EXPECT_EQ(to_bracket(expand_tree(decomposition_tree(Permutation::identity(4)))), "+(+(+(1,2),3),4)");
    const auto binary = decomposition_tree(Permutation{2, 1, 3});
    EXPECT_EQ(to_bracket(expand_tree(binary)), to_bracket(binary));
    const auto once = expand_tree(decomposition_tree(kFigure));
    EXPECT_EQ(to_bracket(expand_tree(once)), to_bracket(once));
}

TEST(Separability, Examples) {
    EXPECT_TRUE(is_separable(Permutation{4, 2, 3, 1, 6, 5, 8, 9, 7}));
    EXPECT_FALSE(is_separable(Permutation{3, 1, 4, 2}));
    EXPECT_FALSE(is_separable(kFigure));

    const auto tree = separating_tree(Permutation{4, 2, 3, 1, 6, 5, 8, 9, 7});
    EXPECT_EQ(leaf_count(tree.root), 9u);
    EXPECT_EQ(node_count(tree.root), 17u);
    for_each_node(tree.root, [](const DecompNode& node, int) {
        if (!node.is_leaf()) {
            EXPECT_EQ(node.kind, NodeKind::linear);
            EXPECT_EQ(node.arity(), 2u);
        }
    });
    EXPECT_EQ(to_bracket(separating_tree(Permutation{1, 2})), "+(1,2)");
    EXPECT_THROW(separating_tree(Permutation{3, 1, 4, 2}), NotSeparableError);
}

TEST(Separability, MatchesAvoidanceExhaustively) {
    const std::vector<std::size_t> schroeder{1, 2, 6, 22, 90, 394, 1806};
    for (int n = 1; n <= 7; ++n) {
        std::size_t count = 0;
        for_each_permutation(n, [&](const Permutation& sigma) {
            const bool by_tree = is_separable(sigma);
            const bool by_avoidance = avoids(sigma, Pattern{3, 1, 4, 2}) && avoids(sigma, Pattern{2, 4, 1, 3});
            ASSERT_EQ(by_tree, by_avoidance) << sigma;
            if (by_tree) ++count;
        });
        EXPECT_EQ(count, schroeder[static_cast<std::size_t>(n - 1)]) << "n = " << n;
    }
}

TEST(MaxPrimeArity, Examples) {
    EXPECT_EQ(max_prime_arity(decomposition_tree(kFigure)), 4u);
    EXPECT_EQ(max_prime_arity(decomposition_tree(Permutation{2, 4, 1, 3})), 4u);
    EXPECT_EQ(max_prime_arity(decomposition_tree(Permutation{4, 2, 3, 1, 6, 5, 8, 9, 7})), 0u);
    EXPECT_EQ(max_prime_arity(decomposition_tree(Permutation{2, 5, 3, 1, 4})), 5u);
}

TEST(TreeToPermutation, IgnoresStoredDecoration) {
    auto tree = decomposition_tree(kFigure);
    auto scramble = [](auto&& self, DecompNode& node) -> void {
        node.value = 0;
        node.span = {99, 99};
        node.value_range = {0, 0};
        for (auto& c : node.children) self(self, c);
    };
    scramble(scramble, tree.root);
    EXPECT_EQ(tree_to_permutation(tree), kFigure);
    EXPECT_EQ(tree_to_permutation(testing::make_tree(testing::leaf())), Permutation{1});
}

TEST(TreeToPermutation, RejectsMalformedTrees) {
    using testing::leaf;
    DecompTree t;
    t.root = DecompNode::make_linear(Sign::plus, {leaf()});
    EXPECT_THROW(tree_to_permutation(t), TreeError);

    t.root = leaf();
    t.root.children.push_back(leaf());
    EXPECT_THROW(tree_to_permutation(t), TreeError);

    t.root = DecompNode::make_prime(Pattern{2, 4, 1, 3}, {leaf(), leaf(), leaf()});
    EXPECT_THROW(tree_to_permutation(t), TreeError);

    t.root = DecompNode::make_prime(Pattern{2, 1}, {leaf(), leaf()});
    EXPECT_THROW(tree_to_permutation(t), TreeError);
}

TEST(TreeToPermutation, RoundTripOnRandomPermutations) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto sigma = random_permutation(1 + trial % 12, rng);
        const auto tree = decomposition_tree(sigma);
        ASSERT_EQ(tree_to_permutation(tree), sigma);
        ASSERT_EQ(tree_to_permutation(expand_tree(tree)), sigma);
    }
}

// Structural invariants of labeled and expanded trees.
void check_labeled_invariants(const Permutation& sigma, const DecompNode& node) {
    const auto& v = sigma.values();
    int mn = 1 << 30, mx = 0;
    for (int p = node.span.lo; p <= node.span.hi; ++p) {
        mn = std::min(mn, v[static_cast<std::size_t>(p - 1)]);
        mx = std::max(mx, v[static_cast<std::size_t>(p - 1)]);
    }
    ASSERT_EQ(node.value_range, (ValueRange{mn, mx}));
    ASSERT_EQ(node.value_range.width(), node.span.width());
    if (node.is_leaf()) {
        ASSERT_EQ(node.value, v[static_cast<std::size_t>(node.span.lo - 1)]);
        return;
    }
    int pos = node.span.lo;
    for (const auto& c : node.children) {
        ASSERT_EQ(c.span.lo, pos);
        pos = c.span.hi + 1;
    }
    ASSERT_EQ(pos, node.span.hi + 1);

    // Which unions of consecutive children are intervals?
    const std::size_t k = node.arity();
    bool all_unions = true, no_proper_union = true;
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t) {
            int lo = 1 << 30, hi = 0, width = 0;
            for (std::size_t u = s; u <= t; ++u) {
                lo = std::min(lo, node.children[u].value_range.min);
                hi = std::max(hi, node.children[u].value_range.max);
                width += node.children[u].value_range.width();
            }
            const bool is_interval = hi - lo + 1 == width;
            if (!is_interval) all_unions = false;
            if (is_interval && !(s == 0 && t == k - 1)) no_proper_union = false;
        }

    if (node.kind == NodeKind::linear) {
        ASSERT_GE(k, 2u);
        ASSERT_TRUE(all_unions);
        for (std::size_t t = 0; t + 1 < k; ++t) {
            if (node.sign == Sign::plus)
                ASSERT_LT(node.children[t].value_range.max, node.children[t + 1].value_range.min);
            else
                ASSERT_GT(node.children[t].value_range.min, node.children[t + 1].value_range.max);
        }
        for (const auto& c : node.children)
            if (c.kind == NodeKind::linear) {
                ASSERT_NE(c.sign, node.sign) << "same-sign linear child";
            }
    } else {
        ASSERT_GE(k, 4u);
        ASSERT_TRUE(no_proper_union);
        ASSERT_FALSE(all_unions);
        ASSERT_EQ(node.label.size(), k);
        ASSERT_TRUE(oracle_is_simple(Permutation(node.label)));
    }
    for (const auto& c : node.children) check_labeled_invariants(sigma, c);
}

TEST(DecompositionTree, InvariantsOnRandomPermutations) {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        const auto sigma = random_permutation(1 + trial % 16, rng);
        const auto tree = decomposition_tree(sigma);
        check_labeled_invariants(sigma, tree.root);
        if (HasFatalFailure()) {
            ADD_FAILURE() << "sigma = " << sigma;
            return;
        }
        const auto expanded = expand_tree(tree);
        for_each_node(expanded.root, [&](const DecompNode& node, int) {
            if (node.kind == NodeKind::linear) {
                EXPECT_EQ(node.arity(), 2u);
            }
        });
        EXPECT_EQ(max_prime_arity(expanded), max_prime_arity(tree));
    }
}

TEST(DecompositionTree, SimplePermutationsAreSinglePrimeRoots) {
    for (int n = 4; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& sigma) {
            const auto tree = decomposition_tree(sigma);
            const bool single_prime = tree.root.kind == NodeKind::prime && tree.root.arity() == sigma.size();
            ASSERT_EQ(oracle_is_simple(sigma), single_prime) << sigma;
            ASSERT_EQ(is_simple(sigma), single_prime) << sigma;
        });
    }
}

TEST(TreeExport, DotJsonAndText) {
    const auto tree = decomposition_tree(kFigure);
    const std::string dot = to_dot(tree);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("n0 [label=\"3 1 4 2\""), std::string::npos);
    EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);

    const auto j = to_json(tree);
    EXPECT_EQ(j["kind"], "prime");
    EXPECT_EQ(j["label"], nlohmann::ordered_json({3, 1, 4, 2}));
    EXPECT_EQ(j["span"], nlohmann::ordered_json({1, 11}));
    EXPECT_EQ(j["children"].size(), 4u);
    EXPECT_EQ(j["children"][2]["kind"], "linear");
    EXPECT_EQ(j["children"][2]["sign"], "+");
    EXPECT_EQ(j["children"][0]["kind"], "leaf");
    EXPECT_EQ(j["children"][0]["value_range"], nlohmann::ordered_json({5, 5}));
    EXPECT_FALSE(j["children"][0].contains("sign"));

    const std::string text = to_text(tree);
    EXPECT_EQ(text.rfind("P 3 1 4 2", 0), 0u);
    EXPECT_NE(text.find("\n  5  positions 1..1"), std::string::npos);
}

} // namespace
} // namespace permlcp
