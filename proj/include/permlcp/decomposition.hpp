#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "perm.hpp"

namespace permlcp {

/// Inclusive 1-based range of positions.
struct IntervalSpan {
    int lo = 1;
    int hi = 1;

    int width() const noexcept { return hi - lo + 1; }
    bool contains(const IntervalSpan& other) const noexcept { return lo <= other.lo && other.hi <= hi; }

    friend bool operator==(const IntervalSpan&, const IntervalSpan&) = default;
    friend auto operator<=>(const IntervalSpan&, const IntervalSpan&) = default;
};

/// I and J overlap when I∖J, J∖I and I∩J are all non-empty.
inline bool overlaps(const IntervalSpan& x, const IntervalSpan& y) noexcept {
    const bool intersect = x.lo <= y.hi && y.lo <= x.hi;
    return intersect && !x.contains(y) && !y.contains(x);
}

/// Inclusive range of values.
struct ValueRange {
    int min = 1;
    int max = 1;

    int width() const noexcept { return max - min + 1; }
    friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

enum class NodeKind { leaf, linear, prime };
enum class Sign { plus, minus };

inline char sign_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

class TreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotSeparableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A node of a (labeled or expanded) decomposition tree. `span`,
/// `value_range` and a leaf's `value` are decoration; they can always be
/// recomputed from the shape plus the signs and prime labels.
struct DecompNode {
    NodeKind kind = NodeKind::leaf;
    Sign sign = Sign::plus;  // linear nodes
    Pattern label;           // prime nodes: a simple permutation of size arity()
    int value = 0;           // leaves
    std::vector<DecompNode> children;
    IntervalSpan span;
    ValueRange value_range;

    static DecompNode make_leaf(int value = 0) {
        DecompNode n;
        n.value = value;
        n.value_range = {value, value};
        return n;
    }

    static DecompNode make_linear(Sign sign, std::vector<DecompNode> children) {
        DecompNode n;
        n.kind = NodeKind::linear;
        n.sign = sign;
        n.children = std::move(children);
        return n;
    }

    static DecompNode make_prime(Pattern label, std::vector<DecompNode> children) {
        DecompNode n;
        n.kind = NodeKind::prime;
        n.label = std::move(label);
        n.children = std::move(children);
        return n;
    }

    bool is_leaf() const noexcept { return kind == NodeKind::leaf; }
    std::size_t arity() const noexcept { return children.size(); }
};

struct DecompTree {
    DecompNode root;
    int source_size = 0;
    bool expanded = false;
};

/// Preorder traversal; `visit(node, depth)`.
template <typename Visit>
void for_each_node(const DecompNode& node, Visit&& visit, int depth = 0) {
    visit(node, depth);
    for (const auto& child : node.children) for_each_node(child, visit, depth + 1);
}

inline std::size_t leaf_count(const DecompNode& node) {
    if (node.is_leaf()) return 1;
    std::size_t total = 0;
    for (const auto& c : node.children) total += leaf_count(c);
    return total;
}

inline std::size_t node_count(const DecompNode& node) {
    std::size_t total = 0;
    for_each_node(node, [&](const DecompNode&, int) { ++total; });
    return total;
}

// ---------------------------------------------------------------------------
// Intervals

/// All spans [lo,hi] whose values form an integer interval, ordered by
/// (lo, hi). O(n^2) sweep with running min/max.
inline std::vector<IntervalSpan> common_intervals(const Permutation& sigma) {
    const auto& v = sigma.values();
    const int n = static_cast<int>(v.size());
    std::vector<IntervalSpan> out;
    for (int lo = 1; lo <= n; ++lo) {
        int mn = v[lo - 1], mx = v[lo - 1];
        for (int hi = lo; hi <= n; ++hi) {
            mn = std::min(mn, v[hi - 1]);
            mx = std::max(mx, v[hi - 1]);
            if (mx - mn == hi - lo) out.push_back({lo, hi});
        }
    }
    return out;
}

/// Common intervals overlapping no other common interval, ordered by (lo, hi).
inline std::vector<IntervalSpan> strong_intervals(const Permutation& sigma) {
    const auto common = common_intervals(sigma);
    std::vector<IntervalSpan> out;
    for (const auto& x : common) {
        bool strong = true;
        for (const auto& y : common) {
            if (overlaps(x, y)) {
                strong = false;
                break;
            }
        }
        if (strong) out.push_back(x);
    }
    return out;
}

/// A common interval other than a singleton or the whole permutation, if any.
inline std::optional<IntervalSpan> proper_common_interval(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    for (const auto& s : common_intervals(sigma)) {
        if (s.width() > 1 && s.width() < n) return s;
    }
    return std::nullopt;
}

/// Simple permutations usable as prime labels: size at least 4 and no proper
/// common interval.
inline bool is_simple(const Permutation& sigma) {
    return sigma.size() >= 4 && !proper_common_interval(sigma).has_value();
}

// ---------------------------------------------------------------------------
// Tree construction

namespace detail {

inline void type_internal_node(DecompNode& node) {
    const auto& ch = node.children;
    const std::size_t k = ch.size();
    bool increasing = true, decreasing = true;
    for (std::size_t t = 0; t + 1 < k; ++t) {
        if (ch[t + 1].value_range.min != ch[t].value_range.max + 1) increasing = false;
        if (ch[t + 1].value_range.max != ch[t].value_range.min - 1) decreasing = false;
    }
    if (k == 2) {
        node.kind = NodeKind::linear;
        node.sign = ch[0].value_range.min < ch[1].value_range.min ? Sign::plus : Sign::minus;
    } else if (increasing || decreasing) {
        node.kind = NodeKind::linear;
        node.sign = increasing ? Sign::plus : Sign::minus;
    } else {
        // Children's value ranges are disjoint, so ranking by minimum is total.
        std::vector<int> mins;
        mins.reserve(k);
        for (const auto& c : ch) mins.push_back(c.value_range.min);
        node.kind = NodeKind::prime;
        node.label = normalize(mins);
    }
}

} // namespace detail

/// The labeled (non-expanded) decomposition tree: the inclusion tree of strong
/// intervals, with linear nodes signed and prime nodes labeled by the simple
/// permutation ordering their children's values. Decoration is populated.
inline DecompTree decomposition_tree(const Permutation& sigma) {
    const auto& v = sigma.values();
    const int n = static_cast<int>(v.size());

    auto spans = strong_intervals(sigma);
    std::sort(spans.begin(), spans.end(), [](const IntervalSpan& x, const IntervalSpan& y) {
        return x.lo != y.lo ? x.lo < y.lo : x.hi > y.hi;
    });

    auto make_node = [&](const IntervalSpan& s) {
        DecompNode node;
        node.span = s;
        int mn = n + 1, mx = 0;
        for (int p = s.lo; p <= s.hi; ++p) {
            mn = std::min(mn, v[p - 1]);
            mx = std::max(mx, v[p - 1]);
        }
        node.value_range = {mn, mx};
        if (s.width() == 1) node.value = mn;
        return node;
    };

    auto finish = [](DecompNode& node) {
        if (!node.children.empty()) detail::type_internal_node(node);
    };

    // Spans arrive parent-before-child, left to right.
    std::vector<DecompNode> stack;
    for (const auto& s : spans) {
        while (!stack.empty() && !stack.back().span.contains(s)) {
            DecompNode done = std::move(stack.back());
            stack.pop_back();
            finish(done);
            stack.back().children.push_back(std::move(done));
        }
        stack.push_back(make_node(s));
    }
    while (stack.size() > 1) {
        DecompNode done = std::move(stack.back());
        stack.pop_back();
        finish(done);
        stack.back().children.push_back(std::move(done));
    }
    DecompTree tree;
    tree.root = std::move(stack.front());
    finish(tree.root);
    tree.source_size = n;
    tree.expanded = false;
    return tree;
}

namespace detail {

inline void validate_node(const DecompNode& node) {
    switch (node.kind) {
    case NodeKind::leaf:
        if (!node.children.empty()) throw TreeError("leaf node with children");
        break;
    case NodeKind::linear:
        if (node.children.size() < 2) throw TreeError("linear node with fewer than 2 children");
        break;
    case NodeKind::prime:
        if (node.children.size() < 4) throw TreeError("prime node with fewer than 4 children");
        if (node.label.size() != node.children.size())
            throw TreeError("prime label size " + std::to_string(node.label.size()) + " does not match arity " +
                            std::to_string(node.children.size()));
        break;
    }
    for (const auto& c : node.children) validate_node(c);
}

// Assigns positions [pos_lo, ...] and values [val_lo, ...] from shape and labels.
inline int decorate_node(DecompNode& node, int pos_lo, int val_lo) {
    if (node.is_leaf()) {
        node.value = val_lo;
        node.span = {pos_lo, pos_lo};
        node.value_range = {val_lo, val_lo};
        return 1;
    }
    const std::size_t k = node.children.size();
    std::vector<int> sizes(k);
    for (std::size_t t = 0; t < k; ++t) sizes[t] = static_cast<int>(leaf_count(node.children[t]));

    std::vector<int> offsets(k, 0);
    if (node.kind == NodeKind::linear && node.sign == Sign::plus) {
        for (std::size_t t = 1; t < k; ++t) offsets[t] = offsets[t - 1] + sizes[t - 1];
    } else if (node.kind == NodeKind::linear) {
        for (std::size_t t = k - 1; t-- > 0;) offsets[t] = offsets[t + 1] + sizes[t + 1];
    } else {
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t u = 0; u < k; ++u)
                if (node.label.values()[u] < node.label.values()[t]) offsets[t] += sizes[u];
    }

    int pos = pos_lo;
    int total = 0;
    for (std::size_t t = 0; t < k; ++t) {
        pos += decorate_node(node.children[t], pos, val_lo + offsets[t]);
        total += sizes[t];
    }
    node.span = {pos_lo, pos_lo + total - 1};
    node.value_range = {val_lo, val_lo + total - 1};
    return total;
}

} // namespace detail

/// Recomputes every decoration from the tree's shape, signs and prime labels.
inline DecompTree redecorate(DecompTree tree) {
    detail::validate_node(tree.root);
    tree.source_size = detail::decorate_node(tree.root, 1, 1);
    return tree;
}

/// Rebuilds σ from structure and labels alone; stored decoration is ignored.
inline Permutation tree_to_permutation(const DecompTree& tree) {
    const DecompTree decorated = redecorate(tree);
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(decorated.source_size));
    for_each_node(decorated.root, [&](const DecompNode& node, int) {
        if (node.is_leaf()) values.push_back(node.value);
    });
    return Permutation(std::move(values));
}

namespace detail {

inline DecompNode expand_node(const DecompNode& node) {
    if (node.is_leaf()) return node;
    std::vector<DecompNode> kids;
    kids.reserve(node.children.size());
    for (const auto& c : node.children) kids.push_back(expand_node(c));

    if (node.kind == NodeKind::prime || kids.size() <= 2) {
        DecompNode out = node;
        out.children = std::move(kids);
        return out;
    }
    // Left comb (...((V1,V2),V3),...,Vk).
    DecompNode acc = DecompNode::make_linear(node.sign, {std::move(kids[0]), std::move(kids[1])});
    for (std::size_t t = 2; t < kids.size(); ++t)
        acc = DecompNode::make_linear(node.sign, {std::move(acc), std::move(kids[t])});
    return acc;
}

} // namespace detail

/// Replaces each linear node of arity k by a left comb of k-1 binary nodes of
/// the same sign. Prime nodes keep their arity. Idempotent.
inline DecompTree expand_tree(const DecompTree& tree) {
    DecompTree out;
    out.root = detail::expand_node(tree.root);
    out.expanded = true;
    return redecorate(std::move(out));
}

inline std::size_t max_prime_arity(const DecompTree& tree) {
    std::size_t d = 0;
    for_each_node(tree.root, [&](const DecompNode& node, int) {
        if (node.kind == NodeKind::prime) d = std::max(d, node.arity());
    });
    return d;
}

inline bool is_separable(const Permutation& sigma) { return max_prime_arity(decomposition_tree(sigma)) == 0; }

/// The expanded decomposition tree of a separable permutation, which is one of
/// its binary separating trees.
inline DecompTree separating_tree(const Permutation& sigma) {
    auto tree = decomposition_tree(sigma);
    if (max_prime_arity(tree) != 0)
        throw NotSeparableError("permutation " + sigma.to_string() + " is not separable");
    return expand_tree(tree);
}

} // namespace permlcp
