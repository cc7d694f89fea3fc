#pragma once

// Generators and enumerators shared by the test suites.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <sys/wait.h>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "permlcp/permlcp.hpp"

namespace permlcp::testing {

/// Calls f(Permutation) for every permutation of size n, lexicographically.
template <typename F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        f(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

/// Random binary separating tree with n leaves (random split sizes and signs).
inline DecompNode random_separating_node(int n, std::mt19937& rng) {
    if (n == 1) return DecompNode::make_leaf();
    std::uniform_int_distribution<int> split(1, n - 1);
    std::bernoulli_distribution coin(0.5);
    const int left = split(rng);
    auto l = random_separating_node(left, rng);
    auto r = random_separating_node(n - left, rng);
    return DecompNode::make_linear(coin(rng) ? Sign::plus : Sign::minus, {std::move(l), std::move(r)});
}

inline Permutation random_separable(int n, std::mt19937& rng) {
    DecompTree t;
    t.root = random_separating_node(n, rng);
    return tree_to_permutation(t);
}

/// Every binary separating tree of the block of `values` (0-based [lo, hi]).
/// A split point qualifies when both halves are intervals of values lying
/// entirely below (sign +) or above (sign -) each other.
inline std::vector<DecompNode> separating_trees_of(const std::vector<int>& values, int lo, int hi) {
    if (lo == hi) return {DecompNode::make_leaf(values[static_cast<std::size_t>(lo)])};
    std::vector<DecompNode> out;
    for (int mid = lo; mid < hi; ++mid) {
        int lmin = values[static_cast<std::size_t>(lo)], lmax = lmin;
        for (int p = lo; p <= mid; ++p) {
            lmin = std::min(lmin, values[static_cast<std::size_t>(p)]);
            lmax = std::max(lmax, values[static_cast<std::size_t>(p)]);
        }
        int rmin = values[static_cast<std::size_t>(mid + 1)], rmax = rmin;
        for (int p = mid + 1; p <= hi; ++p) {
            rmin = std::min(rmin, values[static_cast<std::size_t>(p)]);
            rmax = std::max(rmax, values[static_cast<std::size_t>(p)]);
        }
        if (lmax - lmin != mid - lo || rmax - rmin != hi - mid - 1) continue;
        Sign sign;
        if (lmax + 1 == rmin)
            sign = Sign::plus;
        else if (rmax + 1 == lmin)
            sign = Sign::minus;
        else
            continue;
        const auto lefts = separating_trees_of(values, lo, mid);
        const auto rights = separating_trees_of(values, mid + 1, hi);
        for (const auto& l : lefts)
            for (const auto& r : rights) out.push_back(DecompNode::make_linear(sign, {l, r}));
    }
    return out;
}

inline std::vector<DecompTree> all_separating_trees(const Permutation& sigma) {
    std::vector<DecompTree> out;
    for (auto& root : separating_trees_of(sigma.values(), 0, static_cast<int>(sigma.size()) - 1)) {
        DecompTree t;
        t.root = std::move(root);
        t.expanded = true;
        out.push_back(redecorate(std::move(t)));
    }
    return out;
}

inline DecompNode leaf(int v = 0) { return DecompNode::make_leaf(v); }
inline DecompNode plus(std::vector<DecompNode> c) { return DecompNode::make_linear(Sign::plus, std::move(c)); }
inline DecompNode minus(std::vector<DecompNode> c) { return DecompNode::make_linear(Sign::minus, std::move(c)); }
inline DecompNode prime(Pattern label, std::vector<DecompNode> c) {
    return DecompNode::make_prime(std::move(label), std::move(c));
}

inline DecompTree make_tree(DecompNode root) {
    DecompTree t;
    t.root = std::move(root);
    return redecorate(std::move(t));
}

/// Order-isomorphism check of a result against both inputs.
inline bool witness_valid(const Permutation& sigma, const Permutation& tau, const Pattern& pattern,
                          const Occurrence& occ_sigma, const Occurrence& occ_tau) {
    return is_occurrence(sigma, pattern, occ_sigma) && is_occurrence(tau, pattern, occ_tau);
}

struct CommandResult {
    int status = -1;
    std::string output;
};

/// Runs a shell command, capturing standard output.
inline CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

} // namespace permlcp::testing
