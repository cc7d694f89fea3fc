#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "concat.hpp"
#include "decomposition.hpp"
#include "oracle.hpp"
#include "perm.hpp"

namespace permlcp {

enum class Algorithm { automatic, separable, general, oracle };

inline std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::automatic: return "auto";
    case Algorithm::separable: return "separable";
    case Algorithm::general: return "general";
    case Algorithm::oracle: return "oracle";
    }
    return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) noexcept {
    if (s == "auto") return Algorithm::automatic;
    if (s == "separable") return Algorithm::separable;
    if (s == "general") return Algorithm::general;
    if (s == "oracle") return Algorithm::oracle;
    return std::nullopt;
}

struct LcpOptions {
    /// Break ties between longest candidates by the lexicographically smallest
    /// pattern (materializes a pattern per cell). Otherwise the first longest
    /// candidate in scan order wins.
    bool canonical = false;
    /// Skip candidates whose upper bound cannot beat the incumbent. Never
    /// changes the result.
    bool prune = true;
};

/// Address of a cell M(V, i, j, a, b): node V, positions i..j of τ, values a..b.
/// All indices 1-based; i > j or a > b denotes an empty slice.
struct CellKey {
    std::size_t node = 0;
    int i = 1, j = 0, a = 1, b = 0;

    bool empty_slice() const noexcept { return i > j || a > b; }
    friend bool operator==(const CellKey&, const CellKey&) = default;
};

enum class CombineOp { plus, minus, rho };

struct EmptyProvenance {};

struct LeafProvenance {
    int h = 0;  // τ position used
};

struct CombineProvenance {
    CombineOp op = CombineOp::plus;
    Pattern rho;                  // guide of a ρ-concatenation
    std::vector<int> index_cuts;  // i = h0 <= h1 <= ... <= hd = j+1
    std::vector<int> value_cuts;  // a = c0 <= c1 <= ... <= cd = b+1
    std::vector<CellKey> children;
};

using Provenance = std::variant<EmptyProvenance, LeafProvenance, CombineProvenance>;

struct Witness {
    Pattern pattern;
    Occurrence occ_sigma;
    Occurrence occ_tau;
};

/// The memo M(V, i, j, a, b) of the tree-guided dynamic program. Cells are
/// evaluated on demand (top-down) and hold a length plus a back-reference to
/// the split that produced it.
///
/// Linear nodes of arity k > 2 in the guide are binarized as a left comb, so
/// both labeled and expanded trees are accepted.
class DpTable {
public:
    struct GuideNode {
        NodeKind kind = NodeKind::leaf;
        Sign sign = Sign::plus;
        Pattern label;
        std::vector<std::size_t> children;
        int size = 1;            // number of leaves, |σ(V)|
        IntervalSpan span;       // positions of σ covered
        int sigma_position = 0;  // leaves
    };

    DpTable(const DecompTree& guide, Permutation tau, LcpOptions options = {})
        : tau_(std::move(tau)), options_(options) {
        const DecompTree expanded = expand_tree(guide);
        flatten(expanded.root);
        n_ = static_cast<int>(tau_.size());
        pair_index_.assign(static_cast<std::size_t>((n_ + 2) * (n_ + 2)), 0);
        int next = 0;
        for (int i = 1; i <= n_; ++i)
            for (int j = i; j <= n_; ++j) pair_index_[static_cast<std::size_t>(i * (n_ + 2) + j)] = next++;
        pairs_ = static_cast<std::size_t>(next);
        cells_.resize(nodes_.size());
        if (options_.canonical) patterns_.resize(nodes_.size());
    }

    std::size_t root() const noexcept { return 0; }
    const std::vector<GuideNode>& nodes() const noexcept { return nodes_; }
    const Permutation& tau() const noexcept { return tau_; }
    int sigma_size() const noexcept { return nodes_.front().size; }
    const LcpOptions& options() const noexcept { return options_; }

    CellKey root_cell() const noexcept { return {root(), 1, n_, 1, n_}; }

    /// The topmost guide node covering exactly these positions of σ.
    std::optional<std::size_t> node_for_span(IntervalSpan span) const {
        for (std::size_t v = 0; v < nodes_.size(); ++v)
            if (nodes_[v].span == span) return v;
        return std::nullopt;
    }

    /// Length of the longest common pattern stored in the cell, evaluating it
    /// and everything it depends on if needed.
    int length(const CellKey& key) {
        check(key);
        if (key.empty_slice()) return 0;
        return eval(key.node, key.i, key.j, key.a, key.b);
    }

    Provenance provenance(const CellKey& key) {
        if (length(key) == 0) return EmptyProvenance{};
        const Cell& cell = stored(key);
        const GuideNode& node = nodes_[key.node];
        switch (node.kind) {
        case NodeKind::leaf: return LeafProvenance{static_cast<int>(cell.ref)};
        case NodeKind::linear: {
            const int h = static_cast<int>(cell.ref) / (n_ + 2);
            const int c = static_cast<int>(cell.ref) % (n_ + 2);
            CombineProvenance p;
            p.op = node.sign == Sign::plus ? CombineOp::plus : CombineOp::minus;
            p.index_cuts = {key.i, h, key.j + 1};
            p.value_cuts = {key.a, c, key.b + 1};
            const auto [left, right] = linear_children(key, h, c);
            p.children = {left, right};
            return p;
        }
        case NodeKind::prime: {
            const auto& cuts = prime_choices_[cell.ref];
            const std::size_t d = node.children.size();
            CombineProvenance p;
            p.op = CombineOp::rho;
            p.rho = node.label;
            p.index_cuts.push_back(key.i);
            p.value_cuts.push_back(key.a);
            for (std::size_t t = 0; t + 1 < d; ++t) {
                p.index_cuts.push_back(cuts[t]);
                p.value_cuts.push_back(cuts[d - 1 + t]);
            }
            p.index_cuts.push_back(key.j + 1);
            p.value_cuts.push_back(key.b + 1);
            for (std::size_t k = 0; k < d; ++k) {
                const int r = node.label.values()[k];
                p.children.push_back({node.children[k], p.index_cuts[k], p.index_cuts[k + 1] - 1,
                                      p.value_cuts[static_cast<std::size_t>(r - 1)],
                                      p.value_cuts[static_cast<std::size_t>(r)] - 1});
            }
            return p;
        }
        }
        throw std::logic_error("unreachable node kind");
    }

    /// Follows back-references from `key` and rebuilds the pattern with one
    /// occurrence in σ and one in τ.
    Witness reconstruct(const CellKey& key) {
        length(key);
        return rebuild(key);
    }

    Pattern pattern(const CellKey& key) { return reconstruct(key).pattern; }

    Witness solve() { return reconstruct(root_cell()); }

    /// Number of non-empty cells evaluated so far.
    std::size_t evaluated_cells() const noexcept { return evaluated_; }

private:
    struct Cell {
        std::int32_t length = -1;
        std::uint32_t ref = 0;
    };

    // --- guide flattening ---------------------------------------------------

    std::size_t flatten(const DecompNode& node) {
        const std::size_t id = nodes_.size();
        nodes_.emplace_back();
        GuideNode g;
        g.kind = node.kind;
        g.sign = node.sign;
        g.label = node.label;
        g.span = node.span;
        g.size = node.span.width();
        if (node.is_leaf()) g.sigma_position = node.span.lo;
        for (const auto& c : node.children) g.children.push_back(flatten(c));
        nodes_[id] = std::move(g);
        return id;
    }

    // --- cell storage ---------------------------------------------------------

    void check(const CellKey& key) const {
        if (key.node >= nodes_.size()) throw std::out_of_range("cell node out of range");
        if (key.i < 1 || key.a < 1 || key.j > n_ || key.b > n_ || key.i > n_ + 1 || key.a > n_ + 1 ||
            key.j < 0 || key.b < 0)
            throw std::out_of_range("cell indices out of range");
    }

    std::size_t slot(int i, int j, int a, int b) const noexcept {
        const auto w = static_cast<std::size_t>(n_ + 2);
        return static_cast<std::size_t>(pair_index_[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j)]) *
                   pairs_ +
               static_cast<std::size_t>(pair_index_[static_cast<std::size_t>(a) * w + static_cast<std::size_t>(b)]);
    }

    Cell& cell_at(std::size_t v, int i, int j, int a, int b) {
        auto& block = cells_[v];
        if (block.empty()) {
            block.assign(pairs_ * pairs_, Cell{});
            if (options_.canonical) patterns_[v].resize(pairs_ * pairs_);
        }
        return block[slot(i, j, a, b)];
    }

    const Cell& stored(const CellKey& key) const {
        const auto& block = cells_[key.node];
        if (block.empty() || block[slot(key.i, key.j, key.a, key.b)].length < 0)
            throw std::logic_error("dangling provenance: cell not evaluated");
        return block[slot(key.i, key.j, key.a, key.b)];
    }

    const Pattern& canonical_pattern(std::size_t v, int i, int j, int a, int b) const {
        static const Pattern empty;
        if (i > j || a > b) return empty;
        return patterns_[v][slot(i, j, a, b)];
    }

    // --- evaluation -----------------------------------------------------------

    int eval(std::size_t v, int i, int j, int a, int b) {
        Cell& cell = cell_at(v, i, j, a, b);
        if (cell.length >= 0) return cell.length;
        switch (nodes_[v].kind) {
        case NodeKind::leaf: eval_leaf(v, i, j, a, b, cell); break;
        case NodeKind::linear: eval_linear(v, i, j, a, b, cell); break;
        case NodeKind::prime: eval_prime(v, i, j, a, b, cell); break;
        }
        ++evaluated_;
        return cell.length;
    }

    int len(std::size_t v, int i, int j, int a, int b) {
        if (i > j || a > b) return 0;
        return eval(v, i, j, a, b);
    }

    void eval_leaf(std::size_t v, int i, int j, int a, int b, Cell& cell) {
        cell.length = 0;
        for (int h = i; h <= j; ++h) {
            const int x = tau_.values()[static_cast<std::size_t>(h - 1)];
            if (a <= x && x <= b) {
                cell.length = 1;
                cell.ref = static_cast<std::uint32_t>(h);
                break;
            }
        }
        if (options_.canonical) patterns_[v][slot(i, j, a, b)] = cell.length ? Pattern{1} : Pattern{};
    }

    std::pair<CellKey, CellKey> linear_children(const CellKey& key, int h, int c) const {
        const GuideNode& node = nodes_[key.node];
        if (node.sign == Sign::plus)
            return {CellKey{node.children[0], key.i, h - 1, key.a, c - 1},
                    CellKey{node.children[1], h, key.j, c, key.b}};
        return {CellKey{node.children[0], key.i, h - 1, c, key.b}, CellKey{node.children[1], h, key.j, key.a, c - 1}};
    }

    // Longest over h in i..j+1 (outer) and c in a..b+1 (inner) of
    //   +: M(L, i, h-1, a, c-1) ⊕ M(R, h, j, c, b)
    //   -: M(L, i, h-1, c, b)   ⊖ M(R, h, j, a, c-1)
    void eval_linear(std::size_t v, int i, int j, int a, int b, Cell& cell) {
        const GuideNode& node = nodes_[v];
        const std::size_t left = node.children[0];
        const std::size_t right = node.children[1];
        const int left_size = nodes_[left].size;
        const int right_size = nodes_[right].size;
        const bool plus = node.sign == Sign::plus;
        const bool canonical = options_.canonical;
        const int cap = std::min({node.size, j - i + 1, b - a + 1});

        int best = 0, best_h = 0, best_c = 0;
        Pattern best_pattern;
        // A candidate bounded by `bound` cannot win when it cannot exceed the
        // incumbent (or, in canonical mode, cannot even tie it).
        auto hopeless = [&](int bound) { return canonical ? bound < best : bound <= best; };

        for (int h = i; h <= j + 1; ++h) {
            for (int c = a; c <= b + 1; ++c) {
                const int la = plus ? a : c, lb = plus ? c - 1 : b;
                const int ra = plus ? c : a, rb = plus ? b : c - 1;
                const int left_bound = std::min({left_size, h - i, std::max(0, lb - la + 1)});
                const int right_bound = std::min({right_size, j - h + 1, std::max(0, rb - ra + 1)});
                if (options_.prune && hopeless(left_bound + right_bound)) continue;
                const int lt = len(left, i, h - 1, la, lb);
                if (options_.prune && hopeless(lt + right_bound)) continue;
                const int rt = len(right, h, j, ra, rb);
                const int total = lt + rt;
                if (total > best) {
                    best = total;
                    best_h = h;
                    best_c = c;
                    if (canonical) best_pattern = combine_linear(plus, left, right, i, h, j, la, lb, ra, rb);
                } else if (canonical && total == best && total > 0) {
                    Pattern candidate = combine_linear(plus, left, right, i, h, j, la, lb, ra, rb);
                    if (candidate < best_pattern) {
                        best_pattern = std::move(candidate);
                        best_h = h;
                        best_c = c;
                    }
                }
                if (!canonical && best == cap) goto done;
            }
        }
    done:
        cell.length = best;
        cell.ref = best > 0 ? static_cast<std::uint32_t>(best_h * (n_ + 2) + best_c) : 0;
        if (canonical) patterns_[v][slot(i, j, a, b)] = std::move(best_pattern);
    }

    Pattern combine_linear(bool plus, std::size_t left, std::size_t right, int i, int h, int j, int la, int lb, int ra,
                           int rb) const {
        const Pattern& lp = canonical_pattern(left, i, h - 1, la, lb);
        const Pattern& rp = canonical_pattern(right, h, j, ra, rb);
        return plus ? concat_plus(lp, rp) : concat_minus(lp, rp);
    }

    // Longest over weakly increasing cut sequences i = h0 <= ... <= hd = j+1
    // (outer, lexicographic) and a = c0 <= ... <= cd = b+1 (inner) of
    // ⊙_ρ( M(V_k, h_{k-1}, h_k - 1, c_{ρ_k - 1}, c_{ρ_k} - 1) )_k.
    void eval_prime(std::size_t v, int i, int j, int a, int b, Cell& cell) {
        const GuideNode& node = nodes_[v];
        const std::size_t d = node.children.size();
        const bool canonical = options_.canonical;
        const int cap = std::min({node.size, j - i + 1, b - a + 1});

        // child_of_rank[r] = k with ρ_k = r (both 0-based here).
        std::vector<std::size_t> child_of_rank(d);
        for (std::size_t k = 0; k < d; ++k)
            child_of_rank[static_cast<std::size_t>(node.label.values()[k] - 1)] = k;

        std::vector<int> h(d + 1), c(d + 1);
        h[0] = i;
        h[d] = j + 1;
        c[0] = a;
        c[d] = b + 1;
        std::vector<int> idx_bound(d), child_len(d);

        int best = 0;
        std::vector<int> best_cuts;
        Pattern best_pattern;
        bool finished = false;
        auto hopeless = [&](int bound) { return canonical ? bound < best : bound <= best; };

        auto accept = [&](int total) {
            if (total > best) {
                best = total;
                best_cuts.assign(h.begin() + 1, h.end() - 1);
                best_cuts.insert(best_cuts.end(), c.begin() + 1, c.end() - 1);
                if (canonical) best_pattern = combine_prime(node, h, c);
                if (!canonical && best == cap) finished = true;
            } else if (canonical && total == best && total > 0) {
                Pattern candidate = combine_prime(node, h, c);
                if (candidate < best_pattern) {
                    best_pattern = std::move(candidate);
                    best_cuts.assign(h.begin() + 1, h.end() - 1);
                    best_cuts.insert(best_cuts.end(), c.begin() + 1, c.end() - 1);
                }
            }
        };

        // Chooses c[m]; value slice m (0-based rank m-1) is then fixed.
        auto choose_value_cut = [&](auto&& self, std::size_t m, int known, int pending_idx_bound) -> void {
            if (finished) return;
            auto settle = [&](int slice_hi) {
                const std::size_t k = child_of_rank[m - 1];
                const int lk = len(node.children[k], h[k], h[k + 1] - 1, c[m - 1], slice_hi);
                child_len[k] = lk;
                return lk;
            };
            if (m == d) {
                const int lk = settle(b);
                accept(known + lk);
                return;
            }
            for (int x = c[m - 1]; x <= b + 1 && !finished; ++x) {
                c[m] = x;
                const int lk = settle(x - 1);
                const std::size_t k = child_of_rank[m - 1];
                const int rest = pending_idx_bound - idx_bound[k];
                if (options_.prune && hopeless(known + lk + std::min(rest, b + 1 - x))) continue;
                self(self, m + 1, known + lk, rest);
            }
        };

        // Chooses h[m]; children 0..m-1 then have fixed index slices.
        auto choose_index_cut = [&](auto&& self, std::size_t m, int fixed_bound) -> void {
            if (finished) return;
            if (m == d) {
                const int k = static_cast<int>(d) - 1;
                idx_bound[static_cast<std::size_t>(k)] =
                    std::min(nodes_[node.children[d - 1]].size, h[d] - h[d - 1]);
                const int total_bound = fixed_bound + idx_bound[d - 1];
                if (options_.prune && hopeless(std::min(total_bound, b - a + 1))) return;
                choose_value_cut(choose_value_cut, 1, 0, total_bound);
                return;
            }
            int rest_size = 0;
            for (std::size_t k = m; k < d; ++k) rest_size += nodes_[node.children[k]].size;
            for (int x = h[m - 1]; x <= j + 1 && !finished; ++x) {
                h[m] = x;
                const std::size_t k = m - 1;
                idx_bound[k] = std::min(nodes_[node.children[k]].size, x - h[m - 1]);
                const int fixed = fixed_bound + idx_bound[k];
                if (options_.prune && hopeless(std::min(fixed + std::min(rest_size, j + 1 - x), b - a + 1)))
                    continue;
                self(self, m + 1, fixed);
            }
        };

        choose_index_cut(choose_index_cut, 1, 0);

        cell.length = best;
        if (best > 0) {
            cell.ref = static_cast<std::uint32_t>(prime_choices_.size());
            prime_choices_.push_back(std::move(best_cuts));
        }
        if (canonical) patterns_[v][slot(i, j, a, b)] = std::move(best_pattern);
    }

    Pattern combine_prime(const GuideNode& node, const std::vector<int>& h, const std::vector<int>& c) const {
        const std::size_t d = node.children.size();
        std::vector<Pattern> blocks;
        blocks.reserve(d);
        for (std::size_t k = 0; k < d; ++k) {
            const auto r = static_cast<std::size_t>(node.label.values()[k]);
            blocks.push_back(canonical_pattern(node.children[k], h[k], h[k + 1] - 1, c[r - 1], c[r] - 1));
        }
        return concat_rho(node.label, blocks);
    }

    // --- reconstruction -------------------------------------------------------

    struct Partial {
        Pattern pattern;
        std::vector<int> sigma_positions;
        std::vector<int> tau_positions;
    };

    Partial rebuild_partial(const CellKey& key) {
        if (key.empty_slice() || stored(key).length == 0) return {};
        const auto prov = provenance(key);
        if (const auto* leaf = std::get_if<LeafProvenance>(&prov))
            return {Pattern{1}, {nodes_[key.node].sigma_position}, {leaf->h}};

        const auto& comb = std::get<CombineProvenance>(prov);
        Partial out;
        std::vector<Pattern> blocks;
        for (const auto& child : comb.children) {
            Partial part = rebuild_partial(child);
            out.sigma_positions.insert(out.sigma_positions.end(), part.sigma_positions.begin(),
                                       part.sigma_positions.end());
            out.tau_positions.insert(out.tau_positions.end(), part.tau_positions.begin(), part.tau_positions.end());
            blocks.push_back(std::move(part.pattern));
        }
        switch (comb.op) {
        case CombineOp::plus: out.pattern = concat_plus(blocks[0], blocks[1]); break;
        case CombineOp::minus: out.pattern = concat_minus(blocks[0], blocks[1]); break;
        case CombineOp::rho: out.pattern = concat_rho(comb.rho, blocks); break;
        }
        if (static_cast<int>(out.pattern.size()) != stored(key).length)
            throw std::logic_error("reconstructed pattern length disagrees with cell length");
        return out;
    }

    Witness rebuild(const CellKey& key) {
        Partial p = rebuild_partial(key);
        return {std::move(p.pattern), Occurrence(std::move(p.sigma_positions)), Occurrence(std::move(p.tau_positions))};
    }

    Permutation tau_;
    LcpOptions options_;
    int n_ = 0;
    std::vector<GuideNode> nodes_;
    std::vector<int> pair_index_;
    std::size_t pairs_ = 0;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::vector<Pattern>> patterns_;
    std::vector<std::vector<int>> prime_choices_;
    std::size_t evaluated_ = 0;
};

// ---------------------------------------------------------------------------
// Entry points

enum class Guide { sigma, tau };

struct LcpResult {
    Pattern pattern;
    Occurrence occ_sigma;
    Occurrence occ_tau;
    Algorithm algorithm = Algorithm::general;
    Guide guide = Guide::sigma;
};

/// Prime arity from which the per-cell cost n^(2d-2) is flagged as large.
inline constexpr std::size_t kWarnPrimeArity = 6;

inline std::optional<std::string> complexity_warning(const DecompTree& guide, std::size_t tau_size) {
    const std::size_t d = max_prime_arity(guide);
    if (d < kWarnPrimeArity) return std::nullopt;
    return "guiding tree has a prime node of arity " + std::to_string(d) + "; per-cell work grows as n^" +
           std::to_string(2 * d - 2) + " with n = " + std::to_string(tau_size) + ", this may take very long";
}

/// Tree-guided program with only ⊕/⊖ nodes. Requires a guide without prime nodes.
inline LcpResult lcp_separable(const DecompTree& t_sigma, const Permutation& tau, LcpOptions options = {}) {
    if (max_prime_arity(t_sigma) != 0)
        throw NotSeparableError("lcp_separable: guiding tree contains a prime node");
    DpTable table(t_sigma, tau, options);
    Witness w = table.solve();
    return {std::move(w.pattern), std::move(w.occ_sigma), std::move(w.occ_tau), Algorithm::separable, Guide::sigma};
}

/// Tree-guided program with prime-node slicing; any guide.
inline LcpResult lcp_general(const DecompTree& t_sigma, const Permutation& tau, LcpOptions options = {}) {
    DpTable table(t_sigma, tau, options);
    Witness w = table.solve();
    return {std::move(w.pattern), std::move(w.occ_sigma), std::move(w.occ_tau), Algorithm::general, Guide::sigma};
}

/// Which program runs and which input guides it.
struct LcpPlan {
    Algorithm algorithm = Algorithm::general;
    Guide guide = Guide::sigma;
    std::optional<DecompTree> guide_tree;  // absent for the oracle
};

inline LcpPlan plan_lcp(const Permutation& sigma, const Permutation& tau, Algorithm algo) {
    switch (algo) {
    case Algorithm::oracle: return {Algorithm::oracle, Guide::sigma, std::nullopt};
    case Algorithm::separable: {
        auto tree = decomposition_tree(sigma);
        if (max_prime_arity(tree) != 0)
            throw NotSeparableError("permutation " + sigma.to_string() + " is not separable");
        return {Algorithm::separable, Guide::sigma, expand_tree(tree)};
    }
    case Algorithm::general: return {Algorithm::general, Guide::sigma, expand_tree(decomposition_tree(sigma))};
    case Algorithm::automatic: {
        auto ts = decomposition_tree(sigma);
        auto tt = decomposition_tree(tau);
        const auto ds = max_prime_arity(ts), dt = max_prime_arity(tt);
        const bool use_tau = dt < ds || (dt == ds && tau.size() < sigma.size());
        const auto d = use_tau ? dt : ds;
        return {d == 0 ? Algorithm::separable : Algorithm::general, use_tau ? Guide::tau : Guide::sigma,
                expand_tree(use_tau ? tt : ts)};
    }
    }
    throw std::logic_error("unreachable algorithm");
}

inline LcpResult run_lcp(const LcpPlan& plan, const Permutation& sigma, const Permutation& tau,
                         LcpOptions options = {}) {
    if (plan.algorithm == Algorithm::oracle) {
        OracleWitness w = oracle_lcp_witness(sigma, tau);
        return {std::move(w.pattern), std::move(w.occ_sigma), std::move(w.occ_tau), Algorithm::oracle, Guide::sigma};
    }
    const bool swap = plan.guide == Guide::tau;
    const Permutation& other = swap ? sigma : tau;
    LcpResult r = plan.algorithm == Algorithm::separable ? lcp_separable(*plan.guide_tree, other, options)
                                                         : lcp_general(*plan.guide_tree, other, options);
    if (swap) std::swap(r.occ_sigma, r.occ_tau);
    r.guide = plan.guide;
    return r;
}

/// Longest common pattern of σ and τ. `automatic` guides the program with the
/// input whose decomposition tree has the smaller prime arity (ties: the
/// shorter input, then σ).
inline LcpResult lcp(const Permutation& sigma, const Permutation& tau, Algorithm algo = Algorithm::automatic,
                     LcpOptions options = {}) {
    return run_lcp(plan_lcp(sigma, tau, algo), sigma, tau, options);
}

} // namespace permlcp
