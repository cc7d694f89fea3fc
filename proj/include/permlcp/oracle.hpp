#pragma once

// Brute-force reference implementations. Everything here is re-derived from
// the definitions and deliberately avoids calling into the decomposition and
// dynamic-programming code it is used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"

namespace permlcp {

inline constexpr std::size_t kOracleMaxSize = 12;

class OracleLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

struct OracleWitness {
    Pattern pattern;
    Occurrence occ_sigma;
    Occurrence occ_tau;
};

namespace oracle_detail {

inline std::vector<int> ranks(const std::vector<int>& xs) {
    std::vector<int> out(xs.size());
    for (std::size_t p = 0; p < xs.size(); ++p) {
        int r = 1;
        for (std::size_t q = 0; q < xs.size(); ++q)
            if (xs[q] < xs[p]) ++r;
        out[p] = r;
    }
    return out;
}

// Exhaustive search for positions in `host` realising `pat`; checks every
// pair of chosen entries against the pattern.
inline bool embed(const std::vector<int>& host, const std::vector<int>& pat, std::vector<int>& chosen,
                  std::size_t from) {
    const std::size_t l = chosen.size();
    if (l == pat.size()) return true;
    for (std::size_t p = from; p < host.size(); ++p) {
        bool ok = true;
        for (std::size_t m = 0; m < l && ok; ++m) {
            const bool host_less = host[p] < host[static_cast<std::size_t>(chosen[m])];
            const bool pat_less = pat[l] < pat[m];
            ok = host_less == pat_less;
        }
        if (!ok) continue;
        chosen.push_back(static_cast<int>(p));
        if (embed(host, pat, chosen, p + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

inline std::vector<int> to_one_based(const std::vector<int>& zero_based) {
    std::vector<int> out(zero_based);
    for (int& x : out) ++x;
    return out;
}

} // namespace oracle_detail

/// Longest common pattern by exhaustion: subsets of the smaller input are
/// tried in decreasing size until one embeds in the other input.
inline OracleWitness oracle_lcp_witness(const Permutation& sigma, const Permutation& tau) {
    const bool swap = tau.size() < sigma.size();
    const auto& small = swap ? tau.values() : sigma.values();
    const auto& large = swap ? sigma.values() : tau.values();
    if (small.size() > kOracleMaxSize) {
        throw OracleLimitError("oracle_lcp: smaller input has size " + std::to_string(small.size()) +
                               ", limit is " + std::to_string(kOracleMaxSize));
    }
    const std::size_t k = small.size();

    for (std::size_t m = k; m >= 1; --m) {
        std::set<std::vector<int>> tried;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
            std::vector<int> picked, picked_values;
            for (std::size_t p = 0; p < k; ++p) {
                if (mask & (std::uint32_t{1} << p)) {
                    picked.push_back(static_cast<int>(p));
                    picked_values.push_back(small[p]);
                }
            }
            auto pat = oracle_detail::ranks(picked_values);
            if (!tried.insert(pat).second) continue;
            std::vector<int> chosen;
            if (oracle_detail::embed(large, pat, chosen, 0)) {
                Occurrence in_small(oracle_detail::to_one_based(picked));
                Occurrence in_large(oracle_detail::to_one_based(chosen));
                OracleWitness w{Pattern(std::move(pat)), {}, {}};
                w.occ_sigma = swap ? in_large : in_small;
                w.occ_tau = swap ? in_small : in_large;
                return w;
            }
        }
    }
    throw std::logic_error("oracle_lcp: no common entry found between non-empty permutations");
}

inline Pattern oracle_lcp(const Permutation& sigma, const Permutation& tau) {
    return oracle_lcp_witness(sigma, tau).pattern;
}

/// Simple permutation by direct definition, O(n^3): no block of 2..n-1
/// consecutive entries has consecutive values. Sizes below 4 are rejected
/// (sizes 1-2 are linear, size 3 always has a proper block).
inline bool oracle_is_simple(const Permutation& sigma) {
    const auto& v = sigma.values();
    const std::size_t n = v.size();
    if (n < 4) return false;
    for (std::size_t lo = 0; lo < n; ++lo) {
        for (std::size_t hi = lo + 1; hi < n; ++hi) {
            if (lo == 0 && hi == n - 1) continue;
            int mn = v[lo], mx = v[lo];
            for (std::size_t p = lo; p <= hi; ++p) {
                mn = std::min(mn, v[p]);
                mx = std::max(mx, v[p]);
            }
            if (static_cast<std::size_t>(mx - mn) == hi - lo) return false;
        }
    }
    return true;
}

/// Separable iff no four entries form 3 1 4 2 or 2 4 1 3.
inline bool oracle_separable(const Permutation& sigma) {
    const auto& v = sigma.values();
    const std::size_t n = v.size();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            for (std::size_t r = q + 1; r < n; ++r)
                for (std::size_t s = r + 1; s < n; ++s) {
                    const int w = v[p], x = v[q], y = v[r], z = v[s];
                    // 3 1 4 2: x < z < w < y
                    if (x < z && z < w && w < y) return false;
                    // 2 4 1 3: y < w < z < x
                    if (y < w && w < z && z < x) return false;
                }
    return true;
}

} // namespace permlcp
