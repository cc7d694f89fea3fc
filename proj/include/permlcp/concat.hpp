#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"

namespace permlcp {

/// pi ⊕ pi2: pi2 placed to the right of and above pi.
inline Pattern concat_plus(const Pattern& pi, const Pattern& pi2) {
    const int k = static_cast<int>(pi.size());
    std::vector<int> out(pi.values());
    out.reserve(pi.size() + pi2.size());
    for (int v : pi2.values()) out.push_back(v + k);
    return Pattern(std::move(out));
}

/// pi ⊖ pi2: pi2 placed to the right of and below pi.
inline Pattern concat_minus(const Pattern& pi, const Pattern& pi2) {
    const int k2 = static_cast<int>(pi2.size());
    std::vector<int> out;
    out.reserve(pi.size() + pi2.size());
    for (int v : pi.values()) out.push_back(v + k2);
    out.insert(out.end(), pi2.values().begin(), pi2.values().end());
    return Pattern(std::move(out));
}

/// ρ-concatenation: block i keeps its position and is shifted up by the total
/// size of the blocks whose ρ-rank is below ρ_i. Empty blocks contribute nothing.
inline Pattern concat_rho(const Pattern& rho, std::span<const Pattern> blocks) {
    if (rho.empty()) throw std::invalid_argument("concat_rho: empty guide permutation");
    if (blocks.size() != rho.size()) {
        throw std::invalid_argument("concat_rho: " + std::to_string(blocks.size()) + " blocks for a guide of size " +
                                    std::to_string(rho.size()));
    }
    const std::size_t d = rho.size();

    // shift_by_rank[r] = total size of blocks whose rank is < r.
    std::vector<int> size_by_rank(d + 1, 0);
    for (std::size_t i = 0; i < d; ++i) size_by_rank[static_cast<std::size_t>(rho.values()[i])] =
        static_cast<int>(blocks[i].size());
    std::vector<int> shift_by_rank(d + 1, 0);
    for (std::size_t r = 2; r <= d; ++r) shift_by_rank[r] = shift_by_rank[r - 1] + size_by_rank[r - 1];

    std::vector<int> out;
    for (std::size_t i = 0; i < d; ++i) {
        const int shift = shift_by_rank[static_cast<std::size_t>(rho.values()[i])];
        for (int v : blocks[i].values()) out.push_back(v + shift);
    }
    return Pattern(std::move(out));
}

inline Pattern concat_rho(const Pattern& rho, std::initializer_list<Pattern> blocks) {
    return concat_rho(rho, std::span<const Pattern>(blocks.begin(), blocks.size()));
}

} // namespace permlcp
