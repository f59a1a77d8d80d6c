#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qhr/errors.hpp"
#include "qhr/partition.hpp"

namespace qhr {

/// Steps of strictly increasing, pairwise adjacent partitions.
struct OrbitChain {
    std::vector<Partition> steps;
};

namespace detail {
inline void require_same_n(const Partition& a, const Partition& b) {
    if (a.n() != b.n())
        throw DomainError("partitions of different sizes: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}
} // namespace detail

/// Partial-sum comparison after zero padding.
inline bool dominance_leq(const Partition& lam, const Partition& mu) {
    detail::require_same_n(lam, mu);
    const std::size_t len = std::max(lam.length(), mu.length());
    const auto a = lam.partial_sums(len);
    const auto b = mu.partial_sums(len);
    for (std::size_t k = 0; k < len; ++k)
        if (a[k] > b[k]) return false;
    return true;
}

inline bool dominance_less(const Partition& lam, const Partition& mu) { return lam != mu && dominance_leq(lam, mu); }

/// The (i, j), 1-based with i < j, for which mu is obtained from lam by moving one box
/// from row j up to row i, all rows strictly between having the length of row j.
inline std::optional<std::pair<int, int>> box_move_witness(const Partition& lam, const Partition& mu) {
    detail::require_same_n(lam, mu);
    const int len = static_cast<int>(std::max(lam.length(), mu.length()));
    int i = 0, j = 0;
    for (int k = 1; k <= len; ++k)
        if (lam.part(k) != mu.part(k)) {
            if (i == 0) i = k;
            j = k;
        }
    if (i == 0 || i == j) return std::nullopt;
    if (lam.part(i) != mu.part(i) - 1) return std::nullopt;
    if (lam.part(j) != mu.part(j) + 1) return std::nullopt;
    for (int k = i + 1; k < j; ++k)
        if (lam.part(k) != lam.part(j) || mu.part(k) != lam.part(k)) return std::nullopt;
    return std::pair{i, j};
}

inline bool satisfies_box_move(const Partition& lam, const Partition& mu) {
    return box_move_witness(lam, mu).has_value();
}

/// Covering relation of the dominance order, via the box-move criterion
/// with either j = i + 1 or lam_i = lam_{i+1}.
inline bool is_adjacent(const Partition& lam, const Partition& mu) {
    const auto w = box_move_witness(lam, mu);
    if (!w) return false;
    const auto [i, j] = *w;
    return j == i + 1 || lam.part(i) == lam.part(i + 1);
}

/// All partitions of n in reverse-lexicographic order ([n] first, [1^n] last).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw DomainError("negative n");
    std::vector<Partition> out;
    if (n == 0) return out;
    std::vector<int> cur{n};
    while (true) {
        out.emplace_back(cur);
        // rightmost part > 1
        int k = static_cast<int>(cur.size()) - 1;
        int ones = 0;
        while (k >= 0 && cur[k] == 1) {
            ++ones;
            --k;
        }
        if (k < 0) break;
        int rem = ones + 1;
        const int m = --cur[k];
        cur.resize(k + 1);
        while (rem > 0) {
            cur.push_back(std::min(m, rem));
            rem -= cur.back();
        }
    }
    return out;
}

inline std::vector<Partition> covers_of(const Partition& lam) {
    std::vector<Partition> out;
    for (auto& mu : partitions_of(lam.n()))
        if (is_adjacent(lam, mu)) out.push_back(std::move(mu));
    return out;
}

/// Adjacent chain from lam up to mu; at every step the dominance-smallest admissible cover
/// (lexicographically least partial sums) is taken.
inline OrbitChain reduction_path(const Partition& lam, const Partition& mu) {
    if (!dominance_leq(lam, mu))
        throw NoPathError("no reduction path: [" + lam.str() + "] is not dominated by [" + mu.str() + "]");
    OrbitChain chain{{lam}};
    const std::size_t len = static_cast<std::size_t>(lam.n());
    while (chain.steps.back() != mu) {
        std::optional<Partition> best;
        for (auto& nu : covers_of(chain.steps.back())) {
            if (!dominance_leq(nu, mu)) continue;
            if (!best || nu.partial_sums(len) < best->partial_sums(len)) best = std::move(nu);
        }
        if (!best) throw NoPathError("cover graph exhausted before reaching [" + mu.str() + "]");
        chain.steps.push_back(std::move(*best));
    }
    return chain;
}

} // namespace qhr
