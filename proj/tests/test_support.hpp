#pragma once

#include <wtp/partition.hpp>
#include <wtp/words.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace wtp_test {

/// Every set partition of [n] (restricted growth strings); the brute-force
/// oracle behind the noncrossing enumeration tests.
inline std::vector<wtp::Partition> all_set_partitions(int n) {
    std::vector<wtp::Partition> out;
    std::vector<int> code(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            int nblocks = maxv + 1;
            std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
            for (int t = 0; t < n; ++t) blocks[static_cast<size_t>(code[static_cast<size_t>(t)])].push_back(t + 1);
            out.push_back(wtp::Partition::make(n, blocks));
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            code[static_cast<size_t>(i)] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    if (n == 0) return out;
    rec(rec, 0, -1);
    return out;
}

/// Color adaptedness by the bracketing reduction: each block's brackets must
/// have identical gap-color neighbors at removal time, innermost blocks
/// first, until the extended coloring collapses to a single color. Kept
/// independent of the shift/reflection implementation on purpose.
inline bool bracketing_color_adapted(const wtp::Partition& pi, const wtp::Word& w) {
    if (pi.n != w.size()) return false;
    if (!wtp::is_noncrossing(pi)) return false;
    std::vector<int> gaps = wtp::extended_gap_coloring(w);
    std::vector<wtp::BlockStats> stats = wtp::all_block_stats(pi);
    std::vector<size_t> order(pi.blocks.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return stats[a].depth > stats[b].depth; });
    std::vector<char> alive(static_cast<size_t>(pi.n) + 1, 1);
    for (size_t idx : order) {
        const auto& b = pi.blocks[idx];
        int left = b.front() - 1;
        while (!alive[static_cast<size_t>(left)]) --left;
        int right = b.back();
        if (gaps[static_cast<size_t>(left)] != gaps[static_cast<size_t>(right)]) return false;
        for (int g = left + 1; g <= right; ++g) alive[static_cast<size_t>(g)] = 0;
    }
    return true;
}

/// Uniform-ish random noncrossing partition: a random Dyck path (cycle
/// lemma) gives a noncrossing pairing of [2n], pulled back through the
/// Kreweras restriction.
inline wtp::Partition random_noncrossing(int n, std::mt19937& gen) {
    std::vector<int> steps(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        steps[static_cast<size_t>(i)] = 1;
        steps[static_cast<size_t>(n + i)] = -1;
    }
    std::shuffle(steps.begin(), steps.end(), gen);
    // cycle lemma: rotate to the unique Dyck word
    int best = 0, sum = 0, min_sum = 0;
    for (int i = 0; i < 2 * n; ++i) {
        sum += steps[static_cast<size_t>(i)];
        if (sum < min_sum) {
            min_sum = sum;
            best = i + 1;
        }
    }
    std::rotate(steps.begin(), steps.begin() + best, steps.end());
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> stack;
    for (int i = 0; i < 2 * n; ++i) {
        if (steps[static_cast<size_t>(i)] == 1) {
            stack.push_back(i + 1);
        } else {
            pairs.emplace_back(stack.back(), i + 1);
            stack.pop_back();
        }
    }
    return wtp::kreweras_restrict(wtp::PairPartition::make(2 * n, pairs));
}

/// All noncrossing perfect matchings of [n].
inline std::vector<wtp::PairPartition> all_noncrossing_pairings(int n) {
    std::vector<wtp::PairPartition> out;
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    auto rec = [&](auto&& self) -> void {
        int first = 0;
        for (int i = 1; i <= n; ++i)
            if (!used[static_cast<size_t>(i)]) {
                first = i;
                break;
            }
        if (first == 0) {
            out.push_back(wtp::PairPartition::make(n, pairs));
            return;
        }
        for (int j = first + 1; j <= n; j += 2) {
            if (used[static_cast<size_t>(j)]) break;  // gap must stay even and contiguous
            bool free_span = true;
            for (int t = first; t <= j; ++t)
                if (used[static_cast<size_t>(t)]) free_span = false;
            if (!free_span) continue;
            used[static_cast<size_t>(first)] = used[static_cast<size_t>(j)] = 1;
            pairs.emplace_back(first, j);
            self(self);
            pairs.pop_back();
            used[static_cast<size_t>(first)] = used[static_cast<size_t>(j)] = 0;
        }
    };
    if (n % 2 == 0 && n > 0) rec(rec);
    return out;
}

}  // namespace wtp_test
