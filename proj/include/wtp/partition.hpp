#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wtp {

/// Default guard for exhaustive enumerations over a ground set; overridable
/// per call and through the WTP_ENUM_CAP environment variable (see
/// enumeration_cap()).
inline constexpr int kDefaultEnumCap = 24;

/// Effective enumeration cap: WTP_ENUM_CAP if set, else kDefaultEnumCap.
int enumeration_cap();

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Set partition of [n]. Blocks are kept sorted internally and ordered by
/// their minimum, so equality is structural.
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    static Partition make(int n, std::vector<std::vector<int>> blocks);

    bool operator==(const Partition&) const = default;
};

/// Perfect matching of [n] (n even), pairs ordered (lo, hi) and sorted by lo.
struct PairPartition {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;

    static PairPartition make(int n, std::vector<std::pair<int, int>> pairs);

    Partition as_partition() const;
    /// Requires every block to have exactly two elements.
    static PairPartition from_partition(const Partition& p);

    bool operator==(const PairPartition&) const = default;
};

struct BlockStats {
    int depth = 0;                // outermost blocks have depth 1
    int nearest_inner_count = 0;  // number of blocks one level below
};

bool is_noncrossing(const Partition& p);
bool is_noncrossing(const PairPartition& s);

/// Stats for one block (index into p.blocks). Requires p noncrossing.
BlockStats block_stats(const Partition& p, int block_index);

/// Stats for every block of a noncrossing partition, in block order.
std::vector<BlockStats> all_block_stats(const Partition& p);

/// Cycle view: each block {s1<...<sm} becomes s1->s2->...->sm->s1.
/// Returned vector is 1-based (index 0 unused).
std::vector<int> as_permutation(const Partition& p);

/// Rebuilds the partition from the cycles of a permutation of [n].
Partition partition_from_permutation(const std::vector<int>& perm);

/// Kreweras complement of a noncrossing partition of [n].
Partition kreweras_complement(const Partition& p);

/// K restricted to odd positions of [2n], relabelled 2i-1 -> i.
/// Input must be a noncrossing pair partition of [2n].
Partition kreweras_restrict(const PairPartition& s);

/// Cyclic relabelling s -> s-1 (1 -> n); K(K(pi)) equals this rotation of pi.
Partition rotate_down(const Partition& p);

/// Canonical text form "1,8|2,3,4,5|6,7".
std::string format_partition(const Partition& p);
Partition parse_partition(int n, const std::string& text);

/// Enumerates noncrossing partitions of [n] by left-to-right block growth,
/// pruning through the two filters:
///   can_extend(members, t): may position t join the innermost open block?
///   can_close(members):     may this block be completed as-is?
/// emit receives the closed blocks (in completion order) of each partition.
template <class CanExtend, class CanClose, class Emit>
void for_each_noncrossing_filtered(int n, CanExtend&& can_extend, CanClose&& can_close,
                                   Emit&& emit) {
    std::vector<std::vector<int>> open;
    std::vector<std::vector<int>> closed;

    auto rec = [&](auto&& self, int t) -> void {
        if (t > n) {
            if (open.empty()) emit(const_cast<const std::vector<std::vector<int>>&>(closed));
            return;
        }
        // every open block still needs an element of its own
        if (static_cast<int>(open.size()) > n - t + 1) return;
        // join the innermost open block
        if (!open.empty() && can_extend(open.back(), t)) {
            open.back().push_back(t);
            if (can_close(open.back())) {
                closed.push_back(open.back());
                open.pop_back();
                self(self, t + 1);
                open.push_back(closed.back());
                closed.pop_back();
            }
            self(self, t + 1);
            open.back().pop_back();
        }
        // start a new block at t
        std::vector<int> fresh{t};
        if (can_close(fresh)) {
            closed.push_back(fresh);
            self(self, t + 1);
            closed.pop_back();
        }
        open.push_back(std::move(fresh));
        self(self, t + 1);
        open.pop_back();
    };
    rec(rec, 1);
}

/// All noncrossing partitions of [n], canonical form, deterministic order.
/// Throws CapExceeded when n exceeds the cap.
std::vector<Partition> enumerate_noncrossing(int n, int cap = -1);

/// Streaming variant of enumerate_noncrossing.
void for_each_noncrossing(int n, const std::function<void(const Partition&)>& visit,
                          int cap = -1);

}  // namespace wtp
