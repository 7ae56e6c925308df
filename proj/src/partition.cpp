#include <wtp/partition.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace wtp {

int enumeration_cap() {
    if (const char* env = std::getenv("WTP_ENUM_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return kDefaultEnumCap;
}

namespace {

void check_cap(int n, int cap) {
    int limit = cap > 0 ? cap : enumeration_cap();
    if (n > limit) {
        throw CapExceeded("enumeration over [" + std::to_string(n) + "] exceeds cap " +
                          std::to_string(limit));
    }
}

std::vector<std::vector<int>> canonical_blocks(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

}  // namespace

Partition Partition::make(int n, std::vector<std::vector<int>> blocks) {
    if (n < 0) throw std::invalid_argument("Partition: n must be >= 0");
    Partition p;
    p.n = n;
    p.blocks = canonical_blocks(std::move(blocks));
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    int count = 0;
    for (const auto& b : p.blocks) {
        if (b.empty()) throw std::invalid_argument("Partition: empty block");
        for (size_t i = 0; i < b.size(); ++i) {
            int v = b[i];
            if (v < 1 || v > n) throw std::invalid_argument("Partition: element out of range");
            if (i > 0 && b[i - 1] >= v)
                throw std::invalid_argument("Partition: duplicate element in block");
            if (seen[v]) throw std::invalid_argument("Partition: element in two blocks");
            seen[v] = 1;
            ++count;
        }
    }
    if (count != n) throw std::invalid_argument("Partition: blocks do not cover [n]");
    return p;
}

PairPartition PairPartition::make(int n, std::vector<std::pair<int, int>> pairs) {
    if (n % 2 != 0) throw std::invalid_argument("PairPartition: n must be even");
    std::vector<std::vector<int>> blocks;
    blocks.reserve(pairs.size());
    for (auto& pr : pairs) blocks.push_back({pr.first, pr.second});
    Partition p = Partition::make(n, std::move(blocks));
    PairPartition s;
    s.n = n;
    for (const auto& b : p.blocks) {
        if (b.size() != 2) throw std::invalid_argument("PairPartition: block is not a pair");
        s.pairs.emplace_back(b[0], b[1]);
    }
    return s;
}

Partition PairPartition::as_partition() const {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(pairs.size());
    for (const auto& pr : pairs) blocks.push_back({pr.first, pr.second});
    return Partition::make(n, std::move(blocks));
}

PairPartition PairPartition::from_partition(const Partition& p) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(p.blocks.size());
    for (const auto& b : p.blocks) {
        if (b.size() != 2)
            throw std::invalid_argument("from_partition: block of size != 2");
        pairs.emplace_back(b[0], b[1]);
    }
    return PairPartition::make(p.n, std::move(pairs));
}

bool is_noncrossing(const Partition& p) {
    // sweep with a stack of open blocks; a block must be on top when revisited
    std::vector<int> block_of(static_cast<size_t>(p.n) + 1, -1);
    std::vector<int> last_of(p.blocks.size());
    for (size_t i = 0; i < p.blocks.size(); ++i) {
        for (int v : p.blocks[i]) block_of[v] = static_cast<int>(i);
        last_of[i] = p.blocks[i].back();
    }
    std::vector<int> stack;
    for (int t = 1; t <= p.n; ++t) {
        int b = block_of[t];
        if (p.blocks[b].front() == t) {
            stack.push_back(b);
        } else {
            if (stack.empty() || stack.back() != b) return false;
        }
        if (last_of[b] == t) stack.pop_back();
    }
    return true;
}

bool is_noncrossing(const PairPartition& s) { return is_noncrossing(s.as_partition()); }

std::vector<BlockStats> all_block_stats(const Partition& p) {
    if (!is_noncrossing(p)) throw std::invalid_argument("block stats need a noncrossing partition");
    std::vector<int> block_of(static_cast<size_t>(p.n) + 1, -1);
    for (size_t i = 0; i < p.blocks.size(); ++i)
        for (int v : p.blocks[i]) block_of[v] = static_cast<int>(i);

    std::vector<BlockStats> stats(p.blocks.size());
    std::vector<int> stack;  // open block indices, outermost first
    for (int t = 1; t <= p.n; ++t) {
        int b = block_of[t];
        if (p.blocks[b].front() == t) {
            stats[b].depth = static_cast<int>(stack.size()) + 1;
            if (!stack.empty()) ++stats[stack.back()].nearest_inner_count;
            stack.push_back(b);
        }
        if (p.blocks[b].back() == t) stack.pop_back();
    }
    return stats;
}

BlockStats block_stats(const Partition& p, int block_index) {
    if (block_index < 0 || block_index >= static_cast<int>(p.blocks.size()))
        throw std::out_of_range("block_stats: bad block index");
    return all_block_stats(p)[block_index];
}

std::vector<int> as_permutation(const Partition& p) {
    std::vector<int> perm(static_cast<size_t>(p.n) + 1, 0);
    for (const auto& b : p.blocks) {
        for (size_t i = 0; i + 1 < b.size(); ++i) perm[b[i]] = b[i + 1];
        perm[b.back()] = b.front();
    }
    return perm;
}

Partition partition_from_permutation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size()) - 1;
    std::vector<char> seen(perm.size(), 0);
    std::vector<std::vector<int>> blocks;
    for (int s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cycle;
        int t = s;
        while (!seen[t]) {
            seen[t] = 1;
            cycle.push_back(t);
            t = perm[t];
            if (t < 1 || t > n) throw std::invalid_argument("not a permutation of [n]");
        }
        blocks.push_back(std::move(cycle));
    }
    return Partition::make(n, std::move(blocks));
}

Partition kreweras_complement(const Partition& p) {
    if (!is_noncrossing(p)) throw std::invalid_argument("kreweras_complement needs noncrossing input");
    std::vector<int> perm = as_permutation(p);
    std::vector<int> inv(perm.size(), 0);
    for (int s = 1; s <= p.n; ++s) inv[perm[s]] = s;
    // K(pi) has cycles of s -> pi^{-1}(s mod n + 1)
    std::vector<int> kperm(perm.size(), 0);
    for (int s = 1; s <= p.n; ++s) kperm[s] = inv[s % p.n + 1];
    return partition_from_permutation(kperm);
}

Partition kreweras_restrict(const PairPartition& s) {
    if (!is_noncrossing(s)) throw std::invalid_argument("kreweras_restrict needs noncrossing input");
    Partition k = kreweras_complement(s.as_partition());
    int n = s.n / 2;
    std::vector<std::vector<int>> blocks;
    for (const auto& b : k.blocks) {
        std::vector<int> odd;
        for (int v : b)
            if (v % 2 == 1) odd.push_back((v + 1) / 2);
        if (!odd.empty()) blocks.push_back(std::move(odd));
    }
    return Partition::make(n, std::move(blocks));
}

Partition rotate_down(const Partition& p) {
    std::vector<std::vector<int>> blocks = p.blocks;
    for (auto& b : blocks)
        for (int& v : b) v = (v == 1) ? p.n : v - 1;
    return Partition::make(p.n, std::move(blocks));
}

std::string format_partition(const Partition& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.blocks.size(); ++i) {
        if (i) os << '|';
        for (size_t j = 0; j < p.blocks[i].size(); ++j) {
            if (j) os << ',';
            os << p.blocks[i][j];
        }
    }
    return os.str();
}

Partition parse_partition(int n, const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, '|')) {
        std::vector<int> block;
        std::istringstream bs(part);
        std::string tok;
        while (std::getline(bs, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad partition literal: " + tok);
            block.push_back(v);
        }
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return Partition::make(n, std::move(blocks));
}

void for_each_noncrossing(int n, const std::function<void(const Partition&)>& visit, int cap) {
    check_cap(n, cap);
    for_each_noncrossing_filtered(
        n, [](const std::vector<int>&, int) { return true; },
        [](const std::vector<int>&) { return true; },
        [&](const std::vector<std::vector<int>>& blocks) {
            visit(Partition::make(n, blocks));
        });
}

std::vector<Partition> enumerate_noncrossing(int n, int cap) {
    std::vector<Partition> out;
    for_each_noncrossing(n, [&](const Partition& p) { out.push_back(p); }, cap);
    return out;
}

}  // namespace wtp
