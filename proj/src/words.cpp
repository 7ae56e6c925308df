#include <wtp/words.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wtp {

std::vector<int> labels_same(int p) { return std::vector<int>(static_cast<size_t>(p), 0); }

std::vector<int> labels_distinct(int p) {
    std::vector<int> v(static_cast<size_t>(p));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Word make_W(int p, const std::vector<int>& labels) {
    if (p < 1) throw std::invalid_argument("make_W: p must be >= 1");
    if (static_cast<int>(labels.size()) != p)
        throw std::invalid_argument("make_W: need exactly p labels");
    Word w;
    w.num_colors = p;
    w.letters.reserve(2 * static_cast<size_t>(p));
    for (int j = 1; j <= p; ++j) w.letters.push_back({j, false, labels[j - 1]});
    for (int j = p; j >= 1; --j) w.letters.push_back({j, true, labels[j - 1]});
    return w;
}

Word make_Wtilde(int p, const std::vector<int>& labels) {
    if (p < 1) throw std::invalid_argument("make_Wtilde: p must be >= 1");
    if (static_cast<int>(labels.size()) != p)
        throw std::invalid_argument("make_Wtilde: need exactly p labels");
    Word w;
    w.num_colors = 2 * p;
    for (int c = 1; c <= 2 * p; ++c) w.letters.push_back({c, false, labels[(c - 1) / 2]});
    for (int c = 2 * p; c >= 1; --c) w.letters.push_back({c, true, labels[(c - 1) / 2]});
    return w;
}

Word make_W0(int p, const std::vector<int>& labels) {
    Word wt = make_Wtilde(p, labels);
    Word w;
    w.num_colors = 2 * p;
    w.letters.push_back({1, false, 0});
    for (int j = 1; j < p; ++j) {
        w.letters.push_back({2 * j, false, 0});
        w.letters.push_back({2 * j, true, 0});
    }
    w.letters.push_back({2 * p, false, 0});
    w.letters.push_back({2 * p, true, 0});
    for (int j = p - 1; j >= 1; --j) {
        w.letters.push_back({2 * j, false, 0});
        w.letters.push_back({2 * j, true, 0});
    }
    w.letters.push_back({1, true, 0});
    for (size_t i = 0; i < w.letters.size(); ++i) w.letters[i].label = wt.letters[i].label;
    return w;
}

namespace {

Word alternating_word(int n, int label, bool star_first) {
    if (n < 0) throw std::invalid_argument("alternating word: n must be >= 0");
    const std::vector<Letter> w1star{{1, true, label}, {1, false, label}};
    const std::vector<Letter> w2{{2, false, label}, {2, true, label}};
    Word w;
    w.num_colors = 2;
    for (int i = 0; i < n; ++i) {
        const auto& piece = ((i % 2 == 0) == star_first) ? w1star : w2;
        w.letters.insert(w.letters.end(), piece.begin(), piece.end());
    }
    return w;
}

}  // namespace

Word make_Un(int n, int label) { return alternating_word(n, label, true); }
Word make_Un_prime(int n, int label) { return alternating_word(n, label, false); }

Word word_power(const Word& w, int k) {
    if (k < 1) throw std::invalid_argument("word_power: k must be >= 1");
    Word out;
    out.num_colors = w.num_colors;
    out.letters.reserve(w.letters.size() * static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    return out;
}

Word cyclic_shift(const Word& w, int offset) {
    Word out;
    out.num_colors = w.num_colors;
    int n = w.size();
    out.letters.reserve(w.letters.size());
    for (int i = 0; i < n; ++i) out.letters.push_back(w.letters[(i + offset) % n]);
    return out;
}

std::string format_word(const Word& w, const std::function<std::string(int)>& label_name) {
    std::ostringstream os;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << w.letters[i].color;
        if (w.letters[i].starred) os << '*';
        os << '@' << label_name(w.letters[i].label);
    }
    return os.str();
}

int segment_color(const Letter& l) { return l.starred ? l.color : l.color + 1; }

std::vector<int> segment_coloring(const std::vector<Letter>& block_legs) {
    if (block_legs.empty()) throw std::invalid_argument("segment_coloring: empty block");
    std::vector<int> colors;
    colors.reserve(block_legs.size() - 1);
    for (size_t i = 0; i + 1 < block_legs.size(); ++i)
        colors.push_back(segment_color(block_legs[i]));
    return colors;
}

std::vector<int> extended_gap_coloring(const Word& w) {
    std::vector<int> gaps(static_cast<size_t>(w.size()) + 1);
    gaps[0] = segment_color(w.letters.back());
    for (int t = 1; t <= w.size(); ++t) gaps[t] = segment_color(w.at(t));
    return gaps;
}

bool adapted_edge(const Letter& from, const Letter& to) {
    if (!from.starred) {
        if (!to.starred) return to.color == from.color + 1;
        return to.color == from.color;
    }
    if (to.starred) return to.color == from.color - 1;
    return to.color == from.color;
}

bool is_color_adapted(const Partition& p, const Word& w) {
    if (p.n != w.size()) throw std::invalid_argument("is_color_adapted: size mismatch");
    for (const auto& b : p.blocks) {
        for (size_t i = 0; i < b.size(); ++i) {
            const Letter& from = w.at(b[i]);
            const Letter& to = w.at(b[(i + 1) % b.size()]);
            if (!adapted_edge(from, to)) return false;
        }
    }
    return true;
}

bool is_label_adapted(const Partition& p, const Word& w) {
    if (p.n != w.size()) throw std::invalid_argument("is_label_adapted: size mismatch");
    for (const auto& b : p.blocks) {
        int label = w.at(b.front()).label;
        for (int v : b)
            if (w.at(v).label != label) return false;
    }
    return true;
}

bool is_adapted(const Partition& p, const Word& w) {
    return is_color_adapted(p, w) && is_label_adapted(p, w);
}

bool pair_allowed(const Letter& a, const Letter& b) {
    if (a.label != b.label) return false;
    if (a.color == b.color) return a.starred != b.starred;
    if (a.starred != b.starred) return false;
    int lo = std::min(a.color, b.color);
    int hi = std::max(a.color, b.color);
    return hi == lo + 1 && lo % 2 == 0;
}

void for_each_adapted(const Word& w, int k, const std::function<void(const Partition&)>& visit,
                      int cap) {
    Word full = word_power(w, k);
    int n = full.size();
    {
        int limit = cap > 0 ? cap : enumeration_cap();
        if (n > limit)
            throw CapExceeded("adapted enumeration over [" + std::to_string(n) +
                              "] exceeds cap " + std::to_string(limit));
    }
    for_each_noncrossing_filtered(
        n,
        [&](const std::vector<int>& members, int t) {
            return full.at(members.front()).label == full.at(t).label &&
                   adapted_edge(full.at(members.back()), full.at(t));
        },
        [&](const std::vector<int>& members) {
            return members.size() % 2 == 0 &&
                   adapted_edge(full.at(members.back()), full.at(members.front()));
        },
        [&](const std::vector<std::vector<int>>& blocks) {
            visit(Partition::make(n, blocks));
        });
}

std::vector<Partition> enumerate_adapted(const Word& w, int k, int cap) {
    std::vector<Partition> out;
    for_each_adapted(w, k, [&](const Partition& p) { out.push_back(p); }, cap);
    return out;
}

void for_each_pair_adapted(int p, int k, const std::vector<int>& labels,
                           const std::function<void(const PairPartition&)>& visit, int cap) {
    Word full = word_power(make_Wtilde(p, labels), k);
    int n = full.size();
    {
        // a pairing of [4pk] costs like a partition of [2pk]; cap on the base word
        int limit = cap > 0 ? cap : enumeration_cap();
        if (n / 2 > limit)
            throw CapExceeded("pair enumeration over [" + std::to_string(n) +
                              "] exceeds cap " + std::to_string(limit));
    }
    if (n % 2 != 0) return;
    std::vector<int> open;
    std::vector<std::pair<int, int>> pairs;
    auto rec = [&](auto&& self, int t) -> void {
        if (t > n) {
            if (open.empty()) visit(PairPartition::make(n, pairs));
            return;
        }
        if (static_cast<int>(open.size()) > n - t + 1) return;
        if (!open.empty() && pair_allowed(full.at(open.back()), full.at(t))) {
            pairs.emplace_back(open.back(), t);
            open.pop_back();
            self(self, t + 1);
            open.push_back(pairs.back().first);
            pairs.pop_back();
        }
        open.push_back(t);
        self(self, t + 1);
        open.pop_back();
    };
    rec(rec, 1);
}

std::vector<PairPartition> enumerate_pair_adapted(int p, int k, const std::vector<int>& labels,
                                                  int cap) {
    std::vector<PairPartition> out;
    for_each_pair_adapted(p, k, labels, [&](const PairPartition& s) { out.push_back(s); }, cap);
    return out;
}

PairPartition alpha(const Partition& p) {
    if (!is_noncrossing(p)) throw std::invalid_argument("alpha needs noncrossing input");
    std::vector<int> perm = as_permutation(p);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(p.n));
    for (int s = 1; s <= p.n; ++s) {
        int a = 2 * s;
        int b = 2 * perm[s] - 1;
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    return PairPartition::make(2 * p.n, std::move(pairs));
}

Partition alpha_inverse(const PairPartition& s) { return kreweras_restrict(s); }

}  // namespace wtp
