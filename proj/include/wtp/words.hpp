#pragma once

#include <wtp/partition.hpp>

#include <functional>
#include <string>
#include <vector>

namespace wtp {

/// Letter of the *-alphabet: a color in [p] (or [2p] for doubled words),
/// a star flag, and an opaque label identifying the source matrix.
struct Letter {
    int color = 1;
    bool starred = false;
    int label = 0;

    bool operator==(const Letter&) const = default;
};

struct Word {
    std::vector<Letter> letters;
    int num_colors = 1;  // colors run in [num_colors]

    int size() const { return static_cast<int>(letters.size()); }
    const Letter& at(int pos) const { return letters.at(static_cast<size_t>(pos) - 1); }

    bool operator==(const Word&) const = default;
};

/// p copies of one label, and the labels 0..p-1.
std::vector<int> labels_same(int p);
std::vector<int> labels_distinct(int p);

/// W = 1 2 ... p p* ... 2* 1*, letter j and j* sharing labels[j-1].
Word make_W(int p, const std::vector<int>& labels);

/// Doubled word 1 2 ... (2p) (2p)* ... 2* 1*; colors 2j-1 and 2j inherit
/// labels[j-1], as do their starred mirrors.
Word make_Wtilde(int p, const std::vector<int>& labels);

/// Pair-coloring presentation 1 22* 44* ... (2p)(2p)* ... 44* 22* 1*,
/// labels inherited positionwise from the doubled word.
Word make_W0(int p, const std::vector<int>& labels);

/// Alternating words over 1*1 and 22* (single label, two colors):
/// U_n = (1*1 22*)^m [1*1], U'_n = (22* 1*1)^m [22*] for n = 2m [+1].
Word make_Un(int n, int label = 0);
Word make_Un_prime(int n, int label = 0);

Word word_power(const Word& w, int k);
Word cyclic_shift(const Word& w, int offset);

/// "1@a 2*@b ..." with labels named by label_name.
std::string format_word(const Word& w, const std::function<std::string(int)>& label_name);

/// Segment color produced below a leg: j -> j+1, j* -> j.
int segment_color(const Letter& l);

/// Colors of the m-1 segments between consecutive legs of one block.
std::vector<int> segment_coloring(const std::vector<Letter>& block_legs);

/// Gap coloring of the one-block partition extended cyclically:
/// entry g in [0, n] colors the gap after position g (gap 0 wraps around).
std::vector<int> extended_gap_coloring(const Word& w);

/// One cycle step of an adapted block: a shift (color +1 along the word
/// pattern) or a reflection (star flip at the same color).
bool adapted_edge(const Letter& from, const Letter& to);

/// Color adaptedness of a noncrossing partition to a word of equal length:
/// every cyclic edge of every block is a shift or a reflection.
bool is_color_adapted(const Partition& p, const Word& w);

/// All legs of each block carry one label.
bool is_label_adapted(const Partition& p, const Word& w);

bool is_adapted(const Partition& p, const Word& w);

/// Pairing rule for pair partitions adapted to a doubled word: a pair may
/// join i with i*, or two unstarred (resp. starred) letters of colors
/// {2i, 2i+1}, provided the labels agree.
bool pair_allowed(const Letter& a, const Letter& b);

/// Partitions of [|w| * k] adapted to w^k (color and label), w the base word.
std::vector<Partition> enumerate_adapted(const Word& w, int k, int cap = -1);
void for_each_adapted(const Word& w, int k,
                      const std::function<void(const Partition&)>& visit, int cap = -1);

/// Noncrossing pair partitions of [4pk] adapted to the doubled word.
std::vector<PairPartition> enumerate_pair_adapted(int p, int k, const std::vector<int>& labels,
                                                  int cap = -1);
void for_each_pair_adapted(int p, int k, const std::vector<int>& labels,
                           const std::function<void(const PairPartition&)>& visit, int cap = -1);

/// alpha(pi) = {{2s, 2 pi(s) - 1} : s in [n]} on [2n]; noncrossing for
/// noncrossing input.
PairPartition alpha(const Partition& p);

/// Inverse of alpha, implemented through the Kreweras restriction.
Partition alpha_inverse(const PairPartition& s);

}  // namespace wtp
