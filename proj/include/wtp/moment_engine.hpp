#pragma once

#include <wtp/model.hpp>

#include <map>

namespace wtp {

/// Map from dimension-exponent vectors (j_1, ..., j_{p+1}) to the exact
/// coefficient N_k(j): the cumulant-weighted count of adapted partitions
/// whose dimension monomial is d^j.
using WeightedCount = std::map<std::vector<int>, Rational>;

/// d(V) = product of dims over the segment coloring of a block.
Rational dimension_weight(const std::vector<Letter>& block_legs,
                          const std::vector<Rational>& dims);

struct MomentResult {
    Rational moment;
    WeightedCount monomials;
};

/// Weight of one adapted partition: prod over blocks of d(V) r_{|V|}(u_V).
Rational partition_weight(const Partition& pi, const Word& full_word,
                          const ModelParams& params);

/// Weight of a pair partition under the depth-parity rule: blocks of odd
/// depth contribute r_{i(V)+1}(u_V), blocks of even depth the dimension
/// attached to their pair-coloring.
Rational pair_partition_weight(const PairPartition& sigma, int k, const ModelParams& params);

/// m_k as the weighted sum over partitions adapted to W^k, with the
/// monomial-resolved coefficients.
MomentResult limit_moment_enumerative(int k, const ModelParams& params, int cap = -1);

/// m_k as the weighted sum over pair partitions of the doubled word.
Rational limit_moment_pair(int k, const ModelParams& params, int cap = -1);

/// Checks that the enumerative, pair, closed-form and series routes agree
/// for every k <= k_max (closed form and series only for independent labels
/// with r_2 != 0; the dependent-block recurrence when p=2, same label, unit
/// dims). On an enumerative/pair mismatch the first offending partition is
/// reported.
Report cross_validate(int k_max, const ModelParams& params, int cap = -1);

}  // namespace wtp
