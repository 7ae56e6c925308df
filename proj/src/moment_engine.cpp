#include <wtp/moment_engine.hpp>

#include <wtp/transforms.hpp>

#include <sstream>

namespace wtp {

Rational dimension_weight(const std::vector<Letter>& block_legs,
                          const std::vector<Rational>& dims) {
    Rational w(1);
    for (int c : segment_coloring(block_legs)) {
        if (c < 1 || c > static_cast<int>(dims.size()))
            throw std::invalid_argument("dimension_weight: segment color " + std::to_string(c) +
                                        " outside d_1..d_" + std::to_string(dims.size()));
        w *= dims[static_cast<size_t>(c) - 1];
    }
    return w;
}

Rational partition_weight(const Partition& pi, const Word& full_word,
                          const ModelParams& params) {
    Rational w(1);
    for (const auto& blk : pi.blocks) {
        std::vector<Letter> legs;
        legs.reserve(blk.size());
        for (int v : blk) legs.push_back(full_word.at(v));
        int label = legs.front().label;
        w *= params.cumulants_of(label).at(static_cast<int>(blk.size()));
        w *= dimension_weight(legs, params.dims);
    }
    return w;
}

Rational pair_partition_weight(const PairPartition& sigma, int k, const ModelParams& params) {
    Word wt = word_power(make_Wtilde(params.p, params.labels), k);
    Word w0 = word_power(make_W0(params.p, params.labels), k);
    if (sigma.n != wt.size())
        throw std::invalid_argument("pair_partition_weight: size mismatch with doubled word");
    Partition part = sigma.as_partition();
    std::vector<BlockStats> stats = all_block_stats(part);
    Rational w(1);
    for (size_t i = 0; i < part.blocks.size(); ++i) {
        int a = part.blocks[i][0];
        int b = part.blocks[i][1];
        if (stats[i].depth % 2 == 1) {
            w *= params.cumulants_of(wt.at(a).label).at(stats[i].nearest_inner_count + 1);
        } else {
            const Letter& la = w0.at(a);
            const Letter& lb = w0.at(b);
            if (la.color == 1 && la.starred && lb.color == 1 && !lb.starred) {
                w *= params.dims[0];
            } else if (la.color == lb.color && la.color % 2 == 0 && la.starred != lb.starred) {
                w *= params.dims[static_cast<size_t>(la.color) / 2];
            } else {
                throw std::logic_error("pair coloring (" + std::to_string(la.color) +
                                       (la.starred ? "*" : "") + "," + std::to_string(lb.color) +
                                       (lb.starred ? "*" : "") + ") at even depth");
            }
        }
    }
    return w;
}

MomentResult limit_moment_enumerative(int k, const ModelParams& params, int cap) {
    Word base = params.base_word();
    Word full = word_power(base, k);
    WeightedCount wc;
    for_each_adapted(
        base, k,
        [&](const Partition& pi) {
            Rational coeff(1);
            std::vector<int> expv(params.dims.size(), 0);
            for (const auto& blk : pi.blocks) {
                coeff *= params.cumulants_of(full.at(blk.front()).label)
                             .at(static_cast<int>(blk.size()));
                for (size_t i = 0; i + 1 < blk.size(); ++i)
                    ++expv[static_cast<size_t>(segment_color(full.at(blk[i]))) - 1];
            }
            wc[expv] += coeff;
        },
        cap);
    for (auto it = wc.begin(); it != wc.end();)
        it = (it->second == 0) ? wc.erase(it) : std::next(it);
    Rational m(0);
    for (const auto& [expv, c] : wc) {
        Rational term = c;
        for (size_t i = 0; i < expv.size(); ++i)
            term *= pow_rational(params.dims[i], static_cast<unsigned>(expv[i]));
        m += term;
    }
    return {m, wc};
}

Rational limit_moment_pair(int k, const ModelParams& params, int cap) {
    Rational m(0);
    for_each_pair_adapted(
        params.p, k, params.labels,
        [&](const PairPartition& sigma) { m += pair_partition_weight(sigma, k, params); }, cap);
    return m;
}

Report cross_validate(int k_max, const ModelParams& params, int cap) {
    Report rep;
    bool independent = params.labels_all_distinct();
    bool closed_form_defined = independent;
    for (int u : params.labels)
        if (params.cumulants_of(u).at(2) == 0) closed_form_defined = false;
    bool dependent_route = params.p == 2 && params.labels_all_same();
    for (const auto& d : params.dims)
        if (d != 1) dependent_route = false;

    FormalPowerSeries psi(0);
    if (closed_form_defined) {
        psi = solve_psi_independent(params, k_max);
        FormalPowerSeries psi_b = solve_psi_independent_inverse_route(params, k_max);
        rep.check(psi == psi_b, "series solvers (fixed point vs inverse route) agree");
    }
    std::vector<Rational> Q;
    if (dependent_route) {
        Distribution nu =
            distribution_from_cumulants(params.cumulants_of(params.labels[0]), 4 * k_max);
        Q = q_sequence(nu, 2 * k_max);
    }

    for (int k = 1; k <= k_max; ++k) {
        MomentResult enumerative = limit_moment_enumerative(k, params, cap);
        Rational pair = limit_moment_pair(k, params, cap);
        bool ok = enumerative.moment == pair;
        rep.check(ok, "k=" + std::to_string(k) + " enumerative = pair route");
        if (!ok) {
            // locate the first partition whose two block weights disagree
            Word base = params.base_word();
            Word full = word_power(base, k);
            bool found = false;
            for_each_adapted(
                base, k,
                [&](const Partition& pi) {
                    if (found) return;
                    Rational w31 = partition_weight(pi, full, params);
                    Rational w41 = pair_partition_weight(alpha(pi), k, params);
                    if (w31 != w41) {
                        found = true;
                        rep.note("offending partition " + format_partition(pi) + ": " +
                                 w31.get_str() + " vs " + w41.get_str());
                    }
                },
                cap);
        }
        if (closed_form_defined) {
            rep.check(enumerative.moment == moments_closed_form(params, k),
                      "k=" + std::to_string(k) + " enumerative = closed form");
            rep.check(enumerative.moment == psi[k],
                      "k=" + std::to_string(k) + " enumerative = series solution");
        }
        if (dependent_route) {
            rep.check(enumerative.moment == Q[static_cast<size_t>(2 * k)],
                      "k=" + std::to_string(k) + " enumerative = Q_{2k} recurrence");
        }
    }
    if (!closed_form_defined)
        rep.note(independent ? "closed form skipped (a factor has r_2 = 0)"
                             : "closed form skipped (labels not pairwise distinct)");
    return rep;
}

}  // namespace wtp
