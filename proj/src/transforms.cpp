#include <wtp/transforms.hpp>

#include <wtp/counting.hpp>

#include <algorithm>
#include <stdexcept>

namespace wtp {

Rational Distribution::moment(int k) const {
    if (k == 0) return 1;
    if (k < 0 || k > K) throw TruncationError("moment m_" + std::to_string(k) + " beyond order");
    return moments[static_cast<size_t>(k) - 1];
}

Rational Distribution::cumulant(int k) const {
    if (k < 1 || k > K) throw TruncationError("cumulant r_" + std::to_string(k) + " beyond order");
    return cumulants[static_cast<size_t>(k) - 1];
}

std::vector<Rational> moments_from_cumulants(const std::vector<Rational>& r, int K) {
    if (static_cast<int>(r.size()) < K)
        throw TruncationError("moments_from_cumulants: cumulants shorter than K");
    FormalPowerSeries R(K);
    for (int i = 1; i <= K; ++i) R[i] = r[static_cast<size_t>(i) - 1];
    FormalPowerSeries psi(K);
    for (int it = 0; it <= K; ++it) {
        FormalPowerSeries zM = shift_up(psi + Rational(1));
        psi = compose(R, zM);
    }
    std::vector<Rational> m(static_cast<size_t>(K));
    for (int i = 1; i <= K; ++i) m[static_cast<size_t>(i) - 1] = psi[i];
    return m;
}

std::vector<Rational> cumulants_from_moments(const std::vector<Rational>& m, int K) {
    if (static_cast<int>(m.size()) < K)
        throw TruncationError("cumulants_from_moments: moments shorter than K");
    FormalPowerSeries psi(K);
    for (int i = 1; i <= K; ++i) psi[i] = m[static_cast<size_t>(i) - 1];
    // psi = R(z M(z)) with M = 1 + psi, so R = psi o (zM)^{-1}
    FormalPowerSeries zM = shift_up(psi + Rational(1));
    FormalPowerSeries R = compose(psi, compositional_inverse(zM));
    std::vector<Rational> r(static_cast<size_t>(K));
    for (int i = 1; i <= K; ++i) r[static_cast<size_t>(i) - 1] = R[i];
    return r;
}

Distribution distribution_from_cumulants(std::vector<Rational> r) {
    Distribution d;
    d.K = static_cast<int>(r.size());
    d.moments = moments_from_cumulants(r, d.K);
    d.cumulants = std::move(r);
    return d;
}

Distribution distribution_from_moments(std::vector<Rational> m) {
    Distribution d;
    d.K = static_cast<int>(m.size());
    d.cumulants = cumulants_from_moments(m, d.K);
    d.moments = std::move(m);
    return d;
}

Distribution distribution_from_cumulants(const CumulantSequence& c, int K) {
    if (c.length() < K) throw TruncationError("cumulant sequence shorter than requested order");
    return distribution_from_cumulants(
        std::vector<Rational>(c.values.begin(), c.values.begin() + K));
}

Distribution semicircle(int K) { return distribution_from_cumulants(semicircle_cumulants(K).values); }

Distribution free_poisson(int K) {
    return distribution_from_cumulants(free_poisson_cumulants(K).values);
}

Distribution marchenko_pastur(const Rational& t, int K) {
    return distribution_from_cumulants(mp_cumulants(t, K).values);
}

Distribution point_mass(const Rational& c, int K) {
    Distribution d;
    d.K = K;
    d.moments.resize(static_cast<size_t>(K));
    Rational pw = 1;
    for (int i = 0; i < K; ++i) {
        pw *= c;
        d.moments[static_cast<size_t>(i)] = pw;
    }
    d.cumulants = cumulants_from_moments(d.moments, K);
    return d;
}

FormalPowerSeries psi_series(const Distribution& d) {
    FormalPowerSeries f(d.K);
    for (int i = 1; i <= d.K; ++i) f[i] = d.moments[static_cast<size_t>(i) - 1];
    return f;
}

FormalPowerSeries r_series(const Distribution& d) {
    FormalPowerSeries f(d.K);
    for (int i = 1; i <= d.K; ++i) f[i] = d.cumulants[static_cast<size_t>(i) - 1];
    return f;
}

FormalPowerSeries s_transform(const Distribution& d) {
    if (d.K < 1 || d.moment(1) == 0)
        throw std::domain_error("s_transform: needs m_1 != 0");
    FormalPowerSeries inv = compositional_inverse(psi_series(d));
    // inv = z h(z); S = (1 + z) h(z)
    FormalPowerSeries h(d.K - 1);
    for (int i = 0; i <= d.K - 1; ++i) h[i] = inv[i + 1];
    FormalPowerSeries one_plus_z = fps_const(1, d.K - 1);
    if (d.K - 1 >= 1) one_plus_z[1] = 1;
    return one_plus_z * h;
}

FormalPowerSeries t_transform(const Distribution& d) { return reciprocal(s_transform(d)); }

Distribution distribution_from_s_transform(const FormalPowerSeries& s) {
    int K = s.order() + 1;
    if (s[0] == 0) throw std::domain_error("distribution_from_s_transform: S(0) must be nonzero");
    // psi^{-1}(z) = z S(z) / (1 + z)
    FormalPowerSeries one_plus_z = fps_const(1, s.order());
    if (s.order() >= 1) one_plus_z[1] = 1;
    FormalPowerSeries h = s * reciprocal(one_plus_z);
    FormalPowerSeries psi_inv(K);
    for (int i = 1; i <= K; ++i) psi_inv[i] = h[i - 1];
    FormalPowerSeries psi = compositional_inverse(psi_inv);
    std::vector<Rational> m(static_cast<size_t>(K));
    for (int i = 1; i <= K; ++i) m[static_cast<size_t>(i) - 1] = psi[i];
    return distribution_from_moments(std::move(m));
}

Distribution free_mult_convolution(const Distribution& a, const Distribution& b) {
    return distribution_from_s_transform(s_transform(a) * s_transform(b));
}

Distribution u_transform(const Distribution& d, const Rational& s) {
    std::vector<Rational> m = d.moments;
    for (auto& x : m) x *= s;
    return distribution_from_moments(std::move(m));
}

Distribution v_transform(const Distribution& d, const Rational& s) {
    if (s <= 0) throw std::domain_error("v_transform: s must be positive");
    FormalPowerSeries S = s_transform(d);
    Rational scale = 1;
    for (int i = 1; i <= S.order(); ++i) {
        scale /= s;
        S[i] *= scale;
    }
    return distribution_from_s_transform(S);
}

Distribution nu_tilde(const Distribution& d) {
    if (d.K < 2) throw TruncationError("nu_tilde: cumulants needed to order 2");
    int K = d.K / 2;
    std::vector<Rational> r(static_cast<size_t>(K));
    for (int n = 1; n <= K; ++n) r[static_cast<size_t>(n) - 1] = d.cumulant(2 * n);
    return distribution_from_cumulants(std::move(r));
}

bool hankel_positive(const std::vector<Rational>& moments, int depth) {
    if (static_cast<int>(moments.size()) < 2 * (depth - 1))
        throw TruncationError("hankel_positive: need moments to order 2(depth-1)");
    auto moment_at = [&](int i) -> Rational {
        return i == 0 ? Rational(1) : moments[static_cast<size_t>(i) - 1];
    };
    for (int size = 1; size <= depth; ++size) {
        std::vector<std::vector<Rational>> h(static_cast<size_t>(size),
                                             std::vector<Rational>(static_cast<size_t>(size)));
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) h[i][j] = moment_at(i + j);
        // exact determinant by fraction-free-ish elimination over Q
        Rational det = 1;
        bool singular = false;
        for (int col = 0; col < size && !singular; ++col) {
            int piv = -1;
            for (int row = col; row < size; ++row)
                if (h[row][col] != 0) {
                    piv = row;
                    break;
                }
            if (piv < 0) {
                singular = true;
                break;
            }
            if (piv != col) {
                std::swap(h[piv], h[col]);
                det = -det;
            }
            det *= h[col][col];
            for (int row = col + 1; row < size; ++row) {
                if (h[row][col] == 0) continue;
                Rational f = h[row][col] / h[col][col];
                for (int j = col; j < size; ++j) h[row][j] -= f * h[col][j];
            }
        }
        if (singular) continue;  // zero minor, still nonnegative
        if (det < 0) return false;
    }
    return true;
}

Distribution nu_tilde_combined(const ModelParams& params, int K) {
    Distribution acc;
    bool first = true;
    for (int l = 0; l < params.p; ++l) {
        Distribution nu = distribution_from_cumulants(params.cumulants_of(params.labels[l]), 2 * K);
        Distribution nt = nu_tilde(nu);
        acc = first ? nt : free_mult_convolution(acc, nt);
        first = false;
    }
    return acc;
}

FormalPowerSeries solve_psi_independent(const ModelParams& params, int K) {
    if (!params.labels_all_distinct())
        throw std::invalid_argument("solve_psi_independent: needs pairwise distinct labels");
    FormalPowerSeries R = r_series(nu_tilde_combined(params, K));
    FormalPowerSeries phi(K);  // phi = d1 psi
    for (int it = 0; it <= K; ++it) {
        FormalPowerSeries prod = fps_const(1, K);
        for (const auto& d : params.dims) prod = prod * (phi + d);
        phi = compose(R, shift_up(prod));
    }
    return Rational(1) / params.dims[0] * phi;
}

FormalPowerSeries solve_psi_independent_inverse_route(const ModelParams& params, int K) {
    if (!params.labels_all_distinct())
        throw std::invalid_argument("solver: needs pairwise distinct labels");
    FormalPowerSeries R = r_series(nu_tilde_combined(params, K));
    FormalPowerSeries Rinv = compositional_inverse(R);
    FormalPowerSeries denom = fps_const(1, K);
    for (const auto& d : params.dims) denom = denom * (fps_z(K) + d);
    FormalPowerSeries g = Rinv * reciprocal(denom);  // psi^{-1}(d1^{-1} z)
    // substitute z -> d1 z
    FormalPowerSeries psi_inv(K);
    Rational pw = 1;
    for (int i = 1; i <= K; ++i) {
        pw *= params.dims[0];
        psi_inv[i] = g[i] * pw;
    }
    return compositional_inverse(psi_inv);
}

Rational P_kr(int k, int r, const std::vector<Rational>& dims) {
    if (k < 1 || r < 1) throw std::invalid_argument("P_kr: need k, r >= 1");
    int parts = static_cast<int>(dims.size());
    int p = parts - 1;
    int target = k * p + r;
    Rational total(0);
    std::vector<int> j(static_cast<size_t>(parts), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            if (remaining > k) return;
            j[static_cast<size_t>(pos)] = remaining;
            Rational term(1);
            for (int i = 0; i < parts; ++i) {
                BigInt b = binomial(k, j[static_cast<size_t>(i)]);
                if (b == 0) return;
                term *= Rational(b) * pow_rational(dims[static_cast<size_t>(i)],
                                                   static_cast<unsigned>(j[static_cast<size_t>(i)]));
            }
            total += term;
            return;
        }
        for (int v = 0; v <= std::min(k, remaining); ++v) {
            j[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, target);
    return total / Rational(k);
}

Rational T_kr(int k, int r, const std::vector<Rational>& t_coeffs) {
    if (k < 1 || r < 1) throw std::invalid_argument("T_kr: need k, r >= 1");
    FormalPowerSeries T(r - 1);
    for (int i = 0; i <= r - 1 && i < static_cast<int>(t_coeffs.size()); ++i)
        T[i] = t_coeffs[static_cast<size_t>(i)];
    return pow_series(T, k)[r - 1];
}

FormalPowerSeries t_transform_nu_tilde(const ModelParams& params, int K) {
    // T of a free product multiplies factorwise; each factor is z / R~^{-1}
    FormalPowerSeries T = fps_const(1, K);
    for (int l = 0; l < params.p; ++l) {
        Distribution nu =
            distribution_from_cumulants(params.cumulants_of(params.labels[l]), 2 * (K + 1));
        FormalPowerSeries R = r_series(nu_tilde(nu));
        FormalPowerSeries Rinv = compositional_inverse(R);
        FormalPowerSeries unit(K);
        for (int i = 0; i <= K; ++i) unit[i] = Rinv[i + 1];  // R~^{-1} / z
        T = T * reciprocal(unit);
    }
    return T;
}

Rational moments_closed_form(const ModelParams& params, int k) {
    if (!params.labels_all_distinct())
        throw std::invalid_argument("moments_closed_form: needs pairwise distinct labels");
    FormalPowerSeries T = t_transform_nu_tilde(params, std::max(0, k - 1));
    std::vector<Rational> t(T.coeffs());
    Rational sum(0);
    for (int r = 1; r <= k; ++r) sum += P_kr(k, r, params.dims) * T_kr(k, r, t);
    return sum / params.dims[0];
}

std::vector<Rational> q_sequence(const Distribution& nu, int n_max) {
    if (nu.K < 2 * n_max) throw TruncationError("q_sequence: cumulants needed to order 2 n_max");
    std::vector<Rational> Q(static_cast<size_t>(n_max) + 1, Rational(0));
    Q[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        // (1 + psi)(1 + psi_even) from Q_0..Q_{n-1}
        FormalPowerSeries A(n - 1), S(n - 1);
        for (int i = 0; i <= n - 1; ++i) {
            A[i] = Q[static_cast<size_t>(i)];
            S[i] = (i % 2 == 0) ? Q[static_cast<size_t>(i)] : Rational(0);
        }
        FormalPowerSeries C = A * S;
        FormalPowerSeries Cp = C;  // C^j
        Rational qn(0);
        for (int j = 1; j <= n; ++j) {
            qn += nu.cumulant(2 * j) * Cp[n - j];
            if (j < n) Cp = Cp * C;
        }
        Q[static_cast<size_t>(n)] = qn;
    }
    return Q;
}

Report verify_dependent_functional_equation(const Distribution& nu, int K) {
    Report rep;
    std::vector<Rational> Q = q_sequence(nu, K);
    FormalPowerSeries psi(K), psi_even(K);
    for (int i = 1; i <= K; ++i) {
        psi[i] = Q[static_cast<size_t>(i)];
        if (i % 2 == 0) psi_even[i] = Q[static_cast<size_t>(i)];
    }
    FormalPowerSeries R = r_series(nu_tilde(nu));
    FormalPowerSeries arg = shift_up((psi + Rational(1)) * (psi_even + Rational(1)));
    FormalPowerSeries rhs = compose(truncate(R, K), arg);
    rep.check(is_zero(psi - rhs), "psi = R~(z (psi+1)(psi_even+1)) residual vanishes to order " +
                                      std::to_string(K));
    return rep;
}

Report verify_single_factor_decomposition(const ModelParams& params, int K) {
    Report rep;
    auto single_factor = [&](int i) {  // xi_i: the one-block model on dims (d_i, d_{i+1})
        ModelParams sub = ModelParams::make(
            1, {params.dims[static_cast<size_t>(i)], params.dims[static_cast<size_t>(i) + 1]}, {0},
            {{0, params.cumulants_of(params.labels[static_cast<size_t>(i)])}});
        FormalPowerSeries psi = solve_psi_independent(sub, K);
        std::vector<Rational> m(static_cast<size_t>(K));
        for (int j = 1; j <= K; ++j) m[static_cast<size_t>(j) - 1] = psi[j];
        return distribution_from_moments(std::move(m));
    };

    // each factor deforms to its even-cumulant law times a Marchenko-Pastur:
    // V_{d_i}(xi_i) = nu_i~ x MP(d_{i+1})
    for (int i = 0; i < params.p; ++i) {
        Distribution xi = single_factor(i);
        Distribution lhs = v_transform(xi, params.dims[static_cast<size_t>(i)]);
        Distribution nu =
            distribution_from_cumulants(params.cumulants_of(params.labels[static_cast<size_t>(i)]),
                                        2 * K);
        Distribution rhs =
            free_mult_convolution(nu_tilde(nu), marchenko_pastur(params.dims[static_cast<size_t>(i) + 1], K));
        rep.check(lhs.moments == rhs.moments,
                  "V_{d_" + std::to_string(i + 1) + "}(xi_" + std::to_string(i + 1) +
                      ") = nu~ x MP(d_" + std::to_string(i + 2) + ")");
    }

    // the whole product factorizes: V_{d_1}(mu) = V_{d_1}(xi_1) x ... x V_{d_p}(xi_p)
    FormalPowerSeries psi_mu = solve_psi_independent(params, K);
    std::vector<Rational> mu_m(static_cast<size_t>(K));
    for (int j = 1; j <= K; ++j) mu_m[static_cast<size_t>(j) - 1] = psi_mu[j];
    Distribution mu = distribution_from_moments(std::move(mu_m));
    Distribution lhs = v_transform(mu, params.dims[0]);
    Distribution rhs = v_transform(single_factor(0), params.dims[0]);
    for (int i = 1; i < params.p; ++i)
        rhs = free_mult_convolution(rhs, v_transform(single_factor(i), params.dims[static_cast<size_t>(i)]));
    rep.check(lhs.moments == rhs.moments, "V_{d_1}(mu) = x_i V_{d_i}(xi_i)");
    return rep;
}

}  // namespace wtp
