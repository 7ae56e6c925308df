#pragma once

#include <wtp/model.hpp>
#include <wtp/power_series.hpp>

namespace wtp {

/// Moment/cumulant view of a compactly described distribution, exact to a
/// truncation order K. Both sequences are kept consistent on construction.
struct Distribution {
    int K = 0;
    std::vector<Rational> moments;    // m_1..m_K
    std::vector<Rational> cumulants;  // r_1..r_K

    Rational moment(int k) const;    // 1-indexed, m_0 = 1 implied
    Rational cumulant(int k) const;  // 1-indexed

    bool operator==(const Distribution&) const = default;
};

/// Free moment-cumulant relation m_n = sum over NC(n) of prod r_{|V|},
/// through the series identity psi = R(z(1 + psi)).
std::vector<Rational> moments_from_cumulants(const std::vector<Rational>& r, int K);
std::vector<Rational> cumulants_from_moments(const std::vector<Rational>& m, int K);

Distribution distribution_from_cumulants(std::vector<Rational> r);
Distribution distribution_from_moments(std::vector<Rational> m);
Distribution distribution_from_cumulants(const CumulantSequence& c, int K);

Distribution semicircle(int K);
Distribution free_poisson(int K);
Distribution marchenko_pastur(const Rational& t, int K);
Distribution point_mass(const Rational& c, int K);

/// psi(z) = sum m_k z^k as a series of order K.
FormalPowerSeries psi_series(const Distribution& d);
/// Combinatorial R-series R(z) = sum r_k z^k of order K.
FormalPowerSeries r_series(const Distribution& d);

/// S(z) = ((z+1)/z) psi^{-1}(z), as the series left after the pole cancels
/// (order K-1). Requires m_1 != 0.
FormalPowerSeries s_transform(const Distribution& d);
/// T = 1/S (order K-1).
FormalPowerSeries t_transform(const Distribution& d);

/// Distribution with the given S-transform (series of order K-1).
Distribution distribution_from_s_transform(const FormalPowerSeries& s);

/// Free multiplicative convolution via S_{a x b} = S_a S_b.
Distribution free_mult_convolution(const Distribution& a, const Distribution& b);

/// U_s: G -> sG + (1-s)/z, i.e. m_k -> s m_k for k >= 1.
Distribution u_transform(const Distribution& d, const Rational& s);
/// V_s: S(z) -> S(z/s). Requires m_1 != 0.
Distribution v_transform(const Distribution& d, const Rational& s);

/// Distribution whose n-th free cumulant is r_{2n}(d); output order is
/// floor(d.K / 2), so d must carry cumulants to twice the wanted order.
Distribution nu_tilde(const Distribution& d);

/// Leading principal minors of the Hankel matrix (m_{i+j})_{0<=i,j<size}
/// are all >= 0 for sizes 1..depth; moments are m_1.. with m_0 = 1.
bool hankel_positive(const std::vector<Rational>& moments, int depth);

/// nu-tilde of the whole independent-label model:
/// nu1~ x ... x nup~ (needs r_2 != 0 per factor when p >= 2).
Distribution nu_tilde_combined(const ModelParams& params, int K);

/// Moment generating series psi of the independent-block model, solved from
/// d1 psi = R~(z (d1 psi + d1)...(d1 psi + d_{p+1})) by fixed-point
/// iteration in the z-adic metric (one coefficient settles per pass).
FormalPowerSeries solve_psi_independent(const ModelParams& params, int K);
/// Same series through the inverse route
/// psi^{-1}(d1^{-1} z) = R~^{-1}(z) / ((z+d_1)...(z+d_{p+1})); an
/// independent check of the solver.
FormalPowerSeries solve_psi_independent_inverse_route(const ModelParams& params, int K);

/// Generalized multivariate Fuss-Narayana polynomial value
/// P_{k,r}(d) = sum_{|j| = kp+r} (1/k) prod binom(k, j_i) d_i^{j_i}.
Rational P_kr(int k, int r, const std::vector<Rational>& dims);
/// T_{k,r}(t_0..t_{r-1}) = [z^{r-1}] T(z)^k for T(z) = sum t_i z^i.
Rational T_kr(int k, int r, const std::vector<Rational>& t_coeffs);

/// T-transform of nu~ for the model, as a series of order K.
FormalPowerSeries t_transform_nu_tilde(const ModelParams& params, int K);

/// Closed form m_k = d1^{-1} sum_{r=1}^k P_{k,r}(d) T_{k,r}(t).
Rational moments_closed_form(const ModelParams& params, int k);

/// Q_0..Q_{n_max} of the dependent two-block model (p = 2, unit dims):
/// Q_n = sum_k r_{2k} sum Q_{2n_1}..Q_{2n_k} Q_{n_{k+1}}..Q_{n_{2k}};
/// m_k = Q_{2k}. Needs cumulants of nu to order 2 n_max.
std::vector<Rational> q_sequence(const Distribution& nu, int n_max);

/// Substitutes the Q-series into psi = R~(z (psi+1)(psi_even+1)) and checks
/// a zero residual to order K.
Report verify_dependent_functional_equation(const Distribution& nu, int K);

/// Checks V_{d1}(mu) = V_{d1}(xi_1) x ... x V_{dp}(xi_p) and
/// V_{di}(xi_i) = nui~ x MP(d_{i+1}) as moment series to order K.
Report verify_single_factor_decomposition(const ModelParams& params, int K);

}  // namespace wtp
