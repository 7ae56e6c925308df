#pragma once

#include <wtp/model.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace wtp {

/// Spectral law of one Hermitian ensemble member. Sizes are measured in
/// units of the first block (d_j = n_j / n_1), so "semicircle" means GUE
/// with entry variance 1/n_1 and "mp:t" a Wishart G G* with t n_1 columns.
struct SpectralLaw {
    enum class Kind { semicircle, marchenko_pastur, explicit_spectrum };
    Kind kind = Kind::semicircle;
    Rational shape = 1;             // mp(t)
    std::vector<double> spectrum;   // eigenvalue pool for explicit laws

    /// "semicircle" | "free-poisson" | "mp:t" | "spectrum:a,b,..."
    static SpectralLaw parse(const std::string& text);

    /// Free cumulants of the matching limit law (not available for
    /// explicit spectra).
    CumulantSequence cumulants(int length) const;
};

struct EnsembleSpec {
    std::vector<int> block_sizes;  // n_1..n_{p+1}
    std::vector<int> labels;       // u_1..u_p
    std::map<int, SpectralLaw> laws;
    int trials = 100;
    std::uint64_t seed = 1;

    int p() const { return static_cast<int>(labels.size()); }
    int total_size() const;
    void validate() const;
};

struct MomentEstimate {
    double estimate = 0;
    double stderr_ = 0;
    int trials = 0;
};

struct SimulationResult {
    std::vector<MomentEstimate> moments;  // index k-1 holds tau_1((BB*)^k)
};

/// Deterministic stream: mt19937_64 keyed by splitmix64(seed, stream), with
/// uniform doubles built from the top 53 bits and normals by the polar
/// method. Trial i always uses stream i, so schedules cannot reorder draws.
class Rng {
  public:
    Rng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next_u64() { return eng_(); }
    double uniform();   // [0, 1)
    double gaussian();  // standard normal

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0;
};

/// Haar unitary: QR of a complex Gaussian matrix with the R-diagonal phase
/// correction.
Eigen::MatrixXcd sample_haar_unitary(int n, Rng& rng);

/// Hermitian sample of the law at size n, normalized to the given base.
Eigen::MatrixXcd sample_matrix(const SpectralLaw& law, int n, int base, Rng& rng);

/// tau_1((BB*)^k) for k = 1..k_max, B the product of consecutive
/// superdiagonal blocks X_l = (block l, block l+1) of the labelled family.
SimulationResult empirical_wishart_moments(const EnsembleSpec& spec, int k_max);

struct ConvergenceRow {
    int k = 0;
    double estimate = 0;
    double stderr_ = 0;
    double exact = 0;
    bool pass = false;
};

struct ConvergenceReport {
    bool pass = true;
    std::vector<ConvergenceRow> rows;
};

/// Empirical moments against the exact limit; a row fails when
/// |estimate - exact| > max(4 stderr, rel_tol |exact|).
ConvergenceReport convergence_report(const EnsembleSpec& spec, const ModelParams& params,
                                     int k_max, double rel_tol = 0.08);

}  // namespace wtp
