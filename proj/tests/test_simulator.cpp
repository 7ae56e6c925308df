#include <doctest.h>

#include <wtp/simulator.hpp>

#include <cmath>

using namespace wtp;

namespace {

EnsembleSpec gue_spec(std::vector<int> blocks, int trials, std::uint64_t seed) {
    EnsembleSpec spec;
    spec.block_sizes = std::move(blocks);
    int p = static_cast<int>(spec.block_sizes.size()) - 1;
    spec.labels = labels_distinct(p);
    for (int u : spec.labels) spec.laws[u] = SpectralLaw::parse("semicircle");
    spec.trials = trials;
    spec.seed = seed;
    return spec;
}

ModelParams params_for(const EnsembleSpec& spec, int k_max) {
    std::vector<Rational> dims;
    for (int b : spec.block_sizes) dims.push_back(make_rational(b, spec.block_sizes[0]));
    std::map<int, CumulantSequence> cums;
    for (size_t l = 0; l < spec.labels.size(); ++l)
        cums.emplace(spec.labels[l],
                     spec.laws.at(spec.labels[l]).cumulants(2 * spec.p() * k_max));
    return ModelParams::make(spec.p(), dims, spec.labels, cums);
}

}  // namespace

TEST_CASE("law parsing") {
    CHECK(SpectralLaw::parse("semicircle").kind == SpectralLaw::Kind::semicircle);
    SpectralLaw fp = SpectralLaw::parse("free-poisson");
    CHECK(fp.kind == SpectralLaw::Kind::marchenko_pastur);
    CHECK(fp.shape == 1);
    CHECK(SpectralLaw::parse("mp:3/2").shape == make_rational(3, 2));
    CHECK(SpectralLaw::parse("spectrum:1,2,0.5").spectrum.size() == 3);
    CHECK_THROWS_AS(SpectralLaw::parse("gue"), std::invalid_argument);
    CHECK_THROWS_AS(SpectralLaw::parse("mp:-1"), std::invalid_argument);
    CHECK_THROWS_AS(SpectralLaw::parse("spectrum:1").cumulants(4), std::invalid_argument);
}

TEST_CASE("rng streams are deterministic") {
    Rng a(42, 3), b(42, 3), c(42, 4);
    bool same = true, differ = false;
    for (int i = 0; i < 64; ++i) {
        double x = a.gaussian(), y = b.gaussian(), z = c.gaussian();
        same = same && (x == y);
        differ = differ || (x != z);
    }
    CHECK(same);
    CHECK(differ);
}

TEST_CASE("haar unitarity and phase fix") {
    Rng rng(7, 0);
    int n = 24;
    Eigen::MatrixXcd u = sample_haar_unitary(n, rng);
    CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-10);
}

TEST_CASE("haar first column is uniform on the sphere") {
    int n = 16, trials = 600;
    double sum = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(11, static_cast<std::uint64_t>(t));
        Eigen::MatrixXcd u = sample_haar_unitary(n, rng);
        sum += std::norm(u(0, 0));
    }
    double mean = sum / trials;
    // E|u11|^2 = 1/n, Var ~ (1/n)^2 per sample
    double stderr_bound = 4.0 / (n * std::sqrt(static_cast<double>(trials)));
    CHECK(std::abs(mean - 1.0 / n) < stderr_bound);
}

TEST_CASE("hermitian samples") {
    Rng rng(3, 0);
    for (const char* law : {"semicircle", "free-poisson", "mp:1/2", "spectrum:1,-1,2"}) {
        Eigen::MatrixXcd y = sample_matrix(SpectralLaw::parse(law), 60, 60, rng);
        CHECK((y - y.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("gue second moment near one") {
    Rng rng(5, 0);
    int n = 512;
    Eigen::MatrixXcd y = sample_matrix(SpectralLaw::parse("semicircle"), n, n, rng);
    double m2 = (y * y).trace().real() / n;
    CHECK(std::abs(m2 - 1.0) < 0.05);
}

TEST_CASE("wishart mean eigenvalue near one") {
    Rng rng(6, 0);
    int n = 512;
    Eigen::MatrixXcd y = sample_matrix(SpectralLaw::parse("mp:1"), n, n, rng);
    double m1 = y.trace().real() / n;
    CHECK(std::abs(m1 - 1.0) < 0.05);
}

TEST_CASE("constant spectrum gives a scalar matrix") {
    Rng rng(8, 0);
    Eigen::MatrixXcd y = sample_matrix(SpectralLaw::parse("spectrum:2.5"), 40, 40, rng);
    CHECK((y - 2.5 * Eigen::MatrixXcd::Identity(40, 40)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("simulation is reproducible") {
    EnsembleSpec spec = gue_spec({48, 48}, 10, 2025);
    SimulationResult a = empirical_wishart_moments(spec, 2);
    SimulationResult b = empirical_wishart_moments(spec, 2);
    for (int k = 0; k < 2; ++k) {
        CHECK(a.moments[k].estimate == b.moments[k].estimate);
        CHECK(a.moments[k].stderr_ == b.moments[k].stderr_);
    }
    spec.seed = 2026;
    SimulationResult c = empirical_wishart_moments(spec, 2);
    CHECK(a.moments[0].estimate != c.moments[0].estimate);
}

TEST_CASE("spec validation") {
    EnsembleSpec spec = gue_spec({32, 32}, 5, 1);
    spec.block_sizes.pop_back();
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = gue_spec({32, 32}, 0, 1);
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = gue_spec({32, 32}, 5, 1);
    spec.laws.clear();
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("square gue blocks converge to catalan moments") {
    EnsembleSpec spec = gue_spec({96, 96}, 60, 7);
    ConvergenceReport rep = convergence_report(spec, params_for(spec, 2), 2);
    CHECK(rep.pass);
    CHECK(std::abs(rep.rows[0].exact - 1.0) < 1e-12);
    CHECK(std::abs(rep.rows[1].exact - 2.0) < 1e-12);
}

TEST_CASE("two independent gue factors converge to fuss-catalan") {
    EnsembleSpec spec = gue_spec({72, 72, 72}, 50, 9);
    ConvergenceReport rep = convergence_report(spec, params_for(spec, 2), 2);
    CHECK(rep.pass);
    CHECK(std::abs(rep.rows[1].exact - 3.0) < 1e-12);
}

TEST_CASE("finite-size bias shrinks with n") {
    auto seed_averaged_bias = [&](int half) {
        double total = 0;
        int seeds = 8;
        for (int s = 0; s < seeds; ++s) {
            EnsembleSpec spec = gue_spec({half, half}, 24, 1000 + static_cast<std::uint64_t>(s));
            SimulationResult r = empirical_wishart_moments(spec, 2);
            total += r.moments[1].estimate;
        }
        return std::abs(total / seeds - 2.0);
    };
    CHECK(seed_averaged_bias(128) <= seed_averaged_bias(32));
}

TEST_CASE("negative control with wrong dims fails") {
    EnsembleSpec spec = gue_spec({96, 48}, 40, 13);  // d2 = 1/2 in truth
    ModelParams lying = ModelParams::make(
        1, {1, 1}, labels_distinct(1),
        {{0, semicircle_cumulants(4)}});  // claims d2 = 1, so exact m1 = 1 vs true 1/2
    ConvergenceReport rep = convergence_report(spec, lying, 2);
    CHECK_FALSE(rep.pass);
}
