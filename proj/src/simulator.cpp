#include <wtp/simulator.hpp>

#include <wtp/moment_engine.hpp>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wtp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

SpectralLaw SpectralLaw::parse(const std::string& text) {
    SpectralLaw law;
    if (text == "semicircle") {
        law.kind = Kind::semicircle;
    } else if (text == "free-poisson") {
        law.kind = Kind::marchenko_pastur;
        law.shape = 1;
    } else if (text.rfind("mp:", 0) == 0) {
        law.kind = Kind::marchenko_pastur;
        law.shape = rational_from_string(text.substr(3));
        if (law.shape <= 0) throw std::invalid_argument("mp shape must be positive");
    } else if (text.rfind("spectrum:", 0) == 0) {
        law.kind = Kind::explicit_spectrum;
        std::string rest = text.substr(9);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            law.spectrum.push_back(std::stod(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        if (law.spectrum.empty()) throw std::invalid_argument("empty spectrum");
    } else {
        throw std::invalid_argument("unknown spectral law '" + text + "'");
    }
    return law;
}

CumulantSequence SpectralLaw::cumulants(int length) const {
    switch (kind) {
        case Kind::semicircle:
            return semicircle_cumulants(length);
        case Kind::marchenko_pastur:
            return mp_cumulants(shape, length);
        case Kind::explicit_spectrum:
            throw std::invalid_argument("explicit spectra carry no exact cumulant sequence");
    }
    throw std::logic_error("unreachable");
}

int EnsembleSpec::total_size() const {
    return std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
}

void EnsembleSpec::validate() const {
    if (labels.empty()) throw std::invalid_argument("EnsembleSpec: need at least one factor");
    if (block_sizes.size() != labels.size() + 1)
        throw std::invalid_argument("EnsembleSpec: need p+1 block sizes");
    for (int b : block_sizes)
        if (b < 1) throw std::invalid_argument("EnsembleSpec: block sizes must be positive");
    for (int u : labels)
        if (!laws.count(u))
            throw std::invalid_argument("EnsembleSpec: label " + std::to_string(u) +
                                        " has no law");
    if (trials < 1) throw std::invalid_argument("EnsembleSpec: trials must be >= 1");
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : eng_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x51ed2701ull))) {}

double Rng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

Eigen::MatrixXcd sample_haar_unitary(int n, Rng& rng) {
    Eigen::MatrixXcd g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            g(i, j) = std::complex<double>(rng.gaussian(), rng.gaussian()) / std::sqrt(2.0);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        std::complex<double> d = r(j, j);
        std::complex<double> phase = (std::abs(d) == 0.0) ? 1.0 : d / std::abs(d);
        q.col(j) *= phase;
    }
    return q;
}

Eigen::MatrixXcd sample_matrix(const SpectralLaw& law, int n, int base, Rng& rng) {
    if (n < 1 || base < 1) throw std::invalid_argument("sample_matrix: bad size");
    switch (law.kind) {
        case SpectralLaw::Kind::semicircle: {
            Eigen::MatrixXcd y(n, n);
            double off = 1.0 / std::sqrt(2.0 * base);
            double diag = 1.0 / std::sqrt(static_cast<double>(base));
            for (int i = 0; i < n; ++i) {
                y(i, i) = rng.gaussian() * diag;
                for (int j = i + 1; j < n; ++j) {
                    std::complex<double> z(rng.gaussian() * off, rng.gaussian() * off);
                    y(i, j) = z;
                    y(j, i) = std::conj(z);
                }
            }
            return y;
        }
        case SpectralLaw::Kind::marchenko_pastur: {
            long cols = std::lround(law.shape.get_d() * base);
            int m = static_cast<int>(std::max(1l, cols));
            Eigen::MatrixXcd g(n, m);
            double scale = 1.0 / std::sqrt(2.0 * base);
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < n; ++i)
                    g(i, j) = std::complex<double>(rng.gaussian() * scale, rng.gaussian() * scale);
            return g * g.adjoint();
        }
        case SpectralLaw::Kind::explicit_spectrum: {
            Eigen::VectorXd lambda(n);
            for (int i = 0; i < n; ++i) {
                size_t idx = static_cast<size_t>(rng.uniform() * law.spectrum.size());
                if (idx >= law.spectrum.size()) idx = law.spectrum.size() - 1;
                lambda(i) = law.spectrum[idx];
            }
            Eigen::MatrixXcd u = sample_haar_unitary(n, rng);
            Eigen::MatrixXcd y = u * lambda.asDiagonal() * u.adjoint();
            return (y + y.adjoint()) / 2.0;
        }
    }
    throw std::logic_error("unreachable");
}

SimulationResult empirical_wishart_moments(const EnsembleSpec& spec, int k_max) {
    spec.validate();
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    int p = spec.p();
    int total = spec.total_size();
    int base = spec.block_sizes[0];
    std::vector<int> offset(spec.block_sizes.size() + 1, 0);
    for (size_t i = 0; i < spec.block_sizes.size(); ++i)
        offset[i + 1] = offset[i] + spec.block_sizes[i];

    std::vector<int> distinct;
    for (int u : spec.labels)
        if (std::find(distinct.begin(), distinct.end(), u) == distinct.end())
            distinct.push_back(u);
    std::sort(distinct.begin(), distinct.end());

    std::vector<std::vector<double>> samples(static_cast<size_t>(k_max));
    for (auto& s : samples) s.reserve(static_cast<size_t>(spec.trials));

    for (int trial = 0; trial < spec.trials; ++trial) {
        Rng rng(spec.seed, static_cast<std::uint64_t>(trial));
        std::map<int, Eigen::MatrixXcd> family;
        for (int u : distinct)
            family[u] = sample_matrix(spec.laws.at(u), total, base, rng);

        Eigen::MatrixXcd b = family[spec.labels[0]].block(
            offset[0], offset[1], spec.block_sizes[0], spec.block_sizes[1]);
        for (int l = 1; l < p; ++l) {
            b = b * family[spec.labels[static_cast<size_t>(l)]].block(
                        offset[l], offset[l + 1], spec.block_sizes[static_cast<size_t>(l)],
                        spec.block_sizes[static_cast<size_t>(l) + 1]);
        }
        Eigen::MatrixXcd w = b * b.adjoint();
        Eigen::MatrixXcd cur = w;
        for (int k = 1; k <= k_max; ++k) {
            samples[static_cast<size_t>(k) - 1].push_back(cur.trace().real() / base);
            if (k < k_max) cur = cur * w;
        }
    }

    SimulationResult result;
    result.moments.resize(static_cast<size_t>(k_max));
    for (int k = 0; k < k_max; ++k) {
        const auto& s = samples[static_cast<size_t>(k)];
        double mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
        double var = 0;
        for (double x : s) var += (x - mean) * (x - mean);
        var = s.size() > 1 ? var / static_cast<double>(s.size() - 1) : 0.0;
        result.moments[static_cast<size_t>(k)] = {
            mean, std::sqrt(var / static_cast<double>(s.size())),
            static_cast<int>(s.size())};
    }
    return result;
}

ConvergenceReport convergence_report(const EnsembleSpec& spec, const ModelParams& params,
                                     int k_max, double rel_tol) {
    SimulationResult sim = empirical_wishart_moments(spec, k_max);
    ConvergenceReport rep;
    for (int k = 1; k <= k_max; ++k) {
        const MomentEstimate& est = sim.moments[static_cast<size_t>(k) - 1];
        double exact = limit_moment_enumerative(k, params).moment.get_d();
        double tol = std::max(4.0 * est.stderr_, rel_tol * std::abs(exact));
        bool ok = std::abs(est.estimate - exact) <= tol;
        rep.rows.push_back({k, est.estimate, est.stderr_, exact, ok});
        rep.pass = rep.pass && ok;
    }
    return rep;
}

}  // namespace wtp
