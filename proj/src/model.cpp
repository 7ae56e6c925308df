#include <wtp/model.hpp>

#include <wtp/counting.hpp>

namespace wtp {

CumulantSequence semicircle_cumulants(int length) {
    CumulantSequence c;
    c.values.assign(static_cast<size_t>(length), Rational(0));
    if (length >= 2) c.values[1] = 1;
    return c;
}

CumulantSequence free_poisson_cumulants(int length) {
    CumulantSequence c;
    c.values.assign(static_cast<size_t>(length), Rational(1));
    return c;
}

CumulantSequence mp_cumulants(const Rational& t, int length) {
    CumulantSequence c;
    c.values.assign(static_cast<size_t>(length), t);
    return c;
}

CumulantSequence free_meixner_cumulants(const Rational& a, const Rational& b, int length) {
    CumulantSequence c;
    c.values.assign(static_cast<size_t>(length), Rational(0));
    for (int n = 1; 2 * n <= length; ++n) {
        Rational r = a * pow_rational(b - a, static_cast<unsigned>(n - 1)) / Rational(n) *
                     Rational(binomial(2 * n - 2, n - 1));
        c.values[static_cast<size_t>(2 * n) - 1] = r;
    }
    return c;
}

ModelParams ModelParams::make(int p, std::vector<Rational> dims, std::vector<int> labels,
                              std::map<int, CumulantSequence> cumulants) {
    if (p < 1) throw std::invalid_argument("ModelParams: p must be >= 1");
    if (static_cast<int>(dims.size()) != p + 1)
        throw std::invalid_argument("ModelParams: need p+1 dimensions");
    for (const auto& d : dims)
        if (d <= 0) throw std::invalid_argument("ModelParams: dimensions must be positive");
    if (static_cast<int>(labels.size()) != p)
        throw std::invalid_argument("ModelParams: need p labels");
    for (int u : labels)
        if (!cumulants.count(u))
            throw std::invalid_argument("ModelParams: label " + std::to_string(u) +
                                        " has no cumulant sequence");
    ModelParams mp;
    mp.p = p;
    mp.dims = std::move(dims);
    mp.labels = std::move(labels);
    mp.cumulants = std::move(cumulants);
    for (auto& d : mp.dims) d.canonicalize();
    for (auto& [u, seq] : mp.cumulants)
        for (auto& v : seq.values) v.canonicalize();
    return mp;
}

bool ModelParams::labels_all_same() const {
    for (int u : labels)
        if (u != labels.front()) return false;
    return true;
}

bool ModelParams::labels_all_distinct() const {
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j]) return false;
    return true;
}

const CumulantSequence& ModelParams::cumulants_of(int label) const {
    auto it = cumulants.find(label);
    if (it == cumulants.end())
        throw std::invalid_argument("no cumulant sequence for label " + std::to_string(label));
    return it->second;
}

}  // namespace wtp
