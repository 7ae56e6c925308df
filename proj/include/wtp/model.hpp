#pragma once

#include <wtp/rational.hpp>
#include <wtp/words.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtp {

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Free cumulants r_1, r_2, ... stored to a finite truncation. Reading past
/// the truncation is an error, never a silent zero.
struct CumulantSequence {
    std::vector<Rational> values;  // values[i] holds r_{i+1}

    int length() const { return static_cast<int>(values.size()); }

    const Rational& at(int j) const {
        if (j < 1 || j > length())
            throw TruncationError("cumulant r_" + std::to_string(j) +
                                  " beyond truncation " + std::to_string(length()));
        return values[static_cast<size_t>(j) - 1];
    }
};

CumulantSequence semicircle_cumulants(int length);
CumulantSequence free_poisson_cumulants(int length);
CumulantSequence mp_cumulants(const Rational& t, int length);
/// Even cumulants of the free Meixner law with u=v and 0<b<a:
/// r_{2n} = a(b-a)^{n-1}/n binom(2n-2, n-1); odd cumulants vanish.
CumulantSequence free_meixner_cumulants(const Rational& a, const Rational& b, int length);

/// Parameters of the limit model: p factors, asymptotic dimensions
/// d_1..d_{p+1}, a label per factor and a cumulant sequence per label.
struct ModelParams {
    int p = 1;
    std::vector<Rational> dims;
    std::vector<int> labels;
    std::map<int, CumulantSequence> cumulants;

    static ModelParams make(int p, std::vector<Rational> dims, std::vector<int> labels,
                            std::map<int, CumulantSequence> cumulants);

    bool labels_all_same() const;
    bool labels_all_distinct() const;
    Word base_word() const { return make_W(p, labels); }
    const CumulantSequence& cumulants_of(int label) const;
};

/// Verification outcome: a pass flag plus one line per check.
struct Report {
    bool pass = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what) {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { lines.push_back("note " + what); }
};

}  // namespace wtp
