#include <wtp/counting.hpp>

#include <stdexcept>

namespace wtp {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational binomial_rational(const Rational& x, long n) {
    if (n < 0) return 0;
    Rational num(1);
    for (long i = 0; i < n; ++i) num *= x - Rational(i);
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    return num / Rational(fact);
}

BigInt catalan(long n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
    return binomial(2 * n, n) / BigInt(n + 1);
}

Rational fuss_catalan(long k, long p) {
    if (k < 1 || p < 1) throw std::invalid_argument("fuss_catalan: need k,p >= 1");
    return Rational(binomial((p + 1) * k, p * k + 1)) / Rational(k);
}

Rational raney(long n, const Rational& p, const Rational& r) {
    if (n < 0) throw std::invalid_argument("raney: n must be >= 0");
    Rational denom = (p + 1) * Rational(n) + r;
    if (denom == 0) throw std::invalid_argument("raney: (p+1)n + r must be nonzero");
    return r / denom * binomial_rational(denom, n);
}

}  // namespace wtp
