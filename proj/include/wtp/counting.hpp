#pragma once

#include <wtp/rational.hpp>

namespace wtp {

/// binom(n, k) for integer n >= 0; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Generalized binom(x, n) = x(x-1)...(x-n+1)/n! for rational x, integer n >= 0.
Rational binomial_rational(const Rational& x, long n);

/// n-th Catalan number, n >= 0.
BigInt catalan(long n);

/// Fuss-Catalan F_k(p) = (1/k) binom((p+1)k, pk+1); integer-valued for k,p >= 1.
Rational fuss_catalan(long k, long p);

/// Raney number R_n(p, r) = r/((p+1)n + r) binom((p+1)n + r, n) with the
/// generalized binomial; p and r may be rational (half-integer r is exact).
Rational raney(long n, const Rational& p, const Rational& r);

}  // namespace wtp
