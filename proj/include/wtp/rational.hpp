#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace wtp {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form (mpq_class's two-argument constructor does not
/// canonicalize on its own).
inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "a", "-a" or "a/b" into an exact rational.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational pow_rational(const Rational& base, unsigned e) {
    Rational acc(1), b = base;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

}  // namespace wtp
