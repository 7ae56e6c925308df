#include <doctest.h>

#include <wtp/counting.hpp>

using namespace wtp;

TEST_CASE("catalan numbers") {
    BigInt expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (long n = 0; n <= 10; ++n) CHECK(catalan(n) == expected[n]);
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("integer binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("generalized binomial handles half-integers") {
    CHECK(binomial_rational(make_rational(7, 2), 2) == make_rational(35, 8));
    CHECK(binomial_rational(Rational(4), 2) == 6);
    CHECK(binomial_rational(make_rational(-1, 2), 1) == make_rational(-1, 2));
    CHECK(binomial_rational(Rational(3), 0) == 1);
}

TEST_CASE("fuss-catalan values") {
    CHECK(fuss_catalan(2, 4) == 5);
    for (long p = 1; p <= 6; ++p) CHECK(fuss_catalan(1, p) == 1);
    // F_k(1) is Catalan
    for (long k = 1; k <= 8; ++k) CHECK(fuss_catalan(k, 1) == Rational(catalan(k)));
    long f2[] = {0, 1, 3, 12, 55};
    long f3[] = {0, 1, 4, 22, 140};
    for (long k = 1; k <= 4; ++k) {
        CHECK(fuss_catalan(k, 2) == f2[k]);
        CHECK(fuss_catalan(k, 3) == f3[k]);
        CHECK(is_integer(fuss_catalan(k, 5)));
    }
    CHECK_THROWS_AS(fuss_catalan(0, 2), std::invalid_argument);
}

TEST_CASE("raney numbers at half-integer r") {
    CHECK(Rational(16) * raney(2, 2, make_rational(1, 2)) == 22);
    long rescaled[] = {1, 2, 22, 340, 6118};
    Rational pw(1);
    for (long n = 0; n <= 4; ++n) {
        CHECK(pw * raney(n, 2, make_rational(1, 2)) == rescaled[n]);
        pw *= 4;
    }
    for (long n = 0; n <= 8; ++n) CHECK(raney(n, 1, 1) == Rational(catalan(n)));
}

TEST_CASE("raney convolution identity") {
    auto convolves = [](const Rational& p, const Rational& r, const Rational& s, long nmax) {
        for (long n = 0; n <= nmax; ++n) {
            Rational lhs(0);
            for (long k = 0; k <= n; ++k) lhs += raney(k, p, r) * raney(n - k, p, s);
            CHECK(lhs == raney(n, p, r + s));
        }
    };
    convolves(2, make_rational(1, 2), make_rational(1, 2), 6);
    convolves(2, make_rational(1, 2), make_rational(3, 2), 5);
    convolves(3, 1, 2, 5);
    convolves(2, make_rational(2, 3), make_rational(5, 3), 4);
}
