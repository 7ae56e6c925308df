#pragma once

#include <wtp/rational.hpp>

#include <vector>

namespace wtp {

/// Truncated formal power series over the rationals. Coefficients 0..K are
/// stored; every operation is exact to the stated truncation order.
class FormalPowerSeries {
  public:
    FormalPowerSeries() : c_(1, Rational(0)) {}
    explicit FormalPowerSeries(int order) : c_(static_cast<size_t>(order) + 1, Rational(0)) {}
    explicit FormalPowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.assign(1, Rational(0));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rational& operator[](int i) { return c_[static_cast<size_t>(i)]; }

    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const FormalPowerSeries&) const = default;

  private:
    std::vector<Rational> c_;
};

FormalPowerSeries fps_z(int order);                           // the series z
FormalPowerSeries fps_const(const Rational& c, int order);    // constant c

FormalPowerSeries truncate(const FormalPowerSeries& f, int order);

FormalPowerSeries operator+(const FormalPowerSeries& a, const FormalPowerSeries& b);
FormalPowerSeries operator-(const FormalPowerSeries& a, const FormalPowerSeries& b);
FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b);
FormalPowerSeries operator*(const Rational& c, const FormalPowerSeries& a);
FormalPowerSeries operator+(const FormalPowerSeries& a, const Rational& c);
FormalPowerSeries operator-(const FormalPowerSeries& a, const Rational& c);

bool is_zero(const FormalPowerSeries& f);

FormalPowerSeries pow_series(const FormalPowerSeries& f, int e);

/// 1/f; requires f(0) != 0.
FormalPowerSeries reciprocal(const FormalPowerSeries& f);

/// f(g); requires g(0) = 0.
FormalPowerSeries compose(const FormalPowerSeries& f, const FormalPowerSeries& g);

/// g with f(g(z)) = z, by Lagrange inversion ([z^k] g = (1/k)[t^{k-1}](t/f)^k);
/// requires f(0) = 0 and f'(0) != 0.
FormalPowerSeries compositional_inverse(const FormalPowerSeries& f);

/// Multiplies by z (dropping the top coefficient).
FormalPowerSeries shift_up(const FormalPowerSeries& f);

/// Divides by z; requires f(0) = 0. The result keeps the same order with a
/// zero top coefficient.
FormalPowerSeries shift_down(const FormalPowerSeries& f);

std::string to_string(const FormalPowerSeries& f);

}  // namespace wtp
