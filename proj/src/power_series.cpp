#include <wtp/power_series.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wtp {

FormalPowerSeries fps_z(int order) {
    FormalPowerSeries f(order);
    if (order >= 1) f[1] = 1;
    return f;
}

FormalPowerSeries fps_const(const Rational& c, int order) {
    FormalPowerSeries f(order);
    f[0] = c;
    return f;
}

FormalPowerSeries truncate(const FormalPowerSeries& f, int order) {
    FormalPowerSeries g(order);
    for (int i = 0; i <= std::min(order, f.order()); ++i) g[i] = f[i];
    return g;
}

namespace {
int joint_order(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    return std::min(a.order(), b.order());
}
}  // namespace

FormalPowerSeries operator+(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    int K = joint_order(a, b);
    FormalPowerSeries r(K);
    for (int i = 0; i <= K; ++i) r[i] = a[i] + b[i];
    return r;
}

FormalPowerSeries operator-(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    int K = joint_order(a, b);
    FormalPowerSeries r(K);
    for (int i = 0; i <= K; ++i) r[i] = a[i] - b[i];
    return r;
}

FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    int K = joint_order(a, b);
    FormalPowerSeries r(K);
    for (int i = 0; i <= K; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= K; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

FormalPowerSeries operator*(const Rational& c, const FormalPowerSeries& a) {
    FormalPowerSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = c * a[i];
    return r;
}

FormalPowerSeries operator+(const FormalPowerSeries& a, const Rational& c) {
    FormalPowerSeries r = a;
    r[0] += c;
    return r;
}

FormalPowerSeries operator-(const FormalPowerSeries& a, const Rational& c) {
    FormalPowerSeries r = a;
    r[0] -= c;
    return r;
}

bool is_zero(const FormalPowerSeries& f) {
    for (int i = 0; i <= f.order(); ++i)
        if (f[i] != 0) return false;
    return true;
}

FormalPowerSeries pow_series(const FormalPowerSeries& f, int e) {
    if (e < 0) throw std::invalid_argument("pow_series: negative exponent");
    FormalPowerSeries acc = fps_const(1, f.order());
    FormalPowerSeries base = f;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FormalPowerSeries reciprocal(const FormalPowerSeries& f) {
    if (f[0] == 0) throw std::invalid_argument("reciprocal: constant term vanishes");
    int K = f.order();
    FormalPowerSeries r(K);
    r[0] = 1 / f[0];
    for (int n = 1; n <= K; ++n) {
        Rational s(0);
        for (int i = 1; i <= n; ++i) s += f[i] * r[n - i];
        r[n] = -s / f[0];
    }
    return r;
}

FormalPowerSeries compose(const FormalPowerSeries& f, const FormalPowerSeries& g) {
    if (g[0] != 0) throw std::invalid_argument("compose: inner series needs zero constant term");
    int K = joint_order(f, g);
    FormalPowerSeries r = fps_const(f[f.order()], K);
    for (int i = f.order() - 1; i >= 0; --i) r = r * g + f[i];
    return truncate(r, K);
}

FormalPowerSeries compositional_inverse(const FormalPowerSeries& f) {
    if (f[0] != 0) throw std::invalid_argument("compositional_inverse: f(0) must be 0");
    if (f.order() < 1 || f[1] == 0)
        throw std::invalid_argument("compositional_inverse: f'(0) must be nonzero");
    int K = f.order();
    // h = z / f(z), a unit
    FormalPowerSeries u(K - 1);
    for (int i = 0; i <= K - 1; ++i) u[i] = f[i + 1];
    FormalPowerSeries h = reciprocal(u);
    FormalPowerSeries g(K);
    FormalPowerSeries hk = h;  // h^k
    for (int k = 1; k <= K; ++k) {
        if (k - 1 <= hk.order()) g[k] = hk[k - 1] / Rational(k);
        if (k < K) hk = hk * h;
    }
    return g;
}

FormalPowerSeries shift_up(const FormalPowerSeries& f) {
    FormalPowerSeries r(f.order());
    for (int i = 1; i <= f.order(); ++i) r[i] = f[i - 1];
    return r;
}

FormalPowerSeries shift_down(const FormalPowerSeries& f) {
    if (f[0] != 0) throw std::invalid_argument("shift_down: constant term vanishes required");
    FormalPowerSeries r(f.order());
    for (int i = 0; i < f.order(); ++i) r[i] = f[i + 1];
    return r;
}

std::string to_string(const FormalPowerSeries& f) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i <= f.order(); ++i) {
        if (i) os << ", ";
        os << f[i].get_str();
    }
    os << ']';
    return os.str();
}

}  // namespace wtp
