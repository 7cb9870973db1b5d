#include "cskit/series.hpp"

#include <algorithm>
#include <sstream>

#include "cskit/errors.hpp"

namespace cskit {

FormalPowerSeries FormalPowerSeries::constant(const Rational& c, int order) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1, Rational(0));
    v[0] = c;
    return FormalPowerSeries(std::move(v));
}

FormalPowerSeries FormalPowerSeries::identity(int order) {
    if (order < 1) throw Error(errc::InsufficientOrder, "identity series needs order >= 1");
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1, Rational(0));
    v[1] = 1;
    return FormalPowerSeries(std::move(v));
}

FormalPowerSeries FormalPowerSeries::truncated(int order) const {
    if (order >= this->order()) return *this;
    return FormalPowerSeries(
        std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

FormalPowerSeries FormalPowerSeries::zero_extended(int order) const {
    if (order <= this->order()) return truncated(order);
    std::vector<Rational> v = coeffs_;
    v.resize(static_cast<std::size_t>(order) + 1, Rational(0));
    return FormalPowerSeries(std::move(v));
}

std::string FormalPowerSeries::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) os << ' ';
        os << coeffs_[k].str();
    }
    return os.str();
}

FormalPowerSeries series_add(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) v[k] = a[k] + b[k];
    return FormalPowerSeries(std::move(v));
}

FormalPowerSeries series_sub(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) v[k] = a[k] - b[k];
    return FormalPowerSeries(std::move(v));
}

FormalPowerSeries series_neg(const FormalPowerSeries& a) {
    std::vector<Rational> v(a.coeffs());
    for (auto& c : v) c = -c;
    return FormalPowerSeries(std::move(v));
}

FormalPowerSeries series_scale(const Rational& c, const FormalPowerSeries& a) {
    std::vector<Rational> v(a.coeffs());
    for (auto& x : v) x *= c;
    return FormalPowerSeries(std::move(v));
}

FormalPowerSeries series_mul(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            v[i + j] += a[i] * b[j];
        }
    }
    return FormalPowerSeries(std::move(v));
}

FormalPowerSeries series_div(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    if (b[0] == 0)
        throw Error(errc::ZeroConstantTerm, "division by a series with zero constant term");
    int n = std::min(a.order(), b.order());
    std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return FormalPowerSeries(std::move(q));
}

FormalPowerSeries series_compose(const FormalPowerSeries& f, const FormalPowerSeries& g) {
    if (g[0] != 0)
        throw Error(errc::NonzeroInnerConstant, "inner series must vanish at zero");
    int n = std::min(f.order(), g.order());
    FormalPowerSeries gt = g.truncated(n);
    // Horner evaluation; g(0) = 0 keeps every computed coefficient exact.
    FormalPowerSeries acc = FormalPowerSeries::constant(f[std::min(f.order(), n)], n);
    for (int k = std::min(f.order(), n) - 1; k >= 0; --k)
        acc = series_add(series_mul(acc, gt), FormalPowerSeries::constant(f[k], n));
    return acc;
}

FormalPowerSeries series_revert(const FormalPowerSeries& g) {
    if (g[0] != 0 || g.order() < 1 || g[1] == 0)
        throw Error(errc::NotInvertible, "reversion needs g(0) = 0 and g'(0) != 0");
    int n = g.order();
    std::vector<Rational> h(static_cast<std::size_t>(n) + 1, Rational(0));
    h[1] = Rational(1) / g[1];
    for (int k = 2; k <= n; ++k) {
        // With h known through order k-1, the z^k coefficient of g(h) only
        // misses the linear contribution g'(0) * h_k.
        FormalPowerSeries trial = series_compose(g.truncated(k), FormalPowerSeries(
            std::vector<Rational>(h.begin(), h.begin() + k + 1)));
        h[k] = -trial[k] / g[1];
    }
    return FormalPowerSeries(std::move(h));
}

FormalPowerSeries series_pow_rational(const FormalPowerSeries& base, const Rational& p) {
    if (base[0] != 1)
        throw Error(errc::NonUnitConstant, "rational power needs constant term 1");
    int n = base.order();
    std::vector<Rational> h(static_cast<std::size_t>(n) + 1, Rational(0));
    h[0] = 1;
    // From f h' = p f' h: n h_n = sum_{k=1}^{n} ((p+1)k - n) f_k h_{n-k}.
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (base[k] == 0) continue;
            acc += ((p + 1) * k - m) * base[k] * h[m - k];
        }
        h[m] = acc / m;
    }
    return FormalPowerSeries(std::move(h));
}

FormalPowerSeries series_shift_up(const FormalPowerSeries& a) {
    std::vector<Rational> v(a.coeffs().size() + 1, Rational(0));
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) v[k + 1] = a[static_cast<int>(k)];
    return FormalPowerSeries(std::move(v));
}

FormalPowerSeries series_shift_down(const FormalPowerSeries& a) {
    if (a[0] != 0)
        throw Error(errc::ZeroConstantTerm, "cannot divide by z: nonzero constant term");
    if (a.order() < 1) throw Error(errc::InsufficientOrder, "series too short to shift down");
    return FormalPowerSeries(std::vector<Rational>(a.coeffs().begin() + 1, a.coeffs().end()));
}

} // namespace cskit
