#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cskit/rational.hpp"

namespace cskit {

// Truncated formal power series sum a_k z^k, k <= order. The order is the
// number of coefficients that are actually known; operations never report
// coefficients beyond what their inputs can justify. Immutable after
// construction, so values are freely shareable across threads.
class FormalPowerSeries {
public:
    FormalPowerSeries() : coeffs_(1, Rational(0)) {}

    explicit FormalPowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.assign(1, Rational(0));
    }

    FormalPowerSeries(std::initializer_list<Rational> coeffs)
        : FormalPowerSeries(std::vector<Rational>(coeffs)) {}

    static FormalPowerSeries constant(const Rational& c, int order);
    // z as a series of the given order (order >= 1).
    static FormalPowerSeries identity(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    FormalPowerSeries truncated(int order) const;
    // Zero-extension: only valid when the caller knows the tail is exactly
    // zero (polynomial data); ordinary arithmetic never calls this.
    FormalPowerSeries zero_extended(int order) const;

    bool operator==(const FormalPowerSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const FormalPowerSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

FormalPowerSeries series_add(const FormalPowerSeries& a, const FormalPowerSeries& b);
FormalPowerSeries series_sub(const FormalPowerSeries& a, const FormalPowerSeries& b);
FormalPowerSeries series_neg(const FormalPowerSeries& a);
FormalPowerSeries series_scale(const Rational& c, const FormalPowerSeries& a);

// Cauchy product truncated to min(order(a), order(b)).
FormalPowerSeries series_mul(const FormalPowerSeries& a, const FormalPowerSeries& b);

// Quotient q with q*b = a through the common truncation order; b(0) != 0.
FormalPowerSeries series_div(const FormalPowerSeries& a, const FormalPowerSeries& b);

// f(g(z)) truncated to min(order(f), order(g)); g(0) = 0.
FormalPowerSeries series_compose(const FormalPowerSeries& f, const FormalPowerSeries& g);

// Compositional inverse h with g(h(z)) = z; needs g(0) = 0, g'(0) != 0.
FormalPowerSeries series_revert(const FormalPowerSeries& g);

// base^p as the binomial series in (base - 1); base(0) = 1, p rational.
FormalPowerSeries series_pow_rational(const FormalPowerSeries& base, const Rational& p);

// Multiplication by z: shifts coefficients up one slot, and the result order
// grows by one because a_k determines the coefficient of z^{k+1} exactly.
FormalPowerSeries series_shift_up(const FormalPowerSeries& a);

// Division by z for a series with a(0) = 0; result order drops by one.
FormalPowerSeries series_shift_down(const FormalPowerSeries& a);

} // namespace cskit
