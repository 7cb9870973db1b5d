#pragma once

#include <vector>

#include "cskit/rational.hpp"
#include "cskit/series.hpp"

namespace cskit {

// Moments (m_0, ..., m_N) of a putative probability measure; m_0 = 1 always.
struct MomentSequence {
    std::vector<Rational> moments;

    MomentSequence() : moments{Rational(1)} {}
    explicit MomentSequence(std::vector<Rational> m);

    int order() const { return static_cast<int>(moments.size()) - 1; }
    const Rational& operator[](int n) const { return moments[static_cast<std::size_t>(n)]; }

    // M(z) = sum m_n z^n as a series of the same order.
    FormalPowerSeries generating_series() const { return FormalPowerSeries(moments); }

    bool operator==(const MomentSequence& o) const { return moments == o.moments; }
};

// Free cumulants (kappa_1, ..., kappa_N); entry n is stored at index n-1.
struct FreeCumulantSequence {
    std::vector<Rational> cumulants;

    FreeCumulantSequence() = default;
    explicit FreeCumulantSequence(std::vector<Rational> k) : cumulants(std::move(k)) {}

    int order() const { return static_cast<int>(cumulants.size()); }
    const Rational& kappa(int n) const { return cumulants[static_cast<std::size_t>(n - 1)]; }

    bool operator==(const FreeCumulantSequence& o) const { return cumulants == o.cumulants; }
};

// Coefficients of the S-transform at 0; defined only for m_1 != 0, with
// S(0) = 1/m_1.
struct STransformSeries {
    FormalPowerSeries series;

    STransformSeries() = default;
    explicit STransformSeries(FormalPowerSeries s) : series(std::move(s)) {}

    int order() const { return series.order(); }
    bool operator==(const STransformSeries& o) const { return series == o.series; }
};

// Unique kappa with R(zM(z)) + 1 = M(z) through the order of m; solved by the
// triangular recursion kappa_n = m_n - sum_{s<n} kappa_s [z^{n-s}] M(z)^s.
FreeCumulantSequence moments_to_free_cumulants(const MomentSequence& m);

// Inverse direction; round trip with moments_to_free_cumulants is identity.
MomentSequence free_cumulants_to_moments(const FreeCumulantSequence& k);

// m_n -> t^n m_n (pushforward under x -> tx); t != 0.
MomentSequence dilate(const MomentSequence& m, const Rational& t);

// Coordinatewise cumulant sum; inputs must have equal orders.
FreeCumulantSequence free_additive_convolve(const FreeCumulantSequence& k1,
                                            const FreeCumulantSequence& k2);

struct ConvolutionPower {
    FreeCumulantSequence cumulants;
    // Existence of the power is only guaranteed for t >= 1; below that the
    // result is a formal cumulant rescaling and is flagged as such.
    bool formal = false;
};

ConvolutionPower free_convolution_power(const FreeCumulantSequence& k, const Rational& t);

// S solving M((z/(1+z)) S(z)) = 1+z; needs m_1 != 0. Result order is one
// less than the moment order.
STransformSeries moments_to_S(const MomentSequence& m);

// Moments of the measure whose S-transform is s1*s2, one order above the
// common S order (the z-shift in W(z) = z S(z)/(1+z) is exact).
MomentSequence free_multiplicative_convolve(const STransformSeries& s1,
                                            const STransformSeries& s2);

// Moments recovered from a single S-transform; shared tail of the
// multiplicative convolution pipeline.
MomentSequence moments_from_S(const STransformSeries& s);

// Moments to order N of the measure with S(z) = (1+bz)^{-p};
// requires b > 0, p > 0, max{p, 1/b} >= 1.
MomentSequence fuss_catalan_power(const Rational& b, const Rational& p, int N);

} // namespace cskit
