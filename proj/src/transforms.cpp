#include "cskit/transforms.hpp"

#include "cskit/errors.hpp"

namespace cskit {

MomentSequence::MomentSequence(std::vector<Rational> m) : moments(std::move(m)) {
    if (moments.empty() || moments[0] != 1)
        throw Error(errc::InvalidInput, "moment sequence must start with m_0 = 1");
}

namespace {

// [z^j] M(z)^s for s = 1, 2, ... produced incrementally. Only entries with
// index <= limit are maintained.
class MomentPowers {
public:
    MomentPowers(const std::vector<Rational>& m, int limit)
        : m_(m), limit_(limit), power_(static_cast<std::size_t>(limit) + 1, Rational(0)) {
        power_[0] = 1; // M^0
    }

    // advances from M^s to M^{s+1}
    void step() {
        std::vector<Rational> next(static_cast<std::size_t>(limit_) + 1, Rational(0));
        for (int i = 0; i <= limit_; ++i) {
            if (power_[i] == 0) continue;
            for (int j = 0; i + j <= limit_ && j < static_cast<int>(m_.size()); ++j)
                next[i + j] += power_[i] * m_[j];
        }
        power_.swap(next);
    }

    const Rational& at(int j) const { return power_[static_cast<std::size_t>(j)]; }

private:
    const std::vector<Rational>& m_;
    int limit_;
    std::vector<Rational> power_;
};

} // namespace

FreeCumulantSequence moments_to_free_cumulants(const MomentSequence& m) {
    int n = m.order();
    std::vector<Rational> kappa(static_cast<std::size_t>(n));
    // m_n = sum_{s=1}^{n} kappa_s [z^{n-s}] M^s, triangular in kappa.
    std::vector<std::vector<Rational>> powers; // powers[s-1][j] = [z^j] M^s
    MomentPowers mp(m.moments, n);
    for (int s = 1; s <= n; ++s) {
        mp.step();
        std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) row[j] = mp.at(j);
        powers.push_back(std::move(row));
    }
    for (int nn = 1; nn <= n; ++nn) {
        Rational acc = m[nn];
        for (int s = 1; s < nn; ++s) acc -= kappa[s - 1] * powers[s - 1][nn - s];
        kappa[nn - 1] = acc;
    }
    return FreeCumulantSequence(std::move(kappa));
}

MomentSequence free_cumulants_to_moments(const FreeCumulantSequence& k) {
    int n = k.order();
    std::vector<Rational> m(static_cast<std::size_t>(n) + 1, Rational(0));
    m[0] = 1;
    // Same triangular relation, filled in increasing n; the powers of M used
    // for m_n only touch entries already computed.
    for (int nn = 1; nn <= n; ++nn) {
        MomentPowers mp(m, nn);
        Rational acc = 0;
        for (int s = 1; s <= nn; ++s) {
            mp.step();
            acc += k.kappa(s) * mp.at(nn - s);
        }
        m[nn] = acc;
    }
    return MomentSequence(std::move(m));
}

MomentSequence dilate(const MomentSequence& m, const Rational& t) {
    if (t == 0) throw Error(errc::ZeroDilation, "dilation parameter must be nonzero");
    std::vector<Rational> v(m.moments);
    Rational tn = 1;
    for (std::size_t k = 1; k < v.size(); ++k) {
        tn *= t;
        v[k] *= tn;
    }
    return MomentSequence(std::move(v));
}

FreeCumulantSequence free_additive_convolve(const FreeCumulantSequence& k1,
                                            const FreeCumulantSequence& k2) {
    if (k1.order() != k2.order())
        throw Error(errc::OrderMismatch, "cumulant sequences have different orders");
    std::vector<Rational> v(k1.cumulants);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += k2.cumulants[i];
    return FreeCumulantSequence(std::move(v));
}

ConvolutionPower free_convolution_power(const FreeCumulantSequence& k, const Rational& t) {
    std::vector<Rational> v(k.cumulants);
    for (auto& x : v) x *= t;
    return ConvolutionPower{FreeCumulantSequence(std::move(v)), t < 1};
}

STransformSeries moments_to_S(const MomentSequence& m) {
    if (m.order() < 1 || m[1] == 0)
        throw Error(errc::ZeroMean, "S-transform needs a nonzero first moment");
    int n = m.order();
    // Phi = M - 1 vanishes at 0 with Phi'(0) = m_1; its inverse W satisfies
    // (z/(1+z)) S(z) = W(z), so S = (1+z) W(z)/z at order n-1.
    std::vector<Rational> phi(m.moments);
    phi[0] = 0;
    FormalPowerSeries w = series_revert(FormalPowerSeries(std::move(phi)));
    FormalPowerSeries wz = series_shift_down(w); // order n-1
    if (n == 1) return STransformSeries(wz);     // order 0: S(0) = 1/m_1
    FormalPowerSeries one_plus_z =
        series_add(FormalPowerSeries::constant(1, n - 1), FormalPowerSeries::identity(n - 1));
    return STransformSeries(series_mul(one_plus_z, wz));
}

MomentSequence moments_from_S(const STransformSeries& s) {
    if (s.series[0] == 0)
        throw Error(errc::ZeroMean, "S-transform with zero constant term has no moments");
    int k = s.order();
    // W(z) = z S(z)/(1+z); the z-shift raises the known order to k+1.
    FormalPowerSeries one_plus_z = k >= 1
        ? series_add(FormalPowerSeries::constant(1, k), FormalPowerSeries::identity(k))
        : FormalPowerSeries::constant(1, 0);
    FormalPowerSeries w = series_shift_up(series_div(s.series, one_plus_z)); // order k+1
    FormalPowerSeries phi = series_revert(w);
    std::vector<Rational> m(phi.coeffs());
    m[0] = 1; // M = 1 + Phi
    return MomentSequence(std::move(m));
}

MomentSequence free_multiplicative_convolve(const STransformSeries& s1,
                                            const STransformSeries& s2) {
    return moments_from_S(STransformSeries(series_mul(s1.series, s2.series)));
}

MomentSequence fuss_catalan_power(const Rational& b, const Rational& p, int N) {
    if (!(b > 0) || !(p > 0))
        throw Error(errc::ParameterOutOfRange, "need b > 0 and p > 0");
    if (p < 1 && Rational(1) / b < 1)
        throw Error(errc::ParameterOutOfRange, "need max{p, 1/b} >= 1");
    if (N < 1) throw Error(errc::InsufficientOrder, "need N >= 1");
    std::vector<Rational> base(static_cast<std::size_t>(N), Rational(0));
    base[0] = 1;
    if (N >= 2) base[1] = b;
    FormalPowerSeries s = series_pow_rational(FormalPowerSeries(std::move(base)), -p);
    return moments_from_S(STransformSeries(s)); // order (N-1) + 1 = N
}

} // namespace cskit
