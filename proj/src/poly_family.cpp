#include "cskit/poly_family.hpp"

#include <algorithm>
#include <sstream>

#include "cskit/errors.hpp"
#include "cskit/jacobi.hpp"

namespace cskit {

namespace {

// Shared driver: x P_n = P_{n-1} + sum_{k=0}^{n} a_k P_{n+1-k}, solved for
// P_{n+1}. Coefficients beyond the list are zero (finite recursion).
std::vector<Polynomial> run_recursion(const std::vector<Rational>& a, int N) {
    std::vector<Polynomial> polys;
    polys.reserve(static_cast<std::size_t>(N) + 1);
    polys.push_back(Polynomial::constant(1));
    const Polynomial x = Polynomial::x();
    for (int n = 0; n < N; ++n) {
        Polynomial rhs = x * polys[static_cast<std::size_t>(n)];
        if (n >= 1) rhs = rhs - polys[static_cast<std::size_t>(n) - 1];
        for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k)
            rhs = rhs - a[static_cast<std::size_t>(k)] *
                            polys[static_cast<std::size_t>(n + 1 - k)];
        polys.push_back((Rational(1) / a[0]) * rhs);
    }
    return polys;
}

std::string coeff_list(const std::vector<Rational>& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ' ';
        os << a[i].str();
    }
    return os.str();
}

} // namespace

PolynomialFamily polynomials_from_varfun(const VarianceFunction& v, int N) {
    if (N < 0) throw Error(errc::InvalidInput, "family length must be nonnegative");
    if (v.series.order() < N - 1)
        throw Error(errc::InsufficientOrder,
                    "a family of length " + std::to_string(N) +
                        " needs the variance function through order " +
                        std::to_string(N - 1));
    const std::vector<Rational>& all = v.series.coeffs();
    std::vector<Rational> a(all.begin(),
                            all.begin() + std::min(all.size(),
                                                   static_cast<std::size_t>(N) + 1));
    PolynomialFamily fam;
    fam.polys = run_recursion(a, N);
    fam.source = "varfun " + v.series.str();
    return fam;
}

PolynomialFamily polynomials_from_recursion(const RecursionSpec& r, int N) {
    if (N < 0) throw Error(errc::InvalidInput, "family length must be nonnegative");
    std::vector<Rational> a;
    std::string label;
    if (r.form == RecursionSpec::Form::Ccr) {
        a.reserve(r.coeffs.size() + 2);
        a.push_back(1);
        a.insert(a.end(), r.coeffs.begin(), r.coeffs.end());
        if (a.size() < 3) a.resize(3, Rational(0));
        a[2] -= 1;
        label = "recursion b-form " + coeff_list(r.coeffs);
    } else {
        a = r.coeffs;
        if (a.empty() || a[0] == 0)
            throw Error(errc::ZeroLeadCoefficient,
                        "the general recursion needs a nonzero leading coefficient");
        label = "recursion a-form " + coeff_list(r.coeffs);
    }
    PolynomialFamily fam;
    fam.polys = run_recursion(a, N);
    fam.source = label;
    return fam;
}

bool generating_function_identity_check(const PolynomialFamily& fam,
                                        const VarianceFunction& v, int N) {
    if (N < 0) throw Error(errc::InvalidInput, "check order must be nonnegative");
    if (static_cast<int>(fam.polys.size()) < N + 1)
        throw Error(errc::InsufficientOrder,
                    "the family is shorter than the requested check order");
    if (v.series.order() < N)
        throw Error(errc::InsufficientOrder,
                    "the variance function is shorter than the requested check order");
    const Polynomial x = Polynomial::x();
    for (int j = 0; j <= N; ++j) {
        // [z^j] of (sum P_n z^n)(V + z^2 - xz) minus [z^j] of V
        Polynomial residual;
        for (int n = 0; n <= j; ++n)
            residual = residual + v.series[j - n] * fam.polys[static_cast<std::size_t>(n)];
        if (j >= 2) residual = residual + fam.polys[static_cast<std::size_t>(j) - 2];
        if (j >= 1) residual = residual - x * fam.polys[static_cast<std::size_t>(j) - 1];
        residual = residual - Polynomial::constant(v.series[j]);
        if (!residual.is_zero()) return false;
    }
    return true;
}

GramMatrix gram_matrix(const PolynomialFamily& fam, const MomentSequence& m) {
    const int N = static_cast<int>(fam.polys.size()) - 1;
    if (m.order() < 2 * N)
        throw Error(errc::InsufficientMoments,
                    "a family of length " + std::to_string(N) +
                        " needs moments through order " + std::to_string(2 * N));
    GramMatrix g;
    g.entries.assign(static_cast<std::size_t>(N) + 1,
                     std::vector<Rational>(static_cast<std::size_t>(N) + 1));
    for (int n = 0; n <= N; ++n)
        for (int k = n; k <= N; ++k) {
            Rational value = apply_moment_functional(
                m, fam.polys[static_cast<std::size_t>(n)] *
                       fam.polys[static_cast<std::size_t>(k)]);
            g.entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = value;
            g.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] = value;
        }
    return g;
}

DOrthReport d_orthogonality_check(const VarianceFunction& v, int d, int N) {
    if (d < 1)
        throw Error(errc::ParameterOutOfRange, "d-orthogonality needs d >= 1");
    if (N < d + 3)
        throw Error(errc::ParameterOutOfRange,
                    "the zero pattern is vacuous below N = d+3");
    MomentSequence moments = moments_from_varfun(v, 2 * N);
    PolynomialFamily fam = polynomials_from_varfun(v, N);
    GramMatrix g = gram_matrix(fam, moments);

    DOrthReport report;
    report.order_checked = N;
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= N; ++k) {
            const Rational& value =
                g.entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            bool must_vanish = (k == 0) ? (n >= 1) : (n >= 2 + (k - 1) * d);
            if (must_vanish && value != 0)
                report.violations.push_back({n, k, value});
        }
    report.pattern_ok = report.violations.empty();
    for (int n = 0; n <= N; ++n)
        if (g.entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] == 0)
            report.degenerate = true;
    report.hankel_evidence = hankel_minors(moments.moments, 0, N + 1);
    return report;
}

ReducedGeneratingFunction reduce_general_gf(const FormalPowerSeries& m_series,
                                            const FormalPowerSeries& n_series,
                                            const MomentSequence& m) {
    if (m_series.order() < 2 || n_series.order() < 2)
        throw Error(errc::InsufficientOrder,
                    "reduction needs both series at least through order 2");
    if (m_series[0] == 0)
        throw Error(errc::ZeroConstantTerm, "reduction needs M(0) != 0");
    VarianceFunction v = varfun_from_centered_moments(m);
    const Rational t = v.series[0] / m_series[0];

    int shared = std::min(m_series.order(), n_series.order());
    for (int j = 0; j <= shared; ++j) {
        Rational want = (j == 2) ? t : Rational(0);
        if (n_series[j] - m_series[j] != want)
            throw Error(errc::InconsistentPair,
                        "the series differ by something other than t*z^2");
    }

    // [z^j] V(tz)/t = v_j t^{j-1}
    int cmp = std::min(m_series.order(), v.series.order());
    Rational tpow = Rational(1) / t;
    for (int j = 0; j <= cmp; ++j) {
        if (m_series[j] != v.series[j] * tpow)
            throw Error(errc::InconsistentPair,
                        "M(z) does not match V(t z)/t for t = " + t.str());
        tpow *= t;
    }
    return {t, v};
}

} // namespace cskit
