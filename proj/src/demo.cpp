#include "cskit/demo.hpp"

#include "cskit/errors.hpp"
#include "cskit/hankel.hpp"
#include "cskit/noncrossing.hpp"
#include "cskit/series.hpp"
#include "cskit/transforms.hpp"

namespace cskit {

namespace {

Integer to_integer(const Rational& q) {
    if (!is_integer(q))
        throw std::logic_error("expected an integer value: " + q.str());
    return numerator(q);
}

} // namespace

std::vector<Integer> fuss_sequence(int N) {
    if (N < 0) throw Error(errc::InvalidInput, "sequence length must be nonnegative");
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        out.push_back(to_integer(Rational(binomial(Integer(3 * n + 1), Integer(n)),
                                          Integer(3 * n + 1))));
    return out;
}

std::vector<Integer> a098746_sequence(int N) {
    if (N < 0) throw Error(errc::InvalidInput, "sequence length must be nonnegative");
    std::vector<Integer> fuss = fuss_sequence(N);
    std::vector<Integer> s{Integer(1)};
    for (int n = 1; n <= N; ++n) {
        Integer next = 0;
        for (int i = 0; i < n; ++i)
            next += fuss[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(n - 1 - i)];
        // closed form: s(n) = sum_{i=0}^{n} ((n-i)/(n+2i)) C(n+2i, i), n >= 1
        Rational closed = 0;
        for (int i = 0; i <= n; ++i)
            closed += Rational(Integer(n - i), Integer(n + 2 * i)) *
                      Rational(binomial(Integer(n + 2 * i), Integer(i)));
        if (closed != Rational(next))
            throw Error(errc::ClosedFormMismatch,
                        "recurrence and closed form disagree at n = " + std::to_string(n));
        s.push_back(next);
    }
    return s;
}

std::vector<Integer> a106228_sequence(int N) {
    if (N < 0) throw Error(errc::InvalidInput, "sequence length must be nonnegative");
    // r = 1 + z r (1 - r + r^2): coefficient j+1 of r is coefficient j of
    // r - r^2 + r^3, which only involves already-known entries.
    std::vector<Integer> r{Integer(1)}, r2{Integer(1)}, r3{Integer(1)};
    for (int k = 1; k <= N; ++k) {
        int j = k - 1;
        while (static_cast<int>(r2.size()) <= j) {
            int idx = static_cast<int>(r2.size());
            Integer acc = 0;
            for (int i = 0; i <= idx; ++i)
                acc += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(idx - i)];
            r2.push_back(acc);
        }
        while (static_cast<int>(r3.size()) <= j) {
            int idx = static_cast<int>(r3.size());
            Integer acc = 0;
            for (int i = 0; i <= idx; ++i)
                acc += r2[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(idx - i)];
            r3.push_back(acc);
        }
        r.push_back(r[static_cast<std::size_t>(j)] - r2[static_cast<std::size_t>(j)] +
                    r3[static_cast<std::size_t>(j)]);
    }
    return r;
}

DemoReport run_demo(int N) {
    if (N < 12)
        throw Error(errc::InsufficientOrder,
                    "the Hankel witness needs cumulants through order 12");

    DemoReport report;
    auto check = [&report](const std::string& name, bool ok) {
        report.identity_checks.emplace_back(name, ok);
        if (!ok)
            throw Error(errc::IdentityCheckFailed, "identity check failed: " + name);
    };

    report.fuss = fuss_sequence(N);
    report.s = a098746_sequence(N);

    // B = 1 + z B^3 by fixed-point iteration; each pass settles one more
    // coefficient, so order N is exact after N+1 passes.
    const FormalPowerSeries one = FormalPowerSeries::constant(1, N);
    FormalPowerSeries b = one;
    for (int pass = 0; pass <= N; ++pass) {
        FormalPowerSeries cube = series_mul(series_mul(b, b), b);
        b = series_add(one, series_shift_up(cube.truncated(N - 1)));
    }
    bool fuss_ok = true;
    for (int n = 0; n <= N; ++n)
        fuss_ok = fuss_ok && b[n] == Rational(report.fuss[static_cast<std::size_t>(n)]);
    check("fuss_fixed_point", fuss_ok);

    // M = 1/(1 - z B) generates the moment sequence s(n).
    FormalPowerSeries zb = series_shift_up(b.truncated(N - 1));
    FormalPowerSeries big_m = series_div(one, series_sub(one, zb));
    bool moments_ok = true;
    for (int n = 0; n <= N; ++n)
        moments_ok = moments_ok && big_m[n] == Rational(report.s[static_cast<std::size_t>(n)]);
    check("moment_series", moments_ok);

    // z M^2 (M-1) = z^2 M^3 + (M-1)^3
    FormalPowerSeries m_minus_1 = series_sub(big_m, one);
    FormalPowerSeries lhs = series_shift_up(
        series_mul(series_mul(big_m, big_m), m_minus_1).truncated(N - 1));
    FormalPowerSeries m3 = series_mul(series_mul(big_m, big_m), big_m);
    FormalPowerSeries rhs = series_add(
        series_shift_up(series_shift_up(m3.truncated(N - 2))),
        series_mul(series_mul(m_minus_1, m_minus_1), m_minus_1));
    check("momgenfun", lhs == rhs);

    // kappa_n(mu) is entry n-1 of the solution of r = 1 + z r (1 - r + r^2)
    std::vector<Rational> s_moments;
    s_moments.reserve(report.s.size());
    for (const Integer& v : report.s) s_moments.emplace_back(v);
    FreeCumulantSequence kappa = moments_to_free_cumulants(MomentSequence(s_moments));
    std::vector<Integer> r_seq = a106228_sequence(N - 1);
    bool kappa_ok = true;
    for (int n = 1; n <= N; ++n)
        kappa_ok = kappa_ok && kappa.kappa(n) == Rational(r_seq[static_cast<std::size_t>(n - 1)]);
    check("kappa_from_moments", kappa_ok);
    for (const Rational& v : kappa.cumulants) report.kappa.push_back(to_integer(v));

    // independent route: non-crossing partition sums reproduce the moments
    bool oracle_ok = true;
    for (int n = 0; n <= 10 && n <= N; ++n)
        oracle_ok = oracle_ok &&
                    moments_via_noncrossing(kappa, n) == Rational(report.s[static_cast<std::size_t>(n)]);
    check("kappa_oracle", oracle_ok);

    // Hankel matrix of (kappa_{i+j+2}): positivity fails, so mu is not
    // freely infinitely divisible.
    std::vector<Rational> shifted{Rational(0)};
    for (const Rational& v : kappa.cumulants) shifted.push_back(v);
    HankelReport hankel = hankel_minors(shifted, 2, 6);
    report.det_witness = hankel.minors.back();
    check("cumulant_hankel_refuted", hankel.verdict.kind == PsdVerdict::Kind::Refuted);

    // nu = translation of mu by -1: kappa_1 drops by 1, the rest are fixed.
    std::vector<Rational> nu_kappa = kappa.cumulants;
    nu_kappa[0] -= 1;
    MomentSequence nu_moments = free_cumulants_to_moments(FreeCumulantSequence(nu_kappa));

    // cross-check against the binomial expansion of the moments of X - 1
    bool shift_ok = true;
    for (int n = 0; n <= N; ++n) {
        Rational direct = 0;
        for (int j = 0; j <= n; ++j) {
            Rational term = Rational(binomial(Integer(n), Integer(j))) *
                            Rational(report.s[static_cast<std::size_t>(j)]);
            direct += ((n - j) % 2 == 0) ? term : -term;
        }
        shift_ok = shift_ok && nu_moments[n] == direct;
    }
    check("translation_shift", shift_ok);

    // V_nu = 1 + 2m + 2m^2 + m^3 exactly, through everything order allows
    report.varfun = varfun_from_moments(nu_moments);
    FormalPowerSeries cubic = FormalPowerSeries({Rational(1), Rational(2), Rational(2), Rational(1)})
                                  .zero_extended(N - 2);
    check("varfun_cubic", report.varfun.series == cubic);

    CubicMembership membership = cubic_membership(2, 2, 1);
    check("cubic_class", membership.in_v.claim == MembershipClaim::InV &&
                             membership.in_v_inf.claim == MembershipClaim::NotInVInfinity);

    return report;
}

} // namespace cskit
