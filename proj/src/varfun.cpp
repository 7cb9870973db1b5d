#include "cskit/varfun.hpp"

#include "cskit/errors.hpp"

namespace cskit {

const char* var_class_name(VarClass c) {
    switch (c) {
        case VarClass::InV: return "IN_V";
        case VarClass::InVInfinity: return "IN_V_INFINITY";
        default: return "UNKNOWN";
    }
}

const char* membership_claim_name(MembershipClaim c) {
    switch (c) {
        case MembershipClaim::InV: return "IN_V";
        case MembershipClaim::InVInfinity: return "IN_V_INFINITY";
        case MembershipClaim::NotInV: return "NOT_IN_V";
        case MembershipClaim::NotInVInfinity: return "NOT_IN_V_INFINITY";
        case MembershipClaim::EvidenceConsistent: return "EVIDENCE_CONSISTENT";
        case MembershipClaim::EvidenceRefuted: return "EVIDENCE_REFUTED";
        default: return "INCONCLUSIVE";
    }
}

VarianceFunction::VarianceFunction(FormalPowerSeries s, VarClass c, std::string prov)
    : series(std::move(s)), cls(c), provenance(std::move(prov)) {
    if (series[0] == 0)
        throw Error(errc::ZeroConstantTerm, "variance function must not vanish at zero");
    normalized = series[0] == 1;
}

VarianceFunction VarianceFunction::from_polynomial(const std::vector<Rational>& coeffs,
                                                   int order) {
    FormalPowerSeries s(coeffs);
    return VarianceFunction(s.zero_extended(std::max(order, s.order())));
}

VarianceFunction varfun_from_centered_moments(const MomentSequence& m) {
    if (m.order() < 2) throw Error(errc::InsufficientMoments, "need moments through order 2");
    if (m[1] != 0) throw Error(errc::NotCentered, "first moment must be zero");
    if (!(m[2] > 0))
        throw Error(errc::ParameterOutOfRange, "variance (second moment) must be positive");
    FreeCumulantSequence kappa = moments_to_free_cumulants(m);
    // r(z) = sum kappa_{j+1} z^j has r(0) = kappa_1 = 0 and r'(0) = kappa_2;
    // its compositional inverse is g = z/V, so V = z/g.
    int N = m.order();
    std::vector<Rational> r(static_cast<std::size_t>(N)); // order N-1
    for (int j = 0; j < N; ++j) r[j] = kappa.kappa(j + 1);
    FormalPowerSeries g = series_revert(FormalPowerSeries(std::move(r)));
    FormalPowerSeries u = series_shift_down(g); // g/z, constant term 1/kappa_2
    FormalPowerSeries v = series_div(FormalPowerSeries::constant(1, u.order()), u);
    return VarianceFunction(v);
}

VarianceFunction varfun_from_moments(const MomentSequence& m) {
    if (m.order() < 2) throw Error(errc::InsufficientMoments, "need moments through order 2");
    if (m[1] != 0) throw Error(errc::NotCentered, "first moment must be zero");
    if (m[2] != 1) throw Error(errc::NotUnitVariance, "second moment must be one");
    return varfun_from_centered_moments(m);
}

FreeCumulantSequence cumulants_from_varfun(const VarianceFunction& v, int N) {
    if (!v.normalized)
        throw Error(errc::NonUnitConstant, "variance function must have V(0) = 1");
    if (N < 2) throw Error(errc::InsufficientOrder, "need target order >= 2");
    if (v.order() < N - 2)
        throw Error(errc::InsufficientOrder,
                    "variance function known through order " + std::to_string(v.order()) +
                        ", moments to order " + std::to_string(N) + " need order " +
                        std::to_string(N - 2));
    // g = z/V has one more known coefficient than 1/V; r = revert(g) carries
    // kappa_{j+1} at index j.
    FormalPowerSeries inv =
        series_div(FormalPowerSeries::constant(1, N - 2), v.series.truncated(N - 2));
    FormalPowerSeries g = series_shift_up(inv); // order N-1
    FormalPowerSeries r = series_revert(g);
    std::vector<Rational> kappa(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) kappa[n - 1] = r[n - 1];
    return FreeCumulantSequence(std::move(kappa));
}

MomentSequence moments_from_varfun(const VarianceFunction& v, int N) {
    return free_cumulants_to_moments(cumulants_from_varfun(v, N));
}

namespace {

VarianceFunction annotate(FormalPowerSeries s, VarClass cls, std::string prov) {
    return VarianceFunction(std::move(s), cls, std::move(prov));
}

} // namespace

VarianceFunction apply_varfun_op(VarFunOp op, const VarianceFunction& v1,
                                 const VarianceFunction* v2, const Rational& param) {
    const bool in_v = v1.cls == VarClass::InV || v1.cls == VarClass::InVInfinity;
    const bool in_vinf = v1.cls == VarClass::InVInfinity;
    switch (op) {
        case VarFunOp::ScaleMean: {
            if (param < 1)
                throw Error(errc::ParameterOutOfRange, "mean rescaling needs c >= 1");
            std::vector<Rational> c(v1.series.coeffs());
            Rational ck = 1;
            for (std::size_t k = 1; k < c.size(); ++k) {
                ck *= param;
                c[k] /= ck;
            }
            VarClass out = v1.cls == VarClass::InVInfinity ? VarClass::InVInfinity
                           : in_v                          ? VarClass::InV
                                                           : VarClass::Unknown;
            return annotate(FormalPowerSeries(std::move(c)), out,
                            out == VarClass::Unknown ? "" : "mean rescaling m -> m/c");
        }
        case VarFunOp::AddLinear: {
            std::vector<Rational> c(v1.series.coeffs());
            if (c.size() < 2)
                throw Error(errc::InsufficientOrder, "need the linear coefficient");
            c[1] += param;
            VarClass out = in_vinf ? VarClass::InVInfinity
                           : in_v  ? VarClass::InV
                                   : VarClass::Unknown;
            return annotate(FormalPowerSeries(std::move(c)), out,
                            out == VarClass::Unknown ? "" : "linear term added to the mean");
        }
        case VarFunOp::SumMinusOne: {
            if (v2 == nullptr)
                throw Error(errc::InvalidInput, "sum of variance functions needs two inputs");
            FormalPowerSeries s = series_add(v1.series, v2->series);
            std::vector<Rational> c(s.coeffs());
            c[0] -= 1;
            bool both_inf = in_vinf && v2->cls == VarClass::InVInfinity;
            return annotate(FormalPowerSeries(std::move(c)),
                            both_inf ? VarClass::InVInfinity : VarClass::Unknown,
                            both_inf ? "sum of two scale-stable variance functions minus one"
                                     : "");
        }
        case VarFunOp::ScalarCombine: {
            if (param < 1)
                throw Error(errc::ParameterOutOfRange, "scalar combination needs c >= 1");
            std::vector<Rational> c(v1.series.coeffs());
            for (auto& x : c) x *= param;
            c[0] += 1 - param;
            return annotate(FormalPowerSeries(std::move(c)),
                            in_vinf ? VarClass::InVInfinity : VarClass::Unknown,
                            in_vinf ? "affine combination cV - c + 1" : "");
        }
        case VarFunOp::SubSquare: {
            std::vector<Rational> c(v1.series.coeffs());
            if (c.size() < 3)
                throw Error(errc::InsufficientOrder, "need the quadratic coefficient");
            c[2] -= 1;
            return annotate(FormalPowerSeries(std::move(c)),
                            in_vinf ? VarClass::InV : VarClass::Unknown,
                            in_vinf ? "square term removed" : "");
        }
        case VarFunOp::AddSquare: {
            std::vector<Rational> c(v1.series.coeffs());
            if (c.size() < 3)
                throw Error(errc::InsufficientOrder, "need the quadratic coefficient");
            c[2] += 1;
            return annotate(FormalPowerSeries(std::move(c)),
                            in_v ? VarClass::InVInfinity : VarClass::Unknown,
                            in_v ? "square term added" : "");
        }
        case VarFunOp::Reflect: {
            std::vector<Rational> c(v1.series.coeffs());
            for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
            return annotate(FormalPowerSeries(std::move(c)), v1.cls,
                            v1.cls == VarClass::Unknown ? "" : "reflection m -> -m");
        }
    }
    throw Error(errc::InvalidInput, "unknown variance-function operation");
}

CubicMembership cubic_membership(const Rational& a, const Rational& b, const Rational& c) {
    (void)a; // the criterion does not involve the linear coefficient
    CubicMembership out;
    Rational lhs_v = pow_int(b + 1, 3);
    Rational lhs_vinf = pow_int(b, 3);
    Rational rhs = 27 * c * c;
    out.in_v.claim = lhs_v >= rhs ? MembershipClaim::InV : MembershipClaim::NotInV;
    out.in_v.criterion = {{"lhs", lhs_v}, {"rhs", rhs}};
    out.in_v_inf.claim =
        lhs_vinf >= rhs ? MembershipClaim::InVInfinity : MembershipClaim::NotInVInfinity;
    out.in_v_inf.criterion = {{"lhs", lhs_vinf}, {"rhs", rhs}};
    return out;
}

MembershipVerdict quartic_axis_membership(const Rational& a) {
    MembershipVerdict v;
    Rational scaled = 12 * a;
    v.claim = (scaled >= -1 && scaled <= 3) ? MembershipClaim::InV : MembershipClaim::NotInV;
    v.criterion = {{"twelve_a", scaled}};
    return v;
}

MembershipVerdict membership_evidence(const VarianceFunction& v, int N,
                                      MembershipTarget target) {
    if (!v.normalized)
        throw Error(errc::NonUnitConstant, "evidence needs a normalized variance function");
    MembershipVerdict out;
    std::vector<Rational> seq;
    if (target == MembershipTarget::V) {
        seq = moments_from_varfun(v, N).moments;
    } else {
        // V - 1 as the R-transform of omega: kappa_n(omega) is the z^n
        // coefficient of V. Hankel of omega's moments is the shifted-cumulant
        // matrix of the underlying measure.
        int K = std::min(v.order(), N);
        std::vector<Rational> kappa(static_cast<std::size_t>(K));
        for (int n = 1; n <= K; ++n) kappa[n - 1] = v.series[n];
        seq = free_cumulants_to_moments(FreeCumulantSequence(std::move(kappa))).moments;
    }
    int size = static_cast<int>(seq.size() - 1) / 2 + 1;
    HankelReport report = hankel_minors(seq, 0, size);
    switch (report.verdict.kind) {
        case PsdVerdict::Kind::Positive: out.claim = MembershipClaim::EvidenceConsistent; break;
        case PsdVerdict::Kind::Refuted: out.claim = MembershipClaim::EvidenceRefuted; break;
        case PsdVerdict::Kind::Degenerate: out.claim = MembershipClaim::Inconclusive; break;
    }
    out.witness = std::move(report);
    out.order_checked = N;
    return out;
}

VarianceFunction product_form_varfun(const Rational& a, const Rational& b, const Rational& c,
                                     const std::vector<std::pair<Rational, Rational>>& factors,
                                     int N) {
    if (!(c > 0)) throw Error(errc::ParameterOutOfRange, "need c > 0");
    for (const auto& [bj, pj] : factors) {
        if (!(bj > 0) || !(pj > 0))
            throw Error(errc::ParameterOutOfRange, "factor parameters must be positive");
        if (pj < 1 && c / bj < 1)
            throw Error(errc::ParameterOutOfRange, "each factor needs max{p_j, c/b_j} >= 1");
    }
    if (N < 2) throw Error(errc::InsufficientOrder, "need order >= 2");
    FormalPowerSeries prod = series_add(FormalPowerSeries::constant(1, N),
                                        series_scale(c, FormalPowerSeries::identity(N)));
    for (const auto& [bj, pj] : factors) {
        FormalPowerSeries lin = series_add(FormalPowerSeries::constant(1, N),
                                           series_scale(bj, FormalPowerSeries::identity(N)));
        prod = series_mul(prod, series_pow_rational(lin, pj));
    }
    std::vector<Rational> s(prod.coeffs());
    s[1] += a;
    s[2] += b;
    VarClass cls = b >= 0 ? VarClass::InVInfinity : (b >= -1 ? VarClass::InV : VarClass::Unknown);
    return annotate(FormalPowerSeries(std::move(s)), cls,
                    cls == VarClass::Unknown ? "" : "product-form construction");
}

VarianceFunction varfun_from_S(const STransformSeries& s, int N) {
    if (s.series[0] != 1)
        throw Error(errc::NonUnitS0, "construction needs S(0) = 1");
    if (s.order() < N)
        throw Error(errc::InsufficientOrder,
                    "S-transform known through order " + std::to_string(s.order()) +
                        ", need " + std::to_string(N));
    FormalPowerSeries one_plus_z =
        series_add(FormalPowerSeries::constant(1, N), FormalPowerSeries::identity(N));
    FormalPowerSeries v = series_div(one_plus_z, s.series.truncated(N));
    return annotate(std::move(v), VarClass::InVInfinity,
                    "quotient (1+z)/S of a unit S-transform");
}

} // namespace cskit
