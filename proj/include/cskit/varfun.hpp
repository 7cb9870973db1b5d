#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cskit/hankel.hpp"
#include "cskit/rational.hpp"
#include "cskit/series.hpp"
#include "cskit/transforms.hpp"

namespace cskit {

// Class annotation carried by a variance function. InV / InVInfinity are
// only ever attached by closed-form criteria or by the operation algebra
// acting on caller-asserted inputs; finite-order Hankel evidence never
// upgrades them.
enum class VarClass { Unknown, InV, InVInfinity };

const char* var_class_name(VarClass c);

// Variance function V(m) as a truncated series in the mean. V(0) != 0
// always; `normalized` records V(0) = 1 (the convention for the class of
// variance functions of centered, variance-1 measures).
struct VarianceFunction {
    FormalPowerSeries series;
    bool normalized = false;
    VarClass cls = VarClass::Unknown;
    std::string provenance; // plain-language origin of the class annotation

    VarianceFunction() = default;
    explicit VarianceFunction(FormalPowerSeries s, VarClass c = VarClass::Unknown,
                              std::string prov = std::string());

    // Treats coeffs as a complete polynomial and zero-extends to `order`.
    // This is the only sanctioned zero-extension point for variance
    // functions: arithmetic on genuinely truncated data never pads.
    static VarianceFunction from_polynomial(const std::vector<Rational>& coeffs, int order);

    int order() const { return series.order(); }
};

enum class MembershipClaim {
    InV,
    InVInfinity,
    NotInV,
    NotInVInfinity,
    EvidenceConsistent,
    EvidenceRefuted,
    Inconclusive,
};

const char* membership_claim_name(MembershipClaim c);

struct MembershipVerdict {
    MembershipClaim claim = MembershipClaim::Inconclusive;
    std::optional<HankelReport> witness;
    // named exact quantities behind a closed-form criterion, e.g. both sides
    // of the cubic inequality
    std::vector<std::pair<std::string, Rational>> criterion;
    int order_checked = 0;
};

// Both halves of the cubic criterion for V = 1 + am + bm^2 + cm^3.
struct CubicMembership {
    MembershipVerdict in_v;      // InV iff (b+1)^3 >= 27c^2
    MembershipVerdict in_v_inf;  // InVInfinity iff b^3 >= 27c^2
};

// The moment side of the bijection: centered, variance-1 moments through
// order N correspond to a variance function through order N-2 via the
// compositional inverse pair r <-> z/V.
VarianceFunction varfun_from_moments(const MomentSequence& m);

// Same construction for centered moments with any positive variance;
// V(0) = m_2 and `normalized` is set only when m_2 = 1. Used by the
// generating-function reduction, where unit variance is not required.
VarianceFunction varfun_from_centered_moments(const MomentSequence& m);

// Inverse direction, to moment order N; needs V(0) = 1 and a variance
// function known through order N-2.
MomentSequence moments_from_varfun(const VarianceFunction& v, int N);

// Free cumulants (kappa_1 = 0, kappa_2 = 1, ...) of the measure attached to
// a normalized variance function; kappa_n is read off the reverted series.
FreeCumulantSequence cumulants_from_varfun(const VarianceFunction& v, int N);

enum class VarFunOp {
    ScaleMean,     // V(m/c), c >= 1
    AddLinear,     // V + am
    SumMinusOne,   // V1 + V2 - 1
    ScalarCombine, // cV - c + 1, c >= 1
    SubSquare,     // V - m^2
    AddSquare,     // V + m^2
    Reflect,       // V(-m)
};

// Applies one operation of the variance-function algebra. The class of the
// result follows from the caller-asserted classes of the inputs; numeric
// preconditions (c >= 1 where required) are enforced, class assertions are
// not second-guessed.
VarianceFunction apply_varfun_op(VarFunOp op, const VarianceFunction& v1,
                                 const VarianceFunction* v2, const Rational& param);

CubicMembership cubic_membership(const Rational& a, const Rational& b, const Rational& c);

// V = 1 + a m^4 is a variance function iff -1 <= 12a <= 3.
MembershipVerdict quartic_axis_membership(const Rational& a);

enum class MembershipTarget { V, VInfinity };

// Finite-order Hankel evidence. Target V: Hankel positivity of the measure's
// own moments. Target VInfinity: V - 1 is read as the R-transform of a
// would-be measure omega whose moments are Hankel-checked. Output is
// evidence only; a refutation is exact and final, consistency is not a
// certificate.
MembershipVerdict membership_evidence(const VarianceFunction& v, int N, MembershipTarget target);

// Series of a m + b m^2 + (1+cm) prod_j (1+b_j m)^{p_j} through order N,
// annotated InV when b >= -1 and InVInfinity when b >= 0. Requires c > 0,
// b_j > 0, p_j > 0 and max{p_j, c/b_j} >= 1 for every factor.
VarianceFunction product_form_varfun(const Rational& a, const Rational& b, const Rational& c,
                                     const std::vector<std::pair<Rational, Rational>>& factors,
                                     int N);

// V(z) = (1+z)/S(z) for an S-transform with S(0) = 1; always InVInfinity.
VarianceFunction varfun_from_S(const STransformSeries& s, int N);

} // namespace cskit
