#pragma once

#include <string>
#include <vector>

#include "cskit/hankel.hpp"
#include "cskit/polynomial.hpp"
#include "cskit/transforms.hpp"
#include "cskit/varfun.hpp"

namespace cskit {

// P_0..P_N generated by the variance-function recursion
//   x P_n = P_{n-1} + sum_{k=0}^{n} a_k P_{n+1-k},  P_{-1} = 0, P_0 = 1,
// where a_k is the k-th coefficient of V. Monic exactly when a_0 = 1.
struct PolynomialFamily {
    std::vector<Polynomial> polys;
    std::string source;
};

// Coefficients of a finite recursion. Two input forms:
//  - General: (a_0, ..., a_K) used directly in the recursion above; a_0 != 0.
//  - Ccr: (b_1, ..., b_{d+1}) of the monic band recursion
//      x P_n = P_{n+1} + sum_k b_k P_{n+1-k}  (with the bare + P_0 term at
//    n = 1), equivalent to the general form via a = (1, b_1, b_2 - 1, b_3, ...).
// Absent trailing coefficients are zero; recursions are finite by nature,
// unlike truncated series.
struct RecursionSpec {
    enum class Form { General, Ccr };
    Form form = Form::General;
    std::vector<Rational> coeffs;
};

// G[n][k] = functional applied to P_n * P_k; symmetric, G[0][0] = 1.
struct GramMatrix {
    std::vector<std::vector<Rational>> entries;
};

struct GramViolation {
    int n = 0;
    int k = 0;
    Rational value = 0;
};

// Zero-pattern scan of the Gram matrix against the d-orthogonality band,
// plus Hankel positivity of the underlying moments as separate evidence:
// a sign-indefinite functional can satisfy the zero pattern vacuously.
struct DOrthReport {
    bool pattern_ok = false;
    std::vector<GramViolation> violations;
    HankelReport hankel_evidence;
    int order_checked = 0;
    bool degenerate = false; // some diagonal Gram entry vanished
};

struct ReducedGeneratingFunction {
    Rational t;
    VarianceFunction varfun;
};

// Runs the recursion for P_0..P_N. Needs v through order N-1 (coefficient
// a_{N-1} enters the last step); throws InsufficientOrder otherwise.
PolynomialFamily polynomials_from_varfun(const VarianceFunction& v, int N);

// Same recursion driven by an explicit finite coefficient list.
// ZeroLeadCoefficient if the general form has a_0 = 0.
PolynomialFamily polynomials_from_recursion(const RecursionSpec& r, int N);

// Verifies (sum_{n<=N} P_n(x) z^n) * (V(z) + z^2 - x z) = V(z) mod z^{N+1}
// as an identity of polynomials in x for every z-coefficient.
bool generating_function_identity_check(const PolynomialFamily& fam,
                                        const VarianceFunction& v, int N);

// Needs moments through order 2N for an N-family (InsufficientMoments).
GramMatrix gram_matrix(const PolynomialFamily& fam, const MomentSequence& m);

// Builds moments and the family from v, then reports every Gram entry that
// breaks the pattern  G[n][0] = 0 (n >= 1),  G[n][k] = 0 (k >= 1,
// n >= 2 + (k-1)d)  for n, k <= N, in row-major order with exact values.
// Requires d >= 1 and N >= d+3.
DOrthReport d_orthogonality_check(const VarianceFunction& v, int d, int N);

// Reduction of a general generating-function pair sum T_n(x) z^n =
// M(z) / (N(z) - xz) against the moments of the generating measure:
// with t = V(0)/M(0) it must hold that N - M = t z^2 and M(z) = V(tz)/t,
// coefficient by coefficient through the available orders; then T_n = t^n P_n.
// InconsistentPair when either residual is nonzero.
ReducedGeneratingFunction reduce_general_gf(const FormalPowerSeries& m_series,
                                            const FormalPowerSeries& n_series,
                                            const MomentSequence& m);

} // namespace cskit
