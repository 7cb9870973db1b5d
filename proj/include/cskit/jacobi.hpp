#pragma once

#include <vector>

#include "cskit/polynomial.hpp"
#include "cskit/rational.hpp"
#include "cskit/transforms.hpp"

namespace cskit {

// Three-term recursion coefficients of the monic orthogonal polynomials:
// x p_n = p_{n+1} + b_n p_n + c_{n-1} p_{n-1}. All c_n > 0 while the
// functional is positive definite; a terminal c_n = 0 (finitely atomic
// measure) is recorded and extraction stops there.
struct JacobiCoefficients {
    std::vector<Rational> b;
    std::vector<Rational> c;
    bool terminated = false; // true when a zero c was hit before moments ran out
};

// Moment functional applied to a polynomial; needs moments through deg(p).
Rational apply_moment_functional(const MomentSequence& m, const Polynomial& p);

// Exact Stieltjes procedure on the moment functional. Extracts as many
// coefficients as the moment order supports; throws NotAMomentSequence on a
// negative norm.
JacobiCoefficients jacobi_from_moments(const MomentSequence& m);

} // namespace cskit
