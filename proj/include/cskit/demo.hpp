#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cskit/rational.hpp"
#include "cskit/varfun.hpp"

namespace cskit {

// One deterministic artifact tying together the Fuss-number example: the
// moment and cumulant sequences, the Hankel witness against free infinite
// divisibility, the cubic variance function of the centered measure, and
// every identity verified along the way (in evaluation order).
struct DemoReport {
    std::vector<Integer> fuss;
    std::vector<Integer> s;
    std::vector<Integer> kappa;
    Rational det_witness = 0;
    VarianceFunction varfun;
    std::vector<std::pair<std::string, bool>> identity_checks;
};

// (1/(3n+1)) * binomial(3n+1, n) for n = 0..N.
std::vector<Integer> fuss_sequence(int N);

// s(0) = 1, s(n) = sum_{i<n} fuss(i) s(n-1-i); every term is re-derived from
// the closed form sum_i ((n-i)/(n+2i)) binomial(n+2i, i) and a mismatch
// throws ClosedFormMismatch.
std::vector<Integer> a098746_sequence(int N);

// Coefficients r_0..r_N of the solution of r = 1 + z r (1 - r + r^2).
std::vector<Integer> a106228_sequence(int N);

// Runs the whole example at moment order N >= 12. Any failed identity aborts
// with IdentityCheckFailed naming the identity; a returned report has every
// flag true.
DemoReport run_demo(int N);

} // namespace cskit
