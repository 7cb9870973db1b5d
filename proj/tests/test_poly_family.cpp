#include <doctest.h>

#include <vector>

#include "cskit/errors.hpp"
#include "cskit/poly_family.hpp"

using namespace cskit;

namespace {

std::vector<Rational> rat(std::initializer_list<const char*> values) {
    std::vector<Rational> v;
    for (const char* s : values) v.push_back(parse_rational(s));
    return v;
}

Polynomial poly(std::initializer_list<const char*> values) { return Polynomial(rat(values)); }

VarianceFunction vf(std::initializer_list<const char*> coeffs, int order) {
    return VarianceFunction::from_polynomial(rat(coeffs), order);
}

} // namespace

TEST_CASE("semicircle family is the chebyshev-like ladder") {
    PolynomialFamily fam = polynomials_from_varfun(vf({"1"}, 4), 4);
    REQUIRE(fam.polys.size() == 5);
    CHECK(fam.polys[0] == poly({"1"}));
    CHECK(fam.polys[1] == poly({"0", "1"}));
    CHECK(fam.polys[2] == poly({"-1", "0", "1"}));
    CHECK(fam.polys[3] == poly({"0", "-2", "0", "1"}));
    CHECK(fam.polys[4] == poly({"1", "0", "-3", "0", "1"}));
}

TEST_CASE("cubic variance function drives a monic family") {
    PolynomialFamily fam = polynomials_from_varfun(vf({"1", "2", "2", "1"}, 5), 3);
    CHECK(fam.polys[1] == poly({"0", "1"}));
    CHECK(fam.polys[2] == poly({"-1", "-2", "1"}));
    CHECK(fam.polys[3] == poly({"2", "0", "-4", "1"}));
}

TEST_CASE("family needs the variance function deep enough") {
    VarianceFunction shallow(FormalPowerSeries(rat({"1", "2", "1"})));
    CHECK_THROWS_AS(polynomials_from_varfun(shallow, 4), Error);
    CHECK(polynomials_from_varfun(shallow, 3).polys.size() == 4);
}

TEST_CASE("non-monic leading coefficient scales each step") {
    PolynomialFamily fam =
        polynomials_from_recursion({RecursionSpec::Form::General, rat({"2"})}, 2);
    CHECK(fam.polys[1] == poly({"0", "1/2"}));
    CHECK(fam.polys[2] == poly({"-1/2", "0", "1/4"}));
}

TEST_CASE("band recursion with all coefficients zero") {
    PolynomialFamily fam = polynomials_from_recursion({RecursionSpec::Form::Ccr, {}}, 4);
    CHECK(fam.polys[1] == poly({"0", "1"}));
    CHECK(fam.polys[2] == poly({"-1", "0", "1"}));
    CHECK(fam.polys[3] == poly({"0", "-1", "0", "1"}));
    CHECK(fam.polys[4] == poly({"0", "0", "-1", "0", "1"}));
}

TEST_CASE("band recursion matches the variance function route") {
    PolynomialFamily via_b =
        polynomials_from_recursion({RecursionSpec::Form::Ccr, rat({"2", "3", "1"})}, 6);
    PolynomialFamily via_v = polynomials_from_varfun(vf({"1", "2", "2", "1"}, 5), 6);
    CHECK(via_b.polys == via_v.polys);
}

TEST_CASE("band recursion rows hold verbatim") {
    std::vector<Rational> b = rat({"1/2", "1/3", "1/4"});
    PolynomialFamily fam = polynomials_from_recursion({RecursionSpec::Form::Ccr, b}, 4);
    const Polynomial x = Polynomial::x();
    const auto& P = fam.polys;
    CHECK(x * P[1] == P[2] + b[0] * P[1] + P[0]);
    CHECK(x * P[2] == P[3] + b[0] * P[2] + b[1] * P[1]);
    CHECK(x * P[3] == P[4] + b[0] * P[3] + b[1] * P[2] + b[2] * P[1]);
}

TEST_CASE("general recursion rejects a vanishing lead") {
    CHECK_THROWS_AS(polynomials_from_recursion({RecursionSpec::Form::General, rat({"0", "1"})}, 2),
                    Error);
    CHECK_THROWS_AS(polynomials_from_recursion({RecursionSpec::Form::General, {}}, 2), Error);
}

TEST_CASE("generating function identity holds for generated families") {
    VarianceFunction flat = vf({"1"}, 8);
    CHECK(generating_function_identity_check(polynomials_from_varfun(flat, 8), flat, 8));
    VarianceFunction cubic = vf({"1", "2", "2", "1"}, 10);
    CHECK(generating_function_identity_check(polynomials_from_varfun(cubic, 10), cubic, 10));
    VarianceFunction quad = vf({"1", "-1/2", "1/4"}, 6);
    CHECK(generating_function_identity_check(polynomials_from_varfun(quad, 6), quad, 6));
}

TEST_CASE("generating function identity detects a perturbed family") {
    VarianceFunction cubic = vf({"1", "2", "2", "1"}, 6);
    PolynomialFamily fam = polynomials_from_varfun(cubic, 6);
    fam.polys[2] = fam.polys[2] + Polynomial::constant(1);
    CHECK(!generating_function_identity_check(fam, cubic, 6));
}

TEST_CASE("generating function check validates its inputs") {
    VarianceFunction cubic = vf({"1", "2", "2", "1"}, 6);
    PolynomialFamily fam = polynomials_from_varfun(cubic, 4);
    CHECK_THROWS_AS(generating_function_identity_check(fam, cubic, 6), Error);
    VarianceFunction shortv = vf({"1"}, 2);
    PolynomialFamily fam2 = polynomials_from_varfun(vf({"1"}, 8), 8);
    CHECK_THROWS_AS(generating_function_identity_check(fam2, shortv, 8), Error);
}

TEST_CASE("gram matrix of the semicircle family is the identity") {
    PolynomialFamily fam = polynomials_from_varfun(vf({"1"}, 4), 4);
    MomentSequence m = moments_from_varfun(vf({"1"}, 6), 8);
    GramMatrix g = gram_matrix(fam, m);
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k)
            CHECK(g.entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] ==
                  (n == k ? Rational(1) : Rational(0)));
}

TEST_CASE("gram matrix needs enough moments") {
    PolynomialFamily fam = polynomials_from_varfun(vf({"1"}, 4), 3);
    CHECK_THROWS_AS(gram_matrix(fam, MomentSequence(rat({"1", "0", "1", "0", "2"}))), Error);
}

TEST_CASE("orthogonality pattern of the cubic family has band width two") {
    VarianceFunction cubic = vf({"1", "2", "2", "1"}, 20);
    DOrthReport ok = d_orthogonality_check(cubic, 2, 6);
    CHECK(ok.pattern_ok);
    CHECK(ok.violations.empty());
    CHECK(!ok.degenerate);
    CHECK(ok.order_checked == 6);
    CHECK(ok.hankel_evidence.verdict.kind == PsdVerdict::Kind::Positive);

    DOrthReport narrow = d_orthogonality_check(cubic, 1, 6);
    CHECK(!narrow.pattern_ok);
    REQUIRE(!narrow.violations.empty());
    CHECK(narrow.violations.front().n == 3);
    CHECK(narrow.violations.front().k == 2);
    CHECK(narrow.violations.front().value == Rational(1));
}

TEST_CASE("cubic coefficient is the first band violation value") {
    VarianceFunction v = vf({"1", "0", "0", "1/5"}, 20);
    DOrthReport report = d_orthogonality_check(v, 1, 5);
    REQUIRE(!report.violations.empty());
    CHECK(report.violations.front().n == 3);
    CHECK(report.violations.front().k == 2);
    CHECK(report.violations.front().value == Rational(1, 5));
}

TEST_CASE("quadratic variance functions are orthogonal in the classical sense") {
    for (auto coeffs : {rat({"1", "0", "1"}), rat({"1", "2", "1"}), rat({"1", "1"})}) {
        VarianceFunction v = VarianceFunction::from_polynomial(coeffs, 20);
        DOrthReport report = d_orthogonality_check(v, 1, 5);
        CHECK(report.pattern_ok);
        CHECK(report.hankel_evidence.verdict.kind == PsdVerdict::Kind::Positive);
    }
}

TEST_CASE("two-atom measure degenerates the gram diagonal") {
    VarianceFunction v = vf({"1", "0", "-1"}, 20);
    DOrthReport report = d_orthogonality_check(v, 1, 4);
    CHECK(report.degenerate);
    CHECK(report.pattern_ok);
    CHECK(report.hankel_evidence.verdict.kind == PsdVerdict::Kind::Degenerate);
}

TEST_CASE("orthogonality scan validates its parameters") {
    VarianceFunction v = vf({"1"}, 20);
    CHECK_THROWS_AS(d_orthogonality_check(v, 0, 6), Error);
    CHECK_THROWS_AS(d_orthogonality_check(v, 2, 4), Error);
}

TEST_CASE("generating function pair reduces at unit scale") {
    MomentSequence m(rat({"1", "0", "1", "0", "2"}));
    FormalPowerSeries M = FormalPowerSeries::constant(1, 3);
    FormalPowerSeries N(rat({"1", "0", "1", "0"}));
    ReducedGeneratingFunction out = reduce_general_gf(M, N, m);
    CHECK(out.t == Rational(1));
    CHECK(out.varfun.series == FormalPowerSeries(rat({"1", "0", "0"})));
}

TEST_CASE("generating function pair reduces at integer scale") {
    // centered free Poisson: V = 1 + m, riordan moments
    MomentSequence m(rat({"1", "0", "1", "1", "3", "6", "15"}));
    FormalPowerSeries M(rat({"1/2", "1", "0", "0"}));
    FormalPowerSeries N(rat({"1/2", "1", "2", "0"}));
    ReducedGeneratingFunction out = reduce_general_gf(M, N, m);
    CHECK(out.t == Rational(2));
    CHECK(out.varfun.series == FormalPowerSeries(rat({"1", "1", "0", "0", "0"})));
}

TEST_CASE("generating function pair reduces at fractional scale") {
    MomentSequence m(rat({"1", "0", "1", "1", "3", "6", "15"}));
    FormalPowerSeries M(rat({"3", "1", "0", "0"}));
    FormalPowerSeries N(rat({"3", "1", "1/3", "0"}));
    ReducedGeneratingFunction out = reduce_general_gf(M, N, m);
    CHECK(out.t == Rational(1, 3));
    CHECK(out.varfun.series == FormalPowerSeries(rat({"1", "1", "0", "0", "0"})));
}

TEST_CASE("generating function pair rejects mismatches") {
    MomentSequence m(rat({"1", "0", "1", "0", "2"}));
    FormalPowerSeries M = FormalPowerSeries::constant(1, 3);
    FormalPowerSeries cubic_gap(rat({"1", "0", "0", "1"}));
    CHECK_THROWS_AS(reduce_general_gf(M, cubic_gap, m), Error);
    FormalPowerSeries skewed(rat({"1", "999", "0", "0"}));
    FormalPowerSeries skewed_n(rat({"1", "999", "1", "0"}));
    CHECK_THROWS_AS(reduce_general_gf(skewed, skewed_n, m), Error);
    CHECK_THROWS_AS(reduce_general_gf(FormalPowerSeries(rat({"0", "1", "0"})),
                                      FormalPowerSeries(rat({"0", "1", "1"})), m),
                    Error);
    CHECK_THROWS_AS(reduce_general_gf(FormalPowerSeries(rat({"1", "0"})),
                                      FormalPowerSeries(rat({"1", "0"})), m),
                    Error);
}
