#include <doctest.h>

#include <vector>

#include "cskit/errors.hpp"
#include "cskit/jacobi.hpp"
#include "cskit/varfun.hpp"

using namespace cskit;

namespace {

std::vector<Rational> rat(std::initializer_list<const char*> values) {
    std::vector<Rational> v;
    for (const char* s : values) v.push_back(parse_rational(s));
    return v;
}

} // namespace

TEST_CASE("moment functional evaluates polynomials") {
    MomentSequence m(rat({"1", "0", "1", "0", "2"}));
    CHECK(apply_moment_functional(m, Polynomial(rat({"1", "0", "1"}))) == Rational(2));
    CHECK(apply_moment_functional(m, Polynomial::constant(Rational(3, 2))) == Rational(3, 2));
    CHECK(apply_moment_functional(m, Polynomial()) == Rational(0));
    CHECK_THROWS_AS(
        apply_moment_functional(MomentSequence(rat({"1", "0", "1"})),
                                Polynomial(rat({"0", "0", "0", "1"}))),
        Error);
}

TEST_CASE("semicircle recursion coefficients") {
    MomentSequence m(rat({"1", "0", "1", "0", "2", "0", "5", "0", "14", "0", "42", "0", "132"}));
    JacobiCoefficients j = jacobi_from_moments(m);
    CHECK(j.b == rat({"0", "0", "0", "0", "0", "0"}));
    CHECK(j.c == rat({"1", "1", "1", "1", "1", "1"}));
    CHECK(!j.terminated);
}

TEST_CASE("centered free poisson recursion coefficients") {
    VarianceFunction v = VarianceFunction::from_polynomial(rat({"1", "1"}), 10);
    JacobiCoefficients j = jacobi_from_moments(moments_from_varfun(v, 12));
    CHECK(j.b == rat({"0", "1", "1", "1", "1", "1"}));
    CHECK(j.c == rat({"1", "1", "1", "1", "1", "1"}));
}

TEST_CASE("cubic variance function recursion coefficients") {
    VarianceFunction v = VarianceFunction::from_polynomial(rat({"1", "2", "2", "1"}), 10);
    JacobiCoefficients j = jacobi_from_moments(moments_from_varfun(v, 12));
    CHECK(j.b == rat({"0", "2", "7/3", "92/39", "523/221", "282/119"}));
    CHECK(j.c == rat({"1", "3", "26/9", "969/338", "31395/10982", "61132/21413"}));
    CHECK(!j.terminated);
}

TEST_CASE("linear mean shift moves every off-zero recursion center") {
    VarianceFunction base = VarianceFunction::from_polynomial(rat({"1", "2", "2", "1"}), 10);
    JacobiCoefficients jb = jacobi_from_moments(moments_from_varfun(base, 12));
    for (const char* shift : {"5", "-1/2"}) {
        Rational a = parse_rational(shift);
        VarianceFunction shifted =
            apply_varfun_op(VarFunOp::AddLinear, base, nullptr, a);
        JacobiCoefficients js = jacobi_from_moments(moments_from_varfun(shifted, 12));
        REQUIRE(js.b.size() == jb.b.size());
        CHECK(js.b[0] == jb.b[0]);
        for (std::size_t k = 1; k < jb.b.size(); ++k) CHECK(js.b[k] == jb.b[k] + a);
        CHECK(js.c == jb.c);
    }
}

TEST_CASE("finitely atomic measures terminate the recursion") {
    JacobiCoefficients two_atom = jacobi_from_moments(MomentSequence(rat({"1", "0", "1", "0",
                                                                          "1"})));
    CHECK(two_atom.b == rat({"0", "0"}));
    CHECK(two_atom.c == rat({"1", "0"}));
    CHECK(two_atom.terminated);

    JacobiCoefficients point = jacobi_from_moments(MomentSequence(rat({"1", "0", "0", "0"})));
    CHECK(point.b == rat({"0"}));
    CHECK(point.c == rat({"0"}));
    CHECK(point.terminated);
}

TEST_CASE("negative norms are rejected") {
    CHECK_THROWS_AS(jacobi_from_moments(MomentSequence(rat({"1", "0", "-1", "0", "1"}))), Error);
}
