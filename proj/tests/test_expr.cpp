#include "doctest.h"

#include <gmpxx.h>

#include "cremona/field.hpp"
#include "cremona/poly.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/sylvester.hpp"
#include "cremona/textio.hpp"

using namespace cremona;

namespace {

RationalFunction rf(const std::string& text, const RingPtr& ring) {
    return parse_expression(text, ring);
}

Polynomial poly(const std::string& text, const RingPtr& ring) {
    RationalFunction f = parse_expression(text, ring);
    REQUIRE(f.is_polynomial());
    return f.num();
}

} // namespace

TEST_CASE("field arithmetic: rationals") {
    Field q = Field::rationals();
    CHECK(q.is_rationals());
    CHECK(q.characteristic() == 0);
    CHECK(q.add(mpq_class(1, 2), mpq_class(1, 3)) == mpq_class(5, 6));
    CHECK(q.mul(mpq_class(2, 3), mpq_class(3, 2)) == 1);
    CHECK(q.inv(mpq_class(-4, 7)) == mpq_class(-7, 4));
    CHECK(q.reduce(mpq_class(6, 4)) == mpq_class(3, 2));
    CHECK_THROWS_AS((void)q.inv(mpq_class(0)), division_by_zero);
}

TEST_CASE("field arithmetic: prime fields use canonical representatives") {
    Field f7 = Field::prime(7);
    CHECK(f7.characteristic() == 7);
    CHECK(f7.reduce(mpq_class(-1)) == 6);
    CHECK(f7.reduce(mpq_class(1, 2)) == 4); // 2*4 = 8 = 1 mod 7
    CHECK(f7.add(mpq_class(5), mpq_class(4)) == 2);
    CHECK(f7.neg(mpq_class(3)) == 4);
    CHECK(f7.inv(mpq_class(3)) == 5);
    CHECK_THROWS_AS((void)f7.reduce(mpq_class(1, 7)), division_by_zero);

    Field f2 = Field::prime(2);
    CHECK(f2.add(mpq_class(1), mpq_class(1)) == 0);
}

TEST_CASE("polynomial arithmetic: cancellation and canonical form") {
    auto R = make_ring(Field::rationals(), {"x", "y"});
    Polynomial x = Polynomial::variable(R, "x");
    Polynomial y = Polynomial::variable(R, "y");

    CHECK((x - y) + y == x);
    CHECK((x + y) - (x + y) == Polynomial::zero(R));
    CHECK(Polynomial::zero(R).terms().empty());
    CHECK((x * x - y * y) == (x - y) * (x + y));

    // ring axioms on a fixed triple
    Polynomial a = poly("x^2 - 3*y", R), b = poly("y^2 + x", R), c = poly("x*y - 1", R);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("polynomial arithmetic: Frobenius in characteristic 2") {
    auto R = make_ring(Field::prime(2), {"x", "y"});
    Polynomial s = poly("x + y", R);
    CHECK(s * s == poly("x^2 + y^2", R));
}

TEST_CASE("polynomial pow matches repeated naive multiplication") {
    auto R = make_ring(Field::rationals(), {"x1", "x2"});
    // the cube that appears inside the involution's first numerator
    Polynomial p = poly("3*x1 - 9*x2 - x2^2", R);
    Polynomial cube = p.pow(3);
    CHECK(cube == p * p * p);
    CHECK(cube.terms().size() == 10);
    CHECK(p.pow(0) == Polynomial::constant(R, 1));
}

TEST_CASE("mismatched variable lists are rejected") {
    auto R1 = make_ring(Field::rationals(), {"x"});
    auto R2 = make_ring(Field::rationals(), {"y"});
    Polynomial x = Polynomial::variable(R1, "x");
    Polynomial y = Polynomial::variable(R2, "y");
    CHECK_THROWS_AS((void)(x + y), ring_mismatch);

    // equal variable lists in distinct ring objects are the same ring
    auto R1b = make_ring(Field::rationals(), {"x"});
    CHECK(Polynomial::variable(R1b, "x") == x);
}

TEST_CASE("gcd: difference of squares, zero conventions, char 2") {
    auto R = make_ring(Field::rationals(), {"x", "y"});
    CHECK(gcd(poly("x^2 - y^2", R), poly("x - y", R)) == poly("x - y", R));

    Polynomial p = poly("6*x^2 - 6*y", R);
    CHECK(gcd(p, Polynomial::zero(R)) == p.unit_normal());
    CHECK(gcd(Polynomial::zero(R), Polynomial::zero(R)).is_zero());

    auto F = make_ring(Field::prime(2), {"x", "y"});
    CHECK(gcd(poly("x^2 + y^2", F), poly("x + y", F)) == poly("x + y", F));
}

TEST_CASE("gcd output is unit-normal and divides both inputs") {
    auto R = make_ring(Field::rationals(), {"x", "y"});
    Polynomial a = poly("(2*x + 2*y)*(x^2 + 3)", R);
    Polynomial b = poly("(3*x + 3*y)*(y - 1)", R);
    Polynomial g = gcd(a, b);
    CHECK(g == poly("x + y", R)); // integer-primitive, positive leading coefficient
    CHECK(a.try_divexact(g).has_value());
    CHECK(b.try_divexact(g).has_value());
    CHECK(gcd(a.divexact(g), b.divexact(g)).total_degree() == 0);
}

TEST_CASE("divexact: exact quotient, distinct error kinds") {
    auto R = make_ring(Field::rationals(), {"x"});
    CHECK(poly("x^2 - 1", R).divexact(poly("x - 1", R)) == poly("x + 1", R));

    // multiply-then-divide roundtrip on a large sextic
    auto RY = make_ring(Field::rationals(), {"y1", "y2", "y3"});
    Polynomial f = poly(
        "2*y1^6+729*y1^3*y2-27*y1^4*y2+4*y1^3*y2^2-27*y1*y2^3+2*y2^4+729*y1^3*y3"
        "-27*y1^4*y3-27*y1*y2^2*y3+729*y2*y3^2+729*y3^3", RY);
    Polynomial d = poly("y2 + y3", RY);
    CHECK((f * d).divexact(d) == f);

    CHECK_THROWS_AS((void)poly("x^2 + 1", R).divexact(poly("x + 1", R)),
                    inexact_division);
    CHECK_THROWS_AS((void)poly("x", R).divexact(Polynomial::zero(R)),
                    division_by_zero);
    CHECK_FALSE(poly("x^2 + 1", R).try_divexact(poly("x + 1", R)).has_value());
}

TEST_CASE("partial derivative: Leibniz rule and char-3 kill") {
    auto R = make_ring(Field::rationals(), {"v1", "v2", "v3"});
    Polynomial p = poly("v1^2*v3", R);
    CHECK(p.derivative(0) == poly("2*v1*v3", R));

    Polynomial a = poly("v1*v2 + v3", R), b = poly("v1 - v2^2", R);
    CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));

    auto F3 = make_ring(Field::prime(3), {"x"});
    CHECK(poly("x^3", F3).derivative(0).is_zero());
}

TEST_CASE("substitution: identity, constants, homomorphism, undefined image") {
    auto R = make_ring(Field::rationals(), {"x", "y"});
    Substitution id(R, R);
    id.set("x", RationalFunction::variable(R, "x"));
    id.set("y", RationalFunction::variable(R, "y"));

    CHECK(substitute(rf("y", R), id) == rf("y", R));
    CHECK(substitute(rf("5/3", R), id) == RationalFunction::constant(R, mpq_class(5, 3)));

    Substitution s(R, R);
    s.set("x", rf("1/(y + 1)", R));
    s.set("y", rf("y^2", R));
    RationalFunction e1 = rf("x + y", R), e2 = rf("x*y - 1", R);
    CHECK(substitute(e1 + e2, s) == substitute(e1, s) + substitute(e2, s));
    CHECK(substitute(e1 * e2, s) == substitute(e1, s) * substitute(e2, s));

    // image denominator identically zero: x -> t, y -> -t makes 1/(x+y) undefined
    auto T = make_ring(Field::rationals(), {"t"});
    Substitution bad(R, T);
    bad.set("x", rf("t", T));
    bad.set("y", rf("-t", T));
    CHECK_THROWS_AS((void)substitute(rf("1/(x + y)", R), bad), undefined_substitution);

    auto [n, d] = substitute_fraction(rf("(x - y)/(x + 1)", R), s);
    CHECK(fraction_equal(n, d, substitute(rf("(x - y)/(x + 1)", R), s)));
}

TEST_CASE("rational function arithmetic and canonical form") {
    auto R = make_ring(Field::rationals(), {"x", "y"});
    CHECK(rf("x/y", R) * rf("y/x", R) == RationalFunction::constant(R, 1));

    auto Z = make_ring(Field::rationals(), {"z1", "z2", "z3"});
    CHECK(rf("(1 - z1)/(1 + z1)", Z).inverse() == rf("(1 + z1)/(1 - z1)", Z));
    RationalFunction t = rf("z2 + z1/z2", Z);
    CHECK(t.num() == poly("z2^2 + z1", Z));
    CHECK(t.den() == poly("z2", Z));

    CHECK_THROWS_AS((void)(rf("x", R) / RationalFunction::constant(R, 0)),
                    division_by_zero);
    CHECK_THROWS_AS((void)RationalFunction(poly("x", R), Polynomial::zero(R)),
                    division_by_zero);

    // a/b and (a*t)/(b*t) construct the identical stored form
    Polynomial a = poly("x^2 - y", R), b = poly("x + 3", R), c = poly("y^2 - 2*x", R);
    RationalFunction f1(a, b), f2(a * c, b * c);
    CHECK(f1.num() == f2.num());
    CHECK(f1.den() == f2.den());

    // denominator normalization: integer-primitive, positive leading coefficient
    RationalFunction g(poly("x", R), poly("-2*x - 2", R));
    CHECK(g.den() == poly("x + 1", R));
    CHECK(g.num() == poly("-1/2*x", R));

    // monic denominator over a prime field
    auto F = make_ring(Field::prime(7), {"x"});
    RationalFunction h(poly("x", F), poly("3*x + 1", F));
    CHECK(h.den().leading_coefficient() == 1);

    CHECK(rf("x^-2", R) == rf("1/x^2", R));
    CHECK(rf("x", R).pow(-2) == rf("1/x^2", R));
}

TEST_CASE("rational function equality: cross-multiplication agrees with canonical") {
    auto R = make_ring(Field::rationals(), {"x", "y"});
    RationalFunction a = rf("(x^2 - y^2)/(x - y)", R);
    RationalFunction b = rf("x + y", R);
    CHECK(a == b);
    CHECK(rf_equal(a, b));
    CHECK(a.num() * b.den() - b.num() * a.den() == Polynomial::zero(R));
    CHECK_FALSE(rf_equal(a, rf("x - y", R)));
    CHECK(rf_probably_equal(a, b, 12345, 20));
    CHECK_FALSE(rf_probably_equal(a, rf("x - y", R), 12345, 20));
}

TEST_CASE("evaluation: exact values and pole errors") {
    auto R = make_ring(Field::prime(2), {"x"});
    CHECK(poly("x^2 + 1", R).evaluate({mpq_class(1)}) == 0);

    auto Q = make_ring(Field::rationals(), {"x"});
    CHECK_THROWS_AS((void)rf("1/x", Q).evaluate({mpq_class(0)}), evaluation_error);
    CHECK(rf("1/x", Q).evaluate({mpq_class(4)}) == mpq_class(1, 4));

    // the sextic relation vanishes at points of its parametrization
    auto RX = make_ring(Field::prime(101), {"x1", "x2"});
    auto RY = make_ring(Field::prime(101), {"y1", "y2", "y3"});
    Polynomial f = poly(
        "2*y1^6+729*y1^3*y2-27*y1^4*y2+4*y1^3*y2^2-27*y1*y2^3+2*y2^4+729*y1^3*y3"
        "-27*y1^4*y3-27*y1*y2^2*y3+729*y2*y3^2+729*y3^3", RY);
    Polynomial y1 = poly("3*x1 - 9*x2 - x2^2", RX);
    Polynomial y2 = poly("27*x1 + 9*x1*x2 + x2^3", RX);
    Polynomial y3 = poly("-27*x1 - 2*x1^2 - 9*x1*x2 - 2*x1*x2^2 + x2^3", RX);
    for (int a = 1; a <= 5; ++a) {
        std::vector<mpq_class> pt{mpq_class(17 * a % 101), mpq_class(39 * a % 101)};
        std::vector<mpq_class> ys{y1.evaluate(pt), y2.evaluate(pt), y3.evaluate(pt)};
        CHECK(f.evaluate(ys) == 0);
    }
}

TEST_CASE("equal_up_to_unit_monomial") {
    auto R = make_ring(Field::rationals(), {"x", "y"});
    auto r1 = equal_up_to_unit_monomial(poly("2*x^2*y + 4*x*y^2", R),
                                        poly("x^2*y + 2*x*y^2", R));
    REQUIRE(r1.has_value());
    CHECK(r1->first == 2);
    CHECK(r1->second == Monomial{0, 0});

    auto r2 = equal_up_to_unit_monomial(poly("x^3*y", R), poly("x*y", R));
    REQUIRE(r2.has_value());
    CHECK(r2->first == 1);
    CHECK(r2->second == Monomial{2, 0});

    CHECK_FALSE(equal_up_to_unit_monomial(poly("x + y", R), poly("x - y", R)).has_value());
    CHECK_FALSE(equal_up_to_unit_monomial(poly("x*y", R), poly("x^3*y", R)).has_value());
}

TEST_CASE("resultant: fixed small cases with the documented sign convention") {
    auto R = make_ring(Field::rationals(), {"x"});
    CHECK(resultant(poly("x - 2", R), poly("x^2 - 1", R), 0) ==
          Polynomial::constant(R, 3));
    CHECK(resultant(poly("x - 1", R), poly("x^2 - 1", R), 0).is_zero());

    // deg-1 x deg-1: a's coefficient rows first gives a*d - b*c
    auto S = make_ring(Field::rationals(), {"x", "a", "b", "c", "d"});
    Polynomial lin1 = poly("a*x + b", S), lin2 = poly("c*x + d", S);
    CHECK(resultant(lin1, lin2, 0) == poly("a*d - b*c", S));

    CHECK_THROWS_AS((void)resultant(poly("a", S), poly("d", S), 0), error);
}

TEST_CASE("resultant agrees with the Sylvester determinant oracle") {
    auto R = make_ring(Field::rationals(), {"x", "y"});
    Polynomial a = poly("x^3 - 2*x*y + y^2 + 1", R);
    Polynomial b = poly("3*x^2 + x*y - 5", R);
    CHECK(resultant(a, b, 0) == sylvester_resultant(a, b, 0));
    CHECK(resultant(a, b, 1) == sylvester_resultant(a, b, 1));

    auto F = make_ring(Field::prime(13), {"x", "y"});
    Polynomial c = poly("x^3 + 7*x*y + 1", F), d = poly("x^2 + y", F);
    CHECK(resultant(c, d, 0) == sylvester_resultant(c, d, 0));
}

TEST_CASE("resultant is multiplicative in the second argument") {
    auto R = make_ring(Field::rationals(), {"x", "y"});
    Polynomial p = poly("x^2 + y", R);
    Polynomial q1 = poly("x - y", R), q2 = poly("2*x + y^2 - 1", R);
    CHECK(resultant(p, q1 * q2, 0) == resultant(p, q1, 0) * resultant(p, q2, 0));
}

TEST_CASE("coefficients_in round-trips and degree bookkeeping") {
    auto R = make_ring(Field::rationals(), {"x", "y"});
    Polynomial p = poly("x^2*y - 3*x + y^2 - 7", R);
    auto cs = p.coefficients_in(0);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == poly("y^2 - 7", R));
    CHECK(cs[1] == poly("-3", R));
    CHECK(cs[2] == poly("y", R));
    CHECK(Polynomial::from_coefficients_in(R, 0, cs) == p);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.degree_in(1) == 2);
    CHECK(p.total_degree() == 3);
    CHECK(Polynomial::zero(R).total_degree() == -1);
}

TEST_CASE("unit_normal and rational_content") {
    auto R = make_ring(Field::rationals(), {"x"});
    Polynomial p = poly("-4/6*x^2 + 2/6", R); // == -1/3 * (2*x^2 - 1)
    auto [content, prim] = p.rational_content();
    CHECK(content == mpq_class(-1, 3));
    CHECK(prim == poly("2*x^2 - 1", R));
    CHECK(prim.scaled(content) == p);
    CHECK(prim.leading_coefficient() > 0);
    CHECK(p.unit_normal() == prim);

    auto F = make_ring(Field::prime(5), {"x"});
    CHECK(poly("3*x + 1", F).unit_normal() == poly("x + 2", F));
}
