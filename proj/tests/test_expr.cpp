#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "tansurf/expr.hpp"

using namespace tansurf;

namespace {
const std::vector<std::string> XYZ{"x1", "x2", "x3"};
const std::vector<std::string> T{"t"};
} // namespace

TEST_CASE("operator precedence and associativity") {
    CHECK(eval_scalar(parse_expr("2+3*4^2", T), {0.0}) == 50.0);
    CHECK(eval_scalar(parse_expr("2^3^2", T), {0.0}) == 512.0);  // right associative
    CHECK(eval_scalar(parse_expr("-2^2", T), {0.0}) == -4.0);    // unary binds looser than ^
    CHECK(eval_scalar(parse_expr("(-2)^2", T), {0.0}) == 4.0);
    CHECK(eval_scalar(parse_expr("10-4-3", T), {0.0}) == 3.0);   // left associative
    CHECK(eval_scalar(parse_expr("12/4/3", T), {0.0}) == 1.0);
    CHECK(eval_scalar(parse_expr("2*-3", T), {0.0}) == -6.0);
}

TEST_CASE("printer output reparses to the same tree") {
    const std::vector<std::string> sources{
        "x1 + x2*x3",      "(x1+x2)*x3",     "-x1^2",         "x1^(x2+1)",
        "sin(x1)*cos(x2)", "1/(1+x3^2)",     "-(x1-x2)-x3",   "sqrt(x1^2+x2^2)",
        "2*(x1+3)^4/x2",   "exp(-x1*x2)+log(x3)",
    };
    for (const auto& src : sources) {
        const Expr e = parse_expr(src, XYZ);
        const std::string printed = to_string(e);
        const Expr reparsed = parse_expr(printed, XYZ);
        CHECK(to_string(reparsed) == printed);
        // and the two trees evaluate identically
        const std::vector<double> pt{0.7, 1.3, 2.1};
        CHECK(eval_scalar(e, pt) == doctest::Approx(eval_scalar(reparsed, pt)).epsilon(1e-15));
    }
}

TEST_CASE("undeclared names are rejected with the offending name") {
    try {
        parse_expr("x1 + x4", XYZ);
        FAIL("expected UnknownVariable");
    } catch (const UnknownVariable& e) {
        CHECK(e.variable == "x4");
    }
    CHECK_THROWS_AS(parse_expr("t + s", T), UnknownVariable);
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_expr("x1 + * x2", XYZ);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position >= 4);
        CHECK(e.position <= 9);
    }
    CHECK_THROWS_AS(parse_expr("", T), SyntaxError);
    CHECK_THROWS_AS(parse_expr("sin(x1", XYZ), SyntaxError);
    CHECK_THROWS_AS(parse_expr("x1 x2", XYZ), SyntaxError);
}

TEST_CASE("scalar evaluation flags domain violations") {
    CHECK_THROWS_AS(eval_scalar(parse_expr("1/t", T), {0.0}), DomainError);
    CHECK_THROWS_AS(eval_scalar(parse_expr("log(t)", T), {-1.0}), DomainError);
    CHECK_THROWS_AS(eval_scalar(parse_expr("sqrt(t)", T), {-1.0}), DomainError);
    CHECK_THROWS_AS(eval_scalar(parse_expr("t^(-1)", T), {0.0}), DomainError);
    CHECK_THROWS_AS(eval_scalar(parse_expr("t^0.5", T), {-2.0}), DomainError);
    CHECK(eval_scalar(parse_expr("t^0.5", T), {4.0}) == doctest::Approx(2.0));
}

TEST_CASE("jet evaluation produces the derivatives of the composite") {
    // f(t) = sin(t^2): f'(t) = 2t cos(t^2), f''(t) = 2cos(t^2) - 4t^2 sin(t^2)
    const Expr f = parse_expr("sin(t^2)", T);
    const double t0 = 0.8;
    const Jet j = eval_jet(f, {Jet::variable(4, t0)}, 4, t0);
    CHECK(j.value() == doctest::Approx(std::sin(t0 * t0)));
    CHECK(j.derivative(1) == doctest::Approx(2 * t0 * std::cos(t0 * t0)));
    CHECK(j.derivative(2) ==
          doctest::Approx(2 * std::cos(t0 * t0) - 4 * t0 * t0 * std::sin(t0 * t0)));

    // polynomials in t with a zero base point must work (integer powers)
    const Jet p = eval_jet(parse_expr("t^3 - 2*t", T), {Jet::variable(5, 0.0)}, 5, 0.0);
    CHECK(p.coeff(1) == -2.0);
    CHECK(p.coeff(3) == 1.0);
}

TEST_CASE("poly_expr builds the exact polynomial") {
    const Expr p = poly_expr({1.0, -0.5, 0.0, 2.25}, "t", T);
    for (double t : {-1.3, 0.0, 0.4, 2.0})
        CHECK(eval_scalar(p, {t}) == doctest::Approx(1.0 - 0.5 * t + 2.25 * t * t * t));
}

TEST_CASE("half_sum_expr averages without simplification surprises") {
    const Expr a = parse_expr("x1*x2", XYZ);
    const Expr b = parse_expr("x2*x1 + x3", XYZ);
    const Expr h = half_sum_expr(a, b);
    CHECK(eval_scalar(h, {2.0, 3.0, 4.0}) == doctest::Approx(0.5 * (6.0 + 10.0)));
}
