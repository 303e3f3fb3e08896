#include "doctest.h"
#include "support.hpp"

#include "staralg/errors.hpp"

using namespace staralg;
using namespace test;

TEST_CASE("rational function arithmetic examples") {
    const auto half_inv = RationalFunction(LambdaPoly::constant(1), LambdaPoly::monomial(2, 1));
    CHECK(half_inv + half_inv == L().invert());
    CHECK(L() + RationalFunction(0) == L());
    const auto quotient = S("(l^2 - 1)/(l - 1)");
    CHECK(quotient + 1 == L() + 2);
    CHECK((2 * L()) * half_inv == RationalFunction(1));
    CHECK((L() * L()).invert() == RationalFunction::lambda_power(1, -2));
    CHECK((2 * L()) * (2 * L()) * half_inv == 2 * L());
}

TEST_CASE("canonical form") {
    const RationalFunction a(LambdaPoly({2, 4}), LambdaPoly({-6, 0, -2}));
    CHECK(a.denominator().leading() > 0);
    CHECK(gcd(a.numerator(), a.denominator()).degree() == 0);
    CHECK(a == RationalFunction(LambdaPoly({-1, -2}), LambdaPoly({3, 0, 1})));
    CHECK(RationalFunction(0).denominator().is_one());
    CHECK(RationalFunction(LambdaPoly(), LambdaPoly({0, 5})) == RationalFunction(0));
}

TEST_CASE("invert of zero signals division by zero") {
    CHECK_THROWS_AS(RationalFunction(0).invert(), DivisionByZero);
    CHECK_THROWS_AS(L() / RationalFunction(0), DivisionByZero);
}

TEST_CASE("negate_lambda examples") {
    CHECK((2 * L()).negate_lambda() == -2 * L());
    CHECK((L() * L()).negate_lambda() == L() * L());
    CHECK(S("1/(2*l)").negate_lambda() == S("-1/(2*l)"));
}

TEST_CASE("pole order examples") {
    CHECK(S("l^3/2").pole_order_at_zero() == 3);
    CHECK(S("1/(2*l)").pole_order_at_zero() == -1);
    CHECK((L() + 1).pole_order_at_zero() == 0);
    CHECK_THROWS_AS(RationalFunction(0).pole_order_at_zero(), DivisionByZero);
}

TEST_CASE("evaluate examples") {
    CHECK((2 * L()).evaluate(Rational(1, 2)) == 1);
    CHECK(S("1/(2*l)").evaluate(Rational(1, 2)) == 1);
    CHECK_THROWS_AS(L().invert().evaluate(0), PoleError);
}

TEST_CASE("printing") {
    CHECK(S("(2*l^2 + 1)/(2*l)").to_string() == "(2*l^2 + 1)/(2*l)");
    CHECK(S("1/(2*l)").to_string() == "1/(2*l)");
    CHECK(S("-3/2").to_string() == "-3/2");
    CHECK(RationalFunction(0).to_string() == "0");
    CHECK(S("l^2 - 1").to_string() == "l^2 - 1");
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto a = random_scalar(rng);
        CHECK(parse_scalar(a.to_string()) == a);
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == RationalFunction(0));
        if (!a.is_zero()) CHECK(a * a.invert() == RationalFunction(1));
    }
}

TEST_CASE("negate_lambda is an involutive ring automorphism") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_scalar(rng), b = random_scalar(rng);
        CHECK((a + b).negate_lambda() == a.negate_lambda() + b.negate_lambda());
        CHECK((a * b).negate_lambda() == a.negate_lambda() * b.negate_lambda());
        CHECK(a.negate_lambda().negate_lambda() == a);
    }
}

TEST_CASE("pole order is additive under multiplication") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_scalar(rng) * RationalFunction::lambda_power(1, static_cast<int>(rng() % 5) - 2);
        const auto b = random_scalar(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).pole_order_at_zero() == a.pole_order_at_zero() + b.pole_order_at_zero());
    }
}

TEST_CASE("arithmetic agrees with evaluation at rational points") {
    // Evaluation is a ring homomorphism away from poles, so exact rational
    // arithmetic at sample points is an independent oracle.
    std::mt19937_64 rng(9);
    const Rational points[] = {Rational(1, 3), Rational(-5, 2), Rational(7), Rational(2, 11)};
    for (int t = 0; t < 200; ++t) {
        const auto a = random_scalar(rng), b = random_scalar(rng);
        for (const auto& at : points) {
            Rational va, vb;
            try {
                va = a.evaluate(at);
                vb = b.evaluate(at);
            } catch (const PoleError&) {
                continue;
            }
            CHECK((a + b).evaluate(at) == va + vb);
            CHECK((a * b).evaluate(at) == va * vb);
            if (vb != 0 && !b.is_zero()) CHECK((a / b).evaluate(at) == va / vb);
        }
    }
}

TEST_CASE("polynomial gcd and exact division") {
    const LambdaPoly a({-1, 0, 1}); // l^2 - 1
    const LambdaPoly b({1, 2, 1});  // (l + 1)^2
    CHECK(gcd(a, b) == LambdaPoly({1, 1}));
    CHECK(exact_quotient(a, LambdaPoly({-1, 1})) == LambdaPoly({1, 1}));
    CHECK(gcd(LambdaPoly({0, 0, 6}), LambdaPoly({0, 4})) == LambdaPoly({0, 2}));
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const auto x = random_lambda_poly(rng), y = random_lambda_poly(rng), z = random_lambda_poly(rng);
        if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
        const auto g = gcd(x * z, y * z);
        CHECK(exact_quotient(x * z, g) * g == x * z);
        CHECK(exact_quotient(g, gcd(g, z)) * gcd(g, z) == g);
        // z divides gcd(xz, yz)
        CHECK(exact_quotient(g, z) * z == g);
    }
}
