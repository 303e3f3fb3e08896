#include "doctest.h"
#include "support.hpp"

#include "staralg/checks.hpp"
#include "staralg/errors.hpp"

#include <functional>

using namespace staralg;
using namespace test;

namespace {

Integer factorial(int k) {
    Integer out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

/// Star product straight from the bidifferential series, one derivative at a
/// time, with no use of the monomial kernel.
PhasePolynomial naive_star(const PhasePolynomial& f, const PhasePolynomial& g) {
    const int m = f.m();
    const int bound = std::max(f.degree(), g.degree());
    PhasePolynomial out(m);
    std::vector<int> alpha(static_cast<std::size_t>(m)), beta(static_cast<std::size_t>(m));
    std::function<void(int)> loop = [&](int slot) {
        if (slot == 2 * m) {
            PhasePolynomial df = f, dg = g;
            int order = 0, sign_order = 0;
            Integer denom = 1;
            for (int a = 0; a < m; ++a) {
                const int al = alpha[static_cast<std::size_t>(a)], be = beta[static_cast<std::size_t>(a)];
                df = partial_derivative(df, {Variable::Kind::X, a}, al);
                df = partial_derivative(df, {Variable::Kind::P, a}, be);
                dg = partial_derivative(dg, {Variable::Kind::P, a}, al);
                dg = partial_derivative(dg, {Variable::Kind::X, a}, be);
                order += al + be;
                sign_order += be;
                denom *= factorial(al) * factorial(be);
            }
            if (df.is_zero() || dg.is_zero()) return;
            RationalFunction c = RationalFunction::lambda_power(Rational(sign_order % 2 ? -1 : 1, 1) / Rational(denom), order);
            out += classical_mul(df, dg) * c;
            return;
        }
        auto& v = slot < m ? alpha[static_cast<std::size_t>(slot)] : beta[static_cast<std::size_t>(slot - m)];
        for (v = 0; v <= bound; ++v) loop(slot + 1);
    };
    loop(0);
    return out;
}

} // namespace

TEST_CASE("classical product examples") {
    CHECK(classical_mul(P("x"), P("p")) == P("x*p"));
    CHECK(classical_mul(P("x + p"), P("1")) == P("x + p"));
    CHECK(classical_mul(P("x^2"), P("x^3")) == P("x^5"));
    CHECK_THROWS_AS(classical_mul(P("x"), P("x1", 2)), DimensionMismatch);
}

TEST_CASE("partial derivative examples") {
    CHECK(partial_derivative(P("x*p"), {Variable::Kind::P, 0}) == P("x"));
    CHECK(partial_derivative(P("x^3"), {Variable::Kind::X, 0}) == P("3*x^2"));
    CHECK(partial_derivative(P("p^2"), {Variable::Kind::X, 0}).is_zero());
    CHECK(partial_derivative(P("p^5"), {Variable::Kind::P, 0}, 3) == P("60*p^2"));
    CHECK_THROWS(partial_derivative(P("x"), {Variable::Kind::X, 1}));
}

TEST_CASE("star product examples") {
    CHECK(moyal_star(P("x"), P("p")) == P("x*p + l"));
    CHECK(moyal_star(P("p"), P("x")) == P("x*p - l"));
    CHECK(moyal_star(P("x^2"), P("x^3")) == P("x^5"));
    CHECK(moyal_star(P("x"), P("p")).to_string() == "x*p + l");
    CHECK(moyal_star(P("p"), P("x^2")) == P("x^2*p - 2*l*x"));
    CHECK(moyal_star(P("x1", 2), P("p2", 2)) == P("x1*p2", 2));
    CHECK(moyal_star(P("x2", 2), P("p2", 2)) == P("x2*p2 + l", 2));
    CHECK(star_negated(P("x"), P("p")) == P("x*p - l"));
    CHECK_THROWS_AS(moyal_star(P("x"), P("x1", 2)), DimensionMismatch);
}

TEST_CASE("Poisson bracket examples") {
    CHECK(poisson_bracket(P("x"), P("p")) == P("1"));
    CHECK(poisson_bracket(P("x^2*p + p^3"), P("x^2*p + p^3")).is_zero());
    CHECK(poisson_bracket(P("x^2"), P("p")) == P("2*x"));
}

TEST_CASE("pullback examples") {
    CHECK(pullback(B("x^3")) == P("x^3"));
    CHECK(pullback(B("x^3")).p_degree() == 0);
    CHECK(pullback(B("1")) == P("1"));
    CHECK(pullback(B("x1*x2", 2)) == P("x1*x2", 2));
    CHECK_THROWS_AS(BasePolynomial(P("x*p")), std::invalid_argument);
}

TEST_CASE("star product matches the bidifferential series") {
    RandomSettings settings;
    settings.seed = 21;
    RandomPolynomials gen(settings);
    for (int t = 0; t < 60; ++t) {
        const int m = 1 + t % 2;
        const auto f = gen.phase(m, 4, true);
        const auto g = gen.phase(m, 4, true);
        CHECK(moyal_star(f, g) == naive_star(f, g));
    }
}

TEST_CASE("star kernel properties on random inputs") {
    RandomSettings settings;
    settings.seed = 99;
    settings.count = 60;
    for (const auto& c : star_kernel_checks(settings)) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    INFO("transpose identity");
    CHECK(lambda_transpose_check(settings).pass);
}

TEST_CASE("star powers and degree sentinel") {
    CHECK(star_power(P("x + p"), 0) == P("1"));
    CHECK(star_power(P("p"), 3) == P("p^3"));
    CHECK(star_power(P("x + p"), 2) == moyal_star(P("x + p"), P("x + p")));
    CHECK(PhasePolynomial(1).degree() == kZeroDegree);
}

TEST_CASE("graded lex order puts x before p") {
    const auto f = P("p^2 + x*p + x^2 + x + p + 1");
    CHECK(f.leading_monomial() == Monomial::x_power(0, 2));
    CHECK(f.to_string() == "x^2 + x*p + p^2 + x + p + 1");
    CHECK(P("x1*x2 + x2^2 + x1^2", 2).to_string() == "x1^2 + x1*x2 + x2^2");
}
