#include "doctest.h"
#include "support.hpp"

#include "staralg/matrixrep.hpp"

using namespace staralg;
using namespace test;

namespace {

NormalForm n2(const RationalFunction& a, const RationalFunction& b, const RationalFunction& c,
              const RationalFunction& d) {
    ConstantsMatrix k(2, 2);
    k(0, 0) = a;
    k(0, 1) = b;
    k(1, 0) = c;
    k(1, 1) = d;
    return closed_form_h(k);
}

Matrix<RationalFunction> m2(const RationalFunction& a, const RationalFunction& b, const RationalFunction& c,
                            const RationalFunction& d) {
    Matrix<RationalFunction> out(2, 2);
    out(0, 0) = a;
    out(0, 1) = b;
    out(1, 0) = c;
    out(1, 1) = d;
    return out;
}

Matrix<Rational> q2(int a, int b, int c, int d) {
    Matrix<Rational> out(2, 2);
    out(0, 0) = a;
    out(0, 1) = b;
    out(1, 0) = c;
    out(1, 1) = d;
    return out;
}

} // namespace

TEST_CASE("module basis") {
    CHECK(module_basis(1) == std::vector<PhasePolynomial>{P("1")});
    CHECK(module_basis(2) == std::vector<PhasePolynomial>{P("x"), P("x*p - l")});
    CHECK(module_basis(3)[0] == P("x^2"));
    CHECK(module_basis(3)[2] == moyal_star(P("p^2"), P("x^2")));
}

TEST_CASE("action matrices for n = 2") {
    CHECK(action_matrix(NormalForm::one(2)).entries == Matrix<RationalFunction>::identity(2));
    std::mt19937_64 rng(23);
    const auto l = L();
    for (int t = 0; t < 20; ++t) {
        const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng), d = random_scalar(rng);
        const auto h = n2(a, b, c, d);
        CHECK(action_matrix(h).entries == m2(a, b, 2 * l * c, a + 2 * l * d));
        CHECK(action_matrix_direct(h) == action_matrix(h));
    }
    const auto nil = action_matrix(n2(0, 1, 0, 0)).entries;
    CHECK(nil == m2(0, 1, 0, 0));
    CHECK((nil * nil).is_zero_matrix());
}

TEST_CASE("action matrices by formula and by reduction agree") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& h : canonical_basis(n)) CHECK(action_matrix(h) == action_matrix_direct(h));
}

TEST_CASE("composition convention") {
    CHECK(detect_composition() == Composition::Transposed);
    const auto h = n2(1, 2, 3, 4), g = n2(-1, 5, S("1/l"), 2);
    const auto hg = star_in_quotient(h, g);
    CHECK(action_matrix(hg).entries == action_matrix(g).entries * action_matrix(h).entries);
    CHECK(psi(hg, Composition::Transposed) == psi(h, Composition::Transposed) * psi(g, Composition::Transposed));
}

TEST_CASE("quotient is the full matrix algebra") {
    for (int n = 1; n <= 4; ++n) {
        const auto report = verify_isomorphism(n);
        for (const auto& c : report.checks) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.pass);
        }
        CHECK(report.pair_checks == static_cast<std::size_t>(n * n * n * n));
        CHECK(report.pair_failures == 0);
        CHECK(report.rank == static_cast<std::size_t>(n * n));
        CHECK(report.unit_is_identity);
        CHECK(report.degree_claim);
    }
}

TEST_CASE("n = 2 explicit matrix map") {
    CHECK(n2_matrix(NormalForm::one(2)) == Matrix<RationalFunction>::identity(2));
    CHECK(n2_printed_matrix(NormalForm::one(2)) == m2(1, 0, 0, 2 * L()));
    const auto h = n2(3, 5, 7, 11);
    CHECK(n2_matrix(h)(0, 0) == 3 + 2 * L() * 11);
    CHECK(n2_matrix(h)(1, 1) == RationalFunction(3));

    const auto report = n2_formula_report();
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    CHECK_FALSE(report.printed_counterexample.empty());
    CHECK_FALSE(report.equals_sign_counterexample.empty());

    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        const auto x = n2(random_scalar(rng), random_scalar(rng), random_scalar(rng), random_scalar(rng));
        const auto y = n2(random_scalar(rng), random_scalar(rng), random_scalar(rng), random_scalar(rng));
        CHECK(n2_matrix(star_in_quotient(x, y)) == n2_matrix(x) * n2_matrix(y));
        CHECK(n2_product(x, y) == star_in_quotient(x, y));
    }
    const auto b = n2(0, 1, 0, 0), a = n2(1, 0, 0, 0);
    CHECK_FALSE(n2_printed_matrix(star_in_quotient(b, a)) ==
                n2_printed_matrix(b) * n2_printed_matrix(a));
}

TEST_CASE("evaluation at rational l") {
    CHECK(evaluate_matrix(action_matrix(n2(0, 0, 1, 0)), Rational(1, 2)) == q2(0, 0, 1, 0));
    CHECK(evaluate_matrix(action_matrix(n2(0, 1, 0, 0)), Rational(1)) == q2(0, 1, 0, 0));
    for (const Rational& at : {Rational(1), Rational(-2, 3), Rational(7)})
        CHECK(evaluate_matrix(action_matrix(NormalForm::one(3)), at) == Matrix<Rational>::identity(3));
    CHECK_THROWS_AS(evaluate_matrix(action_matrix(NormalForm::one(2)), Rational(0)), std::domain_error);
}

TEST_CASE("trace form") {
    for (int n = 2; n <= 3; ++n) {
        const auto basis = canonical_basis(n);
        const auto conv = detect_composition();
        std::mt19937_64 rng(31);
        for (int t = 0; t < 10; ++t) {
            const auto& h = basis[rng() % basis.size()];
            const auto& g = basis[rng() % basis.size()];
            const auto c = random_scalar(rng);
            CHECK(psi(h + c * g, conv).trace() == psi(h, conv).trace() + c * psi(g, conv).trace());
            CHECK(psi(star_in_quotient(h, g), conv).trace() == psi(star_in_quotient(g, h), conv).trace());
        }
    }
}

TEST_CASE("matrix units are recovered at rational l") {
    for (int n = 1; n <= 3; ++n) {
        const auto algebra = structure_constants(n);
        for (const Rational& at : {Rational(1), Rational(2, 3), Rational(-5)}) {
            const auto c = recognize_matrix_algebra(algebra, at);
            INFO(c.name << ": " << c.detail);
            CHECK(c.pass);
        }
    }
}
