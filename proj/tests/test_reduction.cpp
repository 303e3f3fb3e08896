#include "doctest.h"
#include "support.hpp"

#include "staralg/checks.hpp"
#include "staralg/errors.hpp"
#include "staralg/reduction.hpp"

#include <algorithm>

using namespace staralg;
using namespace test;

TEST_CASE("right division examples") {
    auto d = right_divide_1d(P("x^2"), 2);
    CHECK(d.normal_form.is_zero());
    CHECK(d.quotient == P("1"));

    d = right_divide_1d(P("x*p"), 2);
    CHECK(d.normal_form == NormalForm({P("l"), P("p")}));
    CHECK(d.quotient.is_zero());

    d = right_divide_1d(P("x"), 2);
    CHECK(d.normal_form == NormalForm({P("0"), P("1")}));
    CHECK(d.quotient.is_zero());
}

TEST_CASE("left ideal membership examples") {
    RandomSettings settings;
    settings.seed = 4;
    RandomPolynomials gen(settings);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + t % 4;
        CHECK(is_in_left_ideal_1d(moyal_star(gen.phase(1, 5, true), P("x^" + std::to_string(n))), n));
    }
    CHECK_FALSE(is_in_left_ideal_1d(P("1"), 2));
    CHECK_FALSE(is_in_left_ideal_1d(P("x"), 2));
    CHECK(is_in_right_ideal_1d(moyal_star(P("x^2"), P("p^3 + x")), 2));
}

TEST_CASE("the unit ideal is rejected") {
    CHECK_THROWS_AS(right_divide_1d(P("x"), 0), std::invalid_argument);
    CHECK_THROWS_AS(NormalForm::zero(0), std::invalid_argument);
    CHECK_THROWS_AS(right_divide_1d(P("x1", 2), 2), DimensionMismatch);
}

TEST_CASE("normal forms reject x-dependent components") {
    CHECK_THROWS(NormalForm({P("x")}));
}

TEST_CASE("right division round trip") {
    RandomSettings settings;
    settings.seed = 8;
    settings.count = 60;
    for (int n = 1; n <= 5; ++n) {
        const auto c = right_division_check(settings, n);
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("normal forms are unique") {
    // Reducing sum h_i * x^i returns exactly the h_i.
    RandomSettings settings;
    settings.seed = 10;
    RandomPolynomials gen(settings);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + t % 5;
        std::vector<PhasePolynomial> parts;
        for (int i = 0; i < n; ++i) parts.push_back(gen.p_only(5));
        const NormalForm h(parts);
        const auto d = right_divide_1d(h.expand(), n);
        CHECK(d.normal_form == h);
        CHECK(d.quotient.is_zero());
        CHECK(mirror_divide_1d(h.expand_mirror(), n).normal_form == h);
    }
}

TEST_CASE("ideal slice examples") {
    const auto s2 = ideal_slice({B("x^2")}, 2);
    CHECK(s2.basis.rank() == 1);
    CHECK(s2.basis.rows() == std::vector<PhasePolynomial>{P("x^2")});

    const auto s3 = ideal_slice({B("x^2")}, 3);
    CHECK(s3.basis.rank() == 3);
    CHECK(s3.basis.contains(P("x^3")));
    CHECK(s3.basis.contains(P("x^2*p - 2*l*x")));
    CHECK(s3.basis.contains(P("x^2")));
    CHECK(s3.stabilized == true);
    CHECK(s3.basis.rows() == std::vector<PhasePolynomial>{P("x^3"), P("x^2*p - 2*l*x"), P("x^2")});

    const auto d = ideal_slice({B("x1*x2", 2), B("x2^2", 2)}, 2);
    CHECK(d.basis.rows() == std::vector<PhasePolynomial>{P("x1*x2", 2), P("x2^2", 2)});
    CHECK_THROWS(ideal_slice({B("x^3")}, 2));
}

TEST_CASE("reduction modulo a slice") {
    const auto s = ideal_slice({B("x^2")}, 2);
    CHECK(reduce_mod_slice(P("x^2"), s).is_zero());
    CHECK(reduce_mod_slice(P("x^2 + p"), s) == P("p"));
    CHECK_THROWS_AS(reduce_mod_slice(P("x^3"), s), DegreeExceedsSlice);
    const auto s4 = ideal_slice({B("x2^2 - x1^3", 2)}, 4);
    for (const auto& row : s4.basis.rows()) {
        CHECK(reduce_mod_slice(row, s4).is_zero());
        const auto once = reduce_mod_slice(row + P("x1*p2 + p1", 2), s4);
        CHECK(reduce_mod_slice(once, s4) == once);
    }
}

TEST_CASE("slice membership agrees with right division") {
    for (int n = 1; n <= 3; ++n) {
        const int degree = n + 2;
        const auto slice = ideal_slice({B("x^" + std::to_string(n))}, degree);
        for (const auto& mono : monomials_up_to(1, degree)) {
            const auto f = PhasePolynomial::term(1, mono, 1);
            CHECK(slice.basis.contains(f) == is_in_left_ideal_1d(f, n));
        }
        RandomSettings settings;
        settings.seed = 30 + static_cast<std::uint64_t>(n);
        RandomPolynomials gen(settings);
        for (int t = 0; t < 30; ++t) {
            const auto g = gen.phase(1, degree - n, true);
            const auto member = moyal_star(g, P("x^" + std::to_string(n)));
            CHECK(slice.basis.contains(member));
            const auto other = member + gen.phase(1, degree, true);
            CHECK(slice.basis.contains(other) == is_in_left_ideal_1d(other, n));
        }
    }
}

TEST_CASE("echelon basis does not depend on row order") {
    RandomSettings settings;
    settings.seed = 12;
    RandomPolynomials gen(settings);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 10; ++t) {
        std::vector<PhasePolynomial> rows;
        for (int i = 0; i < 8; ++i) rows.push_back(gen.phase(2, 3, true));
        rows.push_back(rows[0] + rows[1] * S("1/(l + 3)"));
        auto shuffled = rows;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto a = EchelonBasis::from_rows(2, rows);
        const auto b = EchelonBasis::from_rows(2, shuffled);
        CHECK(a == b);
        CHECK(a.rows() == b.rows());
        EchelonBasis c(2);
        for (auto it = shuffled.rbegin(); it != shuffled.rend(); ++it) c.insert(*it);
        CHECK(c.rows() == a.rows());
    }
}

TEST_CASE("multiple generators: slack stabilizes") {
    const auto s = ideal_slice({B("x1*x2", 2), B("x2^2", 2)}, 4, 2, true);
    CHECK(s.stabilized == true);
    const auto wider = ideal_slice({B("x1*x2", 2), B("x2^2", 2)}, 4, 4, false);
    CHECK(wider.basis == s.basis);
}
