#include "staralg/checks.hpp"

#include "staralg/matrixrep.hpp"
#include "staralg/quantize.hpp"

#include <algorithm>
#include <string>

namespace staralg {

RandomPolynomials::RandomPolynomials(const RandomSettings& settings) : settings_(settings), rng_(settings.seed) {}

int RandomPolynomials::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

RationalFunction RandomPolynomials::coefficient(bool lambda_coefficients) {
    int c = 0;
    while (c == 0) c = uniform(-settings_.coeff_bound, settings_.coeff_bound);
    if (!lambda_coefficients) return c;
    return RationalFunction::lambda_power(c, uniform(-1, 1));
}

PhasePolynomial RandomPolynomials::phase(int m, int max_degree, bool lambda_coefficients) {
    const auto monos = monomials_up_to(m, max_degree);
    PhasePolynomial out(m);
    const int terms = uniform(1, settings_.max_terms);
    for (int t = 0; t < terms; ++t)
        out.add_term(monos[static_cast<std::size_t>(uniform(0, static_cast<int>(monos.size()) - 1))],
                     coefficient(lambda_coefficients));
    return out;
}

PhasePolynomial RandomPolynomials::p_only(int max_degree) {
    PhasePolynomial out(1);
    const int terms = uniform(1, settings_.max_terms);
    for (int t = 0; t < terms; ++t) out.add_term(Monomial::p_power(0, uniform(0, max_degree)), coefficient(true));
    return out;
}

BasePolynomial RandomPolynomials::base(int m, int max_degree) {
    const auto monos = monomials_up_to(m, max_degree, true);
    PhasePolynomial out(m);
    const int terms = uniform(1, settings_.max_terms);
    for (int t = 0; t < terms; ++t)
        out.add_term(monos[static_cast<std::size_t>(uniform(0, static_cast<int>(monos.size()) - 1))], coefficient(false));
    return BasePolynomial(std::move(out));
}

namespace {

std::string tally(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total) + " cases"; }

bool all_orders_at_least(const PhasePolynomial& f, int order) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [order](const auto& t) { return t.second.pole_order_at_zero() >= order; });
}

} // namespace

std::vector<CheckResult> star_kernel_checks(const RandomSettings& settings) {
    RandomPolynomials gen(settings);
    const int count = settings.count;
    const int deg = std::min(settings.max_degree, 4);
    int assoc = 0, unit = 0, pull = 0, bound = 0, limit = 0, bracket = 0;
    for (int t = 0; t < count; ++t) {
        const int m = 1 + t % 2;
        const auto f = gen.phase(m, deg, true);
        const auto g = gen.phase(m, deg, true);
        const auto h = gen.phase(m, deg, true);
        assoc += moyal_star(moyal_star(f, g), h) == moyal_star(f, moyal_star(g, h));
        const auto one = PhasePolynomial::constant(m, 1);
        unit += moyal_star(one, f) == f && moyal_star(f, one) == f;

        const auto q1 = gen.base(m, 3);
        const auto q2 = gen.base(m, 3);
        const auto prod = pullback(q1 * q2);
        pull += prod == moyal_star(pullback(q1), pullback(q2)) && prod == moyal_star(pullback(q2), pullback(q1));

        const auto fs = gen.phase(m, deg, false);
        const auto gs = gen.phase(m, deg, false);
        const auto star = moyal_star(fs, gs);
        const auto classical = classical_mul(fs, gs);
        const int top = fs.degree() + gs.degree();
        bound += star.degree() <= top && star.homogeneous_part(top) == classical.homogeneous_part(top);
        limit += all_orders_at_least(star - classical, 1);
        const auto commutator = star - moyal_star(gs, fs);
        bracket += all_orders_at_least(commutator - poisson_bracket(fs, gs) * RationalFunction::lambda_power(2, 1), 3);
    }
    return {
        {"star associativity", assoc == count, tally(assoc, count)},
        {"star unit", unit == count, tally(unit, count)},
        {"pullback multiplicative and central among pullbacks", pull == count, tally(pull, count)},
        {"degree bound and leading part", bound == count, tally(bound, count)},
        {"classical limit", limit == count, tally(limit, count)},
        {"commutator = 2l {f,g} + O(l^3)", bracket == count, tally(bracket, count)},
    };
}

CheckResult commutation_check(const RandomSettings& settings, int max_power) {
    RandomPolynomials gen(RandomSettings{settings.seed + 1, settings.coeff_bound, settings.max_degree,
                                         settings.max_terms, settings.count});
    int ok = 0;
    for (int t = 0; t < settings.count; ++t) {
        const int i = gen.uniform(1, max_power);
        const auto g = gen.p_only(settings.max_degree);
        ok += moyal_star(PhasePolynomial::x(1, 0, i), g) == commute_x_power(g, i);
    }
    return {"x^i * g commutation formula", ok == settings.count, tally(ok, settings.count)};
}

CheckResult lambda_transpose_check(const RandomSettings& settings) {
    RandomPolynomials gen(RandomSettings{settings.seed + 2, settings.coeff_bound, settings.max_degree,
                                         settings.max_terms, settings.count});
    int ok = 0;
    for (int t = 0; t < settings.count; ++t) {
        const int m = 1 + t % 2;
        const auto q = gen.base(m, std::min(settings.max_degree, 4));
        const auto g = gen.phase(m, std::min(settings.max_degree, 4), true);
        ok += moyal_star(pullback(q), g) == star_negated(g, pullback(q));
    }
    return {"pullback(f) * g = g *_{-l} pullback(f)", ok == settings.count, tally(ok, settings.count)};
}

CheckResult right_division_check(const RandomSettings& settings, int n) {
    RandomPolynomials gen(RandomSettings{settings.seed + 3, settings.coeff_bound, settings.max_degree,
                                         settings.max_terms, settings.count});
    int ok = 0;
    const auto xn = PhasePolynomial::x(1, 0, n);
    for (int t = 0; t < settings.count; ++t) {
        const auto f = gen.phase(1, 8, true);
        const auto div = right_divide_1d(f, n);
        ok += div.normal_form.expand() + moyal_star(div.quotient, xn) == f;
    }
    return {"right division round trip (n = " + std::to_string(n) + ")", ok == settings.count, tally(ok, settings.count)};
}

std::vector<CheckResult> quotient_checks(int n) {
    std::vector<CheckResult> out;
    const std::string tag = " (n = " + std::to_string(n) + ")";
    const QuotientAlgebra kernel = normalizer_basis(n);
    out.push_back({"dimension = n^2" + tag, kernel.dimension() == static_cast<std::size_t>(n * n),
                   "dimension " + std::to_string(kernel.dimension())});
    out.push_back({"normalizer degree ansatz" + tag, kernel.degree_bound_confirmed, "ansatz + 2 finds no new solutions"});

    const QuotientAlgebra algebra = structure_constants(n);
    std::vector<PhasePolynomial> a, b;
    for (const auto& h : kernel.basis) a.push_back(h.flatten());
    for (const auto& h : algebra.basis) b.push_back(h.flatten());
    out.push_back({"closed form spans the kernel" + tag, EchelonBasis::from_rows(1, a) == EchelonBasis::from_rows(1, b), ""});
    bool members = true;
    for (const auto& h : algebra.basis) members = members && in_normalizer_1d(h);
    out.push_back({"closed form in normalizer" + tag, members, ""});
    out.push_back({"quotient closed under star" + tag, algebra.closed, ""});

    // Associativity of the structure constants: (b_i b_j) b_k = b_i (b_j b_k).
    const std::size_t dim = algebra.dimension();
    std::vector<std::vector<std::pair<std::size_t, RationalFunction>>> table(dim * dim);
    for (const auto& c : algebra.structure_constants) table[c.i * dim + c.j].emplace_back(c.k, c.value);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                std::vector<RationalFunction> left(dim), right(dim);
                for (const auto& [mi, v] : table[i * dim + j])
                    for (const auto& [l, w] : table[mi * dim + k]) left[l] += v * w;
                for (const auto& [mi, v] : table[j * dim + k])
                    for (const auto& [l, w] : table[i * dim + mi]) right[l] += v * w;
                failures += !(left == right);
            }
    out.push_back({"structure constants associative" + tag, failures == 0,
                   std::to_string(dim * dim * dim - failures) + "/" + std::to_string(dim * dim * dim) + " triples"});
    const int poles = max_pole_order(algebra);
    out.push_back({"structure constants Laurent, pole order <= n-1" + tag, all_laurent(algebra) && poles <= n - 1,
                   "max pole order " + std::to_string(poles)});

    const DualityReport duality = check_lambda_duality(n);
    out.push_back({"right-sided quotient at l = left-sided at -l" + tag, duality.pass(),
                   std::to_string(duality.checked) + " checks, " + std::to_string(duality.mismatches.size()) +
                       " mismatches"});

    const IsomorphismReport iso = verify_isomorphism(n);
    for (const auto& c : iso.checks) out.push_back({"matrix algebra: " + c.name + tag, c.pass, c.detail});
    for (const Rational& lambda0 : {Rational(1), Rational(1, 2), Rational(-3)}) {
        CheckResult c = recognize_matrix_algebra(algebra, lambda0);
        c.name += tag;
        out.push_back(std::move(c));
    }

    // The degree-truncated engine reproduces the same quotient once D covers
    // the closed-form basis (degree 2n at n = 3, higher beyond).
    int degree = n + 3;
    for (const auto& f : b) degree = std::max(degree, f.degree());
    const TruncatedQuotient truncated = quotient_truncated({BasePolynomial(PhasePolynomial::x(1, 0, n))}, degree);
    const IdealSlice slice = ideal_slice({BasePolynomial(PhasePolynomial::x(1, 0, n))}, degree, 2, false);
    const bool same_span = EchelonBasis::from_rows(1, truncated.basis) ==
                           EchelonBasis::from_rows(1, reduced_point_basis(algebra.basis, slice));
    out.push_back({"truncated engine agrees at D = " + std::to_string(degree) + tag,
                   truncated.dimension() == dim && same_span && truncated.closed(),
                   "dimension " + std::to_string(truncated.dimension())});
    return out;
}

std::vector<CheckResult> verify_suite(int n, const RandomSettings& settings) {
    std::vector<CheckResult> out = star_kernel_checks(settings);
    out.push_back(commutation_check(settings));
    out.push_back(lambda_transpose_check(settings));
    out.push_back(right_division_check(settings, n));
    for (auto& c : quotient_checks(n)) out.push_back(std::move(c));
    if (n == 2)
        for (auto& c : n2_formula_report().checks) out.push_back({"n = 2 product formulas: " + c.name, c.pass, c.detail});
    return out;
}

} // namespace staralg
