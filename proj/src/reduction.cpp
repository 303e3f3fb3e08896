#include "staralg/reduction.hpp"

#include "staralg/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace staralg {

namespace {

void check_n(int n) {
    if (n < 1)
        throw std::invalid_argument("the n-tuple point needs n >= 1 (n = 0 generates the unit ideal)");
}

void check_one_dimensional(const PhasePolynomial& f) {
    if (f.m() != 1) throw DimensionMismatch("one-dimensional reduction requires m = 1");
}

/// Part of f with x-exponent exactly k, with the x^k stripped.
PhasePolynomial x_slice(const PhasePolynomial& f, int k) {
    PhasePolynomial out(1);
    for (const auto& [mono, c] : f.terms()) {
        if (mono.x(0) != k) continue;
        Monomial stripped = mono;
        stripped.exps[0] = 0;
        out.add_term(stripped, c);
    }
    return out;
}

template <class Product>
RightDivision peel(const PhasePolynomial& f, int n, Product product) {
    check_n(n);
    check_one_dimensional(f);
    std::vector<PhasePolynomial> comps(static_cast<std::size_t>(n), PhasePolynomial(1));
    PhasePolynomial q(1);
    PhasePolynomial work = f;
    while (!work.is_zero()) {
        const int k = work.x_degree();
        const PhasePolynomial c = x_slice(work, k);
        work -= product(c, PhasePolynomial::x(1, 0, k));
        if (k < n)
            comps[static_cast<std::size_t>(k)] += c;
        else
            q += product(c, PhasePolynomial::x(1, 0, k - n));
    }
    return {NormalForm(std::move(comps)), std::move(q)};
}

} // namespace

// NormalForm ------------------------------------------------------------------------

NormalForm::NormalForm(std::vector<PhasePolynomial> components) : components_(std::move(components)) {
    for (const auto& h : components_) {
        if (h.m() != 1) throw DimensionMismatch("normal-form components live in m = 1");
        if (!h.is_zero() && h.x_degree() > 0)
            throw std::invalid_argument("normal-form component depends on x: " + h.to_string());
    }
}

NormalForm NormalForm::zero(int n) {
    check_n(n);
    return NormalForm(std::vector<PhasePolynomial>(static_cast<std::size_t>(n), PhasePolynomial(1)));
}

NormalForm NormalForm::one(int n) {
    NormalForm out = zero(n);
    out.components_[0] = PhasePolynomial::constant(1, 1);
    return out;
}

bool NormalForm::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const auto& h) { return h.is_zero(); });
}

PhasePolynomial NormalForm::expand() const {
    PhasePolynomial out(1);
    for (int i = 0; i < n(); ++i) out += moyal_star(components_[static_cast<std::size_t>(i)], PhasePolynomial::x(1, 0, i));
    return out;
}

PhasePolynomial NormalForm::expand_mirror() const {
    PhasePolynomial out(1);
    for (int i = 0; i < n(); ++i) out += moyal_star(PhasePolynomial::x(1, 0, i), components_[static_cast<std::size_t>(i)]);
    return out;
}

PhasePolynomial NormalForm::flatten() const {
    PhasePolynomial out(1);
    for (int i = 0; i < n(); ++i)
        for (const auto& [mono, c] : components_[static_cast<std::size_t>(i)].terms()) {
            Monomial shifted = mono;
            shifted.exps[0] = static_cast<std::uint16_t>(i);
            out.add_term(shifted, c);
        }
    return out;
}

NormalForm NormalForm::unflatten(const PhasePolynomial& f, int n) {
    check_one_dimensional(f);
    if (!f.is_zero() && f.x_degree() >= n) throw std::invalid_argument("unflatten: x-degree must be below n");
    std::vector<PhasePolynomial> comps;
    for (int i = 0; i < n; ++i) comps.push_back(x_slice(f, i));
    return NormalForm(std::move(comps));
}

NormalForm NormalForm::negate_lambda() const {
    NormalForm out = *this;
    for (auto& h : out.components_) h = h.negate_lambda();
    return out;
}

NormalForm& NormalForm::operator+=(const NormalForm& rhs) {
    if (n() != rhs.n()) throw DimensionMismatch("normal forms of different n");
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += rhs.components_[i];
    return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& rhs) {
    if (n() != rhs.n()) throw DimensionMismatch("normal forms of different n");
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= rhs.components_[i];
    return *this;
}

NormalForm operator*(const RationalFunction& c, NormalForm a) {
    for (auto& h : a.components_) h *= c;
    return a;
}

std::string NormalForm::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += "; ";
        out += components_[i].to_string();
    }
    return out + "]";
}

// One-dimensional division ---------------------------------------------------------

RightDivision right_divide_1d(const PhasePolynomial& f, int n) {
    return peel(f, n, [](const PhasePolynomial& h, const PhasePolynomial& xk) { return moyal_star(h, xk); });
}

RightDivision mirror_divide_1d(const PhasePolynomial& f, int n) {
    return peel(f, n, [](const PhasePolynomial& h, const PhasePolynomial& xk) { return moyal_star(xk, h); });
}

bool is_in_left_ideal_1d(const PhasePolynomial& f, int n) { return right_divide_1d(f, n).normal_form.is_zero(); }

bool is_in_right_ideal_1d(const PhasePolynomial& f, int n) { return mirror_divide_1d(f, n).normal_form.is_zero(); }

// Ideal slices -------------------------------------------------------------------------

namespace {

EchelonBasis slice_basis(const std::vector<BasePolynomial>& generators, int m, int bound) {
    std::vector<PhasePolynomial> rows;
    for (const auto& phi : generators) {
        const PhasePolynomial lifted = pullback(phi);
        for (const auto& mono : monomials_up_to(m, bound - phi.degree()))
            rows.push_back(moyal_star(PhasePolynomial::term(m, mono, 1), lifted));
    }
    return EchelonBasis::from_rows(m, std::move(rows));
}

} // namespace

IdealSlice ideal_slice(const std::vector<BasePolynomial>& generators, int degree_bound, int slack,
                       bool check_stability) {
    if (generators.empty()) throw std::invalid_argument("ideal_slice: no generators");
    if (slack < 0) throw std::invalid_argument("ideal_slice: negative slack");
    const int m = generators.front().m();
    int max_degree = 0;
    for (const auto& phi : generators) {
        if (phi.m() != m) throw DimensionMismatch("ideal_slice: generators of different m");
        if (phi.as_phase().is_zero()) throw std::invalid_argument("ideal_slice: zero generator");
        max_degree = std::max(max_degree, phi.degree());
    }
    if (degree_bound < max_degree)
        throw std::invalid_argument("ideal_slice: degree bound " + std::to_string(degree_bound) +
                                    " is below the generator degree " + std::to_string(max_degree));

    IdealSlice out;
    out.m = m;
    out.degree_bound = degree_bound;
    out.slack = slack;
    out.generators = generators;
    out.basis = slice_basis(generators, m, degree_bound + slack).restricted(degree_bound);
    if (check_stability) {
        out.stabilized = slice_basis(generators, m, degree_bound + slack + 1).restricted(degree_bound) == out.basis;
    }
    return out;
}

PhasePolynomial reduce_mod_slice(const PhasePolynomial& f, const IdealSlice& slice) {
    if (f.m() != slice.m) throw DimensionMismatch("reduce_mod_slice: dimension mismatch");
    if (f.degree() > slice.degree_bound)
        throw DegreeExceedsSlice("reduce_mod_slice: degree " + std::to_string(f.degree()) + " exceeds the slice bound " +
                                 std::to_string(slice.degree_bound));
    return slice.basis.reduce(f);
}

} // namespace staralg
