#include "staralg/quantize.hpp"

#include "staralg/errors.hpp"
#include "staralg/parallel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace staralg {

namespace {

using Combination = std::map<std::size_t, RationalFunction>;

template <class Map>
void axpy(Map& target, const RationalFunction& factor, const Map& source) {
    for (const auto& [key, c] : source) {
        auto [it, inserted] = target.try_emplace(key, c * factor);
        if (inserted) continue;
        it->second += c * factor;
        if (it->second.is_zero()) target.erase(it);
    }
}

/// Null space of the linear map sending unknown i to images[i]. Sparse
/// elimination along the keys in map order; each kernel vector is a sparse
/// combination of unknowns.
template <class Vector>
std::vector<Combination> sparse_kernel(const std::vector<Vector>& images) {
    struct Pivot {
        Vector row;
        Combination combo;
    };
    std::map<typename Vector::key_type, Pivot, typename Vector::key_compare> pivots;
    std::vector<Combination> kernel;
    for (std::size_t i = 0; i < images.size(); ++i) {
        Vector v = images[i];
        Combination combo{{i, RationalFunction(1)}};
        while (!v.empty()) {
            auto it = pivots.find(v.begin()->first);
            if (it == pivots.end()) break;
            const RationalFunction factor = -v.begin()->second;
            axpy(v, factor, it->second.row);
            axpy(combo, factor, it->second.combo);
        }
        if (v.empty()) {
            kernel.push_back(std::move(combo));
            continue;
        }
        const RationalFunction inv = v.begin()->second.invert();
        for (auto& [key, c] : v) c *= inv;
        for (auto& [key, c] : combo) c *= inv;
        const auto key = v.begin()->first;
        pivots.emplace(key, Pivot{std::move(v), std::move(combo)});
    }
    return kernel;
}

template <class Vector>
Vector to_vector(const PhasePolynomial& f) {
    Vector out;
    for (const auto& [mono, c] : f.terms()) out.emplace(mono, c);
    return out;
}

using PolyVector = std::map<Monomial, RationalFunction, MonomialDescending>;

struct GeneratorKeyOrder {
    bool operator()(const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return graded_lex_less(b.second, a.second);
    }
};
using StackedVector = std::map<std::pair<std::size_t, Monomial>, RationalFunction, GeneratorKeyOrder>;

/// Reduced echelon form of a family of normal forms, ascending.
std::vector<NormalForm> echelon_normal_forms(int n, const std::vector<NormalForm>& family) {
    std::vector<PhasePolynomial> flat;
    flat.reserve(family.size());
    for (const auto& h : family) flat.push_back(h.flatten());
    auto rows = EchelonBasis::from_rows(1, std::move(flat)).rows();
    std::reverse(rows.begin(), rows.end());
    std::vector<NormalForm> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(NormalForm::unflatten(r, n));
    return out;
}

/// Kernel of a 1-D normalizer condition over the ansatz deg h_i <= n + i - 1 + extra.
template <class Image>
std::vector<NormalForm> one_dimensional_kernel(int n, int extra_degree, Image image) {
    struct Unknown {
        int component;
        int power;
    };
    std::vector<Unknown> unknowns;
    std::vector<PolyVector> images;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= n + i - 1 + extra_degree; ++k) {
            unknowns.push_back({i, k});
            images.push_back(to_vector<PolyVector>(image(i, k).flatten()));
        }
    std::vector<NormalForm> kernel;
    for (const auto& combo : sparse_kernel(images)) {
        NormalForm h = NormalForm::zero(n);
        std::vector<PhasePolynomial> comps = h.components();
        for (const auto& [index, c] : combo)
            comps[static_cast<std::size_t>(unknowns[index].component)].add_term(
                Monomial::p_power(0, unknowns[index].power), c);
        kernel.emplace_back(std::move(comps));
    }
    return echelon_normal_forms(n, kernel);
}

Integer binomial(int n, int k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(int k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

EchelonBasis span_of(const std::vector<NormalForm>& family) {
    std::vector<PhasePolynomial> flat;
    for (const auto& h : family) flat.push_back(h.flatten());
    return EchelonBasis::from_rows(1, std::move(flat));
}

} // namespace

// Normalizer of the n-tuple point -----------------------------------------------------

std::vector<NormalForm> normalizer_kernel(int n, int extra_degree) {
    const PhasePolynomial xn = PhasePolynomial::x(1, 0, n);
    return one_dimensional_kernel(n, extra_degree, [&](int i, int k) {
        const PhasePolynomial unknown = moyal_star(PhasePolynomial::p(1, 0, k), PhasePolynomial::x(1, 0, i));
        return right_divide_1d(moyal_star(xn, unknown), n).normal_form;
    });
}

QuotientAlgebra normalizer_basis(int n) {
    QuotientAlgebra out;
    out.n = n;
    out.basis = normalizer_kernel(n, 0);
    out.degree_bound_confirmed = span_of(out.basis) == span_of(normalizer_kernel(n, 2));
    return out;
}

NormalForm closed_form_h(const ConstantsMatrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0) throw std::invalid_argument("closed_form_h: constants must be n x n");
    const int n = static_cast<int>(a.rows());
    auto at = [&](int i, int k) -> const RationalFunction& {
        return a(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
    };
    std::vector<PhasePolynomial> comps;
    for (int i = 0; i < n; ++i) {
        PhasePolynomial h(1);
        for (int k = 0; k < n; ++k) h.add_term(Monomial::p_power(0, k), at(i, k));
        // (2l)^{-i} sum_k (2l)^k / (i-k)! sum_j (-1)^{j+1} C(i-k-1, j) a_{k, n-i+k+j} p^{n+j}
        for (int k = 0; k < i; ++k) {
            for (int j = 0; j <= i - k - 1; ++j) {
                const RationalFunction& constant = at(k, n - i + k + j);
                if (constant.is_zero()) continue;
                Rational weight(binomial(i - k - 1, j), factorial(i - k));
                weight.canonicalize();
                if ((j + 1) % 2 == 1) weight = -weight;
                // (2l)^{k-i} = 2^{k-i} l^{k-i}
                Rational power_of_two(Integer(1), Integer(1) << static_cast<unsigned>(i - k));
                h.add_term(Monomial::p_power(0, n + j),
                           constant * RationalFunction::lambda_power(weight * power_of_two, k - i));
            }
        }
        comps.push_back(std::move(h));
    }
    return NormalForm(std::move(comps));
}

std::vector<NormalForm> canonical_basis(int n) {
    if (n < 1) throw std::invalid_argument("canonical_basis: n must be >= 1");
    std::vector<NormalForm> out;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            ConstantsMatrix unit(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            unit(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = 1;
            out.push_back(closed_form_h(unit));
        }
    return out;
}

ConstantsMatrix integration_constants(const NormalForm& h) {
    const auto n = static_cast<std::size_t>(h.n());
    ConstantsMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            out(i, k) = h.component(static_cast<int>(i)).coefficient(Monomial::p_power(0, static_cast<int>(k)));
    return out;
}

bool in_normalizer_1d(const NormalForm& h) {
    return is_in_left_ideal_1d(moyal_star(PhasePolynomial::x(1, 0, h.n()), h.expand()), h.n());
}

NormalForm star_in_quotient_unchecked(const NormalForm& h, const NormalForm& other) {
    if (h.n() != other.n()) throw DimensionMismatch("star_in_quotient: operands of different n");
    return right_divide_1d(moyal_star(h.expand(), other.expand()), h.n()).normal_form;
}

NormalForm star_in_quotient(const NormalForm& h, const NormalForm& other) {
    if (h.n() != other.n()) throw DimensionMismatch("star_in_quotient: operands of different n");
    if (!in_normalizer_1d(h)) throw NotInNormalizer("left operand is not in the normalizer: " + h.to_string());
    if (!in_normalizer_1d(other)) throw NotInNormalizer("right operand is not in the normalizer: " + other.to_string());
    return star_in_quotient_unchecked(h, other);
}

QuotientAlgebra structure_constants(int n) {
    QuotientAlgebra out;
    out.n = n;
    out.basis = canonical_basis(n);
    const std::size_t dim = out.basis.size();
    std::vector<std::vector<StructureConstant>> per_pair(dim * dim);
    std::vector<char> pair_closed(dim * dim, 0);
    parallel_for(dim * dim, [&](std::size_t index) {
        const std::size_t i = index / dim;
        const std::size_t j = index % dim;
        const NormalForm product = star_in_quotient_unchecked(out.basis[i], out.basis[j]);
        const ConstantsMatrix coords = integration_constants(product);
        pair_closed[index] = closed_form_h(coords) == product;
        for (std::size_t a = 0; a < coords.rows(); ++a)
            for (std::size_t b = 0; b < coords.cols(); ++b)
                if (!coords(a, b).is_zero()) per_pair[index].push_back({i, j, a * coords.cols() + b, coords(a, b)});
    });
    for (auto& entries : per_pair)
        out.structure_constants.insert(out.structure_constants.end(), entries.begin(), entries.end());
    out.closed = std::all_of(pair_closed.begin(), pair_closed.end(), [](char c) { return c != 0; });
    out.degree_bound_confirmed = span_of(out.basis) == span_of(normalizer_kernel(n, 2));
    return out;
}

std::vector<RationalFunction> dense_structure_constants(const QuotientAlgebra& algebra) {
    const std::size_t dim = algebra.dimension();
    std::vector<RationalFunction> out(dim * dim * dim);
    for (const auto& c : algebra.structure_constants) out[(c.i * dim + c.j) * dim + c.k] = c.value;
    return out;
}

int max_pole_order(const QuotientAlgebra& algebra) {
    int worst = 0;
    for (const auto& c : algebra.structure_constants) worst = std::max(worst, -c.value.pole_order_at_zero());
    return worst;
}

bool all_laurent(const QuotientAlgebra& algebra) {
    return std::all_of(algebra.structure_constants.begin(), algebra.structure_constants.end(),
                       [](const StructureConstant& c) { return c.value.is_laurent(); });
}

PhasePolynomial commute_x_power(const PhasePolynomial& g, int i) {
    PhasePolynomial out = moyal_star(g, PhasePolynomial::x(g.m(), 0, i));
    for (int k = 1; k <= i; ++k) {
        const PhasePolynomial dg = partial_derivative(g, {Variable::Kind::P, 0}, k);
        if (dg.is_zero()) break;
        const RationalFunction weight =
            RationalFunction::lambda_power(Rational(binomial(i, k) * (Integer(1) << static_cast<unsigned>(k))), k);
        out += moyal_star(dg, PhasePolynomial::x(g.m(), 0, i - k)) * weight;
    }
    return out;
}

// Right-sided construction ----------------------------------------------------------------

std::vector<NormalForm> right_normalizer_kernel(int n, int extra_degree) {
    const PhasePolynomial xn = PhasePolynomial::x(1, 0, n);
    return one_dimensional_kernel(n, extra_degree, [&](int i, int k) {
        const PhasePolynomial unknown = moyal_star(PhasePolynomial::x(1, 0, i), PhasePolynomial::p(1, 0, k));
        return mirror_divide_1d(moyal_star(unknown, xn), n).normal_form;
    });
}

DualityReport check_lambda_duality(int n) {
    DualityReport report;
    report.n = n;
    const auto left = canonical_basis(n);
    const auto right = right_normalizer_kernel(n);

    std::vector<NormalForm> negated;
    for (const auto& b : left) negated.push_back(b.negate_lambda());
    ++report.checked;
    if (!(span_of(right) == span_of(negated)))
        report.mismatches.push_back("right-sided quotient basis does not span the l-negated left basis");

    const PhasePolynomial xn = PhasePolynomial::x(1, 0, n);
    std::vector<PhasePolynomial> mirrored;
    for (std::size_t u = 0; u < left.size(); ++u) {
        const PhasePolynomial lifted = left[u].expand().negate_lambda();
        mirrored.push_back(lifted);
        const RightDivision div = mirror_divide_1d(lifted, n);
        ++report.checked;
        if (!div.quotient.is_zero() || !(div.normal_form == negated[u]))
            report.mismatches.push_back("basis element " + std::to_string(u) +
                                        ": mirror normal form differs from the l-negated components");
        ++report.checked;
        if (!is_in_right_ideal_1d(moyal_star(lifted, xn), n))
            report.mismatches.push_back("basis element " + std::to_string(u) +
                                        ": l-negation is not in the right normalizer");
    }
    // Products reverse: (h * g)|_{-l} = g|_{-l} * h|_{-l}.
    for (std::size_t u = 0; u < left.size(); ++u)
        for (std::size_t v = 0; v < left.size(); ++v) {
            const NormalForm lhs = mirror_divide_1d(moyal_star(mirrored[v], mirrored[u]), n).normal_form;
            const NormalForm rhs = star_in_quotient_unchecked(left[u], left[v]).negate_lambda();
            ++report.checked;
            if (!(lhs == rhs))
                report.mismatches.push_back("product (" + std::to_string(u) + ", " + std::to_string(v) +
                                            ") differs between the two constructions");
        }
    return report;
}

// Truncated engine -------------------------------------------------------------------

namespace {

TruncatedQuotient truncated_once(const std::vector<BasePolynomial>& generators, int degree_bound, int slack) {
    if (generators.empty()) throw std::invalid_argument("quotient_truncated: no generators");
    const int m = generators.front().m();
    int max_degree = 0;
    for (const auto& phi : generators) max_degree = std::max(max_degree, phi.degree());
    if (degree_bound < max_degree)
        throw std::invalid_argument("quotient_truncated: degree bound is below the generator degree");

    TruncatedQuotient out;
    out.m = m;
    out.degree_bound = degree_bound;
    out.slack = slack;
    out.generators = generators;

    // phi * f has degree <= D + deg phi, so membership is tested in the larger slice.
    const IdealSlice big = ideal_slice(generators, degree_bound + max_degree, slack, true);
    out.slice_stabilized = big.stabilized.value_or(false);
    const EchelonBasis ideal = big.basis.restricted(degree_bound);

    const auto unknowns = monomials_up_to(m, degree_bound);
    std::vector<StackedVector> images;
    images.reserve(unknowns.size());
    for (const auto& mono : unknowns) {
        StackedVector image;
        for (std::size_t a = 0; a < generators.size(); ++a) {
            const PhasePolynomial reduced =
                big.basis.reduce(moyal_star(pullback(generators[a]), PhasePolynomial::term(m, mono, 1)));
            for (const auto& [mm, c] : reduced.terms()) image.emplace(std::make_pair(a, mm), c);
        }
        images.push_back(std::move(image));
    }
    std::vector<PhasePolynomial> kernel;
    for (const auto& combo : sparse_kernel(images)) {
        PhasePolynomial f(m);
        for (const auto& [index, c] : combo) f.add_term(unknowns[index], c);
        kernel.push_back(std::move(f));
    }
    const EchelonBasis normalizer = EchelonBasis::from_rows(m, kernel);

    std::vector<PhasePolynomial> reduced;
    for (const auto& row : normalizer.rows()) reduced.push_back(ideal.reduce(row));
    const EchelonBasis quotient = EchelonBasis::from_rows(m, std::move(reduced));
    out.basis = quotient.rows();
    std::reverse(out.basis.begin(), out.basis.end());

    for (int d = 0; d <= degree_bound; ++d) {
        out.normalizer_dims.push_back(normalizer.rank_up_to_degree(d));
        out.ideal_dims.push_back(ideal.rank_up_to_degree(d));
        out.quotient_dims.push_back(out.normalizer_dims.back() - out.ideal_dims.back());
    }

    // Closure under the star product within the degree budget.
    const PhasePolynomial zero(m);
    for (std::size_t i = 0; i < out.basis.size(); ++i)
        for (std::size_t j = 0; j < out.basis.size(); ++j) {
            if (out.basis[i].degree() + out.basis[j].degree() > degree_bound) continue;
            ++out.closure_pairs;
            const PhasePolynomial product = moyal_star(out.basis[i], out.basis[j]);
            bool ok = true;
            for (const auto& phi : generators)
                ok = ok && big.basis.contains(moyal_star(pullback(phi), product));
            PhasePolynomial rest = ideal.reduce(product);
            for (std::size_t k = 0; k < out.basis.size() && ok; ++k) {
                const RationalFunction c = rest.coefficient(out.basis[k].leading_monomial());
                if (c.is_zero()) continue;
                out.structure_constants.push_back({i, j, k, c});
                rest -= out.basis[k] * c;
            }
            if (!rest.is_zero()) ok = false;
            if (!ok) ++out.closure_failures;
        }
    return out;
}

} // namespace

TruncatedQuotient quotient_truncated(const std::vector<BasePolynomial>& generators, int degree_bound, int slack,
                                     bool check_next_degree) {
    TruncatedQuotient out = truncated_once(generators, degree_bound, slack);
    if (check_next_degree) {
        const TruncatedQuotient next = truncated_once(generators, degree_bound + 1, slack);
        out.degree_stable = std::equal(out.quotient_dims.begin(), out.quotient_dims.end(), next.quotient_dims.begin());
    }
    return out;
}

std::vector<PhasePolynomial> reduced_point_basis(const std::vector<NormalForm>& basis, const IdealSlice& slice) {
    std::vector<PhasePolynomial> out;
    for (const auto& h : basis) out.push_back(reduce_mod_slice(h.expand(), slice));
    return out;
}

} // namespace staralg
