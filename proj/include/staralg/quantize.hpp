#pragma once

// The quotient algebra of observables: normalizer of the left ideal modulo
// the ideal, for the n-tuple point x^n = 0 (exact) and for general base
// ideals in a degree-truncated form.

#include "staralg/check_result.hpp"
#include "staralg/linalg.hpp"
#include "staralg/reduction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace staralg {

/// Integration constants a_{i,k}, 0 <= i,k < n, of the closed-form normalizer.
using ConstantsMatrix = Matrix<RationalFunction>;

struct StructureConstant {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    RationalFunction value;
};

/// Quotient algebra of the n-tuple point: basis b_0..b_{n^2-1} and, once
/// filled, the sparse tensor with b_i * b_j = sum_k c_ij^k b_k.
struct QuotientAlgebra {
    int n = 1;
    std::vector<NormalForm> basis;
    std::vector<StructureConstant> structure_constants;
    /// Kernel computed with the degree ansatz raised by two found nothing new.
    bool degree_bound_confirmed = false;
    /// Every basis product was found in the span of the basis.
    bool closed = false;

    std::size_t dimension() const noexcept { return basis.size(); }
};

/// Solutions h = sum h_i * x^i of x^n * h in the left ideal, with the ansatz
/// deg h_i <= n + i - 1 + extra_degree. Reduced echelon, ascending.
std::vector<NormalForm> normalizer_kernel(int n, int extra_degree = 0);
/// Basis of the quotient from the kernel method, cross-checked against the
/// enlarged ansatz.
QuotientAlgebra normalizer_basis(int n);

/// The closed-form normalizer element for the given integration constants.
NormalForm closed_form_h(const ConstantsMatrix& constants);
/// closed_form_h of the unit matrices, ordered by (i, k) lexicographically.
std::vector<NormalForm> canonical_basis(int n);
/// Integration constants of h: a_{i,k} is the p^k coefficient of h_i, k < n.
ConstantsMatrix integration_constants(const NormalForm& h);

/// x^n * h lies in the left ideal.
bool in_normalizer_1d(const NormalForm& h);
/// Star product of two normalizer elements, reduced to normal form. Throws
/// NotInNormalizer otherwise.
NormalForm star_in_quotient(const NormalForm& h, const NormalForm& other);
/// As star_in_quotient without the membership checks.
NormalForm star_in_quotient_unchecked(const NormalForm& h, const NormalForm& other);

/// Canonical basis with the structure-constant tensor filled in.
QuotientAlgebra structure_constants(int n);
/// Dense lookup c[(i * dim + j) * dim + k].
std::vector<RationalFunction> dense_structure_constants(const QuotientAlgebra& algebra);
/// Largest pole order at l = 0 among the structure constants (0 if none).
int max_pole_order(const QuotientAlgebra& algebra);
bool all_laurent(const QuotientAlgebra& algebra);

/// g * x^i + sum_{k=1}^{i} C(i,k) (2l)^k (d^k g / dp^k) * x^{i-k}: the
/// commuted form of x^i * g.
PhasePolynomial commute_x_power(const PhasePolynomial& g, int i);

/// Right-sided construction (normalizer of x^n * O modulo it) against the
/// left-sided one under l -> -l.
struct DualityReport {
    int n = 1;
    std::size_t checked = 0;
    std::vector<std::string> mismatches;
    bool pass() const { return mismatches.empty(); }
};
/// Mirror-form kernel: f = sum x^i * h_i with f * x^n in the right ideal.
std::vector<NormalForm> right_normalizer_kernel(int n, int extra_degree = 0);
DualityReport check_lambda_duality(int n);

/// Degree-truncated quotient {f : deg f <= D, phi * f in the ideal for all
/// generators phi} modulo the ideal.
struct TruncatedQuotient {
    int m = 1;
    int degree_bound = 0;
    int slack = 0;
    std::vector<BasePolynomial> generators;
    /// Representatives reduced modulo the ideal slice, in reduced echelon
    /// form, ascending by leading monomial.
    std::vector<PhasePolynomial> basis;
    /// Entry d: dimension of the degree-<= d filtered piece, d = 0..D.
    std::vector<std::size_t> normalizer_dims;
    std::vector<std::size_t> ideal_dims;
    std::vector<std::size_t> quotient_dims;
    bool slice_stabilized = false;
    /// Quotient table unchanged on degrees <= D when recomputed at D + 1.
    std::optional<bool> degree_stable;
    std::size_t closure_pairs = 0;
    std::size_t closure_failures = 0;
    /// Structure constants for basis pairs whose degrees sum to at most D.
    std::vector<StructureConstant> structure_constants;

    std::size_t dimension() const noexcept { return basis.size(); }
    bool closed() const noexcept { return closure_failures == 0; }
};

TruncatedQuotient quotient_truncated(const std::vector<BasePolynomial>& generators, int degree_bound, int slack = 2,
                                     bool check_next_degree = false);
/// Representatives of the n-tuple-point basis reduced modulo the truncated
/// ideal, for comparing the two methods.
std::vector<PhasePolynomial> reduced_point_basis(const std::vector<NormalForm>& basis, const IdealSlice& slice);

} // namespace staralg
