#pragma once

// The module V = span(p^k * x^{n-1}) of the n-tuple-point quotient, its
// action matrices, and the identification of the quotient with n x n
// matrices.

#include "staralg/check_result.hpp"
#include "staralg/quantize.hpp"

#include <string>
#include <vector>

namespace staralg {

/// Entries A_ab with h * e_a = sum_b A_ab e_b modulo the left ideal.
struct ActionMatrix {
    Matrix<RationalFunction> entries;

    int n() const noexcept { return static_cast<int>(entries.rows()); }
    friend bool operator==(const ActionMatrix&, const ActionMatrix&) = default;
};

/// How action matrices compose. With rows, (h * g) acts as A^g A^h; the
/// transposed matrices compose in the order of the product.
enum class Composition { Rows, Transposed };

std::string to_string(Composition c);

/// e_k = p^k * x^{n-1}, k = 0..n-1.
std::vector<PhasePolynomial> module_basis(int n);
/// From g_k(p) = sum_{i<=k} (2l)^i h_i d^i p^k / dp^i. Throws DegreeOverflow
/// when some g_k has degree >= n.
ActionMatrix action_matrix(const NormalForm& h);
/// Same matrix by multiplying h * e_a and right-dividing.
ActionMatrix action_matrix_direct(const NormalForm& h);

/// Convention under which psi is multiplicative, determined on the n = 2 basis.
Composition detect_composition();
/// psi(h) in the given convention.
Matrix<RationalFunction> psi(const NormalForm& h, Composition convention);

struct IsomorphismReport {
    int n = 1;
    Composition composition = Composition::Transposed;
    std::size_t pair_checks = 0;
    std::size_t pair_failures = 0;
    std::size_t rank = 0;
    bool unit_is_identity = false;
    bool degree_claim = false;
    bool direct_agrees = false;
    int max_pole_order = 0;
    std::vector<CheckResult> checks;

    bool pass() const { return all_pass(checks); }
};

IsomorphismReport verify_isomorphism(int n);

/// Entrywise value at l0. l0 = 0 is rejected: the identification degenerates there.
Matrix<Rational> evaluate_matrix(const Matrix<RationalFunction>& a, const Rational& lambda0);
Matrix<Rational> evaluate_matrix(const ActionMatrix& a, const Rational& lambda0);

/// At l0, transforms the structure constants to the basis psi^{-1}(E_ij) and
/// compares with the matrix-unit constants E_ij E_kl = delta_jk E_il.
CheckResult recognize_matrix_algebra(const QuotientAlgebra& algebra, const Rational& lambda0);

/// For n = 2, h = a + b p + (c + d p - b p^2 / (2l)) * x:
/// [[a + 2l d, b], [2l c, a]].
Matrix<RationalFunction> n2_matrix(const NormalForm& h);
/// The variant with (2,2) entry 2l a.
Matrix<RationalFunction> n2_printed_matrix(const NormalForm& h);
/// Product of two n = 2 normalizer elements by the explicit coefficient
/// formulas, with the second bracket read as the x-coefficient.
NormalForm n2_product(const NormalForm& h, const NormalForm& other);

struct N2FormulaReport {
    std::vector<CheckResult> checks;
    /// Printed and corrected maps of the symbolic element, entries as strings.
    std::vector<std::vector<std::string>> printed_map;
    std::vector<std::vector<std::string>> corrected_map;
    std::string printed_counterexample;
    std::string equals_sign_counterexample;

    bool pass() const { return all_pass(checks); }
};

N2FormulaReport n2_formula_report();

} // namespace staralg
