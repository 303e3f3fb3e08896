#pragma once

// Normal forms modulo the left star-ideal generated by base polynomials.

#include "staralg/echelon.hpp"
#include "staralg/phasepoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace staralg {

/// h_0 + h_1 * x + ... + h_{n-1} * x^{n-1} with every h_i = h_i(p) a
/// polynomial in p alone (m = 1). This is the unique representative of a
/// class modulo the left ideal generated by x^n.
class NormalForm {
public:
    NormalForm() = default;
    explicit NormalForm(std::vector<PhasePolynomial> components);
    static NormalForm zero(int n);
    /// The constant 1.
    static NormalForm one(int n);

    int n() const noexcept { return static_cast<int>(components_.size()); }
    const std::vector<PhasePolynomial>& components() const noexcept { return components_; }
    const PhasePolynomial& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
    bool is_zero() const;

    /// sum_i h_i * x^i as a phase-space polynomial.
    PhasePolynomial expand() const;
    /// sum_i x^i * h_i: the same components read as a right-ideal normal form.
    PhasePolynomial expand_mirror() const;
    /// Coordinate embedding sum_i h_i(p) x^i (classical product). A linear
    /// bijection onto polynomials of x-degree < n, used for span comparisons.
    PhasePolynomial flatten() const;
    static NormalForm unflatten(const PhasePolynomial& f, int n);

    NormalForm negate_lambda() const;

    NormalForm& operator+=(const NormalForm& rhs);
    NormalForm& operator-=(const NormalForm& rhs);
    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
    friend NormalForm operator*(const RationalFunction& c, NormalForm a);
    friend bool operator==(const NormalForm&, const NormalForm&) = default;

    /// `[h_0; h_1; ...]`.
    std::string to_string() const;

private:
    std::vector<PhasePolynomial> components_;
};

struct RightDivision {
    NormalForm normal_form;
    PhasePolynomial quotient{1};
};

/// f = sum_{i<n} h_i * x^i + q * x^n exactly, by peeling the highest x-degree.
/// Requires m = 1 and n >= 1.
RightDivision right_divide_1d(const PhasePolynomial& f, int n);
/// Mirror image for the right ideal: f = sum_{i<n} x^i * h_i + x^n * q.
RightDivision mirror_divide_1d(const PhasePolynomial& f, int n);
bool is_in_left_ideal_1d(const PhasePolynomial& f, int n);
bool is_in_right_ideal_1d(const PhasePolynomial& f, int n);

/// Degree-<= D part of the left ideal generated by `generators`, computed
/// from all g * pullback(phi) with deg g + deg phi <= D + slack.
struct IdealSlice {
    int m = 1;
    int degree_bound = 0;
    int slack = 0;
    std::vector<BasePolynomial> generators;
    EchelonBasis basis;
    /// Whether the slice is unchanged when the slack grows by one; empty when not checked.
    std::optional<bool> stabilized;
};

IdealSlice ideal_slice(const std::vector<BasePolynomial>& generators, int degree_bound, int slack = 2,
                       bool check_stability = true);
/// Unique representative of f modulo the slice. Throws DegreeExceedsSlice
/// when deg f > D.
PhasePolynomial reduce_mod_slice(const PhasePolynomial& f, const IdealSlice& slice);

} // namespace staralg
