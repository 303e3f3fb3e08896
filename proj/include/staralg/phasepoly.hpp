#pragma once

// The polynomial phase-space algebra Q(l)[x_1..x_m, p_1..p_m] with the Moyal
// star product.
//
// Star-product convention: f * g = sum over multi-indices a, b of
//   l^(|a|+|b|) (-1)^|b| / (a! b!) (d_x^a d_p^b f)(d_p^a d_x^b g),
// so x * p = x p + l and p * x = x p - l. The opposite sign convention is
// obtained by l -> -l (see `star_negated`).

#include "staralg/scalar.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace staralg {

/// Largest supported number of base dimensions.
inline constexpr int kMaxPairs = 4;

/// Degree reported for the zero polynomial (a sentinel standing for -infinity).
inline constexpr int kZeroDegree = -1000000;

/// Exponent vector x^a p^b. Position i < kMaxPairs holds the exponent of
/// x_{i+1}, position kMaxPairs + i that of p_{i+1}; unused slots stay zero.
struct Monomial {
    std::array<std::uint16_t, 2 * kMaxPairs> exps{};

    static Monomial one() { return {}; }
    static Monomial x_power(int index, int power);
    static Monomial p_power(int index, int power);

    int x(int index) const { return exps[static_cast<std::size_t>(index)]; }
    int p(int index) const { return exps[static_cast<std::size_t>(kMaxPairs + index)]; }
    int degree() const;
    int x_degree() const;
    int p_degree() const;

    Monomial operator*(const Monomial& rhs) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// `x*p^2`, `x1*x2^3*p1`; "1" for the unit.
    std::string to_string(int m) const;
};

/// Graded lexicographic order, x variables before p variables.
bool graded_lex_less(const Monomial& a, const Monomial& b);

/// Descending graded lex, so the leading term is visited first.
struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(b, a); }
};

struct Variable {
    enum class Kind { X, P };
    Kind kind;
    int index; // 0-based
};

/// Sparse element of Q(l)[x, p] in m base dimensions. No zero coefficients
/// are stored.
class PhasePolynomial {
public:
    using Terms = std::map<Monomial, RationalFunction, MonomialDescending>;

    explicit PhasePolynomial(int m = 1);
    static PhasePolynomial constant(int m, const RationalFunction& c);
    static PhasePolynomial term(int m, const Monomial& mono, const RationalFunction& c);
    static PhasePolynomial x(int m, int index = 0, int power = 1);
    static PhasePolynomial p(int m, int index = 0, int power = 1);

    int m() const noexcept { return m_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Total degree; kZeroDegree for the zero polynomial.
    int degree() const;
    int x_degree() const;
    int p_degree() const;
    /// Largest monomial in graded lex order; requires a nonzero polynomial.
    const Monomial& leading_monomial() const;
    const RationalFunction& leading_coefficient() const;
    RationalFunction coefficient(const Monomial& mono) const;
    /// Terms of total degree exactly d.
    PhasePolynomial homogeneous_part(int d) const;
    /// Terms of total degree at most d.
    PhasePolynomial truncated(int d) const;

    void add_term(const Monomial& mono, const RationalFunction& c);

    PhasePolynomial operator-() const;
    PhasePolynomial& operator+=(const PhasePolynomial& rhs);
    PhasePolynomial& operator-=(const PhasePolynomial& rhs);
    PhasePolynomial& operator*=(const RationalFunction& c);
    friend PhasePolynomial operator+(PhasePolynomial a, const PhasePolynomial& b) { return a += b; }
    friend PhasePolynomial operator-(PhasePolynomial a, const PhasePolynomial& b) { return a -= b; }
    friend PhasePolynomial operator*(PhasePolynomial a, const RationalFunction& c) { return a *= c; }
    friend PhasePolynomial operator*(const RationalFunction& c, PhasePolynomial a) { return a *= c; }
    friend bool operator==(const PhasePolynomial& a, const PhasePolynomial& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    PhasePolynomial map_coefficients(const std::function<RationalFunction(const RationalFunction&)>& fn) const;
    /// Every coefficient with l -> -l.
    PhasePolynomial negate_lambda() const;

    /// Deterministic text in graded lex order, e.g. `x*p + l`.
    std::string to_string() const;

private:
    int m_;
    Terms terms_;
};

/// Polynomial on the base R^m: p-degree zero by construction.
class BasePolynomial {
public:
    explicit BasePolynomial(int m = 1) : poly_(m) {}
    /// Throws std::invalid_argument when `poly` contains a p variable.
    explicit BasePolynomial(PhasePolynomial poly);

    int m() const noexcept { return poly_.m(); }
    int degree() const { return poly_.degree(); }
    const PhasePolynomial& as_phase() const noexcept { return poly_; }
    std::string to_string() const { return poly_.to_string(); }

    friend BasePolynomial operator*(const BasePolynomial& a, const BasePolynomial& b);
    friend bool operator==(const BasePolynomial& a, const BasePolynomial& b) { return a.poly_ == b.poly_; }

private:
    PhasePolynomial poly_;
};

/// Commutative product (the l^0 part of the star product).
PhasePolynomial classical_mul(const PhasePolynomial& f, const PhasePolynomial& g);
PhasePolynomial partial_derivative(const PhasePolynomial& f, Variable v);
/// Repeated derivative d^k f / d v^k.
PhasePolynomial partial_derivative(const PhasePolynomial& f, Variable v, int order);
PhasePolynomial moyal_star(const PhasePolynomial& f, const PhasePolynomial& g);
/// Star product with l replaced by -l.
PhasePolynomial star_negated(const PhasePolynomial& f, const PhasePolynomial& g);
/// {f, g} = sum_a (df/dx_a dg/dp_a - df/dp_a dg/dx_a).
PhasePolynomial poisson_bracket(const PhasePolynomial& f, const PhasePolynomial& g);
PhasePolynomial pullback(const BasePolynomial& q);
/// f * f * ... * f (k factors), with f^0 = 1.
PhasePolynomial star_power(const PhasePolynomial& f, int k);

} // namespace staralg

namespace staralg {

/// All monomials in x_1..x_m, p_1..p_m (or only the x's) of total degree <= d,
/// ascending in graded lex order.
std::vector<Monomial> monomials_up_to(int m, int d, bool x_only = false);

} // namespace staralg
