#pragma once

// Exact arithmetic in Q(l), the field of rational functions of the
// deformation parameter l.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace staralg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial in l with integer coefficients, lowest degree first.
/// No trailing zero coefficients are stored; the zero polynomial is empty.
class LambdaPoly {
public:
    LambdaPoly() = default;
    explicit LambdaPoly(std::vector<Integer> coeffs);

    static LambdaPoly constant(const Integer& c);
    static LambdaPoly monomial(const Integer& c, int degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
    int low_order() const noexcept;
    /// True for c*l^k (a single nonzero term).
    bool is_monomial() const noexcept;
    std::size_t term_count() const noexcept;

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    const Integer& leading() const { return coeffs_.back(); }
    Integer coeff(int k) const;
    /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
    Integer content() const;
    /// Sum of the bit lengths of the coefficients.
    std::size_t bit_size() const;

    LambdaPoly operator-() const;
    LambdaPoly& operator+=(const LambdaPoly& rhs);
    LambdaPoly& operator-=(const LambdaPoly& rhs);
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.coeffs_ == b.coeffs_; }

    LambdaPoly scaled(const Integer& c) const;
    /// Multiply by l^k.
    LambdaPoly shifted(int k) const;
    /// Drop the factor l^k; requires k <= low_order().
    LambdaPoly unshifted(int k) const;
    /// Divide every coefficient by c, which must divide all of them.
    LambdaPoly divexact(const Integer& c) const;
    /// p(-l).
    LambdaPoly negate_variable() const;
    Rational evaluate(const Rational& at) const;

    /// Integer-coefficient polynomial in `l`, highest degree first, e.g. `2*l^2 + 1`.
    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Quotient a/b in Z[l]; b must divide a exactly.
LambdaPoly exact_quotient(const LambdaPoly& a, const LambdaPoly& b);
/// Greatest common divisor in Z[l] (content included), positive leading coefficient.
LambdaPoly gcd(const LambdaPoly& a, const LambdaPoly& b);

/// Element of Q(l) in canonical form: numerator and denominator are coprime
/// in Z[l], the denominator has positive leading coefficient, and zero is 0/1.
/// Canonical forms are unique, so equality is coefficient-wise.
class RationalFunction {
public:
    RationalFunction() : den_(LambdaPoly::constant(1)) {}
    RationalFunction(long value); // NOLINT(google-explicit-constructor)
    explicit RationalFunction(const Integer& value);
    explicit RationalFunction(const Rational& value);
    RationalFunction(LambdaPoly numerator, LambdaPoly denominator);

    /// The deformation parameter l itself.
    static RationalFunction lambda();
    /// c * l^k for any integer k (negative k gives a pole at zero).
    static RationalFunction lambda_power(const Rational& c, int k);

    const LambdaPoly& numerator() const noexcept { return num_; }
    const LambdaPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    /// True when the value lies in Q (no l dependence).
    bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
    /// True when the denominator is c*l^k, i.e. the value is a Laurent polynomial.
    bool is_laurent() const noexcept { return den_.is_monomial(); }
    /// Sign of the numerator's leading coefficient.
    int sign() const;
    /// Sum of integer bit lengths in numerator and denominator.
    std::size_t size() const { return num_.bit_size() + den_.bit_size(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Multiply by c * l^k with c a nonzero integer and k >= 0.
    RationalFunction times_monomial(const Integer& c, int k) const;

    /// Throws DivisionByZero for zero.
    RationalFunction invert() const;
    /// Substitutes l -> -l; a ring automorphism and an involution.
    RationalFunction negate_lambda() const;
    /// Order of vanishing at l = 0, negative for a pole. Throws DivisionByZero for zero.
    int pole_order_at_zero() const;
    /// Throws PoleError when the denominator vanishes at `at`.
    Rational evaluate(const Rational& at) const;

    /// `num` or `num/den`, e.g. `(2*l^2 + 1)/(2*l)`; parses back to the same value.
    std::string to_string() const;

private:
    struct Canonical {};
    RationalFunction(LambdaPoly numerator, LambdaPoly denominator, Canonical)
        : num_(std::move(numerator)), den_(std::move(denominator)) {}
    void canonicalize();

    LambdaPoly num_;
    LambdaPoly den_;
};

RationalFunction add(const RationalFunction& a, const RationalFunction& b);
RationalFunction mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction neg(const RationalFunction& a);
RationalFunction invert(const RationalFunction& a);
RationalFunction negate_lambda(const RationalFunction& a);
int pole_order_at_zero(const RationalFunction& a);
Rational evaluate(const RationalFunction& a, const Rational& at);

std::string to_string(const Rational& q);

} // namespace staralg
