#pragma once

#include "staralg/phasepoly.hpp"

#include <map>
#include <vector>

namespace staralg {

/// Subspace of Q(l)[x, p] held as rows in echelon form with respect to the
/// graded lex monomial order: one row per leading monomial, each row with
/// leading coefficient 1. `rows()` returns the reduced echelon form, which
/// depends only on the subspace.
class EchelonBasis {
public:
    explicit EchelonBasis(int m = 1) : m_(m) {}

    /// Echelon basis of span(rows). Smaller rows are inserted first so they
    /// become pivots.
    static EchelonBasis from_rows(int m, std::vector<PhasePolynomial> rows);

    int m() const noexcept { return m_; }
    std::size_t rank() const noexcept { return pivots_.size(); }

    /// Adds `row` to the span; false when it was already contained.
    bool insert(const PhasePolynomial& row);
    /// Unique representative of f + span: no leading monomial of a row occurs.
    PhasePolynomial reduce(const PhasePolynomial& f) const;
    bool contains(const PhasePolynomial& f) const { return reduce(f).is_zero(); }
    bool is_pivot(const Monomial& mono) const { return pivots_.count(mono) != 0; }

    /// Reduced echelon rows, descending by leading monomial.
    std::vector<PhasePolynomial> rows() const;
    /// Rows of total degree <= d: the reduced echelon basis of span ∩ {deg <= d}.
    EchelonBasis restricted(int d) const;
    std::size_t rank_up_to_degree(int d) const;

    friend bool operator==(const EchelonBasis& a, const EchelonBasis& b);

private:
    void interreduce() const;

    int m_;
    mutable std::map<Monomial, PhasePolynomial, MonomialDescending> pivots_;
    mutable bool reduced_ = true;
};

/// A scalar measure of coefficient growth, used to order pivot candidates.
std::size_t coefficient_size(const PhasePolynomial& f);

} // namespace staralg
