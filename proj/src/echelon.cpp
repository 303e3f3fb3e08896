#include "staralg/echelon.hpp"

#include <algorithm>
#include <numeric>

namespace staralg {

std::size_t coefficient_size(const PhasePolynomial& f) {
    std::size_t total = 0;
    for (const auto& [mono, c] : f.terms()) total += c.size();
    return total;
}

EchelonBasis EchelonBasis::from_rows(int m, std::vector<PhasePolynomial> rows) {
    std::vector<std::pair<std::size_t, std::size_t>> order; // (size, index)
    order.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) order.emplace_back(coefficient_size(rows[i]), i);
    std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        const auto& ra = rows[a.second];
        const auto& rb = rows[b.second];
        if (ra.is_zero() || rb.is_zero()) return rb.is_zero() && !ra.is_zero();
        return graded_lex_less(ra.leading_monomial(), rb.leading_monomial());
    });
    EchelonBasis out(m);
    for (const auto& [size, index] : order) out.insert(rows[index]);
    return out;
}

bool EchelonBasis::insert(const PhasePolynomial& row) {
    PhasePolynomial r = row;
    while (!r.is_zero()) {
        auto it = pivots_.find(r.leading_monomial());
        if (it == pivots_.end()) break;
        r -= it->second * r.leading_coefficient();
    }
    if (r.is_zero()) return false;
    if (!r.leading_coefficient().is_one()) r *= r.leading_coefficient().invert();
    const Monomial lead = r.leading_monomial();
    pivots_.emplace(lead, std::move(r));
    reduced_ = false;
    return true;
}

PhasePolynomial EchelonBasis::reduce(const PhasePolynomial& f) const {
    PhasePolynomial work = f;
    PhasePolynomial out(f.m());
    while (!work.is_zero()) {
        const Monomial lead = work.leading_monomial();
        const RationalFunction c = work.leading_coefficient();
        auto it = pivots_.find(lead);
        if (it != pivots_.end()) {
            work -= it->second * c;
        } else {
            out.add_term(lead, c);
            work.add_term(lead, -c);
        }
    }
    return out;
}

void EchelonBasis::interreduce() const {
    if (reduced_) return;
    // Ascending lead order: each row only needs the (already final) rows below it.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        PhasePolynomial& row = it->second;
        const Monomial lead = it->first;
        PhasePolynomial tail = row;
        tail.add_term(lead, -RationalFunction(1));
        PhasePolynomial out = PhasePolynomial::term(row.m(), lead, 1);
        while (!tail.is_zero()) {
            const Monomial lm = tail.leading_monomial();
            const RationalFunction c = tail.leading_coefficient();
            auto piv = pivots_.find(lm);
            if (piv != pivots_.end()) {
                tail -= piv->second * c;
            } else {
                out.add_term(lm, c);
                tail.add_term(lm, -c);
            }
        }
        row = std::move(out);
    }
    reduced_ = true;
}

std::vector<PhasePolynomial> EchelonBasis::rows() const {
    interreduce();
    std::vector<PhasePolynomial> out;
    out.reserve(pivots_.size());
    for (const auto& [lead, row] : pivots_) out.push_back(row);
    return out;
}

EchelonBasis EchelonBasis::restricted(int d) const {
    interreduce();
    EchelonBasis out(m_);
    for (const auto& [lead, row] : pivots_)
        if (lead.degree() <= d) out.pivots_.emplace(lead, row);
    return out;
}

std::size_t EchelonBasis::rank_up_to_degree(int d) const {
    return static_cast<std::size_t>(std::count_if(pivots_.begin(), pivots_.end(),
                                                  [d](const auto& kv) { return kv.first.degree() <= d; }));
}

bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
    if (a.m_ != b.m_ || a.rank() != b.rank()) return false;
    a.interreduce();
    b.interreduce();
    return a.pivots_ == b.pivots_;
}

} // namespace staralg
