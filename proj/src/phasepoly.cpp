#include "staralg/phasepoly.hpp"

#include "staralg/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace staralg {

namespace {

void check_index(int index) {
    if (index < 0 || index >= kMaxPairs) throw std::out_of_range("variable index out of range");
}

void check_same_m(const PhasePolynomial& f, const PhasePolynomial& g, const char* what) {
    if (f.m() != g.m())
        throw DimensionMismatch(std::string(what) + ": operands have m = " + std::to_string(f.m()) + " and " +
                                std::to_string(g.m()));
}

Integer factorial(int k) {
    static const std::vector<Integer> table = [] {
        std::vector<Integer> t{Integer(1)};
        for (long i = 1; i < 64; ++i) t.push_back(t.back() * i);
        return t;
    }();
    if (k < static_cast<int>(table.size())) return table[static_cast<std::size_t>(k)];
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

Integer binomial(int n, int k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

/// Falling factorial n (n-1) ... (n-k+1).
Integer falling(int n, int k) { return binomial(n, k) * factorial(k); }

std::string variable_name(char base, int index, int m) {
    std::string out(1, base);
    if (m > 1) out += std::to_string(index + 1);
    return out;
}

} // namespace

// Monomial ---------------------------------------------------------------------

Monomial Monomial::x_power(int index, int power) {
    check_index(index);
    Monomial out;
    out.exps[static_cast<std::size_t>(index)] = static_cast<std::uint16_t>(power);
    return out;
}

Monomial Monomial::p_power(int index, int power) {
    check_index(index);
    Monomial out;
    out.exps[static_cast<std::size_t>(kMaxPairs + index)] = static_cast<std::uint16_t>(power);
    return out;
}

int Monomial::degree() const { return x_degree() + p_degree(); }

int Monomial::x_degree() const {
    int d = 0;
    for (int i = 0; i < kMaxPairs; ++i) d += x(i);
    return d;
}

int Monomial::p_degree() const {
    int d = 0;
    for (int i = 0; i < kMaxPairs; ++i) d += p(i);
    return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] = static_cast<std::uint16_t>(exps[i] + rhs.exps[i]);
    return out;
}

std::string Monomial::to_string(int m) const {
    std::string out;
    auto emit = [&](char base, int index, int power) {
        if (power == 0) return;
        if (!out.empty()) out += '*';
        out += variable_name(base, index, m);
        if (power > 1) out += "^" + std::to_string(power);
    };
    for (int i = 0; i < m; ++i) emit('x', i, x(i));
    for (int i = 0; i < m; ++i) emit('p', i, p(i));
    return out.empty() ? "1" : out;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
}

// PhasePolynomial ----------------------------------------------------------------

PhasePolynomial::PhasePolynomial(int m) : m_(m) {
    if (m < 1 || m > kMaxPairs) throw std::invalid_argument("PhasePolynomial: m must be in [1, " +
                                                            std::to_string(kMaxPairs) + "]");
}

PhasePolynomial PhasePolynomial::constant(int m, const RationalFunction& c) { return term(m, Monomial::one(), c); }

PhasePolynomial PhasePolynomial::term(int m, const Monomial& mono, const RationalFunction& c) {
    PhasePolynomial out(m);
    out.add_term(mono, c);
    return out;
}

PhasePolynomial PhasePolynomial::x(int m, int index, int power) {
    if (index >= m) throw std::out_of_range("x index exceeds m");
    return term(m, Monomial::x_power(index, power), 1);
}

PhasePolynomial PhasePolynomial::p(int m, int index, int power) {
    if (index >= m) throw std::out_of_range("p index exceeds m");
    return term(m, Monomial::p_power(index, power), 1);
}

int PhasePolynomial::degree() const { return is_zero() ? kZeroDegree : terms_.begin()->first.degree(); }

int PhasePolynomial::x_degree() const {
    int d = kZeroDegree;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.x_degree());
    return d;
}

int PhasePolynomial::p_degree() const {
    int d = kZeroDegree;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.p_degree());
    return d;
}

const Monomial& PhasePolynomial::leading_monomial() const {
    if (is_zero()) throw std::logic_error("leading_monomial of the zero polynomial");
    return terms_.begin()->first;
}

const RationalFunction& PhasePolynomial::leading_coefficient() const {
    if (is_zero()) throw std::logic_error("leading_coefficient of the zero polynomial");
    return terms_.begin()->second;
}

RationalFunction PhasePolynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? RationalFunction() : it->second;
}

PhasePolynomial PhasePolynomial::homogeneous_part(int d) const {
    PhasePolynomial out(m_);
    for (const auto& [mono, c] : terms_)
        if (mono.degree() == d) out.terms_.emplace_hint(out.terms_.end(), mono, c);
    return out;
}

PhasePolynomial PhasePolynomial::truncated(int d) const {
    PhasePolynomial out(m_);
    for (const auto& [mono, c] : terms_)
        if (mono.degree() <= d) out.terms_.emplace_hint(out.terms_.end(), mono, c);
    return out;
}

void PhasePolynomial::add_term(const Monomial& mono, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PhasePolynomial PhasePolynomial::operator-() const {
    PhasePolynomial out = *this;
    for (auto& [mono, c] : out.terms_) c = -c;
    return out;
}

PhasePolynomial& PhasePolynomial::operator+=(const PhasePolynomial& rhs) {
    check_same_m(*this, rhs, "add");
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

PhasePolynomial& PhasePolynomial::operator-=(const PhasePolynomial& rhs) {
    check_same_m(*this, rhs, "subtract");
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
    return *this;
}

PhasePolynomial& PhasePolynomial::operator*=(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& [mono, coef] : terms_) coef *= c;
    return *this;
}

PhasePolynomial PhasePolynomial::map_coefficients(
    const std::function<RationalFunction(const RationalFunction&)>& fn) const {
    PhasePolynomial out(m_);
    for (const auto& [mono, c] : terms_) {
        RationalFunction v = fn(c);
        if (!v.is_zero()) out.terms_.emplace_hint(out.terms_.end(), mono, std::move(v));
    }
    return out;
}

PhasePolynomial PhasePolynomial::negate_lambda() const {
    return map_coefficients([](const RationalFunction& c) { return c.negate_lambda(); });
}

std::string PhasePolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        const bool negative = c.sign() < 0;
        const RationalFunction mag = negative ? -c : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string coef = mag.to_string();
        if (mag.denominator().is_one() && mag.numerator().term_count() > 1) coef = "(" + coef + ")";
        if (mono == Monomial::one())
            out += coef;
        else if (mag.is_one())
            out += mono.to_string(m_);
        else
            out += coef + "*" + mono.to_string(m_);
    }
    return out;
}

// BasePolynomial -----------------------------------------------------------------

BasePolynomial::BasePolynomial(PhasePolynomial poly) : poly_(std::move(poly)) {
    if (!poly_.is_zero() && poly_.p_degree() > 0)
        throw std::invalid_argument("base polynomial must not depend on p: " + poly_.to_string());
}

BasePolynomial operator*(const BasePolynomial& a, const BasePolynomial& b) {
    return BasePolynomial(classical_mul(a.poly_, b.poly_));
}

// Products -------------------------------------------------------------------------

PhasePolynomial classical_mul(const PhasePolynomial& f, const PhasePolynomial& g) {
    check_same_m(f, g, "classical_mul");
    PhasePolynomial out(f.m());
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) out.add_term(mf * mg, cf * cg);
    return out;
}

PhasePolynomial partial_derivative(const PhasePolynomial& f, Variable v) { return partial_derivative(f, v, 1); }

PhasePolynomial partial_derivative(const PhasePolynomial& f, Variable v, int order) {
    if (v.index < 0 || v.index >= f.m()) throw std::invalid_argument("partial_derivative: unknown variable");
    if (order < 0) throw std::invalid_argument("partial_derivative: negative order");
    const std::size_t slot = static_cast<std::size_t>(v.kind == Variable::Kind::X ? v.index : kMaxPairs + v.index);
    PhasePolynomial out(f.m());
    for (const auto& [mono, c] : f.terms()) {
        const int e = mono.exps[slot];
        if (e < order) continue;
        Monomial d = mono;
        d.exps[slot] = static_cast<std::uint16_t>(e - order);
        out.add_term(d, c.times_monomial(falling(e, order), 0));
    }
    return out;
}

namespace {

/// Per-dimension kernel of the star product of x^a p^b with x^c p^d: for each
/// total order t, the integer sum over alpha + beta = t of
/// (-1)^beta C(a,alpha) C(d,alpha) alpha! C(b,beta) C(c,beta) beta!.
std::vector<Integer> pair_kernel(int a, int b, int c, int d) {
    const int amax = std::min(a, d);
    const int bmax = std::min(b, c);
    std::vector<Integer> out(static_cast<std::size_t>(amax + bmax + 1));
    for (int alpha = 0; alpha <= amax; ++alpha) {
        const Integer wa = binomial(a, alpha) * falling(d, alpha);
        for (int beta = 0; beta <= bmax; ++beta) {
            Integer w = wa * binomial(c, beta) * falling(b, beta);
            if (beta % 2 == 1) w = -w;
            out[static_cast<std::size_t>(alpha + beta)] += w;
        }
    }
    return out;
}

} // namespace

PhasePolynomial moyal_star(const PhasePolynomial& f, const PhasePolynomial& g) {
    check_same_m(f, g, "moyal_star");
    const int m = f.m();
    PhasePolynomial out(m);
    std::vector<std::vector<Integer>> kernels(static_cast<std::size_t>(m));
    std::vector<int> t(static_cast<std::size_t>(m));
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            const RationalFunction coef = cf * cg;
            for (int i = 0; i < m; ++i)
                kernels[static_cast<std::size_t>(i)] = pair_kernel(mf.x(i), mf.p(i), mg.x(i), mg.p(i));
            // Odometer over the per-dimension orders t_i.
            std::fill(t.begin(), t.end(), 0);
            while (true) {
                Integer weight = 1;
                int order = 0;
                Monomial mono = mf * mg;
                for (int i = 0; i < m; ++i) {
                    const auto ti = static_cast<std::size_t>(t[static_cast<std::size_t>(i)]);
                    weight *= kernels[static_cast<std::size_t>(i)][ti];
                    order += static_cast<int>(ti);
                    mono.exps[static_cast<std::size_t>(i)] -= static_cast<std::uint16_t>(ti);
                    mono.exps[static_cast<std::size_t>(kMaxPairs + i)] -= static_cast<std::uint16_t>(ti);
                }
                if (weight != 0) out.add_term(mono, coef.times_monomial(weight, order));
                int i = 0;
                for (; i < m; ++i) {
                    auto& ti = t[static_cast<std::size_t>(i)];
                    if (++ti < static_cast<int>(kernels[static_cast<std::size_t>(i)].size())) break;
                    ti = 0;
                }
                if (i == m) break;
            }
        }
    }
    return out;
}

PhasePolynomial star_negated(const PhasePolynomial& f, const PhasePolynomial& g) {
    return moyal_star(f.negate_lambda(), g.negate_lambda()).negate_lambda();
}

PhasePolynomial poisson_bracket(const PhasePolynomial& f, const PhasePolynomial& g) {
    check_same_m(f, g, "poisson_bracket");
    PhasePolynomial out(f.m());
    for (int a = 0; a < f.m(); ++a) {
        const Variable xa{Variable::Kind::X, a};
        const Variable pa{Variable::Kind::P, a};
        out += classical_mul(partial_derivative(f, xa), partial_derivative(g, pa));
        out -= classical_mul(partial_derivative(f, pa), partial_derivative(g, xa));
    }
    return out;
}

PhasePolynomial pullback(const BasePolynomial& q) { return q.as_phase(); }

PhasePolynomial star_power(const PhasePolynomial& f, int k) {
    PhasePolynomial out = PhasePolynomial::constant(f.m(), 1);
    for (int i = 0; i < k; ++i) out = moyal_star(out, f);
    return out;
}

} // namespace staralg

namespace staralg {

std::vector<Monomial> monomials_up_to(int m, int d, bool x_only) {
    std::vector<Monomial> out;
    const int nvars = x_only ? m : 2 * m;
    auto slot = [m](int v) { return static_cast<std::size_t>(v < m ? v : kMaxPairs + (v - m)); };
    Monomial cur;
    // Depth-first enumeration of exponent vectors with bounded sum.
    auto recurse = [&](auto&& self, int var, int budget) -> void {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur.exps[slot(var)] = static_cast<std::uint16_t>(e);
            self(self, var + 1, budget - e);
        }
        cur.exps[slot(var)] = 0;
    };
    if (d >= 0) recurse(recurse, 0, d);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

} // namespace staralg
