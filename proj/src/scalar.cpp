#include "staralg/scalar.hpp"

#include "staralg/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace staralg {

// LambdaPoly -----------------------------------------------------------------

LambdaPoly::LambdaPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LambdaPoly LambdaPoly::constant(const Integer& c) { return LambdaPoly({c}); }

LambdaPoly LambdaPoly::monomial(const Integer& c, int degree) {
    if (degree < 0) throw std::invalid_argument("LambdaPoly::monomial: negative degree");
    if (c == 0) return {};
    std::vector<Integer> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    LambdaPoly out;
    out.coeffs_ = std::move(coeffs);
    return out;
}

void LambdaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int LambdaPoly::low_order() const noexcept {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<int>(k);
    return 0;
}

bool LambdaPoly::is_monomial() const noexcept { return term_count() == 1; }

std::size_t LambdaPoly::term_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

Integer LambdaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Integer LambdaPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::size_t LambdaPoly::bit_size() const {
    std::size_t total = 0;
    for (const auto& c : coeffs_)
        if (c != 0) total += mpz_sizeinbase(c.get_mpz_t(), 2);
    return total;
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::scaled(const Integer& c) const {
    if (c == 0) return {};
    LambdaPoly out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

LambdaPoly LambdaPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    LambdaPoly out;
    out.coeffs_.assign(static_cast<std::size_t>(k), Integer(0));
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

LambdaPoly LambdaPoly::unshifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k > low_order()) throw std::logic_error("LambdaPoly::unshifted: not divisible by l^k");
    LambdaPoly out;
    out.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return out;
}

LambdaPoly LambdaPoly::divexact(const Integer& c) const {
    if (c == 1) return *this;
    LambdaPoly out = *this;
    for (auto& x : out.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return out;
}

LambdaPoly LambdaPoly::negate_variable() const {
    LambdaPoly out = *this;
    for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
    return out;
}

Rational LambdaPoly::evaluate(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Rational(*it);
    return acc;
}

std::string LambdaPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Integer mag = abs(c);
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += 'l';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

LambdaPoly primitive_part(const LambdaPoly& a) {
    if (a.is_zero()) return a;
    Integer c = a.content();
    if (a.leading() < 0) c = -c;
    return a.divexact(c);
}

} // namespace

LambdaPoly exact_quotient(const LambdaPoly& a, const LambdaPoly& b) {
    if (b.is_zero()) throw DivisionByZero("exact_quotient: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (b.is_monomial()) {
        const int k = b.degree();
        return a.unshifted(k).divexact(b.leading());
    }
    std::vector<Integer> rem = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) throw std::logic_error("exact_quotient: divisor does not divide");
    std::vector<Integer> quot(static_cast<std::size_t>(da - db) + 1);
    const Integer& lb = b.leading();
    for (int k = da; k >= db; --k) {
        Integer& top = rem[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw std::logic_error("exact_quotient: divisor does not divide");
        Integer q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        const int shift = k - db;
        for (int j = 0; j <= db; ++j)
            mpz_submul(rem[static_cast<std::size_t>(shift + j)].get_mpz_t(), q.get_mpz_t(),
                       b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
        quot[static_cast<std::size_t>(shift)] = std::move(q);
    }
    for (int k = 0; k < db; ++k)
        if (rem[static_cast<std::size_t>(k)] != 0) throw std::logic_error("exact_quotient: divisor does not divide");
    return LambdaPoly(std::move(quot));
}

LambdaPoly gcd(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.is_zero()) return primitive_part(b).scaled(b.is_zero() ? Integer(0) : b.content());
    if (b.is_zero()) return primitive_part(a).scaled(a.content());
    const int shift = std::min(a.low_order(), b.low_order());
    LambdaPoly pa = a.unshifted(a.low_order());
    LambdaPoly pb = b.unshifted(b.low_order());
    Integer c;
    const Integer ca = pa.content();
    const Integer cb = pb.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (pa.degree() == 0 || pb.degree() == 0) return LambdaPoly::monomial(c, shift);

    pa = primitive_part(pa);
    pb = primitive_part(pb);
    if (pa.degree() < pb.degree()) std::swap(pa, pb);
    while (!pb.is_zero()) {
        // Pseudo-remainder of pa by pb, made primitive after every step.
        LambdaPoly r = pa;
        const int db = pb.degree();
        while (!r.is_zero() && r.degree() >= db) {
            const Integer lr = r.leading();
            r = r.scaled(pb.leading()) - pb.scaled(lr).shifted(r.degree() - db);
            r = primitive_part(r);
        }
        pa = std::move(pb);
        pb = std::move(r);
        if (pb.degree() == 0) return LambdaPoly::monomial(c, shift);
    }
    return primitive_part(pa).scaled(c).shifted(shift);
}

// RationalFunction -------------------------------------------------------------

RationalFunction::RationalFunction(long value) : num_(LambdaPoly::constant(value)), den_(LambdaPoly::constant(1)) {}

RationalFunction::RationalFunction(const Integer& value)
    : num_(LambdaPoly::constant(value)), den_(LambdaPoly::constant(1)) {}

RationalFunction::RationalFunction(const Rational& value)
    : num_(LambdaPoly::constant(value.get_num())), den_(LambdaPoly::constant(value.get_den())) {}

RationalFunction::RationalFunction(LambdaPoly numerator, LambdaPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

RationalFunction RationalFunction::lambda() {
    return {LambdaPoly::monomial(1, 1), LambdaPoly::constant(1), Canonical{}};
}

RationalFunction RationalFunction::lambda_power(const Rational& c, int k) {
    if (c == 0) return {};
    if (k >= 0)
        return {LambdaPoly::monomial(c.get_num(), k), LambdaPoly::constant(c.get_den()), Canonical{}};
    return {LambdaPoly::constant(c.get_num()), LambdaPoly::monomial(c.get_den(), -k), Canonical{}};
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = LambdaPoly::constant(1);
        return;
    }
    const LambdaPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

int RationalFunction::sign() const {
    if (is_zero()) return 0;
    return num_.leading() > 0 ? 1 : -1;
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Canonical{}}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
        canonicalize();
        return *this;
    }
    const LambdaPoly g = gcd(den_, rhs.den_);
    if (g.is_one()) {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
        if (num_.is_zero()) den_ = LambdaPoly::constant(1);
        return *this;
    }
    const LambdaPoly da = exact_quotient(den_, g);
    const LambdaPoly db = exact_quotient(rhs.den_, g);
    num_ = num_ * db + rhs.num_ * da;
    den_ = den_ * db;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return *this = RationalFunction();
    const LambdaPoly g1 = gcd(num_, rhs.den_);
    const LambdaPoly g2 = gcd(rhs.num_, den_);
    LambdaPoly a = g1.is_one() ? num_ : exact_quotient(num_, g1);
    LambdaPoly b = g2.is_one() ? rhs.num_ : exact_quotient(rhs.num_, g2);
    LambdaPoly c = g2.is_one() ? den_ : exact_quotient(den_, g2);
    LambdaPoly d = g1.is_one() ? rhs.den_ : exact_quotient(rhs.den_, g1);
    num_ = a * b;
    den_ = c * d;
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= rhs.invert(); }

RationalFunction RationalFunction::times_monomial(const Integer& c, int k) const {
    if (c == 0 || is_zero()) return {};
    const LambdaPoly g = gcd(LambdaPoly::monomial(c, k), den_);
    const LambdaPoly factor = exact_quotient(LambdaPoly::monomial(c, k), g);
    return {num_ * factor, g.is_one() ? den_ : exact_quotient(den_, g), Canonical{}};
}

RationalFunction RationalFunction::invert() const {
    if (is_zero()) throw DivisionByZero("invert: zero has no inverse");
    if (num_.leading() < 0) return {-den_, -num_, Canonical{}};
    return {den_, num_, Canonical{}};
}

RationalFunction RationalFunction::negate_lambda() const {
    LambdaPoly n = num_.negate_variable();
    LambdaPoly d = den_.negate_variable();
    if (d.leading() < 0) {
        n = -n;
        d = -d;
    }
    return {std::move(n), std::move(d), Canonical{}};
}

int RationalFunction::pole_order_at_zero() const {
    if (is_zero()) throw DivisionByZero("pole_order_at_zero: undefined for zero");
    return num_.low_order() - den_.low_order();
}

Rational RationalFunction::evaluate(const Rational& at) const {
    const Rational d = den_.evaluate(at);
    if (d == 0) throw PoleError("evaluate: l = " + at.get_str() + " is a pole");
    Rational out = num_.evaluate(at) / d;
    out.canonicalize();
    return out;
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (!(den_.degree() == 0 || (den_.is_monomial() && den_.leading() == 1))) d = "(" + d + ")";
    return n + "/" + d;
}

RationalFunction add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
RationalFunction mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }
RationalFunction neg(const RationalFunction& a) { return -a; }
RationalFunction invert(const RationalFunction& a) { return a.invert(); }
RationalFunction negate_lambda(const RationalFunction& a) { return a.negate_lambda(); }
int pole_order_at_zero(const RationalFunction& a) { return a.pole_order_at_zero(); }
Rational evaluate(const RationalFunction& a, const Rational& at) { return a.evaluate(at); }

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace staralg
