#include "staralg/parse.hpp"

#include "staralg/errors.hpp"

#include <cctype>
#include <string>

namespace staralg {

namespace {

class Parser {
public:
    Parser(std::string_view text, int m) : text_(text), m_(m) {}

    PhasePolynomial parse() {
        skip();
        if (at_end()) throw ParseError("empty expression", pos_);
        PhasePolynomial out = expr();
        skip();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    PhasePolynomial expr() {
        skip();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        PhasePolynomial out = term();
        if (negate) out = -out;
        while (true) {
            skip();
            const char op = peek();
            if (op != '+' && op != '-') break;
            ++pos_;
            PhasePolynomial rhs = term();
            if (op == '+')
                out += rhs;
            else
                out -= rhs;
        }
        return out;
    }

    PhasePolynomial term() {
        PhasePolynomial out = factor();
        while (true) {
            skip();
            const char op = peek();
            if (op != '*' && op != '/') break;
            ++pos_;
            skip();
            const std::size_t divisor_pos = pos_;
            PhasePolynomial rhs = factor();
            if (op == '*') {
                out = classical_mul(out, rhs);
                continue;
            }
            if (rhs.is_zero()) throw ParseError("division by zero", divisor_pos);
            if (rhs.degree() != 0) throw ParseError("division by a non-scalar", divisor_pos);
            out *= rhs.leading_coefficient().invert();
        }
        return out;
    }

    PhasePolynomial factor() {
        PhasePolynomial base = atom();
        skip();
        if (peek() != '^') return base;
        ++pos_;
        skip();
        if (peek() == '-') throw ParseError("negative exponent", pos_);
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
        const std::size_t start = pos_;
        unsigned long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + static_cast<unsigned long>(peek() - '0');
            if (e > 1000) throw ParseError("exponent too large", start);
            ++pos_;
        }
        PhasePolynomial out = PhasePolynomial::constant(m_, 1);
        for (unsigned long i = 0; i < e; ++i) out = classical_mul(out, base);
        return out;
    }

    PhasePolynomial atom() {
        skip();
        const std::size_t start = pos_;
        if (at_end()) throw ParseError("unexpected end of expression", pos_);
        const char c = peek();
        if (c == '(') {
            ++pos_;
            PhasePolynomial inner = expr();
            skip();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            const Integer value(std::string(text_.substr(start, pos_ - start)));
            return PhasePolynomial::constant(m_, RationalFunction(value));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
            return variable(std::string(text_.substr(start, pos_ - start)), start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    PhasePolynomial variable(const std::string& name, std::size_t position) {
        if (name == "l") return PhasePolynomial::constant(m_, RationalFunction::lambda());
        if (name.size() >= 1 && (name[0] == 'x' || name[0] == 'p')) {
            int index = -1;
            if (name.size() == 1 && m_ == 1) {
                index = 0;
            } else if (name.size() >= 2) {
                const std::string digits = name.substr(1);
                bool numeric = !digits.empty() && digits[0] != '0';
                for (char d : digits) numeric = numeric && std::isdigit(static_cast<unsigned char>(d));
                if (numeric && digits.size() <= 2) index = std::stoi(digits) - 1;
            }
            if (index >= 0 && index < m_)
                return name[0] == 'x' ? PhasePolynomial::x(m_, index) : PhasePolynomial::p(m_, index);
        }
        throw ParseError("unknown variable '" + name + "' for m = " + std::to_string(m_), position);
    }

    std::string_view text_;
    int m_;
    std::size_t pos_ = 0;
};

} // namespace

PhasePolynomial parse_polynomial(std::string_view text, int m) { return Parser(text, m).parse(); }

BasePolynomial parse_base_polynomial(std::string_view text, int m) {
    PhasePolynomial f = parse_polynomial(text, m);
    if (!f.is_zero() && f.p_degree() > 0) throw ParseError("base polynomial must not depend on p", 0);
    return BasePolynomial(std::move(f));
}

RationalFunction parse_scalar(std::string_view text) {
    PhasePolynomial f = parse_polynomial(text, 1);
    if (f.is_zero()) return {};
    if (f.degree() != 0) throw ParseError("expected an expression in l only", 0);
    return f.leading_coefficient();
}

Rational parse_rational(std::string_view text) {
    const RationalFunction f = parse_scalar(text);
    if (!f.is_constant()) throw ParseError("expected a rational number", 0);
    return f.evaluate(0);
}

} // namespace staralg
