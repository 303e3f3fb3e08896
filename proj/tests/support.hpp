#pragma once

#include "staralg/parse.hpp"
#include "staralg/scalar.hpp"

#include <random>
#include <string>

namespace test {

using namespace staralg;

inline PhasePolynomial P(const std::string& text, int m = 1) { return parse_polynomial(text, m); }
inline BasePolynomial B(const std::string& text, int m = 1) { return parse_base_polynomial(text, m); }
inline RationalFunction S(const std::string& text) { return parse_scalar(text); }
inline const RationalFunction& L() {
    static const RationalFunction l = RationalFunction::lambda();
    return l;
}

inline LambdaPoly random_lambda_poly(std::mt19937_64& rng, int max_degree = 3, int bound = 9) {
    std::uniform_int_distribution<int> deg(0, max_degree), coeff(-bound, bound);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    return LambdaPoly(std::move(c));
}

/// Random element of Q(l) with a nonzero denominator, including non-monomial ones.
inline RationalFunction random_scalar(std::mt19937_64& rng, int max_degree = 3) {
    LambdaPoly den;
    while (den.is_zero()) den = random_lambda_poly(rng, max_degree);
    return RationalFunction(random_lambda_poly(rng, max_degree), den);
}

} // namespace test
