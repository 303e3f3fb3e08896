#pragma once

// Randomized and exhaustive invariant checks behind the `verify` command.

#include "staralg/check_result.hpp"
#include "staralg/phasepoly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace staralg {

struct RandomSettings {
    std::uint64_t seed = 1;
    /// Integer coefficients are drawn from [-coeff_bound, coeff_bound].
    int coeff_bound = 9;
    int max_degree = 6;
    int max_terms = 5;
    /// Cases per randomized property.
    int count = 100;
};

/// Deterministic generator of random polynomials for a given seed.
class RandomPolynomials {
public:
    explicit RandomPolynomials(const RandomSettings& settings);

    /// Random integer-coefficient polynomial with at most max_terms terms.
    /// With lambda_coefficients, coefficients are multiplied by l^e, e in {-1, 0, 1}.
    PhasePolynomial phase(int m, int max_degree, bool lambda_coefficients = false);
    PhasePolynomial p_only(int max_degree);
    BasePolynomial base(int m, int max_degree);
    int uniform(int lo, int hi);

private:
    RationalFunction coefficient(bool lambda_coefficients);
    RandomSettings settings_;
    std::mt19937_64 rng_;
};

std::vector<CheckResult> star_kernel_checks(const RandomSettings& settings);
CheckResult commutation_check(const RandomSettings& settings, int max_power = 5);
CheckResult lambda_transpose_check(const RandomSettings& settings);
CheckResult right_division_check(const RandomSettings& settings, int n);
std::vector<CheckResult> quotient_checks(int n);
/// Everything above plus the quotient, duality and matrix checks for n.
std::vector<CheckResult> verify_suite(int n, const RandomSettings& settings);

} // namespace staralg
