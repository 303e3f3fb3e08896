// Acceptance run: one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include "staralg/checks.hpp"
#include "staralg/matrixrep.hpp"
#include "staralg/quantize.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace staralg;

namespace {

// Time limits in seconds.
constexpr double kDimensionLimit = 60.0;
constexpr double kSmallIsomorphismLimit = 10.0;
constexpr double kIsomorphismLimitN4 = 120.0;
// Randomized case counts; all comparisons are exact (zero tolerance).
constexpr int kCommutationCases = 200;
constexpr int kTransposeCases = 200;
constexpr int kStarCases = 100;
constexpr int kExploreDegree = 6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

bool report(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << "[exception: " << e.what() << "] ";
    }
    std::printf("%s criterion %d: %s | %s(%.2f s)\n", out.pass ? "PASS" : "FAIL", number, title.c_str(),
                out.detail.str().c_str(), seconds_since(start));
    std::fflush(stdout);
    return out.pass;
}

void require_checks(Outcome& out, const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) out.require(c.pass, c.name + (c.detail.empty() ? "" : ": " + c.detail));
}

} // namespace

int main() {
    bool all = true;

    all &= report(1, "dim Q = n^2 for n = 1..5", [](Outcome& out) {
        const auto start = Clock::now();
        for (int n = 1; n <= 5; ++n) {
            const auto algebra = normalizer_basis(n);
            out.require(algebra.dimension() == static_cast<std::size_t>(n * n), "n = " + std::to_string(n));
            out.detail << "n=" << n << ":" << algebra.dimension() << " ";
        }
        out.require(seconds_since(start) < kDimensionLimit, "runtime under 60 s");
    });

    all &= report(2, "quotient is isomorphic to n x n matrices, n = 2..4", [](Outcome& out) {
        for (int n = 2; n <= 4; ++n) {
            const auto start = Clock::now();
            const auto r = verify_isomorphism(n);
            const double t = seconds_since(start);
            require_checks(out, r.checks);
            out.require(r.pair_checks == static_cast<std::size_t>(n * n * n * n) && r.pair_failures == 0,
                        "homomorphism on all pairs");
            out.require(r.rank == static_cast<std::size_t>(n * n), "injectivity rank");
            out.require(r.unit_is_identity, "psi(1) = I");
            out.require(t < (n <= 3 ? kSmallIsomorphismLimit : kIsomorphismLimitN4), "runtime");
            out.detail << "n=" << n << ": " << r.pair_checks << " pairs, rank " << r.rank << ", " << to_string(r.composition)
                       << " ";
        }
    });

    all &= report(3, "n = 2 product formulas as symbolic identities; both misprints documented", [](Outcome& out) {
        const auto r = n2_formula_report();
        require_checks(out, r.checks);
        out.require(!r.equals_sign_counterexample.empty(), "'=' counterexample recorded");
        out.require(!r.printed_counterexample.empty(), "(2,2) entry counterexample recorded");
        out.detail << r.checks.size() << " checks; corrected (2,2) entry " << r.corrected_map[1][1] << ", printed "
                   << r.printed_map[1][1] << " ";
    });

    all &= report(4, "x^i * g commutation identity, 200 cases, i <= 5, deg g <= 6", [](Outcome& out) {
        RandomSettings s;
        s.count = kCommutationCases;
        s.max_degree = 6;
        const auto c = commutation_check(s, 5);
        out.require(c.pass, c.name);
        out.detail << c.detail << " ";
    });

    all &= report(5, "pullback(f) * g = g *_{-l} pullback(f) (200 cases); l-duality for n <= 3", [](Outcome& out) {
        RandomSettings s;
        s.count = kTransposeCases;
        const auto c = lambda_transpose_check(s);
        out.require(c.pass, c.name);
        out.detail << c.detail << "; ";
        for (int n = 1; n <= 3; ++n) {
            const auto d = check_lambda_duality(n);
            out.require(d.pass(), "duality n = " + std::to_string(n));
            out.detail << "n=" << n << ": " << d.mismatches.size() << " mismatches ";
        }
    });

    all &= report(6, "closed form and kernel method span the same space, n = 2..4", [](Outcome& out) {
        for (int n = 2; n <= 4; ++n) {
            std::vector<PhasePolynomial> a, b;
            for (const auto& h : normalizer_kernel(n)) a.push_back(h.flatten());
            bool members = true;
            for (const auto& h : canonical_basis(n)) {
                b.push_back(h.flatten());
                members = members && in_normalizer_1d(h);
            }
            out.require(EchelonBasis::from_rows(1, a) == EchelonBasis::from_rows(1, b), "span n = " + std::to_string(n));
            out.require(members, "membership n = " + std::to_string(n));
            out.detail << "n=" << n << " ";
        }
    });

    all &= report(7, "star kernel: associativity, pullbacks, degree bound, classical limit", [](Outcome& out) {
        RandomSettings s;
        s.count = kStarCases;
        const auto checks = star_kernel_checks(s);
        require_checks(out, checks);
        for (const auto& c : checks) out.detail << c.name << " " << c.detail << "; ";
    });

    all &= report(8, "truncated engine agrees with the exact method at D = n + 3, n = 2, 3", [](Outcome& out) {
        for (int n = 2; n <= 3; ++n) {
            const BasePolynomial gen(PhasePolynomial::x(1, 0, n));
            const auto q = quotient_truncated({gen}, n + 3);
            const auto exact = normalizer_basis(n);
            const auto slice = ideal_slice({gen}, n + 3, 2, false);
            out.require(q.dimension() == exact.dimension(), "dimension n = " + std::to_string(n));
            out.require(EchelonBasis::from_rows(1, q.basis) ==
                            EchelonBasis::from_rows(1, reduced_point_basis(exact.basis, slice)),
                        "span n = " + std::to_string(n));
            out.detail << "n=" << n << ": " << q.dimension() << " ";
        }
    });

    all &= report(9, "2-D cross, tick and double point at D = 6", [](Outcome& out) {
        const auto x1 = PhasePolynomial::x(2, 0), x2 = PhasePolynomial::x(2, 1);
        const auto product = [](const PhasePolynomial& a, const PhasePolynomial& b) { return classical_mul(a, b); };
        const std::vector<std::pair<std::string, std::vector<BasePolynomial>>> ideals = {
            {"cross", {BasePolynomial(product(x1, x2))}},
            {"tick", {BasePolynomial(product(x2, x2) - product(x1, product(x1, x1)))}},
            {"double point", {BasePolynomial(product(x1, x2)), BasePolynomial(product(x2, x2))}},
        };
        for (const auto& [name, gens] : ideals) {
            const auto q = quotient_truncated(gens, kExploreDegree, 2, true);
            const auto wider = quotient_truncated(gens, kExploreDegree, 3, false);
            out.require(q.closed(), name + " closure");
            out.require(q.slice_stabilized, name + " slice stabilization");
            out.require(q.degree_stable.value_or(false), name + " table unchanged at D + 1");
            out.require(wider.quotient_dims == q.quotient_dims && wider.normalizer_dims == q.normalizer_dims &&
                            wider.ideal_dims == q.ideal_dims,
                        name + " tables across slack");
            bool consistent = q.quotient_dims.back() == q.dimension();
            for (std::size_t d = 0; d < q.quotient_dims.size(); ++d)
                consistent = consistent && q.quotient_dims[d] <= q.normalizer_dims[d] &&
                             (d == 0 || q.quotient_dims[d] >= q.quotient_dims[d - 1]);
            out.require(consistent, name + " table consistency");
            out.detail << name << ": [";
            for (std::size_t d = 0; d < q.quotient_dims.size(); ++d) out.detail << (d ? " " : "") << q.quotient_dims[d];
            out.detail << "], " << q.closure_pairs << " closure pairs; ";
        }
    });

    return all ? 0 : 1;
}
