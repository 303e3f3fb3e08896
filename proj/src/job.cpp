#include "staralg/job.hpp"

#include "staralg/checks.hpp"
#include "staralg/errors.hpp"
#include "staralg/matrixrep.hpp"
#include "staralg/parse.hpp"
#include "staralg/quantize.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace staralg {

std::string to_string(Command c) {
    switch (c) {
    case Command::Star: return "star";
    case Command::Quantize: return "quantize";
    case Command::Matrix: return "matrix";
    case Command::Structure: return "structure";
    case Command::Verify: return "verify";
    case Command::Explore: return "explore";
    }
    return "unknown";
}

int max_truncation_degree() {
    const char* env = std::getenv("STARALG_MAX_DEGREE");
    if (env == nullptr || *env == '\0') return 12;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 0 || value > 1000)
        throw UsageError(std::string("STARALG_MAX_DEGREE must be a non-negative integer, got '") + env + "'");
    return static_cast<int>(value);
}

namespace {

constexpr int kDefaultExploreDegree = 6;

void require(bool condition, const std::string& message) {
    if (!condition) throw UsageError(message);
}

bool needs_n(const JobSpec& job) {
    switch (job.command) {
    case Command::Matrix:
    case Command::Structure:
    case Command::Verify: return true;
    case Command::Quantize: return job.ideal.empty();
    default: return false;
    }
}

int explore_degree(const JobSpec& job) { return job.degree ? *job.degree : kDefaultExploreDegree; }

std::vector<BasePolynomial> parse_generators(const JobSpec& job) {
    std::vector<BasePolynomial> out;
    for (const auto& text : job.ideal) {
        try {
            out.push_back(parse_base_polynomial(text, job.m));
        } catch (const ParseError& e) {
            throw UsageError("--ideal '" + text + "': " + e.what());
        }
        require(!out.back().as_phase().is_zero(), "--ideal: generators must be nonzero");
    }
    return out;
}

PhasePolynomial parse_operand(const std::string& flag, const std::string& text, int m) {
    try {
        return parse_polynomial(text, m);
    } catch (const ParseError& e) {
        throw UsageError(flag + " '" + text + "': " + e.what());
    }
}

std::optional<Rational> parse_lambda(const JobSpec& job) {
    if (!job.lambda) return std::nullopt;
    Rational value;
    try {
        value = parse_rational(*job.lambda);
    } catch (const ParseError& e) {
        throw UsageError("--lambda '" + *job.lambda + "': " + e.what());
    }
    require(value != 0, "--lambda must be nonzero");
    return value;
}

Json inputs_json(const JobSpec& job) {
    Json in;
    in["m"] = job.m;
    if (job.n) in["n"] = *job.n;
    if (!job.ideal.empty()) in["ideal"] = job.ideal;
    if (job.command == Command::Star) {
        in["f"] = job.f;
        in["g"] = job.g;
    }
    if (!job.ideal.empty()) {
        in["degree"] = job.command == Command::Explore ? explore_degree(job) : *job.degree;
        in["slack"] = job.slack;
    }
    if (job.lambda) in["lambda"] = *job.lambda;
    if (job.command == Command::Verify) {
        in["seed"] = job.seed;
        in["checks"] = job.checks;
        in["coeff_bound"] = job.coeff_bound;
        in["max_degree"] = job.max_degree;
    }
    return in;
}

void star_pipeline(const JobSpec& job, Json& results, std::vector<CheckResult>&) {
    const auto f = parse_operand("--f", job.f, job.m);
    const auto g = parse_operand("--g", job.g, job.m);
    const auto fg = moyal_star(f, g);
    results["product"] = fg.to_string();
    results["reversed"] = moyal_star(g, f).to_string();
    results["commutator"] = (fg - moyal_star(g, f)).to_string();
    results["product_negated_lambda"] = star_negated(f, g).to_string();
}

void point_quantize_pipeline(int n, Json& results, std::vector<CheckResult>& checks) {
    const QuotientAlgebra kernel = normalizer_basis(n);
    const std::vector<NormalForm> closed = canonical_basis(n);
    Json basis = Json::array();
    for (const auto& h : closed) basis.push_back(to_json(h));
    Json kernel_basis = Json::array();
    for (const auto& h : kernel.basis) kernel_basis.push_back(to_json(h));
    results["dimension"] = kernel.dimension();
    results["basis"] = std::move(basis);
    results["kernel_basis"] = std::move(kernel_basis);

    std::vector<PhasePolynomial> a, b;
    for (const auto& h : kernel.basis) a.push_back(h.flatten());
    for (const auto& h : closed) b.push_back(h.flatten());
    checks.push_back({"dimension = n^2", kernel.dimension() == static_cast<std::size_t>(n * n),
                      std::to_string(kernel.dimension())});
    checks.push_back({"normalizer degree ansatz", kernel.degree_bound_confirmed, ""});
    checks.push_back({"closed form spans the kernel", EchelonBasis::from_rows(1, a) == EchelonBasis::from_rows(1, b), ""});
    bool members = true;
    for (const auto& h : closed) members = members && in_normalizer_1d(h);
    checks.push_back({"closed form in normalizer", members, ""});
}

void truncated_checks(const TruncatedQuotient& q, std::vector<CheckResult>& checks) {
    checks.push_back({"closed under star within degree budget", q.closed(),
                      std::to_string(q.closure_pairs - q.closure_failures) + "/" + std::to_string(q.closure_pairs) +
                          " pairs"});
    checks.push_back({"ideal slice stabilized at slack + 1", q.slice_stabilized, "slack " + std::to_string(q.slack)});
}

void truncated_pipeline(const JobSpec& job, int degree, bool explore, Json& results,
                        std::vector<CheckResult>& checks) {
    const auto generators = parse_generators(job);
    for (const auto& g : generators)
        require(g.degree() <= degree, "--degree must be at least the generator degree " + std::to_string(g.degree()));
    const TruncatedQuotient q = quotient_truncated(generators, degree, job.slack, explore);
    results["quotient"] = to_json(q);
    truncated_checks(q, checks);
    if (!explore) return;
    checks.push_back({"quotient table unchanged at D + 1", q.degree_stable.value_or(false), ""});
    const TruncatedQuotient wider = quotient_truncated(generators, degree, job.slack + 1, false);
    results["dimension_by_degree_at_slack_plus_one"] = to_json(wider)["dimension_by_degree"];
    const bool same = wider.quotient_dims == q.quotient_dims && wider.normalizer_dims == q.normalizer_dims &&
                      wider.ideal_dims == q.ideal_dims && wider.basis == q.basis;
    checks.push_back({"dimension tables agree across slack values", same,
                      "slack " + std::to_string(job.slack) + " and " + std::to_string(job.slack + 1)});
}

void structure_pipeline(const JobSpec& job, Json& results, std::vector<CheckResult>& checks) {
    const int n = *job.n;
    const QuotientAlgebra algebra = structure_constants(n);
    results["algebra"] = to_json(algebra);
    results["max_pole_order"] = max_pole_order(algebra);
    checks.push_back({"quotient closed under star", algebra.closed, ""});
    checks.push_back({"structure constants are Laurent in l", all_laurent(algebra), ""});
    if (const auto lambda0 = parse_lambda(job)) {
        Json evaluated = Json::array();
        for (const auto& c : algebra.structure_constants)
            evaluated.push_back({{"i", c.i}, {"j", c.j}, {"k", c.k}, {"value", c.value.evaluate(*lambda0).get_str()}});
        results["evaluated"] = std::move(evaluated);
        checks.push_back(recognize_matrix_algebra(algebra, *lambda0));
    }
}

void matrix_pipeline(const JobSpec& job, Json& results, std::vector<CheckResult>& checks) {
    const int n = *job.n;
    const Composition convention = detect_composition();
    const std::vector<NormalForm> basis = canonical_basis(n);
    const auto lambda0 = parse_lambda(job);
    Json matrices = Json::array();
    for (const auto& h : basis) {
        const auto m = psi(h, convention);
        Json entry;
        entry["element"] = to_json(h);
        entry["matrix"] = to_json(m);
        if (lambda0) entry["evaluated"] = to_json(evaluate_matrix(m, *lambda0));
        matrices.push_back(std::move(entry));
    }
    results["composition"] = to_string(convention);
    results["matrices"] = std::move(matrices);
    const IsomorphismReport report = verify_isomorphism(n);
    results["isomorphism"] = to_json(report);
    checks.insert(checks.end(), report.checks.begin(), report.checks.end());
    if (lambda0) checks.push_back(recognize_matrix_algebra(structure_constants(n), *lambda0));
    if (n == 2) {
        const N2FormulaReport example = n2_formula_report();
        results["n2_explicit_formulas"] = to_json(example);
        checks.insert(checks.end(), example.checks.begin(), example.checks.end());
    }
}

void verify_pipeline(const JobSpec& job, Json& results, std::vector<CheckResult>& checks) {
    RandomSettings settings;
    settings.seed = job.seed;
    settings.count = job.checks;
    settings.coeff_bound = job.coeff_bound;
    settings.max_degree = job.max_degree;
    checks = verify_suite(*job.n, settings);
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.pass;
    results["properties"] = checks.size();
    results["passed"] = passed;
}

void render(const Json& value, int indent, std::ostringstream& out);

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_value_after_key(const Json& value, int indent, std::ostringstream& out) {
    if (is_scalar(value)) {
        out << ' ' << scalar_text(value) << '\n';
        return;
    }
    if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
        out << " [";
        bool first = true;
        for (const auto& v : value) {
            out << (first ? "" : "; ") << scalar_text(v);
            first = false;
        }
        out << "]\n";
        return;
    }
    out << '\n';
    render(value, indent + 2, out);
}

void render(const Json& value, int indent, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (value.is_object()) {
        for (const auto& [key, v] : value.items()) {
            out << pad << key << ':';
            render_value_after_key(v, indent, out);
        }
    } else if (value.is_array()) {
        for (const auto& v : value) {
            out << pad << '-';
            render_value_after_key(v, indent, out);
        }
    } else {
        out << pad << scalar_text(value) << '\n';
    }
}

const char* kUsage =
    "usage: staralg <star|quantize|matrix|structure|verify|explore> [options]\n"
    "  star       --m M --f EXPR --g EXPR\n"
    "  quantize   --n N | --m M --ideal EXPR[,EXPR...] --degree D [--slack S]\n"
    "  structure  --n N [--lambda Q]\n"
    "  matrix     --n N [--lambda Q]\n"
    "  verify     --n N [--seed S] [--checks K]\n"
    "  explore    --m M --ideal EXPR[,EXPR...] [--degree D] [--slack S]\n"
    "common: --format json|text, --out PATH; run 'staralg --help' for details\n";

} // namespace

void validate(const JobSpec& job) {
    require(job.m >= 1 && job.m <= kMaxPairs, "--m must be between 1 and " + std::to_string(kMaxPairs));
    if (needs_n(job)) {
        require(job.n.has_value(), to_string(job.command) + " requires --n");
        require(*job.n >= 1, "--n must be at least 1");
        require(job.m == 1, "--n describes the n-tuple point in one dimension; use --m 1");
    }
    if (job.n) require(*job.n >= 1, "--n must be at least 1");
    switch (job.command) {
    case Command::Star:
        require(!job.f.empty() && !job.g.empty(), "star requires --f and --g");
        break;
    case Command::Quantize:
        require(!(job.n && !job.ideal.empty()), "quantize takes either --n or --ideal, not both");
        if (!job.ideal.empty()) require(job.degree.has_value(), "quantize --ideal requires --degree");
        break;
    case Command::Explore:
        require(!job.ideal.empty(), "explore requires --ideal");
        break;
    default: break;
    }
    const std::optional<int> degree = job.command == Command::Explore ? explore_degree(job) : job.degree;
    if (degree) {
        require(*degree >= 0, "--degree must be non-negative");
        const int cap = max_truncation_degree();
        require(*degree <= cap,
                "--degree " + std::to_string(*degree) + " exceeds STARALG_MAX_DEGREE = " + std::to_string(cap));
    }
    require(job.slack >= 0 && job.slack <= 8, "--slack must be between 0 and 8");
    require(job.checks >= 1, "--checks must be at least 1");
    require(job.coeff_bound >= 1, "--coeff-bound must be at least 1");
    require(job.max_degree >= 0, "--max-degree must be non-negative");
    require(job.format == Format::Json || job.format == Format::Text, "--format must be json or text");
}

Json build_report(const JobSpec& job) {
    validate(job);
    Json results = Json::object();
    std::vector<CheckResult> checks;
    switch (job.command) {
    case Command::Star: star_pipeline(job, results, checks); break;
    case Command::Quantize:
        if (job.ideal.empty())
            point_quantize_pipeline(*job.n, results, checks);
        else
            truncated_pipeline(job, *job.degree, false, results, checks);
        break;
    case Command::Structure: structure_pipeline(job, results, checks); break;
    case Command::Matrix: matrix_pipeline(job, results, checks); break;
    case Command::Verify: verify_pipeline(job, results, checks); break;
    case Command::Explore: truncated_pipeline(job, explore_degree(job), true, results, checks); break;
    }
    Json report;
    report["command"] = to_string(job.command);
    report["convention"] = "sec3";
    report["inputs"] = inputs_json(job);
    report["results"] = std::move(results);
    report["checks"] = to_json(checks);
    return report;
}

std::string render_text(const Json& report) {
    std::ostringstream out;
    for (const auto& [key, value] : report.items()) {
        if (key == "checks") continue;
        out << key << ':';
        render_value_after_key(value, 0, out);
    }
    out << "checks:\n";
    for (const auto& c : report.at("checks")) {
        out << "  [" << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "] " << c.at("name").get<std::string>();
        const auto detail = c.at("detail").get<std::string>();
        if (!detail.empty()) out << ": " << detail;
        out << '\n';
    }
    return out.str();
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    Json report;
    try {
        report = build_report(job);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << kUsage;
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    const std::string text = job.format == Format::Json ? report.dump(2) + "\n" : render_text(report);
    if (job.out.empty()) {
        out << text;
    } else {
        std::ofstream file(job.out);
        if (!file) {
            err << "error: cannot open " << job.out << " for writing\n";
            return 2;
        }
        file << text;
    }
    bool pass = true;
    for (const auto& c : report.at("checks")) pass = pass && c.at("pass").get<bool>();
    if (!pass) err << "one or more checks failed\n";
    return pass ? 0 : 1;
}

} // namespace staralg
