#include "staralg/serialize.hpp"

namespace staralg {

namespace {

template <class F>
Json matrix_json(const Matrix<F>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(field_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json generators_json(const std::vector<BasePolynomial>& generators) {
    Json out = Json::array();
    for (const auto& g : generators) out.push_back(g.to_string());
    return out;
}

} // namespace

Json to_json(const NormalForm& h) {
    Json out = Json::array();
    for (const auto& c : h.components()) out.push_back(c.to_string());
    return out;
}

Json to_json(const IdealSlice& slice) {
    Json basis = Json::array();
    for (const auto& row : slice.basis.rows()) basis.push_back(row.to_string());
    Json out;
    out["generators"] = generators_json(slice.generators);
    out["m"] = slice.m;
    out["D"] = slice.degree_bound;
    out["slack"] = slice.slack;
    out["basis"] = std::move(basis);
    out["stabilized"] = slice.stabilized ? Json(*slice.stabilized) : Json(nullptr);
    return out;
}

Json to_json(const std::vector<StructureConstant>& constants) {
    Json out = Json::array();
    for (const auto& c : constants)
        out.push_back({{"i", c.i}, {"j", c.j}, {"k", c.k}, {"value", c.value.to_string()}});
    return out;
}

Json to_json(const QuotientAlgebra& algebra) {
    Json basis = Json::array();
    for (const auto& h : algebra.basis) basis.push_back(to_json(h));
    Json out;
    out["n"] = algebra.n;
    out["dimension"] = algebra.dimension();
    out["basis"] = std::move(basis);
    out["structure_constants"] = to_json(algebra.structure_constants);
    return out;
}

Json to_json(const TruncatedQuotient& q) {
    Json basis = Json::array();
    for (const auto& b : q.basis) basis.push_back(b.to_string());
    Json table = Json::array();
    for (std::size_t d = 0; d < q.quotient_dims.size(); ++d)
        table.push_back({{"degree", d},
                         {"normalizer", q.normalizer_dims[d]},
                         {"ideal", q.ideal_dims[d]},
                         {"quotient", q.quotient_dims[d]}});
    Json out;
    out["generators"] = generators_json(q.generators);
    out["m"] = q.m;
    out["D"] = q.degree_bound;
    out["slack"] = q.slack;
    out["dimension"] = q.dimension();
    out["dimension_by_degree"] = std::move(table);
    out["basis"] = std::move(basis);
    out["slice_stabilized"] = q.slice_stabilized;
    out["degree_stable"] = q.degree_stable ? Json(*q.degree_stable) : Json(nullptr);
    out["closure_pairs"] = q.closure_pairs;
    out["closure_failures"] = q.closure_failures;
    out["structure_constants"] = to_json(q.structure_constants);
    return out;
}

Json to_json(const Matrix<RationalFunction>& m) { return matrix_json(m); }
Json to_json(const Matrix<Rational>& m) { return matrix_json(m); }

Json to_json(const CheckResult& check) {
    return {{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}};
}

Json to_json(const std::vector<CheckResult>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) out.push_back(to_json(c));
    return out;
}

Json to_json(const IsomorphismReport& r) {
    Json out;
    out["n"] = r.n;
    out["composition"] = to_string(r.composition);
    out["pair_checks"] = r.pair_checks;
    out["pair_failures"] = r.pair_failures;
    out["rank"] = r.rank;
    out["max_pole_order"] = r.max_pole_order;
    out["pass"] = r.pass();
    return out;
}

Json to_json(const DualityReport& r) {
    return {{"n", r.n}, {"checked", r.checked}, {"mismatches", r.mismatches}, {"pass", r.pass()}};
}

Json to_json(const N2FormulaReport& r) {
    Json out;
    out["printed_map"] = r.printed_map;
    out["corrected_map"] = r.corrected_map;
    out["printed_counterexample"] = r.printed_counterexample;
    out["equals_sign_counterexample"] = r.equals_sign_counterexample;
    out["pass"] = r.pass();
    return out;
}

} // namespace staralg
