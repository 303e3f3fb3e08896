#pragma once

// JSON forms of engine objects. Scalars and polynomials are expression
// strings in the parser's grammar; matrices are row-major arrays.

#include "staralg/matrixrep.hpp"
#include "staralg/quantize.hpp"
#include "staralg/reduction.hpp"

#include "json.hpp"

namespace staralg {

using Json = nlohmann::ordered_json;

Json to_json(const NormalForm& h);
Json to_json(const IdealSlice& slice);
Json to_json(const QuotientAlgebra& algebra);
Json to_json(const TruncatedQuotient& quotient);
Json to_json(const Matrix<RationalFunction>& m);
Json to_json(const Matrix<Rational>& m);
Json to_json(const CheckResult& check);
Json to_json(const std::vector<CheckResult>& checks);
Json to_json(const std::vector<StructureConstant>& constants);
Json to_json(const IsomorphismReport& report);
Json to_json(const DualityReport& report);
Json to_json(const N2FormulaReport& report);

} // namespace staralg
