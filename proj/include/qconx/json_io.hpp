#pragma once

// JSON forms of field elements ([a, b]), matrices (rows of [a, b]),
// polynomials (coefficients, lowest degree first) and results.

#include <json.hpp>

#include "qconx/constructx.hpp"
#include "qconx/scan.hpp"

namespace qconx {

using Json = nlohmann::ordered_json;

Json to_json(FieldElement x);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Polynomial& g);
Json to_json(const DistanceReport& r);
Json to_json(const QuantumCodeParams& q);
Json to_json(const Field& f, const ConstructionResult& r);
Json to_json(const ScanRecord& r);
Json to_json(const ScanSummary& s);
Json to_json(const RowComparison& c);
Json field_info_json(const Field& f);

/// Throws std::invalid_argument on malformed input or entries outside GF(p^2).
FieldElement element_from_json(const Field& f, const Json& j);
Vector vector_from_json(const Field& f, const Json& j);
Matrix matrix_from_json(const Field& f, const Json& j, std::size_t cols);
Polynomial polynomial_from_json(const Field& f, const Json& j);
ScanRecord scan_record_from_json(const Json& j);

/// Header and one row per record.
std::string scan_csv_header();
std::string to_csv(const ScanRecord& r);

}  // namespace qconx
