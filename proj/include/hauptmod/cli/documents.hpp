#pragma once

// JSON documents emitted by the command-line tool and stored in its cache.
// Every integer that can grow without bound is written as a decimal string.

#include "hauptmod/eta.hpp"
#include "hauptmod/golden.hpp"
#include "hauptmod/modeq.hpp"
#include "hauptmod/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hauptmod::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// {schema_version, command, inputs, result, timing}; timing in ms or null.
json document(const std::string& command, json inputs, json result, std::optional<double> timing_ms);

json series_json(const QSeries& s);
json quotient_json(const EtaQuotient& f);

/// [[i, j, "c"], ...] in (i, j) order.
json poly_terms_json(const BivarPoly& f);
/// Inverse of poly_terms_json; throws BadSpec on malformed input.
BivarPoly poly_from_terms_json(const json& terms);

json modeq_result_json(const ModEqResult& r);
json cusps_result_json(std::int64_t level, const std::optional<EtaQuotient>& divisor_of);
json verify_result_json(const std::string& subset, const std::vector<verify::CheckReport>& reports,
                        const std::string& golden_checksum);

json golden_to_json(const std::vector<golden::Equation>& equations);
/// Throws BadSpec on malformed input.
std::vector<golden::Equation> golden_from_json(const json& doc);

/// Empty when `doc` is a well-formed output document, else the first problem found.
std::string validate_document(const json& doc);

/// Structural validation plus an exact residual check of the stored polynomial.
/// Empty when the cached document can be trusted for (level, method).
std::string validate_modeq_cache(const json& doc, std::int64_t level, SolveMethod method);

}  // namespace hauptmod::cli
