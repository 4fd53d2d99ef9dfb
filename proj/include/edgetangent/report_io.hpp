#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "edgetangent/metrics.hpp"
#include "edgetangent/scalar.hpp"
#include "edgetangent/simplex.hpp"
#include "edgetangent/verify.hpp"

namespace edgetangent::io {

using nlohmann::json;

/// Top-level keys of each document type. Emitting anything else is a bug.
extern const std::vector<std::string_view> kMetricsKeys;
extern const std::vector<std::string_view> kValidateKeys;
extern const std::vector<std::string_view> kVerifyKeys;
extern const std::vector<std::string_view> kDimensionKeys;

/// Exact scalars become "p/q" strings, floating scalars JSON numbers.
json scalar_to_json(const Scalar& value);

/// Accepts JSON numbers (read back through their shortest decimal text, so
/// 0.1 is exactly 1/10) and strings ("p/q", integers, decimals).
Scalar scalar_from_json(const json& value, Backend backend);

/// Comma-separated list, e.g. "1,2,3" or "1/10,1,1,1".
std::vector<Scalar> parse_scalar_list(std::string_view text, Backend backend);

/// Input document: {"n": int, "radii": [...]} or {"n": int, "edges": [[...], ...]}.
struct InputDocument {
    int n = 0;
    std::vector<Scalar> radii;                 // empty when edges are given
    std::vector<std::vector<Scalar>> edges;    // empty when radii are given
};

InputDocument parse_input_document(const json& doc, Backend backend);

json metrics_document(const BalloonRadii& radii, const SimplexMetrics& metrics);
std::string metrics_csv(const BalloonRadii& radii, const SimplexMetrics& metrics);

struct ValidationResult {
    int n = 0;
    Backend backend = Backend::exact;
    bool circumscriptible = false;
    std::optional<BalloonRadii> radii;
    std::optional<Realizability> realizability;
    Scalar cayley_menger_det;
    Scalar volume_sq;
    bool cayley_menger_sign_ok = false;
    std::string diagnostic;
};

ValidationResult validate_edges(const EdgeLengthMatrix& edges, const Tolerance& tol = {});
json validation_document(const ValidationResult& result);
std::string validation_csv(const ValidationResult& result);

json campaign_document(const CampaignSummary& summary);
std::string campaign_csv(const CampaignSummary& summary);

/// Re-reads an exact metrics document, recomputes every metric from its
/// radii and checks each stored value and route. Returns the list of
/// problems; empty means the document certifies itself.
std::vector<std::string> recheck_metrics_document(const json& doc);

}  // namespace edgetangent::io
