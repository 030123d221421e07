#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qseq/contraction.hpp"
#include "qseq/means.hpp"
#include "qseq/sequences.hpp"

namespace qseq::io {

using nlohmann::json;

/// {"start": n, "values": [...]}
[[nodiscard]] json to_json(const WindowSequence& p);
[[nodiscard]] WindowSequence sequence_from_json(const json& j);

/// {"a": ..., "b": ..., "q": ..., "start": n}
[[nodiscard]] json to_json(const AffineRep& rep);
[[nodiscard]] AffineRep affine_rep_from_json(const json& j);

/// {"verdict": ..., "convexity_threshold": x | null,
///  "concavity_threshold": x | null, "ratios": [...]}
[[nodiscard]] json to_json(const Classification& c, const std::vector<double>& ratios);

/// {"value": ..., "exact": ..., "source": ...}
[[nodiscard]] json to_json(const BoundReport& b);

/// {"n": ..., "gamma": [...], "weights": [...] | "default"}
[[nodiscard]] json to_json(const ContractionProblem& prob, bool default_weights = false);
[[nodiscard]] ContractionProblem problem_from_json(const json& j);

/// {"point": [...], "iterations": ..., "residual": ..., "q": ..., "q_star": ...}
[[nodiscard]] json to_json(const FixedPointResult& r);
[[nodiscard]] FixedPointResult result_from_json(const json& j);

/// "1, 2.5,-3" -> {1, 2.5, -3}. Throws DomainError on malformed input.
[[nodiscard]] std::vector<double> parse_number_list(std::string_view text);

/// A plain number, or inf / +inf / -inf (also max / min).
[[nodiscard]] MeanSpec parse_mean_spec(std::string_view text);

/// Flattens a JSON document into "key,value" rows. Nested keys are joined
/// with '.', array elements use their index; numbers are written exactly as
/// the JSON serializer writes them.
[[nodiscard]] std::string to_csv(const json& doc);

}  // namespace qseq::io
