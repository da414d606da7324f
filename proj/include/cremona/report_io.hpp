#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cremona/sieve.hpp"

namespace cremona {

using Json = nlohmann::ordered_json;

/// Report layout: {meta, pipeline, config, type_check, stages, branches, finalists}.
/// "meta" carries the version only and is ignored by golden comparison.
Json report_to_json(const ClassificationReport& report);
Json stage_to_json(const StageReport& stage);
/// Inverse of report_to_json; throws ConfigError on malformed input.
ClassificationReport report_from_json(const Json& json);
StageReport stage_from_json(const Json& json);

Json meta_json();

/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& json);

/// Equality of two documents with any top-level "meta" removed.
bool golden_equal(Json expected, Json actual);

/// Pipeline spec files. A spec may start from a built-in with {"base": "cubic-p6", ...};
/// other keys then override. Unknown keys are errors.
Json pipeline_spec_to_json(const PipelineSpec& spec);
PipelineSpec pipeline_spec_from_json(const Json& json);

/// One line per tuple: stage,lambda,genus,nu.
void write_csv(std::ostream& os, const ClassificationReport& report);
void write_csv(std::ostream& os, const StageReport& stage);

void write_table(std::ostream& os, const ClassificationReport& report);
void write_table(std::ostream& os, const StageReport& stage);

}  // namespace cremona
