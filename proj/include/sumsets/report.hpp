#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumsets/classify.hpp"

namespace sumsets::report {

using Json = nlohmann::json;

inline constexpr const char* schema_version = "v1";

/// One output document, schema v1:
///   {schema, command, params, span_cutoff, buckets: [{card, sets}],
///    verdicts: [{claim, range, status, counterexamples, notes}], timing_ms}
/// Anything command-specific goes into `extra`, whose keys are written at top level.
struct Document {
  std::string command;
  Json params = Json::object();
  std::optional<Int> span_cutoff;
  std::map<Int, std::vector<IntSet>> buckets;
  std::vector<classify::Verdict> verdicts;
  double timing_ms = 0;
  Json extra = Json::object();
};

Json to_json(const Document& doc);
/// Throws PreconditionError on a missing field or a wrong schema tag.
Document document_from_json(const Json& json);

Json verdict_to_json(const classify::Verdict& verdict);
classify::Verdict verdict_from_json(const Json& json);

/// Every field of the report, so classification_from_json gives back an equal value.
Document classification_document(const classify::ClassificationReport& report);
Json classification_to_json(const classify::ClassificationReport& report, double timing_ms = 0);
classify::ClassificationReport classification_from_json(const Json& json);

/// "cardinality,set,canonical" rows, set entries space-separated, canonical 0/1.
std::string buckets_to_csv(const std::map<Int, std::vector<IntSet>>& buckets);

std::string render_buckets(const std::map<Int, std::vector<IntSet>>& buckets);
std::string render_verdicts(const std::vector<classify::Verdict>& verdicts);

/// True unless some verdict failed. Skipped verdicts do not count as failures.
bool all_pass(const std::vector<classify::Verdict>& verdicts);

}  // namespace sumsets::report
