#include "sumsets/report.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "sumsets/core.hpp"
#include "sumsets/error.hpp"

namespace sumsets::report {

namespace {

using classify::Counterexample;
using classify::Verdict;

const Json& field(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    throw PreconditionError(std::string("report is missing field '") + key + "'");
  }
  return json.at(key);
}

Json set_to_json(const IntSet& set) { return Json(set.vector()); }

IntSet set_from_json(const Json& json) { return IntSet(json.get<std::vector<Int>>()); }

std::string spaced(const IntSet& set) {
  std::string out;
  for (Int v : set) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

Json verdict_to_json(const Verdict& v) {
  Json counterexamples = Json::array();
  for (const Counterexample& c : v.counterexamples) {
    counterexamples.push_back({{"set", set_to_json(c.set)}, {"detail", c.detail}});
  }
  return {{"claim", v.claim},
          {"range", v.range},
          {"status", std::string(classify::to_string(v.status))},
          {"counterexamples", std::move(counterexamples)},
          {"notes", v.notes}};
}

Verdict verdict_from_json(const Json& json) {
  Verdict v;
  v.claim = field(json, "claim").get<std::string>();
  v.range = field(json, "range").get<std::string>();
  v.status = classify::status_from_string(field(json, "status").get<std::string>());
  for (const Json& c : field(json, "counterexamples")) {
    v.counterexamples.push_back({set_from_json(field(c, "set")), field(c, "detail").get<std::string>()});
  }
  if (json.contains("notes")) v.notes = json.at("notes").get<std::vector<std::string>>();
  return v;
}

Json to_json(const Document& doc) {
  Json out = Json::object();
  out["schema"] = schema_version;
  out["command"] = doc.command;
  out["params"] = doc.params;
  out["span_cutoff"] = doc.span_cutoff ? Json(*doc.span_cutoff) : Json(nullptr);
  Json buckets = Json::array();
  for (const auto& [card, sets] : doc.buckets) {
    Json list = Json::array();
    for (const IntSet& set : sets) list.push_back(set_to_json(set));
    buckets.push_back({{"card", card}, {"sets", std::move(list)}});
  }
  out["buckets"] = std::move(buckets);
  Json verdicts = Json::array();
  for (const Verdict& v : doc.verdicts) verdicts.push_back(verdict_to_json(v));
  out["verdicts"] = std::move(verdicts);
  out["timing_ms"] = doc.timing_ms;
  for (const auto& [key, value] : doc.extra.items()) {
    if (out.contains(key)) throw Error("extra report field '" + key + "' collides with a schema field");
    out[key] = value;
  }
  return out;
}

Document document_from_json(const Json& json) {
  if (field(json, "schema") != schema_version) {
    throw PreconditionError("unsupported report schema: " + field(json, "schema").dump());
  }
  Document doc;
  doc.command = field(json, "command").get<std::string>();
  doc.params = field(json, "params");
  const Json& cutoff = field(json, "span_cutoff");
  if (!cutoff.is_null()) doc.span_cutoff = cutoff.get<Int>();
  for (const Json& bucket : field(json, "buckets")) {
    auto& sets = doc.buckets[field(bucket, "card").get<Int>()];
    for (const Json& set : field(bucket, "sets")) sets.push_back(set_from_json(set));
  }
  for (const Json& v : field(json, "verdicts")) doc.verdicts.push_back(verdict_from_json(v));
  doc.timing_ms = field(json, "timing_ms").get<double>();
  for (const auto& [key, value] : json.items()) {
    static const char* known[] = {"schema", "command", "params", "span_cutoff", "buckets", "verdicts", "timing_ms"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) doc.extra[key] = value;
  }
  return doc;
}

Document classification_document(const classify::ClassificationReport& report) {
  Document doc;
  doc.command = "classify";
  doc.params = {{"h", report.spec.h},
                {"k", report.spec.k},
                {"lo", report.spec.lo},
                {"hi", report.spec.hi},
                {"max_span", report.spec.max_span},
                {"dedup", report.dedup}};
  doc.span_cutoff = report.span_cutoff;
  doc.buckets = report.buckets;
  doc.verdicts = report.verdicts;
  doc.extra = {{"complete", report.complete}, {"sets_enumerated", report.sets_enumerated}};
  return doc;
}

Json classification_to_json(const classify::ClassificationReport& report, double timing_ms) {
  Document doc = classification_document(report);
  doc.timing_ms = timing_ms;
  return to_json(doc);
}

classify::ClassificationReport classification_from_json(const Json& json) {
  const Document doc = document_from_json(json);
  if (doc.command != "classify") throw PreconditionError("not a classify report: " + doc.command);
  classify::ClassificationReport report;
  const Json& p = doc.params;
  report.spec = {field(p, "h").get<Int>(), field(p, "k").get<Int>(), field(p, "max_span").get<Int>(),
                 field(p, "lo").get<Int>(), field(p, "hi").get<Int>()};
  report.dedup = field(p, "dedup").get<bool>();
  report.span_cutoff = doc.span_cutoff;
  report.complete = field(doc.extra, "complete").get<bool>();
  report.sets_enumerated = field(doc.extra, "sets_enumerated").get<std::uint64_t>();
  report.buckets = doc.buckets;
  report.verdicts = doc.verdicts;
  return report;
}

std::string buckets_to_csv(const std::map<Int, std::vector<IntSet>>& buckets) {
  std::string out = "cardinality,set,canonical\n";
  for (const auto& [card, sets] : buckets) {
    for (const IntSet& set : sets) {
      out += std::to_string(card) + ',' + spaced(set) + ',' + (canonical(set) == set ? "1" : "0") + '\n';
    }
  }
  return out;
}

std::string render_buckets(const std::map<Int, std::vector<IntSet>>& buckets) {
  std::ostringstream out;
  for (const auto& [card, sets] : buckets) {
    out << "|hA| = " << card << ": " << sets.size() << (sets.size() == 1 ? " set\n" : " sets\n");
    for (const IntSet& set : sets) out << "  " << set.to_string() << '\n';
  }
  return out.str();
}

std::string render_verdicts(const std::vector<Verdict>& verdicts) {
  std::ostringstream out;
  for (const Verdict& v : verdicts) {
    out << '[' << classify::to_string(v.status) << "] " << v.claim << " (" << v.range << ")\n";
    for (const std::string& note : v.notes) out << "    note: " << note << '\n';
    for (const Counterexample& c : v.counterexamples) {
      out << "    counterexample " << c.set.to_string() << ": " << c.detail << '\n';
    }
  }
  return out.str();
}

bool all_pass(const std::vector<Verdict>& verdicts) {
  for (const Verdict& v : verdicts) {
    if (v.status == classify::Status::fail) return false;
  }
  return true;
}

}  // namespace sumsets::report
