#include <doctest.h>

#include "sumsets/bounds.hpp"
#include "sumsets/error.hpp"
#include "sumsets/report.hpp"

using namespace sumsets;
using namespace sumsets::classify;
using namespace sumsets::report;

TEST_CASE("classification report survives a JSON round trip") {
  for (bool dedup : {true, false}) {
    for (Int h = 3; h <= 5; ++h) {
      const Int k = 6;
      const EnumSpec spec = make_spec(h, k, bounds::nathanson_lower(h, k), h * k + 2 * h);
      const ClassificationReport report = classify_band(spec, {2, dedup});
      const Json json = classification_to_json(report, 12.5);
      CHECK(classification_from_json(json) == report);
      CHECK(classification_from_json(Json::parse(json.dump())) == report);
    }
  }
}

TEST_CASE("round trip keeps incomplete reports, counterexamples and notes") {
  EnumSpec spec = make_spec(3, 6, 21, 23);
  spec.max_span -= 1;
  ClassificationReport report = classify_band(spec, {1, true});
  CHECK_FALSE(report.complete);
  report.verdicts.push_back({"extra", "h=3,k=6", Status::fail, {{IntSet{0, 1, 4}, "made up"}}, {"a", "b"}});
  report.verdicts.push_back({"other", "h=3,k=6", Status::skipped, {}, {}});
  CHECK(classification_from_json(classification_to_json(report)) == report);
}

TEST_CASE("unbounded cutoff is written as null") {
  const ClassificationReport report = classify_band({2, 5, 7, 12, 12}, {1, true});
  const Json json = classification_to_json(report);
  CHECK(json["span_cutoff"].is_null());
  CHECK_FALSE(json["complete"].get<bool>());
  CHECK(classification_from_json(json) == report);
}

TEST_CASE("schema v1 fields") {
  const ClassificationReport report = classify_band(make_spec(2, 5, 9, 10), {1, true});
  const Json json = classification_to_json(report, 3.0);
  for (const char* key : {"schema", "command", "params", "span_cutoff", "buckets", "verdicts", "timing_ms"}) {
    CHECK(json.contains(key));
  }
  CHECK(json["schema"] == "v1");
  CHECK(json["command"] == "classify");
  CHECK(json["buckets"][0]["card"] == 9);
  CHECK(json["buckets"][0]["sets"][0] == Json::array({0, 1, 2, 3, 4}));
  CHECK(json["verdicts"][0]["status"] == "pass");
  CHECK(json["timing_ms"] == 3.0);

  Json wrong = json;
  wrong["schema"] = "v0";
  CHECK_THROWS_AS(document_from_json(wrong), PreconditionError);
  Json missing = json;
  missing.erase("buckets");
  CHECK_THROWS_AS(document_from_json(missing), PreconditionError);
}

TEST_CASE("document extras are written at top level and read back") {
  Document doc;
  doc.command = "gaps";
  doc.params = {{"h", 5}};
  doc.span_cutoff = 6;
  doc.extra["unattained"] = {32};
  const Json json = to_json(doc);
  CHECK(json["unattained"] == Json::array({32}));
  const Document back = document_from_json(json);
  CHECK(back.extra == doc.extra);
  CHECK(back.span_cutoff == doc.span_cutoff);
  doc.extra["schema"] = "clash";
  CHECK_THROWS_AS(to_json(doc), Error);
}

TEST_CASE("verdict JSON") {
  const Verdict v{"main5", "h=4,k=6", Status::fail, {{IntSet{0, 1, 2, 5, 6, 8}, "not listed"}}, {"note"}};
  const Json json = verdict_to_json(v);
  CHECK(json["counterexamples"][0]["set"] == Json::array({0, 1, 2, 5, 6, 8}));
  CHECK(verdict_from_json(json) == v);
  CHECK_THROWS_AS(status_from_string("maybe"), PreconditionError);
}

TEST_CASE("CSV buckets") {
  std::map<Int, std::vector<IntSet>> buckets;
  buckets[13] = {IntSet{0, 1, 2, 3, 4}};
  buckets[15] = {IntSet{0, 1, 2, 3, 5}, IntSet{0, 2, 3, 4, 5}};
  buckets[14] = {};
  CHECK(buckets_to_csv(buckets) ==
        "cardinality,set,canonical\n"
        "13,0 1 2 3 4,1\n"
        "15,0 1 2 3 5,1\n"
        "15,0 2 3 4 5,0\n");
}

TEST_CASE("text rendering and pass aggregation") {
  const std::vector<Verdict> verdicts{{"a", "h=2,k=5", Status::pass, {}, {}},
                                      {"b", "h=2,k=5", Status::skipped, {}, {"why"}}};
  CHECK(all_pass(verdicts));
  const std::string text = render_verdicts(verdicts);
  CHECK(text.find("[pass] a (h=2,k=5)") != std::string::npos);
  CHECK(text.find("note: why") != std::string::npos);
  CHECK_FALSE(all_pass({{"c", "", Status::fail, {}, {}}}));
}
