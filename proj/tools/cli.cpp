#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sumsets/bounds.hpp"
#include "sumsets/classify.hpp"
#include "sumsets/core.hpp"
#include "sumsets/error.hpp"
#include "sumsets/families.hpp"
#include "sumsets/report.hpp"

namespace sumsets::cli {

namespace {

using report::Document;
using report::Json;

class UsageError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw UsageError("cannot parse " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::pair<Int, Int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const Int v = parse_int(text, "grid value");
    return {v, v};
  }
  const Int lo = parse_int(text.substr(0, dots), "grid bound");
  const Int hi = parse_int(text.substr(dots + 2), "grid bound");
  if (lo > hi) throw UsageError("empty grid range: " + std::string(text));
  return {lo, hi};
}

struct RunConfig {
  std::string command;
  std::string set_literal;
  std::optional<Int> h, k, x, y, z, lo, hi, max_span;
  std::string grid;
  std::string format = "text";
  std::string out_path;
  std::optional<unsigned> workers;
  bool no_dedup = false;
  bool no_timing = false;
  std::string grouping = "disjunctive";
  std::string claim;
  std::string family;
  std::string variant = "a";
};

Int need(const std::optional<Int>& value, const char* flag) {
  if (!value) throw UsageError(std::string(flag) + " is required");
  return *value;
}

unsigned resolve_workers(const RunConfig& cfg) {
  if (cfg.workers) {
    if (*cfg.workers == 0) throw UsageError("--workers must be at least 1");
    return *cfg.workers;
  }
  if (const char* env = std::getenv("SUMSETS_WORKERS"); env != nullptr && *env != '\0') {
    const Int n = parse_int(env, "SUMSETS_WORKERS");
    if (n < 1) throw UsageError("SUMSETS_WORKERS must be at least 1");
    return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Command output in all three formats; the caller picks one.
struct Output {
  std::string text;
  Document doc;
  std::string csv;
  int status = exit_pass;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json runs_json(const RunSet& set) {
  Json out = Json::array();
  for (const Run& r : set.runs()) out.push_back({r.lo, r.hi});
  return out;
}

std::string verdicts_csv(const std::vector<classify::Verdict>& verdicts) {
  std::string out = "claim,range,status,counterexamples\n";
  for (const auto& v : verdicts) {
    std::string sets;
    for (const auto& c : v.counterexamples) {
      if (!sets.empty()) sets += ';';
      for (Int e : c.set) sets += (sets.empty() || sets.back() == ';' ? "" : " ") + std::to_string(e);
    }
    out += v.claim + ",\"" + v.range + "\"," + std::string(classify::to_string(v.status)) + ',' + sets + '\n';
  }
  return out;
}

Output cmd_compute(const RunConfig& cfg) {
  const IntSet set = parse_set_literal(cfg.set_literal);
  const Int h = need(cfg.h, "--h");
  if (h < 1) throw UsageError("--h must be at least 1");
  const RunSet sum = hfold(set, h);
  const Int card = sum.cardinality();

  Output o;
  std::ostringstream text;
  text << sum.to_string() << " | card " << card << '\n';
  o.doc.command = "compute";
  o.doc.params = {{"set", set.vector()}, {"h", h}};
  o.doc.extra["sumset"] = runs_json(sum);
  o.doc.extra["cardinality"] = card;
  if (set.size() >= 2) {
    const NormalForm nf = normalize(set);
    text << "normal form " << nf.normalized.to_string() << " (offset " << nf.offset << ", dilation " << nf.dilation
         << ")\n";
    o.doc.extra["normal_form"] = {
        {"set", nf.normalized.vector()}, {"offset", nf.offset}, {"dilation", nf.dilation}};
  }
  Json bounds_json = Json::array();
  for (const bounds::BoundReport& b : bounds::direct_bounds(set, h)) {
    const bool tight = b.value == card;
    text << "bound " << bounds::to_string(b.kind) << ' ' << b.value << (tight ? " (tight)" : "") << '\n';
    bounds_json.push_back({{"kind", std::string(bounds::to_string(b.kind))}, {"value", b.value}, {"tight", tight}});
  }
  o.doc.extra["bounds"] = std::move(bounds_json);
  o.text = text.str();
  o.csv = "lo,hi\n";
  for (const Run& r : sum.runs()) o.csv += std::to_string(r.lo) + ',' + std::to_string(r.hi) + '\n';
  return o;
}

Output cmd_predict(const RunConfig& cfg) {
  using namespace families;
  const Int h = need(cfg.h, "--h");
  IntSet set;
  Prediction p;
  const std::string& f = cfg.family;
  if (f == "prop31") {
    if (cfg.variant != "a" && cfg.variant != "b") throw UsageError("--variant must be a or b");
    const auto variant = cfg.variant == "a" ? SingletonGapVariant::a : SingletonGapVariant::b;
    const Int x = need(cfg.x, "--x"), y = need(cfg.y, "--y");
    p = prop31_predict(h, x, y, variant);
    set = prop31_set(x, y, variant);
  } else if (f == "prop32") {
    const Int k = need(cfg.k, "--k"), x = need(cfg.x, "--x");
    p = prop32_predict(h, k, x);
    set = interval_minus(k + 2, {x, x + 1, x + 2});
  } else if (f == "prop33") {
    const Int k = need(cfg.k, "--k"), x = need(cfg.x, "--x"), z = need(cfg.z, "--z");
    p = prop33_predict(h, k, x, z);
    set = interval_minus(k + 2, {x, x + 1, z});
  } else if (f == "prop34") {
    const Int k = need(cfg.k, "--k"), x = need(cfg.x, "--x"), y = need(cfg.y, "--y"), z = need(cfg.z, "--z");
    p = prop34_predict(h, k, x, y, z);
    set = interval_minus(k + 2, {x, y, z});
  } else if (f == "thm15" || f == "thm16") {
    const Int k = need(cfg.k, "--k");
    std::vector<Int> holes{need(cfg.x, "--x")};
    if (f == "thm16") holes.push_back(need(cfg.y, "--y"));
    p = tang_xing_predict(h, k, holes);
    set = tang_xing_set(k, holes);
  } else {
    throw UsageError("unknown family '" + f + "' (prop31, prop32, prop33, prop34, thm15, thm16)");
  }

  const RunSet actual = hfold(set, h);
  classify::Verdict v{"predict " + f, "h=" + std::to_string(h), classify::Status::pass, {}, {p.source}};
  if (actual.cardinality() != p.cardinality) {
    v.counterexamples.push_back({set, "predicted |hA| = " + std::to_string(p.cardinality) + ", computed " +
                                          std::to_string(actual.cardinality())});
  } else if (p.structure && *p.structure != actual) {
    v.counterexamples.push_back({set, "predicted hA = " + p.structure->to_string()});
  }
  if (!v.counterexamples.empty()) v.status = classify::Status::fail;

  Output o;
  std::ostringstream text;
  text << "set " << set.to_string() << '\n';
  text << "predicted card " << p.cardinality;
  if (p.structure) text << ", hA = " << p.structure->to_string();
  text << " (" << p.source << ")\n";
  text << "computed " << actual.to_string() << " | card " << actual.cardinality() << '\n';
  text << report::render_verdicts({v});
  o.text = text.str();
  o.doc.command = "predict";
  o.doc.params = {{"family", f}, {"h", h}, {"set", set.vector()}};
  for (auto [name, value] : {std::pair{"k", cfg.k}, {"x", cfg.x}, {"y", cfg.y}, {"z", cfg.z}}) {
    if (value) o.doc.params[name] = *value;
  }
  if (f == "prop31") o.doc.params["variant"] = cfg.variant;
  o.doc.extra["predicted"] = {{"cardinality", p.cardinality},
                              {"structure", p.structure ? runs_json(*p.structure) : Json(nullptr)},
                              {"source", p.source}};
  o.doc.extra["computed"] = {{"cardinality", actual.cardinality()}, {"structure", runs_json(actual)}};
  o.doc.verdicts = {v};
  o.csv = verdicts_csv(o.doc.verdicts);
  o.status = v.status == classify::Status::fail ? exit_verdict_failure : exit_pass;
  return o;
}

Output cmd_classify(const RunConfig& cfg) {
  const Int h = need(cfg.h, "--h"), k = need(cfg.k, "--k");
  const Int lo = need(cfg.lo, "--lo"), hi = need(cfg.hi, "--hi");
  const classify::EnumSpec spec =
      cfg.max_span ? classify::EnumSpec{h, k, *cfg.max_span, lo, hi} : classify::make_spec(h, k, lo, hi);
  const Stopwatch clock;
  const auto report = classify::classify_band(spec, {resolve_workers(cfg), !cfg.no_dedup});

  Output o;
  o.doc = report::classification_document(report);
  o.doc.timing_ms = clock.ms();
  std::ostringstream text;
  text << "h=" << h << ", k=" << k << ", band [" << lo << ", " << hi << "], max span " << spec.max_span;
  text << ", span cutoff " << (report.span_cutoff ? std::to_string(*report.span_cutoff) : "unbounded") << '\n';
  text << report.sets_enumerated << " normal sets enumerated"
       << (report.dedup ? ", one set per reflection pair" : ", all normal sets") << '\n';
  text << report::render_buckets(report.buckets) << report::render_verdicts(report.verdicts);
  o.text = text.str();
  o.csv = report::buckets_to_csv(report.buckets);
  o.status = report::all_pass(report.verdicts) ? exit_pass : exit_verdict_failure;
  return o;
}

std::vector<classify::RangeGrouping> parse_groupings(const std::string& text) {
  using classify::RangeGrouping;
  if (text == "disjunctive") return {RangeGrouping::disjunctive};
  if (text == "conjunctive") return {RangeGrouping::conjunctive};
  if (text == "both") return {RangeGrouping::disjunctive, RangeGrouping::conjunctive};
  throw UsageError("--grouping must be disjunctive, conjunctive or both");
}

Output cmd_verify(const RunConfig& cfg) {
  const auto& ids = classify::claim_ids();
  if (std::find(ids.begin(), ids.end(), cfg.claim) == ids.end()) {
    std::string known;
    for (const auto& id : ids) known += (known.empty() ? "" : ", ") + id;
    throw UsageError("unknown claim '" + cfg.claim + "' (" + known + ")");
  }
  Grid grid;
  if (!cfg.grid.empty()) {
    if (cfg.h || cfg.k) throw UsageError("use either --grid or --h/--k");
    grid = parse_grid(cfg.grid);
  } else {
    const Int h = need(cfg.h, "--h"), k = need(cfg.k, "--k");
    grid = {h, h, k, k};
  }
  const auto groupings = parse_groupings(cfg.grouping);
  const classify::Options options{resolve_workers(cfg), true};

  const Stopwatch clock;
  Output o;
  for (Int h = grid.h_lo; h <= grid.h_hi; ++h) {
    for (Int k = grid.k_lo; k <= grid.k_hi; ++k) {
      auto cell = classify::verify_point(cfg.claim, h, k, options, groupings);
      o.doc.verdicts.insert(o.doc.verdicts.end(), cell.begin(), cell.end());
    }
  }
  o.doc.command = "verify";
  o.doc.timing_ms = clock.ms();
  o.doc.params = {{"claim", cfg.claim},
                  {"h", {grid.h_lo, grid.h_hi}},
                  {"k", {grid.k_lo, grid.k_hi}},
                  {"grouping", cfg.grouping}};

  std::size_t counts[3] = {0, 0, 0};
  for (const auto& v : o.doc.verdicts) ++counts[static_cast<int>(v.status)];
  std::ostringstream text;
  text << report::render_verdicts(o.doc.verdicts);
  text << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " skipped\n";
  o.text = text.str();
  o.csv = verdicts_csv(o.doc.verdicts);
  o.status = report::all_pass(o.doc.verdicts) ? exit_pass : exit_verdict_failure;
  return o;
}

Output cmd_gaps(const RunConfig& cfg) {
  const Int h = need(cfg.h, "--h"), k = need(cfg.k, "--k");
  const Int lo = need(cfg.lo, "--lo"), hi = need(cfg.hi, "--hi");
  const Stopwatch clock;
  const classify::GapScan scan = classify::scan_gaps(h, k, lo, hi, resolve_workers(cfg));

  Output o;
  o.doc.command = "gaps";
  o.doc.params = {{"h", h}, {"k", k}, {"lo", lo}, {"hi", hi}};
  o.doc.span_cutoff = scan.span_cutoff;
  o.doc.timing_ms = clock.ms();
  o.doc.extra["unattained"] = scan.unattained;
  o.doc.extra["sets_enumerated"] = scan.sets_enumerated;
  Json attained = Json::array();
  for (const auto& [card, count] : scan.attained_counts) attained.push_back({{"card", card}, {"count", count}});
  o.doc.extra["attained"] = std::move(attained);

  std::ostringstream text;
  text << '[';
  for (std::size_t i = 0; i < scan.unattained.size(); ++i) text << (i ? ", " : "") << scan.unattained[i];
  text << "]\n";
  text << "exhaustive up to span " << scan.span_cutoff << " (" << scan.sets_enumerated << " normal sets)\n";
  for (const auto& [card, count] : scan.attained_counts) text << "  |hA| = " << card << ": " << count << " sets\n";
  o.text = text.str();
  o.csv = "cardinality,attained_count\n";
  for (Int c = lo; c <= hi; ++c) {
    const auto it = scan.attained_counts.find(c);
    o.csv += std::to_string(c) + ',' + std::to_string(it == scan.attained_counts.end() ? 0 : it->second) + '\n';
  }
  return o;
}

Output cmd_implications(const RunConfig& cfg) {
  const Int k = need(cfg.k, "--k");
  const Stopwatch clock;
  const classify::ImplicationReport table = classify::implication_table(k, resolve_workers(cfg));

  Output o;
  o.doc.command = "implications";
  o.doc.params = {{"k", k}};
  o.doc.span_cutoff = table.max_span;
  o.doc.verdicts = table.verdicts;
  o.doc.timing_ms = clock.ms();
  o.doc.extra["sets_enumerated"] = table.sets_enumerated;
  Json pairs = Json::array();
  for (const auto& [key, count] : table.pairs) pairs.push_back({{"two", key.first}, {"three", key.second}, {"count", count}});
  o.doc.extra["pairs"] = std::move(pairs);

  std::ostringstream text;
  text << "k=" << k << ", exhaustive up to span " << table.max_span << " (" << table.sets_enumerated
       << " normal sets)\n";
  text << "  |2A|  |3A|  sets\n";
  for (const auto& [key, count] : table.pairs) {
    text << "  " << key.first << "  " << key.second << "  " << count << '\n';
  }
  text << report::render_verdicts(table.verdicts);
  o.text = text.str();
  o.csv = "two_fold,three_fold,count\n";
  for (const auto& [key, count] : table.pairs) {
    o.csv += std::to_string(key.first) + ',' + std::to_string(key.second) + ',' + std::to_string(count) + '\n';
  }
  o.status = report::all_pass(table.verdicts) ? exit_pass : exit_verdict_failure;
  return o;
}

Output dispatch(const RunConfig& cfg) {
  if (cfg.command == "compute") return cmd_compute(cfg);
  if (cfg.command == "predict") return cmd_predict(cfg);
  if (cfg.command == "classify") return cmd_classify(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "gaps") return cmd_gaps(cfg);
  return cmd_implications(cfg);
}

std::string render(const Output& o, const RunConfig& cfg) {
  if (cfg.format == "json") {
    Document doc = o.doc;
    if (cfg.no_timing) doc.timing_ms = 0;
    return report::to_json(doc).dump(2) + '\n';
  }
  if (cfg.format == "csv") return o.csv;
  return o.text;
}

template <class T>
void add_value(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

IntSet parse_set_literal(std::string_view text) {
  std::vector<Int> elements;
  while (true) {
    const auto comma = text.find(',');
    elements.push_back(parse_int(text.substr(0, comma), "set element"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::vector<Int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw UsageError("set literal repeats an element");
  }
  return IntSet(std::move(sorted));
}

Grid parse_grid(std::string_view text) {
  std::optional<std::pair<Int, Int>> h, k;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view part = trim(text.substr(0, comma));
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw UsageError("grid part needs name=range: '" + std::string(part) + "'");
    const std::string_view name = trim(part.substr(0, eq));
    auto& slot = name == "h" ? h : name == "k" ? k : throw UsageError("grid names are h and k");
    if (slot) throw UsageError("grid repeats " + std::string(name));
    slot = parse_range(part.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (!h || !k) throw UsageError("grid needs both h and k, e.g. h=2..6,k=5..10");
  return {h->first, h->second, k->first, k->second};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact h-fold sumsets, bounds, and exhaustive checks of inverse theorems", "sumsets"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out_path, "write the report here instead of stdout");
    add_value(sub, "--workers", cfg.workers, "enumeration threads (default: $SUMSETS_WORKERS, else all cores)");
    sub->add_flag("--no-timing", cfg.no_timing, "write timing_ms as 0 so JSON is reproducible byte for byte");
  };

  auto* compute = app.add_subcommand("compute", "hA for an explicit set");
  compute->add_option("--set", cfg.set_literal, "comma-separated integers")->required();
  add_value(compute, "--h", cfg.h, "number of summands");
  common(compute);

  auto* predict = app.add_subcommand("predict", "closed-form |hA| for a family member, checked against hA");
  predict->add_option("family", cfg.family, "prop31, prop32, prop33, prop34, thm15 or thm16")->required();
  for (auto [flag, slot] : {std::pair{"--h", &cfg.h}, {"--k", &cfg.k}, {"--x", &cfg.x}, {"--y", &cfg.y}, {"--z", &cfg.z}}) {
    add_value(predict, flag, *slot, "");
  }
  predict->add_option("--variant", cfg.variant, "prop31 shape: a = {0} u [x,y], b = its mirror");
  common(predict);

  auto* classify_cmd = app.add_subcommand("classify", "bucket every normal k-set by |hA| over a band");
  for (auto [flag, slot] : {std::pair{"--h", &cfg.h}, {"--k", &cfg.k}, {"--lo", &cfg.lo}, {"--hi", &cfg.hi}}) {
    add_value(classify_cmd, flag, *slot, "");
  }
  add_value(classify_cmd, "--max-span", cfg.max_span, "override the chain-bound span cutoff");
  classify_cmd->add_flag("--no-dedup", cfg.no_dedup, "keep both members of each reflection pair");
  common(classify_cmd);

  auto* verify = app.add_subcommand("verify", "check a claim at one point or over a grid");
  verify->add_option("claim", cfg.claim, "claim id")->required();
  add_value(verify, "--h", cfg.h, "");
  add_value(verify, "--k", cfg.k, "");
  verify->add_option("--grid", cfg.grid, "h=a..b,k=c..d");
  verify->add_option("--grouping", cfg.grouping, "range reading for main4..main6: disjunctive, conjunctive or both");
  common(verify);

  auto* gaps = app.add_subcommand("gaps", "cardinalities in a band that no k-set attains");
  for (auto [flag, slot] : {std::pair{"--h", &cfg.h}, {"--k", &cfg.k}, {"--lo", &cfg.lo}, {"--hi", &cfg.hi}}) {
    add_value(gaps, flag, *slot, "");
  }
  common(gaps);

  auto* implications = app.add_subcommand("implications", "joint (|2A|, |3A|) table and the implications between them");
  add_value(implications, "--k", cfg.k, "");
  common(implications);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const Output o = dispatch(cfg);
    const std::string body = render(o, cfg);
    if (cfg.out_path.empty()) {
      out << body;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      file << body;
      if (!file) throw UsageError("cannot write " + cfg.out_path);
    }
    return o.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace sumsets::cli
