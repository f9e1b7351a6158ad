// gammatop: command-line front end for the finite operation-topology lab.
//
//   gammatop analyze <file>               property report for a context or map file
//   gammatop audit <ids...|all>           theorem audit over enumerated instances
//   gammatop counterexample "<query>"     first instance satisfying a literal list
//   gammatop paper-examples               recomputes the reference example claims
//   gammatop enumerate                    topology and operation counts
//
// Exit codes: 0 success, 1 audit failures found, 2 usage or parse error,
// 3 invalid mathematical input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gammatop/gammatop.hpp"

namespace {

using namespace gammatop;

enum ExitCode : int { kOk = 0, kFailuresFound = 1, kUsage = 2, kInvalidInput = 3 };

struct RunConfig {
  std::size_t n = 3;
  std::optional<ClosedVariant> closed;
  std::optional<OpenDirection> open;
  std::optional<CoverMode> cover;
  std::uint64_t seed = kDefaultSeed;
  PoolKind pool = PoolKind::exhaustive;
  std::size_t samples = kDefaultSamples;
  std::string format = "json";
  std::string out;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());

  Variants variants() const {
    Variants v;
    v.closed = closed.value_or(v.closed);
    v.open = open.value_or(v.open);
    v.cover = cover.value_or(v.cover);
    return v;
  }
  PoolSpec pool_spec() const { return {pool, samples, seed}; }
  PinnedVariants pinned() const { return {closed, open, cover}; }
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + cfg.out + "'");
  file << text;
}

void emit(const RunConfig& cfg, const Json& report, const std::string& text) {
  emit(cfg, cfg.format == "text" ? text : report.dump(2) + "\n");
}

Json read_json_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_json(buffer.str());
}

// Labels used to print a diagnostic witness; falls back to a, b, c, ...
std::vector<std::string> witness_labels(const Json& doc) {
  const Json* space = nullptr;
  if (doc.is_object() && doc.contains("space")) space = &doc["space"];
  if (doc.is_object() && doc.contains("domain") && doc["domain"].contains("space")) space = &doc["domain"]["space"];
  if (space && space->is_object() && space->contains("points") && (*space)["points"].is_array()) {
    std::vector<std::string> labels;
    for (const auto& p : (*space)["points"]) {
      if (!p.is_string()) return default_labels(kMaxPoints);
      labels.push_back(p.get<std::string>());
    }
    return labels;
  }
  return default_labels(kMaxPoints);
}

Json error_json(const Error& e, const std::vector<std::string>& labels) {
  Json witness = Json::array();
  for (PointSet s : e.witness()) {
    Json set = Json::array();
    for (std::size_t p : s.points()) set.push_back(p < labels.size() ? labels[p] : std::to_string(p));
    witness.push_back(std::move(set));
  }
  Json out{{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", std::move(witness)}};
  if (e.index()) out["index"] = *e.index();
  return out;
}

// -- analyze ----------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, const std::string& path) {
  Json doc = read_json_file(path);
  try {
    // Counterexample reports carry the instance under "witness".
    const Json& body = doc.is_object() && doc.contains("witness") && doc["witness"].is_object() ? doc["witness"] : doc;
    if (!body.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
    const Json report = body.contains("domain") ? analyze_map(map_from_json(body), cfg.variants())
                                                 : analyze_context(context_from_json(body), cfg.variants());
    emit(cfg, report, render_text(report));
    return kOk;
  } catch (const Error& e) {
    const bool invalid = is_invalid_input(e.code());
    std::cerr << error_json(e, witness_labels(doc)).dump(2) << "\n";
    return invalid ? kInvalidInput : kUsage;
  }
}

// -- audit ------------------------------------------------------------------

std::string audit_summary_line(const AuditVerdict& v, std::size_t rechecked) {
  const auto& spec = find_theorem(v.theorem);
  std::ostringstream os;
  os << spec.name;
  for (std::size_t i = spec.name.size(); i < 6; ++i) os << ' ';
  os << " closed=" << to_string(v.variants.closed) << " open=" << to_string(v.variants.open)
     << " cover=" << to_string(v.variants.cover) << "  scanned=" << v.scanned << " hyp_held=" << v.hyp_held
     << " failures=" << v.failure_total;
  if (!v.failures.empty()) os << " rechecked=" << rechecked << "/" << v.failures.size();
  return os.str();
}

int cmd_audit(const RunConfig& cfg, const std::vector<std::string>& ids) {
  std::vector<const TheoremSpec*> selected;
  std::vector<std::string> skipped;
  const bool all = ids.size() == 1 && ids.front() == "all";
  if (all) {
    for (const auto& spec : theorem_registry()) {
      if (spec.instance_kind == InstanceKind::map && cfg.n > kMaxMapAuditPoints) {
        skipped.emplace_back(spec.name);
        continue;
      }
      selected.push_back(&spec);
    }
  } else {
    for (const auto& id : ids) selected.push_back(&find_theorem(id));
  }

  Json verdicts = Json::array();
  Json summary = Json::array();
  std::string text;
  bool any_failure = false;
  bool sound = true;
  for (const TheoremSpec* spec : selected) {
    for (const AuditVerdict& v : audit_sweep(spec->id, cfg.n, cfg.pinned(), cfg.pool_spec(), cfg.jobs)) {
      std::size_t rechecked = 0;
      for (const Json& f : v.failures) rechecked += recheck_failure(v.theorem, v.variants, f) ? 1 : 0;
      sound = sound && rechecked == v.failures.size();
      any_failure = any_failure || v.failure_total > 0;
      verdicts.push_back(v.to_json());
      summary.push_back(Json{{"theorem", std::string(spec->name)},
                             {"variants", variants_to_json(v.variants)},
                             {"pool", v.pool},
                             {"scanned", v.scanned},
                             {"hyp_held", v.hyp_held},
                             {"failure_total", v.failure_total},
                             {"rechecked", rechecked}});
      text += audit_summary_line(v, rechecked) + "\n";
    }
  }
  for (const auto& name : skipped) text += name + "  skipped: map audits support at most 3 points\n";
  text += std::string("soundness: ") + (sound ? "every reported failure re-validates" : "RECHECK MISMATCH") + "\n";

  Json report;
  report["n"] = cfg.n;
  report["seed"] = cfg.seed;
  report["summary"] = std::move(summary);
  report["skipped"] = skipped;
  report["sound"] = sound;
  report["verdicts"] = std::move(verdicts);
  emit(cfg, report, text);
  return any_failure ? kFailuresFound : kOk;
}

// -- counterexample ---------------------------------------------------------

int cmd_counterexample(const RunConfig& cfg, const std::string& query_text) {
  SearchQuery query;
  query.literals = parse_literals(query_text);
  query.n = cfg.n;
  query.pool = cfg.pool_spec();
  query.variants = cfg.variants();
  const SearchResult result = find_counterexample(query);

  Json report;
  report["query"] = literals_to_string(query.literals);
  report["n"] = cfg.n;
  report["variants"] = variants_to_json(query.variants);
  report["seed"] = cfg.seed;
  report["status"] = result.found() ? "found" : "exhausted";
  report["scanned"] = result.scanned;
  report["instance_space"] = result.instance_space;
  report["witness"] = result.found() ? context_to_json(*result.witness) : Json(nullptr);

  std::string text = "query: " + literals_to_string(query.literals) + "\n";
  if (result.found()) {
    const FiniteSpace& space = result.witness->space();
    text += "found after " + std::to_string(result.scanned) + " of " + std::to_string(result.instance_space) +
            " instances\n";
    text += "points: " + format_set(space, space.full()) + "\n";
    text += "opens: " + format_family(space, space.opens()) + "\n";
    text += "gamma: ";
    for (std::size_t i = 0; i < space.opens().size(); ++i) {
      text += (i ? ", " : "") + format_set(space, space.opens()[i]) + " -> " +
              format_set(space, result.witness->operation().image(i));
    }
    text += "\n";
  } else {
    text += "exhausted: " + std::to_string(result.scanned) + " instances scanned, none satisfies the query\n";
  }
  emit(cfg, report, text);
  return kOk;
}

// -- paper-examples ---------------------------------------------------------

int cmd_paper_examples(const RunConfig& cfg) {
  const WorkedExamplesReport r = audit_worked_examples();
  emit(cfg, r.to_json(), r.to_text());
  return kOk;
}

// -- enumerate --------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, bool list) {
  if (cfg.n == 0 || cfg.n > kMaxEnumeratedPoints) {
    throw Error(ErrorCode::SizeTooLarge, "enumeration supports 1 to 4 points");
  }
  Json sizes = Json::array();
  std::string text;
  for (std::size_t k = 1; k <= cfg.n; ++k) {
    const auto tops = enumerate_topologies(k);
    std::uint64_t operations = 0;
    Json listing = Json::array();
    for (const auto& t : tops) {
      operations += operation_count(t);
      if (list) listing.push_back(Json{{"opens", family_to_json(t, t.opens())}, {"operations", operation_count(t)}});
    }
    Json entry{{"n", k}, {"topologies", tops.size()}, {"operations", operations}};
    if (list) entry["list"] = std::move(listing);
    sizes.push_back(std::move(entry));
    text += "n=" + std::to_string(k) + "  topologies=" + std::to_string(tops.size()) +
            "  operations=" + std::to_string(operations) + "\n";
    if (list) {
      for (const auto& t : tops) text += "  " + format_family(t, t.opens()) + "  " + std::to_string(operation_count(t)) + "\n";
    }
  }
  emit(cfg, Json{{"sizes", std::move(sizes)}}, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topology lab for operation-decorated topologies"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  const std::map<std::string, ClosedVariant> closed_names{{"jankovic", ClosedVariant::jankovic},
                                                          {"kasahara", ClosedVariant::kasahara}};
  const std::map<std::string, OpenDirection> open_names{{"ogata", OpenDirection::ogata},
                                                        {"printed", OpenDirection::printed}};
  const std::map<std::string, CoverMode> cover_names{{"X", CoverMode::whole_space}, {"A", CoverMode::target}};
  const std::map<std::string, PoolKind> pool_names{
      {"exhaustive", PoolKind::exhaustive}, {"builtins", PoolKind::builtins}, {"sample", PoolKind::sample}};

  std::string closed;
  std::string open;
  std::string cover;
  std::string pool;
  auto* closed_opt = app.add_option("--closed-variant", closed, "gamma-closed reading (pins the axis in audits)")
                         ->check(CLI::IsMember({"jankovic", "kasahara"}));
  auto* open_opt = app.add_option("--open-direction", open, "open-operation direction (pins the axis in audits)")
                       ->check(CLI::IsMember({"ogata", "printed"}));
  auto* cover_opt = app.add_option("--cover-mode", cover, "compactness cover target (pins the axis in audits)")
                        ->check(CLI::IsMember({"X", "A"}));
  app.add_option("--n", cfg.n, "point count bound")->capture_default_str();
  app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  auto* pool_opt =
      app.add_option("--pool", pool, "operation pool")->check(CLI::IsMember({"exhaustive", "builtins", "sample"}));
  app.add_option("--samples", cfg.samples, "sampled operations per topology")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--out", cfg.out, "write output to a file instead of stdout");
  app.add_option("--jobs", cfg.jobs, "worker threads for audits")->check(CLI::PositiveNumber);

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "property report for a context or map file");
  analyze->add_option("file", analyze_path, "JSON context, map or counterexample report")->required();

  std::vector<std::string> audit_ids;
  auto* audit_cmd = app.add_subcommand("audit", "audit theorems over enumerated instances");
  audit_cmd->add_option("ids", audit_ids, "theorem ids or 'all'")->required();

  std::string query;
  auto* counterexample = app.add_subcommand("counterexample", "search for an instance satisfying a query");
  counterexample->add_option("query", query, "comma-separated property literals, '!' negates")->required();

  auto* paper = app.add_subcommand("paper-examples", "recompute the reference example claims");

  bool list = false;
  auto* enumerate = app.add_subcommand("enumerate", "topology and operation counts");
  enumerate->add_flag("--list", list, "list every topology");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (closed_opt->count()) cfg.closed = closed_names.at(closed);
  if (open_opt->count()) cfg.open = open_names.at(open);
  if (cover_opt->count()) cfg.cover = cover_names.at(cover);
  if (pool_opt->count()) cfg.pool = pool_names.at(pool);

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, analyze_path);
    if (audit_cmd->parsed()) return cmd_audit(cfg, audit_ids);
    if (counterexample->parsed()) return cmd_counterexample(cfg, query);
    if (paper->parsed()) return cmd_paper_examples(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg, list);
  } catch (const Error& e) {
    std::cerr << error_json(e, default_labels(kMaxPoints)).dump(2) << "\n";
    return is_invalid_input(e.code()) ? kInvalidInput : kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
