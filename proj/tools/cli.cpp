#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "billiards/classify.hpp"
#include "billiards/enumerate.hpp"
#include "billiards/errors.hpp"
#include "billiards/graph6.hpp"
#include "billiards/graph_spec.hpp"
#include "billiards/orbits.hpp"
#include "billiards/serialize.hpp"
#include "billiards/verify.hpp"

namespace billiards::cli {

namespace {

using nlohmann::json;

int default_workers() {
  const char* env = std::getenv("BILLIARD_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) throw InputError(std::string("BILLIARD_WORKERS must be a positive integer, got '") + env + "'");
  return static_cast<int>(v);
}

// Either the --out file or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }
  bool to_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct Common {
  int workers = 1;
  std::string out;
};

struct RangeFlags {
  std::optional<int> min_n, max_n, m, n, max_m, max_part;
  int samples = 64;
  std::uint64_t seed = kDefaultSeed;
};

void add_range_flags(CLI::App* cmd, RangeFlags& r) {
  cmd->add_option("--min-n", r.min_n, "Smallest vertex count");
  cmd->add_option("--max-n", r.max_n, "Largest vertex count");
  cmd->add_option("--m", r.m, "Fixed m (orbit-sizes)");
  cmd->add_option("--n", r.n, "Fixed n (orbit-sizes)");
  cmd->add_option("--max-m", r.max_m, "Largest clique size");
  cmd->add_option("--max-part", r.max_part, "Largest building block");
  cmd->add_option("--samples", r.samples, "Random graphs drawn where sampling applies")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", r.seed, "Seed for sampled ranges");
}

VerifyParams to_params(const RangeFlags& r, int workers) {
  VerifyParams p;
  p.min_n = r.min_n;
  p.max_n = r.max_n;
  p.m = r.m;
  p.n = r.n;
  p.max_m = r.max_m;
  p.max_part = r.max_part;
  p.samples = r.samples;
  p.seed = r.seed;
  p.workers = workers;
  return p;
}

EarlyExit parse_early_exit(const std::string& s) {
  if (s == "ensnaring") return EarlyExit::Ensnaring;
  if (s == "expelling") return EarlyExit::Expelling;
  return EarlyExit::None;
}

int run_classify(const std::vector<std::string>& specs, const std::string& early, const Common& c, std::ostream& out) {
  Sink sink(c.out, out);
  for (const std::string& spec : specs) {
    const MaterializedGraph g = parse_graph_spec(spec);
    json j = to_json(classify(g, {c.workers, parse_early_exit(early)}));
    j["graph"] = format_graph_spec(g);
    *sink << j.dump() << '\n';
  }
  return kOk;
}

int run_orbits(const std::string& spec, bool full, const Common& c, std::ostream& out) {
  const MaterializedGraph g = parse_graph_spec(spec);
  Sink sink(c.out, out);
  const auto orbits = all_orbits(g, {c.workers, {}});
  std::map<std::uint64_t, std::uint64_t> periods;
  std::uint64_t noncontractible = 0;
  for (const OrbitSummary& o : orbits) {
    if (full) *sink << to_json(o).dump() << '\n';
    ++periods[o.period];
    if (!o.contractible) ++noncontractible;
  }
  json histogram = json::object();
  for (const auto& [p, k] : periods) histogram[std::to_string(p)] = k;
  const json summary = {{"graph", format_graph_spec(g)},
                        {"states", state_space_size(g.order())},
                        {"orbits", orbits.size()},
                        {"noncontractible", noncontractible},
                        {"periods", histogram}};
  *sink << json{{"summary", summary}}.dump() << '\n';
  return kOk;
}

int run_trace(const std::string& spec, const std::string& start, std::uint64_t steps, const Common& c,
              std::ostream& out) {
  const MaterializedGraph g = parse_graph_spec(spec);
  const BilliardState s = parse_state(start);
  Sink sink(c.out, out);
  for (const TraceRecord& r : trace(g, s, steps)) *sink << to_json(r).dump() << '\n';
  return kOk;
}

std::string check_line(const CheckReport& r) {
  std::string line = r.id + ": " + (r.passed ? "pass" : "FAIL") + " (" + std::to_string(r.instances) + " instances, " +
                     std::to_string(r.seconds) + " s)";
  if (r.counterexample) line += " counterexample " + r.counterexample->graph + ": " + r.counterexample->detail;
  return line;
}

int run_verify(const std::string& id, const RangeFlags& flags, const Common& c, std::ostream& out) {
  std::vector<std::string> ids;
  if (id == "all") {
    for (std::string_view s : check_ids()) ids.emplace_back(s);
  } else {
    ids.push_back(id);
  }
  const VerifyParams params = to_params(flags, c.workers);
  json reports = json::array();
  bool ok = true;
  for (const std::string& one : ids) {
    const CheckReport r = run_check(one, params);
    ok = ok && r.passed;
    out << check_line(r) << std::endl;
    reports.push_back(to_json(r));
  }
  if (!c.out.empty()) {
    Sink sink(c.out, out);
    *sink << (ids.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  }
  return ok ? kOk : kFailed;
}

int run_conjecture_cmd(const std::string& id, const RangeFlags& flags, const Common& c, std::ostream& out) {
  std::vector<std::string> ids;
  if (id == "all") {
    for (std::string_view s : conjecture_ids()) ids.emplace_back(s);
  } else {
    ids.push_back(id);
  }
  const VerifyParams params = to_params(flags, c.workers);
  json reports = json::array();
  bool consistent = true;
  for (const std::string& one : ids) {
    const ConjectureReport r = run_conjecture(one, params);
    consistent = consistent && !r.refuted();
    std::string line = r.id + ": " + (r.refuted() ? "refuted" : "consistent") + " (" + std::to_string(r.instances) +
                       " instances, " + std::to_string(r.counterexamples.size()) + " counterexamples, " +
                       std::to_string(r.seconds) + " s)";
    if (r.refuted()) line += " first " + r.counterexamples[0].graph + ": " + r.counterexamples[0].detail;
    out << line << std::endl;
    reports.push_back(to_json(r));
  }
  if (!c.out.empty()) {
    Sink sink(c.out, out);
    *sink << (ids.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  }
  return consistent ? kOk : kFailed;
}

int run_scan(int n, bool connected, bool iso_dedup, const std::string& format, const Common& c, std::ostream& out) {
  if (n < 1 || n > 8) throw RangeError("scan supports 1 <= n <= 8, got n=" + std::to_string(n));
  std::vector<MaterializedGraph> graphs;
  for (Graph& g : enumerate_graphs(n, {.connected = connected, .iso_dedup = iso_dedup})) graphs.emplace_back(std::move(g));

  Sink sink(c.out, out);
  std::map<std::string, std::uint64_t> counts{{"ensnaring", 0}, {"expelling", 0}, {"mixed", 0}, {"revolutionary", 0}};
  std::uint64_t errors = 0;
  const bool jsonl = format == "jsonl";
  classify_many(graphs, {c.workers, EarlyExit::None}, [&](std::size_t k, const ClassifyResult& result) {
    json line = {{"graph6", to_graph6(graphs[k].graph())}};
    if (const auto* cl = std::get_if<Classification>(&result)) {
      ++counts[to_string(cl->kind)];
      if (cl->revolutionary) ++counts["revolutionary"];
      line["classification"] = to_json(*cl);
    } else {
      ++errors;
      line["error"] = std::get<std::string>(result);
    }
    if (jsonl) *sink << line.dump() << '\n';
  });

  json summary = {{"n", n}, {"connected", connected}, {"isoDedup", iso_dedup}, {"graphs", graphs.size()}, {"errors", errors}};
  for (const auto& [k, v] : counts) summary[k] = v;
  if (jsonl) {
    *sink << json{{"summary", summary}}.dump() << '\n';
    if (sink.to_file()) out << summary.dump() << '\n';
  } else {
    *sink << "n,connected,iso_dedup,graphs,ensnaring,expelling,mixed,revolutionary,errors\n"
          << n << ',' << connected << ',' << iso_dedup << ',' << graphs.size() << ',' << counts["ensnaring"] << ','
          << counts["expelling"] << ',' << counts["mixed"] << ',' << counts["revolutionary"] << ',' << errors << '\n';
  }
  return errors == 0 ? kOk : kInternal;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Refractive toric promotion on graphs", "billiards"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "billiards 0.1.0");

  Common common;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--workers", common.workers, "Worker threads (default: $BILLIARD_WORKERS or 1)")
        ->check(CLI::Range(1, 1024));
    cmd->add_option("--out", common.out, "Write results to this file instead of stdout");
  };

  std::vector<std::string> specs;
  std::string spec, start, early = "none", check_id, conjecture_id, format = "jsonl";
  bool full = false, connected = false, iso_dedup = false;
  std::uint64_t steps = 0;
  int scan_n = 0;
  RangeFlags range;

  auto* classify_cmd = app.add_subcommand("classify", "Classify graphs as ensnaring, expelling or mixed");
  classify_cmd->add_option("--graph", specs, "Graph spec (repeatable)")->required();
  classify_cmd->add_option("--early-exit", early, "Stop once this question is settled")
      ->check(CLI::IsMember({"none", "ensnaring", "expelling"}));
  add_common(classify_cmd);

  auto* orbits_cmd = app.add_subcommand("orbits", "Enumerate all orbits of the step map");
  orbits_cmd->add_option("--graph", spec, "Graph spec")->required();
  orbits_cmd->add_flag("--full", full, "Print every orbit before the summary");
  add_common(orbits_cmd);

  auto* trace_cmd = app.add_subcommand("trace", "Print the step-by-step trajectory of one state");
  trace_cmd->add_option("--graph", spec, "Graph spec")->required();
  trace_cmd->add_option("--start", start, "Start state, perm=...;i=I;eps=+1|-1")->required();
  trace_cmd->add_option("--steps", steps, "Number of steps")->required();
  add_common(trace_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem check");
  verify_cmd->add_option("--check", check_id, "Check id, or 'all'")->required();
  add_range_flags(verify_cmd, range);
  add_common(verify_cmd);

  auto* conj_cmd = app.add_subcommand("conjecture", "Search for counterexamples to a conjecture");
  conj_cmd->add_option("--id", conjecture_id, "Conjecture id, or 'all'")->required();
  add_range_flags(conj_cmd, range);
  add_common(conj_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "Classify every graph of one order");
  scan_cmd->add_option("--n", scan_n, "Vertex count")->required();
  scan_cmd->add_flag("--connected", connected, "Only connected graphs");
  scan_cmd->add_flag("--iso-dedup", iso_dedup, "One graph per isomorphism class");
  scan_cmd->add_option("--format", format, "jsonl (per graph plus summary) or csv (summary only)")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  add_common(scan_cmd);

  auto* list_cmd = app.add_subcommand("list", "List check and conjecture ids");

  try {
    common.workers = default_workers();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*classify_cmd) return run_classify(specs, early, common, out);
    if (*orbits_cmd) return run_orbits(spec, full, common, out);
    if (*trace_cmd) return run_trace(spec, start, steps, common, out);
    if (*verify_cmd) return run_verify(check_id, range, common, out);
    if (*conj_cmd) return run_conjecture_cmd(conjecture_id, range, common, out);
    if (*scan_cmd) return run_scan(scan_n, connected, iso_dedup, format, common, out);
    if (*list_cmd) {
      for (std::string_view id : check_ids()) out << "check " << id << '\n';
      for (std::string_view id : conjecture_ids()) out << "conjecture " << id << '\n';
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "out of range: " << e.what() << '\n';
    return kRange;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace billiards::cli
