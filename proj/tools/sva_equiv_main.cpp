// SPDX-License-Identifier: Apache-2.0
//
// sva-equiv: batch evaluation CLI over the property-equivalence toolkit.
// Subcommands: classify, normalize, wrap, check, metrics, eval.
#include <filesystem>
#include <fstream>
#include <set>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "svaeq/harness.hpp"
#include "svaeq/lexer.hpp"
#include "svaeq/metrics.hpp"
#include "svaeq/normalize.hpp"
#include "svaeq/parser.hpp"
#include "svaeq/reward.hpp"
#include "svaeq/smt.hpp"
#include "svaeq/tcl.hpp"
#include "svaeq/verdict.hpp"
#include "svaeq/wrapper.hpp"

using nlohmann::json;
using namespace svaeq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;

std::string read_all(const std::string &path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f)
    throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// plain text: one SVA per non-empty line; JSONL: reference_sva or sva field
std::vector<std::pair<std::string, std::string>>
read_sva_rows(const std::string &path, bool jsonl) {
  std::vector<std::pair<std::string, std::string>> rows; // (id, sva)
  std::string text = read_all(path);
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (!jsonl) {
      rows.emplace_back("row" + std::to_string(lineno), line);
      continue;
    }
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw IoError("line " + std::to_string(lineno) + ": malformed JSON");
    std::string id = j.contains("id") && j["id"].is_string()
                         ? j["id"].get<std::string>()
                         : "row" + std::to_string(lineno);
    std::string sva;
    for (const char *field : {"reference_sva", "sva"})
      if (j.contains(field) && j[field].is_string())
        sva = j[field].get<std::string>();
    if (sva.empty())
      throw IoError("line " + std::to_string(lineno) +
                    ": no reference_sva/sva field");
    rows.emplace_back(id, sva);
  }
  return rows;
}

Profile parse_profile(const std::string &s) {
  if (s == "lint")
    return Profile::Lint;
  if (s == "pec")
    return Profile::Pec;
  throw ConfigError("profile must be lint or pec");
}

CheckConfig::Backend parse_backend(const std::string &s) {
  if (s == "enumerate")
    return CheckConfig::Backend::Enumerate;
  if (s == "smt")
    return CheckConfig::Backend::Smt;
  throw ConfigError("backend must be enumerate or smt");
}

std::vector<std::string> split_command(const std::string &cmd) {
  std::istringstream is(cmd);
  std::vector<std::string> parts;
  std::string p;
  while (is >> p)
    parts.push_back(p);
  return parts;
}

json verdict_json(const CheckResult &result) {
  json j;
  j["verdict"] = to_string(result.verdict.value);
  if (result.verdict.reason)
    j["reason"] = to_string(*result.verdict.reason);
  j["outcome_1"] = to_string(result.outcome_1);
  j["outcome_2"] = to_string(result.outcome_2);
  j["wall_seconds"] = result.wall_seconds;
  if (result.counterexample) {
    json cex = json::object();
    for (std::size_t i = 0; i < result.counterexample->signals.size(); ++i)
      cex[result.counterexample->signals[i]] =
          result.counterexample->bits_of(i);
    j["counterexample"] = cex;
  }
  return j;
}

int cmd_classify(const std::string &input, bool jsonl) {
  auto rows = read_sva_rows(input, jsonl);
  ClassHistogram hist;
  hist.counts[TclClass::C1] = 0;
  hist.counts[TclClass::C2] = 0;
  hist.counts[TclClass::C3] = 0;
  std::size_t idx = 0;
  for (const auto &[id, sva] : rows) {
    try {
      TclClass cls = classify(sva);
      ++hist.counts[cls];
      std::cout << id << "\t" << to_string(cls) << "\n";
    } catch (const Error &e) {
      hist.errors.emplace_back(idx, e.what());
      std::cout << id << "\terror\n";
    }
    ++idx;
  }
  json j;
  for (const auto &[cls, n] : hist.counts)
    j[to_string(cls)] = n;
  j["errors"] = hist.errors.size();
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_normalize(const std::string &input, bool jsonl,
                  const std::string &profile, const std::string &report_path,
                  const std::string &collapse) {
  NormalizeOptions opts;
  opts.profile = parse_profile(profile);
  if (collapse == "hi")
    opts.range_collapse = RangeCollapse::Hi;
  else if (collapse != "lo")
    throw ConfigError("range collapse endpoint must be lo or hi");

  auto rows = read_sva_rows(input, jsonl);
  std::ofstream report_file;
  if (!report_path.empty()) {
    report_file.open(report_path);
    if (!report_file)
      throw IoError("cannot write " + report_path);
  }
  for (const auto &[id, sva] : rows) {
    auto res = normalize(SourceText{sva, Origin::Candidate}, opts);
    std::cout << res.after.raw << "\n";
    if (report_file) {
      json fired = json::object();
      for (const auto &[rule, n] : res.report.fired)
        fired[to_string(rule)] = n;
      json j = {{"id", id},
                {"profile", to_string(opts.profile)},
                {"before", sva},
                {"after", res.after.raw},
                {"fired", fired}};
      report_file << j.dump() << "\n";
    }
  }
  return kExitOk;
}

int cmd_wrap(const std::string &input, bool jsonl, const std::string &outdir,
             const std::string &profile) {
  WrapperOptions opts;
  opts.profile = parse_profile(profile);
  std::filesystem::create_directories(outdir);
  auto rows = read_sva_rows(input, jsonl);
  std::size_t failures = 0;
  for (const auto &[id, sva] : rows) {
    try {
      WrapperModule mod = synthesize_wrapper(SourceText{sva, Origin::Candidate},
                                             opts);
      auto path = std::filesystem::path(outdir) / (id + ".sv");
      std::ofstream f(path);
      if (!f)
        throw IoError("cannot write " + path.string());
      f << mod.text;
      std::cout << id << "\t" << path.string() << "\n";
    } catch (const Error &e) {
      ++failures;
      std::cerr << id << "\terror: " << e.what() << "\n";
    }
  }
  return failures == rows.size() && !rows.empty() ? kExitIo : kExitOk;
}

int cmd_check(const std::string &ref, const std::string &cand, int depth,
              double timeout, const std::string &backend,
              const std::string &solver, int max_enum_bits,
              const std::string &profile) {
  CheckConfig cfg;
  cfg.depth_K = depth;
  cfg.timeout_seconds = timeout;
  cfg.backend = parse_backend(backend);
  cfg.max_enum_bits = max_enum_bits;
  if (!solver.empty())
    cfg.solver_cmd = split_command(solver);

  NormalizeOptions nopts;
  nopts.profile = parse_profile(profile);
  auto norm_ref = normalize(SourceText{ref, Origin::Reference}, nopts);
  auto norm_cand = normalize(SourceText{cand, Origin::Candidate}, nopts);

  try {
    CheckResult result =
        check_equivalence(norm_cand.after, norm_ref.after, cfg);
    std::cout << verdict_json(result).dump(2) << "\n";
    return kExitOk;
  } catch (const SyntaxError &e) {
    json j;
    j["error"] = "syntax";
    j["side"] =
        e.side == SyntaxError::Side::Candidate ? "candidate" : "reference";
    j["detail"] = e.what();
    std::cout << j.dump(2) << "\n";
    return kExitConfig;
  }
}

int cmd_metrics(const std::string &input, int replicates, uint64_t seed,
                double level) {
  std::string text = read_all(input);
  std::istringstream is(text);
  std::string line;
  std::vector<TaskOutcome> tasks;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("n") ||
        !j.contains("c"))
      throw IoError("line " + std::to_string(lineno) +
                    ": expected {task_id, n, c}");
    TaskOutcome t;
    t.task_id = j.contains("task_id") && j["task_id"].is_string()
                    ? j["task_id"].get<std::string>()
                    : "task" + std::to_string(lineno);
    t.n = j["n"].get<int>();
    t.c = j["c"].get<int>();
    tasks.push_back(std::move(t));
  }
  if (tasks.empty())
    throw IoError("no tasks in " + input);

  int min_n = tasks[0].n;
  for (const auto &t : tasks)
    min_n = std::min(min_n, t.n);

  json out;
  for (int k : {1, 5, 10}) {
    if (k > min_n)
      continue;
    auto ci = bootstrap_ci(tasks, k, replicates, seed, level);
    out["pass@" + std::to_string(k)] = {{"mean", mean_pass_at_k(tasks, k)},
                                        {"ci_lo", ci.lo},
                                        {"ci_hi", ci.hi}};
  }
  out["tasks"] = tasks.size();
  out["replicates"] = replicates;
  out["seed"] = seed;
  out["level"] = level;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

// key=value config mirroring the eval flags; flags given on the command
// line win on conflict
struct EvalConfigFile {
  std::map<std::string, std::string> values;

  static EvalConfigFile load(const std::string &path) {
    EvalConfigFile cfg;
    std::ifstream f(path);
    if (!f)
      throw ConfigError("cannot read config file " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
      ++lineno;
      std::size_t hash = line.find('#');
      if (hash != std::string::npos)
        line.erase(hash);
      std::size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos)
        continue;
      std::size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": expected key=value");
      auto trim = [](std::string s) {
        std::size_t x = s.find_first_not_of(" \t\r");
        std::size_t y = s.find_last_not_of(" \t\r");
        return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
      };
      cfg.values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return cfg;
  }

  void apply(const std::string &key, const CLI::Option *cli_opt,
             const std::function<void(const std::string &)> &set) const {
    auto it = values.find(key);
    if (it == values.end())
      return;
    if (cli_opt && cli_opt->count() > 0)
      return; // CLI wins
    set(it->second);
  }
};

int cmd_eval(const std::string &input, int depth, double timeout, int workers,
             const std::string &backend, const std::string &solver,
             int max_enum_bits, const std::string &report_path,
             const std::string &dump_path, const std::string &denominator) {
  if (denominator != "all" && denominator != "supported")
    throw ConfigError("denominator must be all or supported");

  RunOptions opts;
  opts.check.depth_K = depth;
  opts.check.timeout_seconds = timeout;
  opts.check.backend = parse_backend(backend);
  opts.check.max_enum_bits = max_enum_bits;
  if (!solver.empty())
    opts.check.solver_cmd = split_command(solver);
  opts.workers = workers;

  IngestResult ingested = ingest(input);
  for (const auto &[line, msg] : ingested.errors)
    std::cerr << "line " << line << ": " << msg << "\n";
  if (ingested.rows.empty()) {
    std::cerr << "no usable rows in " << input << "\n";
    return kExitIo;
  }

  auto results = run_batch(ingested.rows, opts);
  EvalReport rep = report(results);

  std::cout << rep.to_text();
  double headline = denominator == "all" ? rep.strict_func_at_1_all
                                         : rep.strict_func_at_1_supported;
  std::cout << "headline strict Func@1 (" << denominator << "): "
            << headline * 100.0 << "%\n";

  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f)
      throw IoError("cannot write " + report_path);
    f << rep.to_json() << "\n";
  }
  if (!dump_path.empty()) {
    std::ofstream f(dump_path);
    if (!f)
      throw IoError("cannot write " + dump_path);
    f << results_to_csv(results);
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"SVA property-equivalence toolkit"};
  app.require_subcommand(1);

  // classify
  auto *classify_cmd =
      app.add_subcommand("classify", "Assign diagnostic TCL classes");
  std::string cl_input = "-";
  bool cl_jsonl = false;
  classify_cmd->add_option("--input,-i", cl_input, "SVA file or - for stdin");
  classify_cmd->add_flag("--jsonl", cl_jsonl, "input is JSONL rows");

  // normalize
  auto *norm_cmd = app.add_subcommand("normalize", "Apply rewrite rules");
  std::string nm_input = "-", nm_profile = "lint", nm_report, nm_collapse = "lo";
  bool nm_jsonl = false;
  norm_cmd->add_option("--input,-i", nm_input, "SVA file or - for stdin");
  norm_cmd->add_flag("--jsonl", nm_jsonl, "input is JSONL rows");
  norm_cmd->add_option("--profile", nm_profile, "lint or pec");
  norm_cmd->add_option("--report", nm_report, "per-row report JSONL path");
  norm_cmd->add_option("--range-collapse", nm_collapse,
                       "endpoint kept by R13/R14/R15: lo or hi");

  // wrap
  auto *wrap_cmd =
      app.add_subcommand("wrap", "Synthesize free-input wrapper modules");
  std::string wr_input = "-", wr_outdir = ".", wr_profile = "pec";
  bool wr_jsonl = false;
  wrap_cmd->add_option("--input,-i", wr_input, "SVA file or - for stdin");
  wrap_cmd->add_flag("--jsonl", wr_jsonl, "input is JSONL rows");
  wrap_cmd->add_option("--outdir,-o", wr_outdir, "output directory");
  wrap_cmd->add_option("--profile", wr_profile, "lint or pec");

  // check
  auto *check_cmd =
      app.add_subcommand("check", "Decide one candidate/reference pair");
  std::string ck_ref, ck_cand, ck_backend = "enumerate", ck_solver,
              ck_profile = "pec";
  int ck_depth = 20, ck_bits = 20;
  double ck_timeout = 60.0;
  check_cmd->add_option("--ref", ck_ref, "reference SVA")->required();
  check_cmd->add_option("--cand", ck_cand, "candidate SVA")->required();
  check_cmd->add_option("--depth", ck_depth, "BMC depth in cycles");
  check_cmd->add_option("--timeout", ck_timeout, "budget in seconds");
  check_cmd->add_option("--backend", ck_backend, "enumerate or smt");
  check_cmd->add_option("--solver", ck_solver, "external solver command");
  check_cmd->add_option("--max-enum-bits", ck_bits,
                        "enumeration capacity in bits");
  check_cmd->add_option("--profile", ck_profile,
                        "normalization profile before checking");

  // metrics
  auto *metrics_cmd =
      app.add_subcommand("metrics", "pass@k and bootstrap intervals");
  std::string mt_input = "-";
  int mt_replicates = 10000;
  uint64_t mt_seed = 20240601;
  double mt_level = 0.95;
  metrics_cmd->add_option("--input,-i", mt_input, "TaskOutcome JSONL");
  metrics_cmd->add_option("--replicates", mt_replicates, "bootstrap replicates");
  metrics_cmd->add_option("--seed", mt_seed, "bootstrap seed");
  metrics_cmd->add_option("--level", mt_level, "confidence level");

  // eval
  auto *eval_cmd = app.add_subcommand("eval", "Batch benchmark evaluation");
  std::string ev_input, ev_backend = "enumerate", ev_solver, ev_report,
              ev_dump, ev_denominator = "all", ev_config;
  int ev_depth = 20, ev_workers = 16, ev_bits = 20;
  double ev_timeout = 60.0;
  auto *o_input = eval_cmd->add_option("--input", ev_input, "EvalRow JSONL");
  auto *o_depth = eval_cmd->add_option("--depth", ev_depth,
                                       "BMC depth in cycles");
  auto *o_timeout =
      eval_cmd->add_option("--timeout", ev_timeout, "per-candidate budget");
  auto *o_workers =
      eval_cmd->add_option("--workers", ev_workers, "worker pool size");
  auto *o_backend =
      eval_cmd->add_option("--backend", ev_backend, "enumerate or smt");
  auto *o_solver =
      eval_cmd->add_option("--solver", ev_solver, "external solver command");
  auto *o_bits = eval_cmd->add_option("--max-enum-bits", ev_bits,
                                      "enumeration capacity in bits");
  auto *o_report =
      eval_cmd->add_option("--report", ev_report, "report JSON path");
  auto *o_dump =
      eval_cmd->add_option("--dump", ev_dump, "per-candidate CSV path");
  auto *o_denominator =
      eval_cmd->add_option("--denominator", ev_denominator,
                           "headline denominator: all or supported");
  eval_cmd->add_option("--config", ev_config,
                       "key=value config mirroring the flags; flags win");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (classify_cmd->parsed())
      return cmd_classify(cl_input, cl_jsonl);
    if (norm_cmd->parsed())
      return cmd_normalize(nm_input, nm_jsonl, nm_profile, nm_report,
                           nm_collapse);
    if (wrap_cmd->parsed())
      return cmd_wrap(wr_input, wr_jsonl, wr_outdir, wr_profile);
    if (check_cmd->parsed())
      return cmd_check(ck_ref, ck_cand, ck_depth, ck_timeout, ck_backend,
                       ck_solver, ck_bits, ck_profile);
    if (metrics_cmd->parsed())
      return cmd_metrics(mt_input, mt_replicates, mt_seed, mt_level);
    if (eval_cmd->parsed()) {
      if (!ev_config.empty()) {
        auto cfg = EvalConfigFile::load(ev_config);
        static const std::set<std::string> known = {
            "input",  "depth", "timeout",       "workers", "backend",
            "solver", "report", "dump",         "denominator",
            "max-enum-bits", "max_enum_bits"};
        for (const auto &[key, _] : cfg.values)
          if (!known.count(key))
            throw ConfigError("unknown config key '" + key + "'");
        cfg.apply("input", o_input, [&](const std::string &v) { ev_input = v; });
        cfg.apply("depth", o_depth,
                  [&](const std::string &v) { ev_depth = std::stoi(v); });
        cfg.apply("timeout", o_timeout,
                  [&](const std::string &v) { ev_timeout = std::stod(v); });
        cfg.apply("workers", o_workers,
                  [&](const std::string &v) { ev_workers = std::stoi(v); });
        cfg.apply("backend", o_backend,
                  [&](const std::string &v) { ev_backend = v; });
        cfg.apply("solver", o_solver,
                  [&](const std::string &v) { ev_solver = v; });
        for (const char *key : {"max-enum-bits", "max_enum_bits"})
          cfg.apply(key, o_bits,
                    [&](const std::string &v) { ev_bits = std::stoi(v); });
        cfg.apply("report", o_report,
                  [&](const std::string &v) { ev_report = v; });
        cfg.apply("dump", o_dump, [&](const std::string &v) { ev_dump = v; });
        cfg.apply("denominator", o_denominator,
                  [&](const std::string &v) { ev_denominator = v; });
      }
      if (ev_input.empty())
        throw ConfigError("eval needs --input (flag or config key)");
      return cmd_eval(ev_input, ev_depth, ev_timeout, ev_workers, ev_backend,
                      ev_solver, ev_bits, ev_report, ev_dump, ev_denominator);
    }
  } catch (const ConfigError &e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError &e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const Error &e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception &e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  }
  return kExitConfig;
}
