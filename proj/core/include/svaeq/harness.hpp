// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svaeq/bmc.hpp"
#include "svaeq/normalize.hpp"
#include "svaeq/tcl.hpp"
#include "svaeq/verdict.hpp"

namespace svaeq {

struct EvalRow {
  std::string id;
  std::optional<std::string> nl;
  std::string reference_sva;
  std::optional<std::string> rtl_context; // carried, unused by the engine
  std::vector<std::string> candidates;    // at least one
};

struct IngestResult {
  std::vector<EvalRow> rows;
  // 1-based line number and message for malformed lines; the run continues
  std::vector<std::pair<std::size_t, std::string>> errors;
};

// One JSON object per line. Throws IoError when the file cannot be read.
IngestResult ingest(const std::string &path);
IngestResult ingest_text(const std::string &jsonl);

struct CandidateResult {
  std::optional<Verdict> verdict; // empty on syntax/internal error
  bool syntax_ok = false;
  double reward_eq2 = 0.0; // distillation weight
  double reward_eq6 = 0.0; // sparse verifier reward
  double wall_seconds = 0.0;
  std::string error; // non-empty for syntax errors and crashes
  std::vector<std::pair<RuleId, std::size_t>> normalize_fired;
};

struct RowResult {
  std::string id;
  std::optional<TclClass> reference_class;
  std::vector<CandidateResult> candidates;
};

struct RunOptions {
  CheckConfig check;
  int workers = 1;
  Profile normalize_profile = Profile::Pec;
};

// Checks every (row, candidate) pair exactly once across a fixed worker
// pool; results come back sorted by (id, candidate index) regardless of
// completion order. A crash in one candidate is recorded on that
// candidate and never loses other results.
std::vector<RowResult> run_batch(const std::vector<EvalRow> &rows,
                                 const RunOptions &opts);

struct ClassStats {
  std::size_t rows = 0;
  std::size_t strict = 0;
  std::size_t relaxed = 0;
  std::size_t abstained = 0;
};

struct EvalReport {
  static constexpr int kSchemaVersion = 1;

  std::size_t rows = 0;
  std::size_t candidates = 0;
  // first-candidate fractions under both denominator conventions
  double strict_func_at_1_all = 0.0;
  double strict_func_at_1_supported = 0.0;
  double relaxed_func_at_1_all = 0.0;
  double relaxed_func_at_1_supported = 0.0;
  std::size_t abstentions = 0;    // first candidate UNSUPPORTED
  std::size_t syntax_errors = 0;  // first candidate failed the gate
  std::map<TclClass, ClassStats> per_class;
  ClassStats unclassified;
  std::map<int, double> pass_at_k; // present when every row has n > 1
  std::map<RuleId, std::size_t> rule_fires;
  double any_rule_fired_fraction = 0.0;
  double total_wall_seconds = 0.0;

  std::string to_json(bool include_timing = true) const;
  std::string to_text() const;
};

EvalReport report(const std::vector<RowResult> &results);

std::string results_to_csv(const std::vector<RowResult> &results);

} // namespace svaeq
