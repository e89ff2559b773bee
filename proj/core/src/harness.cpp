// SPDX-License-Identifier: Apache-2.0
#include "svaeq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "svaeq/metrics.hpp"
#include "svaeq/parser.hpp"
#include "svaeq/reward.hpp"

namespace svaeq {

using nlohmann::json;

IngestResult ingest_text(const std::string &jsonl) {
  IngestResult out;
  std::istringstream is(jsonl);
  std::string line;
  std::size_t lineno = 0;
  std::set<std::string> seen_ids;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      out.errors.emplace_back(lineno, "malformed JSON");
      continue;
    }
    if (!j.is_object()) {
      out.errors.emplace_back(lineno, "expected a JSON object");
      continue;
    }
    EvalRow row;
    if (!j.contains("id") || !j["id"].is_string()) {
      out.errors.emplace_back(lineno, "missing string field 'id'");
      continue;
    }
    row.id = j["id"].get<std::string>();
    if (!seen_ids.insert(row.id).second) {
      out.errors.emplace_back(lineno, "duplicate id '" + row.id + "'");
      continue;
    }
    if (!j.contains("reference_sva") || !j["reference_sva"].is_string() ||
        j["reference_sva"].get<std::string>().empty()) {
      out.errors.emplace_back(lineno,
                              "missing non-empty field 'reference_sva'");
      continue;
    }
    row.reference_sva = j["reference_sva"].get<std::string>();
    if (j.contains("nl") && j["nl"].is_string())
      row.nl = j["nl"].get<std::string>();
    if (j.contains("rtl_context") && j["rtl_context"].is_string())
      row.rtl_context = j["rtl_context"].get<std::string>();
    if (!j.contains("candidates") || !j["candidates"].is_array() ||
        j["candidates"].empty()) {
      out.errors.emplace_back(lineno, "missing non-empty array 'candidates'");
      continue;
    }
    bool ok = true;
    for (const auto &c : j["candidates"]) {
      if (!c.is_string()) {
        ok = false;
        break;
      }
      row.candidates.push_back(c.get<std::string>());
    }
    if (!ok) {
      out.errors.emplace_back(lineno, "candidates must be strings");
      continue;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

IngestResult ingest(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return ingest_text(buf.str());
}

namespace {

CandidateResult check_candidate(const std::string &candidate,
                                const std::string &normalized_reference,
                                bool reference_ok, const RunOptions &opts) {
  CandidateResult res;
  auto t0 = std::chrono::steady_clock::now();
  try {
    NormalizeOptions nopts;
    nopts.profile = opts.normalize_profile;
    auto norm = normalize(SourceText{candidate, Origin::Candidate}, nopts);
    res.normalize_fired = norm.report.fired;

    try {
      parse(norm.after.raw);
      res.syntax_ok = true;
    } catch (const Error &e) {
      res.syntax_ok = false;
      res.error = e.what();
    }

    if (res.syntax_ok && reference_ok) {
      CheckResult check = check_equivalence(
          norm.after, SourceText{normalized_reference, Origin::Reference},
          opts.check);
      res.verdict = check.verdict;
      res.reward_eq2 = rwopd_weight(check.verdict, res.syntax_ok);
      res.reward_eq6 = rlvf_reward(check.verdict, res.syntax_ok);
    } else if (res.syntax_ok && !reference_ok) {
      res.error = "reference failed to parse";
    }
  } catch (const std::exception &e) {
    // crash isolation: record and move on
    res.error = e.what();
    res.verdict.reset();
  }
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

} // namespace

std::vector<RowResult> run_batch(const std::vector<EvalRow> &rows,
                                 const RunOptions &opts) {
  if (opts.workers < 1)
    throw ConfigError("workers must be >= 1");
  opts.check.validate();

  // per-row preparation: reference normalization and diagnostic class
  struct RowPrep {
    std::string normalized_reference;
    bool reference_ok = false;
    std::optional<TclClass> cls;
  };
  std::vector<RowPrep> preps(rows.size());
  std::vector<RowResult> results(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    results[i].id = rows[i].id;
    results[i].candidates.resize(rows[i].candidates.size());
    RowPrep &prep = preps[i];
    try {
      prep.cls = classify(rows[i].reference_sva);
    } catch (const Error &) {
      prep.cls.reset();
    }
    results[i].reference_class = prep.cls;
    try {
      NormalizeOptions nopts;
      nopts.profile = opts.normalize_profile;
      auto norm =
          normalize(SourceText{rows[i].reference_sva, Origin::Reference}, nopts);
      parse(norm.after.raw);
      prep.normalized_reference = norm.after.raw;
      prep.reference_ok = true;
    } catch (const std::exception &) {
      prep.reference_ok = false;
    }
  }

  struct Task {
    std::size_t row;
    std::size_t cand;
  };
  std::vector<Task> tasks;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].candidates.size(); ++c)
      tasks.push_back({r, c});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size())
        return;
      const Task &task = tasks[i];
      results[task.row].candidates[task.cand] = check_candidate(
          rows[task.row].candidates[task.cand],
          preps[task.row].normalized_reference,
          preps[task.row].reference_ok, opts);
    }
  };

  int nworkers = std::min<int>(opts.workers, static_cast<int>(tasks.size()));
  nworkers = std::max(nworkers, 1);
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(nworkers));
    for (int w = 0; w < nworkers; ++w)
      pool.emplace_back(worker);
  }

  std::sort(results.begin(), results.end(),
            [](const RowResult &a, const RowResult &b) { return a.id < b.id; });
  return results;
}

EvalReport report(const std::vector<RowResult> &results) {
  EvalReport rep;
  rep.rows = results.size();

  std::size_t strict = 0, relaxed = 0;
  std::size_t any_fired_rows = 0, fired_total_rows = 0;
  bool pass_k_applicable = !results.empty();
  std::size_t min_n = results.empty() ? 0 : SIZE_MAX;

  for (const auto &row : results) {
    rep.candidates += row.candidates.size();
    min_n = std::min(min_n, row.candidates.size());

    ClassStats *cls = row.reference_class
                          ? &rep.per_class[*row.reference_class]
                          : &rep.unclassified;
    cls->rows += 1;

    if (row.candidates.empty())
      continue;
    const CandidateResult &first = row.candidates[0];
    rep.total_wall_seconds += first.wall_seconds;
    for (std::size_t c = 1; c < row.candidates.size(); ++c)
      rep.total_wall_seconds += row.candidates[c].wall_seconds;

    if (!first.syntax_ok || !first.verdict) {
      if (!first.syntax_ok)
        ++rep.syntax_errors;
    } else if (first.verdict->value == Verdict::Value::Unsupported) {
      ++rep.abstentions;
      cls->abstained += 1;
    } else {
      if (first.verdict->equivalent()) {
        ++strict;
        cls->strict += 1;
      }
      if (first.verdict->equivalent() || first.verdict->one_sided()) {
        ++relaxed;
        cls->relaxed += 1;
      }
    }

    for (const auto &cand : row.candidates) {
      ++fired_total_rows;
      if (!cand.normalize_fired.empty())
        ++any_fired_rows;
      for (const auto &[id, n] : cand.normalize_fired)
        rep.rule_fires[id] += n;
    }
  }

  const double all = rep.rows ? static_cast<double>(rep.rows) : 1.0;
  const std::size_t supported_rows = rep.rows - rep.abstentions;
  const double supported =
      supported_rows ? static_cast<double>(supported_rows) : 1.0;
  rep.strict_func_at_1_all = static_cast<double>(strict) / all;
  rep.relaxed_func_at_1_all = static_cast<double>(relaxed) / all;
  rep.strict_func_at_1_supported = static_cast<double>(strict) / supported;
  rep.relaxed_func_at_1_supported = static_cast<double>(relaxed) / supported;
  rep.any_rule_fired_fraction =
      fired_total_rows
          ? static_cast<double>(any_fired_rows) / fired_total_rows
          : 0.0;

  if (pass_k_applicable && min_n > 1) {
    for (int k : {1, 5, 10}) {
      if (static_cast<std::size_t>(k) > min_n)
        continue;
      double sum = 0.0;
      for (const auto &row : results) {
        int n = static_cast<int>(row.candidates.size());
        int c = 0;
        for (const auto &cand : row.candidates)
          if (cand.verdict && cand.verdict->equivalent())
            ++c;
        sum += pass_at_k(n, c, k);
      }
      rep.pass_at_k[k] = sum / static_cast<double>(results.size());
    }
  }
  return rep;
}

std::string EvalReport::to_json(bool include_timing) const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["rows"] = rows;
  j["candidates"] = candidates;
  j["func_at_1"] = {
      {"strict", {{"all", strict_func_at_1_all},
                  {"supported", strict_func_at_1_supported}}},
      {"relaxed", {{"all", relaxed_func_at_1_all},
                   {"supported", relaxed_func_at_1_supported}}},
  };
  j["abstentions"] = abstentions;
  j["syntax_errors"] = syntax_errors;
  json cls = json::object();
  for (const auto &[c, st] : per_class)
    cls[to_string(c)] = {{"rows", st.rows},
                         {"strict", st.strict},
                         {"relaxed", st.relaxed},
                         {"abstained", st.abstained}};
  if (unclassified.rows)
    cls["unclassified"] = {{"rows", unclassified.rows},
                           {"strict", unclassified.strict},
                           {"relaxed", unclassified.relaxed},
                           {"abstained", unclassified.abstained}};
  j["per_class"] = cls;
  if (!pass_at_k.empty()) {
    json pk = json::object();
    for (const auto &[k, v] : pass_at_k)
      pk[std::to_string(k)] = v;
    j["pass_at_k"] = pk;
  }
  json fires = json::object();
  for (const auto &[id, n] : rule_fires)
    fires[to_string(id)] = n;
  j["rule_fires"] = fires;
  j["any_rule_fired_fraction"] = any_rule_fired_fraction;
  if (include_timing)
    j["timing"] = {{"total_wall_seconds", total_wall_seconds}};
  return j.dump(2);
}

std::string EvalReport::to_text() const {
  std::ostringstream os;
  auto pct = [](double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(1);
    s << v * 100.0 << "%";
    return s.str();
  };
  os << "rows " << rows << ", candidates " << candidates << "\n";
  os << "Func@1 strict  " << pct(strict_func_at_1_all) << " (all) / "
     << pct(strict_func_at_1_supported) << " (supported)\n";
  os << "Func@1 relaxed " << pct(relaxed_func_at_1_all) << " (all) / "
     << pct(relaxed_func_at_1_supported) << " (supported)\n";
  os << "abstentions " << abstentions << ", syntax errors " << syntax_errors
     << "\n";
  for (const auto &[c, st] : per_class)
    os << "  " << to_string(c) << ": rows " << st.rows << ", strict "
       << st.strict << ", relaxed " << st.relaxed << ", abstained "
       << st.abstained << "\n";
  if (unclassified.rows)
    os << "  unclassified: rows " << unclassified.rows << "\n";
  for (const auto &[k, v] : pass_at_k)
    os << "pass@" << k << " " << pct(v) << "\n";
  return os.str();
}

std::string results_to_csv(const std::vector<RowResult> &results) {
  std::ostringstream os;
  os << "id,candidate_index,verdict,reason,syntax_ok,reward_eq2,reward_eq6,"
        "wall_seconds,reference_class\n";
  for (const auto &row : results) {
    for (std::size_t c = 0; c < row.candidates.size(); ++c) {
      const auto &cand = row.candidates[c];
      os << row.id << "," << c << ",";
      if (cand.verdict) {
        os << to_string(cand.verdict->value) << ",";
        os << (cand.verdict->reason ? to_string(*cand.verdict->reason) : "");
      } else {
        os << (cand.syntax_ok ? "ERROR" : "SYNTAX_ERROR") << ",";
      }
      os << "," << (cand.syntax_ok ? 1 : 0) << "," << cand.reward_eq2 << ","
         << cand.reward_eq6 << "," << cand.wall_seconds << ",";
      os << (row.reference_class ? to_string(*row.reference_class) : "?");
      os << "\n";
    }
  }
  return os.str();
}

} // namespace svaeq
