// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "svaeq/harness.hpp"

using namespace svaeq;

namespace {

RunOptions small_opts(int workers = 1) {
  RunOptions opts;
  opts.check.depth_K = 5;
  opts.check.max_enum_bits = 24;
  opts.check.timeout_seconds = 20.0;
  opts.workers = workers;
  return opts;
}

const char *kSmokeRows = R"({"id": "t1", "reference_sva": "a |-> b", "candidates": ["a |-> b"]}
{"id": "t2", "reference_sva": "a |-> b", "candidates": ["b |-> a"]}
{"id": "t3", "reference_sva": "a |-> b", "candidates": ["a |-> b && c"]}
{"id": "t4", "reference_sva": "s_eventually a", "candidates": ["s_eventually a"]}
{"id": "t5", "reference_sva": "a && b", "candidates": ["### broken"]}
)";

} // namespace

TEST_CASE("ingest parses rows and collects schema errors with line numbers") {
  std::string text =
      R"({"id": "ok", "reference_sva": "a", "candidates": ["a"]}
{"id": "missing_ref", "candidates": ["a"]}
not json at all
{"id": "ok", "reference_sva": "b", "candidates": ["b"]}
{"id": "no_cands", "reference_sva": "a", "candidates": []}
)";
  auto res = ingest_text(text);
  CHECK(res.rows.size() == 1);
  REQUIRE(res.errors.size() == 4);
  CHECK(res.errors[0].first == 2); // missing reference_sva
  CHECK(res.errors[1].first == 3); // malformed JSON
  CHECK(res.errors[2].first == 4); // duplicate id
  CHECK(res.errors[3].first == 5); // empty candidates
}

TEST_CASE("ingest of an empty file yields an empty list") {
  auto res = ingest_text("");
  CHECK(res.rows.empty());
  CHECK(res.errors.empty());
}

TEST_CASE("run_batch: verdicts, rewards and abstentions per candidate") {
  auto rows = ingest_text(kSmokeRows).rows;
  auto results = run_batch(rows, small_opts());
  REQUIRE(results.size() == 5);

  // t1 equivalent
  REQUIRE(results[0].candidates.size() == 1);
  CHECK(results[0].candidates[0].verdict->equivalent());
  CHECK(results[0].candidates[0].reward_eq2 == doctest::Approx(1.0));
  CHECK(results[0].candidates[0].reward_eq6 == doctest::Approx(1.0));

  // t2 swap
  CHECK(results[1].candidates[0].verdict->value ==
        Verdict::Value::NotEquivalent);
  CHECK(results[1].candidates[0].reward_eq6 == doctest::Approx(0.0));

  // t3 candidate stricter
  CHECK(results[2].candidates[0].verdict->value ==
        Verdict::Value::ImpliesRefToLm);
  CHECK(results[2].candidates[0].reward_eq2 == doctest::Approx(0.6));

  // t4 liveness abstention with the syntax-ok floor
  CHECK(results[3].candidates[0].verdict->value ==
        Verdict::Value::Unsupported);
  CHECK(results[3].candidates[0].syntax_ok);
  CHECK(results[3].candidates[0].reward_eq6 == doctest::Approx(0.15));
  CHECK(results[3].candidates[0].reward_eq2 == doctest::Approx(0.0));
  CHECK(results[3].reference_class == TclClass::C3);

  // t5 syntactically broken candidate
  CHECK(!results[4].candidates[0].syntax_ok);
  CHECK(results[4].candidates[0].reward_eq6 == doctest::Approx(0.0));
}

TEST_CASE("run_batch is deterministic across worker counts") {
  auto rows = ingest_text(kSmokeRows).rows;
  auto base = run_batch(rows, small_opts(1));
  for (int workers : {2, 4, 16}) {
    auto other = run_batch(rows, small_opts(workers));
    REQUIRE(other.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(other[i].id == base[i].id);
      REQUIRE(other[i].candidates.size() == base[i].candidates.size());
      for (std::size_t c = 0; c < base[i].candidates.size(); ++c) {
        CHECK(other[i].candidates[c].verdict == base[i].candidates[c].verdict);
        CHECK(other[i].candidates[c].syntax_ok ==
              base[i].candidates[c].syntax_ok);
      }
    }
  }
}

TEST_CASE("reference-vs-reference self-check decides or abstains") {
  std::string text =
      R"({"id": "c1", "reference_sva": "$rose(a) && b", "candidates": ["$rose(a) && b"]}
{"id": "c2", "reference_sva": "a |-> ##2 b", "candidates": ["a |-> ##2 b"]}
{"id": "c3", "reference_sva": "s_eventually a", "candidates": ["s_eventually a"]}
)";
  auto results = run_batch(ingest_text(text).rows, small_opts());
  CHECK(results[0].candidates[0].verdict->equivalent());
  CHECK(results[1].candidates[0].verdict->equivalent());
  CHECK(results[2].candidates[0].verdict->value ==
        Verdict::Value::Unsupported); // liveness abstains, never guesses
}

TEST_CASE("crash isolation: a bad candidate never loses other results") {
  // the unparseable-reference row errors per candidate; others are intact
  std::string text =
      R"({"id": "bad_ref", "reference_sva": "|-> |->", "candidates": ["a"]}
{"id": "good", "reference_sva": "a && b", "candidates": ["b && a"]}
)";
  auto results = run_batch(ingest_text(text).rows, small_opts(4));
  REQUIRE(results.size() == 2);
  CHECK(!results[0].candidates[0].verdict.has_value());
  CHECK(!results[0].candidates[0].error.empty());
  CHECK(results[1].candidates[0].verdict->equivalent());
}

TEST_CASE("report: strict within relaxed, abstention accounting") {
  auto rows = ingest_text(kSmokeRows).rows;
  auto results = run_batch(rows, small_opts());
  EvalReport rep = report(results);

  CHECK(rep.rows == 5);
  // strict counts t1; relaxed adds t3
  CHECK(rep.strict_func_at_1_all == doctest::Approx(1.0 / 5));
  CHECK(rep.relaxed_func_at_1_all == doctest::Approx(2.0 / 5));
  CHECK(rep.strict_func_at_1_all <= rep.relaxed_func_at_1_all);
  // abstentions count in the denominator of "all" but not "supported"
  CHECK(rep.abstentions == 1);
  CHECK(rep.strict_func_at_1_supported == doctest::Approx(1.0 / 4));
  CHECK(rep.syntax_errors == 1);

  // class split sums to the row count
  std::size_t class_rows = rep.unclassified.rows;
  for (const auto &[cls, st] : rep.per_class)
    class_rows += st.rows;
  CHECK(class_rows == rep.rows);
}

TEST_CASE("report emits pass@k only when every row has several candidates") {
  std::string text =
      R"({"id": "m1", "reference_sva": "a |-> b", "candidates": ["a |-> b", "b |-> a"]}
{"id": "m2", "reference_sva": "a && b", "candidates": ["b && a", "a && b"]}
)";
  auto results = run_batch(ingest_text(text).rows, small_opts());
  EvalReport rep = report(results);
  REQUIRE(rep.pass_at_k.count(1));
  CHECK(rep.pass_at_k.at(1) == doctest::Approx(0.75)); // (0.5 + 1.0) / 2
  CHECK(!rep.pass_at_k.count(5));

  auto single = run_batch(ingest_text(kSmokeRows).rows, small_opts());
  CHECK(report(single).pass_at_k.empty());
}

TEST_CASE("a crashing solver is recorded per candidate, batch completes") {
  std::string text =
      R"({"id": "s1", "reference_sva": "a && b", "candidates": ["b && a"]}
{"id": "s2", "reference_sva": "a", "candidates": ["a"]}
)";
  RunOptions opts = small_opts(2);
  opts.check.backend = CheckConfig::Backend::Smt;
  opts.check.solver_cmd = {"/nonexistent/solver/binary"};
  auto results = run_batch(ingest_text(text).rows, opts);
  REQUIRE(results.size() == 2);
  for (const auto &row : results) {
    REQUIRE(row.candidates.size() == 1);
    CHECK(!row.candidates[0].verdict.has_value());
    CHECK(!row.candidates[0].error.empty());
    CHECK(row.candidates[0].syntax_ok); // the gate passed; the check crashed
  }
}

TEST_CASE("candidate wall time stays within the budget plus grace") {
  auto rows = ingest_text(kSmokeRows).rows;
  RunOptions opts = small_opts();
  opts.check.timeout_seconds = 10.0;
  auto results = run_batch(rows, opts);
  for (const auto &row : results)
    for (const auto &cand : row.candidates)
      CHECK(cand.wall_seconds <= opts.check.timeout_seconds + 1.0);
}

TEST_CASE("report serializes to json and csv") {
  auto results = run_batch(ingest_text(kSmokeRows).rows, small_opts());
  EvalReport rep = report(results);
  std::string j = rep.to_json();
  CHECK(j.find("\"schema_version\": 1") != std::string::npos);
  CHECK(j.find("func_at_1") != std::string::npos);
  CHECK(j.find("timing") != std::string::npos);
  CHECK(rep.to_json(false).find("timing") == std::string::npos);

  std::string csv = results_to_csv(results);
  CHECK(csv.find("id,candidate_index,verdict") == 0);
  CHECK(csv.find("t1,0,EQUIVALENT") != std::string::npos);
  CHECK(csv.find("SYNTAX_ERROR") != std::string::npos);
}
