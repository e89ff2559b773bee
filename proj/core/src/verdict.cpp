// SPDX-License-Identifier: Apache-2.0
#include "svaeq/verdict.hpp"

#include <chrono>

#include "svaeq/errors.hpp"
#include "svaeq/lower.hpp"
#include "svaeq/parser.hpp"

namespace svaeq {

const char *to_string(UnsupportedReason reason) {
  switch (reason) {
  case UnsupportedReason::Liveness: return "liveness";
  case UnsupportedReason::UnboundedRange: return "unbounded_range";
  case UnsupportedReason::GotoRepeat: return "goto_repeat";
  case UnsupportedReason::Timeout: return "timeout";
  case UnsupportedReason::MultiClock: return "multi_clock";
  case UnsupportedReason::UnsupportedFn: return "unsupported_fn";
  }
  return "?";
}

const char *to_string(Verdict::Value value) {
  switch (value) {
  case Verdict::Value::Equivalent: return "EQUIVALENT";
  case Verdict::Value::ImpliesRefToLm: return "IMPLIES_REF_TO_LM";
  case Verdict::Value::ImpliesLmToRef: return "IMPLIES_LM_TO_REF";
  case Verdict::Value::NotEquivalent: return "NOT_EQUIVALENT";
  case Verdict::Value::Unsupported: return "UNSUPPORTED";
  }
  return "?";
}

std::string to_string(const Verdict &verdict) {
  std::string s = to_string(verdict.value);
  if (verdict.reason)
    s += std::string("(") + to_string(*verdict.reason) + ")";
  return s;
}

namespace {

UnsupportedReason reason_from_string(const std::string &s) {
  if (s == "liveness")
    return UnsupportedReason::Liveness;
  if (s == "unbounded_range")
    return UnsupportedReason::UnboundedRange;
  if (s == "goto_repeat")
    return UnsupportedReason::GotoRepeat;
  if (s == "multi_clock")
    return UnsupportedReason::MultiClock;
  if (s == "timeout")
    return UnsupportedReason::Timeout;
  return UnsupportedReason::UnsupportedFn;
}

} // namespace

Verdict verdict_from_outcomes(const BmcOutcome &first,
                              const BmcOutcome &second) {
  if (first.timeout() || second.timeout())
    return {Verdict::Value::Unsupported, UnsupportedReason::Timeout};
  if (first.pass() && second.pass())
    return {Verdict::Value::Equivalent, std::nullopt};
  if (first.pass() && second.fail())
    return {Verdict::Value::ImpliesRefToLm, std::nullopt};
  if (first.fail() && second.pass())
    return {Verdict::Value::ImpliesLmToRef, std::nullopt};
  return {Verdict::Value::NotEquivalent, std::nullopt};
}

CheckResult check_equivalence(const SourceText &candidate,
                              const SourceText &reference,
                              const CheckConfig &cfg) {
  cfg.validate();
  auto t0 = std::chrono::steady_clock::now();

  AstPtr cand_ast, ref_ast;
  try {
    cand_ast = parse(candidate);
  } catch (const Error &e) {
    throw SyntaxError(SyntaxError::Side::Candidate, e.what());
  }
  try {
    ref_ast = parse(reference);
  } catch (const Error &e) {
    throw SyntaxError(SyntaxError::Side::Reference, e.what());
  }

  CheckResult result;
  try {
    Lowered cand = lower(cand_ast);
    Lowered ref = lower(ref_ast);

    // both instances share the one PEC-call budget
    BmcOutcome first = bmc_check(cand, ref, cfg);  // assume(cand) assert(ref)
    CheckConfig rest = cfg;
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    rest.timeout_seconds = std::max(0.001, cfg.timeout_seconds - elapsed);
    BmcOutcome second = bmc_check(ref, cand, rest); // assume(ref) assert(cand)
    result.outcome_1 = first.status;
    result.outcome_2 = second.status;
    result.verdict = verdict_from_outcomes(first, second);
    if (first.fail() && first.counterexample)
      result.counterexample = std::move(first.counterexample);
    else if (second.fail() && second.counterexample)
      result.counterexample = std::move(second.counterexample);
  } catch (const UnsupportedConstruct &u) {
    result.verdict = {Verdict::Value::Unsupported,
                      reason_from_string(u.reason)};
  }

  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

} // namespace svaeq
