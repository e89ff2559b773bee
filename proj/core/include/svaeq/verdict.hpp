// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "svaeq/bmc.hpp"
#include "svaeq/source_text.hpp"

namespace svaeq {

enum class UnsupportedReason {
  Liveness,
  UnboundedRange,
  GotoRepeat,
  Timeout,
  MultiClock,
  UnsupportedFn,
};

const char *to_string(UnsupportedReason reason);

struct Verdict {
  enum class Value {
    Equivalent,
    ImpliesRefToLm, // candidate strictly stricter than the reference
    ImpliesLmToRef, // candidate strictly more permissive
    NotEquivalent,
    Unsupported,
  };
  Value value = Value::Unsupported;
  std::optional<UnsupportedReason> reason; // exactly when Unsupported

  bool decided() const { return value != Value::Unsupported; }
  bool equivalent() const { return value == Value::Equivalent; }
  bool one_sided() const {
    return value == Value::ImpliesRefToLm || value == Value::ImpliesLmToRef;
  }
  friend bool operator==(const Verdict &, const Verdict &) = default;
};

// Wire names from the verdict matrix: EQUIVALENT, IMPLIES_REF_TO_LM,
// IMPLIES_LM_TO_REF, NOT_EQUIVALENT, UNSUPPORTED.
std::string to_string(const Verdict &verdict);
const char *to_string(Verdict::Value value);

struct CheckResult {
  Verdict verdict;
  std::optional<TraceAssignment> counterexample; // from the failing side
  double wall_seconds = 0.0;
  BmcOutcome::Status outcome_1 = BmcOutcome::Status::Pass; // assume(cand)
  BmcOutcome::Status outcome_2 = BmcOutcome::Status::Pass; // assume(ref)
};

// Pure function of the two BMC outcomes per the verdict matrix:
// (PASS,PASS) -> EQUIVALENT, (PASS,FAIL) -> IMPLIES_REF_TO_LM,
// (FAIL,PASS) -> IMPLIES_LM_TO_REF, (FAIL,FAIL) -> NOT_EQUIVALENT,
// any TIMEOUT -> UNSUPPORTED(timeout).
Verdict verdict_from_outcomes(const BmcOutcome &first, const BmcOutcome &second);

// Runs (1) assume(candidate) assert(reference) and (2) the symmetric
// instance, both over the free-signal union. Throws SyntaxError when
// either side fails to parse; engine-unsupported constructs become
// UNSUPPORTED verdicts, never guesses.
CheckResult check_equivalence(const SourceText &candidate,
                              const SourceText &reference,
                              const CheckConfig &cfg);

} // namespace svaeq
