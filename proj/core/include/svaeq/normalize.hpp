// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "svaeq/source_text.hpp"

namespace svaeq {

enum class RuleId {
  R1 = 1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13, R14, R15,
  R16, R17,
};

const char *rule_description(RuleId rule);
const char *to_string(RuleId rule);

enum class Profile { Lint, Pec };

const char *to_string(Profile profile);

// Which endpoint the range-collapse rules (R13/R14/R15) keep. The lower
// bound is the default; it keeps antecedents satisfiable under the lint
// gate's empty-match concern.
enum class RangeCollapse { Lo, Hi };

struct NormalizeOptions {
  Profile profile = Profile::Lint;
  RangeCollapse range_collapse = RangeCollapse::Lo;
};

struct NormalizationReport {
  std::vector<std::pair<RuleId, std::size_t>> fired; // ascending rule order
  SourceText before;
  SourceText after;
  Profile profile = Profile::Lint;

  std::size_t count(RuleId rule) const;
  bool any_fired() const { return !fired.empty(); }
};

struct NormalizeResult {
  SourceText after;
  NormalizationReport report;
};

// One fixpoint pass of the rewrite rules in ascending id order (at most 10
// iterations). The pec profile applies only the meaning-preserving subset
// {R1, R2/R9, R3, R4, R6, R10, R11, R12, R17}.
NormalizeResult normalize(const SourceText &src, const NormalizeOptions &opts);
NormalizeResult normalize(const SourceText &src, Profile profile);

const std::vector<RuleId> &rules_for(Profile profile);

struct RuleFireStats {
  std::map<RuleId, std::size_t> per_rule; // exact occurrence sums
  double any_fired_fraction = 0.0;
  std::size_t rows = 0;
};

RuleFireStats rule_fire_stats(const std::vector<SourceText> &rows,
                              const NormalizeOptions &opts);

} // namespace svaeq
