// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svaeq/verdict.hpp"

namespace svaeq {

// Distillation weight: EQUIVALENT 1.0, one-sided 0.6/0.4, everything else
// (unsupported included) 0.0.
double rwopd_weight(const Verdict &verdict, bool syntax_ok);

// Sparse verifier reward: same as the distillation weight except that a
// syntax-valid UNSUPPORTED earns the 0.15 floor.
double rlvf_reward(const Verdict &verdict, bool syntax_ok);

struct RolloutScore {
  Verdict verdict;
  bool syntax_ok = false;
  std::optional<double> opd_loss; // supplied externally, never computed here
};

// Weighted mean sum(w*loss)/sum(w) over rollouts with positive weight;
// empty optional when no rollout passes (the no-gradient case).
std::optional<double> rwopd_aggregate(const std::vector<RolloutScore> &scores);

struct TokenWeight {
  std::string token_text;
  double weight = 1.0;
};

// The 15-operator vocabulary used for temporal token reweighting.
const std::vector<std::string> &temporal_operator_vocabulary();

// weight alpha iff the decoded token contains any vocabulary element;
// a token matching several operators is weighted once.
std::vector<TokenWeight>
temporal_token_weights(const std::vector<std::string> &decoded_tokens,
                       double alpha);

// Mean of elementwise products; lengths must match.
double weighted_ce(const std::vector<double> &per_token_ce,
                   const std::vector<TokenWeight> &weights);

} // namespace svaeq
