// SPDX-License-Identifier: Apache-2.0
#include "svaeq/reward.hpp"

#include <stdexcept>

namespace svaeq {

double rwopd_weight(const Verdict &verdict, bool syntax_ok) {
  if (!syntax_ok)
    return 0.0;
  switch (verdict.value) {
  case Verdict::Value::Equivalent: return 1.0;
  case Verdict::Value::ImpliesRefToLm: return 0.6;
  case Verdict::Value::ImpliesLmToRef: return 0.4;
  default: return 0.0;
  }
}

double rlvf_reward(const Verdict &verdict, bool syntax_ok) {
  if (!syntax_ok)
    return 0.0;
  switch (verdict.value) {
  case Verdict::Value::Equivalent: return 1.0;
  case Verdict::Value::ImpliesRefToLm: return 0.6;
  case Verdict::Value::ImpliesLmToRef: return 0.4;
  case Verdict::Value::Unsupported: return 0.15;
  case Verdict::Value::NotEquivalent: return 0.0;
  }
  return 0.0;
}

std::optional<double>
rwopd_aggregate(const std::vector<RolloutScore> &scores) {
  double num = 0.0, den = 0.0;
  for (const auto &s : scores) {
    if (!s.opd_loss)
      throw std::invalid_argument("rollout without an opd loss");
    double w = rwopd_weight(s.verdict, s.syntax_ok);
    if (w <= 0.0)
      continue;
    num += w * *s.opd_loss;
    den += w;
  }
  if (den <= 0.0)
    return std::nullopt;
  return num / den;
}

const std::vector<std::string> &temporal_operator_vocabulary() {
  static const std::vector<std::string> ops = {
      "##",        "[*",      "[=",         "|->",
      "|=>",       "until",   "eventually", "s_eventually",
      "s_until",   "s_always", "throughout", "within",
      "intersect", "$rose",   "$fell",
  };
  return ops;
}

std::vector<TokenWeight>
temporal_token_weights(const std::vector<std::string> &decoded_tokens,
                       double alpha) {
  if (alpha < 1.0)
    throw std::invalid_argument("alpha must be >= 1");
  std::vector<TokenWeight> out;
  out.reserve(decoded_tokens.size());
  for (const auto &tok : decoded_tokens) {
    bool temporal = false;
    for (const auto &op : temporal_operator_vocabulary())
      if (tok.find(op) != std::string::npos) {
        temporal = true;
        break;
      }
    out.push_back({tok, temporal ? alpha : 1.0});
  }
  return out;
}

double weighted_ce(const std::vector<double> &per_token_ce,
                   const std::vector<TokenWeight> &weights) {
  if (per_token_ce.size() != weights.size())
    throw std::invalid_argument("token/weight length mismatch");
  if (per_token_ce.empty())
    return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < per_token_ce.size(); ++i)
    sum += per_token_ce[i] * weights[i].weight;
  return sum / static_cast<double>(per_token_ce.size());
}

} // namespace svaeq
