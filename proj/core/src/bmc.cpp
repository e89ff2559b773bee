// SPDX-License-Identifier: Apache-2.0
#include "svaeq/bmc.hpp"

#include <algorithm>

#include "svaeq/errors.hpp"
#include "svaeq/eval.hpp"
#include "svaeq/smt.hpp"

namespace svaeq {

void CheckConfig::validate() const {
  if (depth_K < 1 || depth_K > 62)
    throw ConfigError("depth must be in [1, 62]");
  if (timeout_seconds <= 0)
    throw ConfigError("timeout must be positive");
  if (max_enum_bits < 1 || max_enum_bits > 40)
    throw ConfigError("max_enum_bits must be in [1, 40]");
}

const char *to_string(BmcOutcome::Status status) {
  switch (status) {
  case BmcOutcome::Status::Pass: return "PASS";
  case BmcOutcome::Status::Fail: return "FAIL";
  case BmcOutcome::Status::Timeout: return "TIMEOUT";
  }
  return "?";
}

std::vector<std::string> signal_union(const Lowered &a, const Lowered &b) {
  std::vector<std::string> u = a.atoms;
  u.insert(u.end(), b.atoms.begin(), b.atoms.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

BmcOutcome bmc_check_enumerate(const Lowered &assumed, const Lowered &asserted,
                               const CheckConfig &cfg) {
  cfg.validate();
  const int K = cfg.depth_K;
  std::vector<std::string> universe = signal_union(assumed, asserted);
  const std::size_t nsig = universe.size();

  const std::size_t bits = nsig * static_cast<std::size_t>(K);
  if (bits > static_cast<std::size_t>(cfg.max_enum_bits)) {
    BmcOutcome out;
    out.status = BmcOutcome::Status::Timeout;
    out.capacity_exceeded = true;
    return out;
  }

  PropertyEvaluator ev_assumed(assumed, universe, K);
  PropertyEvaluator ev_asserted(asserted, universe, K);

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(cfg.timeout_seconds));

  const uint64_t total = bits >= 64 ? 0 : (1ull << bits); // bits <= 40
  std::vector<uint64_t> cols(nsig, 0);
  const uint64_t cycle_mask = K >= 64 ? ~0ull : ((1ull << K) - 1);

  for (uint64_t n = 0; n < total; ++n) {
    if ((n & 0xFFFu) == 0 && std::chrono::steady_clock::now() > deadline)
      return BmcOutcome{BmcOutcome::Status::Timeout, std::nullopt, false};
    for (std::size_t i = 0; i < nsig; ++i)
      cols[i] = (n >> (i * static_cast<std::size_t>(K))) & cycle_mask;
    if (!ev_assumed.holds(cols))
      continue;
    if (ev_asserted.holds(cols))
      continue;
    TraceAssignment cex;
    cex.depth = K;
    cex.signals = universe;
    cex.columns = cols;
    return BmcOutcome{BmcOutcome::Status::Fail, std::move(cex), false};
  }
  return BmcOutcome{BmcOutcome::Status::Pass, std::nullopt, false};
}

BmcOutcome bmc_check(const Lowered &assumed, const Lowered &asserted,
                     const CheckConfig &cfg) {
  if (cfg.backend == CheckConfig::Backend::Enumerate)
    return bmc_check_enumerate(assumed, asserted, cfg);
  return bmc_check_smt(assumed, asserted, cfg);
}

} // namespace svaeq
