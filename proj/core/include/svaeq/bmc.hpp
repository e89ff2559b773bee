// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "svaeq/lower.hpp"
#include "svaeq/trace.hpp"

namespace svaeq {

struct CheckConfig {
  int depth_K = 20;
  double timeout_seconds = 60.0; // per BMC instance
  enum class Backend { Enumerate, Smt } backend = Backend::Enumerate;
  int max_enum_bits = 20; // enumerate requires signals * depth <= this
  std::vector<std::string> solver_cmd; // empty: resolve svaeq-smt / env

  void validate() const; // throws ConfigError
};

struct BmcOutcome {
  enum class Status { Pass, Fail, Timeout } status = Status::Pass;
  std::optional<TraceAssignment> counterexample; // present for Fail
  bool capacity_exceeded = false; // Timeout due to the enumeration cap

  bool pass() const { return status == Status::Pass; }
  bool fail() const { return status == Status::Fail; }
  bool timeout() const { return status == Status::Timeout; }
};

const char *to_string(BmcOutcome::Status status);

// Sorted union of both properties' atoms: the free signal set the check
// ranges over.
std::vector<std::string> signal_union(const Lowered &a, const Lowered &b);

// Exhaustive search for a trace of length depth_K satisfying `assumed`
// and violating `asserted`. Complete at the bound; enumeration order is
// lexicographic over signal-major bit strings, so the first reported
// counterexample is deterministic. Exceeding max_enum_bits or the
// deadline yields Timeout.
BmcOutcome bmc_check_enumerate(const Lowered &assumed, const Lowered &asserted,
                               const CheckConfig &cfg);

// Backend dispatch (enumerate or smt).
BmcOutcome bmc_check(const Lowered &assumed, const Lowered &asserted,
                     const CheckConfig &cfg);

} // namespace svaeq
