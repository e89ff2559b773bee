// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "svaeq/bmc.hpp"
#include "svaeq/lower.hpp"

namespace svaeq {

// SMT-LIB 2 script for one BMC instance: one boolean constant per
// (signal, cycle), asserting assumed-holds and asserted-violated.
// check-sat answering sat means FAIL; the script ends with (get-model)
// for counterexample extraction.
std::string emit_smt(const Lowered &assumed, const Lowered &asserted,
                     const CheckConfig &cfg);

struct SolverResponse {
  enum class Status { Sat, Unsat, Unknown, Timeout, Error } status;
  std::string output; // full solver stdout
};

// Feeds `script` to the solver over stdin and reads the response from
// stdout, killing the process at the deadline.
SolverResponse run_solver(const std::vector<std::string> &argv,
                          const std::string &script, double timeout_seconds);

// Resolution order: explicit cfg.solver_cmd, $SVA_EQUIV_SMT_SOLVER,
// an svaeq-smt binary next to the current executable, then PATH lookup.
std::vector<std::string> resolve_solver_command(const CheckConfig &cfg);

// Model text -> trace over the given universe; unmentioned bits are 0.
TraceAssignment parse_model(const std::string &output,
                            const std::vector<std::string> &universe,
                            int depth);

BmcOutcome bmc_check_smt(const Lowered &assumed, const Lowered &asserted,
                         const CheckConfig &cfg);

} // namespace svaeq
