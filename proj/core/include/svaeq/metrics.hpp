// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace svaeq {

struct TaskOutcome {
  std::string task_id;
  int n = 0; // samples drawn
  int c = 0; // samples correct
};

// Unbiased estimator 1 - C(n-c, k)/C(n, k) in stable product form.
// Throws std::domain_error outside 1 <= k <= n, 0 <= c <= n.
double pass_at_k(int n, int c, int k);

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// Percentile interval of the replicate distribution of mean pass@k under
// with-replacement task resampling. Deterministic given the seed;
// per-replicate RNG streams derive from (seed, replicate index).
ConfidenceInterval bootstrap_ci(const std::vector<TaskOutcome> &tasks, int k,
                                int replicates = 10000,
                                uint64_t seed = 20240601,
                                double level = 0.95);

double mean_pass_at_k(const std::vector<TaskOutcome> &tasks, int k);

} // namespace svaeq
