// SPDX-License-Identifier: Apache-2.0
#include "svaeq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace svaeq {

double pass_at_k(int n, int c, int k) {
  if (k < 1 || k > n || c < 0 || c > n)
    throw std::domain_error("pass@k requires 1 <= k <= n and 0 <= c <= n");
  if (n - c < k)
    return 1.0;
  double miss = 1.0;
  for (int i = 0; i < k; ++i)
    miss *= static_cast<double>(n - c - i) / static_cast<double>(n - i);
  return 1.0 - miss;
}

double mean_pass_at_k(const std::vector<TaskOutcome> &tasks, int k) {
  if (tasks.empty())
    throw std::domain_error("empty task list");
  double sum = 0.0;
  for (const auto &t : tasks)
    sum += pass_at_k(t.n, t.c, k);
  return sum / static_cast<double>(tasks.size());
}

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double percentile(const std::vector<double> &sorted, double q) {
  if (sorted.size() == 1)
    return sorted[0];
  double h = q * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(std::floor(h));
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = h - std::floor(h);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

} // namespace

ConfidenceInterval bootstrap_ci(const std::vector<TaskOutcome> &tasks, int k,
                                int replicates, uint64_t seed, double level) {
  if (tasks.empty())
    throw std::domain_error("empty task list");
  if (replicates < 1)
    throw std::domain_error("replicates must be positive");
  if (level <= 0.0 || level >= 1.0)
    throw std::domain_error("level must be in (0, 1)");

  std::vector<double> per_task(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i)
    per_task[i] = pass_at_k(tasks[i].n, tasks[i].c, k);

  std::vector<double> means(static_cast<std::size_t>(replicates));
  const std::size_t m = tasks.size();
  for (int r = 0; r < replicates; ++r) {
    std::mt19937_64 rng(
        splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (static_cast<uint64_t>(r) + 1))));
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      sum += per_task[pick(rng)];
    means[static_cast<std::size_t>(r)] = sum / static_cast<double>(m);
  }
  std::sort(means.begin(), means.end());
  double alpha = (1.0 - level) / 2.0;
  return {percentile(means, alpha), percentile(means, 1.0 - alpha)};
}

} // namespace svaeq
