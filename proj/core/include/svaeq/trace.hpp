// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace svaeq {

// Per-signal boolean sequences of length depth. Column bit t is the value
// of the signal at cycle t. Signals are flattened names, sorted.
struct TraceAssignment {
  int depth = 0;
  std::vector<std::string> signals;
  std::vector<uint64_t> columns;

  bool value(std::size_t sig, int t) const {
    return ((columns[sig] >> t) & 1u) != 0;
  }
  std::string bits_of(std::size_t sig) const {
    std::string s;
    for (int t = 0; t < depth; ++t)
      s += value(sig, t) ? '1' : '0';
    return s;
  }
};

} // namespace svaeq
