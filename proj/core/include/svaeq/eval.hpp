// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "svaeq/lower.hpp"
#include "svaeq/trace.hpp"

namespace svaeq {

// Weak bounded semantics over a fixed trace length. A sequence yields a
// set of definite match end points plus a pending flag (a partial match
// still alive at the bound). Obligations that are pending, or that would
// start beyond the bound, count as not violated. Pending never
// under-approximates: pend == false means no extension of the trace can
// complete a match.
//
// Built once per (property, signal universe, depth) and reused across
// traces; memo cells are epoch-stamped so per-trace evaluation does not
// allocate.
class PropertyEvaluator {
public:
  PropertyEvaluator(const Lowered &prop,
                    std::span<const std::string> universe, int depth);

  // true iff no start cycle in [0, depth) has a definite violation that
  // the abort condition does not discharge
  bool holds(std::span<const uint64_t> columns);

  int depth() const { return depth_; }

private:
  struct SeqResult {
    uint64_t ends = 0; // bit e+1 set for a match ending at e; bit t = empty
    bool pend = false;
  };
  struct SeqCell {
    uint32_t epoch = 0;
    SeqResult r;
  };
  struct PropCell {
    uint32_t epoch = 0;
    bool violated = false;
  };

  const Lowered &prop_;
  int depth_;
  std::vector<int> atom_to_universe_;
  std::span<const uint64_t> cols_;
  uint32_t epoch_ = 0;
  std::vector<SeqCell> seq_memo_;   // [seq][t]
  std::vector<PropCell> prop_memo_; // [prop][t]

  bool eval_bool(int b, int t) const;
  SeqResult seq_at(int s, int t);
  bool violated_at(int p, int t);
};

// Replay helper: evaluates a lowered property over an explicit trace whose
// signal list must cover the property's atoms.
bool eval_property(const Lowered &prop, const TraceAssignment &trace);

} // namespace svaeq
