// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svaeq/ast.hpp"

namespace svaeq {

// Flat lowered form shared by the enumerate and smt backends. Lowering
// applies the four passes: clock alias injection (all clocking events map
// to the one global tick), disable-iff extraction into an explicit abort
// condition, fixed-delay resolution (shifted-index evaluation of the
// delay-register chain), and boolean rewrites expanding $onehot/$onehot0.
struct Lowered {
  struct BNode {
    enum class Kind { Const, Atom, Not, And, Or, Rose, Fell, Stable, Past };
    Kind kind;
    bool cval = false;
    int atom = -1;
    int a = -1, b = -1; // children
  };
  struct SNode {
    enum class Kind { SBool, SDelay, SRepeat, SThroughout, SWithin,
                      SIntersect };
    Kind kind;
    int bexpr = -1;     // SBool body / throughout condition
    int lo = 0, hi = 0; // resolved delay/repeat bounds
    int lhs = -1;       // sequence child; -1 marks a leading delay
    int rhs = -1;       // sequence child / repeat body / throughout seq
  };
  struct PNode {
    enum class Kind { PSeq, PImpl };
    Kind kind;
    int seq = -1;       // PSeq body / implication antecedent
    bool overlap = true;
    int consequent = -1; // property index
  };

  std::vector<BNode> bexprs;
  std::vector<SNode> seqs;
  std::vector<PNode> props;
  int root = -1;  // property index
  int abort = -1; // bexpr index, -1 when no disable iff
  std::vector<std::string> atoms; // flattened names, sorted
  std::optional<std::string> clock; // aliased clock signal, if any
  int window = 0; // static forward span, bounds the abort scan
};

// Throws UnsupportedConstruct with reason one of: liveness,
// unbounded_range, goto_repeat, multi_clock, unsupported_fn.
Lowered lower(const AstPtr &ast);

// Default value substituted for symbolic delay/repetition bounds; matches
// the wrapper's parameter default.
inline constexpr int kSymbolicBoundDefault = 4;

} // namespace svaeq
