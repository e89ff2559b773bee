// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace svaeq {

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

enum class BoolOp { Not, And, Or, ImpliesBool, Eq, Neq };
enum class SampledKind { Rose, Fell, Stable, Past };
enum class ReductionKind { Onehot, Onehot0 };
enum class RepeatKind { Consecutive, Nonconsecutive };
enum class ImplicationKind { Overlap, Nonoverlap };
enum class SeqBinopKind { Throughout, Within, Intersect };
enum class LivenessKind { SEventually, SUntil, SAlways, UntilWith, Until,
                          Eventually };
enum class ClockEdge { Pos, Neg, Any };

// sym + k, covering the index/bound forms the fragment needs:
// 3, WIDTH, WIDTH-1, i+2. sym empty means a plain constant.
struct SymExpr {
  std::string sym;
  int64_t k = 0;

  static SymExpr constant(int64_t v) { return SymExpr{"", v}; }
  static SymExpr symbol(std::string name, int64_t offset = 0) {
    return SymExpr{std::move(name), offset};
  }
  bool is_constant() const { return sym.empty(); }
  std::string render() const;
  // Flattened spelling used in signal names: 3, WIDTH, WIDTH_m1, i_p2.
  std::string flat() const;
  friend bool operator==(const SymExpr &, const SymExpr &) = default;
};

// One index select. `hi` present makes it a part select [lo:hi].
struct Select {
  SymExpr lo;
  std::optional<SymExpr> hi;
  std::string render() const;
  std::string flat() const;
  friend bool operator==(const Select &, const Select &) = default;
};

// Delay/repetition bound: a nat-or-symbol, or $ (unbounded).
struct Bound {
  bool unbounded = false;
  SymExpr expr; // ignored when unbounded
  static Bound dollar() { return Bound{true, {}}; }
  static Bound nat(int64_t v) { return Bound{false, SymExpr::constant(v)}; }
  static Bound of(SymExpr e) { return Bound{false, std::move(e)}; }
  std::string render() const;
  friend bool operator==(const Bound &, const Bound &) = default;
};

struct PathSeg {
  std::string name;
  std::vector<Select> selects;
  friend bool operator==(const PathSeg &, const PathSeg &) = default;
};

// ---- node payloads ----

struct BoolExprNode { BoolOp op; std::vector<AstPtr> args; };
struct SignalRefNode { std::vector<PathSeg> path; };
struct LiteralNode {
  uint64_t value = 0;
  std::string text; // original spelling, e.g. "32'd4"; empty means decimal
};
struct SampledFnNode {
  SampledKind kind;
  AstPtr arg;
  unsigned past_depth = 1; // $past(x, N)
};
struct ReductionFnNode {
  ReductionKind kind;
  std::vector<AstPtr> bits; // one element for $onehot(x), several for {a,b}
  bool braced = false;      // argument was a concatenation
};
struct CallNode { std::string callee; std::vector<AstPtr> args; };
struct DelayNode {
  Bound lo;
  Bound hi;     // == lo for ##N
  AstPtr lhs;   // null for a leading delay
  AstPtr rhs;
};
struct RepeatNode { RepeatKind kind; Bound lo; Bound hi; AstPtr body; };
struct ImplicationNode {
  ImplicationKind kind;
  AstPtr antecedent; // sequence-typed
  AstPtr consequent; // property-typed
};
struct SeqBinopNode { SeqBinopKind kind; AstPtr lhs; AstPtr rhs; };
struct LivenessNode { LivenessKind kind; std::vector<AstPtr> operands; };
struct DisableIffNode { AstPtr cond; AstPtr body; };
struct ClockedNode { ClockEdge edge; AstPtr clock; AstPtr body; };
struct LabeledNode { std::string label; AstPtr body; };

struct Ast {
  std::variant<BoolExprNode, SignalRefNode, LiteralNode, SampledFnNode,
               ReductionFnNode, CallNode, DelayNode, RepeatNode,
               ImplicationNode, SeqBinopNode, LivenessNode, DisableIffNode,
               ClockedNode, LabeledNode>
      node;

  template <typename T> const T *as() const { return std::get_if<T>(&node); }
  template <typename T> bool is() const {
    return std::holds_alternative<T>(node);
  }
};

template <typename T> AstPtr make_ast(T payload) {
  return std::make_shared<Ast>(Ast{std::move(payload)});
}

// One operator kind per surface form; classification and abstention
// predicates are sets over these.
enum class OpKind {
  Not, And, Or, ImpliesBool, Eq, Neq,
  Rose, Fell, Stable, Past,
  Onehot, Onehot0, Call,
  Delay, RepeatStar, RepeatGoto,
  ImplOverlap, ImplNonoverlap,
  Throughout, Within, Intersect,
  SEventually, SUntil, SAlways, UntilWith, Until, Eventually,
  DisableIff, Clocked,
};

// A free identifier as seen by the wrapper and the trace substrate.
struct Identifier {
  std::vector<std::string> segments;
  std::vector<Select> bit_selects; // in path order
  std::string text; // canonical source spelling, e.g. "a.b[0].c"
  std::string flat; // flattened name, e.g. "a_b_0_c"
  // Declaration base: everything flattened except selects on the final
  // segment, so X[i][j] declares X while a.b[0].c declares a_b_0_c.
  std::string decl_base;
  int trailing_selects = 0; // select count on the final segment

  friend bool operator<(const Identifier &a, const Identifier &b) {
    return a.flat < b.flat;
  }
  friend bool operator==(const Identifier &a, const Identifier &b) {
    return a.flat == b.flat;
  }
};

Identifier identifier_of(const SignalRefNode &ref);

// Canonical text; parse(render(x)) is structurally equal to x.
std::string render(const AstPtr &ast);

// Every SignalRef in the tree, including refs inside index expressions and
// symbolic bounds, deduplicated by flattened name and sorted.
std::vector<Identifier> free_identifiers(const AstPtr &ast);

bool contains_operator(const AstPtr &ast, const std::vector<OpKind> &ops);

// Trivia-insensitive structural equality.
bool structural_equal(const AstPtr &a, const AstPtr &b);

// Node kind queries for grammar/type checks.
bool is_boolean_expr(const AstPtr &ast);
bool is_sequence_expr(const AstPtr &ast);

const char *to_string(LivenessKind kind);
const char *to_string(ClockEdge edge);

} // namespace svaeq
