// SPDX-License-Identifier: Apache-2.0
//
// Seeded random generators shared by the property tests and the
// acceptance suite. Everything is deterministic given the engine state.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "svaeq/ast.hpp"

namespace svaeq::testgen {

using Rng = std::mt19937_64;

inline int pick(Rng &rng, int lo, int hi) { // inclusive
  return static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)) + lo;
}

inline bool chance(Rng &rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline AstPtr sig(const std::string &name) {
  return make_ast(SignalRefNode{{PathSeg{name, {}}}});
}

// ---- supported-fragment generator (engine-checkable properties) ----

struct SupportedOpts {
  std::vector<std::string> atoms = {"a", "b", "c"};
  int max_bool_depth = 2;
  int max_seq_depth = 2;
  int max_bound = 3;
  bool allow_seq_binops = true;
  bool allow_sampled = true;
  bool allow_repeat_zero = true;
  bool atoms_only_under_temporal = false; // for the depth-monotonicity test
  bool allow_disable_iff = true;
  bool allow_clock = true;
};

inline AstPtr gen_bool(Rng &rng, const SupportedOpts &o, int depth) {
  if (depth <= 0 || chance(rng, 0.4)) {
    const std::string &name =
        o.atoms[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(o.atoms.size()) - 1))];
    AstPtr leaf = sig(name);
    if (o.allow_sampled && !o.atoms_only_under_temporal && chance(rng, 0.2)) {
      SampledKind kind = static_cast<SampledKind>(pick(rng, 0, 3));
      return make_ast(SampledFnNode{kind, leaf, 1});
    }
    if (chance(rng, 0.25))
      return make_ast(BoolExprNode{BoolOp::Not, {leaf}});
    return leaf;
  }
  if (o.atoms_only_under_temporal) {
    // atoms or negated atoms only
    AstPtr leaf = sig(o.atoms[static_cast<std::size_t>(
        pick(rng, 0, static_cast<int>(o.atoms.size()) - 1))]);
    return chance(rng, 0.3) ? make_ast(BoolExprNode{BoolOp::Not, {leaf}})
                            : leaf;
  }
  BoolOp op = static_cast<BoolOp>(pick(rng, 1, 5)); // And..Neq
  return make_ast(BoolExprNode{
      op, {gen_bool(rng, o, depth - 1), gen_bool(rng, o, depth - 1)}});
}

inline AstPtr gen_seq(Rng &rng, const SupportedOpts &o, int depth) {
  if (depth <= 0 || chance(rng, 0.35))
    return gen_bool(rng, o, o.max_bool_depth);
  switch (pick(rng, 0, o.allow_seq_binops ? 3 : 1)) {
  case 0: { // delay
    int lo = pick(rng, 0, o.max_bound);
    int hi = lo + (chance(rng, 0.4) ? pick(rng, 0, 2) : 0);
    AstPtr lhs = chance(rng, 0.75) ? gen_seq(rng, o, depth - 1) : nullptr;
    if (!lhs && lo == 0)
      lo = hi = std::max(1, lo); // a leading ##0 adds nothing
    AstPtr rhs = gen_seq(rng, o, depth - 1);
    return make_ast(
        DelayNode{Bound::nat(lo), Bound::nat(hi), std::move(lhs), std::move(rhs)});
  }
  case 1: { // consecutive repeat
    int lo = o.allow_repeat_zero && chance(rng, 0.2) ? 0 : 1;
    lo = std::max(lo, pick(rng, lo, 2));
    int hi = lo + (chance(rng, 0.5) ? pick(rng, 0, 2) : 0);
    AstPtr body = gen_bool(rng, o, 1);
    return make_ast(RepeatNode{RepeatKind::Consecutive, Bound::nat(lo),
                               Bound::nat(hi), std::move(body)});
  }
  case 2: { // throughout
    AstPtr cond = gen_bool(rng, o, 1);
    AstPtr body = gen_seq(rng, o, depth - 1);
    return make_ast(
        SeqBinopNode{SeqBinopKind::Throughout, std::move(cond), std::move(body)});
  }
  default: { // within / intersect
    SeqBinopKind kind =
        chance(rng, 0.5) ? SeqBinopKind::Within : SeqBinopKind::Intersect;
    return make_ast(SeqBinopNode{kind, gen_seq(rng, o, depth - 1),
                                 gen_seq(rng, o, depth - 1)});
  }
  }
}

inline AstPtr gen_supported_property(Rng &rng, const SupportedOpts &o) {
  AstPtr prop;
  if (chance(rng, 0.65)) {
    AstPtr ant = gen_seq(rng, o, o.max_seq_depth);
    AstPtr cons = chance(rng, 0.2)
                      ? make_ast(ImplicationNode{ImplicationKind::Overlap,
                                                 gen_bool(rng, o, 1),
                                                 gen_seq(rng, o, 1)})
                      : gen_seq(rng, o, o.max_seq_depth);
    ImplicationKind kind = chance(rng, 0.5) ? ImplicationKind::Overlap
                                            : ImplicationKind::Nonoverlap;
    prop = make_ast(ImplicationNode{kind, std::move(ant), std::move(cons)});
  } else {
    prop = gen_seq(rng, o, o.max_seq_depth);
  }
  if (o.allow_disable_iff && chance(rng, 0.15))
    prop = make_ast(DisableIffNode{gen_bool(rng, o, 1), std::move(prop)});
  if (o.allow_clock && chance(rng, 0.3))
    prop = make_ast(ClockedNode{ClockEdge::Pos, sig("clk"), std::move(prop)});
  return prop;
}

// small semantic edit producing interesting pair relations
inline AstPtr mutate_property(Rng &rng, const AstPtr &prop,
                              const SupportedOpts &o) {
  if (const auto *impl = prop->as<ImplicationNode>()) {
    switch (pick(rng, 0, 4)) {
    case 0: // flip implication kind
      return make_ast(ImplicationNode{
          impl->kind == ImplicationKind::Overlap ? ImplicationKind::Nonoverlap
                                                 : ImplicationKind::Overlap,
          impl->antecedent, impl->consequent});
    case 1: // swap sides when the consequent is sequence-typed
      if (is_sequence_expr(impl->consequent))
        return make_ast(ImplicationNode{impl->kind, impl->consequent,
                                        impl->antecedent});
      break;
    case 2: { // shift the consequent one cycle
      AstPtr shifted = make_ast(
          DelayNode{Bound::nat(1), Bound::nat(1), nullptr, impl->consequent});
      if (is_sequence_expr(impl->consequent))
        return make_ast(ImplicationNode{impl->kind, impl->antecedent, shifted});
      break;
    }
    case 3: { // strengthen the consequent
      if (is_boolean_expr(impl->consequent)) {
        AstPtr extra = gen_bool(rng, o, 0);
        return make_ast(ImplicationNode{
            impl->kind, impl->antecedent,
            make_ast(BoolExprNode{BoolOp::And, {impl->consequent, extra}})});
      }
      break;
    }
    default:
      break;
    }
  }
  if (chance(rng, 0.5))
    return gen_supported_property(rng, o); // unrelated property
  return prop;                             // identity
}

// ---- full-fragment generator (round-trip tests) ----

inline AstPtr gen_any_bool(Rng &rng, int depth);

inline AstPtr gen_any_atom(Rng &rng) {
  switch (pick(rng, 0, 6)) {
  case 0:
    return sig("sig" + std::to_string(pick(rng, 0, 4)));
  case 1: { // hierarchical path with a mid select
    SignalRefNode ref;
    ref.path.push_back({"top", {}});
    PathSeg mid{"blk", {}};
    if (chance(rng, 0.6))
      mid.selects.push_back({SymExpr::constant(pick(rng, 0, 3)), std::nullopt});
    ref.path.push_back(mid);
    ref.path.push_back({"q", {}});
    return make_ast(ref);
  }
  case 2: { // indexed, possibly multi-dimensional
    SignalRefNode ref;
    PathSeg seg{"mem", {}};
    int ndims = pick(rng, 1, 2);
    for (int i = 0; i < ndims; ++i) {
      if (chance(rng, 0.5))
        seg.selects.push_back({SymExpr::constant(pick(rng, 0, 7)), std::nullopt});
      else
        seg.selects.push_back(
            {SymExpr::symbol(chance(rng, 0.5) ? "i" : "WIDTH",
                             chance(rng, 0.4) ? -1 : 0),
             std::nullopt});
    }
    ref.path.push_back(seg);
    return make_ast(ref);
  }
  case 3:
    return make_ast(LiteralNode{static_cast<uint64_t>(pick(rng, 0, 9)), ""});
  case 4:
    return make_ast(LiteralNode{4, "32'd4"});
  case 5: {
    SampledKind kind = static_cast<SampledKind>(pick(rng, 0, 3));
    return make_ast(SampledFnNode{kind, gen_any_bool(rng, 0), 1});
  }
  default: {
    ReductionKind kind =
        chance(rng, 0.5) ? ReductionKind::Onehot : ReductionKind::Onehot0;
    if (chance(rng, 0.5))
      return make_ast(ReductionFnNode{kind, {sig("x")}, false});
    return make_ast(ReductionFnNode{kind, {sig("x"), sig("y")}, true});
  }
  }
}

inline AstPtr gen_any_bool(Rng &rng, int depth) {
  if (depth <= 0 || chance(rng, 0.45))
    return gen_any_atom(rng);
  if (chance(rng, 0.2))
    return make_ast(BoolExprNode{BoolOp::Not, {gen_any_bool(rng, depth - 1)}});
  BoolOp op = static_cast<BoolOp>(pick(rng, 1, 5));
  return make_ast(BoolExprNode{
      op, {gen_any_bool(rng, depth - 1), gen_any_bool(rng, depth - 1)}});
}

inline Bound gen_any_bound(Rng &rng, bool allow_symbol) {
  if (allow_symbol && chance(rng, 0.2))
    return Bound::of(SymExpr::symbol("WIDTH", chance(rng, 0.5) ? -1 : 0));
  return Bound::nat(pick(rng, 0, 4));
}

inline AstPtr gen_any_seq(Rng &rng, int depth) {
  if (depth <= 0 || chance(rng, 0.35))
    return gen_any_bool(rng, 1);
  switch (pick(rng, 0, 3)) {
  case 0: {
    Bound lo = gen_any_bound(rng, true);
    Bound hi = lo;
    if (chance(rng, 0.4)) {
      if (chance(rng, 0.3))
        hi = Bound::dollar();
      else if (lo.expr.is_constant())
        hi = Bound::nat(lo.expr.k + pick(rng, 0, 3));
    }
    AstPtr lhs = chance(rng, 0.7) ? gen_any_seq(rng, depth - 1) : nullptr;
    return make_ast(DelayNode{lo, hi, std::move(lhs), gen_any_seq(rng, depth - 1)});
  }
  case 1: {
    RepeatKind kind = chance(rng, 0.8) ? RepeatKind::Consecutive
                                       : RepeatKind::Nonconsecutive;
    Bound lo = Bound::nat(pick(rng, 0, 3));
    Bound hi = lo;
    if (chance(rng, 0.5))
      hi = chance(rng, 0.25) ? Bound::dollar() : Bound::nat(lo.expr.k + pick(rng, 0, 2));
    return make_ast(RepeatNode{kind, lo, hi, gen_any_bool(rng, 1)});
  }
  case 2:
    return make_ast(SeqBinopNode{SeqBinopKind::Throughout, gen_any_bool(rng, 1),
                                 gen_any_seq(rng, depth - 1)});
  default: {
    SeqBinopKind kind =
        chance(rng, 0.5) ? SeqBinopKind::Within : SeqBinopKind::Intersect;
    return make_ast(
        SeqBinopNode{kind, gen_any_seq(rng, depth - 1), gen_any_seq(rng, depth - 1)});
  }
  }
}

inline AstPtr gen_any_property(Rng &rng, int depth = 2, bool top = true) {
  AstPtr prop;
  switch (pick(rng, 0, 3)) {
  case 0:
    prop = gen_any_seq(rng, depth);
    break;
  case 1: {
    AstPtr cons = chance(rng, 0.3) ? gen_any_property(rng, depth - 1, false)
                                   : gen_any_seq(rng, depth - 1);
    prop = make_ast(ImplicationNode{chance(rng, 0.5)
                                        ? ImplicationKind::Overlap
                                        : ImplicationKind::Nonoverlap,
                                    gen_any_seq(rng, depth - 1), cons});
    break;
  }
  case 2: { // prefix liveness
    LivenessKind kind = static_cast<LivenessKind>(
        pick(rng, 0, 1) ? static_cast<int>(LivenessKind::SEventually)
                        : static_cast<int>(LivenessKind::SAlways));
    prop = make_ast(LivenessNode{kind, {gen_any_seq(rng, depth - 1)}});
    break;
  }
  default: { // binary liveness
    LivenessKind kinds[] = {LivenessKind::SUntil, LivenessKind::UntilWith,
                            LivenessKind::Until};
    prop = make_ast(LivenessNode{kinds[pick(rng, 0, 2)],
                                 {gen_any_seq(rng, depth - 1),
                                  gen_any_seq(rng, depth - 1)}});
    break;
  }
  }
  // disable iff is a top-of-property form; nested ones only reach the
  // tree through parenthesized top chains
  if (top && chance(rng, 0.2))
    prop = make_ast(DisableIffNode{gen_any_bool(rng, 1), std::move(prop)});
  if (chance(rng, 0.3)) {
    ClockEdge edge = static_cast<ClockEdge>(pick(rng, 0, 2));
    prop = make_ast(ClockedNode{edge, sig("clk"), std::move(prop)});
  }
  if (top && chance(rng, 0.2))
    prop = make_ast(LabeledNode{"P" + std::to_string(pick(rng, 0, 99)),
                                std::move(prop)});
  return prop;
}

// ---- liveness injection (abstention tests) ----

inline AstPtr inject_liveness(Rng &rng, const AstPtr &base, LivenessKind kind) {
  switch (kind) {
  case LivenessKind::SEventually:
  case LivenessKind::Eventually:
  case LivenessKind::SAlways:
    return make_ast(LivenessNode{kind, {base}});
  default:
    return make_ast(LivenessNode{
        kind, {base, sig("done" + std::to_string(pick(rng, 0, 3)))}});
  }
}

} // namespace svaeq::testgen
