// SPDX-License-Identifier: Apache-2.0
#include "svaeq/lower.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "svaeq/errors.hpp"

namespace svaeq {

namespace {

class LowerCtx {
public:
  Lowered out;
  std::map<std::string, int> atom_ids;

  int atom(const std::string &flat) {
    auto it = atom_ids.find(flat);
    if (it != atom_ids.end())
      return it->second;
    int id = static_cast<int>(out.atoms.size());
    out.atoms.push_back(flat);
    atom_ids.emplace(flat, id);
    return id;
  }

  int bconst(bool v) {
    return add_b({Lowered::BNode::Kind::Const, v, -1, -1, -1});
  }
  int batom(int id) {
    return add_b({Lowered::BNode::Kind::Atom, false, id, -1, -1});
  }
  int bnot(int a) {
    return add_b({Lowered::BNode::Kind::Not, false, -1, a, -1});
  }
  int band(int a, int b) {
    return add_b({Lowered::BNode::Kind::And, false, -1, a, b});
  }
  int bor(int a, int b) {
    return add_b({Lowered::BNode::Kind::Or, false, -1, a, b});
  }
  int add_b(Lowered::BNode n) {
    out.bexprs.push_back(n);
    return static_cast<int>(out.bexprs.size() - 1);
  }
  int add_s(Lowered::SNode n) {
    out.seqs.push_back(n);
    return static_cast<int>(out.seqs.size() - 1);
  }
  int add_p(Lowered::PNode n) {
    out.props.push_back(n);
    return static_cast<int>(out.props.size() - 1);
  }

  int resolve_bound(const Bound &b) {
    if (b.unbounded)
      throw UnsupportedConstruct("unbounded_range");
    if (b.expr.is_constant())
      return clamp_nat(b.expr.k);
    // symbolic bounds elaborate with the wrapper's parameter default
    return clamp_nat(kSymbolicBoundDefault + b.expr.k);
  }
  static int clamp_nat(int64_t v) { return v < 0 ? 0 : static_cast<int>(v); }

  // ---- boolean layer ----

  int lower_bool(const AstPtr &ast) {
    if (const auto *b = ast->as<BoolExprNode>()) {
      switch (b->op) {
      case BoolOp::Not:
        return bnot(lower_bool(b->args[0]));
      case BoolOp::And:
        return band(lower_bool(b->args[0]), lower_bool(b->args[1]));
      case BoolOp::Or:
        return bor(lower_bool(b->args[0]), lower_bool(b->args[1]));
      case BoolOp::ImpliesBool:
        return bor(bnot(lower_bool(b->args[0])), lower_bool(b->args[1]));
      case BoolOp::Eq: {
        int x = lower_bool(b->args[0]), y = lower_bool(b->args[1]);
        return bor(band(x, y), band(bnot(x), bnot(y)));
      }
      case BoolOp::Neq: {
        int x = lower_bool(b->args[0]), y = lower_bool(b->args[1]);
        return bor(band(x, bnot(y)), band(bnot(x), y));
      }
      }
    }
    if (const auto *ref = ast->as<SignalRefNode>())
      return batom(atom(identifier_of(*ref).flat));
    if (const auto *lit = ast->as<LiteralNode>())
      return bconst((lit->value & 1u) != 0); // literals reduce modulo 2
    if (const auto *fn = ast->as<SampledFnNode>()) {
      int sub = lower_bool(fn->arg);
      Lowered::BNode::Kind k;
      switch (fn->kind) {
      case SampledKind::Rose: k = Lowered::BNode::Kind::Rose; break;
      case SampledKind::Fell: k = Lowered::BNode::Kind::Fell; break;
      case SampledKind::Stable: k = Lowered::BNode::Kind::Stable; break;
      case SampledKind::Past:
        if (fn->past_depth != 1)
          throw UnsupportedConstruct("unsupported_fn");
        k = Lowered::BNode::Kind::Past;
        break;
      }
      return add_b({k, false, -1, sub, -1});
    }
    if (const auto *red = ast->as<ReductionFnNode>()) {
      std::vector<int> bits;
      for (const auto &b : red->bits)
        bits.push_back(lower_bool(b));
      return expand_reduction(red->kind, bits);
    }
    if (ast->is<CallNode>())
      throw UnsupportedConstruct("unsupported_fn");
    throw UnsupportedConstruct("unsupported_fn");
  }

  // exactly-one / at-most-one over the listed bits
  int expand_reduction(ReductionKind kind, const std::vector<int> &bits) {
    if (bits.size() == 1)
      return kind == ReductionKind::Onehot ? bits[0] : bconst(true);
    int exactly_one = -1;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      int term = bits[i];
      for (std::size_t j = 0; j < bits.size(); ++j)
        if (j != i)
          term = band(term, bnot(bits[j]));
      exactly_one = exactly_one < 0 ? term : bor(exactly_one, term);
    }
    if (kind == ReductionKind::Onehot)
      return exactly_one;
    int all_zero = bnot(bits[0]);
    for (std::size_t i = 1; i < bits.size(); ++i)
      all_zero = band(all_zero, bnot(bits[i]));
    return bor(exactly_one, all_zero);
  }

  // ---- sequence layer ----

  int lower_seq(const AstPtr &ast) {
    if (is_boolean_expr(ast)) {
      int b = lower_bool(ast);
      return add_s({Lowered::SNode::Kind::SBool, b, 0, 0, -1, -1});
    }
    if (const auto *d = ast->as<DelayNode>()) {
      int lo = resolve_bound(d->lo);
      int hi = resolve_bound(d->hi);
      if (hi < lo)
        hi = lo;
      int lhs = d->lhs ? lower_seq(d->lhs) : -1;
      int rhs = lower_seq(d->rhs);
      return add_s({Lowered::SNode::Kind::SDelay, -1, lo, hi, lhs, rhs});
    }
    if (const auto *r = ast->as<RepeatNode>()) {
      if (r->kind == RepeatKind::Nonconsecutive)
        throw UnsupportedConstruct("goto_repeat");
      int lo = resolve_bound(r->lo);
      int hi = resolve_bound(r->hi);
      if (hi < lo)
        hi = lo;
      int body = lower_seq(r->body);
      return add_s({Lowered::SNode::Kind::SRepeat, -1, lo, hi, -1, body});
    }
    if (const auto *sb = ast->as<SeqBinopNode>()) {
      if (sb->kind == SeqBinopKind::Throughout) {
        int cond = lower_bool(sb->lhs);
        int seq = lower_seq(sb->rhs);
        return add_s({Lowered::SNode::Kind::SThroughout, cond, 0, 0, -1, seq});
      }
      int lhs = lower_seq(sb->lhs);
      int rhs = lower_seq(sb->rhs);
      auto kind = sb->kind == SeqBinopKind::Within
                      ? Lowered::SNode::Kind::SWithin
                      : Lowered::SNode::Kind::SIntersect;
      return add_s({kind, -1, 0, 0, lhs, rhs});
    }
    if (ast->is<LivenessNode>())
      throw UnsupportedConstruct("liveness");
    throw UnsupportedConstruct("unsupported_fn");
  }

  // ---- property layer ----

  int lower_prop(const AstPtr &ast) {
    if (const auto *impl = ast->as<ImplicationNode>()) {
      int ant = lower_seq(impl->antecedent);
      int cons = lower_prop(impl->consequent);
      return add_p({Lowered::PNode::Kind::PImpl, ant,
                    impl->kind == ImplicationKind::Overlap, cons});
    }
    if (ast->is<LivenessNode>())
      throw UnsupportedConstruct("liveness");
    if (ast->is<DisableIffNode>() || ast->is<ClockedNode>() ||
        ast->is<LabeledNode>())
      throw UnsupportedConstruct("unsupported_fn"); // not at property top
    int seq = lower_seq(ast);
    return add_p({Lowered::PNode::Kind::PSeq, seq, true, -1});
  }

  // forward span per node; bounds the disable-iff abort scan
  int window_seq(int s) const {
    const auto &n = out.seqs[static_cast<std::size_t>(s)];
    switch (n.kind) {
    case Lowered::SNode::Kind::SBool:
      return 0;
    case Lowered::SNode::Kind::SDelay:
      return (n.lhs >= 0 ? window_seq(n.lhs) : 0) + n.hi + window_seq(n.rhs);
    case Lowered::SNode::Kind::SRepeat:
      return n.hi == 0 ? 0 : n.hi * (window_seq(n.rhs) + 1);
    case Lowered::SNode::Kind::SThroughout:
      return window_seq(n.rhs);
    case Lowered::SNode::Kind::SWithin:
    case Lowered::SNode::Kind::SIntersect:
      return std::max(window_seq(n.lhs), window_seq(n.rhs));
    }
    return 0;
  }
  int window_prop(int p) const {
    const auto &n = out.props[static_cast<std::size_t>(p)];
    if (n.kind == Lowered::PNode::Kind::PSeq)
      return window_seq(n.seq);
    return window_seq(n.seq) + (n.overlap ? 0 : 1) +
           window_prop(n.consequent);
  }
};

bool contains_disable_below(const AstPtr &ast) {
  return contains_operator(ast, {OpKind::DisableIff});
}

} // namespace

Lowered lower(const AstPtr &ast) {
  LowerCtx ctx;

  // peel the top chain: labels, clocking events, disable iff
  AstPtr cur = ast;
  std::optional<std::string> clock_name;
  std::vector<AstPtr> aborts;
  for (;;) {
    if (const auto *lb = cur->as<LabeledNode>()) {
      cur = lb->body;
      continue;
    }
    if (const auto *clk = cur->as<ClockedNode>()) {
      if (const auto *ref = clk->clock->as<SignalRefNode>()) {
        std::string flat = identifier_of(*ref).flat;
        if (clock_name && *clock_name != flat)
          throw UnsupportedConstruct("multi_clock");
        clock_name = flat;
      }
      cur = clk->body;
      continue;
    }
    if (const auto *di = cur->as<DisableIffNode>()) {
      aborts.push_back(di->cond);
      cur = di->body;
      continue;
    }
    break;
  }

  // nested clocking events below the top alias to the same global tick;
  // a second distinct clock signal aborts
  {
    std::vector<std::string> clocks;
    std::vector<AstPtr> stack{cur};
    while (!stack.empty()) {
      AstPtr node = stack.back();
      stack.pop_back();
      if (!node)
        continue;
      if (const auto *clk = node->as<ClockedNode>()) {
        if (const auto *ref = clk->clock->as<SignalRefNode>()) {
          std::string flat = identifier_of(*ref).flat;
          if (clock_name && *clock_name != flat)
            throw UnsupportedConstruct("multi_clock");
          if (!clock_name)
            clock_name = flat;
        }
        stack.push_back(clk->body);
        continue;
      }
      if (const auto *b = node->as<BoolExprNode>())
        for (const auto &a : b->args)
          stack.push_back(a);
      else if (const auto *d = node->as<DelayNode>()) {
        stack.push_back(d->lhs);
        stack.push_back(d->rhs);
      } else if (const auto *r = node->as<RepeatNode>())
        stack.push_back(r->body);
      else if (const auto *impl = node->as<ImplicationNode>()) {
        stack.push_back(impl->antecedent);
        stack.push_back(impl->consequent);
      } else if (const auto *sb = node->as<SeqBinopNode>()) {
        stack.push_back(sb->lhs);
        stack.push_back(sb->rhs);
      } else if (const auto *lv = node->as<LivenessNode>())
        for (const auto &o : lv->operands)
          stack.push_back(o);
      else if (const auto *lb2 = node->as<LabeledNode>())
        stack.push_back(lb2->body);
    }
  }

  // strip aliased clock wrappers everywhere below
  std::function<AstPtr(const AstPtr &)> strip_clock =
      [&](const AstPtr &node) -> AstPtr {
    if (!node)
      return node;
    if (const auto *clk = node->as<ClockedNode>())
      return strip_clock(clk->body);
    if (const auto *lb = node->as<LabeledNode>())
      return strip_clock(lb->body);
    if (const auto *b = node->as<BoolExprNode>()) {
      BoolExprNode copy = *b;
      for (auto &a : copy.args)
        a = strip_clock(a);
      return make_ast(copy);
    }
    if (const auto *d = node->as<DelayNode>()) {
      DelayNode copy = *d;
      copy.lhs = strip_clock(copy.lhs);
      copy.rhs = strip_clock(copy.rhs);
      return make_ast(copy);
    }
    if (const auto *r = node->as<RepeatNode>()) {
      RepeatNode copy = *r;
      copy.body = strip_clock(copy.body);
      return make_ast(copy);
    }
    if (const auto *impl = node->as<ImplicationNode>()) {
      ImplicationNode copy = *impl;
      copy.antecedent = strip_clock(copy.antecedent);
      copy.consequent = strip_clock(copy.consequent);
      return make_ast(copy);
    }
    if (const auto *sb = node->as<SeqBinopNode>()) {
      SeqBinopNode copy = *sb;
      copy.lhs = strip_clock(copy.lhs);
      copy.rhs = strip_clock(copy.rhs);
      return make_ast(copy);
    }
    return node;
  };
  cur = strip_clock(cur);

  // liveness decides the abstention reason ahead of any other oddity
  if (contains_operator(cur, {OpKind::SEventually, OpKind::SUntil,
                              OpKind::SAlways, OpKind::UntilWith,
                              OpKind::Until, OpKind::Eventually}))
    throw UnsupportedConstruct("liveness");
  if (contains_disable_below(cur))
    throw UnsupportedConstruct("unsupported_fn");

  ctx.out.root = ctx.lower_prop(cur);

  if (!aborts.empty()) {
    int cond = ctx.lower_bool(aborts[0]);
    for (std::size_t i = 1; i < aborts.size(); ++i)
      cond = ctx.bor(cond, ctx.lower_bool(aborts[i]));
    ctx.out.abort = cond;
  }
  ctx.out.clock = clock_name;
  ctx.out.window = ctx.window_prop(ctx.out.root);

  // sort atoms for deterministic trace layouts, remapping ids
  {
    std::vector<std::string> sorted = ctx.out.atoms;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::string, int> new_ids;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      new_ids[sorted[i]] = static_cast<int>(i);
    for (auto &b : ctx.out.bexprs)
      if (b.kind == Lowered::BNode::Kind::Atom)
        b.atom = new_ids[ctx.out.atoms[static_cast<std::size_t>(b.atom)]];
    ctx.out.atoms = std::move(sorted);
  }
  return ctx.out;
}

} // namespace svaeq
