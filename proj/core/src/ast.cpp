// SPDX-License-Identifier: Apache-2.0
#include "svaeq/ast.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace svaeq {

std::string SymExpr::render() const {
  if (sym.empty())
    return std::to_string(k);
  if (k == 0)
    return sym;
  if (k > 0)
    return sym + "+" + std::to_string(k);
  return sym + "-" + std::to_string(-k);
}

std::string SymExpr::flat() const {
  if (sym.empty())
    return k >= 0 ? std::to_string(k) : "m" + std::to_string(-k);
  if (k == 0)
    return sym;
  if (k > 0)
    return sym + "_p" + std::to_string(k);
  return sym + "_m" + std::to_string(-k);
}

std::string Select::render() const {
  std::string s = "[" + lo.render();
  if (hi)
    s += ":" + hi->render();
  return s + "]";
}

std::string Select::flat() const {
  std::string s = lo.flat();
  if (hi)
    s += "_" + hi->flat();
  return s;
}

std::string Bound::render() const {
  return unbounded ? "$" : expr.render();
}

namespace {

// Binding levels; a child below its required level gets parentheses.
enum Level : int {
  kLabeled = 2,
  kClocked = 4,
  kDisable = 5,
  kLivenessPrefix = 10,
  kImplication = 15,
  kUntil = 20,
  kIntersect = 26,
  kWithin = 28,
  kThroughout = 30,
  kDelay = 35,
  kRepeat = 40,
  kBoolImplies = 50,
  kBoolOr = 60,
  kBoolAnd = 70,
  kBoolEq = 80,
  kBoolNot = 90,
  kAtom = 100,
};

int level_of(const Ast &ast) {
  struct V {
    int operator()(const BoolExprNode &n) const {
      switch (n.op) {
      case BoolOp::Not: return kBoolNot;
      case BoolOp::Eq:
      case BoolOp::Neq: return kBoolEq;
      case BoolOp::And: return kBoolAnd;
      case BoolOp::Or: return kBoolOr;
      case BoolOp::ImpliesBool: return kBoolImplies;
      }
      return kAtom;
    }
    int operator()(const SignalRefNode &) const { return kAtom; }
    int operator()(const LiteralNode &) const { return kAtom; }
    int operator()(const SampledFnNode &) const { return kAtom; }
    int operator()(const ReductionFnNode &) const { return kAtom; }
    int operator()(const CallNode &) const { return kAtom; }
    int operator()(const DelayNode &) const { return kDelay; }
    int operator()(const RepeatNode &) const { return kRepeat; }
    int operator()(const ImplicationNode &) const { return kImplication; }
    int operator()(const SeqBinopNode &n) const {
      switch (n.kind) {
      case SeqBinopKind::Throughout: return kThroughout;
      case SeqBinopKind::Within: return kWithin;
      case SeqBinopKind::Intersect: return kIntersect;
      }
      return kAtom;
    }
    int operator()(const LivenessNode &n) const {
      switch (n.kind) {
      case LivenessKind::SEventually:
      case LivenessKind::Eventually:
      case LivenessKind::SAlways: return kLivenessPrefix;
      default: return kUntil;
      }
    }
    int operator()(const DisableIffNode &) const { return kDisable; }
    int operator()(const ClockedNode &) const { return kClocked; }
    int operator()(const LabeledNode &) const { return kLabeled; }
  };
  return std::visit(V{}, ast.node);
}

void render_to(const AstPtr &ast, int required, std::string &out);

void render_child(const AstPtr &ast, int required, std::string &out) {
  if (level_of(*ast) < required) {
    out += "(";
    render_to(ast, 0, out);
    out += ")";
  } else {
    render_to(ast, required, out);
  }
}

std::string render_path(const std::vector<PathSeg> &path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i)
      s += ".";
    s += path[i].name;
    for (const auto &sel : path[i].selects)
      s += sel.render();
  }
  return s;
}

void render_to(const AstPtr &ast, int required, std::string &out) {
  (void)required;
  struct V {
    std::string &out;
    void operator()(const BoolExprNode &n) const {
      switch (n.op) {
      case BoolOp::Not:
        out += "!";
        render_child(n.args[0], kBoolNot + 1, out);
        return;
      case BoolOp::Eq:
      case BoolOp::Neq:
        render_child(n.args[0], kBoolEq + 1, out);
        out += n.op == BoolOp::Eq ? " == " : " != ";
        render_child(n.args[1], kBoolEq + 1, out);
        return;
      case BoolOp::And:
        render_child(n.args[0], kBoolAnd, out);
        out += " && ";
        render_child(n.args[1], kBoolAnd + 1, out);
        return;
      case BoolOp::Or:
        render_child(n.args[0], kBoolOr, out);
        out += " || ";
        render_child(n.args[1], kBoolOr + 1, out);
        return;
      case BoolOp::ImpliesBool:
        render_child(n.args[0], kBoolImplies + 1, out);
        out += " -> ";
        render_child(n.args[1], kBoolImplies, out);
        return;
      }
    }
    void operator()(const SignalRefNode &n) const { out += render_path(n.path); }
    void operator()(const LiteralNode &n) const {
      out += n.text.empty() ? std::to_string(n.value) : n.text;
    }
    void operator()(const SampledFnNode &n) const {
      switch (n.kind) {
      case SampledKind::Rose: out += "$rose("; break;
      case SampledKind::Fell: out += "$fell("; break;
      case SampledKind::Stable: out += "$stable("; break;
      case SampledKind::Past: out += "$past("; break;
      }
      render_to(n.arg, 0, out);
      if (n.kind == SampledKind::Past && n.past_depth != 1)
        out += ", " + std::to_string(n.past_depth);
      out += ")";
    }
    void operator()(const ReductionFnNode &n) const {
      out += n.kind == ReductionKind::Onehot ? "$onehot(" : "$onehot0(";
      if (n.braced) {
        out += "{";
        for (std::size_t i = 0; i < n.bits.size(); ++i) {
          if (i)
            out += ", ";
          render_to(n.bits[i], 0, out);
        }
        out += "}";
      } else {
        render_to(n.bits[0], 0, out);
      }
      out += ")";
    }
    void operator()(const CallNode &n) const {
      out += n.callee + "(";
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i)
          out += ", ";
        render_to(n.args[i], 0, out);
      }
      out += ")";
    }
    void operator()(const DelayNode &n) const {
      if (n.lhs) {
        render_child(n.lhs, kDelay, out);
        out += " ";
      }
      out += "##";
      if (n.lo == n.hi) {
        out += n.lo.render();
      } else {
        out += "[" + n.lo.render() + ":" + n.hi.render() + "]";
      }
      out += " ";
      render_child(n.rhs, kDelay + 1, out);
    }
    void operator()(const RepeatNode &n) const {
      render_child(n.body, kRepeat, out);
      out += n.kind == RepeatKind::Consecutive ? "[*" : "[=";
      out += n.lo.render();
      if (!(n.hi == n.lo))
        out += ":" + n.hi.render();
      out += "]";
    }
    void operator()(const ImplicationNode &n) const {
      render_child(n.antecedent, kImplication + 1, out);
      out += n.kind == ImplicationKind::Overlap ? " |-> " : " |=> ";
      render_child(n.consequent, kImplication, out);
    }
    void operator()(const SeqBinopNode &n) const {
      int lv = level_of(Ast{SeqBinopNode{n.kind, nullptr, nullptr}});
      bool right_assoc = n.kind == SeqBinopKind::Throughout;
      render_child(n.lhs, right_assoc ? lv + 1 : lv, out);
      switch (n.kind) {
      case SeqBinopKind::Throughout: out += " throughout "; break;
      case SeqBinopKind::Within: out += " within "; break;
      case SeqBinopKind::Intersect: out += " intersect "; break;
      }
      render_child(n.rhs, right_assoc ? lv : lv + 1, out);
    }
    void operator()(const LivenessNode &n) const {
      switch (n.kind) {
      case LivenessKind::SEventually:
      case LivenessKind::Eventually:
      case LivenessKind::SAlways:
        out += to_string(n.kind);
        out += " ";
        render_child(n.operands[0], kLivenessPrefix, out);
        return;
      default:
        render_child(n.operands[0], kUntil + 1, out);
        out += " ";
        out += to_string(n.kind);
        out += " ";
        render_child(n.operands[1], kUntil, out);
        return;
      }
    }
    void operator()(const DisableIffNode &n) const {
      out += "disable iff (";
      render_to(n.cond, 0, out);
      out += ") ";
      render_child(n.body, kDisable, out);
    }
    void operator()(const ClockedNode &n) const {
      out += "@(";
      switch (n.edge) {
      case ClockEdge::Pos: out += "posedge "; break;
      case ClockEdge::Neg: out += "negedge "; break;
      case ClockEdge::Any: break;
      }
      render_to(n.clock, 0, out);
      out += ") ";
      render_child(n.body, kClocked, out);
    }
    void operator()(const LabeledNode &n) const {
      out += n.label + ": ";
      render_child(n.body, kLabeled, out);
    }
  };
  std::visit(V{out}, ast->node);
}

void walk(const AstPtr &ast, const std::function<void(const Ast &)> &fn) {
  if (!ast)
    return;
  fn(*ast);
  struct V {
    const std::function<void(const Ast &)> &fn;
    void operator()(const BoolExprNode &n) const {
      for (const auto &a : n.args)
        walk(a, fn);
    }
    void operator()(const SignalRefNode &) const {}
    void operator()(const LiteralNode &) const {}
    void operator()(const SampledFnNode &n) const { walk(n.arg, fn); }
    void operator()(const ReductionFnNode &n) const {
      for (const auto &b : n.bits)
        walk(b, fn);
    }
    void operator()(const CallNode &n) const {
      for (const auto &a : n.args)
        walk(a, fn);
    }
    void operator()(const DelayNode &n) const {
      walk(n.lhs, fn);
      walk(n.rhs, fn);
    }
    void operator()(const RepeatNode &n) const { walk(n.body, fn); }
    void operator()(const ImplicationNode &n) const {
      walk(n.antecedent, fn);
      walk(n.consequent, fn);
    }
    void operator()(const SeqBinopNode &n) const {
      walk(n.lhs, fn);
      walk(n.rhs, fn);
    }
    void operator()(const LivenessNode &n) const {
      for (const auto &o : n.operands)
        walk(o, fn);
    }
    void operator()(const DisableIffNode &n) const {
      walk(n.cond, fn);
      walk(n.body, fn);
    }
    void operator()(const ClockedNode &n) const {
      walk(n.clock, fn);
      walk(n.body, fn);
    }
    void operator()(const LabeledNode &n) const { walk(n.body, fn); }
  };
  std::visit(V{fn}, ast->node);
}

void collect_op_kinds(const Ast &ast, std::vector<OpKind> &out) {
  struct V {
    std::vector<OpKind> &out;
    void operator()(const BoolExprNode &n) const {
      switch (n.op) {
      case BoolOp::Not: out.push_back(OpKind::Not); break;
      case BoolOp::And: out.push_back(OpKind::And); break;
      case BoolOp::Or: out.push_back(OpKind::Or); break;
      case BoolOp::ImpliesBool: out.push_back(OpKind::ImpliesBool); break;
      case BoolOp::Eq: out.push_back(OpKind::Eq); break;
      case BoolOp::Neq: out.push_back(OpKind::Neq); break;
      }
    }
    void operator()(const SignalRefNode &) const {}
    void operator()(const LiteralNode &) const {}
    void operator()(const SampledFnNode &n) const {
      switch (n.kind) {
      case SampledKind::Rose: out.push_back(OpKind::Rose); break;
      case SampledKind::Fell: out.push_back(OpKind::Fell); break;
      case SampledKind::Stable: out.push_back(OpKind::Stable); break;
      case SampledKind::Past: out.push_back(OpKind::Past); break;
      }
    }
    void operator()(const ReductionFnNode &n) const {
      out.push_back(n.kind == ReductionKind::Onehot ? OpKind::Onehot
                                                    : OpKind::Onehot0);
    }
    void operator()(const CallNode &) const { out.push_back(OpKind::Call); }
    void operator()(const DelayNode &) const { out.push_back(OpKind::Delay); }
    void operator()(const RepeatNode &n) const {
      out.push_back(n.kind == RepeatKind::Consecutive ? OpKind::RepeatStar
                                                      : OpKind::RepeatGoto);
    }
    void operator()(const ImplicationNode &n) const {
      out.push_back(n.kind == ImplicationKind::Overlap
                        ? OpKind::ImplOverlap
                        : OpKind::ImplNonoverlap);
    }
    void operator()(const SeqBinopNode &n) const {
      switch (n.kind) {
      case SeqBinopKind::Throughout: out.push_back(OpKind::Throughout); break;
      case SeqBinopKind::Within: out.push_back(OpKind::Within); break;
      case SeqBinopKind::Intersect: out.push_back(OpKind::Intersect); break;
      }
    }
    void operator()(const LivenessNode &n) const {
      switch (n.kind) {
      case LivenessKind::SEventually: out.push_back(OpKind::SEventually); break;
      case LivenessKind::SUntil: out.push_back(OpKind::SUntil); break;
      case LivenessKind::SAlways: out.push_back(OpKind::SAlways); break;
      case LivenessKind::UntilWith: out.push_back(OpKind::UntilWith); break;
      case LivenessKind::Until: out.push_back(OpKind::Until); break;
      case LivenessKind::Eventually: out.push_back(OpKind::Eventually); break;
      }
    }
    void operator()(const DisableIffNode &) const {
      out.push_back(OpKind::DisableIff);
    }
    void operator()(const ClockedNode &) const {
      out.push_back(OpKind::Clocked);
    }
    void operator()(const LabeledNode &) const {}
  };
  std::visit(V{out}, ast.node);
}

} // namespace

Identifier identifier_of(const SignalRefNode &ref) {
  Identifier id;
  std::string flat, base;
  for (std::size_t i = 0; i < ref.path.size(); ++i) {
    const auto &seg = ref.path[i];
    id.segments.push_back(seg.name);
    if (!flat.empty()) {
      flat += "_";
      base += "_";
    }
    flat += seg.name;
    base += seg.name;
    bool last = i + 1 == ref.path.size();
    for (const auto &sel : seg.selects) {
      id.bit_selects.push_back(sel);
      flat += "_" + sel.flat();
      if (!last)
        base += "_" + sel.flat();
    }
    if (last)
      id.trailing_selects = static_cast<int>(seg.selects.size());
  }
  id.text = render_path(ref.path);
  id.flat = std::move(flat);
  id.decl_base = std::move(base);
  return id;
}

std::string render(const AstPtr &ast) {
  std::string out;
  render_to(ast, 0, out);
  return out;
}

std::vector<Identifier> free_identifiers(const AstPtr &ast) {
  std::map<std::string, Identifier> found;
  auto add = [&](Identifier id) {
    found.emplace(id.flat, std::move(id));
  };
  auto add_sym = [&](const SymExpr &e) {
    if (e.is_constant())
      return;
    SignalRefNode ref{{PathSeg{e.sym, {}}}};
    add(identifier_of(ref));
  };
  auto add_bound = [&](const Bound &b) {
    if (!b.unbounded)
      add_sym(b.expr);
  };
  walk(ast, [&](const Ast &node) {
    if (const auto *ref = node.as<SignalRefNode>()) {
      add(identifier_of(*ref));
      for (const auto &seg : ref->path)
        for (const auto &sel : seg.selects) {
          add_sym(sel.lo);
          if (sel.hi)
            add_sym(*sel.hi);
        }
    } else if (const auto *call = node.as<CallNode>()) {
      SignalRefNode ref{{PathSeg{call->callee, {}}}};
      add(identifier_of(ref));
    } else if (const auto *delay = node.as<DelayNode>()) {
      add_bound(delay->lo);
      add_bound(delay->hi);
    } else if (const auto *rep = node.as<RepeatNode>()) {
      add_bound(rep->lo);
      add_bound(rep->hi);
    }
  });
  std::vector<Identifier> out;
  out.reserve(found.size());
  for (auto &[_, id] : found)
    out.push_back(std::move(id));
  return out;
}

bool contains_operator(const AstPtr &ast, const std::vector<OpKind> &ops) {
  bool hit = false;
  walk(ast, [&](const Ast &node) {
    if (hit)
      return;
    std::vector<OpKind> kinds;
    collect_op_kinds(node, kinds);
    for (OpKind k : kinds)
      if (std::find(ops.begin(), ops.end(), k) != ops.end()) {
        hit = true;
        return;
      }
  });
  return hit;
}

namespace {

bool equal(const AstPtr &a, const AstPtr &b);

struct EqV {
  const Ast &rhs;
  bool operator()(const BoolExprNode &a) const {
    const auto *b = rhs.as<BoolExprNode>();
    if (!b || a.op != b->op || a.args.size() != b->args.size())
      return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (!equal(a.args[i], b->args[i]))
        return false;
    return true;
  }
  bool operator()(const SignalRefNode &a) const {
    const auto *b = rhs.as<SignalRefNode>();
    return b && a.path == b->path;
  }
  bool operator()(const LiteralNode &a) const {
    const auto *b = rhs.as<LiteralNode>();
    return b && a.value == b->value;
  }
  bool operator()(const SampledFnNode &a) const {
    const auto *b = rhs.as<SampledFnNode>();
    return b && a.kind == b->kind && a.past_depth == b->past_depth &&
           equal(a.arg, b->arg);
  }
  bool operator()(const ReductionFnNode &a) const {
    const auto *b = rhs.as<ReductionFnNode>();
    if (!b || a.kind != b->kind || a.bits.size() != b->bits.size())
      return false;
    for (std::size_t i = 0; i < a.bits.size(); ++i)
      if (!equal(a.bits[i], b->bits[i]))
        return false;
    return true;
  }
  bool operator()(const CallNode &a) const {
    const auto *b = rhs.as<CallNode>();
    if (!b || a.callee != b->callee || a.args.size() != b->args.size())
      return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (!equal(a.args[i], b->args[i]))
        return false;
    return true;
  }
  bool operator()(const DelayNode &a) const {
    const auto *b = rhs.as<DelayNode>();
    if (!b || !(a.lo == b->lo) || !(a.hi == b->hi))
      return false;
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b->lhs))
      return false;
    if (a.lhs && !equal(a.lhs, b->lhs))
      return false;
    return equal(a.rhs, b->rhs);
  }
  bool operator()(const RepeatNode &a) const {
    const auto *b = rhs.as<RepeatNode>();
    return b && a.kind == b->kind && a.lo == b->lo && a.hi == b->hi &&
           equal(a.body, b->body);
  }
  bool operator()(const ImplicationNode &a) const {
    const auto *b = rhs.as<ImplicationNode>();
    return b && a.kind == b->kind && equal(a.antecedent, b->antecedent) &&
           equal(a.consequent, b->consequent);
  }
  bool operator()(const SeqBinopNode &a) const {
    const auto *b = rhs.as<SeqBinopNode>();
    return b && a.kind == b->kind && equal(a.lhs, b->lhs) &&
           equal(a.rhs, b->rhs);
  }
  bool operator()(const LivenessNode &a) const {
    const auto *b = rhs.as<LivenessNode>();
    if (!b || a.kind != b->kind || a.operands.size() != b->operands.size())
      return false;
    for (std::size_t i = 0; i < a.operands.size(); ++i)
      if (!equal(a.operands[i], b->operands[i]))
        return false;
    return true;
  }
  bool operator()(const DisableIffNode &a) const {
    const auto *b = rhs.as<DisableIffNode>();
    return b && equal(a.cond, b->cond) && equal(a.body, b->body);
  }
  bool operator()(const ClockedNode &a) const {
    const auto *b = rhs.as<ClockedNode>();
    return b && a.edge == b->edge && equal(a.clock, b->clock) &&
           equal(a.body, b->body);
  }
  bool operator()(const LabeledNode &a) const {
    const auto *b = rhs.as<LabeledNode>();
    return b && a.label == b->label && equal(a.body, b->body);
  }
};

bool equal(const AstPtr &a, const AstPtr &b) {
  if (!a || !b)
    return a == b;
  if (a->node.index() != b->node.index())
    return false;
  return std::visit(EqV{*b}, a->node);
}

} // namespace

bool structural_equal(const AstPtr &a, const AstPtr &b) { return equal(a, b); }

bool is_boolean_expr(const AstPtr &ast) {
  return ast->is<BoolExprNode>() || ast->is<SignalRefNode>() ||
         ast->is<LiteralNode>() || ast->is<SampledFnNode>() ||
         ast->is<ReductionFnNode>() || ast->is<CallNode>();
}

bool is_sequence_expr(const AstPtr &ast) {
  return is_boolean_expr(ast) || ast->is<DelayNode>() ||
         ast->is<RepeatNode>() || ast->is<SeqBinopNode>();
}

const char *to_string(LivenessKind kind) {
  switch (kind) {
  case LivenessKind::SEventually: return "s_eventually";
  case LivenessKind::SUntil: return "s_until";
  case LivenessKind::SAlways: return "s_always";
  case LivenessKind::UntilWith: return "until_with";
  case LivenessKind::Until: return "until";
  case LivenessKind::Eventually: return "eventually";
  }
  return "?";
}

const char *to_string(ClockEdge edge) {
  switch (edge) {
  case ClockEdge::Pos: return "posedge";
  case ClockEdge::Neg: return "negedge";
  case ClockEdge::Any: return "any";
  }
  return "?";
}

} // namespace svaeq
