// SPDX-License-Identifier: Apache-2.0
//
// Match-set evaluation of the lowered form. Conventions, shared verbatim
// with the smt encoder (smt.cpp) -- any change here must be mirrored there:
//
//  - ends are encoded as a bitmask, bit e+1 for a match ending at e; the
//    empty match (e = t-1) is bit t
//  - concatenation s1 ##d s2 starts s2 at end(s1) + d, rejecting the
//    two degenerate ##0 fusions with an empty side
//  - a sub-match that would start at or beyond the bound makes the whole
//    sequence pending, without looking at satisfiability
//  - $rose/$fell/$stable/$past sample previous-value 0 at cycle 0
//  - an antecedent match obligates the consequent at the match end
//    (overlap) or one cycle later; ends beyond the bound are unresolved
//  - disable iff discharges a violation when the abort condition holds
//    anywhere in [t, t + window] clipped to the bound
#include "svaeq/eval.hpp"

#include <algorithm>
#include <stdexcept>

#include "svaeq/errors.hpp"

namespace svaeq {

PropertyEvaluator::PropertyEvaluator(const Lowered &prop,
                                     std::span<const std::string> universe,
                                     int depth)
    : prop_(prop), depth_(depth) {
  if (depth < 1 || depth > 62)
    throw ConfigError("depth must be in [1, 62]");
  atom_to_universe_.resize(prop.atoms.size());
  for (std::size_t i = 0; i < prop.atoms.size(); ++i) {
    auto it = std::find(universe.begin(), universe.end(), prop.atoms[i]);
    if (it == universe.end())
      throw Error("signal universe does not cover atom " + prop.atoms[i]);
    atom_to_universe_[i] = static_cast<int>(it - universe.begin());
  }
  seq_memo_.resize(prop.seqs.size() * static_cast<std::size_t>(depth));
  prop_memo_.resize(prop.props.size() * static_cast<std::size_t>(depth));
}

bool PropertyEvaluator::eval_bool(int b, int t) const {
  const auto &n = prop_.bexprs[static_cast<std::size_t>(b)];
  using K = Lowered::BNode::Kind;
  switch (n.kind) {
  case K::Const:
    return n.cval;
  case K::Atom: {
    uint64_t col = cols_[static_cast<std::size_t>(
        atom_to_universe_[static_cast<std::size_t>(n.atom)])];
    return ((col >> t) & 1u) != 0;
  }
  case K::Not:
    return !eval_bool(n.a, t);
  case K::And:
    return eval_bool(n.a, t) && eval_bool(n.b, t);
  case K::Or:
    return eval_bool(n.a, t) || eval_bool(n.b, t);
  case K::Rose: {
    bool prev = t > 0 && eval_bool(n.a, t - 1);
    return eval_bool(n.a, t) && !prev;
  }
  case K::Fell: {
    bool prev = t > 0 && eval_bool(n.a, t - 1);
    return !eval_bool(n.a, t) && prev;
  }
  case K::Stable: {
    bool prev = t > 0 && eval_bool(n.a, t - 1);
    return eval_bool(n.a, t) == prev;
  }
  case K::Past:
    return t > 0 && eval_bool(n.a, t - 1);
  }
  return false;
}

PropertyEvaluator::SeqResult PropertyEvaluator::seq_at(int s, int t) {
  SeqCell &cell =
      seq_memo_[static_cast<std::size_t>(s) * static_cast<std::size_t>(depth_) +
                static_cast<std::size_t>(t)];
  if (cell.epoch == epoch_)
    return cell.r;

  const auto &n = prop_.seqs[static_cast<std::size_t>(s)];
  using K = Lowered::SNode::Kind;
  SeqResult r;
  const int K_ = depth_;

  switch (n.kind) {
  case K::SBool:
    if (eval_bool(n.bexpr, t))
      r.ends = 1ull << (t + 1);
    break;

  case K::SDelay: {
    // candidate rhs start positions from each lhs end; a missing lhs is a
    // leading delay starting at t itself
    uint64_t lhs_ends = 0;
    bool lhs_pend = false;
    if (n.lhs >= 0) {
      SeqResult l = seq_at(n.lhs, t);
      lhs_ends = l.ends;
      lhs_pend = l.pend;
    }
    r.pend = lhs_pend;
    auto try_start = [&](int start) {
      if (start >= K_) {
        r.pend = true;
        return;
      }
      SeqResult sub = seq_at(n.rhs, start);
      uint64_t ends = sub.ends;
      r.ends |= ends;
      r.pend = r.pend || sub.pend;
    };
    for (int d = n.lo; d <= n.hi; ++d) {
      if (n.lhs < 0) {
        try_start(t + d);
        continue;
      }
      for (int e = t - 1; e < K_; ++e) {
        if (!((lhs_ends >> (e + 1)) & 1u))
          continue;
        int start = e + d;
        if (start < t)
          continue; // empty lhs with ##0 cannot fuse
        if (start >= K_) {
          r.pend = true;
          continue;
        }
        SeqResult sub = seq_at(n.rhs, start);
        uint64_t ends = sub.ends;
        if (d == 0)
          ends &= ~(1ull << start); // ##0 with an empty rhs cannot fuse
        r.ends |= ends;
        r.pend = r.pend || sub.pend;
      }
    }
    break;
  }

  case K::SRepeat: {
    uint64_t cur = 1ull << t; // zero repetitions: the empty match at t-1
    bool cur_pend = false;
    if (n.lo == 0)
      r.ends |= cur;
    for (int rep = 1; rep <= n.hi; ++rep) {
      uint64_t next = 0;
      bool next_pend = cur_pend; // a pending prefix stays pending
      for (int e = t - 1; e < K_; ++e) {
        if (!((cur >> (e + 1)) & 1u))
          continue;
        int start = e + 1;
        if (start >= K_) {
          next_pend = true;
          continue;
        }
        SeqResult sub = seq_at(n.rhs, start);
        next |= sub.ends;
        next_pend = next_pend || sub.pend;
      }
      r.pend = r.pend || next_pend;
      if (rep >= n.lo)
        r.ends |= next;
      if (next == cur && next_pend == cur_pend)
        break; // fixpoint: further repetitions add nothing
      cur = next;
      cur_pend = next_pend;
      if (cur == 0 && !cur_pend)
        break;
    }
    break;
  }

  case K::SThroughout: {
    SeqResult sub = seq_at(n.rhs, t);
    // prefix of cycles where the condition has held since t
    uint64_t ok_prefix = 1ull << t; // empty match needs nothing
    bool all_ok = true;
    for (int c = t; c < K_; ++c) {
      if (!eval_bool(n.bexpr, c)) {
        all_ok = false;
        break;
      }
      ok_prefix |= 1ull << (c + 1);
    }
    r.ends = sub.ends & ok_prefix;
    r.pend = sub.pend && all_ok;
    break;
  }

  case K::SWithin: {
    SeqResult outer = seq_at(n.rhs, t);
    r.pend = outer.pend;
    for (int e = t - 1; e < K_; ++e) {
      if (!((outer.ends >> (e + 1)) & 1u))
        continue;
      bool contained = false;
      for (int t2 = t; t2 <= e + 1 && !contained; ++t2) {
        if (t2 >= K_)
          break;
        SeqResult inner = seq_at(n.lhs, t2);
        // any inner end at or before e counts, the empty match included
        uint64_t below = e + 2 >= 64 ? ~0ull : ((1ull << (e + 2)) - 1);
        contained = (inner.ends & below) != 0;
      }
      if (contained)
        r.ends |= 1ull << (e + 1);
    }
    break;
  }

  case K::SIntersect: {
    SeqResult a = seq_at(n.lhs, t);
    SeqResult b = seq_at(n.rhs, t);
    r.ends = a.ends & b.ends;
    r.pend = a.pend && b.pend;
    break;
  }
  }

  cell.epoch = epoch_;
  cell.r = r;
  return r;
}

bool PropertyEvaluator::violated_at(int p, int t) {
  PropCell &cell =
      prop_memo_[static_cast<std::size_t>(p) * static_cast<std::size_t>(depth_) +
                 static_cast<std::size_t>(t)];
  if (cell.epoch == epoch_)
    return cell.violated;

  const auto &n = prop_.props[static_cast<std::size_t>(p)];
  bool v = false;
  if (n.kind == Lowered::PNode::Kind::PSeq) {
    SeqResult r = seq_at(n.seq, t);
    v = r.ends == 0 && !r.pend;
  } else {
    SeqResult ant = seq_at(n.seq, t);
    for (int e = t - 1; e < depth_ && !v; ++e) {
      if (!((ant.ends >> (e + 1)) & 1u))
        continue;
      if (n.overlap && e < t)
        continue; // an empty antecedent match carries no obligation
      int start = n.overlap ? e : e + 1;
      if (start >= depth_)
        continue; // unresolved at the bound
      v = violated_at(n.consequent, start);
    }
  }
  cell.epoch = epoch_;
  cell.violated = v;
  return v;
}

bool PropertyEvaluator::holds(std::span<const uint64_t> columns) {
  cols_ = columns;
  ++epoch_;
  for (int t = 0; t < depth_; ++t) {
    if (!violated_at(prop_.root, t))
      continue;
    if (prop_.abort >= 0) {
      bool discharged = false;
      int last = std::min(depth_ - 1, t + prop_.window);
      for (int u = t; u <= last && !discharged; ++u)
        discharged = eval_bool(prop_.abort, u);
      if (discharged)
        continue;
    }
    return false;
  }
  return true;
}

bool eval_property(const Lowered &prop, const TraceAssignment &trace) {
  PropertyEvaluator ev(prop, trace.signals, trace.depth);
  return ev.holds(trace.columns);
}

} // namespace svaeq
