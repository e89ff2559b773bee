// SPDX-License-Identifier: Apache-2.0
//
// Recursive-descent parser for the supported assertion fragment.
// Binding strength, tightest first (IEEE 1800 ordering):
//
//   ! == != && || ->                    boolean layer
//   [*n] [*a:b] [=a:b]                  repetition (postfix)
//   ##n ##[a:b]                         concatenation (left-assoc)
//   throughout | within | intersect     sequence binops (left-assoc)
//   until | s_until | until_with        (right-assoc)
//   |-> |=>                             implication (right-assoc)
//   s_eventually | eventually | s_always   property prefixes
//   disable iff, @(...) clocking, label    top level only
//
#include "svaeq/parser.hpp"

#include "svaeq/lexer.hpp"

namespace svaeq {

namespace {

class Parser {
public:
  explicit Parser(TokenStream stream) : ts_(std::move(stream)) {}

  AstPtr run() {
    AstPtr prop = parse_labeled();
    expect(TokenKind::Eof);
    return prop;
  }

private:
  TokenStream ts_;
  std::size_t at_ = 0;

  const Token &peek(std::size_t ahead = 0) const {
    std::size_t i = at_ + ahead;
    if (i >= ts_.tokens.size())
      i = ts_.tokens.size() - 1;
    return ts_.tokens[i];
  }
  const Token &advance() { return ts_.tokens[at_++]; }
  bool check(TokenKind k) const { return peek().kind == k; }
  bool check_kw(const char *kw) const {
    return peek().kind == TokenKind::Keyword && peek().text == kw;
  }
  bool accept(TokenKind k) {
    if (!check(k))
      return false;
    ++at_;
    return true;
  }
  bool accept_kw(const char *kw) {
    if (!check_kw(kw))
      return false;
    ++at_;
    return true;
  }
  const Token &expect(TokenKind k) {
    if (!check(k))
      throw ParseError(peek().pos, to_string(k));
    return advance();
  }
  [[noreturn]] void fail(const std::string &expected) const {
    throw ParseError(peek().pos, expected);
  }

  AstPtr parse_labeled() {
    if (check(TokenKind::Ident) && peek(1).kind == TokenKind::Colon) {
      std::string label = advance().text;
      advance(); // ':'
      return make_ast(LabeledNode{std::move(label), parse_clocked()});
    }
    return parse_clocked();
  }

  AstPtr parse_clocked() {
    if (accept(TokenKind::At)) {
      expect(TokenKind::LParen);
      ClockEdge edge = ClockEdge::Any;
      if (accept_kw("posedge"))
        edge = ClockEdge::Pos;
      else if (accept_kw("negedge"))
        edge = ClockEdge::Neg;
      AstPtr clock = parse_signal_ref();
      expect(TokenKind::RParen);
      return make_ast(ClockedNode{edge, std::move(clock), parse_clocked()});
    }
    return parse_disable();
  }

  AstPtr parse_disable() {
    if (accept_kw("disable")) {
      if (!accept_kw("iff"))
        fail("'iff'");
      expect(TokenKind::LParen);
      AstPtr cond = parse_property();
      if (!is_boolean_expr(cond))
        fail("boolean abort condition");
      expect(TokenKind::RParen);
      return make_ast(DisableIffNode{std::move(cond), parse_disable()});
    }
    return parse_property();
  }

  AstPtr parse_property() {
    // clock events may prefix subproperties; lowering aliases them all
    // to the one global tick
    if (accept(TokenKind::At)) {
      expect(TokenKind::LParen);
      ClockEdge edge = ClockEdge::Any;
      if (accept_kw("posedge"))
        edge = ClockEdge::Pos;
      else if (accept_kw("negedge"))
        edge = ClockEdge::Neg;
      AstPtr clock = parse_signal_ref();
      expect(TokenKind::RParen);
      return make_ast(ClockedNode{edge, std::move(clock), parse_property()});
    }
    for (auto [kw, kind] : {std::pair{"s_eventually", LivenessKind::SEventually},
                            std::pair{"eventually", LivenessKind::Eventually},
                            std::pair{"s_always", LivenessKind::SAlways}}) {
      if (accept_kw(kw))
        return make_ast(LivenessNode{kind, {parse_property()}});
    }
    return parse_implication();
  }

  AstPtr parse_implication() {
    AstPtr lhs = parse_until();
    ImplicationKind kind;
    if (accept(TokenKind::OverlapImpl))
      kind = ImplicationKind::Overlap;
    else if (accept(TokenKind::NonoverlapImpl))
      kind = ImplicationKind::Nonoverlap;
    else
      return lhs;
    if (!is_sequence_expr(lhs))
      fail("sequence-typed antecedent");
    return make_ast(
        ImplicationNode{kind, std::move(lhs), parse_property()});
  }

  AstPtr parse_until() {
    AstPtr lhs = parse_seq_binop();
    for (auto [kw, kind] : {std::pair{"until", LivenessKind::Until},
                            std::pair{"s_until", LivenessKind::SUntil},
                            std::pair{"until_with", LivenessKind::UntilWith}}) {
      if (accept_kw(kw))
        return make_ast(
            LivenessNode{kind, {std::move(lhs), parse_until()}});
    }
    return lhs;
  }

  // intersect binds loosest of the three, throughout tightest (right-assoc)
  AstPtr parse_seq_binop() {
    AstPtr lhs = parse_within();
    while (accept_kw("intersect")) {
      AstPtr rhs = parse_within();
      if (!is_sequence_expr(lhs) || !is_sequence_expr(rhs))
        fail("sequence expression");
      lhs = make_ast(
          SeqBinopNode{SeqBinopKind::Intersect, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  AstPtr parse_within() {
    AstPtr lhs = parse_throughout();
    while (accept_kw("within")) {
      AstPtr rhs = parse_throughout();
      if (!is_sequence_expr(lhs) || !is_sequence_expr(rhs))
        fail("sequence expression");
      lhs = make_ast(
          SeqBinopNode{SeqBinopKind::Within, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  AstPtr parse_throughout() {
    AstPtr lhs = parse_delay();
    if (accept_kw("throughout")) {
      AstPtr rhs = parse_throughout();
      if (!is_boolean_expr(lhs))
        fail("boolean left operand of throughout");
      if (!is_sequence_expr(rhs))
        fail("sequence expression");
      return make_ast(
          SeqBinopNode{SeqBinopKind::Throughout, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  AstPtr parse_delay() {
    AstPtr lhs; // null for a leading ##
    if (!check(TokenKind::HashHash)) {
      lhs = parse_repeat();
      if (!check(TokenKind::HashHash))
        return lhs;
      if (!is_sequence_expr(lhs))
        fail("sequence expression before ##");
    }
    while (accept(TokenKind::HashHash)) {
      auto [lo, hi] = parse_delay_spec();
      AstPtr rhs = parse_repeat();
      if (!is_sequence_expr(rhs))
        fail("sequence expression after ##");
      lhs = make_ast(DelayNode{lo, hi, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  std::pair<Bound, Bound> parse_delay_spec() {
    if (accept(TokenKind::LBracket)) {
      Bound lo = parse_bound(false);
      expect(TokenKind::Colon);
      Bound hi = parse_bound(true);
      expect(TokenKind::RBracket);
      check_range(lo, hi);
      return {lo, hi};
    }
    Bound n = parse_bound(false);
    return {n, n};
  }

  void check_range(const Bound &lo, const Bound &hi) {
    if (lo.unbounded)
      fail("bounded range start");
    if (!hi.unbounded && lo.expr.is_constant() && hi.expr.is_constant() &&
        lo.expr.k > hi.expr.k)
      fail("range with lo <= hi");
  }

  Bound parse_bound(bool allow_dollar) {
    if (check(TokenKind::Dollar)) {
      if (!allow_dollar)
        fail("bounded count");
      advance();
      return Bound::dollar();
    }
    return Bound::of(parse_sym_expr());
  }

  SymExpr parse_sym_expr() {
    if (check(TokenKind::Number)) {
      const Token &t = advance();
      return SymExpr::constant(static_cast<int64_t>(t.value));
    }
    if (check(TokenKind::Ident)) {
      std::string name = advance().text;
      int64_t off = 0;
      if (accept(TokenKind::Plus))
        off = static_cast<int64_t>(expect(TokenKind::Number).value);
      else if (accept(TokenKind::Minus))
        off = -static_cast<int64_t>(expect(TokenKind::Number).value);
      return SymExpr::symbol(std::move(name), off);
    }
    fail("index or count expression");
  }

  AstPtr parse_repeat() {
    AstPtr seq = parse_bool_implies();
    while (check(TokenKind::LBracket) &&
           (peek(1).kind == TokenKind::Star ||
            peek(1).kind == TokenKind::Assign)) {
      advance(); // '['
      RepeatKind kind = peek().kind == TokenKind::Star
                            ? RepeatKind::Consecutive
                            : RepeatKind::Nonconsecutive;
      advance(); // '*' or '='
      Bound lo, hi;
      if (kind == RepeatKind::Consecutive && check(TokenKind::RBracket)) {
        lo = Bound::nat(0); // [*] is [*0:$]
        hi = Bound::dollar();
      } else {
        lo = parse_bound(false);
        hi = lo;
        if (accept(TokenKind::Colon)) {
          hi = parse_bound(true);
          check_range(lo, hi);
        }
      }
      expect(TokenKind::RBracket);
      if (!is_sequence_expr(seq))
        fail("sequence expression before repetition");
      seq = make_ast(RepeatNode{kind, lo, hi, std::move(seq)});
    }
    return seq;
  }

  // ---- boolean layer ----

  AstPtr parse_bool_implies() {
    AstPtr lhs = parse_bool_or();
    if (accept(TokenKind::ArrowBool)) {
      require_boolean(lhs);
      AstPtr rhs = parse_bool_implies();
      require_boolean(rhs);
      return make_ast(
          BoolExprNode{BoolOp::ImpliesBool, {std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  AstPtr parse_bool_or() {
    AstPtr lhs = parse_bool_and();
    while (check(TokenKind::PipePipe) || check_kw("or")) {
      advance();
      require_boolean(lhs);
      AstPtr rhs = parse_bool_and();
      require_boolean(rhs);
      lhs = make_ast(
          BoolExprNode{BoolOp::Or, {std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  AstPtr parse_bool_and() {
    AstPtr lhs = parse_bool_eq();
    while (check(TokenKind::AmpAmp) || check_kw("and")) {
      advance();
      require_boolean(lhs);
      AstPtr rhs = parse_bool_eq();
      require_boolean(rhs);
      lhs = make_ast(
          BoolExprNode{BoolOp::And, {std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  AstPtr parse_bool_eq() {
    AstPtr lhs = parse_bool_unary();
    if (check(TokenKind::EqEq) || check(TokenKind::NotEq)) {
      BoolOp op = advance().kind == TokenKind::EqEq ? BoolOp::Eq : BoolOp::Neq;
      require_boolean(lhs);
      AstPtr rhs = parse_bool_unary();
      require_boolean(rhs);
      return make_ast(BoolExprNode{op, {std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  AstPtr parse_bool_unary() {
    if (accept(TokenKind::Bang) || accept_kw("not")) {
      AstPtr arg = parse_bool_unary();
      require_boolean(arg);
      return make_ast(BoolExprNode{BoolOp::Not, {std::move(arg)}});
    }
    return parse_atom();
  }

  void require_boolean(const AstPtr &ast) {
    if (!is_boolean_expr(ast))
      fail("boolean expression");
  }

  AstPtr parse_atom() {
    if (accept(TokenKind::LParen)) {
      AstPtr inner = parse_disable(); // full property; context checks type
      expect(TokenKind::RParen);
      return inner;
    }
    if (check(TokenKind::Number)) {
      const Token &t = advance();
      return make_ast(LiteralNode{t.value, t.text});
    }
    if (check(TokenKind::MacroUse)) {
      // opaque macro used as an identifier; R1 strips the backtick
      const Token &t = advance();
      return make_ast(SignalRefNode{{PathSeg{t.text, {}}}});
    }
    if (check(TokenKind::SysIdent))
      return parse_system_fn();
    if (check(TokenKind::Ident)) {
      // cast IDENT'( expr ) is dropped, keeping the inner expression
      if (peek(1).kind == TokenKind::Tick && peek(2).kind == TokenKind::LParen) {
        advance();
        advance();
        advance();
        AstPtr inner = parse_bool_implies();
        require_boolean(inner);
        expect(TokenKind::RParen);
        return inner;
      }
      if (peek(1).kind == TokenKind::LParen)
        return parse_call();
      return parse_signal_ref();
    }
    fail("expression");
  }

  AstPtr parse_call() {
    std::string callee = advance().text;
    expect(TokenKind::LParen);
    std::vector<AstPtr> args;
    if (!check(TokenKind::RParen)) {
      do {
        AstPtr a = parse_bool_implies();
        require_boolean(a);
        args.push_back(std::move(a));
      } while (accept(TokenKind::Comma));
    }
    expect(TokenKind::RParen);
    return make_ast(CallNode{std::move(callee), std::move(args)});
  }

  AstPtr parse_system_fn() {
    const Token &t = advance();
    const std::string &name = t.text;
    auto sampled = [&](SampledKind kind) {
      expect(TokenKind::LParen);
      AstPtr arg = parse_bool_implies();
      require_boolean(arg);
      unsigned depth = 1;
      if (kind == SampledKind::Past && accept(TokenKind::Comma))
        depth = static_cast<unsigned>(expect(TokenKind::Number).value);
      expect(TokenKind::RParen);
      return make_ast(SampledFnNode{kind, std::move(arg), depth});
    };
    if (name == "$rose")
      return sampled(SampledKind::Rose);
    if (name == "$fell")
      return sampled(SampledKind::Fell);
    if (name == "$stable")
      return sampled(SampledKind::Stable);
    if (name == "$past")
      return sampled(SampledKind::Past);
    if (name == "$onehot" || name == "$onehot0") {
      ReductionKind kind =
          name == "$onehot" ? ReductionKind::Onehot : ReductionKind::Onehot0;
      expect(TokenKind::LParen);
      std::vector<AstPtr> bits;
      bool braced = accept(TokenKind::LBrace);
      do {
        AstPtr b = parse_bool_implies();
        require_boolean(b);
        bits.push_back(std::move(b));
      } while (braced && accept(TokenKind::Comma));
      if (braced)
        expect(TokenKind::RBrace);
      expect(TokenKind::RParen);
      return make_ast(ReductionFnNode{kind, std::move(bits), braced});
    }
    throw ParseError(t.pos, "supported system function");
  }

  AstPtr parse_signal_ref() {
    if (!check(TokenKind::Ident))
      fail("identifier");
    std::vector<PathSeg> path;
    for (;;) {
      PathSeg seg;
      seg.name = expect(TokenKind::Ident).text;
      while (check(TokenKind::LBracket) && peek(1).kind != TokenKind::Star &&
             peek(1).kind != TokenKind::Assign) {
        advance();
        Select sel;
        sel.lo = parse_sym_expr();
        if (accept(TokenKind::Colon))
          sel.hi = parse_sym_expr();
        expect(TokenKind::RBracket);
        seg.selects.push_back(std::move(sel));
      }
      path.push_back(std::move(seg));
      if (!check(TokenKind::Dot))
        break;
      advance();
    }
    return make_ast(SignalRefNode{std::move(path)});
  }
};

} // namespace

AstPtr parse(const SourceText &src) {
  Parser parser(tokenize(src.raw));
  return parser.run();
}

AstPtr parse(std::string_view text) {
  Parser parser(tokenize(text));
  return parser.run();
}

} // namespace svaeq
