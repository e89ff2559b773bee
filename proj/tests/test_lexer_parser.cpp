// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "generators.hpp"
#include "svaeq/lexer.hpp"
#include "svaeq/parser.hpp"

using namespace svaeq;

TEST_CASE("lexer splits implication operators") {
  auto ts = tokenize("a |-> b");
  REQUIRE(ts.tokens.size() == 4); // ident |-> ident eof
  CHECK(ts.tokens[0].kind == TokenKind::Ident);
  CHECK(ts.tokens[0].text == "a");
  CHECK(ts.tokens[1].kind == TokenKind::OverlapImpl);
  CHECK(ts.tokens[2].text == "b");
}

TEST_CASE("lexer produces ranged delay tokens") {
  auto ts = tokenize("req ##[1:3] ack");
  bool saw_hashhash = false, saw_1 = false, saw_3 = false;
  for (const auto &t : ts.tokens) {
    if (t.kind == TokenKind::HashHash)
      saw_hashhash = true;
    if (t.kind == TokenKind::Number && t.value == 1)
      saw_1 = true;
    if (t.kind == TokenKind::Number && t.value == 3)
      saw_3 = true;
  }
  CHECK(saw_hashhash);
  CHECK(saw_1);
  CHECK(saw_3);
  auto ast = parse("req ##[1:3] ack");
  const auto *d = ast->as<DelayNode>();
  REQUIRE(d != nullptr);
  CHECK(d->lo == Bound::nat(1));
  CHECK(d->hi == Bound::nat(3));
}

TEST_CASE("lexer rejects characters outside the alphabet") {
  CHECK_THROWS_AS(tokenize("a @@@ b"), LexError);
  CHECK_THROWS_AS(tokenize("a % b"), LexError);
  CHECK_THROWS_AS(tokenize("a < b"), LexError);
}

TEST_CASE("lexer totality: full tokenize or one positioned LexError") {
  testgen::Rng rng(0xfeedface);
  const std::string alphabet =
      "abc_$ ()[]{}|->=#!&:;.@`'\"*+0123456789<>%^~\n\t";
  for (int round = 0; round < 500; ++round) {
    std::size_t len = static_cast<std::size_t>(testgen::pick(rng, 0, 40));
    std::string input;
    for (std::size_t i = 0; i < len; ++i)
      input += alphabet[static_cast<std::size_t>(
          testgen::pick(rng, 0, static_cast<int>(alphabet.size()) - 1))];
    try {
      auto ts = tokenize(input);
      CHECK(!ts.tokens.empty());
      CHECK(ts.tokens.back().kind == TokenKind::Eof);
    } catch (const LexError &e) {
      CHECK(e.position <= input.size());
    }
  }
}

TEST_CASE("comments and macros lex as trivia and macro tokens") {
  auto ts = tokenize("`SIG && a // tail\n/* block */ b");
  CHECK(ts.tokens[0].kind == TokenKind::MacroUse);
  CHECK(ts.tokens[0].text == "SIG");
  REQUIRE(ts.trivia.size() == 2);
  CHECK(!ts.trivia[0].block);
  CHECK(ts.trivia[1].block);
}

TEST_CASE("label prefixes become Labeled nodes") {
  auto ast = parse("ASSERT_X: a && b");
  const auto *lb = ast->as<LabeledNode>();
  REQUIRE(lb != nullptr);
  CHECK(lb->label == "ASSERT_X");
  const auto *be = lb->body->as<BoolExprNode>();
  REQUIRE(be != nullptr);
  CHECK(be->op == BoolOp::And);
}

TEST_CASE("leading delay inside an implication consequent") {
  auto ast = parse("a |-> ##1 b");
  const auto *impl = ast->as<ImplicationNode>();
  REQUIRE(impl != nullptr);
  CHECK(impl->kind == ImplicationKind::Overlap);
  const auto *d = impl->consequent->as<DelayNode>();
  REQUIRE(d != nullptr);
  CHECK(d->lhs == nullptr);
  CHECK(d->lo == Bound::nat(1));
}

TEST_CASE("malformed operator sequences are parse errors") {
  CHECK_THROWS_AS(parse("a |-> |-> b"), ParseError);
  CHECK_THROWS_AS(parse("a ##"), ParseError);
  CHECK_THROWS_AS(parse("(a |-> b) && c"), ParseError); // property in bool ctx
  CHECK_THROWS_AS(parse("(a |-> b) |-> c"), ParseError); // property antecedent
  CHECK_THROWS_AS(parse("##[2:1] a"), ParseError);       // inverted range
  CHECK_THROWS_AS(parse("$countones(a)"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("unbounded ranges parse as hi = unbounded") {
  auto ast = parse("a ##[1:$] b");
  const auto *d = ast->as<DelayNode>();
  REQUIRE(d != nullptr);
  CHECK(!d->lo.unbounded);
  CHECK(d->hi.unbounded);

  auto rep = parse("a[*2:$]");
  const auto *r = rep->as<RepeatNode>();
  REQUIRE(r != nullptr);
  CHECK(r->hi.unbounded);
}

TEST_CASE("goto repetition parses as nonconsecutive") {
  auto ast = parse("a[=1:2]");
  const auto *r = ast->as<RepeatNode>();
  REQUIRE(r != nullptr);
  CHECK(r->kind == RepeatKind::Nonconsecutive);
}

TEST_CASE("width literals keep their spelling") {
  auto ast = parse("cnt == 32'd4");
  CHECK(render(ast) == "cnt == 32'd4");
}

TEST_CASE("canonical render forms") {
  CHECK(render(parse("a|->b")) == "a |-> b");
  CHECK(render(parse("a ##[1:3] b")) == "a ##[1:3] b");
  CHECK(render(parse("disable iff (rst) a |-> b")) ==
        "disable iff (rst) a |-> b");
  CHECK(render(parse("@( posedge clk ) a")) == "@(posedge clk) a");
  CHECK(render(parse("a and b or c")) == "a && b || c");
  CHECK(render(parse("not a")) == "!a");
}

TEST_CASE("parse(render(x)) round-trips structurally") {
  testgen::Rng rng(0x5eed1234);
  for (int round = 0; round < 400; ++round) {
    AstPtr ast = testgen::gen_any_property(rng);
    std::string text = render(ast);
    CAPTURE(text);
    AstPtr again = parse(text);
    CHECK(structural_equal(ast, again));
  }
}

TEST_CASE("free_identifiers basics") {
  auto ids = free_identifiers(parse("a && b"));
  REQUIRE(ids.size() == 2);
  CHECK(ids[0].flat == "a");
  CHECK(ids[1].flat == "b");

  ids = free_identifiers(parse("@(posedge clk) a |-> b"));
  REQUIRE(ids.size() == 3);
  CHECK(ids[0].flat == "a");
  CHECK(ids[1].flat == "b");
  CHECK(ids[2].flat == "clk");
}

TEST_CASE("free_identifiers flattens hierarchical paths") {
  auto ids = free_identifiers(parse("x.y[0].z |-> q"));
  REQUIRE(ids.size() == 2);
  CHECK(ids[0].flat == "q");
  CHECK(ids[1].flat == "x_y_0_z");
  CHECK(ids[1].text == "x.y[0].z");
  CHECK(ids[1].segments == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("free_identifiers covers index symbols and bounds") {
  auto ids = free_identifiers(parse("data[WIDTH-1] |-> ##[1:WIDTH] ack"));
  std::vector<std::string> flats;
  for (const auto &id : ids)
    flats.push_back(id.flat);
  CHECK(flats == std::vector<std::string>{"WIDTH", "ack", "data_WIDTH_m1"});
}

TEST_CASE("free_identifiers is stable under render/parse") {
  testgen::Rng rng(0xabcd);
  for (int round = 0; round < 200; ++round) {
    AstPtr ast = testgen::gen_any_property(rng);
    auto before = free_identifiers(ast);
    auto after = free_identifiers(parse(render(ast)));
    CHECK(before == after);
  }
}

TEST_CASE("contains_operator distinguishes sampled functions from temporal") {
  CHECK(!contains_operator(parse("a |-> b"),
                           {OpKind::SEventually, OpKind::SUntil,
                            OpKind::SAlways, OpKind::UntilWith}));
  CHECK(contains_operator(parse("a |-> s_eventually b"),
                          {OpKind::SEventually, OpKind::SUntil,
                           OpKind::SAlways, OpKind::UntilWith}));
  CHECK(!contains_operator(parse("$rose(a)"),
                           {OpKind::Delay, OpKind::RepeatStar,
                            OpKind::ImplOverlap, OpKind::ImplNonoverlap}));
}

TEST_CASE("precedence: until binds tighter than implication") {
  // (a until b) |-> c is the grouping, and an until-typed antecedent is
  // rejected as non-sequence
  CHECK_THROWS_AS(parse("a until b |-> c"), ParseError);
  // in consequent position the until parses fine
  auto ast = parse("c |-> a until b");
  const auto *impl = ast->as<ImplicationNode>();
  REQUIRE(impl != nullptr);
  CHECK(impl->consequent->is<LivenessNode>());
}

TEST_CASE("prefix liveness swallows the rest of the property") {
  auto ast = parse("s_eventually a |-> b");
  const auto *lv = ast->as<LivenessNode>();
  REQUIRE(lv != nullptr);
  CHECK(lv->operands[0]->is<ImplicationNode>());
}

TEST_CASE("casts and package scopes parse away") {
  CHECK(render(parse("mytype'(x)")) == "x");
  auto ids = free_identifiers(parse("pkg::x && y"));
  REQUIRE(ids.size() == 2);
  CHECK(ids[0].flat == "x"); // prefix dropped at lex time
}

TEST_CASE("concatenations parse only inside reduction functions") {
  auto ast = parse("$onehot({a, b})");
  const auto *red = ast->as<ReductionFnNode>();
  REQUIRE(red != nullptr);
  CHECK(red->bits.size() == 2);
  CHECK_THROWS_AS(parse("{a, b}"), ParseError);
}
