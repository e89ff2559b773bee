// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace svaeq {

enum class TokenKind {
  Ident,      // foo, \escaped , pkg::name kept as one token with PkgScoped flag
  SysIdent,   // $rose, $past, $onehot, ... (lexed generically)
  Number,     // 12, 32'd4, 1'b1, '0
  MacroUse,   // `NAME (distinct class so normalizer rule R1 can target it)
  LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Comma, Colon, Semicolon, Dot, At, Dollar, Tick, Plus, Minus, Star, Assign,
  Hash,        // single #, used by the module-shell grammar
  Bang,        // !
  AmpAmp,      // &&
  PipePipe,    // ||
  EqEq, NotEq, // == !=
  ArrowBool,   // ->
  OverlapImpl, // |->
  NonoverlapImpl, // |=>
  HashHash,    // ##
  Keyword,     // text carries the keyword
  Eof,
};

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;     // lexeme without decoration (macro name for MacroUse)
  std::size_t pos = 0;  // byte offset of first character
  uint64_t value = 0;   // numeric value for Number (x/z digits read as 0)
  bool pkg_scoped = false; // Ident carried a pkg:: prefix (prefix dropped)
};

// Comments survive lexing as trivia so text-level passes can report them.
struct Trivia {
  std::size_t pos = 0;
  std::string text;
  bool block = false; // /* */ vs //
};

struct TokenStream {
  std::vector<Token> tokens;
  std::vector<Trivia> trivia;
};

const char *to_string(TokenKind kind);

} // namespace svaeq
