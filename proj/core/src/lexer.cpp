// SPDX-License-Identifier: Apache-2.0
#include "svaeq/lexer.hpp"

#include <cctype>
#include <unordered_set>

namespace svaeq {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_base_digit(char c) {
  return std::isxdigit(static_cast<unsigned char>(c)) || c == '_' ||
         c == 'x' || c == 'X' || c == 'z' || c == 'Z' || c == '?';
}

const std::unordered_set<std::string> &keywords() {
  static const std::unordered_set<std::string> kw = {
      "posedge", "negedge", "disable", "iff", "throughout", "within",
      "intersect", "until", "s_until", "until_with", "s_eventually",
      "eventually", "s_always", "not", "and", "or",
      // module-shell vocabulary used by the wrapper re-parser
      "assert", "assume", "cover", "property", "module", "endmodule",
      "input", "logic", "parameter", "function", "automatic", "return",
      "endfunction", "begin", "end", "else",
  };
  return kw;
}

uint64_t digits_value(std::string_view digits, unsigned base) {
  uint64_t v = 0;
  for (char c : digits) {
    if (c == '_')
      continue;
    unsigned d = 0;
    if (std::isdigit(static_cast<unsigned char>(c)))
      d = static_cast<unsigned>(c - '0');
    else if (std::isxdigit(static_cast<unsigned char>(c)))
      d = 10 + static_cast<unsigned>(std::tolower(c) - 'a');
    else
      d = 0; // x/z/? bits read as 0
    v = v * base + d;
  }
  return v;
}

} // namespace

TokenStream tokenize(const SourceText &src) { return tokenize(src.raw); }

TokenStream tokenize(std::string_view text) {
  TokenStream out;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto push = [&](TokenKind kind, std::size_t pos, std::string lexeme) {
    Token t;
    t.kind = kind;
    t.text = std::move(lexeme);
    t.pos = pos;
    out.tokens.push_back(std::move(t));
  };

  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }

    std::size_t pos = i;

    // comments -> trivia
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      std::size_t e = text.find('\n', i);
      if (e == std::string_view::npos)
        e = n;
      out.trivia.push_back({pos, std::string(text.substr(i, e - i)), false});
      i = e;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      std::size_t e = text.find("*/", i + 2);
      if (e == std::string_view::npos)
        throw LexError(pos, "unterminated block comment");
      out.trivia.push_back(
          {pos, std::string(text.substr(i, e + 2 - i)), true});
      i = e + 2;
      continue;
    }

    if (c == '`') {
      std::size_t j = i + 1;
      if (j >= n || !is_ident_start(text[j]))
        throw LexError(pos, "macro name after `");
      std::size_t b = j;
      while (j < n && is_ident_char(text[j]))
        ++j;
      push(TokenKind::MacroUse, pos, std::string(text.substr(b, j - b)));
      i = j;
      continue;
    }

    if (c == '\\') { // escaped identifier, terminated by whitespace
      std::size_t j = i + 1;
      while (j < n && !std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i + 1)
        throw LexError(pos, "escaped identifier body");
      Token t;
      t.kind = TokenKind::Ident;
      t.text = std::string(text.substr(i + 1, j - i - 1));
      t.pos = pos;
      out.tokens.push_back(std::move(t));
      i = j;
      continue;
    }

    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < n && is_ident_char(text[j]))
        ++j;
      std::string word(text.substr(i, j - i));
      // pkg::name collapses to one Ident; the prefix is recorded, not kept
      bool scoped = false;
      while (j + 1 < n && text[j] == ':' && text[j + 1] == ':') {
        j += 2;
        if (j >= n || !is_ident_start(text[j]))
          throw LexError(j, "identifier after ::");
        std::size_t b = j;
        while (j < n && is_ident_char(text[j]))
          ++j;
        word = std::string(text.substr(b, j - b));
        scoped = true;
      }
      if (!scoped && keywords().count(word)) {
        push(TokenKind::Keyword, pos, word);
      } else {
        Token t;
        t.kind = TokenKind::Ident;
        t.text = word;
        t.pos = pos;
        t.pkg_scoped = scoped;
        out.tokens.push_back(std::move(t));
      }
      i = j;
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '\'' && i + 1 < n &&
         (is_base_digit(text[i + 1]) || text[i + 1] == 's' ||
          std::tolower(text[i + 1]) == 'b' || std::tolower(text[i + 1]) == 'd' ||
          std::tolower(text[i + 1]) == 'h' || std::tolower(text[i + 1]) == 'o'))) {
      std::size_t j = i;
      while (j < n && (std::isdigit(static_cast<unsigned char>(text[j])) ||
                       text[j] == '_'))
        ++j;
      std::string width_digits(text.substr(i, j - i));
      unsigned base = 10;
      std::size_t body_begin = i;
      bool based = false;
      if (j < n && text[j] == '\'') {
        // Distinguish a based literal (32'd4, 'b01) from a cast tick
        // (mytype'(x)): casts are only lexed after an identifier.
        std::size_t k = j + 1;
        if (k < n && (text[k] == 's' || text[k] == 'S'))
          ++k;
        if (k < n) {
          char b = static_cast<char>(std::tolower(text[k]));
          if (b == 'b' || b == 'd' || b == 'h' || b == 'o') {
            base = (b == 'b') ? 2u : (b == 'd') ? 10u : (b == 'h') ? 16u : 8u;
            ++k;
            based = true;
          } else if (is_base_digit(text[k]) && width_digits.empty()) {
            based = true; // unbased unsized like '0 / '1 / 'x
          }
        }
        if (based) {
          body_begin = k;
          j = k;
          while (j < n && is_base_digit(text[j]))
            ++j;
          if (j == body_begin)
            throw LexError(j, "digits after base specifier");
        }
      }
      Token t;
      t.kind = TokenKind::Number;
      t.text = std::string(text.substr(i, j - i));
      t.pos = pos;
      t.value = digits_value(text.substr(body_begin, j - body_begin), base);
      out.tokens.push_back(std::move(t));
      i = j;
      continue;
    }

    auto two = [&](char a, char b) {
      return c == a && i + 1 < n && text[i + 1] == b;
    };

    if (two('|', '-') && i + 2 < n && text[i + 2] == '>') {
      push(TokenKind::OverlapImpl, pos, "|->");
      i += 3;
      continue;
    }
    if (two('|', '=') && i + 2 < n && text[i + 2] == '>') {
      push(TokenKind::NonoverlapImpl, pos, "|=>");
      i += 3;
      continue;
    }
    if (two('#', '#')) {
      push(TokenKind::HashHash, pos, "##");
      i += 2;
      continue;
    }
    if (c == '#') {
      push(TokenKind::Hash, pos, "#");
      ++i;
      continue;
    }
    if (two('&', '&')) {
      push(TokenKind::AmpAmp, pos, "&&");
      i += 2;
      continue;
    }
    if (two('|', '|')) {
      push(TokenKind::PipePipe, pos, "||");
      i += 2;
      continue;
    }
    if (two('=', '=')) {
      push(TokenKind::EqEq, pos, "==");
      i += 2;
      continue;
    }
    if (two('!', '=')) {
      push(TokenKind::NotEq, pos, "!=");
      i += 2;
      continue;
    }
    if (two('-', '>')) {
      push(TokenKind::ArrowBool, pos, "->");
      i += 2;
      continue;
    }
    if (two('@', '@'))
      throw LexError(pos, "unknown operator");

    if (c == '$') {
      if (i + 1 < n && is_ident_start(text[i + 1])) {
        std::size_t j = i + 1;
        while (j < n && is_ident_char(text[j]))
          ++j;
        push(TokenKind::SysIdent, pos, std::string(text.substr(i, j - i)));
        i = j;
        continue;
      }
      push(TokenKind::Dollar, pos, "$");
      ++i;
      continue;
    }

    TokenKind k;
    switch (c) {
    case '(': k = TokenKind::LParen; break;
    case ')': k = TokenKind::RParen; break;
    case '[': k = TokenKind::LBracket; break;
    case ']': k = TokenKind::RBracket; break;
    case '{': k = TokenKind::LBrace; break;
    case '}': k = TokenKind::RBrace; break;
    case ',': k = TokenKind::Comma; break;
    case ':': k = TokenKind::Colon; break;
    case ';': k = TokenKind::Semicolon; break;
    case '.': k = TokenKind::Dot; break;
    case '@': k = TokenKind::At; break;
    case '\'': k = TokenKind::Tick; break;
    case '+': k = TokenKind::Plus; break;
    case '-': k = TokenKind::Minus; break;
    case '*': k = TokenKind::Star; break;
    case '=': k = TokenKind::Assign; break;
    case '!': k = TokenKind::Bang; break;
    default:
      throw LexError(pos, std::string("unknown character '") + c + "'");
    }
    push(k, pos, std::string(1, c));
    ++i;
  }

  push(TokenKind::Eof, n, "");
  return out;
}

const char *to_string(TokenKind kind) {
  switch (kind) {
  case TokenKind::Ident: return "identifier";
  case TokenKind::SysIdent: return "system identifier";
  case TokenKind::Number: return "number";
  case TokenKind::MacroUse: return "macro use";
  case TokenKind::LParen: return "'('";
  case TokenKind::RParen: return "')'";
  case TokenKind::LBracket: return "'['";
  case TokenKind::RBracket: return "']'";
  case TokenKind::LBrace: return "'{'";
  case TokenKind::RBrace: return "'}'";
  case TokenKind::Comma: return "','";
  case TokenKind::Colon: return "':'";
  case TokenKind::Semicolon: return "';'";
  case TokenKind::Dot: return "'.'";
  case TokenKind::At: return "'@'";
  case TokenKind::Dollar: return "'$'";
  case TokenKind::Tick: return "'''";
  case TokenKind::Plus: return "'+'";
  case TokenKind::Minus: return "'-'";
  case TokenKind::Star: return "'*'";
  case TokenKind::Assign: return "'='";
  case TokenKind::Hash: return "'#'";
  case TokenKind::Bang: return "'!'";
  case TokenKind::AmpAmp: return "'&&'";
  case TokenKind::PipePipe: return "'||'";
  case TokenKind::EqEq: return "'=='";
  case TokenKind::NotEq: return "'!='";
  case TokenKind::ArrowBool: return "'->'";
  case TokenKind::OverlapImpl: return "'|->'";
  case TokenKind::NonoverlapImpl: return "'|=>'";
  case TokenKind::HashHash: return "'##'";
  case TokenKind::Keyword: return "keyword";
  case TokenKind::Eof: return "end of input";
  }
  return "?";
}

const char *to_string(Origin origin) {
  switch (origin) {
  case Origin::Reference: return "reference";
  case Origin::Candidate: return "candidate";
  case Origin::Synthetic: return "synthetic";
  }
  return "?";
}

} // namespace svaeq
