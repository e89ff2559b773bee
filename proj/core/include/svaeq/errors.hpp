// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svaeq {

// All toolkit errors derive from Error so callers can catch the library
// exactly once at a task boundary.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Character outside the fragment alphabet. `position` is a byte offset
// into the input text.
class LexError : public Error {
public:
  LexError(std::size_t position, const std::string &msg)
      : Error("lex error at offset " + std::to_string(position) + ": " + msg),
        position(position) {}
  std::size_t position;
};

// Well-formed tokens arranged outside the fragment grammar.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string &expected)
      : Error("parse error at offset " + std::to_string(position) +
              ": expected " + expected),
        position(position), expected(expected) {}
  std::size_t position;
  std::string expected;
};

class ClassifyError : public Error {
public:
  explicit ClassifyError(const std::string &msg)
      : Error("classify error: " + msg) {}
};

class NormalizeError : public Error {
public:
  explicit NormalizeError(const std::string &msg)
      : Error("normalize error: " + msg) {}
};

class WrapError : public Error {
public:
  explicit WrapError(const std::string &msg) : Error("wrap error: " + msg) {}
};

// Raised by the lowering pipeline when a construct is outside the bounded
// checking fragment. The reason string matches Verdict::UnsupportedReason.
class UnsupportedConstruct : public Error {
public:
  explicit UnsupportedConstruct(const std::string &reason)
      : Error("unsupported construct: " + reason), reason(reason) {}
  std::string reason;
};

// Candidate or reference failed to parse inside check_equivalence.
class SyntaxError : public Error {
public:
  enum class Side { Candidate, Reference };
  SyntaxError(Side side, const std::string &detail)
      : Error(std::string("syntax error in ") +
              (side == Side::Candidate ? "candidate" : "reference") + ": " +
              detail),
        side(side) {}
  Side side;
};

class IoError : public Error {
public:
  explicit IoError(const std::string &msg) : Error("io error: " + msg) {}
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string &msg)
      : Error("config error: " + msg) {}
};

} // namespace svaeq
