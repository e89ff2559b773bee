// SPDX-License-Identifier: Apache-2.0
#include "svaeq/tcl.hpp"

#include <cctype>
#include <regex>

#include "svaeq/parser.hpp"

namespace svaeq {

const char *to_string(TclClass cls) {
  switch (cls) {
  case TclClass::C1: return "C1";
  case TclClass::C2: return "C2";
  case TclClass::C3: return "C3";
  }
  return "?";
}

const std::vector<OpKind> &tcl_c2_operators() {
  static const std::vector<OpKind> ops = {
      OpKind::Delay,      OpKind::RepeatStar,     OpKind::RepeatGoto,
      OpKind::ImplOverlap, OpKind::ImplNonoverlap, OpKind::Throughout,
      OpKind::Within,     OpKind::Intersect,
  };
  return ops;
}

// Plain until/eventually are included: bounded checking does not decide
// them, which is the C3 boundary.
const std::vector<OpKind> &tcl_c3_operators() {
  static const std::vector<OpKind> ops = {
      OpKind::SEventually, OpKind::SUntil, OpKind::SAlways,
      OpKind::UntilWith,   OpKind::Until,  OpKind::Eventually,
  };
  return ops;
}

std::string strip_comments(const std::string &text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n')
        ++i;
      continue;
    }
    if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      std::size_t e = text.find("*/", i + 2);
      i = (e == std::string::npos) ? text.size() : e + 2;
      out += ' ';
      continue;
    }
    out += text[i++];
  }
  return out;
}

std::string strip_label_prefix(const std::string &text) {
  static const std::regex label(R"(^\s*[A-Za-z_][A-Za-z0-9_$]*\s*:(?!:))");
  std::smatch m;
  if (std::regex_search(text, m, label))
    return text.substr(static_cast<std::size_t>(m.length()));
  return text;
}

namespace {

bool word_at(const std::string &text, std::size_t pos, std::size_t len) {
  auto word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  };
  if (pos > 0 && word(text[pos - 1]))
    return false;
  std::size_t end = pos + len;
  if (end < text.size() && word(text[end]))
    return false;
  return true;
}

bool contains_word(const std::string &text, const std::string &w) {
  std::size_t pos = 0;
  while ((pos = text.find(w, pos)) != std::string::npos) {
    if (word_at(text, pos, w.size()))
      return true;
    pos += 1;
  }
  return false;
}

TclClass classify_by_regex(const std::string &stripped) {
  for (const char *w : {"s_eventually", "s_until", "s_always", "until_with"})
    if (contains_word(stripped, w))
      return TclClass::C3;
  // plain until/eventually; word boundaries keep s_until/until_with out
  if (contains_word(stripped, "until") || contains_word(stripped, "eventually"))
    return TclClass::C3;

  if (stripped.find("##") != std::string::npos ||
      stripped.find("|->") != std::string::npos ||
      stripped.find("|=>") != std::string::npos)
    return TclClass::C2;
  static const std::regex rep(R"(\[\s*[*=])");
  if (std::regex_search(stripped, rep))
    return TclClass::C2;
  for (const char *w : {"throughout", "within", "intersect"})
    if (contains_word(stripped, w))
      return TclClass::C2;

  return TclClass::C1;
}

} // namespace

TclClass classify(const AstPtr &ast) {
  if (contains_operator(ast, tcl_c3_operators()))
    return TclClass::C3;
  if (contains_operator(ast, tcl_c2_operators()))
    return TclClass::C2;
  return TclClass::C1;
}

TclClass classify(const std::string &text) {
  std::string stripped = strip_label_prefix(strip_comments(text));
  if (stripped.find_first_not_of(" \t\r\n") == std::string::npos)
    throw ClassifyError("empty input after comment and label stripping");
  try {
    return classify(parse(stripped));
  } catch (const Error &) {
    return classify_by_regex(stripped);
  }
}

TclClass classify(const SourceText &src) { return classify(src.raw); }

std::size_t ClassHistogram::classified() const {
  std::size_t n = 0;
  for (const auto &[_, c] : counts)
    n += c;
  return n;
}

ClassHistogram class_histogram(const std::vector<SourceText> &rows) {
  ClassHistogram hist;
  hist.counts[TclClass::C1] = 0;
  hist.counts[TclClass::C2] = 0;
  hist.counts[TclClass::C3] = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      ++hist.counts[classify(rows[i])];
    } catch (const Error &e) {
      hist.errors.emplace_back(i, e.what());
    }
  }
  return hist;
}

} // namespace svaeq
