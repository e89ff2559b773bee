// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "svaeq/ast.hpp"
#include "svaeq/source_text.hpp"

namespace svaeq {

// Diagnostic Temporal Complexity Level, total order C1 < C2 < C3.
enum class TclClass { C1 = 1, C2 = 2, C3 = 3 };

const char *to_string(TclClass cls);

// Operator sets defining the class boundaries. C3 wins over C2 wins over C1
// regardless of what co-occurs.
const std::vector<OpKind> &tcl_c2_operators();
const std::vector<OpKind> &tcl_c3_operators();

// Highest class present after comment stripping and label-prefix handling.
// Works on the AST when the input parses, falls back to a regex scan over
// the stripped text otherwise. Throws ClassifyError when nothing remains.
TclClass classify(const SourceText &src);
TclClass classify(const std::string &text);
TclClass classify(const AstPtr &ast);

struct ClassHistogram {
  std::map<TclClass, std::size_t> counts;
  // (row index, message) for rows that failed to classify; not fatal.
  std::vector<std::pair<std::size_t, std::string>> errors;
  std::size_t classified() const;
};

ClassHistogram class_histogram(const std::vector<SourceText> &rows);

// Comment and label stripping shared with the regex fallback.
std::string strip_comments(const std::string &text);
std::string strip_label_prefix(const std::string &text);

} // namespace svaeq
