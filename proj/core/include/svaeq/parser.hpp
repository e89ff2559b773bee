// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "svaeq/ast.hpp"
#include "svaeq/source_text.hpp"

namespace svaeq {

// Parses one property of the supported fragment. Throws ParseError /
// LexError. Labels become Labeled nodes; comments are dropped as trivia.
AstPtr parse(const SourceText &src);
AstPtr parse(std::string_view text);

} // namespace svaeq
