// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "svaeq/source_text.hpp"
#include "svaeq/token.hpp"

namespace svaeq {

// Splits `src` into fragment tokens. Comments become trivia. Throws
// LexError for characters outside the fragment alphabet.
TokenStream tokenize(const SourceText &src);
TokenStream tokenize(std::string_view text);

} // namespace svaeq
