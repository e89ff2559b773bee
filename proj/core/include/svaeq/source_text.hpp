// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "svaeq/errors.hpp"

namespace svaeq {

enum class Origin { Reference, Candidate, Synthetic };

// A raw assertion string plus where it came from. Must be non-empty after
// whitespace trimming.
struct SourceText {
  std::string raw;
  Origin origin = Origin::Synthetic;

  static SourceText make(std::string_view text,
                         Origin origin = Origin::Synthetic) {
    std::size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
      throw Error("source text is empty after whitespace trimming");
    return SourceText{std::string(text), origin};
  }
};

const char *to_string(Origin origin);

} // namespace svaeq
