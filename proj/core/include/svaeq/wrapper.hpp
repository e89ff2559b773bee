// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svaeq/ast.hpp"
#include "svaeq/normalize.hpp"
#include "svaeq/source_text.hpp"

namespace svaeq {

enum class IdentifierKind { Clock, Parameter, FunctionStub, Mda, Wire };

const char *to_string(IdentifierKind kind);

// Kind resolution in precedence order: the clock test first so an ALL_CAPS
// clock like ACLK is not promoted to parameter; then parameter
// (ALL_CAPS, length >= 3), function stub (call position), MDA (two or more
// trailing index brackets), wire.
IdentifierKind classify_identifier(const Identifier &id,
                                   const AstPtr &context);

struct WrapperDeclaration {
  Identifier id;
  IdentifierKind kind;
  std::string emitted; // one declaration line
  std::string declared_name;
};

struct WrapperModule {
  std::string module_name = "sva_check";
  std::vector<WrapperDeclaration> declarations;
  std::string body; // the wrapped assertion text
  std::string text; // full module source
  std::optional<std::string> injected_clock; // set when the input was unclocked
  NormalizationReport normalization;
};

struct WrapperOptions {
  // pec: meaning-preserving rules only, so symbolic ranges like
  // ##[1:WIDTH] survive into the declaration set
  Profile profile = Profile::Pec;
};

// Normalizes, parses, and wraps one assertion into a self-contained
// module that declares every free identifier. Throws WrapError when the
// assertion does not parse after normalization.
WrapperModule synthesize_wrapper(const SourceText &src,
                                 const WrapperOptions &opts = {});

// Re-parse of an emitted wrapper under the toolkit's own module-shell
// grammar; used by the self-consistency checks.
struct WrapperShell {
  std::string module_name;
  std::vector<std::pair<std::string, IdentifierKind>> declared;
  AstPtr property;
};

WrapperShell parse_wrapper_shell(const std::string &module_text);

} // namespace svaeq
