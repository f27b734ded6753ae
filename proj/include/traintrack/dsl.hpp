#pragma once

#include <string>

#include "traintrack/colour.hpp"
#include "traintrack/diagram.hpp"

// Diagram expression language (composition reads bottom-first):
//   term   := factor (";" factor)*        -- ";" composes, left at the bottom
//   factor := atom ("*" atom)*            -- "*" tensors, left on the left
//   atom   := "alpha" | "beta" | IDENT | "id" "[" NAT "]" | "(" term ")"
// Errors carry byte spans into the source text.
namespace traintrack::dsl {

// Parses and elaborates to a validated diagram. Throws SpannedError with
// code ParseError (lexical/syntactic), ArityError (non-composable stages),
// or UnknownColour (identifier outside the colour set).
diagrams::DiagramWord parse_dsl(const std::string& text, const ColourSet& colours);

// Renders a canonical word back into the DSL; parse(print(D)) canonicalizes
// to D for canonical D.
std::string print_dsl(const diagrams::DiagramWord& d, const ColourSet& colours);

} // namespace traintrack::dsl
