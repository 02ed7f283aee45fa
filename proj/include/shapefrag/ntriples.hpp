#pragma once

#include <string>
#include <string_view>

#include "shapefrag/rdf.hpp"

namespace shapefrag {

/// Parse a W3C N-Triples document. Comments are allowed; duplicate statements
/// collapse (set semantics). Throws ParseError with a line number; a literal
/// in subject position is rejected.
Graph parseNTriples(std::string_view text);

/// Canonical N-Triples: one triple per line, lines sorted by codepoint order,
/// blank-node labels preserved. Round-trips through parseNTriples to an equal
/// graph.
std::string serializeCanonical(const Graph& g);

}  // namespace shapefrag
