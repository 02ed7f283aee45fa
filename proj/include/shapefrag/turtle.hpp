#pragma once

#include <map>
#include <string>
#include <string_view>

#include "shapefrag/rdf.hpp"

namespace shapefrag {

/// Prefixes every parser and printer knows out of the box. The empty prefix
/// maps to the empty namespace, so paper-style names like :author denote the
/// IRI "author" unless a document declares its own default prefix.
const std::map<std::string, std::string>& defaultPrefixes();

/// Parse the Turtle subset: @prefix/PREFIX, `a`, ';'/',' abbreviations,
/// collections, anonymous blank nodes, string/numeric/boolean literals.
/// Collections expand to rdf:first/rdf:rest/rdf:nil chains; anonymous nodes
/// get fresh deterministic labels. Unsupported features are reported by name.
Graph parseTurtle(std::string_view text);

}  // namespace shapefrag
