#pragma once

#include "shapefrag/rdf.hpp"

namespace shapefrag {

enum class LiteralOrder { LessThan, Equal, GreaterThan, Incomparable };

/// Strict partial order on literals. Numeric datatypes compare by value
/// (across numeric datatypes), xsd:string by codepoint order, xsd:boolean
/// false < true, xsd:dateTime by timeline instant. Any cross-family pair,
/// any pair involving a non-literal, and any unparseable lexical form is
/// Incomparable. Comparing zoned to unzoned dateTimes is Incomparable.
LiteralOrder compareLiterals(const Node& a, const Node& b);

/// True iff both literals carry language tags and the tags are equal
/// case-insensitively. Untagged literals are never equivalent.
bool langEquiv(const Node& a, const Node& b);

}  // namespace shapefrag
