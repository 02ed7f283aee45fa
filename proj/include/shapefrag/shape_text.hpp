#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "shapefrag/shape.hpp"

namespace shapefrag {

/// Textual syntax for the shape algebra (whitespace-insensitive, parentheses
/// for grouping):
///
///   shape := "top" | "bot" | "hasShape" iri | "test" test | "hasValue" node
///          | "eq" f iri | "disj" f iri | "closed" "{" iri* "}"
///          | "lessThan" path iri | "lessThanEq" path iri | "uniqueLang" path
///          | "not" shape | "and" shape shape | "or" shape shape
///          | "geq" NAT path shape | "leq" NAT path shape | "forall" path shape
///   f     := "id" | path
///   path  := iri | "inv" path | "seq" path path | "alt" path path
///          | "star" path | "opt" path
///   test  := "kind" ("iri"|"literal"|"blank") | "datatype" iri
///          | ("minEx"|"minIn"|"maxEx"|"maxIn") literal
///          | ("minLen"|"maxLen") NAT | "pattern" STRING | "lang" STRING
///
/// IRIs are written <...> or as prefixed names against defaultPrefixes().
ShapePtr parseShapeText(std::string_view text);

/// Inverse of parseShapeText: parseShapeText(printShape(s)) equals s.
std::string printShape(const ShapePtr& s);
std::string printPath(const PathPtr& p);

/// Schema file: prefix declarations followed by definitions.
///
///   schemaFile := prefixDecl* definition*
///   definition := "def" iri "=" shape ("target" shape)? "."
///
/// A definition without a target gets ⊥. Targets are unrestricted
/// (TargetPolicy::Arbitrary); SHACL-derived schemas only ever produce the
/// admitted monotone forms, but the formal syntax admits the paper's free
/// use of shapes as targets.
Schema parseSchemaText(std::string_view text);
std::string printSchema(const Schema& h);

/// Request-shape file: prefix declarations, then shapes each terminated by '.'.
std::vector<ShapePtr> parseRequestShapes(std::string_view text);

}  // namespace shapefrag
