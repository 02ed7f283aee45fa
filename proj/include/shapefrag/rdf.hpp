#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace shapefrag {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view sh = "http://www.w3.org/ns/shacl#";

inline const std::string rdfType = std::string(rdf) + "type";
inline const std::string rdfFirst = std::string(rdf) + "first";
inline const std::string rdfRest = std::string(rdf) + "rest";
inline const std::string rdfNil = std::string(rdf) + "nil";
inline const std::string rdfLangString = std::string(rdf) + "langString";
inline const std::string rdfsSubClassOf = std::string(rdfs) + "subClassOf";
inline const std::string xsdString = std::string(xsd) + "string";
inline const std::string xsdBoolean = std::string(xsd) + "boolean";
inline const std::string xsdInteger = std::string(xsd) + "integer";
inline const std::string xsdDecimal = std::string(xsd) + "decimal";
inline const std::string xsdDouble = std::string(xsd) + "double";
inline const std::string xsdDateTime = std::string(xsd) + "dateTime";
}  // namespace ns

enum class TermKind : uint8_t { Iri, Blank, Literal };

/// An RDF term: IRI, blank node, or literal. Literals carry a datatype IRI;
/// language-tagged literals always have datatype rdf:langString, and tags are
/// normalized to lowercase at construction.
class Node {
 public:
  Node() : kind_(TermKind::Iri) {}

  static Node iri(std::string value);
  static Node blank(std::string label);
  static Node literal(std::string lex, std::string datatype = ns::xsdString);
  static Node langLiteral(std::string lex, std::string tag);

  TermKind kind() const { return kind_; }
  bool isIri() const { return kind_ == TermKind::Iri; }
  bool isBlank() const { return kind_ == TermKind::Blank; }
  bool isLiteral() const { return kind_ == TermKind::Literal; }

  /// IRI string, blank label, or literal lexical form.
  const std::string& lex() const { return lex_; }
  /// Datatype IRI; empty for IRIs and blank nodes.
  const std::string& datatype() const { return datatype_; }
  /// Lowercased language tag; empty when untagged.
  const std::string& lang() const { return lang_; }

  bool operator==(const Node& o) const {
    return kind_ == o.kind_ && lex_ == o.lex_ && datatype_ == o.datatype_ && lang_ == o.lang_;
  }
  bool operator!=(const Node& o) const { return !(*this == o); }
  bool operator<(const Node& o) const;

  /// N-Triples rendering of the term.
  std::string toString() const;

 private:
  TermKind kind_;
  std::string lex_;
  std::string datatype_;
  std::string lang_;
};

struct NodeHash {
  size_t operator()(const Node& n) const;
};

struct Triple {
  Node subject;    // Iri or BlankNode
  std::string predicate;
  Node object;

  Triple() = default;
  Triple(Node s, std::string p, Node o);

  bool operator==(const Triple& o) const {
    return subject == o.subject && predicate == o.predicate && object == o.object;
  }
  bool operator!=(const Triple& o) const { return !(*this == o); }
  bool operator<(const Triple& o) const;
};

/// An immutable RDF graph: a finite set of triples with subject, predicate,
/// object and (subject, predicate) indexes. All read operations are safe for
/// unrestricted concurrent use.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Triple> triples);

  const std::vector<Triple>& triples() const { return triples_; }
  size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  bool contains(const Triple& t) const;

  /// Objects of triples (s, p, ?).
  std::vector<Node> objects(const Node& s, const std::string& p) const;
  /// Subjects of triples (?, p, o).
  std::vector<Node> subjects(const std::string& p, const Node& o) const;
  /// Triples with the given subject.
  std::vector<Triple> outgoing(const Node& s) const;
  /// Triples with the given object.
  std::vector<Triple> incoming(const Node& o) const;
  /// Triples with the given predicate.
  std::vector<Triple> withPredicate(const std::string& p) const;

  /// N(G): all subjects and objects, sorted.
  const std::vector<Node>& nodes() const { return nodes_; }

  bool isSubgraphOf(const Graph& g) const;

  bool operator==(const Graph& o) const { return triples_ == o.triples_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  std::vector<Triple> triples_;  // sorted, de-duplicated
  std::vector<Node> nodes_;
  std::unordered_map<Node, std::vector<uint32_t>, NodeHash> bySubject_;
  std::unordered_map<Node, std::vector<uint32_t>, NodeHash> byObject_;
  std::unordered_map<std::string, std::vector<uint32_t>> byPredicate_;
};

Graph graphUnion(const Graph& a, const Graph& b);

/// Parse failure; line/column are 1-based (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, size_t line = 0, size_t column = 0);
  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  size_t line_;
  size_t column_;
};

}  // namespace shapefrag
