#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "shapefrag/path.hpp"
#include "shapefrag/rdf.hpp"

namespace shapefrag {

enum class NodeTestKind : uint8_t {
  KindIri,
  KindLiteral,
  KindBlank,
  Datatype,
  MinExclusive,
  MinInclusive,
  MaxExclusive,
  MaxInclusive,
  MinLength,
  MaxLength,
  Pattern,
  LanguageTag,
};

/// A test on a single node. Pattern regexes are validated at construction.
class NodeTest {
 public:
  static NodeTest nodeKind(NodeTestKind k);  // KindIri / KindLiteral / KindBlank
  static NodeTest datatype(std::string iri);
  static NodeTest range(NodeTestKind k, Node literal);  // Min/Max Exclusive/Inclusive
  static NodeTest length(NodeTestKind k, uint64_t n);   // MinLength / MaxLength
  static NodeTest pattern(std::string regex);
  static NodeTest languageTag(std::string tag);

  NodeTestKind kind() const { return kind_; }
  const std::string& str() const { return str_; }
  const Node& literal() const { return literal_; }
  uint64_t length() const { return length_; }
  const std::regex& compiledPattern() const { return regex_; }

  bool evaluate(const Node& a) const;

  bool operator==(const NodeTest& o) const {
    return kind_ == o.kind_ && str_ == o.str_ && literal_ == o.literal_ && length_ == o.length_;
  }

 private:
  NodeTest() = default;
  NodeTestKind kind_ = NodeTestKind::KindIri;
  std::string str_;   // datatype IRI, pattern source, or language tag
  Node literal_;      // range bound
  uint64_t length_ = 0;
  std::regex regex_;
};

enum class ShapeKind : uint8_t {
  Top,
  Bottom,
  HasShape,
  Test,
  HasValue,
  Eq,
  Disj,
  Closed,
  LessThan,
  LessThanEq,
  UniqueLang,
  Not,
  And,
  Or,
  Geq,
  Leq,
  ForAll,
};

class Shape;
using ShapePtr = std::shared_ptr<const Shape>;

/// The shape algebra. Immutable trees shared by pointer; Eq and Disj take
/// either a path expression or the focus-node marker id (a null path).
class Shape {
 public:
  static ShapePtr top();
  static ShapePtr bottom();
  static ShapePtr hasShape(Node name);
  static ShapePtr test(NodeTest t);
  static ShapePtr hasValue(Node constant);
  static ShapePtr eq(PathPtr pathOrId, std::string prop);      // null path = id
  static ShapePtr disj(PathPtr pathOrId, std::string prop);    // null path = id
  static ShapePtr closed(std::vector<std::string> props);
  static ShapePtr lessThan(PathPtr path, std::string prop);
  static ShapePtr lessThanEq(PathPtr path, std::string prop);
  static ShapePtr uniqueLang(PathPtr path);
  static ShapePtr notOf(ShapePtr s);
  static ShapePtr andOf(ShapePtr a, ShapePtr b);
  static ShapePtr orOf(ShapePtr a, ShapePtr b);
  static ShapePtr geq(uint64_t n, PathPtr path, ShapePtr body);
  static ShapePtr leq(uint64_t n, PathPtr path, ShapePtr body);
  static ShapePtr forAll(PathPtr path, ShapePtr body);

  ShapeKind kind() const { return kind_; }
  const Node& name() const { return node_; }      // HasShape
  const Node& constant() const { return node_; }  // HasValue
  const NodeTest& nodeTest() const { return *test_; }
  const PathPtr& path() const { return path_; }   // null means id for Eq/Disj
  bool pathIsId() const { return path_ == nullptr; }
  const std::string& prop() const { return prop_; }
  const std::vector<std::string>& closedProps() const { return props_; }
  uint64_t count() const { return count_; }
  const ShapePtr& left() const { return left_; }
  const ShapePtr& right() const { return right_; }
  const ShapePtr& body() const { return left_; }  // quantifiers and Not

  bool isAtomic() const;

  bool equals(const Shape& o) const;

 private:
  Shape() = default;
  ShapeKind kind_ = ShapeKind::Top;
  Node node_;
  std::shared_ptr<const NodeTest> test_;
  PathPtr path_;
  std::string prop_;
  std::vector<std::string> props_;
  uint64_t count_ = 0;
  ShapePtr left_;
  ShapePtr right_;
};

bool shapeEquals(const ShapePtr& a, const ShapePtr& b);

/// A shape in negation normal form: negation wraps only atomic shapes.
/// The wrapping constructor enforces the invariant.
class NnfShape {
 public:
  explicit NnfShape(ShapePtr s);
  const ShapePtr& get() const { return shape_; }
  const Shape& operator*() const { return *shape_; }
  const Shape* operator->() const { return shape_.get(); }

 private:
  ShapePtr shape_;
};

/// Rewrite to negation normal form: De Morgan through ∧/∨,
/// ¬≥ₙ₊₁ ↦ ≤ₙ, ¬≤ₙ ↦ ≥ₙ₊₁, ¬∀E.ψ ↦ ≥₁E.¬ψ, ¬≥₀E.ψ ↦ ⊥, ¬⊤ ↦ ⊥, ¬⊥ ↦ ⊤,
/// ¬¬φ ↦ φ; negation stays on atoms; structure preserved otherwise.
NnfShape nnf(const ShapePtr& s);

struct ShapeDefinition {
  Node name;
  ShapePtr shape;
  ShapePtr target;  // Bottom for target-less definitions
};

enum class TargetPolicy {
  /// Targets must be one of the admitted monotone forms (hasValue(c);
  /// ≥₁(rdf:type/rdfs:subClassOf*).hasValue(c); ≥₁p.⊤; ≥₁p⁻.⊤), Bottom, or a
  /// disjunction of admitted forms.
  Monotone,
  /// Any shape may be a target.
  Arbitrary,
};

class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

class RecursionError : public std::runtime_error {
 public:
  explicit RecursionError(std::vector<Node> cycle);
  const std::vector<Node>& cycle() const { return cycle_; }

 private:
  std::vector<Node> cycle_;
};

/// A finite set of named shape definitions. Names are unique; target forms
/// are checked per the policy. Recursion is *not* rejected at construction —
/// evaluation entry points call checkNonrecursive.
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<ShapeDefinition> defs, TargetPolicy policy = TargetPolicy::Monotone);

  const std::vector<ShapeDefinition>& definitions() const { return defs_; }
  const ShapeDefinition* find(const Node& name) const;
  /// def_H(name): the defining shape, or ⊤ when the name is undefined.
  ShapePtr resolve(const Node& name) const;
  TargetPolicy policy() const { return policy_; }

 private:
  std::vector<ShapeDefinition> defs_;
  std::unordered_map<Node, size_t, NodeHash> byName_;
  TargetPolicy policy_ = TargetPolicy::Monotone;
};

/// Cycle in the hasShape-reference digraph, or nullopt when acyclic.
std::optional<std::vector<Node>> checkNonrecursive(const Schema& h);

/// Throwing wrapper used by evaluation entry points.
void requireNonrecursive(const Schema& h);

/// True for the target forms admitted under TargetPolicy::Monotone.
bool isAdmittedTarget(const ShapePtr& s);

/// All hasValue constants occurring in the shape (candidate focus nodes that
/// may be absent from the data graph).
std::vector<Node> hasValueConstants(const ShapePtr& s);

/// Predicate IRIs syntactically mentioned in the shape, following hasShape
/// references through the schema: path properties, pair-constraint
/// properties, and closed sets.
std::set<std::string> mentionedPredicates(const ShapePtr& s, const Schema& h);

}  // namespace shapefrag
