#pragma once

#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "shapefrag/rdf.hpp"

namespace shapefrag {

enum class PathKind { Prop, Inverse, Seq, Alt, Star, Opt };

class PathExpr;
using PathPtr = std::shared_ptr<const PathExpr>;

/// Path-expression algebra: property, inverse, sequence, alternative,
/// zero-or-more, zero-or-one. Immutable trees shared by pointer.
class PathExpr {
 public:
  static PathPtr prop(std::string iri);
  static PathPtr inverse(PathPtr e);
  static PathPtr seq(PathPtr a, PathPtr b);
  static PathPtr alt(PathPtr a, PathPtr b);
  static PathPtr star(PathPtr e);
  static PathPtr opt(PathPtr e);

  PathKind kind() const { return kind_; }
  const std::string& iri() const { return iri_; }
  const PathPtr& left() const { return left_; }
  const PathPtr& right() const { return right_; }

  bool equals(const PathExpr& o) const;
  std::string toString() const;

 private:
  PathExpr(PathKind k, std::string iri, PathPtr l, PathPtr r)
      : kind_(k), iri_(std::move(iri)), left_(std::move(l)), right_(std::move(r)) {}

  PathKind kind_;
  std::string iri_;
  PathPtr left_;
  PathPtr right_;
};

bool pathEquals(const PathPtr& a, const PathPtr& b);

/// Per-evaluation memo for path results. Not thread-shared; create one per
/// logical evaluation (or per worker thread).
class PathCache {
 public:
  struct Key {
    const PathExpr* expr;
    Node node;
    bool reversed;
    bool operator==(const Key& o) const {
      return expr == o.expr && node == o.node && reversed == o.reversed;
    }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return std::hash<const void*>()(k.expr) ^ (NodeHash()(k.node) << 1) ^
             static_cast<size_t>(k.reversed);
    }
  };
  std::unordered_map<Key, std::shared_ptr<const std::set<Node>>, KeyHash> eval;
};

/// ⟦E⟧G(a): the nodes reachable from a along E. Star and Opt include a itself.
std::set<Node> evalPath(const PathExpr& e, const Graph& g, const Node& a, PathCache* cache = nullptr);

/// {b | (b, a) ∈ ⟦E⟧G}: evaluation against the direction of E.
std::set<Node> evalPathReverse(const PathExpr& e, const Graph& g, const Node& a,
                               PathCache* cache = nullptr);

/// graph(paths(E, G, a, b)): the triples underlying all E-paths from a to b,
/// computed by relation decomposition rather than path enumeration. Empty when
/// (a, b) is not in ⟦E⟧G or the only witness is a zero-length path. Always a
/// subgraph of g.
std::set<Triple> pathGraph(const PathExpr& e, const Graph& g, const Node& a, const Node& b,
                           PathCache* cache = nullptr);

/// graph(pathsfrom(E, G, a)) = union of pathGraph(E, g, a, x) over x ∈ ⟦E⟧G(a).
std::set<Triple> pathGraphFrom(const PathExpr& e, const Graph& g, const Node& a,
                               PathCache* cache = nullptr);

}  // namespace shapefrag
