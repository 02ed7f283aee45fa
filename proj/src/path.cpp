#include "shapefrag/path.hpp"

#include <deque>

namespace shapefrag {

PathPtr PathExpr::prop(std::string iri) {
  if (iri.empty()) throw std::invalid_argument("property IRI must be non-empty");
  return PathPtr(new PathExpr(PathKind::Prop, std::move(iri), nullptr, nullptr));
}
PathPtr PathExpr::inverse(PathPtr e) {
  return PathPtr(new PathExpr(PathKind::Inverse, {}, std::move(e), nullptr));
}
PathPtr PathExpr::seq(PathPtr a, PathPtr b) {
  return PathPtr(new PathExpr(PathKind::Seq, {}, std::move(a), std::move(b)));
}
PathPtr PathExpr::alt(PathPtr a, PathPtr b) {
  return PathPtr(new PathExpr(PathKind::Alt, {}, std::move(a), std::move(b)));
}
PathPtr PathExpr::star(PathPtr e) {
  return PathPtr(new PathExpr(PathKind::Star, {}, std::move(e), nullptr));
}
PathPtr PathExpr::opt(PathPtr e) {
  return PathPtr(new PathExpr(PathKind::Opt, {}, std::move(e), nullptr));
}

bool PathExpr::equals(const PathExpr& o) const {
  if (kind_ != o.kind_ || iri_ != o.iri_) return false;
  return pathEquals(left_, o.left_) && pathEquals(right_, o.right_);
}

bool pathEquals(const PathPtr& a, const PathPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->equals(*b);
}

std::string PathExpr::toString() const {
  switch (kind_) {
    case PathKind::Prop: return "<" + iri_ + ">";
    case PathKind::Inverse: return "inv(" + left_->toString() + ")";
    case PathKind::Seq: return "seq(" + left_->toString() + ", " + right_->toString() + ")";
    case PathKind::Alt: return "alt(" + left_->toString() + ", " + right_->toString() + ")";
    case PathKind::Star: return "star(" + left_->toString() + ")";
    case PathKind::Opt: return "opt(" + left_->toString() + ")";
  }
  return {};
}

namespace {

// Single recursive evaluator; `reversed` flips at Inverse so reverse IRIs
// never escape this module.
std::shared_ptr<const std::set<Node>> evalDir(const PathExpr& e, const Graph& g, const Node& a,
                                              bool reversed, PathCache& cache) {
  PathCache::Key key{&e, a, reversed};
  auto hit = cache.eval.find(key);
  if (hit != cache.eval.end()) return hit->second;

  auto result = std::make_shared<std::set<Node>>();
  switch (e.kind()) {
    case PathKind::Prop: {
      std::vector<Node> succ = reversed ? g.subjects(e.iri(), a) : g.objects(a, e.iri());
      result->insert(succ.begin(), succ.end());
      break;
    }
    case PathKind::Inverse: {
      auto inner = evalDir(*e.left(), g, a, !reversed, cache);
      *result = *inner;
      break;
    }
    case PathKind::Seq: {
      const PathExpr& first = reversed ? *e.right() : *e.left();
      const PathExpr& second = reversed ? *e.left() : *e.right();
      auto mids = evalDir(first, g, a, reversed, cache);
      for (const Node& m : *mids) {
        auto ends = evalDir(second, g, m, reversed, cache);
        result->insert(ends->begin(), ends->end());
      }
      break;
    }
    case PathKind::Alt: {
      auto l = evalDir(*e.left(), g, a, reversed, cache);
      auto r = evalDir(*e.right(), g, a, reversed, cache);
      *result = *l;
      result->insert(r->begin(), r->end());
      break;
    }
    case PathKind::Opt: {
      auto inner = evalDir(*e.left(), g, a, reversed, cache);
      *result = *inner;
      result->insert(a);
      break;
    }
    case PathKind::Star: {
      // Worklist closure over ⟦E⟧ steps, seeded at a.
      result->insert(a);
      std::deque<Node> work{a};
      while (!work.empty()) {
        Node cur = work.front();
        work.pop_front();
        auto step = evalDir(*e.left(), g, cur, reversed, cache);
        for (const Node& n : *step) {
          if (result->insert(n).second) work.push_back(n);
        }
      }
      break;
    }
  }
  cache.eval.emplace(key, result);
  return result;
}

void pathGraphInto(const PathExpr& e, const Graph& g, const Node& a, const Node& b,
                   PathCache& cache, std::set<Triple>& out) {
  switch (e.kind()) {
    case PathKind::Prop: {
      if (a.isLiteral()) break;
      Triple t(a, e.iri(), b);
      if (g.contains(t)) out.insert(t);
      break;
    }
    case PathKind::Inverse:
      pathGraphInto(*e.left(), g, b, a, cache, out);
      break;
    case PathKind::Alt:
      pathGraphInto(*e.left(), g, a, b, cache, out);
      pathGraphInto(*e.right(), g, a, b, cache, out);
      break;
    case PathKind::Opt:
      // paths(E?) = paths(E): the zero-length witness traces no triples.
      pathGraphInto(*e.left(), g, a, b, cache, out);
      break;
    case PathKind::Seq: {
      auto mids = evalDir(*e.left(), g, a, false, cache);
      for (const Node& m : *mids) {
        auto ends = evalDir(*e.right(), g, m, false, cache);
        if (ends->count(b)) {
          pathGraphInto(*e.left(), g, a, m, cache, out);
          pathGraphInto(*e.right(), g, m, b, cache, out);
        }
      }
      break;
    }
    case PathKind::Star: {
      // Every star path from a to b splits into ⟦E⟧ segments (x, y) with
      // a →* x and y →* b; the union of segment extractions covers exactly
      // the triples traced out.
      auto reachFromA = evalDir(e, g, a, false, cache);     // {x | (a,x) ∈ ⟦E*⟧}
      if (!reachFromA->count(b)) break;
      auto reachToB = evalDir(e, g, b, true, cache);        // {y | (y,b) ∈ ⟦E*⟧}
      for (const Node& x : *reachFromA) {
        auto seg = evalDir(*e.left(), g, x, false, cache);  // (x,y) ∈ ⟦E⟧
        for (const Node& y : *seg) {
          if (reachToB->count(y)) pathGraphInto(*e.left(), g, x, y, cache, out);
        }
      }
      break;
    }
  }
}

}  // namespace

std::set<Node> evalPath(const PathExpr& e, const Graph& g, const Node& a, PathCache* cache) {
  PathCache local;
  PathCache& c = cache ? *cache : local;
  return *evalDir(e, g, a, false, c);
}

std::set<Node> evalPathReverse(const PathExpr& e, const Graph& g, const Node& a, PathCache* cache) {
  PathCache local;
  PathCache& c = cache ? *cache : local;
  return *evalDir(e, g, a, true, c);
}

std::set<Triple> pathGraph(const PathExpr& e, const Graph& g, const Node& a, const Node& b,
                           PathCache* cache) {
  PathCache local;
  PathCache& c = cache ? *cache : local;
  std::set<Triple> out;
  pathGraphInto(e, g, a, b, c, out);
  return out;
}

std::set<Triple> pathGraphFrom(const PathExpr& e, const Graph& g, const Node& a, PathCache* cache) {
  PathCache local;
  PathCache& c = cache ? *cache : local;
  std::set<Triple> out;
  auto heads = evalDir(e, g, a, false, c);
  for (const Node& x : *heads) pathGraphInto(e, g, a, x, c, out);
  return out;
}

}  // namespace shapefrag
