#include "shapefrag/shape.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "shapefrag/literals.hpp"

namespace shapefrag {

namespace {

size_t utf8Length(const std::string& s) {
  size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace

NodeTest NodeTest::nodeKind(NodeTestKind k) {
  if (k != NodeTestKind::KindIri && k != NodeTestKind::KindLiteral && k != NodeTestKind::KindBlank)
    throw std::invalid_argument("nodeKind expects a kind test");
  NodeTest t;
  t.kind_ = k;
  return t;
}

NodeTest NodeTest::datatype(std::string iri) {
  NodeTest t;
  t.kind_ = NodeTestKind::Datatype;
  t.str_ = std::move(iri);
  return t;
}

NodeTest NodeTest::range(NodeTestKind k, Node literal) {
  if (k != NodeTestKind::MinExclusive && k != NodeTestKind::MinInclusive &&
      k != NodeTestKind::MaxExclusive && k != NodeTestKind::MaxInclusive)
    throw std::invalid_argument("range expects a range test kind");
  if (!literal.isLiteral()) throw std::invalid_argument("range bound must be a literal");
  NodeTest t;
  t.kind_ = k;
  t.literal_ = std::move(literal);
  return t;
}

NodeTest NodeTest::length(NodeTestKind k, uint64_t n) {
  if (k != NodeTestKind::MinLength && k != NodeTestKind::MaxLength)
    throw std::invalid_argument("length expects minLength/maxLength");
  NodeTest t;
  t.kind_ = k;
  t.length_ = n;
  return t;
}

NodeTest NodeTest::pattern(std::string regex) {
  NodeTest t;
  t.kind_ = NodeTestKind::Pattern;
  t.regex_ = std::regex(regex);  // throws std::regex_error on invalid input
  t.str_ = std::move(regex);
  return t;
}

NodeTest NodeTest::languageTag(std::string tag) {
  NodeTest t;
  t.kind_ = NodeTestKind::LanguageTag;
  for (char& c : tag) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  t.str_ = std::move(tag);
  return t;
}

bool NodeTest::evaluate(const Node& a) const {
  switch (kind_) {
    case NodeTestKind::KindIri: return a.isIri();
    case NodeTestKind::KindLiteral: return a.isLiteral();
    case NodeTestKind::KindBlank: return a.isBlank();
    case NodeTestKind::Datatype: return a.isLiteral() && a.datatype() == str_;
    case NodeTestKind::MinExclusive:
      return compareLiterals(a, literal_) == LiteralOrder::GreaterThan;
    case NodeTestKind::MinInclusive: {
      auto c = compareLiterals(a, literal_);
      return c == LiteralOrder::GreaterThan || c == LiteralOrder::Equal;
    }
    case NodeTestKind::MaxExclusive: return compareLiterals(a, literal_) == LiteralOrder::LessThan;
    case NodeTestKind::MaxInclusive: {
      auto c = compareLiterals(a, literal_);
      return c == LiteralOrder::LessThan || c == LiteralOrder::Equal;
    }
    case NodeTestKind::MinLength:
      if (a.isBlank()) return false;
      return utf8Length(a.lex()) >= length_;
    case NodeTestKind::MaxLength:
      if (a.isBlank()) return false;
      return utf8Length(a.lex()) <= length_;
    case NodeTestKind::Pattern:
      if (a.isBlank()) return false;
      return std::regex_search(a.lex(), regex_);
    case NodeTestKind::LanguageTag:
      return a.isLiteral() && !a.lang().empty() && a.lang() == str_;
  }
  return false;
}

ShapePtr Shape::top() {
  static ShapePtr instance = [] {
    auto s = std::shared_ptr<Shape>(new Shape());
    s->kind_ = ShapeKind::Top;
    return ShapePtr(s);
  }();
  return instance;
}

ShapePtr Shape::bottom() {
  static ShapePtr instance = [] {
    auto s = std::shared_ptr<Shape>(new Shape());
    s->kind_ = ShapeKind::Bottom;
    return ShapePtr(s);
  }();
  return instance;
}

ShapePtr Shape::hasShape(Node name) {
  if (name.isLiteral()) throw std::invalid_argument("shape name must be an IRI or blank node");
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::HasShape;
  s->node_ = std::move(name);
  return s;
}

ShapePtr Shape::test(NodeTest t) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::Test;
  s->test_ = std::make_shared<NodeTest>(std::move(t));
  return s;
}

ShapePtr Shape::hasValue(Node constant) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::HasValue;
  s->node_ = std::move(constant);
  return s;
}

ShapePtr Shape::eq(PathPtr pathOrId, std::string prop) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::Eq;
  s->path_ = std::move(pathOrId);
  s->prop_ = std::move(prop);
  return s;
}

ShapePtr Shape::disj(PathPtr pathOrId, std::string prop) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::Disj;
  s->path_ = std::move(pathOrId);
  s->prop_ = std::move(prop);
  return s;
}

ShapePtr Shape::closed(std::vector<std::string> props) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::Closed;
  std::sort(props.begin(), props.end());
  props.erase(std::unique(props.begin(), props.end()), props.end());
  s->props_ = std::move(props);
  return s;
}

ShapePtr Shape::lessThan(PathPtr path, std::string prop) {
  if (!path) throw std::invalid_argument("lessThan requires a path expression");
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::LessThan;
  s->path_ = std::move(path);
  s->prop_ = std::move(prop);
  return s;
}

ShapePtr Shape::lessThanEq(PathPtr path, std::string prop) {
  if (!path) throw std::invalid_argument("lessThanEq requires a path expression");
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::LessThanEq;
  s->path_ = std::move(path);
  s->prop_ = std::move(prop);
  return s;
}

ShapePtr Shape::uniqueLang(PathPtr path) {
  if (!path) throw std::invalid_argument("uniqueLang requires a path expression");
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::UniqueLang;
  s->path_ = std::move(path);
  return s;
}

ShapePtr Shape::notOf(ShapePtr inner) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::Not;
  s->left_ = std::move(inner);
  return s;
}

ShapePtr Shape::andOf(ShapePtr a, ShapePtr b) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::And;
  s->left_ = std::move(a);
  s->right_ = std::move(b);
  return s;
}

ShapePtr Shape::orOf(ShapePtr a, ShapePtr b) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::Or;
  s->left_ = std::move(a);
  s->right_ = std::move(b);
  return s;
}

ShapePtr Shape::geq(uint64_t n, PathPtr path, ShapePtr body) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::Geq;
  s->count_ = n;
  s->path_ = std::move(path);
  s->left_ = std::move(body);
  return s;
}

ShapePtr Shape::leq(uint64_t n, PathPtr path, ShapePtr body) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::Leq;
  s->count_ = n;
  s->path_ = std::move(path);
  s->left_ = std::move(body);
  return s;
}

ShapePtr Shape::forAll(PathPtr path, ShapePtr body) {
  auto s = std::shared_ptr<Shape>(new Shape());
  s->kind_ = ShapeKind::ForAll;
  s->path_ = std::move(path);
  s->left_ = std::move(body);
  return s;
}

bool Shape::isAtomic() const {
  switch (kind_) {
    case ShapeKind::Top:
    case ShapeKind::Bottom:
    case ShapeKind::HasShape:
    case ShapeKind::Test:
    case ShapeKind::HasValue:
    case ShapeKind::Eq:
    case ShapeKind::Disj:
    case ShapeKind::Closed:
    case ShapeKind::LessThan:
    case ShapeKind::LessThanEq:
    case ShapeKind::UniqueLang:
      return true;
    default:
      return false;
  }
}

bool Shape::equals(const Shape& o) const {
  if (kind_ != o.kind_) return false;
  if (node_ != o.node_ || prop_ != o.prop_ || props_ != o.props_ || count_ != o.count_)
    return false;
  if ((test_ == nullptr) != (o.test_ == nullptr)) return false;
  if (test_ && !(*test_ == *o.test_)) return false;
  if (!pathEquals(path_, o.path_)) return false;
  return shapeEquals(left_, o.left_) && shapeEquals(right_, o.right_);
}

bool shapeEquals(const ShapePtr& a, const ShapePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->equals(*b);
}

namespace {

bool isNnf(const Shape& s) {
  switch (s.kind()) {
    case ShapeKind::Not: return s.body()->isAtomic();
    case ShapeKind::And:
    case ShapeKind::Or: return isNnf(*s.left()) && isNnf(*s.right());
    case ShapeKind::Geq:
    case ShapeKind::Leq:
    case ShapeKind::ForAll: return isNnf(*s.body());
    default: return true;
  }
}

ShapePtr nnfPos(const ShapePtr& s);
ShapePtr nnfNeg(const ShapePtr& s);

ShapePtr nnfPos(const ShapePtr& s) {
  switch (s->kind()) {
    case ShapeKind::Not: return nnfNeg(s->body());
    case ShapeKind::And: {
      ShapePtr l = nnfPos(s->left());
      ShapePtr r = nnfPos(s->right());
      return l == s->left() && r == s->right() ? s : Shape::andOf(l, r);
    }
    case ShapeKind::Or: {
      ShapePtr l = nnfPos(s->left());
      ShapePtr r = nnfPos(s->right());
      return l == s->left() && r == s->right() ? s : Shape::orOf(l, r);
    }
    case ShapeKind::Geq: {
      ShapePtr b = nnfPos(s->body());
      return b == s->body() ? s : Shape::geq(s->count(), s->path(), b);
    }
    case ShapeKind::Leq: {
      ShapePtr b = nnfPos(s->body());
      return b == s->body() ? s : Shape::leq(s->count(), s->path(), b);
    }
    case ShapeKind::ForAll: {
      ShapePtr b = nnfPos(s->body());
      return b == s->body() ? s : Shape::forAll(s->path(), b);
    }
    default: return s;
  }
}

ShapePtr nnfNeg(const ShapePtr& s) {
  switch (s->kind()) {
    case ShapeKind::Top: return Shape::bottom();
    case ShapeKind::Bottom: return Shape::top();
    case ShapeKind::Not: return nnfPos(s->body());
    case ShapeKind::And: return Shape::orOf(nnfNeg(s->left()), nnfNeg(s->right()));
    case ShapeKind::Or: return Shape::andOf(nnfNeg(s->left()), nnfNeg(s->right()));
    case ShapeKind::ForAll: return Shape::geq(1, s->path(), nnfNeg(s->body()));
    case ShapeKind::Geq:
      if (s->count() == 0) return Shape::bottom();  // ¬≥₀E.ψ is simply false
      return Shape::leq(s->count() - 1, s->path(), nnfPos(s->body()));
    case ShapeKind::Leq: return Shape::geq(s->count() + 1, s->path(), nnfPos(s->body()));
    default: return Shape::notOf(s);  // negation stays on the atom
  }
}

}  // namespace

NnfShape::NnfShape(ShapePtr s) : shape_(std::move(s)) {
  if (!shape_) throw std::invalid_argument("null shape");
  if (!isNnf(*shape_)) throw std::logic_error("shape is not in negation normal form");
}

NnfShape nnf(const ShapePtr& s) { return NnfShape(nnfPos(s)); }

RecursionError::RecursionError(std::vector<Node> cycle)
    : std::runtime_error([&cycle] {
        std::string msg = "recursive schema:";
        for (const Node& n : cycle) msg += " " + n.toString();
        return msg;
      }()),
      cycle_(std::move(cycle)) {}

Schema::Schema(std::vector<ShapeDefinition> defs, TargetPolicy policy)
    : defs_(std::move(defs)), policy_(policy) {
  for (size_t i = 0; i < defs_.size(); ++i) {
    if (!defs_[i].shape || !defs_[i].target) throw SchemaError("definition with null shape");
    if (!byName_.emplace(defs_[i].name, i).second)
      throw SchemaError("duplicate shape name " + defs_[i].name.toString());
    if (policy_ == TargetPolicy::Monotone && !isAdmittedTarget(defs_[i].target))
      throw SchemaError("target of " + defs_[i].name.toString() +
                        " is not an admitted monotone target form");
  }
}

const ShapeDefinition* Schema::find(const Node& name) const {
  auto it = byName_.find(name);
  return it == byName_.end() ? nullptr : &defs_[it->second];
}

ShapePtr Schema::resolve(const Node& name) const {
  const ShapeDefinition* d = find(name);
  return d ? d->shape : Shape::top();
}

namespace {

void collectRefs(const ShapePtr& s, std::vector<Node>& out) {
  if (!s) return;
  if (s->kind() == ShapeKind::HasShape) out.push_back(s->name());
  collectRefs(s->left(), out);
  collectRefs(s->right(), out);
}

}  // namespace

std::optional<std::vector<Node>> checkNonrecursive(const Schema& h) {
  // Iterative DFS over the hasShape-reference digraph; 0 = white, 1 = on
  // stack, 2 = done.
  std::unordered_map<Node, int, NodeHash> state;
  std::unordered_map<Node, std::vector<Node>, NodeHash> edges;
  for (const ShapeDefinition& d : h.definitions()) {
    std::vector<Node> refs;
    collectRefs(d.shape, refs);
    edges[d.name] = std::move(refs);
  }
  std::vector<Node> stack;
  std::function<std::optional<std::vector<Node>>(const Node&)> visit =
      [&](const Node& n) -> std::optional<std::vector<Node>> {
    auto it = edges.find(n);
    if (it == edges.end()) return std::nullopt;  // undefined names resolve to ⊤
    int& st = state[n];
    if (st == 2) return std::nullopt;
    if (st == 1) {
      auto from = std::find(stack.begin(), stack.end(), n);
      return std::vector<Node>(from, stack.end());
    }
    st = 1;
    stack.push_back(n);
    for (const Node& m : it->second) {
      if (auto cycle = visit(m)) return cycle;
    }
    stack.pop_back();
    state[n] = 2;
    return std::nullopt;
  };
  for (const ShapeDefinition& d : h.definitions()) {
    if (auto cycle = visit(d.name)) return cycle;
  }
  return std::nullopt;
}

void requireNonrecursive(const Schema& h) {
  if (auto cycle = checkNonrecursive(h)) throw RecursionError(*cycle);
}

namespace {

bool isClassTargetPath(const PathPtr& p) {
  return p && p->kind() == PathKind::Seq && p->left()->kind() == PathKind::Prop &&
         p->left()->iri() == ns::rdfType && p->right()->kind() == PathKind::Star &&
         p->right()->left()->kind() == PathKind::Prop &&
         p->right()->left()->iri() == ns::rdfsSubClassOf;
}

}  // namespace

bool isAdmittedTarget(const ShapePtr& s) {
  if (!s) return false;
  switch (s->kind()) {
    case ShapeKind::Bottom: return true;
    case ShapeKind::HasValue: return true;
    case ShapeKind::Or: return isAdmittedTarget(s->left()) && isAdmittedTarget(s->right());
    case ShapeKind::Geq: {
      if (s->count() != 1 || !s->path()) return false;
      const PathExpr& p = *s->path();
      if (s->body()->kind() == ShapeKind::Top) {
        if (p.kind() == PathKind::Prop) return true;  // subjects-of
        return p.kind() == PathKind::Inverse && p.left()->kind() == PathKind::Prop;  // objects-of
      }
      if (s->body()->kind() == ShapeKind::HasValue) return isClassTargetPath(s->path());
      return false;
    }
    default: return false;
  }
}

std::vector<Node> hasValueConstants(const ShapePtr& s) {
  std::vector<Node> out;
  std::function<void(const ShapePtr&)> walk = [&](const ShapePtr& sh) {
    if (!sh) return;
    if (sh->kind() == ShapeKind::HasValue) out.push_back(sh->constant());
    walk(sh->left());
    walk(sh->right());
  };
  walk(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void collectPathPreds(const PathPtr& p, std::set<std::string>& out) {
  if (!p) return;
  if (p->kind() == PathKind::Prop) out.insert(p->iri());
  collectPathPreds(p->left(), out);
  collectPathPreds(p->right(), out);
}

void collectMentioned(const ShapePtr& s, const Schema& h, std::set<Node>& seenDefs,
                      std::set<std::string>& out) {
  if (!s) return;
  collectPathPreds(s->path(), out);
  switch (s->kind()) {
    case ShapeKind::Eq:
    case ShapeKind::Disj:
    case ShapeKind::LessThan:
    case ShapeKind::LessThanEq:
      out.insert(s->prop());
      break;
    case ShapeKind::Closed:
      out.insert(s->closedProps().begin(), s->closedProps().end());
      break;
    case ShapeKind::HasShape:
      if (seenDefs.insert(s->name()).second) collectMentioned(h.resolve(s->name()), h, seenDefs, out);
      break;
    default:
      break;
  }
  collectMentioned(s->left(), h, seenDefs, out);
  collectMentioned(s->right(), h, seenDefs, out);
}

}  // namespace

std::set<std::string> mentionedPredicates(const ShapePtr& s, const Schema& h) {
  std::set<std::string> out;
  std::set<Node> seen;
  collectMentioned(s, h, seen, out);
  return out;
}

}  // namespace shapefrag
