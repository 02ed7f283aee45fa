#include "shapefrag/rdf.hpp"

#include <algorithm>
#include <cctype>

namespace shapefrag {

namespace {

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string escapeLiteral(const std::string& lex) {
  std::string out;
  out.reserve(lex.size() + 2);
  for (unsigned char c : lex) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

}  // namespace

Node Node::iri(std::string value) {
  if (value.empty()) throw std::invalid_argument("IRI must be non-empty");
  Node n;
  n.kind_ = TermKind::Iri;
  n.lex_ = std::move(value);
  return n;
}

Node Node::blank(std::string label) {
  if (label.empty()) throw std::invalid_argument("blank node label must be non-empty");
  Node n;
  n.kind_ = TermKind::Blank;
  n.lex_ = std::move(label);
  return n;
}

Node Node::literal(std::string lex, std::string datatype) {
  Node n;
  n.kind_ = TermKind::Literal;
  n.lex_ = std::move(lex);
  n.datatype_ = datatype.empty() ? ns::xsdString : std::move(datatype);
  return n;
}

Node Node::langLiteral(std::string lex, std::string tag) {
  if (tag.empty()) throw std::invalid_argument("language tag must be non-empty");
  Node n;
  n.kind_ = TermKind::Literal;
  n.lex_ = std::move(lex);
  n.datatype_ = ns::rdfLangString;
  n.lang_ = lowercase(std::move(tag));
  return n;
}

bool Node::operator<(const Node& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  if (lex_ != o.lex_) return lex_ < o.lex_;
  if (datatype_ != o.datatype_) return datatype_ < o.datatype_;
  return lang_ < o.lang_;
}

std::string Node::toString() const {
  switch (kind_) {
    case TermKind::Iri: return "<" + lex_ + ">";
    case TermKind::Blank: return "_:" + lex_;
    case TermKind::Literal:
      if (!lang_.empty()) return "\"" + escapeLiteral(lex_) + "\"@" + lang_;
      if (datatype_ == ns::xsdString) return "\"" + escapeLiteral(lex_) + "\"";
      return "\"" + escapeLiteral(lex_) + "\"^^<" + datatype_ + ">";
  }
  return {};
}

size_t NodeHash::operator()(const Node& n) const {
  size_t h = std::hash<std::string>()(n.lex());
  h ^= std::hash<std::string>()(n.datatype()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= std::hash<std::string>()(n.lang()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= static_cast<size_t>(n.kind()) * 0x2545f4914f6cdd1dull;
  return h;
}

Triple::Triple(Node s, std::string p, Node o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.isLiteral()) throw std::invalid_argument("triple subject must not be a literal");
  if (predicate.empty()) throw std::invalid_argument("triple predicate must be a non-empty IRI");
}

bool Triple::operator<(const Triple& o) const {
  if (subject != o.subject) return subject < o.subject;
  if (predicate != o.predicate) return predicate < o.predicate;
  return object < o.object;
}

Graph::Graph(std::vector<Triple> triples) : triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
  std::vector<Node> ns;
  ns.reserve(triples_.size() * 2);
  for (uint32_t i = 0; i < triples_.size(); ++i) {
    const Triple& t = triples_[i];
    bySubject_[t.subject].push_back(i);
    byObject_[t.object].push_back(i);
    byPredicate_[t.predicate].push_back(i);
    ns.push_back(t.subject);
    ns.push_back(t.object);
  }
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  nodes_ = std::move(ns);
}

bool Graph::contains(const Triple& t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

std::vector<Node> Graph::objects(const Node& s, const std::string& p) const {
  std::vector<Node> out;
  auto it = bySubject_.find(s);
  if (it == bySubject_.end()) return out;
  for (uint32_t i : it->second) {
    if (triples_[i].predicate == p) out.push_back(triples_[i].object);
  }
  return out;
}

std::vector<Node> Graph::subjects(const std::string& p, const Node& o) const {
  std::vector<Node> out;
  auto it = byObject_.find(o);
  if (it == byObject_.end()) return out;
  for (uint32_t i : it->second) {
    if (triples_[i].predicate == p) out.push_back(triples_[i].subject);
  }
  return out;
}

std::vector<Triple> Graph::outgoing(const Node& s) const {
  std::vector<Triple> out;
  auto it = bySubject_.find(s);
  if (it == bySubject_.end()) return out;
  for (uint32_t i : it->second) out.push_back(triples_[i]);
  return out;
}

std::vector<Triple> Graph::incoming(const Node& o) const {
  std::vector<Triple> out;
  auto it = byObject_.find(o);
  if (it == byObject_.end()) return out;
  for (uint32_t i : it->second) out.push_back(triples_[i]);
  return out;
}

std::vector<Triple> Graph::withPredicate(const std::string& p) const {
  std::vector<Triple> out;
  auto it = byPredicate_.find(p);
  if (it == byPredicate_.end()) return out;
  for (uint32_t i : it->second) out.push_back(triples_[i]);
  return out;
}

bool Graph::isSubgraphOf(const Graph& g) const {
  return std::includes(g.triples_.begin(), g.triples_.end(), triples_.begin(), triples_.end());
}

Graph graphUnion(const Graph& a, const Graph& b) {
  std::vector<Triple> ts = a.triples();
  ts.insert(ts.end(), b.triples().begin(), b.triples().end());
  return Graph(std::move(ts));
}

ParseError::ParseError(std::string message, size_t line, size_t column)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
      line_(line),
      column_(column) {}

}  // namespace shapefrag
