#include "shapefrag/turtle.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace shapefrag {

const std::map<std::string, std::string>& defaultPrefixes() {
  static const std::map<std::string, std::string> prefixes = {
      {"", ""},
      {"rdf", std::string(ns::rdf)},
      {"rdfs", std::string(ns::rdfs)},
      {"xsd", std::string(ns::xsd)},
      {"sh", std::string(ns::sh)},
  };
  return prefixes;
}

namespace {

enum class Tok {
  Eof,
  IriRef,    // value = IRI
  Pname,     // value = prefix, value2 = local
  BlankLabel,
  String,    // value = unescaped contents
  LangTag,
  Integer,
  Decimal,
  Double,
  KwPrefixDecl,  // @prefix or PREFIX
  KwA,
  KwTrue,
  KwFalse,
  Dot,
  Semicolon,
  Comma,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Caret2,
};

struct Token {
  Tok kind = Tok::Eof;
  std::string value;
  std::string value2;
  size_t line = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skipWsAndComments();
    Token t;
    t.line = line_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    switch (c) {
      case '.': ++pos_; t.kind = Tok::Dot; return t;
      case ';': ++pos_; t.kind = Tok::Semicolon; return t;
      case ',': ++pos_; t.kind = Tok::Comma; return t;
      case '[': ++pos_; t.kind = Tok::LBracket; return t;
      case ']': ++pos_; t.kind = Tok::RBracket; return t;
      case '(': ++pos_; t.kind = Tok::LParen; return t;
      case ')': ++pos_; t.kind = Tok::RParen; return t;
      default: break;
    }
    if (c == '<') return lexIriRef();
    if (c == '"' || c == '\'') return lexString(c);
    if (c == '@') return lexAtKeyword();
    if (c == '^') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '^') {
        pos_ += 2;
        t.kind = Tok::Caret2;
        return t;
      }
      fail("unexpected '^'");
    }
    if (c == '_' && pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') return lexBlank();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') return lexNumber();
    return lexNameOrKeyword();
  }

  const std::set<std::string>& usedBlankLabels() const { return usedBlankLabels_; }
  size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_); }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  size_t line_ = 1;
  std::set<std::string> usedBlankLabels_;

  void advance() {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  void skipWsAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void appendUtf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  uint32_t readHex(int digits) {
    uint32_t v = 0;
    for (int i = 0; i < digits; ++i) {
      if (pos_ >= text_.size()) fail("truncated \\u escape");
      char c = text_[pos_++];
      v <<= 4;
      if (c >= '0' && c <= '9') v |= c - '0';
      else if (c >= 'a' && c <= 'f') v |= c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v |= c - 'A' + 10;
      else fail("bad hex digit in escape");
    }
    return v;
  }

  char readEscape(std::string& out) {
    char e = text_[pos_++];
    switch (e) {
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u': appendUtf8(out, readHex(4)); break;
      case 'U': appendUtf8(out, readHex(8)); break;
      default: fail("unsupported string escape");
    }
    return e;
  }

  Token lexIriRef() {
    Token t;
    t.line = line_;
    t.kind = Tok::IriRef;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '>') {
      char c = text_[pos_];
      if (c == '\\') {
        ++pos_;
        if (pos_ >= text_.size()) fail("truncated escape in IRI");
        char e = text_[pos_++];
        if (e == 'u') appendUtf8(t.value, readHex(4));
        else if (e == 'U') appendUtf8(t.value, readHex(8));
        else fail("unsupported escape in IRI");
      } else {
        if (c == '\n') fail("newline in IRI");
        t.value += c;
        ++pos_;
      }
    }
    if (pos_ >= text_.size()) fail("unterminated IRI");
    ++pos_;
    return t;
  }

  Token lexString(char quote) {
    Token t;
    t.line = line_;
    t.kind = Tok::String;
    bool longForm = pos_ + 2 < text_.size() && text_[pos_ + 1] == quote && text_[pos_ + 2] == quote;
    if (longForm) {
      pos_ += 3;
      while (pos_ < text_.size()) {
        if (text_[pos_] == quote && pos_ + 2 < text_.size() && text_[pos_ + 1] == quote &&
            text_[pos_ + 2] == quote) {
          pos_ += 3;
          return t;
        }
        if (text_[pos_] == '\\') {
          ++pos_;
          if (pos_ >= text_.size()) fail("truncated escape");
          readEscape(t.value);
        } else {
          if (text_[pos_] == '\n') ++line_;
          t.value += text_[pos_++];
        }
      }
      fail("unterminated long string");
    }
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != quote) {
      char c = text_[pos_];
      if (c == '\n') fail("newline in string");
      if (c == '\\') {
        ++pos_;
        if (pos_ >= text_.size()) fail("truncated escape");
        readEscape(t.value);
      } else {
        t.value += c;
        ++pos_;
      }
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    ++pos_;
    return t;
  }

  Token lexAtKeyword() {
    Token t;
    t.line = line_;
    size_t start = pos_;
    ++pos_;
    std::string word;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      word += text_[pos_++];
    }
    if (word == "prefix") {
      t.kind = Tok::KwPrefixDecl;
      t.value = "@prefix";
      return t;
    }
    if (word == "base") fail("unsupported Turtle feature: @base");
    // language tag following a string
    if (!word.empty() && std::isalpha(static_cast<unsigned char>(word[0]))) {
      t.kind = Tok::LangTag;
      t.value = word;
      return t;
    }
    pos_ = start;
    fail("unexpected '@'");
  }

  Token lexBlank() {
    Token t;
    t.line = line_;
    t.kind = Tok::BlankLabel;
    pos_ += 2;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
        t.value += c;
        ++pos_;
      } else {
        break;
      }
    }
    if (t.value.empty()) fail("empty blank node label");
    usedBlankLabels_.insert(t.value);
    return t;
  }

  Token lexNumber() {
    Token t;
    t.line = line_;
    size_t start = pos_;
    if (text_[pos_] == '+' || text_[pos_] == '-') ++pos_;
    bool digits = false, dot = false, exp = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits = true;
        ++pos_;
      } else if (c == '.' && !dot && !exp && pos_ + 1 < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        dot = true;
        ++pos_;
      } else if ((c == 'e' || c == 'E') && digits && !exp) {
        exp = true;
        ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      } else {
        break;
      }
    }
    if (!digits) fail("malformed numeric literal");
    t.value = std::string(text_.substr(start, pos_ - start));
    t.kind = exp ? Tok::Double : dot ? Tok::Decimal : Tok::Integer;
    return t;
  }

  Token lexNameOrKeyword() {
    Token t;
    t.line = line_;
    size_t start = pos_;
    // prefix part up to ':', or a bare word
    std::string word;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
        word += c;
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      std::string local;
      while (pos_ < text_.size()) {
        char c = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '%' ||
            (c == '.' && pos_ + 1 < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '_'))) {
          local += c;
          ++pos_;
        } else {
          break;
        }
      }
      t.kind = Tok::Pname;
      t.value = word;
      t.value2 = local;
      return t;
    }
    if (word == "a") { t.kind = Tok::KwA; return t; }
    if (word == "true") { t.kind = Tok::KwTrue; return t; }
    if (word == "false") { t.kind = Tok::KwFalse; return t; }
    if (word == "PREFIX") { t.kind = Tok::KwPrefixDecl; t.value = "PREFIX"; return t; }
    if (word == "BASE") fail("unsupported Turtle feature: BASE");
    if (word == "GRAPH") fail("unsupported Turtle feature: named graphs");
    pos_ = start;
    fail(word.empty() ? "unexpected character" : "unexpected token '" + word + "'");
  }
};

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : lexer_(text) {
    prefixes_ = defaultPrefixes();
    advance();
  }

  Graph parse() {
    while (cur_.kind != Tok::Eof) {
      if (cur_.kind == Tok::KwPrefixDecl) {
        parsePrefixDecl();
      } else {
        parseStatement();
      }
    }
    return Graph(std::move(triples_));
  }

 private:
  Lexer lexer_;
  Token cur_;
  std::map<std::string, std::string> prefixes_;
  std::vector<Triple> triples_;
  std::string anonPrefix_;
  size_t anonCounter_ = 0;

  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.line); }

  void expect(Tok k, const std::string& what) {
    if (cur_.kind != k) fail("expected " + what);
    advance();
  }

  std::string resolvePname(const Token& t) {
    auto it = prefixes_.find(t.value);
    if (it == prefixes_.end()) fail("undeclared prefix '" + t.value + ":'");
    return it->second + t.value2;
  }

  Node freshBlank() {
    if (anonPrefix_.empty()) {
      anonPrefix_ = "b";
      auto collides = [&] {
        for (const std::string& used : lexer_.usedBlankLabels()) {
          if (used.size() > anonPrefix_.size() && used.compare(0, anonPrefix_.size(), anonPrefix_) == 0 &&
              std::isdigit(static_cast<unsigned char>(used[anonPrefix_.size()])))
            return true;
        }
        return false;
      };
      while (collides()) anonPrefix_ += "b";
    }
    return Node::blank(anonPrefix_ + std::to_string(anonCounter_++));
  }

  void parsePrefixDecl() {
    bool needsDot = cur_.value == "@prefix";
    advance();
    if (cur_.kind != Tok::Pname || !cur_.value2.empty()) fail("expected prefix name in @prefix");
    std::string name = cur_.value;
    advance();
    if (cur_.kind != Tok::IriRef) fail("expected IRI in @prefix");
    prefixes_[name] = cur_.value;
    advance();
    if (needsDot) expect(Tok::Dot, "'.' after @prefix");
  }

  void parseStatement() {
    Node subject = parseSubject();
    parsePredicateObjectList(subject);
    expect(Tok::Dot, "'.' at end of statement");
  }

  Node parseSubject() {
    switch (cur_.kind) {
      case Tok::IriRef: {
        Node n = Node::iri(cur_.value);
        advance();
        return n;
      }
      case Tok::Pname: {
        Node n = Node::iri(resolvePname(cur_));
        advance();
        return n;
      }
      case Tok::BlankLabel: {
        Node n = Node::blank(cur_.value);
        advance();
        return n;
      }
      case Tok::LBracket: return parseBlankNodePropertyList();
      case Tok::LParen: return parseCollection();
      default: fail("expected subject");
    }
  }

  void parsePredicateObjectList(const Node& subject) {
    while (true) {
      std::string predicate = parseVerb();
      parseObjectList(subject, predicate);
      if (cur_.kind == Tok::Semicolon) {
        while (cur_.kind == Tok::Semicolon) advance();
        if (cur_.kind == Tok::Dot || cur_.kind == Tok::RBracket || cur_.kind == Tok::Eof) return;
        continue;
      }
      return;
    }
  }

  std::string parseVerb() {
    if (cur_.kind == Tok::KwA) {
      advance();
      return ns::rdfType;
    }
    if (cur_.kind == Tok::IriRef) {
      std::string p = cur_.value;
      advance();
      return p;
    }
    if (cur_.kind == Tok::Pname) {
      std::string p = resolvePname(cur_);
      advance();
      return p;
    }
    fail("expected predicate");
  }

  void parseObjectList(const Node& subject, const std::string& predicate) {
    while (true) {
      Node object = parseObject();
      triples_.emplace_back(subject, predicate, object);
      if (cur_.kind == Tok::Comma) {
        advance();
        continue;
      }
      return;
    }
  }

  Node parseObject() {
    switch (cur_.kind) {
      case Tok::IriRef: {
        Node n = Node::iri(cur_.value);
        advance();
        return n;
      }
      case Tok::Pname: {
        Node n = Node::iri(resolvePname(cur_));
        advance();
        return n;
      }
      case Tok::BlankLabel: {
        Node n = Node::blank(cur_.value);
        advance();
        return n;
      }
      case Tok::LBracket: return parseBlankNodePropertyList();
      case Tok::LParen: return parseCollection();
      case Tok::String: return parseLiteral();
      case Tok::Integer: {
        Node n = Node::literal(cur_.value, ns::xsdInteger);
        advance();
        return n;
      }
      case Tok::Decimal: {
        Node n = Node::literal(cur_.value, ns::xsdDecimal);
        advance();
        return n;
      }
      case Tok::Double: {
        Node n = Node::literal(cur_.value, ns::xsdDouble);
        advance();
        return n;
      }
      case Tok::KwTrue:
      case Tok::KwFalse: {
        Node n = Node::literal(cur_.kind == Tok::KwTrue ? "true" : "false", ns::xsdBoolean);
        advance();
        return n;
      }
      default: fail("expected object");
    }
  }

  Node parseLiteral() {
    std::string lex = cur_.value;
    advance();
    if (cur_.kind == Tok::LangTag) {
      Node n = Node::langLiteral(lex, cur_.value);
      advance();
      return n;
    }
    if (cur_.kind == Tok::Caret2) {
      advance();
      std::string dt;
      if (cur_.kind == Tok::IriRef) dt = cur_.value;
      else if (cur_.kind == Tok::Pname) dt = resolvePname(cur_);
      else fail("expected datatype IRI after '^^'");
      advance();
      return Node::literal(lex, dt);
    }
    return Node::literal(lex);
  }

  Node parseBlankNodePropertyList() {
    advance();  // '['
    Node node = freshBlank();
    if (cur_.kind != Tok::RBracket) parsePredicateObjectList(node);
    expect(Tok::RBracket, "']'");
    return node;
  }

  Node parseCollection() {
    advance();  // '('
    std::vector<Node> items;
    while (cur_.kind != Tok::RParen) {
      if (cur_.kind == Tok::Eof) fail("unterminated collection");
      items.push_back(parseObject());
    }
    advance();  // ')'
    Node list = Node::iri(ns::rdfNil);
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
      Node cell = freshBlank();
      triples_.emplace_back(cell, ns::rdfFirst, *it);
      triples_.emplace_back(cell, ns::rdfRest, list);
      list = cell;
    }
    return list;
  }
};

}  // namespace

Graph parseTurtle(std::string_view text) { return TurtleParser(text).parse(); }

}  // namespace shapefrag
