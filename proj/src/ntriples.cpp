#include "shapefrag/ntriples.hpp"

#include <algorithm>

namespace shapefrag {

namespace {

struct LineScanner {
  std::string_view text;
  size_t pos = 0;
  size_t line;

  explicit LineScanner(std::string_view t, size_t lineNo) : text(t), line(lineNo) {}

  void skipWs() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool atEnd() {
    skipWs();
    return pos >= text.size() || text[pos] == '#';
  }
  char peek() { return pos < text.size() ? text[pos] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, pos + 1); }

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
      if (pos >= text.size()) fail("truncated \\u escape");
      char c = text[pos++];
      v <<= 4;
      if (c >= '0' && c <= '9') v |= c - '0';
      else if (c >= 'a' && c <= 'f') v |= c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v |= c - 'A' + 10;
      else fail("bad hex digit in escape");
    }
    return v;
  }

  std::string readIriRef() {
    if (peek() != '<') fail("expected '<'");
    ++pos;
    std::string out;
    while (pos < text.size() && text[pos] != '>') {
      char c = text[pos];
      if (c == '\\') {
        ++pos;
        if (pos >= text.size()) fail("truncated escape in IRI");
        char e = text[pos++];
        if (e == 'u') appendUtf8(out, readHex(4));
        else if (e == 'U') appendUtf8(out, readHex(8));
        else fail("unsupported escape in IRI");
      } else {
        out += c;
        ++pos;
      }
    }
    if (pos >= text.size()) fail("unterminated IRI");
    ++pos;  // '>'
    if (out.empty()) fail("empty IRI");
    return out;
  }

  std::string readBlankLabel() {
    // at "_:"
    pos += 2;
    std::string out;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
        out += c;
        ++pos;
      } else {
        break;
      }
    }
    while (!out.empty() && out.back() == '.') {  // trailing dot belongs to the statement
      out.pop_back();
      --pos;
    }
    if (out.empty()) fail("empty blank node label");
    return out;
  }

  std::string readQuoted() {
    ++pos;  // opening quote
    std::string out;
    while (pos < text.size() && text[pos] != '"') {
      char c = text[pos];
      if (c == '\\') {
        ++pos;
        if (pos >= text.size()) fail("truncated escape in literal");
        char e = text[pos++];
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
          default: fail("unsupported escape in literal");
        }
      } else {
        out += c;
        ++pos;
      }
    }
    if (pos >= text.size()) fail("unterminated literal");
    ++pos;  // closing quote
    return out;
  }

  Node readTerm(bool subjectPosition) {
    skipWs();
    char c = peek();
    if (c == '<') return Node::iri(readIriRef());
    if (c == '_' && pos + 1 < text.size() && text[pos + 1] == ':') return Node::blank(readBlankLabel());
    if (c == '"') {
      if (subjectPosition) fail("literal not allowed as subject");
      std::string lex = readQuoted();
      if (peek() == '@') {
        ++pos;
        std::string tag;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '-')) {
          tag += text[pos++];
        }
        if (tag.empty()) fail("empty language tag");
        return Node::langLiteral(lex, tag);
      }
      if (peek() == '^') {
        if (pos + 1 >= text.size() || text[pos + 1] != '^') fail("expected '^^'");
        pos += 2;
        return Node::literal(lex, readIriRef());
      }
      return Node::literal(lex);
    }
    fail("expected IRI, blank node or literal");
  }
};

}  // namespace

Graph parseNTriples(std::string_view text) {
  std::vector<Triple> triples;
  size_t lineNo = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    std::string_view lineView =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++lineNo;
    if (!lineView.empty() && lineView.back() == '\r') lineView.remove_suffix(1);
    LineScanner sc(lineView, lineNo);
    if (!sc.atEnd()) {
      Node s = sc.readTerm(true);
      sc.skipWs();
      if (sc.peek() != '<') sc.fail("predicate must be an IRI");
      std::string p = sc.readIriRef();
      Node o = sc.readTerm(false);
      sc.skipWs();
      if (sc.peek() != '.') sc.fail("expected '.' at end of statement");
      ++sc.pos;
      if (!sc.atEnd()) sc.fail("unexpected content after '.'");
      triples.emplace_back(std::move(s), std::move(p), std::move(o));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return Graph(std::move(triples));
}

std::string serializeCanonical(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const Triple& t : g.triples()) {
    lines.push_back(t.subject.toString() + " <" + t.predicate + "> " + t.object.toString() + " .\n");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) out += l;
  return out;
}

}  // namespace shapefrag
