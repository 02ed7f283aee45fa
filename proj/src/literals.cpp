#include "shapefrag/literals.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>

namespace shapefrag {

namespace {

enum class Family { Numeric, String, Boolean, DateTime, Other };

bool isIntegerDatatype(const std::string& dt) {
  static const char* names[] = {"integer",         "long",
                                "int",             "short",
                                "byte",            "nonNegativeInteger",
                                "nonPositiveInteger", "negativeInteger",
                                "positiveInteger", "unsignedLong",
                                "unsignedInt",     "unsignedShort",
                                "unsignedByte"};
  if (dt.size() <= ns::xsd.size() || dt.compare(0, ns::xsd.size(), ns::xsd) != 0) return false;
  std::string local = dt.substr(ns::xsd.size());
  for (const char* n : names)
    if (local == n) return true;
  return false;
}

Family familyOf(const Node& l) {
  const std::string& dt = l.datatype();
  if (dt == ns::xsdString) return Family::String;
  if (dt == ns::xsdBoolean) return Family::Boolean;
  if (dt == ns::xsdDateTime) return Family::DateTime;
  if (dt == ns::xsdDecimal || dt == ns::xsdDouble || dt == std::string(ns::xsd) + "float" ||
      isIntegerDatatype(dt))
    return Family::Numeric;
  return Family::Other;
}

// Exact decimal value: sign, integer digits, fraction digits (both without
// leading/trailing zeros once normalized).
struct Decimal {
  bool negative = false;
  std::string intPart;   // no leading zeros; empty means 0
  std::string fracPart;  // no trailing zeros
};

std::optional<Decimal> parseDecimal(const std::string& s) {
  Decimal d;
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) d.negative = s[i++] == '-';
  std::string ip, fp;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ip += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fp += s[i++];
  }
  if (i != s.size() || (ip.empty() && fp.empty())) return std::nullopt;
  size_t z = ip.find_first_not_of('0');
  d.intPart = z == std::string::npos ? "" : ip.substr(z);
  size_t e = fp.find_last_not_of('0');
  d.fracPart = e == std::string::npos ? "" : fp.substr(0, e + 1);
  if (d.intPart.empty() && d.fracPart.empty()) d.negative = false;
  return d;
}

int compareDecimals(const Decimal& a, const Decimal& b) {
  if (a.negative != b.negative) return a.negative ? -1 : 1;
  int sign = a.negative ? -1 : 1;
  if (a.intPart.size() != b.intPart.size())
    return a.intPart.size() < b.intPart.size() ? -sign : sign;
  if (int c = a.intPart.compare(b.intPart); c != 0) return c < 0 ? -sign : sign;
  if (int c = a.fracPart.compare(b.fracPart); c != 0) return c < 0 ? -sign : sign;
  return 0;
}

bool hasExponent(const std::string& s) {
  return s.find('e') != std::string::npos || s.find('E') != std::string::npos;
}

std::optional<long double> parseFloating(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "NaN") return std::nullopt;  // NaN compares with nothing
  if (s == "INF" || s == "+INF") return HUGE_VALL;
  if (s == "-INF") return -HUGE_VALL;
  const char* begin = s.c_str();
  char* end = nullptr;
  long double v = strtold(begin, &end);
  if (end != begin + s.size()) return std::nullopt;
  return v;
}

std::optional<LiteralOrder> compareNumeric(const Node& a, const Node& b) {
  bool exactA = !hasExponent(a.lex()) && a.datatype() != ns::xsdDouble &&
                a.datatype() != std::string(ns::xsd) + "float";
  bool exactB = !hasExponent(b.lex()) && b.datatype() != ns::xsdDouble &&
                b.datatype() != std::string(ns::xsd) + "float";
  if (exactA && exactB) {
    auto da = parseDecimal(a.lex());
    auto db = parseDecimal(b.lex());
    if (!da || !db) return std::nullopt;
    int c = compareDecimals(*da, *db);
    return c < 0 ? LiteralOrder::LessThan : c > 0 ? LiteralOrder::GreaterThan : LiteralOrder::Equal;
  }
  auto fa = parseFloating(a.lex());
  auto fb = parseFloating(b.lex());
  if (!fa || !fb) return std::nullopt;
  if (*fa < *fb) return LiteralOrder::LessThan;
  if (*fa > *fb) return LiteralOrder::GreaterThan;
  return LiteralOrder::Equal;
}

// xsd:dateTime instant as (days since 1970-01-01, seconds in day scaled by
// fraction kept as string comparison is not enough, so use long double seconds).
struct Instant {
  long double seconds;  // since epoch, UTC
  bool zoned;
};

int daysFromCivil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  int era = (y >= 0 ? y : y - 399) / 400;
  unsigned yoe = static_cast<unsigned>(y - era * 400);
  unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<int>(doe) - 719468;
}

std::optional<Instant> parseDateTime(const std::string& s) {
  // YYYY-MM-DDTHH:MM:SS(.fff)?(Z|[+-]hh:mm)?
  int y, mo, d, h, mi;
  long double sec = 0;
  size_t i = 0;
  auto readInt = [&](size_t len, int& out) -> bool {
    if (i + len > s.size()) return false;
    out = 0;
    for (size_t k = 0; k < len; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[i + k]))) return false;
      out = out * 10 + (s[i + k] - '0');
    }
    i += len;
    return true;
  };
  bool negYear = false;
  if (i < s.size() && s[i] == '-') {
    negYear = true;
    ++i;
  }
  if (!readInt(4, y)) return std::nullopt;
  if (negYear) y = -y;
  if (i >= s.size() || s[i++] != '-') return std::nullopt;
  if (!readInt(2, mo)) return std::nullopt;
  if (i >= s.size() || s[i++] != '-') return std::nullopt;
  if (!readInt(2, d)) return std::nullopt;
  if (i >= s.size() || s[i++] != 'T') return std::nullopt;
  if (!readInt(2, h)) return std::nullopt;
  if (i >= s.size() || s[i++] != ':') return std::nullopt;
  if (!readInt(2, mi)) return std::nullopt;
  if (i >= s.size() || s[i++] != ':') return std::nullopt;
  int wholeSec;
  if (!readInt(2, wholeSec)) return std::nullopt;
  sec = wholeSec;
  if (i < s.size() && s[i] == '.') {
    ++i;
    long double scale = 0.1L;
    bool any = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      sec += (s[i] - '0') * scale;
      scale /= 10;
      ++i;
      any = true;
    }
    if (!any) return std::nullopt;
  }
  int offsetMin = 0;
  bool zoned = false;
  if (i < s.size()) {
    if (s[i] == 'Z') {
      zoned = true;
      ++i;
    } else if (s[i] == '+' || s[i] == '-') {
      bool neg = s[i] == '-';
      ++i;
      int oh, om;
      if (!readInt(2, oh)) return std::nullopt;
      if (i >= s.size() || s[i++] != ':') return std::nullopt;
      if (!readInt(2, om)) return std::nullopt;
      offsetMin = (oh * 60 + om) * (neg ? -1 : 1);
      zoned = true;
    }
  }
  if (i != s.size()) return std::nullopt;
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 24 || mi > 59) return std::nullopt;
  long double total = static_cast<long double>(daysFromCivil(y, mo, d)) * 86400.0L +
                      h * 3600.0L + mi * 60.0L + sec - offsetMin * 60.0L;
  return Instant{total, zoned};
}

}  // namespace

LiteralOrder compareLiterals(const Node& a, const Node& b) {
  if (!a.isLiteral() || !b.isLiteral()) return LiteralOrder::Incomparable;
  Family fa = familyOf(a);
  Family fb = familyOf(b);
  if (fa != fb || fa == Family::Other) return LiteralOrder::Incomparable;
  switch (fa) {
    case Family::Numeric: {
      auto r = compareNumeric(a, b);
      return r ? *r : LiteralOrder::Incomparable;
    }
    case Family::String: {
      int c = a.lex().compare(b.lex());
      return c < 0 ? LiteralOrder::LessThan
                   : c > 0 ? LiteralOrder::GreaterThan : LiteralOrder::Equal;
    }
    case Family::Boolean: {
      auto val = [](const std::string& s) -> std::optional<int> {
        if (s == "true" || s == "1") return 1;
        if (s == "false" || s == "0") return 0;
        return std::nullopt;
      };
      auto va = val(a.lex());
      auto vb = val(b.lex());
      if (!va || !vb) return LiteralOrder::Incomparable;
      return *va < *vb ? LiteralOrder::LessThan
                       : *va > *vb ? LiteralOrder::GreaterThan : LiteralOrder::Equal;
    }
    case Family::DateTime: {
      auto ia = parseDateTime(a.lex());
      auto ib = parseDateTime(b.lex());
      if (!ia || !ib || ia->zoned != ib->zoned) return LiteralOrder::Incomparable;
      if (ia->seconds < ib->seconds) return LiteralOrder::LessThan;
      if (ia->seconds > ib->seconds) return LiteralOrder::GreaterThan;
      return LiteralOrder::Equal;
    }
    case Family::Other: break;
  }
  return LiteralOrder::Incomparable;
}

bool langEquiv(const Node& a, const Node& b) {
  // Tags are lowercased at Node construction.
  return a.isLiteral() && b.isLiteral() && !a.lang().empty() && a.lang() == b.lang();
}

}  // namespace shapefrag
