#include "germkit/expr.hpp"

#include <cctype>

namespace germkit {

namespace {

struct Parser {
  const std::string& text;
  const Ring& ring;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) {
    fail(Errc::ParseError, what + " at position " + std::to_string(pos) +
                               " in expression '" + text + "'");
  }

  std::string read_digits() {
    std::string d;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      d += text[pos++];
    if (d.empty()) error("expected digits");
    return d;
  }

  Rational read_number() {
    std::string num = read_digits();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      std::string den = read_digits();
      return rat_parse(num + "/" + den);
    }
    return rat_parse(num);
  }

  std::string read_ident() {
    std::string id;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      id += text[pos++];
    return id;
  }

  Series parse_primary() {
    skip_ws();
    if (pos >= text.size()) error("unexpected end of expression");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Series inner = parse_expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Series::constant(ring, read_number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id = read_ident();
      if (auto v = ring.var_index(id)) return Series::variable(ring, *v);
      if (id == ring.field().generator() && ring.field().degree() > 1)
        return Series::constant(ring, ring.field().gen());
      error("unknown identifier '" + id + "'");
    }
    error(std::string("unexpected character '") + c + "'");
  }

  Series parse_factor() {
    int sign = 1;
    while (true) {
      char c = peek();
      if (c == '-') {
        sign = -sign;
        ++pos;
      } else if (c == '+') {
        ++pos;
      } else {
        break;
      }
    }
    Series base = parse_primary();
    if (peek() == '^') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        error("expected nonnegative integer exponent");
      std::string d = read_digits();
      long e = 0;
      try {
        e = std::stol(d);
      } catch (...) {
        error("exponent out of range");
      }
      base = base.pow(static_cast<int>(e));
    }
    if (sign < 0) return -base;
    return base;
  }

  Series parse_term() {
    Series acc = parse_factor();
    while (peek() == '*') {
      ++pos;
      acc = acc * parse_factor();
    }
    return acc;
  }

  Series parse_expr() {
    Series acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++pos;
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }
};

} // namespace

Series parse_expr(const std::string& text, const Ring& ring) {
  Parser p{text, ring};
  Series s = p.parse_expr();
  if (!p.eof()) p.error("trailing input");
  return s;
}

} // namespace germkit
