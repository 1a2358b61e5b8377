#include <cctype>
#include <string>
#include <vector>

#include "borderline/polynomial.hpp"

namespace borderline {

namespace {

// Recursive-descent parser.
//   expr   := ['+'|'-'] product (('+'|'-') product)*
//   product:= power (('*' power) | power-adjacency-not-allowed)*
//   power  := atom ('^' integer)?
//   atom   := rational | variable | '(' expr ')'
struct Parser {
  const RingPtr& R;
  const std::string& s;
  std::size_t pos = 0;

  Parser(const RingPtr& ring, const std::string& text) : R(ring), s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw input_error("parse error at position " + std::to_string(pos) + ": " + why);
  }

  long integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }

  Polynomial atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string num = s.substr(start, pos - start);
      skip();
      if (pos < s.size() && s[pos] == '/') {
        // A rational literal a/b (denominator must be a plain integer).
        std::size_t save = pos;
        ++pos;
        skip();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          std::size_t dstart = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          std::string den = s.substr(dstart, pos - dstart);
          Q q(num + "/" + den);
          q.canonicalize();
          return Polynomial::constant(R, q);
        }
        pos = save;
      }
      return Polynomial::constant(R, Q(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      int v = R->var_index(name);
      if (v < 0) fail("unknown variable '" + name + "'");
      return Polynomial::variable(R, v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      long e = integer();
      if (e < 0) fail("negative exponent");
      Polynomial r = Polynomial::constant(R, 1);
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial product() {
    Polynomial p = power();
    while (eat('*')) p = p * power();
    return p;
  }

  Polynomial expr() {
    skip();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial p = product();
    if (neg) p = -p;
    while (true) {
      skip();
      if (eat('+'))
        p = p + product();
      else if (eat('-'))
        p = p - product();
      else
        break;
    }
    return p;
  }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& R, const std::string& text) {
  Parser parser(R, text);
  Polynomial p = parser.expr();
  parser.skip();
  if (parser.pos != text.size())
    parser.fail("trailing input");
  return p;
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& R,
                                              const std::string& text) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string piece = text.substr(start, i - start);
      bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
      if (!blank) out.push_back(parse_polynomial(R, piece));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace borderline
