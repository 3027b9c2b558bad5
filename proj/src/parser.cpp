#include "echar/parser.hpp"

#include <cctype>
#include <sstream>

namespace echar {

namespace {

struct Token {
  enum class Kind { Int, Ident, Op, End };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
public:
  Lexer(const std::string& s, int line) : s_(s), line_(line) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    int col = (int)pos_ + 1;
    if (pos_ >= s_.size()) return {Token::Kind::End, "", line_, col};
    char c = s_[pos_];
    if (std::isdigit((unsigned char)c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
      return {Token::Kind::Int, s_.substr(start, pos_ - start), line_, col};
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) ||
                                  s_[pos_] == '_'))
        ++pos_;
      return {Token::Kind::Ident, s_.substr(start, pos_ - start), line_, col};
    }
    if (std::string("+-*^()/").find(c) != std::string::npos) {
      ++pos_;
      return {Token::Kind::Op, std::string(1, c), line_, col};
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at line " +
                     std::to_string(line_) + ", column " + std::to_string(col));
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
};

class PolyParser {
public:
  PolyParser(const RingPtr& ring, const std::string& text, int line)
      : ring_(ring), lex_(text, line) {
    advance();
  }

  Poly parse() {
    Poly p = expr();
    expect_end();
    return p;
  }

private:
  void advance() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at line " + std::to_string(cur_.line) +
                     ", column " + std::to_string(cur_.col));
  }

  void expect_end() {
    if (cur_.kind != Token::Kind::End) fail("trailing input '" + cur_.text + "'");
  }

  bool is_op(const char* o) const {
    return cur_.kind == Token::Kind::Op && cur_.text == o;
  }

  Poly expr() {
    Poly acc = term();
    while (is_op("+") || is_op("-")) {
      bool minus = cur_.text == "-";
      advance();
      Poly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (is_op("*")) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Poly factor() {
    if (is_op("-")) {
      advance();
      return -factor();
    }
    Poly base = primary();
    if (is_op("^")) {
      advance();
      if (cur_.kind != Token::Kind::Int) fail("exponent must be an integer");
      unsigned e = (unsigned)std::stoul(cur_.text);
      advance();
      return base.pow(e);
    }
    return base;
  }

  Poly primary() {
    if (cur_.kind == Token::Kind::Int) {
      mpz_class num(cur_.text);
      advance();
      if (is_op("/")) {
        advance();
        if (cur_.kind != Token::Kind::Int)
          fail("denominator must be an integer");
        mpz_class den(cur_.text);
        advance();
        return Poly::constant(ring_,
                              FieldScalar::from_fraction(ring_->field, num, den));
      }
      return Poly::constant(ring_, FieldScalar::from_mpz(ring_->field, num));
    }
    if (cur_.kind == Token::Kind::Ident) {
      std::string name = cur_.text;
      for (std::size_t i = 0; i < ring_->vars.size(); ++i) {
        if (ring_->vars[i] == name) {
          advance();
          return Poly::variable(ring_, i);
        }
      }
      throw UndeclaredVariable("'" + name + "' at line " +
                               std::to_string(cur_.line) + ", column " +
                               std::to_string(cur_.col));
    }
    if (is_op("(")) {
      advance();
      Poly p = expr();
      if (!is_op(")")) fail("expected ')'");
      advance();
      return p;
    }
    fail(cur_.kind == Token::Kind::End ? "unexpected end of expression"
                                       : "unexpected token '" + cur_.text + "'");
  }

  RingPtr ring_;
  Lexer lex_;
  Token cur_;
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace((unsigned char)s[a])) ++a;
  while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
  return s.substr(a, b - a);
}

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  return PolyParser(ring, text, 1).parse();
}

SystemFile parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  SystemFile out;
  bool have_field = false, have_vars = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (!have_field) {
      if (line.rfind("field:", 0) != 0)
        throw ParseError("expected 'field:' line at line " +
                         std::to_string(lineno));
      out.field_spec = trim(line.substr(6));
      out.field = FieldDesc::parse(out.field_spec);
      have_field = true;
      continue;
    }
    if (!have_vars) {
      if (line.rfind("vars:", 0) != 0)
        throw ParseError("expected 'vars:' line at line " +
                         std::to_string(lineno));
      std::vector<std::string> vars;
      std::string rest = line.substr(5);
      std::size_t start = 0;
      while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        std::string name = trim(comma == std::string::npos
                                    ? rest.substr(start)
                                    : rest.substr(start, comma - start));
        if (!name.empty()) vars.push_back(name);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (vars.empty())
        throw ParseError("no variables declared at line " +
                         std::to_string(lineno));
      out.ring = make_ring(out.field, std::move(vars));
      have_vars = true;
      continue;
    }
    out.polys.push_back(PolyParser(out.ring, line, lineno).parse());
  }
  if (!have_field) throw ParseError("missing 'field:' line");
  if (!have_vars) throw ParseError("missing 'vars:' line");
  return out;
}

std::string SystemFile::to_string() const {
  std::ostringstream os;
  os << "field: " << field_spec << "\n";
  os << "vars: ";
  for (std::size_t i = 0; i < ring->vars.size(); ++i) {
    if (i) os << ", ";
    os << ring->vars[i];
  }
  os << "\n";
  for (const auto& p : polys) os << p.to_string() << "\n";
  return os.str();
}

}  // namespace echar
