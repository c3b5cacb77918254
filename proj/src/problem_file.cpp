#include "flatkit/problem_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace flatkit {

ParseError::ParseError(SourceLocation loc, const std::string& what)
    : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) +
                         ": parse error: " + what),
      loc_(loc) {}

SemanticError::SemanticError(SourceLocation loc, const std::string& what)
    : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + what),
      loc_(loc) {}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourceLocation loc;
  std::size_t begin;  // byte offsets into the source
  std::size_t end;
};

std::vector<Token> lex(std::string_view src, SourceLocation origin) {
  std::vector<Token> out;
  std::size_t line = origin.line, col = origin.column;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    SourceLocation loc{line, col};
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), loc, start, j});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), loc, start, j});
      advance(j - i);
    } else if (std::string_view("+-*/^()[],;:=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), loc, start, i + 1});
      advance(1);
    } else {
      throw ParseError(loc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", {line, col}, src.size(), src.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, RingPtr ring) : toks_(std::move(toks)), ring_(std::move(ring)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
  bool accept(char c) {
    if (!is_punct(c)) return false;
    next();
    return true;
  }
  void expect(char c, const char* context) {
    if (!accept(c)) {
      const auto& t = peek();
      throw ParseError(t.loc, std::string("expected '") + c + "' " + context + ", found " + describe(t));
    }
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
  }
  void set_ring(RingPtr r) { ring_ = std::move(r); }

  Polynomial expression() {
    Polynomial acc = signed_term();
    while (is_punct('+') || is_punct('-')) {
      bool minus = next().text[0] == '-';
      Polynomial t = term();
      if (minus) acc -= t; else acc += t;
    }
    return acc;
  }

  std::vector<Polynomial> list(char terminator) {
    std::vector<Polynomial> out;
    if (is_punct(terminator) || at_end()) return out;
    out.push_back(expression());
    while (accept(',')) out.push_back(expression());
    return out;
  }

 private:
  Polynomial signed_term() {
    if (is_punct('-')) {
      next();
      return -term();
    }
    if (is_punct('+')) next();
    return term();
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (is_punct('*')) {
        next();
        acc *= unary();
      } else if (is_punct('/')) {
        const Token& slash = next();
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero())
          throw SemanticError(slash.loc, "division is only allowed by a nonzero constant");
        acc *= Rational(1) / d.constant_term();
      } else if (peek().kind == Tok::Ident || peek().kind == Tok::Number || is_punct('(')) {
        throw ParseError(peek().loc, "implicit multiplication is not allowed; write '*' before " +
                                         describe(peek()));
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (is_punct('-')) {
      next();
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    const Token& e = peek();
    if (e.kind != Tok::Number)
      throw ParseError(e.loc, "exponent must be a non-negative integer, found " + describe(e));
    next();
    if (e.text.size() > 6) throw SemanticError(e.loc, "exponent too large");
    Polynomial r = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    if (is_punct('^')) throw ParseError(peek().loc, "chained '^' is ambiguous; use parentheses");
    return r;
  }

  Polynomial primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      return Polynomial::constant(ring(t.loc), Rational(t.text, 10));
    }
    if (t.kind == Tok::Ident) {
      next();
      auto idx = ring(t.loc)->find(t.text);
      if (!idx) throw SemanticError(t.loc, "undeclared variable '" + t.text + "'");
      return Polynomial::variable(ring_, *idx);
    }
    if (accept('(')) {
      Polynomial p = expression();
      expect(')', "to close parenthesis");
      return p;
    }
    throw ParseError(t.loc, "expected a number, variable or '(', found " + describe(t));
  }

  const RingPtr& ring(SourceLocation loc) {
    if (!ring_) throw SemanticError(loc, "variables must be declared (base/fiber) before use");
    return ring_;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

Rational parse_signed_rational(Parser& p) {
  bool neg = p.accept('-');
  const Token& num = p.peek();
  if (num.kind != Tok::Number) throw ParseError(num.loc, "expected a rational number");
  p.next();
  Rational q(num.text, 10);
  if (p.accept('/')) {
    const Token& den = p.peek();
    if (den.kind != Tok::Number) throw ParseError(den.loc, "expected a denominator");
    p.next();
    Rational d(den.text, 10);
    if (d == 0) throw SemanticError(den.loc, "zero denominator");
    q /= d;
  }
  return neg ? Rational(-q) : q;
}

unsigned parse_unsigned(Parser& p, const char* what) {
  const Token& t = p.peek();
  if (t.kind != Tok::Number || t.text.size() > 6)
    throw ParseError(t.loc, std::string("expected ") + what + ", found " + Parser::describe(t));
  p.next();
  return static_cast<unsigned>(std::stoul(t.text));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Parser p(lex(text, {}), ring);
  Polynomial r = p.expression();
  if (!p.at_end()) throw ParseError(p.peek().loc, "unexpected " + Parser::describe(p.peek()));
  return r;
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              SourceLocation origin) {
  Parser p(lex(text, origin), ring);
  auto out = p.list('\0');
  if (!p.at_end()) throw ParseError(p.peek().loc, "unexpected " + Parser::describe(p.peek()));
  return out;
}

ProblemFile parse_problem(std::string_view text) {
  Parser p(lex(text, {}), nullptr);
  ProblemFile f;
  std::set<std::string> seen_sections;
  bool frozen = false;

  auto freeze = [&](SourceLocation loc) {
    if (frozen) return;
    std::set<std::string> names;
    for (const auto& n : f.base)
      if (!names.insert(n).second) throw SemanticError(loc, "variable '" + n + "' declared twice");
    for (const auto& n : f.fiber)
      if (!names.insert(n).second) throw SemanticError(loc, "variable '" + n + "' declared twice");
    f.algebra = RingTower(f.base, f.fiber);
    p.set_ring(f.algebra.ring());
    frozen = true;
  };

  while (!p.at_end()) {
    const Token kw = p.peek();
    if (kw.kind != Tok::Ident) throw ParseError(kw.loc, "expected a section keyword, found " + Parser::describe(kw));
    p.next();
    const std::string& k = kw.text;
    bool unique_section = k != "point" && k != "component";
    if (unique_section && !seen_sections.insert(k).second)
      throw SemanticError(kw.loc, "section '" + k + "' appears twice");

    if (k == "base" || k == "fiber") {
      if (frozen) throw SemanticError(kw.loc, "'" + k + "' must come before sections that use variables");
      p.accept(':');
      auto& dest = (k == "base") ? f.base : f.fiber;
      while (p.peek().kind == Tok::Ident) dest.push_back(p.next().text);
    } else if (k == "ideal") {
      p.expect(':', "after 'ideal'");
      freeze(kw.loc);
      f.ideal = p.list(';');
    } else if (k == "module") {
      unsigned rank = parse_unsigned(p, "module rank");
      if (rank == 0) throw SemanticError(kw.loc, "module rank must be positive");
      p.expect(':', "after module rank");
      freeze(kw.loc);
      ModuleSpec spec{rank, {}};
      if (!p.is_punct(';') && !p.at_end()) {
        do {
          SourceLocation row_loc = p.peek().loc;
          p.expect('[', "to open a relation row");
          auto row = p.list(']');
          p.expect(']', "to close a relation row");
          if (row.size() != rank)
            throw SemanticError(row_loc, "relation row has " + std::to_string(row.size()) +
                                             " entries but the module rank is " + std::to_string(rank));
          spec.rows.emplace_back(std::move(row));
        } while (p.accept(','));
      }
      f.module = std::move(spec);
    } else if (k == "point") {
      const Token name = p.peek();
      if (name.kind != Tok::Ident) throw ParseError(name.loc, "expected a point name");
      p.next();
      p.expect('=', "after point name");
      p.expect('(', "to open point coordinates");
      std::vector<Rational> coords;
      if (!p.is_punct(')')) {
        coords.push_back(parse_signed_rational(p));
        while (p.accept(',')) coords.push_back(parse_signed_rational(p));
      }
      p.expect(')', "to close point coordinates");
      if (coords.size() != f.base.size())
        throw SemanticError(name.loc, "point '" + name.text + "' has " + std::to_string(coords.size()) +
                                          " coordinates, base has " + std::to_string(f.base.size()));
      for (const auto& [n, c] : f.points)
        if (n == name.text) throw SemanticError(name.loc, "point '" + n + "' defined twice");
      f.points.emplace_back(name.text, std::move(coords));
    } else if (k == "expect") {
      p.expect(':', "after 'expect'");
      const Token v = p.peek();
      Expectation e;
      if (v.kind == Tok::Ident && v.text == "flat") {
        e.verdict = ExpectedVerdict::Flat;
      } else if (v.kind == Tok::Ident && v.text == "notflat") {
        e.verdict = ExpectedVerdict::NotFlat;
      } else {
        throw ParseError(v.loc, "expected 'flat' or 'notflat', found " + Parser::describe(v));
      }
      p.next();
      if (p.peek().kind == Tok::Ident && p.peek().text == "first_torsion") {
        p.next();
        if (p.peek().kind == Tok::Ident && p.peek().text == "none") {
          p.next();
          e.first_torsion_power = std::optional<unsigned>{};
        } else {
          e.first_torsion_power = std::optional<unsigned>{parse_unsigned(p, "a power or 'none'")};
        }
      }
      f.expect = e;
    } else if (k == "oracle") {
      p.expect(':', "after 'oracle'");
      OracleSection o;
      bool have_degree = false;
      do {
        const Token key = p.peek();
        if (key.kind != Tok::Ident) throw ParseError(key.loc, "expected 'degree' or 'multiplier_degree'");
        p.next();
        p.expect('=', "after oracle key");
        unsigned v = parse_unsigned(p, "a degree");
        if (key.text == "degree") {
          o.degree = v;
          have_degree = true;
        } else if (key.text == "multiplier_degree") {
          o.multiplier_degree = v;
        } else {
          throw SemanticError(key.loc, "unknown oracle key '" + key.text + "'");
        }
      } while (p.accept(','));
      if (!have_degree) throw SemanticError(kw.loc, "oracle section needs 'degree'");
      f.oracle = o;
    } else if (k == "component") {
      const Token label = p.peek();
      if (label.kind != Tok::Ident) throw ParseError(label.loc, "expected a component label");
      p.next();
      const Token colon_tok = p.peek();
      p.expect(':', "after component label");
      freeze(kw.loc);
      while (!p.at_end() && !p.is_punct(';')) p.next();
      std::size_t begin = colon_tok.end;
      std::size_t end = p.peek().begin;
      std::string src(text.substr(begin, end - begin));
      SourceLocation origin = colon_tok.loc;
      ++origin.column;
      f.components.push_back({label.text, std::move(src), origin});
    } else {
      throw SemanticError(kw.loc, "unknown section '" + k + "'");
    }
    if (!p.at_end()) p.expect(';', "to end the section");
  }
  freeze({});
  f.algebra = f.algebra.with_relations(f.ideal);
  return f;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

FlatnessProblem ProblemFile::problem() const { return FlatnessProblem(algebra, module); }

const std::vector<Rational>& ProblemFile::point(const std::string& name) const {
  for (const auto& [n, c] : points)
    if (n == name) return c;
  throw std::invalid_argument("no point named '" + name + "' in the problem file");
}

}  // namespace flatkit
