#include "polycol/loop_dsl.hpp"

#include <cctype>

namespace polycol {

namespace {

enum class Tok { Ident, Num, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1;
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') ++line;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      auto digits = [&] {
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      };
      digits();
      if (j + 1 < s.size() && (s[j] == '/' || s[j] == '.') && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        digits();
      }
      out.push_back({Tok::Num, std::string(s.substr(i, j - i)), line});
      i = j;
      continue;
    }
    static const char* two[] = {"<=", ">=", ":=", "==", "&&"};
    bool matched = false;
    for (const char* t : two)
      if (s.substr(i, 2) == t) {
        out.push_back({Tok::Sym, t, line});
        i += 2;
        matched = true;
        break;
      }
    if (matched) continue;
    if (std::string_view("<>=,;(){}[]*+-").find(c) == std::string_view::npos)
      throw ParseError("line " + std::to_string(line) + ": unexpected character '" + std::string(1, c) + "'");
    out.push_back({Tok::Sym, std::string(1, c), line});
    ++i;
  }
  out.push_back({Tok::End, "", line});
  return out;
}

// a . x + c
struct Affine {
  Rational a[3] = {0, 0, 0};
  Rational c = 0;
};

struct Constraint {
  Rational a[3];
  Rational c;       // a . x  rel  c
  std::string rel;  // <=, >=, <, >, =
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(const std::string& s) const { return peek().kind != Tok::End && peek().text == s; }
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError("line " + std::to_string(peek().line) + ": " + msg +
                     (peek().kind == Tok::End ? " at end of input" : " near '" + peek().text + "'"));
  }
  void expect(const std::string& s) {
    if (!at(s)) error("expected '" + s + "'");
    ++pos_;
  }
  bool accept(const std::string& s) {
    if (!at(s)) return false;
    ++pos_;
    return true;
  }

  Rational number() {
    bool neg = false;
    while (at("-") || at("+")) neg ^= toks_[pos_++].text == "-";
    if (peek().kind != Tok::Num) error("expected a number");
    Rational q = parse_rational(toks_[pos_++].text);
    return neg ? Rational(-q) : q;
  }

  int variable(const std::string& name) const {
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '3') return name[1] - '1';
    return -1;
  }

  // term := [number ['*']] var | number
  Affine term() {
    Affine t;
    Rational coef = 1;
    bool have_num = false;
    if (peek().kind == Tok::Num) {
      coef = parse_rational(toks_[pos_++].text);
      have_num = true;
      if (accept("*") && peek().kind != Tok::Ident) error("expected a variable after '*'");
    }
    if (peek().kind == Tok::Ident) {
      int v = variable(peek().text);
      if (v < 0) error("unknown variable");
      ++pos_;
      if (at("*")) {
        ++pos_;
        if (peek().kind == Tok::Ident) error("nonlinear term");
        coef *= number();
      }
      if (at("(") || at("x")) error("nonlinear term");
      t.a[v] = coef;
      return t;
    }
    if (!have_num) error("expected a term");
    t.c = coef;
    return t;
  }

  Affine expr() {
    Affine e;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (!first && !at("+") && !at("-")) break;
      while (at("+") || at("-")) sign *= toks_[pos_++].text == "-" ? -1 : 1;
      Affine t = term();
      for (int i = 0; i < 3; ++i) e.a[i] += sign * t.a[i];
      e.c += sign * t.c;
      first = false;
    }
    return e;
  }

  bool relation() const {
    return at("<=") || at(">=") || at("<") || at(">") || at("=") || at("==");
  }

  // e1 rel e2 rel e3 ... as pairwise constraints
  void chain(std::vector<Constraint>& out) {
    Affine lhs = expr();
    if (!relation()) error("expected a relation");
    while (relation()) {
      std::string rel = toks_[pos_++].text;
      if (rel == "==") rel = "=";
      Affine rhs = expr();
      Constraint c;
      for (int i = 0; i < 3; ++i) c.a[i] = lhs.a[i] - rhs.a[i];
      c.c = rhs.c - lhs.c;
      c.rel = rel;
      if (c.a[0] == 0 && c.a[1] == 0 && c.a[2] == 0) error("constraint without variables");
      out.push_back(c);
      lhs = rhs;
    }
  }

  std::vector<Constraint> conjunction(const std::string& stop) {
    std::vector<Constraint> out;
    do chain(out);
    while (accept(",") || accept("&&"));
    if (!at(stop)) error("expected '" + stop + "'");
    return out;
  }

  EMatrix matrix() {
    EMatrix m = zero_matrix(3, 3);
    if (accept("diag")) {
      expect("(");
      for (int i = 0; i < 3; ++i) {
        if (i) expect(",");
        m(i, i) = Elem(number());
      }
      expect(")");
      return m;
    }
    if (accept("[")) {
      for (int i = 0; i < 3; ++i) {
        if (i) expect(",");
        expect("[");
        for (int j = 0; j < 3; ++j) {
          if (j) expect(",");
          m(i, j) = Elem(number());
        }
        if (at(",")) error("wrong arity: matrix rows need 3 entries");
        expect("]");
      }
      if (at(",")) error("wrong arity: matrix needs 3 rows");
      expect("]");
      return m;
    }
    error("expected diag(...) or a matrix literal");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Halfspace ge(const Rational (&a)[3], const Rational& c) {
  return {Vec{Elem(a[0]), Elem(a[1]), Elem(a[2])}, Elem(c), false};
}

Halfspace ge_neg(const Rational (&a)[3], const Rational& c) {
  Rational n[3] = {-a[0], -a[1], -a[2]};
  return ge(n, -c);
}

std::string show(const Rational (&a)[3], const char* rel, const Rational& c) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += a[i] > 0 ? " + " : " - ";
    else if (a[i] < 0) s += "-";
    Rational m = abs(a[i]);
    if (m != 1) s += to_string(m) + "*";
    s += "x" + std::to_string(i + 1);
  }
  return s + " " + rel + " " + to_string(c);
}

}  // namespace

LoopProgram parse_loop(std::string_view text, const Rational& delta) {
  Parser p(text);
  LoopProgram prog;
  p.expect("assume");
  for (const auto& c : p.conjunction(";")) {
    if (c.rel == "<" || c.rel == ">") p.error("strict inequalities are not allowed in assume");
    Halfspace h = c.rel == "<=" ? ge_neg(c.a, c.c) : ge(c.a, c.c);
    h.equality = c.rel == "=";
    prog.entry.hs.push_back(std::move(h));
  }
  p.expect(";");
  p.expect("while");
  p.expect("(");
  if (p.accept("false")) {
    prog.exits.push_back({"false", Polytope{}});
    p.expect(")");
  } else if (p.accept("true")) {
    p.expect(")");
  } else {
    for (const auto& c : p.conjunction(")")) {
      // Complement of each guard atom, closed by delta.
      if (c.rel == "<=") prog.exits.push_back({show(c.a, ">=", c.c + delta), {{ge(c.a, c.c + delta)}}});
      else if (c.rel == "<") prog.exits.push_back({show(c.a, ">=", c.c), {{ge(c.a, c.c)}}});
      else if (c.rel == ">=") prog.exits.push_back({show(c.a, "<=", c.c - delta), {{ge_neg(c.a, c.c - delta)}}});
      else if (c.rel == ">") prog.exits.push_back({show(c.a, "<=", c.c), {{ge_neg(c.a, c.c)}}});
      else {
        prog.exits.push_back({show(c.a, ">=", c.c + delta), {{ge(c.a, c.c + delta)}}});
        prog.exits.push_back({show(c.a, "<=", c.c - delta), {{ge_neg(c.a, c.c - delta)}}});
      }
    }
    p.expect(")");
  }
  p.expect("{");
  p.expect("x");
  p.expect(":=");
  prog.matrix = p.matrix();
  p.expect("*");
  p.expect("x");
  if (p.at("+") || p.at("-")) p.error("affine offsets are not supported");
  p.accept(";");
  p.expect("}");
  if (p.peek().kind != Tok::End) p.error("trailing input");
  return prog;
}

Instance exit_instance(const LoopProgram& prog, std::size_t i) {
  Instance in;
  in.matrix = prog.matrix;
  in.p1 = prog.entry;
  in.p2 = prog.exits.at(i).target;
  return in;
}

}  // namespace polycol
