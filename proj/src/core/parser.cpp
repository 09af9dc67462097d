#include "parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <variant>

namespace sugeom {

bool Interval::contains(const Rational& x) const {
  return (!lo || *lo < x) && (!hi || x < *hi);
}

std::vector<Rational> Interval::samples() const {
  if (lo && hi) {
    Rational w = *hi - *lo;
    return {*lo + w / 4, *lo + w / 2, *lo + 3 * w / 4};
  }
  if (lo) return {*lo + Rational(1, 2), *lo + 1, *lo + 10};
  if (hi) return {*hi - Rational(1, 2), *hi - 1, *hi - 10};
  return {Rational(-3), Rational(0), Rational(1, 3), Rational(5)};
}

std::string Interval::str() const {
  return "(" + (lo ? to_string(*lo) : std::string("-inf")) + ", " + (hi ? to_string(*hi) : std::string("inf")) +
         ")";
}

const NamedValue* Section::find(const std::string& name) const {
  for (const auto& v : values)
    if (v.name == name) return &v;
  return nullptr;
}

const Form* StructureFile::form(const std::string& name) const {
  for (const Section* s : {&structure, &family})
    if (const NamedValue* v = s->find(name); v && v->is_form) return &v->form;
  return nullptr;
}

std::optional<Scalar> StructureFile::scalar(const std::string& name) const {
  for (const Section* s : {&structure, &family})
    if (const NamedValue* v = s->find(name); v && !v->is_form) return v->scalar;
  return std::nullopt;
}

namespace {

// ---------------------------------------------------------------------------
// tokens

enum class Tok { Number, Ident, Op, Arrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int col = 0;  // 1-based
};

[[noreturn]] void parse_error(int line, int col, const std::string& msg) {
  std::string where = line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(col)
                               : "column " + std::to_string(col);
  fail(ErrorKind::Parse, where + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s, int line, int col0) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int col = col0 + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '.') parse_error(line, col0 + static_cast<int>(j), "decimal numbers are not supported; use p/q");
      out.push_back({Tok::Number, s.substr(i, j - i), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), col});
      i = j;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
    } else if (std::string("+-*/^(),=:<>").find(c) != std::string::npos) {
      out.push_back({Tok::Op, std::string(1, c), col});
      ++i;
    } else {
      parse_error(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", col0 + static_cast<int>(s.size())});
  return out;
}

// ---------------------------------------------------------------------------
// values

using Quantity = std::variant<Scalar, Form>;

bool is_zero_q(const Quantity& q) {
  return std::holds_alternative<Scalar>(q) ? std::get<Scalar>(q).is_zero() : std::get<Form>(q).is_zero();
}

Quantity q_neg(const Quantity& a) {
  if (auto s = std::get_if<Scalar>(&a)) return -*s;
  return -std::get<Form>(a);
}

Quantity q_add(const Quantity& a, const Quantity& b) {
  auto sa = std::get_if<Scalar>(&a);
  auto sb = std::get_if<Scalar>(&b);
  if (sa && sb) return *sa + *sb;
  if (!sa && !sb) {
    const Form& fa = std::get<Form>(a);
    const Form& fb = std::get<Form>(b);
    if (!fa.is_zero() && !fb.is_zero() && fa.degree() != fb.degree())
      fail(ErrorKind::Parse, "cannot add a " + std::to_string(fa.degree()) + "-form and a " +
                                 std::to_string(fb.degree()) + "-form");
    return fa + fb;
  }
  if (sa && sa->is_zero()) return b;
  if (sb && sb->is_zero()) return a;
  const Form& f = sa ? std::get<Form>(b) : std::get<Form>(a);
  if (f.degree() == 0) return Form::constant(f.dimension(), *(sa ? sa : sb)) + f;
  fail(ErrorKind::Parse, "cannot add a scalar and a " + std::to_string(f.degree()) + "-form");
}

Quantity q_mul(const Quantity& a, const Quantity& b) {
  auto sa = std::get_if<Scalar>(&a);
  auto sb = std::get_if<Scalar>(&b);
  if (sa && sb) return *sa * *sb;
  if (sa) return *sa * std::get<Form>(b);
  if (sb) return *sb * std::get<Form>(a);
  return wedge(std::get<Form>(a), std::get<Form>(b));
}

struct Value {
  Quantity re = Scalar();
  Quantity im = Scalar();
  bool is_form() const { return std::holds_alternative<Form>(re) || std::holds_alternative<Form>(im); }
  bool is_real() const { return is_zero_q(im); }
};

Value v_add(const Value& a, const Value& b) { return {q_add(a.re, b.re), q_add(a.im, b.im)}; }
Value v_neg(const Value& a) { return {q_neg(a.re), q_neg(a.im)}; }
Value v_mul(const Value& a, const Value& b) {
  return {q_add(q_mul(a.re, b.re), q_neg(q_mul(a.im, b.im))), q_add(q_mul(a.re, b.im), q_mul(a.im, b.re))};
}

// ---------------------------------------------------------------------------
// expression parser

class ExprParser {
 public:
  using Lookup = std::function<const Value*(const std::string&)>;

  ExprParser(const std::vector<Token>& toks, size_t pos, int line, int dimension, std::string param,
             Lookup lookup)
      : toks_(toks), pos_(pos), line_(line), dim_(dimension), param_(std::move(param)), lookup_(std::move(lookup)) {}

  Value parse_expression() {
    Value v = parse_sum();
    return v;
  }
  size_t position() const { return pos_; }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool is_op(const char* op) const { return peek().kind == Tok::Op && peek().text == op; }

  [[noreturn]] void error(const Token& t, const std::string& msg) const { parse_error(line_, t.col, msg); }

  template <class F>
  Value guarded(const Token& at, F&& f) {
    try {
      return f();
    } catch (const Error& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0 || std::string(e.what()).rfind("column ", 0) == 0) throw;
      error(at, e.what());
    }
  }

  Value parse_sum() {
    Value acc = parse_product();
    while (is_op("+") || is_op("-")) {
      const Token& op = next();
      Value rhs = parse_product();
      acc = guarded(op, [&] { return op.text == "+" ? v_add(acc, rhs) : v_add(acc, v_neg(rhs)); });
    }
    return acc;
  }

  bool starts_atom() const {
    const Token& t = peek();
    return t.kind == Tok::Number || t.kind == Tok::Ident || (t.kind == Tok::Op && t.text == "(");
  }

  Value parse_product() {
    Value acc = parse_unary();
    while (true) {
      if (is_op("*")) {
        const Token& op = next();
        Value rhs = parse_unary();
        acc = guarded(op, [&] { return v_mul(acc, rhs); });
      } else if (is_op("/")) {
        const Token& op = next();
        Value rhs = parse_unary();
        acc = guarded(op, [&] { return divide(acc, rhs); });
      } else if (starts_atom()) {
        const Token& at = peek();
        Value rhs = parse_power();
        acc = guarded(at, [&] { return v_mul(acc, rhs); });
      } else {
        return acc;
      }
    }
  }

  static Value divide(const Value& a, const Value& b) {
    if (b.is_form()) fail(ErrorKind::Parse, "division by a form");
    const Scalar& br = std::get<Scalar>(b.re);
    const Scalar& bi = std::get<Scalar>(b.im);
    if (br.is_zero() && bi.is_zero()) fail(ErrorKind::Domain, "division by zero");
    // 1/(x + iy) = (x - iy)/(x^2 + y^2)
    Scalar norm = br * br + bi * bi;
    Value inv{Quantity(br / norm), Quantity(-bi / norm)};
    return v_mul(a, inv);
  }

  Value parse_unary() {
    if (is_op("-")) {
      next();
      return v_neg(parse_unary());
    }
    if (is_op("+")) {
      next();
      return parse_unary();
    }
    return parse_power();
  }

  Value parse_power() {
    Value base = parse_atom();
    if (!is_op("^")) return base;
    const Token& op = next();
    Value rhs = parse_power_operand();
    return guarded(op, [&] {
      if (base.is_form()) {
        if (!rhs.is_form()) fail(ErrorKind::Parse, "'^' between a form and a scalar; use '*' for scaling");
        return v_mul(base, rhs);
      }
      if (rhs.is_form()) fail(ErrorKind::Parse, "'^' between a scalar and a form");
      if (!base.is_real() || !rhs.is_real()) fail(ErrorKind::Unsupported, "complex powers are not supported");
      const Scalar& e = std::get<Scalar>(rhs.re);
      if (!e.is_rational()) fail(ErrorKind::Unsupported, "exponent must be a rational constant");
      return Value{Quantity(std::get<Scalar>(base.re).pow(e.as_rational())), Quantity(Scalar())};
    });
  }

  Value parse_power_operand() {
    if (is_op("-")) {
      next();
      return v_neg(parse_power_operand());
    }
    return parse_power();
  }

  Value parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      return {Quantity(Scalar(parse_rational(t.text))), Quantity(Scalar())};
    }
    if (t.kind == Tok::Op && t.text == "(") {
      next();
      Value v = parse_sum();
      expect(")");
      return v;
    }
    if (t.kind == Tok::Ident) {
      next();
      return identifier(t);
    }
    if (t.kind == Tok::End) error(t, "unexpected end of expression");
    error(t, "unexpected '" + t.text + "'");
  }

  void expect(const char* op) {
    if (!is_op(op)) error(peek(), std::string("expected '") + op + "'" + (peek().kind == Tok::End ? " before end of line" : ""));
    next();
  }

  Value identifier(const Token& t) {
    const std::string& s = t.text;
    if (s == param_ || s == "t") {
      if (s != param_ && param_ != "t") error(t, "unknown name 't' (the parameter is '" + param_ + "')");
      return {Quantity(Scalar::t()), Quantity(Scalar())};
    }
    if (s == "i") return {Quantity(Scalar()), Quantity(Scalar(1))};
    if (s == "sqrt" || s == "cbrt") {
      expect("(");
      Value v = parse_sum();
      expect(")");
      return guarded(t, [&] {
        if (v.is_form() || !v.is_real()) fail(ErrorKind::Parse, s + " takes a real scalar");
        Rational e = s == "sqrt" ? Rational(1, 2) : Rational(1, 3);
        return Value{Quantity(std::get<Scalar>(v.re).pow(e)), Quantity(Scalar())};
      });
    }
    if (s.size() >= 2 && s[0] == 'e' && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
      if (dim_ <= 0) error(t, "generator '" + s + "' used before the dimension is declared");
      std::vector<int> idx;
      for (size_t k = 1; k < s.size(); ++k) {
        int i = s[k] - '0';
        if (i < 1 || i > dim_)
          error(t, "generator index " + std::to_string(i) + " in '" + s + "' exceeds the declared dimension " +
                       std::to_string(dim_));
        idx.push_back(i);
      }
      return {Quantity(Form::monomial(dim_, idx)), Quantity(Scalar())};
    }
    if (lookup_) {
      if (const Value* v = lookup_(s)) return *v;
    }
    error(t, "unknown name '" + s + "'");
  }

  const std::vector<Token>& toks_;
  size_t pos_;
  int line_;
  int dim_;
  std::string param_;
  Lookup lookup_;
};

// ---------------------------------------------------------------------------
// file parser

struct Line {
  int number;
  std::string text;  // comment stripped
};

bool is_generator_name(const std::string& s, int* index) {
  if (s.size() < 2 || s[0] != 'e' || !std::all_of(s.begin() + 1, s.end(), ::isdigit)) return false;
  if (index) *index = std::stoi(s.substr(1));
  return true;
}

class FileParser {
 public:
  StructureFile run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      statement(Line{number, raw});
    }
    finish_algebra(main_);
    if (target_started_) finish_algebra(target_);
    if (main_.dim <= 0) fail(ErrorKind::Parse, "no [algebra] section with a dimension");
    out_.algebra = LieAlgebra(main_.dim, main_.d, main_.label);
    if (target_started_) out_.target = LieAlgebra(target_.dim, target_.d, target_.label);
    if (!basis_rows_.empty()) {
      const int n = main_.dim;
      Matrix<Scalar> m(n, std::vector<Scalar>(n));
      for (int i = 1; i <= n; ++i) {
        auto it = basis_rows_.find(i);
        if (it == basis_rows_.end()) fail(ErrorKind::Parse, "[basis] is missing f" + std::to_string(i));
        for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = it->second.coeff(MultiIndex::single(j));
      }
      out_.basis = m;
    }
    if (out_.has_family && out_.domain.empty()) out_.domain.push_back(Interval{});
    return std::move(out_);
  }

 private:
  struct AlgebraState {
    int dim = 0;
    std::vector<Form> d;
    std::set<int> defined;
    std::string label;
    int compact_line = 0;
  };

  enum class Where { None, Algebra, Structure, Family, Basis, Target };

  void statement(const Line& line) {
    std::string s = line.text;
    size_t first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return;
    if (s[first] == '[') {
      section_header(line, first);
      return;
    }
    switch (where_) {
      case Where::None:
      case Where::Algebra:
        algebra_statement(line, main_);
        break;
      case Where::Target:
        target_started_ = true;
        algebra_statement(line, target_);
        break;
      case Where::Structure:
        structure_statement(line, out_.structure, true);
        break;
      case Where::Family:
        family_statement(line);
        break;
      case Where::Basis:
        basis_statement(line);
        break;
    }
  }

  void section_header(const Line& line, size_t first) {
    size_t close = line.text.find(']', first);
    if (close == std::string::npos) parse_error(line.number, static_cast<int>(first) + 1, "unterminated section header");
    std::string name = line.text.substr(first + 1, close - first - 1);
    if (line.text.find_first_not_of(" \t", close + 1) != std::string::npos)
      parse_error(line.number, static_cast<int>(close) + 2, "unexpected text after section header");
    static const std::map<std::string, Where> names = {{"algebra", Where::Algebra},
                                                       {"structure", Where::Structure},
                                                       {"family", Where::Family},
                                                       {"basis", Where::Basis},
                                                       {"target", Where::Target}};
    auto it = names.find(name);
    if (it == names.end()) parse_error(line.number, static_cast<int>(first) + 2, "unknown section '" + name + "'");
    if (!seen_sections_.insert(name).second)
      parse_error(line.number, static_cast<int>(first) + 1, "duplicate section [" + name + "]");
    if (it->second != Where::Algebra && it->second != Where::Target) finish_algebra(main_);
    if (it->second == Where::Family) out_.has_family = true;
    if (it->second == Where::Target) target_started_ = true;
    where_ = it->second;
  }

  // -- [algebra] / [target]

  void finish_algebra(AlgebraState& a) {
    if (a.dim > 0 && static_cast<int>(a.d.size()) < a.dim) a.d.resize(a.dim, Form(a.dim, 2));
  }

  void algebra_statement(const Line& line, AlgebraState& a) {
    // labels are free text, so handle them before tokenizing
    size_t first = line.text.find_first_not_of(" \t");
    if (line.text.compare(first, 5, "label") == 0) {
      size_t eq = line.text.find_first_not_of(" \t", first + 5);
      if (eq != std::string::npos && line.text[eq] == '=') {
        std::string label = line.text.substr(eq + 1);
        label.erase(0, label.find_first_not_of(" \t"));
        label.erase(label.find_last_not_of(" \t") + 1);
        if (!a.label.empty()) parse_error(line.number, static_cast<int>(first) + 1, "duplicate definition of label");
        a.label = label;
        return;
      }
    }
    auto toks = tokenize(line.text, line.number, 1);
    const Token& t0 = toks[0];
    // bare compact notation
    if (t0.kind == Tok::Op && t0.text == "(") {
      compact(line, a, line.text, t0.col);
      return;
    }
    if (t0.kind != Tok::Ident) parse_error(line.number, t0.col, "expected a statement");
    if (t0.text == "dim") {
      expect_op(toks, 1, "=", line);
      if (toks[2].kind != Tok::Number || toks[3].kind != Tok::End)
        parse_error(line.number, toks[2].col, "expected an integer dimension");
      if (a.dim > 0) parse_error(line.number, t0.col, "duplicate definition of dim");
      int n = std::stoi(toks[2].text);
      if (n < 1 || n > kMaxDimension)
        parse_error(line.number, toks[2].col, "dimension must be between 1 and " + std::to_string(kMaxDimension));
      a.dim = n;
      a.d.assign(n, Form(n, 2));
      return;
    }
    if (t0.text == "compact") {
      expect_op(toks, 1, "=", line);
      size_t eq = line.text.find('=');
      compact(line, a, line.text.substr(eq + 1), static_cast<int>(eq) + 2);
      return;
    }
    // "d e5 = ..." or "de5 = ..."
    int k = 0;
    size_t pos = 0;
    if (t0.text == "d" && toks[1].kind == Tok::Ident && is_generator_name(toks[1].text, &k)) {
      pos = 2;
    } else if (t0.text.size() > 2 && t0.text[0] == 'd' && is_generator_name(t0.text.substr(1), &k)) {
      pos = 1;
    } else {
      parse_error(line.number, t0.col, "unknown statement '" + t0.text + "' in algebra section");
    }
    const Token& gen = toks[pos - 1];
    if (a.dim <= 0) parse_error(line.number, t0.col, "structure equation before 'dim = n'");
    if (k < 1 || k > a.dim)
      parse_error(line.number, gen.col, "generator e" + std::to_string(k) + " exceeds the declared dimension " +
                                            std::to_string(a.dim));
    if (!a.defined.insert(k).second)
      parse_error(line.number, t0.col, "duplicate definition of d e" + std::to_string(k));
    expect_op(toks, pos, "=", line);
    Value v = expression(toks, pos + 1, line, a.dim);
    a.d[k - 1] = as_form(v, line, toks[pos + 1].col, a.dim, 2, "d e" + std::to_string(k));
  }

  void compact(const Line& line, AlgebraState& a, const std::string& text, int col) {
    if (a.dim > 0) parse_error(line.number, col, "algebra already defined");
    LieAlgebra g;
    try {
      g = parse_compact(text);
    } catch (const Error& e) {
      parse_error(line.number, col, e.what());
    }
    a.dim = g.dimension();
    a.d = g.differentials();
    for (int i = 1; i <= a.dim; ++i) a.defined.insert(i);
    a.compact_line = line.number;
  }

  // -- [structure] / [family]

  void structure_statement(const Line& line, Section& section, bool allow_j) {
    auto toks = tokenize(line.text, line.number, 1);
    const Token& t0 = toks[0];
    if (t0.kind != Tok::Ident) parse_error(line.number, t0.col, "expected a name");
    if (t0.text == "J" && toks[1].kind == Tok::Op && toks[1].text == ":") {
      if (!allow_j) parse_error(line.number, t0.col, "J belongs in the [structure] section");
      complex_structure(toks, line);
      return;
    }
    expect_op(toks, 1, "=", line);
    define(section, t0, expression(toks, 2, line, main_.dim), line);
  }

  void family_statement(const Line& line) {
    auto toks = tokenize(line.text, line.number, 1);
    const Token& t0 = toks[0];
    if (t0.kind == Tok::Ident && t0.text == "param") {
      expect_op(toks, 1, "=", line);
      if (toks[2].kind != Tok::Ident || toks[3].kind != Tok::End)
        parse_error(line.number, toks[2].col, "expected a parameter name");
      if (param_set_) parse_error(line.number, t0.col, "duplicate definition of param");
      if (!out_.family.empty()) parse_error(line.number, t0.col, "param must precede the family forms");
      param_set_ = true;
      out_.param = toks[2].text;
      return;
    }
    if (t0.kind == Tok::Ident && t0.text == "domain") {
      expect_op(toks, 1, "=", line);
      if (!out_.domain.empty()) parse_error(line.number, t0.col, "duplicate definition of domain");
      domain(toks, 2, line);
      return;
    }
    structure_statement(line, out_.family, false);
  }

  void domain(const std::vector<Token>& toks, size_t pos, const Line& line) {
    auto bound = [&](size_t& p) -> std::optional<Rational> {
      int sign = 1;
      if (toks[p].kind == Tok::Op && (toks[p].text == "-" || toks[p].text == "+")) {
        sign = toks[p].text == "-" ? -1 : 1;
        ++p;
      }
      if (toks[p].kind == Tok::Ident && toks[p].text == "inf") {
        ++p;
        return std::nullopt;
      }
      if (toks[p].kind != Tok::Number) parse_error(line.number, toks[p].col, "expected a rational bound or inf");
      Rational q = parse_rational(toks[p++].text);
      if (toks[p].kind == Tok::Op && toks[p].text == "/") {
        ++p;
        if (toks[p].kind != Tok::Number) parse_error(line.number, toks[p].col, "expected a denominator");
        q /= parse_rational(toks[p++].text);
      }
      return sign * q;
    };
    while (true) {
      expect_op(toks, pos, "(", line);
      ++pos;
      const Token& lo_tok = toks[pos];
      bool lo_neg = lo_tok.kind == Tok::Op && lo_tok.text == "-";
      auto lo = bound(pos);
      if (!lo && !lo_neg) parse_error(line.number, lo_tok.col, "lower bound must be finite or -inf");
      expect_op(toks, pos, ",", line);
      ++pos;
      const Token& hi_tok = toks[pos];
      bool hi_neg = hi_tok.kind == Tok::Op && hi_tok.text == "-";
      auto hi = bound(pos);
      if (!hi && hi_neg) parse_error(line.number, hi_tok.col, "upper bound cannot be -inf");
      expect_op(toks, pos, ")", line);
      ++pos;
      if (lo && hi && !(*lo < *hi)) parse_error(line.number, lo_tok.col, "empty interval");
      out_.domain.push_back(Interval{lo, hi});
      if (toks[pos].kind == Tok::End) return;
      expect_op(toks, pos, ",", line);
      ++pos;
    }
  }

  void complex_structure(const std::vector<Token>& toks, const Line& line) {
    if (out_.J) parse_error(line.number, toks[0].col, "duplicate definition of J");
    const int n = main_.dim;
    if (n <= 0) parse_error(line.number, toks[0].col, "J before the algebra dimension is known");
    Matrix<Scalar> m(n, std::vector<Scalar>(n));
    std::set<int> seen;
    size_t pos = 2;
    while (true) {
      const Token& g = toks[pos];
      int k = 0;
      if (g.kind != Tok::Ident || !is_generator_name(g.text, &k) || g.text.size() != 2)
        parse_error(line.number, g.col, "expected a generator e<k>");
      if (k < 1 || k > n) parse_error(line.number, g.col, "generator " + g.text + " exceeds the declared dimension");
      if (!seen.insert(k).second) parse_error(line.number, g.col, "J e" + std::to_string(k) + " given twice");
      ++pos;
      if (toks[pos].kind != Tok::Arrow) parse_error(line.number, toks[pos].col, "expected '->'");
      ++pos;
      // the image runs to the next top-level comma
      size_t end = pos;
      int depth = 0;
      while (toks[end].kind != Tok::End && !(depth == 0 && toks[end].kind == Tok::Op && toks[end].text == ",")) {
        if (toks[end].kind == Tok::Op && toks[end].text == "(") ++depth;
        if (toks[end].kind == Tok::Op && toks[end].text == ")") --depth;
        ++end;
      }
      std::vector<Token> sub(toks.begin() + static_cast<long>(pos), toks.begin() + static_cast<long>(end));
      sub.push_back({Tok::End, "", toks[end].col});
      Value v = expression(sub, 0, line, n);
      Form img = as_form(v, line, toks[pos].col, n, 1, "J e" + std::to_string(k));
      for (int j = 1; j <= n; ++j) m[k - 1][j - 1] = img.coeff(MultiIndex::single(j));
      pos = end;
      if (toks[pos].kind == Tok::End) break;
      ++pos;
    }
    if (static_cast<int>(seen.size()) != n)
      parse_error(line.number, toks[0].col, "J must give the image of every generator (" + std::to_string(n) + ")");
    out_.J = CoframeMap(m);
  }

  // -- [basis]

  void basis_statement(const Line& line) {
    auto toks = tokenize(line.text, line.number, 1);
    const Token& t0 = toks[0];
    if (t0.kind != Tok::Ident || t0.text.size() < 2 || t0.text[0] != 'f' ||
        !std::all_of(t0.text.begin() + 1, t0.text.end(), ::isdigit))
      parse_error(line.number, t0.col, "expected f<k> = <1-form>");
    const int k = std::stoi(t0.text.substr(1));
    if (main_.dim <= 0) parse_error(line.number, t0.col, "[basis] before the algebra dimension is known");
    if (k < 1 || k > main_.dim) parse_error(line.number, t0.col, t0.text + " exceeds the algebra dimension");
    if (basis_rows_.count(k)) parse_error(line.number, t0.col, "duplicate definition of " + t0.text);
    expect_op(toks, 1, "=", line);
    Value v = expression(toks, 2, line, main_.dim);
    basis_rows_[k] = as_form(v, line, toks[2].col, main_.dim, 1, t0.text);
  }

  // -- helpers

  void expect_op(const std::vector<Token>& toks, size_t pos, const char* op, const Line& line) {
    if (toks[pos].kind != Tok::Op || toks[pos].text != op)
      parse_error(line.number, toks[pos].col, std::string("expected '") + op + "'");
  }

  Value expression(const std::vector<Token>& toks, size_t pos, const Line& line, int dim) {
    if (toks[pos].kind == Tok::End) parse_error(line.number, toks[pos].col, "missing expression");
    auto lookup = [this](const std::string& name) -> const Value* {
      auto it = symbols_.find(name);
      return it == symbols_.end() ? nullptr : &it->second;
    };
    ExprParser p(toks, pos, line.number, dim, out_.has_family ? out_.param : std::string("t"), lookup);
    Value v = p.parse_expression();
    const Token& rest = toks[p.position()];
    if (rest.kind != Tok::End) parse_error(line.number, rest.col, "unexpected '" + rest.text + "'");
    return v;
  }

  Form as_form(const Value& v, const Line& line, int col, int dim, int degree, const std::string& what) {
    if (!v.is_real()) parse_error(line.number, col, what + " must be real");
    if (auto s = std::get_if<Scalar>(&v.re)) {
      if (s->is_zero()) return Form(dim, degree);
      parse_error(line.number, col, what + " must be a " + std::to_string(degree) + "-form, got a scalar");
    }
    const Form& f = std::get<Form>(v.re);
    if (f.is_zero()) return Form(dim, degree);
    if (f.degree() != degree)
      parse_error(line.number, col,
                  what + " must be a " + std::to_string(degree) + "-form, got a " + std::to_string(f.degree()) + "-form");
    return f;
  }

  void define(Section& section, const Token& name, const Value& v, const Line& line) {
    static const std::set<std::string> reserved = {"t", "i", "d", "J", "dim", "param", "domain", "sqrt", "cbrt", "inf"};
    if (reserved.count(name.text) || is_generator_name(name.text, nullptr))
      parse_error(line.number, name.col, "'" + name.text + "' is reserved");
    if (name.text == out_.param && out_.has_family) parse_error(line.number, name.col, "'" + name.text + "' is the family parameter");
    if (symbols_.count(name.text)) parse_error(line.number, name.col, "duplicate definition of '" + name.text + "'");
    symbols_[name.text] = v;
    auto store = [&](const std::string& n, const Quantity& q) {
      NamedValue nv;
      nv.name = n;
      nv.line = line.number;
      if (auto s = std::get_if<Scalar>(&q)) {
        nv.scalar = *s;
      } else {
        nv.is_form = true;
        nv.form = std::get<Form>(q);
      }
      for (const Section* s : {&out_.structure, &out_.family})
        if (s->find(n)) parse_error(line.number, name.col, "duplicate definition of '" + n + "'");
      section.values.push_back(std::move(nv));
    };
    if (v.is_real()) {
      store(name.text, v.re);
    } else {
      Quantity re = v.re, im = v.im;
      // a purely imaginary scalar has a Scalar zero real part: keep both as forms when either is
      if (v.is_form()) {
        int dim = main_.dim;
        auto to_form = [&](const Quantity& q) {
          if (auto s = std::get_if<Scalar>(&q)) return s->is_zero() ? Form(dim, 0) : Form::constant(dim, *s);
          return std::get<Form>(q);
        };
        re = to_form(re);
        im = to_form(im);
      }
      store(name.text + "_plus", re);
      store(name.text + "_minus", im);
    }
  }

  StructureFile out_;
  AlgebraState main_, target_;
  bool target_started_ = false;
  bool param_set_ = false;
  Where where_ = Where::None;
  std::set<std::string> seen_sections_;
  std::map<std::string, Value> symbols_;
  std::map<int, Form> basis_rows_;
};

}  // namespace

StructureFile parse_structure_file(const std::string& text) { return FileParser().run(text); }

StructureFile load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_structure_file(ss.str());
}

Form parse_form(const std::string& text, int dimension) {
  auto toks = tokenize(text, 0, 1);
  ExprParser p(toks, 0, 0, dimension, "t", nullptr);
  Value v = p.parse_expression();
  if (toks[p.position()].kind != Tok::End)
    parse_error(0, toks[p.position()].col, "unexpected '" + toks[p.position()].text + "'");
  if (!v.is_real()) fail(ErrorKind::Parse, "form must be real");
  if (auto s = std::get_if<Scalar>(&v.re)) return Form::constant(dimension, *s);
  return std::get<Form>(v.re);
}

Scalar parse_scalar(const std::string& text) {
  auto toks = tokenize(text, 0, 1);
  ExprParser p(toks, 0, 0, 0, "t", nullptr);
  Value v = p.parse_expression();
  if (toks[p.position()].kind != Tok::End)
    parse_error(0, toks[p.position()].col, "unexpected '" + toks[p.position()].text + "'");
  if (v.is_form() || !v.is_real()) fail(ErrorKind::Parse, "expected a real scalar");
  return std::get<Scalar>(v.re);
}

std::string render_structure_file(const StructureFile& file) {
  std::string out = "[algebra]\n";
  const LieAlgebra& g = file.algebra;
  if (!g.label().empty()) out += "label = " + g.label() + "\n";
  out += "dim = " + std::to_string(g.dimension()) + "\n";
  for (int i = 1; i <= g.dimension(); ++i)
    if (!g.d_generator(i).is_zero()) out += "d e" + std::to_string(i) + " = " + g.d_generator(i).str() + "\n";
  auto values = [](const Section& s) {
    std::string o;
    for (const auto& v : s.values) o += v.name + " = " + (v.is_form ? v.form.str() : v.scalar.str()) + "\n";
    return o;
  };
  if (!file.structure.empty() || file.J) {
    out += "\n[structure]\n" + values(file.structure);
    if (file.J) out += "J: " + file.J->str() + "\n";
  }
  if (file.has_family) {
    out += "\n[family]\nparam = t\ndomain = ";
    for (size_t i = 0; i < file.domain.size(); ++i) out += (i ? ", " : "") + file.domain[i].str();
    out += "\n" + values(file.family);
  }
  if (file.basis) {
    out += "\n[basis]\n";
    for (size_t i = 0; i < file.basis->size(); ++i) {
      Form f(g.dimension(), 1);
      for (size_t j = 0; j < file.basis->size(); ++j) f.add(MultiIndex::single(static_cast<int>(j) + 1), (*file.basis)[i][j]);
      out += "f" + std::to_string(i + 1) + " = " + f.str() + "\n";
    }
  }
  if (file.target) {
    out += "\n[target]\ndim = " + std::to_string(file.target->dimension()) + "\n";
    for (int i = 1; i <= file.target->dimension(); ++i)
      if (!file.target->d_generator(i).is_zero())
        out += "d e" + std::to_string(i) + " = " + file.target->d_generator(i).str() + "\n";
  }
  return out;
}

}  // namespace sugeom
