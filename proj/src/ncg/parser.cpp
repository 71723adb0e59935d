#include "ncg/parser.hpp"

#include <cctype>
#include <charconv>

#include "ncg/error.hpp"

namespace ncg {

namespace {

constexpr std::size_t kMaxExponent = 64;

enum class Tok { number, unit, var, plus, minus, star, caret, lparen, rparen, lbracket, rbracket, comma, semi, end };

struct Token {
  Tok kind;
  std::size_t pos;
  double value = 0.0;
  char unit = '\0';       // suffix of a number ("2i") or the bare unit itself
  bool integral = false;  // digits only, usable as an exponent
  std::string_view text{};
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (digit(i) || (c == '.' && digit(i + 1))) {
      bool integral = true;
      while (digit(i)) ++i;
      if (i < s.size() && s[i] == '.') {
        integral = false;
        ++i;
        while (digit(i)) ++i;
      }
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t k = i + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (digit(k)) {
          integral = false;
          i = k;
          while (digit(i)) ++i;
        }
      }
      Token t{Tok::number, start};
      t.text = s.substr(start, i - start);
      t.integral = integral;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw Error(ErrorCode::lexer, "invalid number '" + std::string(t.text) + "' at position " +
                                          std::to_string(start), start);
      if (i < s.size() && (s[i] == 'i' || s[i] == 'j' || s[i] == 'k')) {
        t.unit = s[i];
        t.integral = false;
        ++i;
        t.text = s.substr(start, i - start);
      }
      out.push_back(t);
      continue;
    }
    Token t{Tok::end, start};
    switch (c) {
      case 'x': t.kind = Tok::var; break;
      case 'i': case 'j': case 'k': t.kind = Tok::unit; t.unit = c; t.value = 1.0; break;
      case '+': t.kind = Tok::plus; break;
      case '-': t.kind = Tok::minus; break;
      case '*': t.kind = Tok::star; break;
      case '^': t.kind = Tok::caret; break;
      case '(': t.kind = Tok::lparen; break;
      case ')': t.kind = Tok::rparen; break;
      case '[': t.kind = Tok::lbracket; break;
      case ']': t.kind = Tok::rbracket; break;
      case ',': t.kind = Tok::comma; break;
      case ';': t.kind = Tok::semi; break;
      default:
        throw Error(ErrorCode::lexer, std::string("unexpected character '") + c + "' at position " +
                                          std::to_string(start), start);
    }
    t.text = s.substr(start, 1);
    out.push_back(t);
    ++i;
  }
  out.push_back(Token{Tok::end, s.size()});
  return out;
}

Ast make_literal(Element value, bool bare_real) {
  Ast a{AstKind::literal};
  a.literal = std::move(value);
  a.bare_real = bare_real;
  return a;
}

Ast make_unary(AstKind kind, Ast child) {
  Ast a{kind};
  a.children.push_back(std::move(child));
  return a;
}

bool is_constant_tree(const Ast& a) {
  switch (a.kind) {
    case AstKind::literal: return true;
    case AstKind::negate: return is_constant_tree(a.children.front());
    case AstKind::sum:
      for (const auto& c : a.children)
        if (!is_constant_tree(c)) return false;
      return true;
    default: return false;
  }
}

bool all_bare_real(const Ast& a) {
  if (a.kind == AstKind::literal) return a.bare_real;
  for (const auto& c : a.children)
    if (!all_bare_real(c)) return false;
  return true;
}

Element fold_constant(const Ast& a) {
  switch (a.kind) {
    case AstKind::literal: return *a.literal;
    case AstKind::negate: return -fold_constant(a.children.front());
    default: {
      Element sum = fold_constant(a.children.front());
      for (std::size_t k = 1; k < a.children.size(); ++k) sum += fold_constant(a.children[k]);
      return sum;
    }
  }
}

class Parser {
 public:
  Parser(std::string_view text, const Algebra& algebra) : tokens_(lex(text)), algebra_(algebra) {}

  Ast parse_all() {
    Ast a = expr();
    if (peek().kind != Tok::end) fail({"operator", "end of input"});
    return a;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::vector<std::string>& expected) const {
    std::string msg = "parse error at position " + std::to_string(peek().pos) + ": expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k) msg += k + 1 == expected.size() ? " or " : ", ";
      msg += expected[k];
    }
    if (peek().kind != Tok::end) msg += ", found '" + std::string(peek().text) + "'";
    throw Error(ErrorCode::parse, msg, peek().pos);
  }

  void expect(Tok kind, const char* what) {
    if (!accept(kind)) fail({what});
  }

  Ast expr() {
    std::vector<Ast> parts;
    parts.push_back(term());
    for (;;) {
      if (accept(Tok::plus)) {
        parts.push_back(term());
      } else if (accept(Tok::minus)) {
        parts.push_back(make_unary(AstKind::negate, term()));
      } else {
        break;
      }
    }
    if (parts.size() == 1) return std::move(parts.front());
    Ast a{AstKind::sum};
    a.children = std::move(parts);
    return a;
  }

  Ast term() {
    std::vector<Ast> factors;
    factors.push_back(factor());
    while (accept(Tok::star)) factors.push_back(factor());
    if (factors.size() == 1) return std::move(factors.front());
    if (factors.front().kind == AstKind::literal && factors.front().bare_real) {
      Ast a{AstKind::scalar_mul};
      a.scalar = factors.front().literal->raw()[0];
      if (factors.size() == 2) {
        a.children.push_back(std::move(factors[1]));
      } else {
        Ast rest{AstKind::product};
        rest.children.assign(std::make_move_iterator(factors.begin() + 1),
                             std::make_move_iterator(factors.end()));
        a.children.push_back(std::move(rest));
      }
      return a;
    }
    Ast a{AstKind::product};
    a.children = std::move(factors);
    return a;
  }

  Ast factor() {
    Ast base = atom();
    if (!accept(Tok::caret)) return base;
    const Token& t = peek();
    if (t.kind != Tok::number || !t.integral) fail({"natural number"});
    if (t.value > static_cast<double>(kMaxExponent)) fail({"natural number <= 64"});
    advance();
    Ast a = make_unary(AstKind::power, std::move(base));
    a.exponent = static_cast<std::size_t>(t.value);
    return a;
  }

  Ast atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::var:
        advance();
        return Ast{AstKind::variable};
      case Tok::number:
      case Tok::unit:
        advance();
        return make_literal(scaled_unit(t), t.unit == '\0');
      case Tok::minus:
        advance();
        return make_unary(AstKind::negate, atom());
      case Tok::lparen: {
        advance();
        Ast inner = expr();
        expect(Tok::rparen, "')'");
        if (inner.kind != AstKind::literal && is_constant_tree(inner))
          return make_literal(fold_constant(inner), all_bare_real(inner));
        return inner;
      }
      case Tok::lbracket:
        return matrix_literal();
      default:
        fail({"'x'", "literal", "'('", "'-'"});
    }
  }

  Element scaled_unit(const Token& t) const {
    if (t.unit == '\0') return Element::real(algebra_, t.value);
    const bool ok = algebra_.kind() == AlgebraKind::quaternion ||
                    (algebra_.kind() == AlgebraKind::complex && t.unit == 'i');
    if (!ok)
      throw Error(ErrorCode::literal_dimension, std::string("unit '") + t.unit + "' at position " +
                                                    std::to_string(t.pos) + " does not exist in " +
                                                    algebra_.name(), t.pos);
    std::vector<double> raw(algebra_.dimension(), 0.0);
    raw[static_cast<std::size_t>(t.unit - 'i') + 1] = t.value;
    return Element::from_raw(algebra_, std::move(raw));
  }

  double signed_real() {
    double sign = 1.0;
    if (accept(Tok::minus)) sign = -1.0;
    else accept(Tok::plus);
    const Token& t = peek();
    if (t.kind != Tok::number || t.unit != '\0') fail({"real number"});
    advance();
    return sign * t.value;
  }

  Ast matrix_literal() {
    const std::size_t start = peek().pos;
    expect(Tok::lbracket, "'['");
    expect(Tok::lbracket, "'['");
    std::vector<std::vector<double>> rows(1);
    for (;;) {
      rows.back().push_back(signed_real());
      if (accept(Tok::comma)) continue;
      if (accept(Tok::semi)) {
        rows.emplace_back();
        continue;
      }
      if (peek().kind == Tok::rbracket) break;
      fail({"','", "';'", "']'"});
    }
    expect(Tok::rbracket, "']'");
    expect(Tok::rbracket, "']'");
    const std::size_t n = rows.size();
    bool square = algebra_.kind() == AlgebraKind::matrix && n == algebra_.matrix_size();
    for (const auto& r : rows) square = square && r.size() == n;
    if (!square)
      throw Error(ErrorCode::literal_dimension, "matrix literal at position " + std::to_string(start) +
                                                    " does not fit algebra " + algebra_.name(), start);
    std::vector<double> raw;
    for (const auto& r : rows) raw.insert(raw.end(), r.begin(), r.end());
    return make_literal(Element::from_raw(algebra_, std::move(raw)), false);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Algebra algebra_;
};

bool has_variable(const Ast& a) {
  if (a.kind == AstKind::variable) return true;
  for (const auto& c : a.children)
    if (has_variable(c)) return true;
  return false;
}

}  // namespace

Ast parse(std::string_view text, const Algebra& algebra) {
  return Parser(text, algebra).parse_all();
}

NcPolynomial lower(const Ast& ast, const Algebra& algebra) {
  switch (ast.kind) {
    case AstKind::literal: return NcPolynomial::constant(*ast.literal);
    case AstKind::variable: return NcPolynomial::variable(algebra);
    case AstKind::sum: {
      NcPolynomial p(algebra);
      for (const auto& c : ast.children) p = p + lower(c, algebra);
      return p;
    }
    case AstKind::product: {
      NcPolynomial p = lower(ast.children.front(), algebra);
      for (std::size_t k = 1; k < ast.children.size(); ++k) p = p * lower(ast.children[k], algebra);
      return p;
    }
    case AstKind::power: {
      const NcPolynomial base = lower(ast.children.front(), algebra);
      NcPolynomial p = NcPolynomial::constant(Element::unit(algebra));
      for (std::size_t k = 0; k < ast.exponent; ++k) p = p * base;
      return p;
    }
    case AstKind::negate: return scale(lower(ast.children.front(), algebra), -1.0);
    case AstKind::scalar_mul: return scale(lower(ast.children.front(), algebra), ast.scalar);
  }
  return NcPolynomial(algebra);
}

NcPolynomial parse_polynomial(std::string_view text, const Algebra& algebra) {
  return lower(parse(text, algebra), algebra);
}

Element parse_element(std::string_view text, const Algebra& algebra) {
  const Ast ast = parse(text, algebra);
  if (has_variable(ast))
    throw Error(ErrorCode::invalid_argument, "expected a constant, found 'x' in '" + std::string(text) + "'");
  return lower(ast, algebra).eval(Element::zero(algebra));
}

std::string render(const Ast& ast) {
  switch (ast.kind) {
    case AstKind::literal: {
      if (!ast.bare_real) return ast.literal->to_string();
      const double r = ast.literal->raw()[0];
      return r < 0.0 ? "(-" + format_real(-r) + ")" : format_real(r);
    }
    case AstKind::variable: return "x";
    case AstKind::sum:
    case AstKind::product: {
      const char* sep = ast.kind == AstKind::sum ? " + " : "*";
      std::string out = "(";
      for (std::size_t k = 0; k < ast.children.size(); ++k) {
        if (k) out += sep;
        out += render(ast.children[k]);
      }
      return out + ")";
    }
    case AstKind::power: return "(" + render(ast.children.front()) + ")^" + std::to_string(ast.exponent);
    case AstKind::negate: return "-(" + render(ast.children.front()) + ")";
    case AstKind::scalar_mul: {
      const std::string r = ast.scalar < 0.0 ? "(-" + format_real(-ast.scalar) + ")" : format_real(ast.scalar);
      return r + "*(" + render(ast.children.front()) + ")";
    }
  }
  return {};
}

}  // namespace ncg
