#include "qaffine/expr.hpp"

#include <cctype>

#include "qaffine/errors.hpp"

namespace qaffine {

namespace {

enum class Tok { Number, Name, Plus, Minus, Times, Divide, Caret, Quote, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      std::string name(s.substr(start, i - start));
      if (name == "w" && i < s.size() && (s[i] == '+' || s[i] == '-')) name += s[i++];
      out.push_back({Tok::Name, name, start});
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Times; break;
      case '/': k = Tok::Divide; break;
      case '^': k = Tok::Caret; break;
      case '\'': k = Tok::Quote; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(start, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({k, std::string(1, ch), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool knownName(const std::string& n) {
  static const char* names[] = {"a", "as", "c", "cs", "B0", "Bp", "Bm", "w+", "w-", "wz", "q", "s"};
  for (const char* k : names) {
    if (n == k) return true;
  }
  return false;
}

ExprPtr node(Expr::Kind kind, std::size_t offset, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->offset = offset;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().offset, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      ExprPtr rhs = term();
      lhs = node(op.kind == Tok::Plus ? Expr::Kind::Sum : Expr::Kind::Difference, op.offset, {lhs, rhs});
    }
    return lhs;
  }

  static bool startsAtom(Tok k) { return k == Tok::Number || k == Tok::Name || k == Tok::LParen; }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::Times || t.kind == Tok::Divide) {
        next();
        ExprPtr rhs = unary();
        lhs = node(t.kind == Tok::Times ? Expr::Kind::Product : Expr::Kind::Quotient, t.offset, {lhs, rhs});
      } else if (startsAtom(t.kind)) {
        ExprPtr rhs = factor();
        lhs = node(Expr::Kind::Product, t.offset, {lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (peek().kind == Tok::Minus) {
      const std::size_t at = next().offset;
      return node(Expr::Kind::Neg, at, {unary()});
    }
    return factor();
  }

  ExprPtr factor() {
    ExprPtr e = atom();
    if (peek().kind == Tok::Caret) {
      const std::size_t at = next().offset;
      bool negative = false;
      if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) negative = next().kind == Tok::Minus;
      if (peek().kind != Tok::Number) throw ParseError(peek().offset, "expected an integer exponent");
      const Token& n = next();
      if (n.text.size() > 6) throw ParseError(n.offset, "exponent too large");
      auto p = std::make_shared<Expr>();
      p->kind = Expr::Kind::Power;
      p->offset = at;
      p->exponent = negative ? -std::stoi(n.text) : std::stoi(n.text);
      p->args = {e};
      e = p;
    }
    while (peek().kind == Tok::Quote) e = node(Expr::Kind::Star, next().offset, {e});
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Number;
        e->text = t.text;
        e->offset = t.offset;
        return e;
      }
      case Tok::Name: {
        if (!knownName(t.text)) throw ParseError(t.offset, "unknown name '" + t.text + "'");
        next();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Name;
        e->text = t.text;
        e->offset = t.offset;
        return e;
      }
      case Tok::LParen: {
        next();
        ExprPtr e = expr();
        if (peek().kind != Tok::RParen) throw ParseError(peek().offset, "expected ')'");
        next();
        return e;
      }
      case Tok::End:
        throw ParseError(t.offset, "unexpected end of input");
      default:
        throw ParseError(t.offset, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum:
    case Expr::Kind::Difference:
      return 1;
    case Expr::Kind::Product:
    case Expr::Kind::Quotient:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Power:
    case Expr::Kind::Star:
      return 4;
    default:
      return 5;
  }
}

std::string wrapIf(const Expr& e, bool wrap) { return wrap ? "(" + printExpr(e) + ")" : printExpr(e); }

AlgebraElement nameValue(const std::string& n) {
  if (n == "a") return AlgebraElement::a();
  if (n == "as") return AlgebraElement::aStar();
  if (n == "c") return AlgebraElement::c();
  if (n == "cs") return AlgebraElement::cStar();
  if (n == "B0") return AlgebraElement::c() * AlgebraElement::cStar();
  if (n == "Bp") return AlgebraElement::c() * AlgebraElement::aStar();
  if (n == "Bm") return AlgebraElement::a() * AlgebraElement::cStar();
  if (n == "q") return QScalar::q(1);
  return QScalar::s(1);
}

const AlgebraElement& requireAlgebra(const Value& v, const Expr& at, const char* what) {
  if (const auto* f = std::get_if<AlgebraElement>(&v)) return *f;
  throw ParseError(at.offset, std::string(what) + " needs an algebra element");
}

}  // namespace

ExprPtr parseExpr(std::string_view text) { return Parser(lex(text)).parse(); }

std::string printExpr(const Expr& e) {
  const int p = precedence(e);
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Name:
      return e.text;
    case Expr::Kind::Sum:
      return printExpr(*e.args[0]) + " + " + wrapIf(*e.args[1], precedence(*e.args[1]) <= 1);
    case Expr::Kind::Difference:
      return printExpr(*e.args[0]) + " - " + wrapIf(*e.args[1], precedence(*e.args[1]) <= 1);
    case Expr::Kind::Product:
      return wrapIf(*e.args[0], precedence(*e.args[0]) < p) + " " +
             wrapIf(*e.args[1], precedence(*e.args[1]) <= 3);
    case Expr::Kind::Quotient:
      return wrapIf(*e.args[0], precedence(*e.args[0]) < p) + " / " +
             wrapIf(*e.args[1], precedence(*e.args[1]) <= p);
    case Expr::Kind::Neg:
      return "-" + wrapIf(*e.args[0], precedence(*e.args[0]) < p);
    case Expr::Kind::Power:
      return wrapIf(*e.args[0], precedence(*e.args[0]) < 5) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Star: {
      const Expr& c = *e.args[0];
      const bool bare = precedence(c) == 5 || c.kind == Expr::Kind::Power || c.kind == Expr::Kind::Star;
      return wrapIf(c, !bare) + "'";
    }
  }
  return {};
}

Value evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return AlgebraElement(QScalar(Integer(e.text)));
    case Expr::Kind::Name:
      if (e.text == "w+") return OneForm::basis(Tangent::Plus);
      if (e.text == "w-") return OneForm::basis(Tangent::Minus);
      if (e.text == "wz") return OneForm::basis(Tangent::Z);
      return nameValue(e.text);
    case Expr::Kind::Sum:
    case Expr::Kind::Difference: {
      const Value x = evaluate(*e.args[0]);
      const Value y = evaluate(*e.args[1]);
      if (x.index() != y.index()) throw ParseError(e.offset, "cannot add an algebra element and a one-form");
      const bool minus = e.kind == Expr::Kind::Difference;
      if (const auto* f = std::get_if<AlgebraElement>(&x)) {
        const auto& g = std::get<AlgebraElement>(y);
        return minus ? *f - g : *f + g;
      }
      const auto& v = std::get<OneForm>(x);
      const auto& w = std::get<OneForm>(y);
      return minus ? v - w : v + w;
    }
    case Expr::Kind::Product: {
      const Value x = evaluate(*e.args[0]);
      const Value y = evaluate(*e.args[1]);
      const auto* fx = std::get_if<AlgebraElement>(&x);
      const auto* fy = std::get_if<AlgebraElement>(&y);
      if (fx && fy) return *fx * *fy;
      if (fx) return smulL(*fx, std::get<OneForm>(y));
      if (fy) return std::get<OneForm>(x) * *fy;
      throw ParseError(e.offset, "cannot multiply two one-forms");
    }
    case Expr::Kind::Quotient: {
      const Value x = evaluate(*e.args[0]);
      const Value y = evaluate(*e.args[1]);
      const AlgebraElement& den = requireAlgebra(y, *e.args[1], "division");
      if (!den.isScalar()) throw ParseError(e.args[1]->offset, "division is only by scalars");
      if (den.isZero()) throw DivisionByZero();
      const QScalar k = den.scalarPart().inv();
      if (const auto* f = std::get_if<AlgebraElement>(&x)) return k * *f;
      return k * std::get<OneForm>(x);
    }
    case Expr::Kind::Power: {
      const Value x = evaluate(*e.args[0]);
      const AlgebraElement& f = requireAlgebra(x, e, "a power");
      if (e.exponent >= 0) return pow(f, e.exponent);
      if (!f.isScalar() || f.isZero()) throw ParseError(e.offset, "negative powers need a nonzero scalar");
      return AlgebraElement(f.scalarPart().pow(e.exponent));
    }
    case Expr::Kind::Star: {
      const Value x = evaluate(*e.args[0]);
      if (const auto* f = std::get_if<AlgebraElement>(&x)) return star(*f);
      return dagger(std::get<OneForm>(x));
    }
    case Expr::Kind::Neg: {
      const Value x = evaluate(*e.args[0]);
      if (const auto* f = std::get_if<AlgebraElement>(&x)) return -*f;
      return QScalar(-1L) * std::get<OneForm>(x);
    }
  }
  return AlgebraElement();
}

std::string toString(const Value& v) {
  return std::visit([](const auto& x) { return x.toString(); }, v);
}

AlgebraElement parseAlgebra(std::string_view text) {
  const ExprPtr e = parseExpr(text);
  Value v = evaluate(*e);
  if (auto* f = std::get_if<AlgebraElement>(&v)) return std::move(*f);
  throw ParseError(0, "expected an algebra element, got a one-form");
}

OneForm parseForm(std::string_view text) {
  const ExprPtr e = parseExpr(text);
  Value v = evaluate(*e);
  if (auto* w = std::get_if<OneForm>(&v)) return std::move(*w);
  if (std::get<AlgebraElement>(v).isZero()) return OneForm();
  throw ParseError(0, "expected a one-form, got an algebra element");
}

}  // namespace qaffine
