#include "fz/text.hpp"

#include <cctype>
#include <functional>
#include <memory>
#include <optional>

namespace fz {

ParseError::ParseError(std::size_t pos, const std::string& what)
    : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos) {}

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 20;

struct Node {
  enum Kind { Int, Sym, Add, Sub, Mul, Div, Neg, Pow } kind;
  std::size_t pos = 0;
  long long value = 0;  // Int: residue mod p; Pow: exponent
  char sym = 0;
  std::unique_ptr<Node> a, b;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k, std::size_t pos, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->pos = pos;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  Parser(std::string_view s, std::uint32_t p, std::string_view letters) : s_(s), p_(p), letters_(letters) {}

  NodePtr parse() {
    skip();
    if (i_ == s_.size()) throw ParseError(i_, "empty expression");
    NodePtr e = expr();
    skip();
    if (i_ != s_.size()) throw ParseError(i_, std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || letters_.find(c) != std::string_view::npos;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (peek('+')) {
        const std::size_t at = i_++;
        lhs = make(Node::Add, at, std::move(lhs), term());
      } else if (peek('-')) {
        const std::size_t at = i_++;
        lhs = make(Node::Sub, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    if (peek('-')) {
      const std::size_t at = i_++;
      return make(Node::Neg, at, term());
    }
    if (peek('+')) {
      ++i_;
      return term();
    }
    NodePtr lhs = power();
    for (;;) {
      if (peek('*')) {
        const std::size_t at = i_++;
        lhs = make(Node::Mul, at, std::move(lhs), power());
      } else if (peek('/')) {
        const std::size_t at = i_++;
        lhs = make(Node::Div, at, std::move(lhs), power());
      } else if (starts_factor()) {
        const std::size_t at = i_;
        lhs = make(Node::Mul, at, std::move(lhs), power());
      } else {
        return lhs;
      }
    }
  }

  NodePtr power() {
    NodePtr base = primary();
    while (peek('^')) {
      const std::size_t at = i_++;
      skip();
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        throw ParseError(i_, "expected a nonnegative integer exponent");
      }
      std::uint64_t e = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        e = e * 10 + static_cast<std::uint64_t>(s_[i_++] - '0');
        if (e > kMaxExponent) throw ParseError(at, "exponent too large");
      }
      auto n = make(Node::Pow, at, std::move(base));
      n->value = static_cast<long long>(e);
      base = std::move(n);
    }
    return base;
  }

  NodePtr primary() {
    skip();
    if (i_ >= s_.size()) throw ParseError(i_, "unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      NodePtr e = expr();
      if (!peek(')')) throw ParseError(i_, "expected ')'");
      ++i_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = make(Node::Int, i_);
      long long v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        v = (v * 10 + (s_[i_++] - '0')) % p_;
      }
      n->value = v;
      return n;
    }
    if (letters_.find(c) != std::string_view::npos) {
      auto n = make(Node::Sym, i_++);
      n->sym = c;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(i_, std::string("unknown variable '") + c + "'");
    }
    throw ParseError(i_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::uint32_t p_;
  std::string_view letters_;
  std::size_t i_ = 0;
};

// Generic evaluation; Ops supplies constants, symbols and division.
template <class V, class Ops>
V eval(const Node& n, const Ops& ops) {
  switch (n.kind) {
    case Node::Int: return ops.constant(static_cast<Elem>(n.value));
    case Node::Sym: return ops.symbol(n.sym);
    case Node::Add: return eval<V>(*n.a, ops) + eval<V>(*n.b, ops);
    case Node::Sub: return eval<V>(*n.a, ops) - eval<V>(*n.b, ops);
    case Node::Mul: return eval<V>(*n.a, ops) * eval<V>(*n.b, ops);
    case Node::Neg: return -eval<V>(*n.a, ops);
    case Node::Div: return ops.divide(eval<V>(*n.a, ops), eval<V>(*n.b, ops), n.b->pos);
    case Node::Pow: {
      V base = eval<V>(*n.a, ops);
      V r = ops.constant(1);
      for (auto e = static_cast<std::uint64_t>(n.value); e; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
      }
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

std::string letters_for(const FieldPtr& f, std::string_view vars) {
  std::string s(vars);
  if (f->m() > 1) s += 'z';
  return s;
}

Elem generator(const FieldPtr& f) { return f->m() > 1 ? f->p() : 0; }

struct RationalOps {
  FieldPtr f;
  RationalFunction constant(Elem c) const { return RationalFunction(UniPoly::constant(f, c)); }
  RationalFunction symbol(char c) const {
    if (c == 'T') return RationalFunction(UniPoly::variable(f));
    return constant(generator(f));
  }
  RationalFunction divide(const RationalFunction& a, const RationalFunction& b, std::size_t pos) const {
    if (b.is_zero()) throw ParseError(pos, "division by zero");
    return a / b;
  }
};

template <class P>
struct PolyOps {
  FieldPtr f;
  std::function<P(Elem)> konst;
  std::function<P(char)> sym;
  std::function<P(const P&, Elem)> scale;
  std::function<std::optional<Elem>(const P&)> as_constant;
  P constant(Elem c) const { return konst(c); }
  P symbol(char c) const { return sym(c); }
  P divide(const P& a, const P& b, std::size_t pos) const {
    const auto c = as_constant(b);
    if (!c) throw ParseError(pos, "division by a non-constant polynomial");
    if (*c == 0) throw ParseError(pos, "division by zero");
    return scale(a, f->inv(*c));
  }
};

std::optional<Elem> uni_constant(const UniPoly& p) {
  if (!p.is_constant()) return std::nullopt;
  return p.coeff(0);
}

std::string elem_string(const FieldPtr& f, Elem c) {
  if (f->in_prime_subfield(c)) return std::to_string(c);
  const auto co = f->coords(c);
  std::string s;
  for (std::size_t i = co.size(); i-- > 0;) {
    if (co[i] == 0) continue;
    if (!s.empty()) s += '+';
    if (co[i] != 1 || i == 0) s += std::to_string(co[i]);
    if (i >= 1) s += 'z';
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s;
}

// Coefficient as a multiplicative prefix: "" for 1, "(z+1)" for compound
// extension elements.
std::string coeff_prefix(const FieldPtr& f, Elem c) {
  if (c == 1) return "";
  std::string s = elem_string(f, c);
  if (s.find('+') != std::string::npos) return "(" + s + ")";
  return s;
}

std::string monomial(char var, int e) {
  if (e == 0) return "";
  std::string s(1, var);
  if (e > 1) s += '^' + std::to_string(e);
  return s;
}

}  // namespace

RationalFunction parse_rational(std::string_view text, const FieldPtr& f) {
  const auto ast = Parser(text, f->p(), letters_for(f, "T")).parse();
  return eval<RationalFunction>(*ast, RationalOps{f});
}

UniPoly parse_theta_poly(std::string_view text, const FieldPtr& f) {
  const auto ast = Parser(text, f->p(), letters_for(f, "T")).parse();
  PolyOps<UniPoly> ops{f,
                       [&](Elem c) { return UniPoly::constant(f, c); },
                       [&](char c) {
                         return c == 'T' ? UniPoly::variable(f) : UniPoly::constant(f, generator(f));
                       },
                       [](const UniPoly& p, Elem s) { return p.scaled(s); },
                       uni_constant};
  return eval<UniPoly>(*ast, ops);
}

UniPoly parse_t_poly(std::string_view text, const FieldPtr& f) {
  const auto ast = Parser(text, f->p(), letters_for(f, "t")).parse();
  PolyOps<UniPoly> ops{f,
                       [&](Elem c) { return UniPoly::constant(f, c, Var::T); },
                       [&](char c) {
                         return c == 't' ? UniPoly::variable(f, Var::T)
                                         : UniPoly::constant(f, generator(f), Var::T);
                       },
                       [](const UniPoly& p, Elem s) { return p.scaled(s); },
                       uni_constant};
  return eval<UniPoly>(*ast, ops);
}

BiPoly parse_bipoly(std::string_view text, const FieldPtr& f) {
  const auto ast = Parser(text, f->p(), letters_for(f, "tT")).parse();
  PolyOps<BiPoly> ops{f,
                      [&](Elem c) { return BiPoly::from_theta(UniPoly::constant(f, c)); },
                      [&](char c) {
                        if (c == 't') return BiPoly::from_t(UniPoly::variable(f, Var::T));
                        if (c == 'T') return BiPoly::from_theta(UniPoly::variable(f));
                        return BiPoly::from_theta(UniPoly::constant(f, generator(f)));
                      },
                      [](const BiPoly& p, Elem s) { return p.scaled(s); },
                      [](const BiPoly& p) -> std::optional<Elem> {
                        if (p.degree_t() > 0 || p.degree_theta() > 0) return std::nullopt;
                        return p.is_zero() ? 0 : p.coeff(0).coeff(0);
                      }};
  return eval<BiPoly>(*ast, ops);
}

std::vector<std::uint32_t> parse_modulus(std::string_view text, std::uint32_t p) {
  std::string s(text);
  for (auto& c : s) {
    if (c == 'x' || c == 'z') c = 'T';
    else if (c == 'T') throw ParseError(static_cast<std::size_t>(&c - s.data()), "modulus uses the variable z or x");
  }
  const FieldPtr f = Field::prime(p);
  const UniPoly poly = parse_theta_poly(s, f);
  return {poly.coeffs().begin(), poly.coeffs().end()};
}

std::string to_string(const FieldPtr& f, Elem c) { return elem_string(f, c); }

std::string to_string(const UniPoly& f) {
  if (f.is_zero()) return "0";
  const char var = f.var() == Var::T ? 't' : 'T';
  std::string s;
  for (int e = f.degree(); e >= 0; --e) {
    const Elem c = f.coeff(e);
    if (c == 0) continue;
    if (!s.empty()) s += '+';
    if (e == 0) s += elem_string(f.field(), c);
    else s += coeff_prefix(f.field(), c) + monomial(var, e);
  }
  return s;
}

std::string to_string(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int j = f.degree_t(); j >= 0; --j) {
    const UniPoly& c = f.coeff(j);
    for (int e = c.degree(); e >= 0; --e) {
      const Elem x = c.coeff(e);
      if (x == 0) continue;
      if (!s.empty()) s += '+';
      const std::string mono = monomial('t', j) + monomial('T', e);
      if (mono.empty()) s += elem_string(f.field(), x);
      else s += coeff_prefix(f.field(), x) + mono;
    }
  }
  return s;
}

std::string to_string(const RationalFunction& r) {
  std::string num = to_string(r.num());
  if (r.is_polynomial()) return num;
  std::string den = to_string(r.den());
  if (num.find('+') != std::string::npos) num = "(" + num + ")";
  if (den.find('+') != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace fz
