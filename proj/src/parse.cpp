#include "gradus/parse.hpp"

#include <string>

#include "gradus/lexer.hpp"

namespace gradus {

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text, const Scope* lets)
      : ring_(ring), ts_(text), lets_(lets) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (!ts_.at_end()) ts_.fail("trailing input");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (ts_.accept(Tok::Plus)) {
        acc += term();
      } else if (ts_.accept(Tok::Minus)) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (ts_.accept(Tok::Star)) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    if (ts_.accept(Tok::Minus)) return -factor();
    Polynomial b = base();
    if (ts_.accept(Tok::Caret)) {
      Token e = ts_.expect(Tok::Int, "a nonnegative integer exponent");
      return b.pow(std::stoull(e.text));
    }
    return b;
  }

  Polynomial base() {
    Token t;
    if (ts_.accept(Tok::Int, &t)) {
      std::string lit = t.text;
      if (ts_.accept(Tok::Slash)) {
        Token d = ts_.expect(Tok::Int, "a denominator");
        lit += "/" + d.text;
      }
      return Polynomial::constant(ring_, Rational::parse(lit));
    }
    if (ts_.accept(Tok::Ident, &t)) {
      if (auto idx = ring_.index_of(t.text)) return Polynomial::variable(ring_, *idx);
      if (lets_) {
        auto it = lets_->find(t.text);
        if (it != lets_->end()) return it->second;
      }
      throw ParseError("unknown name '" + t.text + "'", t.pos);
    }
    if (ts_.accept(Tok::LParen)) {
      Polynomial p = expr();
      ts_.expect(Tok::RParen, "')'");
      return p;
    }
    ts_.fail("expected a rational, a name, or '('");
  }

  const Ring& ring_;
  TokenStream ts_;
  const Scope* lets_;
};

}  // namespace

Polynomial parse_poly(const Ring& ring, std::string_view text, const Scope* lets) {
  return PolyParser(ring, text, lets).parse();
}

std::string print_poly(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(p, order)) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string vars;
    for (size_t i = 0; i < p.ring().size(); ++i) {
      int e = m.exp(i);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += p.ring().var(i).name;
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += a.str();
    } else if (a.is_one()) {
      out += vars;
    } else {
      out += a.str() + "*" + vars;
    }
  }
  return out;
}

}  // namespace gradus
