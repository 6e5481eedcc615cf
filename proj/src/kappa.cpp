#include "gradus/kappa.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "gradus/lexer.hpp"

namespace gradus {

namespace {

Rational pow2(long e) {
  Rational r = Rational::pow(Rational(2), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? r.inv() : r;
}

const KappaSymbol kK010{0, 1, 0};
const KappaSymbol kK001{0, 0, 1};
const KappaSymbol kKm101{-1, 0, 1};
const KappaSymbol kKm120{-1, 2, 0};
const KappaSymbol kKm102{-1, 0, 2};
const KappaSymbol kKm111{-1, 1, 1};

const std::array<KappaSymbol, 6>& generator_symbols() {
  static const std::array<KappaSymbol, 6> gens = {kK010, kK001, kKm101,
                                                  kKm120, kKm102, kKm111};
  return gens;
}

bool is_generator(const KappaSymbol& s) {
  const auto& gens = generator_symbols();
  return std::find(gens.begin(), gens.end(), s) != gens.end();
}

KappaExpression atom(const KappaSymbol& s) { return KappaExpression::atom(s); }

KappaExpression atom_pow(const KappaSymbol& s, int e) {
  return KappaExpression::atom(s).pow(uint64_t(e));
}

}  // namespace

KappaSymbol::KappaSymbol(int a0_, int a1_, int a2_) : a0(a0_), a1(a1_), a2(a2_) {
  if (a0 < -1) throw Error("kappa symbol with a0 < -1");
  if (a1 < 0 || a2 < 0) throw Error("kappa symbol with negative a1 or a2");
}

std::string KappaSymbol::name() const {
  return "k" + std::to_string(a0) + std::to_string(a1) + std::to_string(a2);
}

KappaExpression KappaExpression::constant(const Rational& c) {
  KappaExpression e;
  if (!c.is_zero()) e.terms_.emplace(Product{}, c);
  return e;
}

KappaExpression KappaExpression::atom(const KappaSymbol& s) {
  KappaExpression e;
  e.terms_.emplace(Product{s}, Rational(1));
  return e;
}

void KappaExpression::add_term(const Product& p, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KappaExpression KappaExpression::operator-() const {
  KappaExpression out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
  return out;
}

KappaExpression& KappaExpression::operator+=(const KappaExpression& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

KappaExpression& KappaExpression::operator-=(const KappaExpression& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

KappaExpression operator*(const KappaExpression& a, const KappaExpression& b) {
  KappaExpression out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      KappaExpression::Product p;
      p.reserve(pa.size() + pb.size());
      std::merge(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(p));
      out.add_term(p, ca * cb);
    }
  }
  return out;
}

KappaExpression operator*(const Rational& c, const KappaExpression& e) {
  KappaExpression out;
  if (c.is_zero()) return out;
  for (const auto& [p, pc] : e.terms_) out.terms_.emplace(p, c * pc);
  return out;
}

KappaExpression KappaExpression::pow(uint64_t n) const {
  KappaExpression result = KappaExpression::constant(Rational(1));
  KappaExpression base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Degree KappaExpression::degree() const {
  if (terms_.empty()) return {Degree::Kind::Zero, 0};
  auto product_degree = [](const Product& p) {
    int64_t d = 0;
    for (const auto& s : p) d += s.degree();
    return d;
  };
  int64_t d = product_degree(terms_.begin()->first);
  for (const auto& [p, c] : terms_)
    if (product_degree(p) != d) return {Degree::Kind::Inhomogeneous, 0};
  return {Degree::Kind::Homogeneous, d};
}

KappaExpression rule_weierstrass_product(int m, int n) {
  return pow2(1 - m - n) * (atom_pow(kK010, m) * atom_pow(kK001, n));
}

KappaExpression rule_second_chern_power(int n) {
  // 2^{n-1} k[-1,0,n] = k001^{n-2} (n(n-1) k-102 - (n^2-2n) k-101 k001)
  Rational scale = pow2(1 - n);
  KappaExpression inner =
      Rational(long(n) * (n - 1)) * (atom_pow(kK001, n - 2) * atom(kKm102)) -
      Rational(long(n) * n - 2 * long(n)) * (atom_pow(kK001, n - 1) * atom(kKm101));
  return scale * inner;
}

KappaExpression rule_mixed_product(int m, int n, long d) {
  // k[-1,m,n] = 2^{-n} k001^n k[-1,m,0] + 2^{-m} k010^m k[-1,0,n]
  //           + nm 2^{2-n-m} k010^{m-1} k001^{n-1}
  //             (k-111 - (k-101 k010 + d k001)/2)
  KappaExpression out =
      pow2(-n) * (atom_pow(kK001, n) * atom(KappaSymbol(-1, m, 0)));
  out += pow2(-m) * (atom_pow(kK010, m) * atom(KappaSymbol(-1, 0, n)));
  KappaExpression correction = atom(kKm111);
  correction -= Rational(1, 2) * (atom(kKm101) * atom(kK010));
  correction -= Rational(d, 2) * atom(kK001);
  out += (Rational(long(n) * m) * pow2(2 - n - m)) *
         (atom_pow(kK010, m - 1) * atom_pow(kK001, n - 1) * correction);
  return out;
}

namespace {

KappaExpression d3_kappa130_rule() {
  // k[-1,3,0] = 1/4 k010 (6 k-120 - 9 k010)
  return Rational(1, 4) *
         (atom(kK010) * (Rational(6) * atom(kKm120) - Rational(9) * atom(kK010)));
}

// Expansion of a reducible symbol; nullopt for generators and opaque
// residuals (which stay as they are).
std::optional<KappaExpression> expansion(const KappaSymbol& s, long d,
                                         const RewriteOptions& opts) {
  if (s.degree() < 0) return KappaExpression();  // only k[-1,0,0]
  if (s.a0 >= opts.vanish_threshold) return KappaExpression();
  if (is_generator(s)) return std::nullopt;
  if (s.a0 == 0) return rule_weierstrass_product(s.a1, s.a2);
  if (s.a0 == -1) {
    if (s.a2 == 0) {
      if (s.a1 == 1) return KappaExpression::constant(Rational(d));
      if (s.a1 == 3 && opts.enable_d3_kappa130) return d3_kappa130_rule();
      return std::nullopt;  // opaque k[-1,m,0], m >= 3
    }
    if (s.a1 == 0) return rule_second_chern_power(s.a2);  // a2 >= 3 here
    return rule_mixed_product(s.a1, s.a2, d);             // a1, a2 >= 1
  }
  return std::nullopt;  // 1 <= a0 < vanish_threshold: opaque
}

void validate(const RewriteOptions& opts) {
  if (opts.vanish_threshold < 1)
    throw Error("vanish threshold must be >= 1");
}

}  // namespace

const Ring& kappa_generator_ring() {
  static const Ring ring = [] {
    RingSpec spec;
    for (const auto& s : generator_symbols())
      spec.vars.push_back({s.name(), int(s.degree()), Parity::Even});
    return Ring(std::move(spec));
  }();
  return ring;
}

Polynomial rewrite_to_generators(const KappaExpression& e, long d,
                                 const RewriteOptions& opts) {
  validate(opts);

  // Rewrite to fixpoint over formal products.
  std::map<KappaExpression::Product, Rational> done;
  std::vector<std::pair<KappaExpression::Product, Rational>> work(e.terms().begin(),
                                                                  e.terms().end());
  while (!work.empty()) {
    auto [prod, coef] = std::move(work.back());
    work.pop_back();
    if (coef.is_zero()) continue;

    std::optional<size_t> reducible;
    std::optional<KappaExpression> repl;
    for (size_t i = 0; i < prod.size(); ++i) {
      repl = expansion(prod[i], d, opts);
      if (repl) {
        reducible = i;
        break;
      }
    }
    if (!reducible) {
      auto [it, inserted] = done.emplace(prod, coef);
      if (!inserted) it->second += coef;
      continue;
    }
    KappaExpression rest = KappaExpression::constant(coef);
    for (size_t i = 0; i < prod.size(); ++i)
      if (i != *reducible) rest = rest * KappaExpression::atom(prod[i]);
    rest = rest * *repl;
    for (const auto& [p, c] : rest.terms()) work.emplace_back(p, c);
  }

  // Collect residual symbols beyond the six generators.
  std::vector<KappaSymbol> opaques;
  for (const auto& [prod, coef] : done) {
    if (coef.is_zero()) continue;
    for (const auto& s : prod)
      if (!is_generator(s) &&
          std::find(opaques.begin(), opaques.end(), s) == opaques.end())
        opaques.push_back(s);
  }
  std::sort(opaques.begin(), opaques.end());

  Ring ring = kappa_generator_ring();
  if (!opaques.empty()) {
    RingSpec spec = ring.spec();
    for (const auto& s : opaques)
      spec.vars.push_back({s.name(), int(s.degree()), Parity::Even});
    ring = Ring(std::move(spec));
  }

  Polynomial out(ring);
  for (const auto& [prod, coef] : done) {
    if (coef.is_zero()) continue;
    std::vector<int> exps(ring.size(), 0);
    for (const auto& s : prod) exps[*ring.index_of(s.name())] += 1;
    out += Polynomial::term(ring, Monomial(std::move(exps)), coef);
  }
  return out;
}

std::vector<std::string> opaque_variables(const Polynomial& p) {
  const size_t base = kappa_generator_ring().size();
  std::vector<std::string> names;
  for (const auto& [m, c] : p.terms()) {
    for (size_t i = base; i < m.nvars(); ++i) {
      if (m.exp(i) == 0) continue;
      const std::string& name = p.ring().var(i).name;
      if (std::find(names.begin(), names.end(), name) == names.end())
        names.push_back(name);
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::array<Polynomial, 3> x_generators(long d) {
  const Ring& ring = kappa_generator_ring();
  auto var = [&](const KappaSymbol& s) {
    return Polynomial::variable(ring, *ring.index_of(s.name()));
  };
  Rational half(1, 2);
  Polynomial x1 = half * (Rational(d) * var(kK010) - var(kKm120));
  Polynomial x2 = half * (var(kK001) * var(kKm101) - var(kKm102));
  Polynomial x3 =
      half * (var(kK010) * var(kKm101) + Rational(d) * var(kK001) -
              Rational(2) * var(kKm111));
  return {x1, x2, x3};
}

std::vector<Polynomial> theorem_b_relations(long d) {
  auto [x1, x2, x3] = x_generators(d);
  std::vector<Polynomial> rels = {
      x1.pow(3),
      x1.pow(2) * x3,
      x1.pow(2) * x2 + x1 * x3.pow(2),
      Rational(6) * (x1 * x2 * x3) + x3.pow(3),
      x1 * x3.pow(3),
      x1 * x2.pow(2) + x2 * x3.pow(2),
      x2.pow(2) * x3,
      x2 * x3.pow(3),
      x2.pow(3),
      x3.pow(5),
  };
  for (const auto& r : rels)
    if (r.degree().kind == Degree::Kind::Inhomogeneous)
      throw Error("inhomogeneous relation in the substituted presentation");
  return rels;
}

Ideal theorem_b_ideal(long d) {
  return Ideal(kappa_generator_ring(), theorem_b_relations(d));
}

const GroebnerBasis& theorem_b_groebner(long d) {
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<const GroebnerBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    auto gb = std::make_unique<const GroebnerBasis>(groebner_basis(theorem_b_ideal(d)));
    it = cache.emplace(d, std::move(gb)).first;
  }
  return *it->second;
}

Polynomial kappa_normal_form(const KappaExpression& e, long d,
                             const RewriteOptions& opts) {
  Polynomial p = rewrite_to_generators(e, d, opts);
  std::vector<std::string> residual = opaque_variables(p);
  if (!residual.empty()) throw UnreducedSymbolError(residual.front());
  return normal_form(p, theorem_b_groebner(d));
}

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

std::optional<KappaSymbol> symbol_from_name(const std::string& name, size_t pos) {
  if (name.size() < 4 || name[0] != 'k') return std::nullopt;
  std::string rest = name.substr(1);
  bool neg = rest[0] == '-';
  if (neg) rest = rest.substr(1);
  if (rest.size() < 3 ||
      !std::all_of(rest.begin(), rest.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  int a0 = rest[0] - '0';
  if (neg) {
    if (a0 != 1) throw ParseError("kappa symbols have a0 >= -1", pos);
    a0 = -1;
  }
  if (rest.size() == 3) return KappaSymbol(a0, rest[1] - '0', rest[2] - '0');
  // longer names are positional only for k[-1,m,0] / k[i,m,0]
  if (rest.back() != '0') return std::nullopt;
  return KappaSymbol(a0, std::stoi(rest.substr(1, rest.size() - 2)), 0);
}

class KappaParser {
 public:
  explicit KappaParser(std::string_view text) : ts_(text) {}

  KappaExpression parse() {
    KappaExpression e = expr();
    if (!ts_.at_end()) ts_.fail("trailing input");
    return e;
  }

 private:
  KappaExpression expr() {
    KappaExpression acc = term();
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

  KappaExpression term() {
    KappaExpression acc = factor();
    while (ts_.accept(Tok::Star)) acc = acc * factor();
    return acc;
  }

  KappaExpression factor() {
    if (ts_.accept(Tok::Minus)) return Rational(-1) * factor();
    KappaExpression b = base();
    if (ts_.accept(Tok::Caret)) {
      Token e = ts_.expect(Tok::Int, "a nonnegative integer exponent");
      return b.pow(std::stoull(e.text));
    }
    return b;
  }

  int bracket_int() {
    bool neg = ts_.accept(Tok::Minus);
    Token t = ts_.expect(Tok::Int, "an integer");
    int v = std::stoi(t.text);
    return neg ? -v : v;
  }

  KappaExpression base() {
    Token t;
    if (ts_.accept(Tok::Int, &t)) {
      std::string lit = t.text;
      if (ts_.accept(Tok::Slash)) lit += "/" + ts_.expect(Tok::Int, "a denominator").text;
      return KappaExpression::constant(Rational::parse(lit));
    }
    if (ts_.accept(Tok::Ident, &t)) {
      if (t.text == "k" && ts_.peek().kind == Tok::LBracket) {
        ts_.next();
        int a0 = bracket_int();
        ts_.expect(Tok::Comma, "','");
        int a1 = bracket_int();
        ts_.expect(Tok::Comma, "','");
        int a2 = bracket_int();
        ts_.expect(Tok::RBracket, "']'");
        if (a0 < -1) throw ParseError("kappa symbols have a0 >= -1", t.pos);
        if (a1 < 0 || a2 < 0) throw ParseError("kappa symbols have a1, a2 >= 0", t.pos);
        return KappaExpression::atom(KappaSymbol(a0, a1, a2));
      }
      // generator names written with '-', e.g. "k-102": glue adjacent tokens
      if (t.text == "k" && ts_.peek().kind == Tok::Minus &&
          ts_.peek().pos == t.end() && ts_.peek(1).kind == Tok::Int &&
          ts_.peek(1).pos == t.end() + 1) {
        ts_.next();
        Token digits = ts_.next();
        auto sym = symbol_from_name("k-" + digits.text, t.pos);
        if (!sym) throw ParseError("unknown kappa symbol 'k-" + digits.text + "'", t.pos);
        return KappaExpression::atom(*sym);
      }
      if (auto sym = symbol_from_name(t.text, t.pos)) return KappaExpression::atom(*sym);
      throw ParseError("unknown name '" + t.text + "'", t.pos);
    }
    if (ts_.accept(Tok::LParen)) {
      KappaExpression e = expr();
      ts_.expect(Tok::RParen, "')'");
      return e;
    }
    ts_.fail("expected a rational, a kappa symbol, or '('");
  }

  TokenStream ts_;
};

}  // namespace

KappaExpression parse_kappa(std::string_view text) { return KappaParser(text).parse(); }

}  // namespace gradus
