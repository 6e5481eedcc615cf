#include "gradus/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "gradus/errors.hpp"

namespace gradus {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::inv() const {
  if (is_zero()) throw Error("division by zero");
  return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error("malformed rational literal '" + text + "'");
  if (sgn(q.get_den()) == 0) throw Error("rational with zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::pow(const Rational& base, unsigned long e) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.den().get_mpz_t(), e);
  // num/den are already coprime, so the powers are too
  return Rational(std::move(r));
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gradus
