#include "prdual/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "prdual/errors.hpp"

namespace prdual {

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class p, q = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, p)) throw ParseError("bad rational '" + std::string(text) + "'");
  } else {
    const auto den = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), p) || den.empty() || den[0] == '-' ||
        den[0] == '+' || !parse_integer(den, q))
      throw ParseError("bad rational '" + std::string(text) + "'");
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(p, q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace prdual
