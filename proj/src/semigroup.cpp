#include "prdual/semigroup.hpp"

#include <algorithm>
#include <sstream>

#include "prdual/errors.hpp"

namespace prdual {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

long parse_positive(std::string_view s, std::string_view literal) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError("bad semigroup literal '" + std::string(literal) + "'");
  const long d = std::stol(std::string(s));
  if (d < 1) throw ParseError("semigroup multiplier must be >= 1 in '" + std::string(literal) + "'");
  return d;
}

// Numerical-semigroup style check: is target a nonnegative combination, not
// all zero, of the given positive integer generators?
bool representable(const mpz_class& target, const std::vector<mpz_class>& gens) {
  if (target <= 0) return false;
  if (!target.fits_ulong_p() || target > 50'000'000)
    throw SizeError("generated-semigroup membership target too large");
  const unsigned long n = target.get_ui();
  std::vector<char> ok(n + 1, 0);
  ok[0] = 1;
  for (unsigned long t = 1; t <= n; ++t)
    for (const auto& g : gens)
      if (g.fits_ulong_p() && g.get_ui() <= t && ok[t - g.get_ui()]) {
        ok[t] = 1;
        break;
      }
  return ok[n] != 0;
}

}  // namespace

SemigroupSpec SemigroupSpec::multiples(long d) {
  if (d < 1) throw std::invalid_argument("dZ requires d >= 1");
  SemigroupSpec s(Kind::MultZ);
  s.d_ = d;
  return s;
}

SemigroupSpec SemigroupSpec::positive_multiples(long d) {
  if (d < 1) throw std::invalid_argument("dN requires d >= 1");
  SemigroupSpec s(Kind::MultN);
  s.d_ = d;
  return s;
}

SemigroupSpec SemigroupSpec::generated(std::vector<Rational> generators) {
  if (generators.empty()) throw std::invalid_argument("generated semigroup needs a generator");
  for (const auto& g : generators)
    if (g.sign() <= 0) throw std::invalid_argument("generators must be positive rationals");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  SemigroupSpec s(Kind::Generated);
  s.gens_ = std::move(generators);
  return s;
}

SemigroupSpec SemigroupSpec::group_of(const SemigroupSpec& base) {
  SemigroupSpec s(Kind::GroupOf);
  s.base_ = std::make_shared<const SemigroupSpec>(base);
  return s;
}

SemigroupSpec SemigroupSpec::parse(std::string_view literal) {
  const std::string t = trim(literal);
  if (t == "Q") return rationals();
  if (t == "Q+") return positive_rationals();
  if (t == "Z") return integers();
  if (t == "N") return naturals();
  auto wrapped = [&](std::string_view head) -> std::optional<std::string> {
    if (t.size() > head.size() + 1 && t.compare(0, head.size(), head) == 0 && t[head.size()] == '(' &&
        t.back() == ')')
      return t.substr(head.size() + 1, t.size() - head.size() - 2);
    return std::nullopt;
  };
  if (auto inner = wrapped("group")) return group_of(parse(*inner));
  if (auto inner = wrapped("gen")) {
    std::vector<Rational> gens;
    std::stringstream ss(*inner);
    std::string item;
    while (std::getline(ss, item, ',')) gens.push_back(Rational::parse(trim(item)));
    try {
      return generated(std::move(gens));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + " in '" + t + "'");
    }
  }
  if (t.size() >= 2 && (t.back() == 'Z' || t.back() == 'N')) {
    const long d = parse_positive(std::string_view(t).substr(0, t.size() - 1), literal);
    return t.back() == 'Z' ? multiples(d) : positive_multiples(d);
  }
  throw ParseError("bad semigroup literal '" + t + "'");
}

Rational SemigroupSpec::group_generator() const {
  switch (kind_) {
    case Kind::Z:
    case Kind::N:
      return 1;
    case Kind::MultZ:
    case Kind::MultN:
      return Rational(d_);
    case Kind::Generated: {
      // gcd of rationals a_i/b_i = gcd(a_i * L/b_i) / L with L = lcm(b_i)
      mpz_class l = 1;
      for (const auto& g : gens_) l = lcm(l, g.den());
      mpz_class g0 = 0;
      for (const auto& g : gens_) g0 = gcd(g0, g.num() * (l / g.den()));
      return Rational(g0, l);
    }
    case Kind::GroupOf:
      return base_->group_generator();
    default:
      return 0;  // Q and Q+ generate Q, which is not cyclic
  }
}

bool SemigroupSpec::contains(const Rational& x) const {
  switch (kind_) {
    case Kind::Q:
      return true;
    case Kind::QPlus:
      return x.sign() > 0;
    case Kind::Z:
      return x.is_integer();
    case Kind::N:
      return x.is_integer() && x.sign() > 0;
    case Kind::MultZ:
      return x.is_integer() && mpz_divisible_p(x.num().get_mpz_t(), d_.get_mpz_t());
    case Kind::MultN:
      return x.is_integer() && x.sign() > 0 && mpz_divisible_p(x.num().get_mpz_t(), d_.get_mpz_t());
    case Kind::Generated: {
      if (x.sign() <= 0) return false;
      mpz_class l = x.den();
      for (const auto& g : gens_) l = lcm(l, g.den());
      std::vector<mpz_class> ints;
      for (const auto& g : gens_) ints.push_back(g.num() * (l / g.den()));
      return representable(x.num() * (l / x.den()), ints);
    }
    case Kind::GroupOf: {
      if (base_->kind() == Kind::Q || base_->kind() == Kind::QPlus) return true;
      const Rational q = x / group_generator();
      return q.is_integer();
    }
  }
  return false;
}

bool SemigroupSpec::is_group() const {
  return kind_ == Kind::Q || kind_ == Kind::Z || kind_ == Kind::MultZ || kind_ == Kind::GroupOf;
}

std::optional<mpz_class> SemigroupSpec::min_positive_integer() const {
  switch (kind_) {
    case Kind::Q:
    case Kind::QPlus:
    case Kind::Z:
    case Kind::N:
      return mpz_class(1);
    case Kind::MultZ:
    case Kind::MultN:
      return d_;
    case Kind::Generated: {
      // num(g) = den(g) * g lies in S, so the search is bounded by it.
      mpz_class bound = gens_.front().num();
      for (mpz_class n = 1; n <= bound; ++n)
        if (contains(Rational(n))) return n;
      return bound;
    }
    case Kind::GroupOf: {
      if (base_->kind() == Kind::Q || base_->kind() == Kind::QPlus) return mpz_class(1);
      // n in gZ with g = a/b reduced  <=>  a | n
      return group_generator().num();
    }
  }
  return std::nullopt;
}

SemigroupSpec SemigroupSpec::group() const {
  switch (kind_) {
    case Kind::Q:
    case Kind::Z:
    case Kind::MultZ:
    case Kind::GroupOf:
      return *this;
    case Kind::QPlus:
      return rationals();
    case Kind::N:
      return integers();
    case Kind::MultN:
      return multiples(d_.get_si());
    case Kind::Generated:
      return group_of(*this);
  }
  return *this;
}

std::string SemigroupSpec::str() const {
  switch (kind_) {
    case Kind::Q:
      return "Q";
    case Kind::QPlus:
      return "Q+";
    case Kind::Z:
      return "Z";
    case Kind::N:
      return "N";
    case Kind::MultZ:
      return d_.get_str() + "Z";
    case Kind::MultN:
      return d_.get_str() + "N";
    case Kind::Generated: {
      std::string s = "gen(";
      for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + gens_[i].str();
      return s + ")";
    }
    case Kind::GroupOf:
      return "group(" + base_->str() + ")";
  }
  return "?";
}

bool membership(const SemigroupSpec& s, const Rational& x) { return s.contains(x); }

}  // namespace prdual
