#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prdual/rational.hpp"

namespace prdual {

/// A finitely described subsemigroup S of (Q,+) with decidable membership.
///
/// Literals: "Q", "Q+", "Z", "N" (positive integers), "dZ" / "dN" for an
/// integer d >= 1 (e.g. "2Z", "3N"), "gen(g1,...,gk)" for the semigroup
/// generated by positive rationals, and "group(S)" for the group S - S.
class SemigroupSpec {
public:
  enum class Kind { Q, QPlus, Z, N, MultZ, MultN, Generated, GroupOf };

  static SemigroupSpec rationals() { return SemigroupSpec(Kind::Q); }
  static SemigroupSpec positive_rationals() { return SemigroupSpec(Kind::QPlus); }
  static SemigroupSpec integers() { return SemigroupSpec(Kind::Z); }
  static SemigroupSpec naturals() { return SemigroupSpec(Kind::N); }
  static SemigroupSpec multiples(long d);           // dZ
  static SemigroupSpec positive_multiples(long d);  // dN
  static SemigroupSpec generated(std::vector<Rational> generators);
  static SemigroupSpec group_of(const SemigroupSpec& s);
  static SemigroupSpec parse(std::string_view literal);

  Kind kind() const { return kind_; }
  const mpz_class& modulus() const { return d_; }
  const std::vector<Rational>& generators() const { return gens_; }
  const SemigroupSpec* base() const { return base_.get(); }

  bool contains(const Rational& x) const;
  /// True when S is closed under negation (Q, Z, dZ, group(...)).
  bool is_group() const;
  /// min(S n N); nullopt only if S contains no positive integer.
  std::optional<mpz_class> min_positive_integer() const;
  /// The group G = S - S generated by S.
  SemigroupSpec group() const;

  std::string str() const;

private:
  explicit SemigroupSpec(Kind k) : kind_(k) {}

  // gZ for the rational g generating group(...) of a generated semigroup,
  // or dZ for group(dN), group(N), ...; kind Q for group(Q+).
  Rational group_generator() const;

  Kind kind_;
  mpz_class d_ = 1;
  std::vector<Rational> gens_;
  std::shared_ptr<const SemigroupSpec> base_;
};

bool membership(const SemigroupSpec& s, const Rational& x);

}  // namespace prdual
