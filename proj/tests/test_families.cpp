#include <doctest.h>

#include "prdual/duality.hpp"
#include "prdual/errors.hpp"
#include "prdual/families.hpp"
#include "prdual/linalg.hpp"
#include "reference.hpp"

using namespace prdual;

TEST_CASE("ap_matrix") {
  CHECK(ap_matrix({2, 4}) == QMatrix{{1, 0}, {1, 2}, {1, 4}, {1, 6}});
  CHECK(ap_matrix({1, 4}) == QMatrix{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  CHECK(ap_matrix({3, 1}) == QMatrix{{1, 0}});
}

TEST_CASE("ap_integer_C") {
  CHECK(ap_integer_C(2, 3) == QMatrix{{1, -1}, {-1, 3}, {-3, 7}});
  const QMatrix a = ap_matrix({2, 6});
  const QMatrix c = ap_integer_C(2, 6);
  CHECK(mat_vec(a, QVector{1, 1}) == QVector{1, 3, 5, 7, 9, 11});
  CHECK(mat_vec(c, QVector{3, 2}) == mat_vec(a, QVector{1, 1}));
  CHECK(mat_vec(c, QVector{2, 1}) == QVector(6, Rational(1)));
  CHECK_THROWS_AS(ap_integer_C(1, 3), std::invalid_argument);
  // Converse direction: A(u - v, 2v - u) = C(u, v).
  for (long u = 1; u <= 6; ++u)
    for (long v = 1; v <= 6; ++v) CHECK(mat_vec(a, QVector{u - v, 2 * v - u}) == mat_vec(c, QVector{u, v}));

  ref::Gen g(8);
  for (int trial = 0; trial < 50; ++trial) {
    const long d = g.integer(2, 6);
    const Rational x = g.rational(20, 7), y = g.rational(20, 7);
    CHECK(mat_vec(ap_matrix({d, 64}), QVector{x, y}) == mat_vec(ap_integer_C(d, 64), QVector{2 * x + y, x + y}));
  }
}

TEST_CASE("ap_projector_pair") {
  const QMatrix printed_c{{1, 0}, {0, 1}, {-1, 2}, {-2, 3}, {-3, 4}};
  const QMatrix printed_b{{-1, 2, -1, 0, 0}, {-2, 3, 0, -1, 0}, {-3, 4, 0, 0, -1}};
  const auto p = ap_projector_pair(2, 5);
  CHECK(p.C == printed_c);
  CHECK(p.B == printed_b);
  CHECK(p.failure_x == QVector{1, Rational(1, 2)});
  CHECK(p.failure_rhs == QVector{1, 2, 3, 4, 5});

  for (std::size_t u = 5; u <= 12; ++u) {
    const auto q = ap_projector_pair(2, u);
    for (std::size_t l = 0; l < u; ++l) {
      const long ll = static_cast<long>(l);
      CHECK(q.C(l, 0) == Rational(l == 1 ? 0 : 1 - ll));
      CHECK(q.C(l, 1) == Rational(ll));
    }
    for (std::size_t t = 0; t + 2 < u; ++t) {
      const long tt = static_cast<long>(t);
      CHECK(q.B(t, 0) == Rational(-(tt + 1)));
      CHECK(q.B(t, 1) == Rational(tt + 2));
      for (std::size_t k = 2; k < u; ++k) CHECK(q.B(t, k) == Rational(k == t + 2 ? -1 : 0));
    }
  }
  CHECK(ap_projector_pair(1, 4).B == QMatrix{{-1, 2, -1, 0}, {-2, 3, 0, -1}});
  CHECK(ap_projector_pair(3, 5).failure_x == QVector{1, Rational(1, 3)});
  CHECK_THROWS_AS(ap_projector_pair(2, 2), std::invalid_argument);
}

TEST_CASE("check_notG") {
  const auto even = check_notG(SemigroupSpec::multiples(2));
  CHECK(even.branch == 1);
  CHECK(even.d == 2);
  CHECK(even.A == QMatrix{{2, 0}, {0, 2}, {2, 2}});
  CHECK(even.probe_image == QVector{4, 4, 8});
  CHECK(even.witness == QVector{1, 1});
  CHECK(even.confirmed());
  CHECK_FALSE(membership(SemigroupSpec::multiples(2), even.witness[0]));

  const auto z = check_notG(SemigroupSpec::integers());
  CHECK(z.branch == 2);
  CHECK(z.d == 2);
  CHECK(z.A == QMatrix{{0, 1}, {2, 1}, {2, 2}});
  CHECK(z.probe_image == QVector{2, 4, 6});
  CHECK(z.witness == QVector{Rational(1, 2), 1});
  CHECK(z.confirmed());
  CHECK_FALSE(membership(SemigroupSpec::integers(), z.witness[0]));

  CHECK(check_notG(SemigroupSpec::parse("gen(2,3)")).d == 2);
  CHECK(check_notG(SemigroupSpec::parse("gen(2,3)")).confirmed());
  CHECK(check_notG(SemigroupSpec::positive_multiples(5)).d == 5);
  const auto halves = check_notG(SemigroupSpec::parse("group(gen(1/2))"));
  CHECK(halves.branch == 2);
  CHECK(halves.d == 3);
  CHECK(halves.confirmed());

  CHECK_THROWS_AS(check_notG(SemigroupSpec::positive_rationals()), SpecError);
  CHECK_THROWS_AS(check_notG(SemigroupSpec::rationals()), SpecError);
  CHECK_THROWS_AS(check_notG(SemigroupSpec::parse("group(Q+)")), SpecError);
}

TEST_CASE("verify_kcl") {
  QMatrix c(6, 2);
  for (std::size_t l = 0; l < 6; ++l) {
    c(l, 0) = static_cast<long>(l);
    c(l, 1) = 1 - static_cast<long>(l);
  }
  CHECK(verify_kcl(KclInstance(2, 1, 1, 1, 1, 0, 2, c)));
  for (std::size_t l = 0; l < 6; ++l) CHECK(c(l, 0) + c(l, 1) == Rational(1));

  QMatrix perturbed = c;
  perturbed(0, 0) = 1;
  CHECK_FALSE(verify_kcl(KclInstance(2, 1, 1, 1, 1, 0, 2, perturbed)));
  CHECK_FALSE(verify_kcl(KclInstance(2, 1, 1, 1, 1, 0, 3, c)));

  CHECK_THROWS_AS(KclInstance(2, 1, 1, 1, 1, 1, 0, c), std::invalid_argument);
  CHECK_THROWS_AS(KclInstance(2, 1, 0, 1, 1, 0, 2, c), std::invalid_argument);
  CHECK_THROWS_AS(KclInstance(2, 1, 1, 1, 1, 0, 2, QMatrix(3, 3)), DimensionError);
}
