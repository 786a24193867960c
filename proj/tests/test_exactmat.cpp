#include <doctest.h>

#include <sstream>

#include "prdual/errors.hpp"
#include "prdual/linalg.hpp"
#include "prdual/qmat_io.hpp"
#include "reference.hpp"

using namespace prdual;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).den() == 1);
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2)).is_integer());
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("mat_mul") {
  CHECK(mat_mul(QMatrix::identity(2), QMatrix::identity(2)) == QMatrix::identity(2));
  CHECK(mat_mul(QMatrix{{1, 1, -1}}, QMatrix{{1, 0}, {0, 1}, {1, 1}}) == QMatrix{{0, 0}});
  CHECK(mat_mul(QMatrix{{1, 0}, {1, 1}}, QMatrix{{1}, {2}}) == QMatrix{{1}, {3}});
  CHECK_THROWS_AS(mat_mul(QMatrix(2, 3), QMatrix(2, 3)), DimensionError);
}

TEST_CASE("rref") {
  auto r = rref(QMatrix{{2, 4}, {1, 2}});
  CHECK(r.rank() == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(rref(QMatrix(3, 3)).rank() == 0);
  auto ap = rref(QMatrix{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  CHECK(ap.rank() == 2);
  CHECK(ap.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("kernel_basis") {
  const auto k = kernel_basis(QMatrix{{1, 1, -1}});
  REQUIRE(k.size() == 2);
  CHECK(k[0] == QVector{-1, 1, 0});
  CHECK(k[1] == QVector{1, 0, 1});
  CHECK(kernel_basis(QMatrix{{1, 2}, {3, 4}}).empty());
  const auto z = kernel_basis(QMatrix(1, 3));
  REQUIRE(z.size() == 3);
  CHECK(z[0] == QVector{1, 0, 0});
  CHECK(z[2] == QVector{0, 0, 1});
}

TEST_CASE("solve_linear") {
  CHECK(solve_linear(QMatrix{{1, 0}, {0, 2}, {1, 2}}, QVector{1, 2, 3}) == QVector{1, 1});
  CHECK(solve_linear(QMatrix::identity(3), QVector{1, 2, 3}) == QVector{1, 2, 3});
  CHECK_FALSE(solve_linear(QMatrix{{1}, {1}}, QVector{1, 2}).has_value());
}

TEST_CASE("solve_row_constraints") {
  std::vector<QVector> rows{{1, 0, 1}, {0, 1, 1}};
  CHECK(solve_row_constraints(rows, QVector{2, 3}) == QVector{2, 3, 0});
  std::vector<QVector> basis{{1, 0}, {0, 1}};
  CHECK(solve_row_constraints(basis, QVector{5, 7}) == QVector{5, 7});
  std::vector<QVector> single{{2, 0}};
  CHECK(solve_row_constraints(single, QVector{1}) == QVector{Rational(1, 2), 0});
  std::vector<QVector> dependent{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(solve_row_constraints(dependent, QVector{1, 2}), IndependenceError);
}

TEST_CASE("det") {
  CHECK(det(QMatrix::identity(4)) == Rational(1));
  CHECK(det(QMatrix{{1, 0}, {1, -1}}) == Rational(-1));
  CHECK(det(QMatrix{{2, 0}, {0, 3}}) == Rational(6));
  CHECK(det(QMatrix{{Rational(1, 2), 1}, {1, Rational(1, 3)}}) == Rational(-5, 6));
  CHECK_THROWS_AS(det(QMatrix(2, 3)), DimensionError);
}

TEST_CASE("inverse") {
  const QMatrix a{{2, 1}, {1, 1}};
  CHECK(mat_mul(a, inverse(a)) == QMatrix::identity(2));
  CHECK_THROWS_AS(inverse(QMatrix{{1, 2}, {2, 4}}), SingularError);
}

TEST_CASE("qmat format") {
  const QMatrix m{{1, Rational(-2, 3)}, {0, 5}};
  CHECK(format_qmat(m) == "2 2\n1 -2/3\n0 5\n");
  CHECK(parse_qmat(format_qmat(m)) == m);
  CHECK(parse_qmat("# comment\n\n1 3\n1 1 -1\n") == QMatrix{{1, 1, -1}});
  CHECK(parse_qmat("2 0\n").rows() == 2);
  CHECK_THROWS_AS(parse_qmat("1 2\n1 1/0\n"), ParseError);
  CHECK_THROWS_AS(parse_qmat("2 2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_qmat("1 2\n1 2 3\n"), ParseError);
}

TEST_CASE("properties against reference implementations") {
  ref::Gen g(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto u = static_cast<std::size_t>(g.integer(1, 4));
    const auto v = static_cast<std::size_t>(g.integer(1, 4));
    QMatrix a = g.matrix(u, v, 3, 2);
    if (trial % 3 == 0 && u > 1) {
      for (std::size_t k = 0; k < v; ++k) a(u - 1, k) = a(0, k) * Rational(2);
    }
    CHECK(rank(a) == ref::minor_rank(a));
    const auto kb = kernel_basis(a);
    CHECK(rank(a) + kb.size() == v);
    for (const auto& x : kb) CHECK(is_zero(mat_vec(a, x)));

    const QMatrix b = g.matrix(v, 3);
    const QVector x = g.vector(3);
    CHECK(mat_vec(mat_mul(a, b), x) == mat_vec(a, mat_vec(b, x)));

    const QVector target = g.vector(u);
    if (auto sol = solve_linear(a, target)) {
      CHECK(mat_vec(a, *sol) == target);
    } else {
      CHECK(ref::minor_rank(a) < u);
    }

    const QMatrix s = g.matrix(v, v, 4, 3);
    const QMatrix t = g.matrix(v, v, 4, 3);
    CHECK(det(s) == ref::leibniz_det(s));
    CHECK(det(mat_mul(s, t)) == det(s) * det(t));
  }
}
