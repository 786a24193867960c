#include "prdual/linalg.hpp"

#include "prdual/errors.hpp"

namespace prdual {

Rref rref(const QMatrix& a) {
  Rref out{a, {}};
  QMatrix& m = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const QMatrix& a) { return rref(a).rank(); }

std::vector<QVector> kernel_basis(const QMatrix& a) {
  const Rref e = rref(a);
  const std::size_t v = a.cols();
  std::vector<bool> is_pivot(v, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t f = 0; f < v; ++f) {
    if (is_pivot[f]) continue;
    QVector x(v);
    x[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<QVector> solve_linear(const QMatrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw DimensionError("solve_linear: rhs dimension mismatch");
  const std::size_t v = a.cols();
  QMatrix aug(a.rows(), v + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < v; ++j) aug(i, j) = a(i, j);
    aug(i, v) = b[i];
  }
  const Rref e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == v) return std::nullopt;
  QVector x(v);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, v);
  return x;
}

QVector solve_row_constraints(std::span<const QVector> rows, std::span<const Rational> targets) {
  if (rows.size() != targets.size())
    throw DimensionError("solve_row_constraints: row/target count mismatch");
  if (rows.empty()) return {};
  const QMatrix m = QMatrix::from_rows(rows, rows.front().size());
  if (rank(m) != rows.size()) throw IndependenceError("constraint rows are linearly dependent");
  auto x = solve_linear(m, targets);
  // full row rank => always consistent
  return *x;
}

std::vector<std::size_t> independent_rows(const QMatrix& a) { return rref(a.transpose()).pivots; }

Rational det(const QMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("det of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  // Clear denominators row by row so elimination runs over Z.
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  mpz_class row_scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, a(i, j).den());
    row_scale *= l;
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).num() * (l / a(i, j).den());
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return Rational(m[n - 1][n - 1] * sign, row_scale);
}

QMatrix inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const Rref e = rref(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw SingularError("matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

bool in_column_space(const QMatrix& a, std::span<const Rational> x) {
  return solve_linear(a, x).has_value();
}

}  // namespace prdual
