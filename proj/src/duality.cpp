#include "prdual/duality.hpp"

#include "prdual/errors.hpp"
#include "prdual/linalg.hpp"

namespace prdual {

QMatrix interleave(const QMatrix& a) {
  QMatrix c(a.rows(), 2 * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, 2 * j) = a(i, j);
      c(i, 2 * j + 1) = -a(i, j);
    }
  return c;
}

QVector interleave_pull(const QVector& y) {
  if (y.size() % 2 != 0) throw DimensionError("interleave_pull: odd dimension");
  QVector x(y.size() / 2);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = y[2 * j] - y[2 * j + 1];
  return x;
}

QVector interleave_push(const QVector& x, const QVector& shifts) {
  if (x.size() != shifts.size()) throw DimensionError("interleave_push: shift count mismatch");
  QVector y(2 * x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (shifts[j].is_zero()) throw ShiftError("shift " + std::to_string(j) + " is zero");
    y[2 * j] = shifts[j] + x[j];
    if (y[2 * j].is_zero()) throw ShiftError("x_" + std::to_string(j) + " + s_" + std::to_string(j) + " is zero");
    y[2 * j + 1] = shifts[j];
  }
  return y;
}

ProjectorResult kernel_projector(const QMatrix& b) {
  const std::size_t v = b.cols();
  const auto basis = kernel_basis(b);
  if (basis.empty()) return {QMatrix(v, v), {}, QMatrix(v, 0)};

  // Row i of N is the coordinate functional x -> x_i restricted to K(B).
  const QMatrix n = QMatrix::from_columns(basis, v);
  ProjectorResult out;
  out.T = independent_rows(n);
  // Rows of N outside T are combinations of the rows in T: D = N * N_T^{-1}.
  out.D = mat_mul(n, inverse(n.select_rows(out.T)));
  out.C = QMatrix(v, v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t k = 0; k < out.T.size(); ++k) out.C(i, out.T[k]) = out.D(i, k);
  return out;
}

DependencyResult row_dependency(const QMatrix& a) {
  const std::size_t u = a.rows();
  DependencyResult out;
  out.L = independent_rows(a);
  if (out.L.size() == u) throw IndependentRowsError("rows of A are linearly independent");

  std::vector<bool> in_l(u, false);
  for (auto i : out.L) in_l[i] = true;
  for (std::size_t i = 0; i < u; ++i)
    if (!in_l[i]) out.J.push_back(i);

  // Columns of basis_t are the independent rows; solving gives coefficients.
  const QMatrix basis_t = a.select_rows(out.L).transpose();
  out.B = QMatrix(out.J.size(), u);
  for (std::size_t k = 0; k < out.J.size(); ++k) {
    const auto coef = solve_linear(basis_t, a.row(out.J[k]));
    if (!coef) throw std::logic_error("row outside the span of a maximal independent set");
    for (std::size_t t = 0; t < out.L.size(); ++t) out.B(k, out.L[t]) = (*coef)[t];
    out.B(k, out.J[k]) = -1;
  }
  return out;
}

QMatrix image_to_kernel(const QMatrix& a) {
  if (independent_rows(a).size() == a.rows()) return QMatrix(a.rows(), a.rows());
  return row_dependency(a).B;
}

QMatrix ipr_projector(const QMatrix& a) {
  if (independent_rows(a).size() == a.rows()) return QMatrix::identity(a.rows());
  return kernel_projector(row_dependency(a).B).C;
}

QMatrix compress_projector(const ProjectorResult& p) { return p.D; }

}  // namespace prdual
