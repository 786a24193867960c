#include "prdual/transfer.hpp"

#include <algorithm>
#include <numeric>

#include "prdual/duality.hpp"
#include "prdual/errors.hpp"
#include "prdual/linalg.hpp"

namespace prdual {

DeuberBlock deuber_block(const QMatrix& bp, const Rational& c, const ColumnsCertificate& cert) {
  if (c.is_zero()) throw std::invalid_argument("deuber_block: c must be nonzero");
  if (!verify_cc_certificate(bp, cert)) throw BadCertificate("certificate does not verify for B'");

  const std::size_t j = bp.rows(), u = bp.cols();
  QMatrix d(j + u, 3 * u);
  for (std::size_t i = 0; i < j; ++i)
    for (std::size_t k = 0; k < u; ++k) d(i, k) = bp(i, k);
  for (std::size_t i = 0; i < u; ++i) {
    d(j + i, i) = 1;
    d(j + i, u + i) = c;
    d(j + i, 2 * u + i) = -c;
  }

  // The c and -c columns cancel in pairs, so they form the first block; the
  // blocks of B' follow in their original order.
  std::vector<std::vector<std::size_t>> lifted;
  lifted.emplace_back(2 * u);
  std::iota(lifted.back().begin(), lifted.back().end(), u);
  lifted.insert(lifted.end(), cert.partition.begin(), cert.partition.end());

  auto lifted_cert = certify_partition(d, lifted);
  if (!lifted_cert || !verify_cc_certificate(d, *lifted_cert))
    throw std::logic_error("lifted partition fails the columns condition");
  return {std::move(d), c, cert, std::move(*lifted_cert)};
}

ContainmentResult imgcontained_build(const QMatrix& a, const SemigroupSpec& s) {
  if (!s.is_group()) throw ScaleError("image containment needs a subgroup of Q, got " + s.str());
  if (independent_rows(a).size() == a.rows()) throw DependencyError("rows of A are linearly independent");

  ContainmentMeta meta;
  meta.source_cols = a.cols();

  // Smallest d, a multiple of the common denominator, with dA inside S n Z.
  mpz_class den = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) den = lcm(den, a(i, k).den());
  const auto min_int = s.min_positive_integer();
  if (!min_int) throw ScaleError("S contains no positive integer");
  std::optional<mpz_class> scale;
  for (mpz_class k = 1; k <= *min_int && !scale; ++k) {
    const Rational d(mpz_class(den * k));
    bool inside = true;
    for (std::size_t i = 0; i < a.rows() && inside; ++i)
      for (std::size_t t = 0; t < a.cols() && inside; ++t) inside = s.contains(a(i, t) * d);
    if (inside) scale = den * k;
  }
  if (!scale) throw ScaleError("no scaling puts the entries of A into " + s.str());
  meta.scale = Rational(*scale);
  const QMatrix scaled = prdual::scale(a, meta.scale);

  // Independent rows first, then a pivot set of columns for them.
  const auto rows_l = independent_rows(scaled);
  meta.rank = rows_l.size();
  const auto cols_l = rref(scaled.select_rows(rows_l)).pivots;
  auto complete_order = [](std::vector<std::size_t> head, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (auto i : head) seen[i] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen[i]) head.push_back(i);
    return head;
  };
  meta.row_order = complete_order(rows_l, a.rows());
  meta.col_order = complete_order(cols_l, a.cols());
  const QMatrix arranged = scaled.select_rows(meta.row_order).select_cols(meta.col_order);

  std::vector<std::size_t> head(meta.rank);
  std::iota(head.begin(), head.end(), 0);
  meta.corner = arranged.select_rows(head).select_cols(head);
  meta.c = det(meta.corner).abs();

  // With the independent rows on top, the greedy dependency set is exactly
  // {0..l-1}, so B is already B' (rows l..u-1).
  const DependencyResult dep = row_dependency(arranged);
  auto cert = columns_condition(dep.B);
  if (!cert) throw BadCertificate("dependency matrix fails the columns condition; A is not weakly image partition regular");
  return {deuber_block(dep.B, meta.c, *cert), std::move(meta)};
}

RecoveredImage imgcontained_recover(const DeuberBlock& block, const QVector& s, const ContainmentMeta& meta) {
  const std::size_t u = block.D.cols() / 3;
  if (s.size() != 3 * u) throw DimensionError("kernel element has the wrong dimension");
  if (!is_zero(mat_vec(block.D, s))) throw KernelError("s is not in the kernel of D");

  // s = (x, r); x_i = c (r_{u+i} - r_i)
  QVector z(meta.rank);
  for (std::size_t i = 0; i < meta.rank; ++i) z[i] = s[2 * u + i] - s[u + i];
  const auto w = solve_linear(meta.corner, z);
  if (!w) throw SingularError("corner block is singular");

  QVector arranged_y(meta.source_cols);
  for (std::size_t i = 0; i < meta.rank; ++i) arranged_y[i] = meta.c * (*w)[i];

  RecoveredImage out{QVector(meta.source_cols), QVector(u)};
  for (std::size_t k = 0; k < meta.source_cols; ++k) out.y[meta.col_order[k]] = arranged_y[k] * meta.scale;
  for (std::size_t k = 0; k < u; ++k) out.x[meta.row_order[k]] = s[k];
  return out;
}

SignAdapter sign_adapter(const QMatrix& a, const SignPattern& pattern) {
  const std::size_t v = a.cols();
  if (pattern.signs.size() != v) throw DimensionError("sign pattern length differs from column count");
  for (int s : pattern.signs)
    if (s < -1 || s > 1) throw std::invalid_argument("sign pattern entries must be -1, 0 or 1");
  const auto lead = std::find_if(pattern.signs.begin(), pattern.signs.end(), [](int s) { return s != 0; });
  if (lead == pattern.signs.end()) throw ZeroPattern("sign pattern is all zero");

  SignAdapter out;
  out.col_order.resize(v);
  std::iota(out.col_order.begin(), out.col_order.end(), 0);
  std::swap(out.col_order[0], out.col_order[lead - pattern.signs.begin()]);
  for (auto k : out.col_order) out.signs.push_back(pattern.signs[k]);
  out.permuted = a.select_cols(out.col_order);

  out.E = QMatrix(v, v);
  for (std::size_t j = 0; j < v; ++j) out.E(j, 0) = out.signs[0];
  for (std::size_t j = 1; j < v; ++j) out.E(j, j) = out.signs[j] >= 0 ? 1 : -1;
  out.E_inv = inverse(out.E);
  out.C = mat_mul(out.permuted, out.E_inv);
  return out;
}

}  // namespace prdual
