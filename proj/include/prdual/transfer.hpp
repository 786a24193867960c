#pragma once

#include <cstddef>
#include <vector>

#include "prdual/matrix.hpp"
#include "prdual/rado.hpp"
#include "prdual/semigroup.hpp"

namespace prdual {

/// D = [[B', O, O], [I, cI, -cI]] with certificates for B' and for D.
struct DeuberBlock {
  QMatrix D;
  Rational c;
  ColumnsCertificate source_certificate;
  ColumnsCertificate lifted_certificate;
};

/// Throws BadCertificate if `cert` does not verify against `bp`.
DeuberBlock deuber_block(const QMatrix& bp, const Rational& c, const ColumnsCertificate& cert);

/// Bookkeeping for undoing the scaling and the row/column rearrangement.
struct ContainmentMeta {
  Rational scale;                       // d: entries of dA lie in S n Z
  std::vector<std::size_t> row_order;   // row k of the arranged matrix is row row_order[k] of A
  std::vector<std::size_t> col_order;   // likewise for columns
  std::size_t rank = 0;                 // l
  QMatrix corner;                       // invertible l x l top-left block A*
  Rational c;                           // |det(A*)|
  std::size_t source_cols = 0;          // v
};

struct ContainmentResult {
  DeuberBlock block;
  ContainmentMeta meta;
};

/// Builds the (j+u) x 3u kernel system whose nonzero kernel elements over S
/// contain an image of A. Requires dependent rows (DependencyError otherwise)
/// and a group spec S (ScaleError otherwise).
ContainmentResult imgcontained_build(const QMatrix& a, const SemigroupSpec& s);

struct RecoveredImage {
  QVector y;  // A y = x
  QVector x;  // the first u entries of s, in the row order of A
};

/// Recovers y from a kernel element s of D. Throws KernelError if Ds != 0.
RecoveredImage imgcontained_recover(const DeuberBlock& block, const QVector& s, const ContainmentMeta& meta);

/// Signs in {-1, 0, 1}, not all zero.
struct SignPattern {
  std::vector<int> signs;
};

struct SignAdapter {
  std::vector<std::size_t> col_order;  // column k of `permuted` is column col_order[k] of A
  std::vector<int> signs;              // pattern after the permutation; signs[0] != 0
  QMatrix permuted;                    // A with columns rearranged
  QMatrix E;
  QMatrix E_inv;
  QMatrix C;                           // permuted * E^{-1}, so C E = permuted
};

/// Lower-triangular E with first column a_0 and diagonal +-1 by the sign of
/// a_j, so that E x > 0 entrywise whenever sgn(x) = a. If a_0 = 0 the first
/// nonzero column is swapped to the front. Throws ZeroPattern if a = 0.
SignAdapter sign_adapter(const QMatrix& a, const SignPattern& pattern);

}  // namespace prdual
