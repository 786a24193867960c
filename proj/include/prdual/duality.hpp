#pragma once

#include <cstddef>
#include <vector>

#include "prdual/matrix.hpp"

namespace prdual {

/// Idempotent projector onto K(B). T indexes the coordinates that are free
/// on the kernel; D is v x |T| with d_{i,j} expressing coordinate i in terms
/// of the coordinates in T. Columns of C outside T are zero.
struct ProjectorResult {
  QMatrix C;
  std::vector<std::size_t> T;
  QMatrix D;

  friend bool operator==(const ProjectorResult&, const ProjectorResult&) = default;
};

/// Row-dependency matrix: L indexes a maximal independent set of rows of A,
/// J the rest, and row k of B (|J| x u) encodes r_{J[k]} = sum_t b_t r_t.
struct DependencyResult {
  std::vector<std::size_t> L;
  std::vector<std::size_t> J;
  QMatrix B;

  friend bool operator==(const DependencyResult&, const DependencyResult&) = default;
};

/// u x 2v matrix with columns 2j = a_j and 2j+1 = -a_j.
QMatrix interleave(const QMatrix& a);
/// x_j = y_{2j} - y_{2j+1}.
QVector interleave_pull(const QVector& y);
/// y_{2j} = s_j + x_j, y_{2j+1} = s_j. Throws ShiftError if s_j or x_j + s_j is 0.
QVector interleave_push(const QVector& x, const QVector& shifts);

ProjectorResult kernel_projector(const QMatrix& b);

/// Throws IndependentRowsError when the rows of A are independent.
DependencyResult row_dependency(const QMatrix& a);

/// Matrix whose kernel is R(A); the u x u zero matrix if A has independent rows.
QMatrix image_to_kernel(const QMatrix& a);

/// Idempotent u x u matrix with the same column space as A.
QMatrix ipr_projector(const QMatrix& a);

/// The projector with its zero columns dropped (u x |T|).
QMatrix compress_projector(const ProjectorResult& p);

}  // namespace prdual
