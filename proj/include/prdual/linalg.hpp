#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "prdual/matrix.hpp"

namespace prdual {

/// Reduced row echelon form over Q. `pivots` are increasing column indices;
/// row k of `reduced` has its leading 1 in column pivots[k].
struct Rref {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Rref rref(const QMatrix& a);
std::size_t rank(const QMatrix& a);

/// Free-variable basis of K(A) read off the RREF: one vector per non-pivot
/// column f, with entry f equal to 1 and the other free entries 0.
std::vector<QVector> kernel_basis(const QMatrix& a);

/// Some x with Ax = b (free variables zero), or nullopt when inconsistent.
std::optional<QVector> solve_linear(const QMatrix& a, std::span<const Rational> b);

/// x with r_i . x = y_i for every given row. Throws IndependenceError when
/// the rows are linearly dependent.
QVector solve_row_constraints(std::span<const QVector> rows, std::span<const Rational> targets);

/// Greedy smallest-index maximal set of linearly independent rows.
std::vector<std::size_t> independent_rows(const QMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational det(const QMatrix& a);

/// Throws SingularError for singular input.
QMatrix inverse(const QMatrix& a);

/// True iff x lies in the column space of A.
bool in_column_space(const QMatrix& a, std::span<const Rational> x);

}  // namespace prdual
