#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "prdual/rational.hpp"

namespace prdual {

using QVector = std::vector<Rational>;

/// Dense u x v rational matrix, row-major, 0-based a(i, j).
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  /// Row-wise literal; all rows must have the same length.
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(std::span<const QVector> rows, std::size_t cols);
  static QMatrix from_columns(std::span<const QVector> cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QVector col(std::size_t j) const;
  void swap_rows(std::size_t i, std::size_t k);

  QMatrix transpose() const;
  /// Rows picked in the given order.
  QMatrix select_rows(std::span<const std::size_t> idx) const;
  QMatrix select_cols(std::span<const std::size_t> idx) const;
  bool is_zero() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QVector mat_vec(const QMatrix& a, std::span<const Rational> x);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) { return mat_mul(a, b); }
inline QVector operator*(const QMatrix& a, const QVector& x) { return mat_vec(a, x); }
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix scale(const QMatrix& a, const Rational& s);

bool is_zero(std::span<const Rational> x);

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

}  // namespace prdual
