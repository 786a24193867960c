#include "prdual/rado.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>

#include "prdual/errors.hpp"
#include "prdual/linalg.hpp"

namespace prdual {

namespace {

using Block = std::vector<std::size_t>;

// Visits the nonempty subsets of `pool` (sorted) in lexicographic order of
// their sorted index lists, carrying the running column sum. Stops when the
// visitor returns true.
bool lex_subsets(const std::vector<QVector>& cols, const Block& pool,
                 const std::function<bool(const Block&, const QVector&)>& visit) {
  const std::size_t dim = cols.empty() ? 0 : cols.front().size();
  Block current;
  std::function<bool(std::size_t, const QVector&)> rec = [&](std::size_t start, const QVector& sum) {
    for (std::size_t k = start; k < pool.size(); ++k) {
      QVector next = sum;
      for (std::size_t r = 0; r < dim; ++r) next[r] += cols[pool[k]][r];
      current.push_back(pool[k]);
      if (visit(current, next) || rec(k + 1, next)) return true;
      current.pop_back();
    }
    return false;
  };
  return rec(0, QVector(dim));
}

// Membership in the span of a fixed set of vectors via their RREF.
class SpanTester {
public:
  SpanTester(const std::vector<QVector>& cols, const Block& idx, std::size_t dim) {
    std::vector<QVector> rows;
    for (auto i : idx) rows.push_back(cols[i]);
    auto e = rref(QMatrix::from_rows(rows, dim));
    basis_ = std::move(e.reduced);
    pivots_ = std::move(e.pivots);
  }

  bool contains(QVector x) const {
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const Rational f = x[pivots_[k]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (!basis_(k, j).is_zero()) x[j] -= f * basis_(k, j);
    }
    return is_zero(x);
  }

private:
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

std::vector<QVector> columns_of(const QMatrix& a) {
  std::vector<QVector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.col(j));
  return cols;
}

std::vector<Block> zero_sum_subsets(const std::vector<QVector>& cols) {
  Block all(cols.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  std::vector<Block> out;
  lex_subsets(cols, all, [&](const Block& s, const QVector& sum) {
    if (is_zero(sum)) out.push_back(s);
    return false;
  });
  return out;
}

// Once a first block is fixed, taking the first admissible block at every
// step never loses a completion: enlarging the placed set only enlarges the
// span, and the remaining blocks of any completion stay admissible after
// removing already-placed columns.
std::optional<std::vector<Block>> complete_greedily(const std::vector<QVector>& cols, const Block& first) {
  const std::size_t v = cols.size();
  const std::size_t dim = cols.empty() ? 0 : cols.front().size();
  std::vector<Block> blocks{first};
  std::vector<bool> used(v, false);
  for (auto i : first) used[i] = true;
  Block placed = first;

  while (placed.size() < v) {
    Block remaining;
    for (std::size_t j = 0; j < v; ++j)
      if (!used[j]) remaining.push_back(j);
    const SpanTester span(cols, placed, dim);
    Block chosen;
    lex_subsets(cols, remaining, [&](const Block& s, const QVector& sum) {
      if (!span.contains(sum)) return false;
      chosen = s;
      return true;
    });
    if (chosen.empty()) return std::nullopt;
    for (auto i : chosen) used[i] = true;
    placed.insert(placed.end(), chosen.begin(), chosen.end());
    std::sort(placed.begin(), placed.end());
    blocks.push_back(std::move(chosen));
  }
  return blocks;
}

void check_limits(const QMatrix& a, const SearchLimits& limits) {
  if (a.cols() > limits.max_columns)
    throw SizeError("columns condition search limited to " + std::to_string(limits.max_columns) +
                    " columns, matrix has " + std::to_string(a.cols()));
}

ColumnsCertificate with_witnesses(const QMatrix& a, std::vector<Block> blocks) {
  auto cert = certify_partition(a, blocks);
  if (!cert) throw std::logic_error("search produced a partition that fails the columns condition");
  return *cert;
}

}  // namespace

std::optional<ColumnsCertificate> columns_condition_serial(const QMatrix& a, SearchLimits limits) {
  check_limits(a, limits);
  const auto cols = columns_of(a);
  for (const auto& first : zero_sum_subsets(cols))
    if (auto blocks = complete_greedily(cols, first)) return with_witnesses(a, std::move(*blocks));
  return std::nullopt;
}

std::optional<ColumnsCertificate> columns_condition(const QMatrix& a, SearchLimits limits) {
  check_limits(a, limits);
  const auto cols = columns_of(a);
  const auto candidates = zero_sum_subsets(cols);
  const long n = static_cast<long>(candidates.size());

  std::atomic<long> best{std::numeric_limits<long>::max()};
  std::vector<std::optional<std::vector<Block>>> found(candidates.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < n; ++k) {
    if (k > best.load(std::memory_order_relaxed)) continue;
    found[k] = complete_greedily(cols, candidates[k]);
    if (found[k]) {
      long cur = best.load();
      while (k < cur && !best.compare_exchange_weak(cur, k)) {
      }
    }
  }

  const long k = best.load();
  if (k == std::numeric_limits<long>::max()) return std::nullopt;
  return with_witnesses(a, std::move(*found[k]));
}

std::optional<ColumnsCertificate> certify_partition(const QMatrix& a,
                                                    const std::vector<std::vector<std::size_t>>& partition) {
  ColumnsCertificate cert{partition, {}};
  if (!verify_cc_certificate(a, cert)) return std::nullopt;

  Block earlier;
  for (std::size_t t = 0; t < partition.size(); ++t) {
    if (t > 0) {
      QVector sum(a.rows());
      for (auto i : partition[t])
        for (std::size_t r = 0; r < a.rows(); ++r) sum[r] += a(r, i);
      auto coef = solve_linear(a.select_cols(earlier), sum);
      cert.witnesses.push_back({earlier, std::move(*coef)});
    }
    earlier.insert(earlier.end(), partition[t].begin(), partition[t].end());
    std::sort(earlier.begin(), earlier.end());
  }
  return cert;
}

bool verify_cc_certificate(const QMatrix& a, const ColumnsCertificate& cert) {
  const std::size_t v = a.cols();
  const auto& part = cert.partition;
  if (part.empty()) return false;

  std::vector<int> block_of(v, -1);
  for (std::size_t t = 0; t < part.size(); ++t) {
    if (part[t].empty()) return false;
    for (auto i : part[t]) {
      if (i >= v || block_of[i] != -1) return false;
      block_of[i] = static_cast<int>(t);
    }
  }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) return false;

  const bool with_witnesses = !cert.witnesses.empty();
  if (with_witnesses && cert.witnesses.size() + 1 != part.size()) return false;

  auto block_sum = [&](const Block& b) {
    QVector s(a.rows());
    for (auto i : b)
      for (std::size_t r = 0; r < a.rows(); ++r) s[r] += a(r, i);
    return s;
  };

  if (!is_zero(block_sum(part[0]))) return false;

  for (std::size_t t = 1; t < part.size(); ++t) {
    const QVector target = block_sum(part[t]);
    if (with_witnesses) {
      const Witness& w = cert.witnesses[t - 1];
      if (w.columns.size() != w.coefficients.size()) return false;
      QVector acc(a.rows());
      for (std::size_t k = 0; k < w.columns.size(); ++k) {
        const auto col = w.columns[k];
        if (col >= v || block_of[col] < 0 || static_cast<std::size_t>(block_of[col]) >= t) return false;
        for (std::size_t r = 0; r < a.rows(); ++r) acc[r] += w.coefficients[k] * a(r, col);
      }
      if (acc != target) return false;
    } else {
      Block earlier;
      for (std::size_t i = 0; i < v; ++i)
        if (static_cast<std::size_t>(block_of[i]) < t) earlier.push_back(i);
      if (!in_column_space(a.select_cols(earlier), target)) return false;
    }
  }
  return true;
}

bool kernel_partition_regular(const QMatrix& a, RadoDomain) { return columns_condition(a).has_value(); }

std::size_t mpc_row_count(const MpcParams& params) {
  std::size_t total = 0, block = 1;
  for (std::size_t k = 0; k < params.m; ++k) {
    total += block;
    block *= 2 * params.p + 1;
  }
  return total;
}

QMatrix mpc_matrix(const MpcParams& params) {
  if (params.m == 0 || params.p == 0 || params.c == 0 || params.c > params.p)
    throw std::invalid_argument("(m,p,c) requires m,p,c >= 1 and c <= p");
  const long p = static_cast<long>(params.p);
  std::vector<QVector> rows;
  for (std::size_t lead = 0; lead < params.m; ++lead) {
    const std::size_t tail = params.m - lead - 1;
    std::vector<long> digits(tail, -p);
    while (true) {
      QVector row(params.m);
      row[lead] = static_cast<long>(params.c);
      for (std::size_t k = 0; k < tail; ++k) row[lead + 1 + k] = digits[k];
      rows.push_back(std::move(row));
      // odometer, last position fastest
      std::size_t k = tail;
      while (k > 0 && digits[k - 1] == p) digits[--k] = -p;
      if (k == 0) break;
      ++digits[k - 1];
    }
  }
  return QMatrix::from_rows(rows, params.m);
}

}  // namespace prdual
