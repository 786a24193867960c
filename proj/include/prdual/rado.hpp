#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "prdual/matrix.hpp"

namespace prdual {

/// Coefficients expressing one block sum over earlier columns.
struct Witness {
  std::vector<std::size_t> columns;  // sorted union of the earlier blocks
  QVector coefficients;              // aligned with `columns`

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Ordered partition <I_0, ..., I_{m-1}> of the column indices satisfying the
/// columns condition. witnesses[t-1] certifies block t for t >= 1.
struct ColumnsCertificate {
  std::vector<std::vector<std::size_t>> partition;
  std::vector<Witness> witnesses;

  friend bool operator==(const ColumnsCertificate&, const ColumnsCertificate&) = default;
};

struct SearchLimits {
  std::size_t max_columns = 12;
};

/// Canonical certificate: first-block candidates are the zero-sum column
/// subsets in lexicographic order, later blocks the lexicographically first
/// subset whose sum lies in the span of the columns already placed. Runs the
/// first-block candidates in parallel; the result equals the serial search.
std::optional<ColumnsCertificate> columns_condition(const QMatrix& a, SearchLimits limits = {});
std::optional<ColumnsCertificate> columns_condition_serial(const QMatrix& a, SearchLimits limits = {});

/// Attaches canonical witnesses to a given ordered partition, or nullopt if
/// the partition does not satisfy the columns condition for A.
std::optional<ColumnsCertificate> certify_partition(
    const QMatrix& a, const std::vector<std::vector<std::size_t>>& partition);

/// Re-checks both clauses. With no witnesses, clause (2) is checked by span
/// membership; with witnesses, each block sum must reproduce exactly.
bool verify_cc_certificate(const QMatrix& a, const ColumnsCertificate& cert);

/// Semigroups on which Rado's criterion is stated. The decision is the same
/// for all three.
enum class RadoDomain { N, Z, Q };
bool kernel_partition_regular(const QMatrix& a, RadoDomain domain = RadoDomain::N);

struct MpcParams {
  std::size_t m = 1;
  std::size_t p = 1;
  std::size_t c = 1;
};

/// All rows over {-p..p} whose first nonzero entry is c, ordered by the
/// position of that entry and then lexicographically.
QMatrix mpc_matrix(const MpcParams& params);
/// ((2p+1)^m - 1) / (2p)
std::size_t mpc_row_count(const MpcParams& params);

}  // namespace prdual
