#include <doctest.h>

#include <omp.h>

#include <algorithm>

#include "prdual/errors.hpp"
#include "prdual/linalg.hpp"
#include "prdual/oracle.hpp"
#include "prdual/rado.hpp"
#include "reference.hpp"

using namespace prdual;

namespace {

const QMatrix kSchur{{1, 1, -1}};
const QMatrix kVdw{{1, -2, 1, 0, 0}, {0, 1, -2, 1, 0}, {1, -1, 0, 0, 1}};

using Partition = std::vector<std::vector<std::size_t>>;

}  // namespace

TEST_CASE("columns_condition examples") {
  const auto schur = columns_condition(kSchur);
  REQUIRE(schur);
  CHECK(schur->partition == Partition{{0, 2}, {1}});
  REQUIRE(schur->witnesses.size() == 1);
  CHECK(schur->witnesses[0].columns == std::vector<std::size_t>{0, 2});
  CHECK(schur->witnesses[0].coefficients == QVector{1, 0});
  CHECK(verify_cc_certificate(kSchur, *schur));

  const auto vdw = columns_condition(kVdw);
  REQUIRE(vdw);
  CHECK(vdw->partition == Partition{{0, 1, 2, 3}, {4}});
  CHECK(vdw->witnesses[0].coefficients == QVector{3, 2, 1, 0});
  CHECK(verify_cc_certificate(kVdw, *vdw));
  // The combination c4 = 2c0 + c1 - c3 is an equally valid witness.
  ColumnsCertificate alt{{{0, 1, 2, 3}, {4}}, {{{0, 1, 2, 3}, {2, 1, 0, -1}}}};
  CHECK(verify_cc_certificate(kVdw, alt));

  CHECK_FALSE(columns_condition(QMatrix{{1, 1, 1}}).has_value());
  CHECK_FALSE(columns_condition(QMatrix(1, 0)).has_value());
  CHECK_THROWS_AS(columns_condition(QMatrix(1, 13)), SizeError);
}

TEST_CASE("verify_cc_certificate") {
  CHECK(verify_cc_certificate(kSchur, {{{0, 2}, {1}}, {}}));
  CHECK_FALSE(verify_cc_certificate(kSchur, {{{0, 1}, {2}}, {}}));
  CHECK(verify_cc_certificate(QMatrix{{1, -1, 2, -2}}, {{{0, 1, 2, 3}}, {}}));
  CHECK_FALSE(verify_cc_certificate(kSchur, {{{0, 2}}, {}}));
  CHECK_FALSE(verify_cc_certificate(kSchur, {{{0, 2}, {1, 2}}, {}}));
  CHECK_FALSE(verify_cc_certificate(kSchur, {{{0, 2}, {7}}, {}}));
  CHECK_FALSE(verify_cc_certificate(kSchur, {{{0, 2}, {}}, {}}));
  CHECK_FALSE(verify_cc_certificate(kSchur, {{{0, 2}, {1}}, {{{0, 2}, {2, 0}}}}));
  // A witness may not reach into its own or a later block.
  CHECK_FALSE(verify_cc_certificate(kSchur, {{{0, 2}, {1}}, {{{1}, {1}}}}));
}

TEST_CASE("serial and parallel searches agree") {
  omp_set_num_threads(4);
  ref::Gen g(7);
  for (int trial = 0; trial < 150; ++trial) {
    const QMatrix a = g.matrix(static_cast<std::size_t>(g.integer(1, 2)), static_cast<std::size_t>(g.integer(1, 6)), 2, 1);
    CHECK(columns_condition(a) == columns_condition_serial(a));
  }
  CHECK(columns_condition(mpc_matrix({3, 1, 1})) == columns_condition_serial(mpc_matrix({3, 1, 1})));
}

TEST_CASE("columns_condition matches ordered-partition brute force") {
  ref::Gen g(99);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = static_cast<std::size_t>(g.integer(1, 2));
    const auto v = static_cast<std::size_t>(g.integer(1, 5));
    const QMatrix a = g.matrix(u, v, 2, 1);
    const auto cert = columns_condition(a);
    CHECK(cert.has_value() == ref::columns_condition(a));
    if (cert) {
      ++found;
      CHECK(verify_cc_certificate(a, *cert));
      CHECK(kernel_partition_regular(a));
    }
  }
  CHECK(found > 10);
}

TEST_CASE("permuted matrices keep a certificate") {
  ref::Gen g(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = static_cast<std::size_t>(g.integer(2, 6));
    const QMatrix a = g.matrix(static_cast<std::size_t>(g.integer(1, 2)), v, 2, 1);
    std::vector<std::size_t> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), g.engine());
    const QMatrix pa = a.select_cols(perm);
    const auto cert = columns_condition(a);
    const auto pcert = columns_condition(pa);
    REQUIRE(cert.has_value() == pcert.has_value());
    if (!cert) continue;
    // Relabel the original certificate through the permutation: it must
    // still verify on the permuted matrix.
    std::vector<std::size_t> inv(v);
    for (std::size_t k = 0; k < v; ++k) inv[perm[k]] = k;
    Partition relabeled;
    for (const auto& block : cert->partition) {
      std::vector<std::size_t> b;
      for (auto k : block) b.push_back(inv[k]);
      std::sort(b.begin(), b.end());
      relabeled.push_back(b);
    }
    CHECK(verify_cc_certificate(pa, {relabeled, {}}));
    CHECK(verify_cc_certificate(pa, *pcert));
  }
}

TEST_CASE("certify_partition") {
  const auto c = certify_partition(kSchur, {{0, 2}, {1}});
  REQUIRE(c);
  CHECK(*c == *columns_condition(kSchur));
  CHECK_FALSE(certify_partition(kSchur, {{0, 1}, {2}}).has_value());
}

TEST_CASE("mpc_matrix") {
  CHECK(mpc_matrix({2, 1, 1}) == QMatrix{{1, -1}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(mpc_matrix({1, 3, 2}) == QMatrix{{2}});
  CHECK(mpc_matrix({2, 2, 1}) == QMatrix{{1, -2}, {1, -1}, {1, 0}, {1, 1}, {1, 2}, {0, 1}});
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t c = 1; c <= p; ++c) {
        std::size_t pow = 1;
        for (std::size_t k = 0; k < m; ++k) pow *= 2 * p + 1;
        const QMatrix mat = mpc_matrix({m, p, c});
        CHECK(mat.rows() == (pow - 1) / (2 * p));
        CHECK(mpc_row_count({m, p, c}) == mat.rows());
        for (std::size_t i = 0; i < mat.rows(); ++i) {
          const auto row = mat.row(i);
          const auto first = std::find_if(row.begin(), row.end(), [](const Rational& x) { return !x.is_zero(); });
          REQUIRE(first != row.end());
          CHECK(*first == Rational(static_cast<long>(c)));
        }
      }
  CHECK_THROWS_AS(mpc_matrix({2, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(mpc_matrix({0, 1, 1}), std::invalid_argument);
}

TEST_CASE("a certificate is never contradicted by a small window") {
  // Every 1x3 row with entries in [-2,2]: when Rado's condition holds, no
  // 2-coloring of {1..11} avoids a monochromatic solution. 11 is tight for
  // z = 2x + y.
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c) {
        const QMatrix m{{a, b, c}};
        if (!columns_condition(m)) continue;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(window_pr(kernel_supports(m, 11), 11, 2).verdict);
      }
  CHECK_FALSE(window_pr(kernel_supports(QMatrix{{2, 1, -1}}, 10), 10, 2).verdict);
}
