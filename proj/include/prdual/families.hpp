#pragma once

#include <string>

#include "prdual/matrix.hpp"
#include "prdual/semigroup.hpp"

namespace prdual {

/// Truncation of the infinite matrix with rows (1, l*d), l = 0, 1, 2, ...
struct ApFamily {
  long d = 1;
  std::size_t rows = 1;
};

QMatrix ap_matrix(const ApFamily& f);

/// Rows (1 - l*d, -1 + 2*l*d). Satisfies A (a, b)^T = C (2a + b, a + b)^T.
QMatrix ap_integer_C(long d, std::size_t rows);

struct ApProjectorPair {
  QMatrix B;             // image_to_kernel(ap_matrix)
  QMatrix C;             // compressed kernel projector of B (rows x 2)
  QVector failure_rhs;   // C (1, 2)^T
  QVector failure_x;     // the unique x with A x = C (1, 2)^T
};

ApProjectorPair ap_projector_pair(long d, std::size_t rows);

/// Exact replay of the 3 x 2 obstruction for a proper subsemigroup of Q+ or a
/// proper subgroup of Q.
struct NotGReport {
  std::string spec;
  int branch = 0;          // 1: 1 not in S,  2: 1 in S
  long d = 0;
  QMatrix A;
  QVector probe;           // x fed to A: (d, d) or (1, d)
  QVector probe_image;     // A * probe
  QVector reduced_image;   // probe_image scaled down: (d, d, 2d) or (1, 2, 3)
  QVector witness;         // unique x with A x = reduced_image
  bool image_matches = false;
  bool scaling_is_homogeneous = false;  // reduced_image is a rational multiple of probe_image
  bool witness_solves = false;
  bool witness_outside = false;         // some entry of witness is not in S
  bool confirmed() const { return image_matches && scaling_is_homogeneous && witness_solves && witness_outside; }
};

/// Throws SpecError for Q or Q+ (the obstruction needs a proper S).
NotGReport check_notG(const SemigroupSpec& s);

/// Witnesses for the two-column relation on a truncated C. The constructor
/// rejects m == n and zero x_0, x_1 (k would vanish).
class KclInstance {
public:
  KclInstance(long d, long p, Rational x0, Rational x1, long m, long n, Rational k, QMatrix c);

  long d() const { return d_; }
  long p() const { return p_; }
  const Rational& x0() const { return x0_; }
  const Rational& x1() const { return x1_; }
  long m() const { return m_; }
  long n() const { return n_; }
  const Rational& k() const { return k_; }
  const QMatrix& C() const { return c_; }

private:
  long d_, p_;
  Rational x0_, x1_;
  long m_, n_;
  Rational k_;
  QMatrix c_;
};

/// k = d x0 x1 (m - n), and for every row l: k c_{l,0} = p d x1 (l - n),
/// k c_{l,1} = p d x0 (m - l).
bool verify_kcl(const KclInstance& inst);

}  // namespace prdual
