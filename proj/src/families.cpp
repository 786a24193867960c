#include "prdual/families.hpp"

#include "prdual/duality.hpp"
#include "prdual/errors.hpp"
#include "prdual/linalg.hpp"

namespace prdual {

QMatrix ap_matrix(const ApFamily& f) {
  if (f.rows < 1) throw std::invalid_argument("ap_matrix needs at least one row");
  QMatrix a(f.rows, 2);
  for (std::size_t l = 0; l < f.rows; ++l) {
    a(l, 0) = 1;
    a(l, 1) = static_cast<long>(l) * f.d;
  }
  return a;
}

QMatrix ap_integer_C(long d, std::size_t rows) {
  if (d < 2 || rows < 1) throw std::invalid_argument("ap_integer_C needs d >= 2 and rows >= 1");
  QMatrix c(rows, 2);
  for (std::size_t l = 0; l < rows; ++l) {
    const long ld = static_cast<long>(l) * d;
    c(l, 0) = 1 - ld;
    c(l, 1) = -1 + 2 * ld;
  }
  return c;
}

ApProjectorPair ap_projector_pair(long d, std::size_t rows) {
  if (d < 1 || rows < 3) throw std::invalid_argument("ap_projector_pair needs d >= 1 and rows >= 3");
  const QMatrix a = ap_matrix({d, rows});
  ApProjectorPair out;
  out.B = image_to_kernel(a);
  out.C = compress_projector(kernel_projector(out.B));
  out.failure_rhs = mat_vec(out.C, QVector{1, 2});
  auto x = solve_linear(a, out.failure_rhs);
  if (!x) throw std::logic_error("C (1,2) is not an image of A");
  out.failure_x = std::move(*x);
  return out;
}

NotGReport check_notG(const SemigroupSpec& s) {
  using Kind = SemigroupSpec::Kind;
  const bool whole = s.kind() == Kind::Q || s.kind() == Kind::QPlus ||
                     (s.kind() == Kind::GroupOf &&
                      (s.base()->kind() == Kind::Q || s.base()->kind() == Kind::QPlus));
  if (whole) throw SpecError("the obstruction needs a proper subsemigroup, got " + s.str());

  NotGReport r;
  r.spec = s.str();
  if (!s.contains(1)) {
    r.branch = 1;
    const auto m = s.min_positive_integer();
    if (!m || !m->fits_slong_p()) throw SpecError("S has no usable positive integer");
    r.d = m->get_si();
    const long d = r.d;
    r.A = QMatrix{{d, 0}, {0, d}, {d, d}};
    r.probe = {d, d};
    r.reduced_image = {d, d, 2 * d};
  } else {
    r.branch = 2;
    // S lies in (1/L)Z for some L, so this search terminates.
    long d = 2;
    while (s.contains(Rational(1, d))) {
      if (++d > 1'000'000) throw SpecError("no d <= 10^6 with 1/d outside " + s.str());
    }
    r.d = d;
    r.A = QMatrix{{0, 1}, {d, 1}, {d, 2}};
    r.probe = {1, d};
    r.reduced_image = {1, 2, 3};
  }
  const long d = r.d;
  r.probe_image = mat_vec(r.A, r.probe);
  const QVector expected = r.branch == 1 ? QVector{d * d, d * d, 2 * d * d} : QVector{d, 2 * d, 3 * d};
  r.image_matches = r.probe_image == expected;

  // Any B with B * probe_image = 0 also kills reduced_image when the latter
  // is a scalar multiple of the former.
  const Rational factor = r.probe_image.front().is_zero() ? Rational(0)
                                                          : r.reduced_image.front() / r.probe_image.front();
  r.scaling_is_homogeneous = !factor.is_zero();
  for (std::size_t i = 0; i < 3 && r.scaling_is_homogeneous; ++i)
    r.scaling_is_homogeneous = r.probe_image[i] * factor == r.reduced_image[i];

  if (auto x = solve_linear(r.A, r.reduced_image)) {
    r.witness = std::move(*x);
    r.witness_solves = mat_vec(r.A, r.witness) == r.reduced_image;
    // A has full column rank, so this solution is the only one.
    r.witness_solves = r.witness_solves && rank(r.A) == 2;
    r.witness_outside = false;
    for (const auto& e : r.witness) r.witness_outside = r.witness_outside || !membership(s, e);
  }
  return r;
}

KclInstance::KclInstance(long d, long p, Rational x0, Rational x1, long m, long n, Rational k, QMatrix c)
    : d_(d), p_(p), x0_(std::move(x0)), x1_(std::move(x1)), m_(m), n_(n), k_(std::move(k)), c_(std::move(c)) {
  if (d < 1 || p < 1) throw std::invalid_argument("d and p must be positive");
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be natural numbers");
  if (m == n) throw std::invalid_argument("m == n forces k = 0");
  if (x0_.is_zero() || x1_.is_zero()) throw std::invalid_argument("x0 and x1 must be nonzero");
  if (c_.cols() != 2) throw DimensionError("C must have two columns");
}

bool verify_kcl(const KclInstance& inst) {
  const Rational d = inst.d(), p = inst.p();
  if (inst.k() != d * inst.x0() * inst.x1() * Rational(inst.m() - inst.n())) return false;
  for (std::size_t l = 0; l < inst.C().rows(); ++l) {
    const long li = static_cast<long>(l);
    if (inst.k() * inst.C()(l, 0) != p * d * inst.x1() * Rational(li - inst.n())) return false;
    if (inst.k() * inst.C()(l, 1) != p * d * inst.x0() * Rational(inst.m() - li)) return false;
  }
  return true;
}

}  // namespace prdual
