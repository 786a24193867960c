#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prdual/matrix.hpp"

namespace prdual {

/// Enumeration caps. Exceeding any of them raises SizeError.
struct OracleCaps {
  std::size_t max_kernel_vars = 6;
  long max_kernel_n = 30;
  std::size_t max_image_vars = 4;
  long max_image_n = 30;
  long max_denom_cap = 6;
  /// Upper bound on the candidate count an image enumeration may visit.
  double max_image_work = 2e8;
  /// r^N must not exceed this (2^16: N <= 16 at r = 2, N <= 10 at r = 3).
  double max_colorings = 65536;
};

/// Sorted distinct values in {1..N}: the set of entries of one solution.
using Support = std::vector<long>;
/// coloring[k-1] is the color of k.
using Coloring = std::vector<int>;

enum class SolutionMode { Kernel, Image };

struct ImageSolution {
  QVector x;
  QVector image;
};

struct PRWitness {
  bool verdict = false;
  std::optional<QVector> mono_solution;
  std::optional<Coloring> bad_coloring;
};

/// All x in {1..N}^v with Ax = 0, in lexicographic order.
std::vector<QVector> kernel_solutions(const QMatrix& a, long n, const OracleCaps& caps = {});

/// All grid vectors x (entries p/q with 1 <= |p| <= N*denom_cap,
/// 1 <= q <= denom_cap) whose image Ax lies in {1..N}^u, ordered
/// lexicographically by the values of x.
std::vector<ImageSolution> image_solutions(const QMatrix& a, long n, long denom_cap,
                                           const OracleCaps& caps = {});

std::vector<Support> kernel_supports(const QMatrix& a, long n, const OracleCaps& caps = {});
std::vector<Support> image_supports(const QMatrix& a, long n, long denom_cap, const OracleCaps& caps = {});

/// Decides whether every r-coloring of {1..N} makes some support
/// monochromatic. On a negative verdict, bad_coloring is the
/// lexicographically least coloring avoiding all supports.
PRWitness window_pr(const std::vector<Support>& supports, long n, int colors, const OracleCaps& caps = {});
/// Single-threaded reference for window_pr; must agree with it exactly.
PRWitness window_pr_serial(const std::vector<Support>& supports, long n, int colors,
                           const OracleCaps& caps = {});

/// Lexicographically least solution (kernel mode: x, image mode: the x
/// producing the image) that is monochromatic under the coloring of
/// {1..coloring.size()}.
std::optional<QVector> find_monochromatic(const QMatrix& a, const Coloring& coloring, SolutionMode mode,
                                          long denom_cap = 1, const OracleCaps& caps = {});

/// "{1,4|2,3}": color classes in color order.
std::string format_coloring(const Coloring& coloring);

}  // namespace prdual
