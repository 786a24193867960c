// Serial vs OpenMP timings for the two exhaustive searches.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "prdual/oracle.hpp"
#include "prdual/rado.hpp"

using namespace prdual;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < reps; ++k) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-34s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "DISAGREE");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  int failures = 0;

  // A 2 x 14 system with no certificate: every zero-sum first block is tried.
  QMatrix hard(2, 14);
  for (std::size_t k = 0; k < 14; ++k) {
    hard(0, k) = Rational(static_cast<long>(k % 2 ? k + 1 : -static_cast<long>(k) - 1));
    hard(1, k) = Rational(static_cast<long>((k * k) % 7) - 3);
  }
  for (std::size_t m : {2, 3, 0}) {
    const QMatrix a = m ? mpc_matrix({m, 2, 1}) : hard;
    SearchLimits lim;
    lim.max_columns = 16;
    const auto s = columns_condition_serial(a, lim);
    const auto p = columns_condition(a, lim);
    const bool agree = s == p;
    failures += !agree;
    char name[64];
    if (m)
      std::snprintf(name, sizeof name, "columns condition mpc(%zu,2,1)", m);
    else
      std::snprintf(name, sizeof name, "columns condition 2x14 (none)");
    report(name, seconds([&] { (void)columns_condition_serial(a, lim); }, 3),
           seconds([&] { (void)columns_condition(a, lim); }, 3), agree);
  }

  // S(2) = 4 and S(3) = 13: both windows below force a solution, so the search is exhaustive.
  const QMatrix schur{{1, 1, -1}};
  for (long n : {5L, 14L}) {
    const int colors = n == 5 ? 2 : 3;
    OracleCaps caps;
    caps.max_colorings = 1e7;
    const auto sup = kernel_supports(schur, n, caps);
    const auto s = window_pr_serial(sup, n, colors, caps);
    const auto p = window_pr(sup, n, colors, caps);
    const bool agree = s.verdict == p.verdict && s.bad_coloring == p.bad_coloring;
    failures += !agree;
    char name[64];
    std::snprintf(name, sizeof name, "window schur N=%ld r=%d", n, colors);
    report(name, seconds([&] { (void)window_pr_serial(sup, n, colors, caps); }, 3),
           seconds([&] { (void)window_pr(sup, n, colors, caps); }, 3), agree);
  }
  return failures ? 1 : 0;
}
