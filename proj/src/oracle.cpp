#include "prdual/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "prdual/errors.hpp"

namespace prdual {

namespace {

using IntRow = std::vector<std::int64_t>;

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw SizeError("matrix entry too large for window enumeration");
  return z.get_si();
}

// Each row scaled by the lcm of its denominators; scale[i] is that lcm.
std::vector<IntRow> integer_rows(const QMatrix& a, std::vector<std::int64_t>* scale = nullptr) {
  std::vector<IntRow> rows(a.rows(), IntRow(a.cols()));
  if (scale) scale->assign(a.rows(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) l = lcm(l, a(i, j).den());
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = to_int64(a(i, j).num() * (l / a(i, j).den()));
    if (scale) (*scale)[i] = to_int64(l);
  }
  return rows;
}

Support support_of(const QVector& values) {
  Support s;
  for (const auto& x : values) s.push_back(x.num().get_si());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Support> dedupe(std::vector<Support> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Backtracking over restricted-growth colorings of 1..N. A support is tested
// when its largest element gets colored.
class WindowSearch {
public:
  WindowSearch(const std::vector<Support>& supports, long n, int colors, const OracleCaps& caps)
      : n_(static_cast<int>(n)), r_(colors), ending_(static_cast<std::size_t>(std::max(n, 0L))) {
    if (colors < 1) throw std::invalid_argument("window_pr needs at least one color");
    if (n < 1 || n > 64 || std::pow(static_cast<double>(colors), static_cast<double>(n)) > caps.max_colorings)
      throw SizeError("window {1.." + std::to_string(n) + "} with " + std::to_string(colors) +
                      " colors exceeds the coloring cap");
    for (const auto& s : supports) {
      if (s.empty()) throw DimensionError("empty support");
      std::uint64_t mask = 0;
      for (long e : s) {
        if (e < 1 || e > n) throw DimensionError("support element " + std::to_string(e) + " outside {1..N}");
        mask |= std::uint64_t{1} << (e - 1);
      }
      const long top = *std::max_element(s.begin(), s.end());
      ending_[top - 1].push_back(mask);
    }
  }

  struct State {
    Coloring colors;
    std::vector<std::uint64_t> classes;
    int used = 0;
  };

  State empty_state() const { return {Coloring(n_, -1), std::vector<std::uint64_t>(r_, 0), 0}; }

  // Colors element k (0-based) with c; false if that closes a monochromatic support.
  bool assign(State& st, int k, int c) const {
    st.colors[k] = c;
    st.classes[c] |= std::uint64_t{1} << k;
    for (auto m : ending_[k])
      if ((m & st.classes[c]) == m) return false;
    return true;
  }

  void unassign(State& st, int k, int c, int prev_used) const {
    st.colors[k] = -1;
    st.classes[c] &= ~(std::uint64_t{1} << k);
    st.used = prev_used;
  }

  // Completes st from element k onward; returns true with st holding the
  // lexicographically least avoiding coloring.
  bool search(State& st, int k) const {
    if (k == n_) return true;
    const int limit = std::min(st.used + 1, r_);
    for (int c = 0; c < limit; ++c) {
      const int prev = st.used;
      if (assign(st, k, c)) {
        st.used = std::max(st.used, c + 1);
        if (search(st, k + 1)) return true;
      }
      unassign(st, k, c, prev);
    }
    return false;
  }

  // All viable restricted-growth prefixes of the given depth, lexicographically.
  std::vector<State> prefixes(int depth) const {
    std::vector<State> out;
    State st = empty_state();
    auto rec = [&](auto&& self, int k) -> void {
      if (k == depth) {
        out.push_back(st);
        return;
      }
      const int limit = std::min(st.used + 1, r_);
      for (int c = 0; c < limit; ++c) {
        const int prev = st.used;
        if (assign(st, k, c)) {
          st.used = std::max(st.used, c + 1);
          self(self, k + 1);
        }
        unassign(st, k, c, prev);
      }
    };
    rec(rec, 0);
    return out;
  }

  int n() const { return n_; }

private:
  int n_;
  int r_;
  std::vector<std::vector<std::uint64_t>> ending_;
};

PRWitness verdict_from(std::optional<Coloring> bad) {
  PRWitness w;
  w.verdict = !bad.has_value();
  w.bad_coloring = std::move(bad);
  return w;
}

void check_denom_cap(long n, long denom_cap, const OracleCaps& caps) {
  if (denom_cap < 1 || denom_cap > caps.max_denom_cap)
    throw SizeError("denominator cap must be in 1.." + std::to_string(caps.max_denom_cap));
  if (n < 1 || n > caps.max_image_n) throw SizeError("image window N out of range");
}

}  // namespace

std::vector<QVector> kernel_solutions(const QMatrix& a, long n, const OracleCaps& caps) {
  const std::size_t v = a.cols();
  if (v > caps.max_kernel_vars) throw SizeError("kernel enumeration limited to " + std::to_string(caps.max_kernel_vars) + " variables");
  if (n < 1 || n > caps.max_kernel_n) throw SizeError("kernel window N out of range");
  std::vector<QVector> out;
  if (v == 0) {
    out.emplace_back();
    return out;
  }
  const auto rows = integer_rows(a);
  const std::size_t last = v - 1;

  // Row used to solve for the last coordinate, if any row involves it.
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < rows.size() && !pivot; ++i)
    if (rows[i][last] != 0) pivot = i;

  const std::size_t enumerated = pivot ? last : v;
  std::vector<std::int64_t> x(v, 1);
  auto emit_if_solution = [&]() {
    for (const auto& r : rows) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < v; ++j) s += r[j] * x[j];
      if (s != 0) return;
    }
    QVector q(v);
    for (std::size_t j = 0; j < v; ++j) q[j] = static_cast<long>(x[j]);
    out.push_back(std::move(q));
  };

  while (true) {
    if (pivot) {
      const auto& r = rows[*pivot];
      std::int64_t partial = 0;
      for (std::size_t j = 0; j < last; ++j) partial += r[j] * x[j];
      if (partial % r[last] == 0) {
        const std::int64_t xl = -partial / r[last];
        if (xl >= 1 && xl <= n) {
          x[last] = xl;
          emit_if_solution();
        }
      }
    } else {
      emit_if_solution();
    }
    std::size_t k = enumerated;
    while (k > 0 && x[k - 1] == n) x[--k] = 1;
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;
}

std::vector<ImageSolution> image_solutions(const QMatrix& a, long n, long denom_cap, const OracleCaps& caps) {
  const std::size_t v = a.cols();
  if (v > caps.max_image_vars) throw SizeError("image enumeration limited to " + std::to_string(caps.max_image_vars) + " variables");
  check_denom_cap(n, denom_cap, caps);
  std::vector<ImageSolution> out;
  if (v == 0 || a.rows() == 0) return out;

  // Grid values as integers k over the common denominator q_all.
  std::int64_t q_all = 1;
  for (long q = 2; q <= denom_cap; ++q) q_all = std::lcm(q_all, static_cast<std::int64_t>(q));
  std::set<std::int64_t> grid_set;
  for (long q = 1; q <= denom_cap; ++q)
    for (long p = 1; p <= n * denom_cap; ++p) {
      grid_set.insert(p * (q_all / q));
      grid_set.insert(-p * (q_all / q));
    }
  const std::vector<std::int64_t> grid(grid_set.begin(), grid_set.end());

  std::vector<std::int64_t> scale;
  const auto rows = integer_rows(a, &scale);
  const std::size_t last = v - 1;
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < rows.size() && !pivot; ++i)
    if (rows[i][last] != 0) pivot = i;

  const double work = std::pow(static_cast<double>(grid.size()), static_cast<double>(last)) *
                      static_cast<double>(pivot ? n : static_cast<long>(grid.size()));
  if (work > caps.max_image_work) throw SizeError("image enumeration grid too large");

  // Rows whose last nonzero column is j are checked once x_j is fixed.
  std::vector<std::vector<std::size_t>> check_at(v);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t lnz = 0;
    bool any = false;
    for (std::size_t j = 0; j < v; ++j)
      if (rows[i][j] != 0) lnz = j, any = true;
    if (!any) return out;  // a zero row never lands in {1..N}
    check_at[lnz].push_back(i);
  }

  std::vector<std::int64_t> x(v);
  // entry i of Ax equals dot(rows[i], x) / (scale[i] * q_all)
  auto row_ok = [&](std::size_t i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < v; ++j) s += rows[i][j] * x[j];
    const std::int64_t den = scale[i] * q_all;
    return s % den == 0 && s / den >= 1 && s / den <= n;
  };
  auto emit = [&]() {
    ImageSolution sol{QVector(v), QVector(rows.size())};
    for (std::size_t j = 0; j < v; ++j) sol.x[j] = Rational(x[j], q_all);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < v; ++j) s += rows[i][j] * x[j];
      sol.image[i] = s / (scale[i] * q_all);
    }
    out.push_back(std::move(sol));
  };

  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == last) {
      std::vector<std::int64_t> candidates;
      if (pivot) {
        const auto& r = rows[*pivot];
        std::int64_t partial = 0;
        for (std::size_t t = 0; t < last; ++t) partial += r[t] * x[t];
        for (long t = 1; t <= n; ++t) {
          const std::int64_t num = t * scale[*pivot] * q_all - partial;
          if (num % r[last] == 0 && grid_set.count(num / r[last])) candidates.push_back(num / r[last]);
        }
        std::sort(candidates.begin(), candidates.end());
      } else {
        candidates = grid;
      }
      for (auto c : candidates) {
        x[last] = c;
        if (std::all_of(check_at[last].begin(), check_at[last].end(), row_ok)) emit();
      }
      return;
    }
    for (auto g : grid) {
      x[j] = g;
      if (std::all_of(check_at[j].begin(), check_at[j].end(), row_ok)) self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Support> kernel_supports(const QMatrix& a, long n, const OracleCaps& caps) {
  std::vector<Support> s;
  for (const auto& x : kernel_solutions(a, n, caps))
    if (!x.empty()) s.push_back(support_of(x));
  return dedupe(std::move(s));
}

std::vector<Support> image_supports(const QMatrix& a, long n, long denom_cap, const OracleCaps& caps) {
  std::vector<Support> s;
  for (const auto& sol : image_solutions(a, n, denom_cap, caps)) s.push_back(support_of(sol.image));
  return dedupe(std::move(s));
}

PRWitness window_pr_serial(const std::vector<Support>& supports, long n, int colors, const OracleCaps& caps) {
  const WindowSearch search(supports, n, colors, caps);
  auto st = search.empty_state();
  if (search.search(st, 0)) return verdict_from(st.colors);
  return verdict_from(std::nullopt);
}

PRWitness window_pr(const std::vector<Support>& supports, long n, int colors, const OracleCaps& caps) {
  const WindowSearch search(supports, n, colors, caps);
  // Split the coloring space by the colors of the first few elements.
  const int depth = std::min<int>(search.n(), colors == 1 ? 1 : 6);
  auto tasks = search.prefixes(depth);
  const long count = static_cast<long>(tasks.size());

  std::atomic<long> best{std::numeric_limits<long>::max()};
#pragma omp parallel for schedule(dynamic, 1)
  for (long t = 0; t < count; ++t) {
    if (t > best.load(std::memory_order_relaxed)) continue;
    if (search.search(tasks[t], depth)) {
      long cur = best.load();
      while (t < cur && !best.compare_exchange_weak(cur, t)) {
      }
    }
  }
  const long t = best.load();
  if (t == std::numeric_limits<long>::max()) return verdict_from(std::nullopt);
  return verdict_from(tasks[t].colors);
}

std::optional<QVector> find_monochromatic(const QMatrix& a, const Coloring& coloring, SolutionMode mode,
                                          long denom_cap, const OracleCaps& caps) {
  const long n = static_cast<long>(coloring.size());
  auto mono = [&](const QVector& values) {
    if (values.empty()) return true;
    const int c = coloring[values.front().num().get_si() - 1];
    return std::all_of(values.begin(), values.end(),
                       [&](const Rational& e) { return coloring[e.num().get_si() - 1] == c; });
  };
  if (mode == SolutionMode::Kernel) {
    for (auto& x : kernel_solutions(a, n, caps))
      if (mono(x)) return std::move(x);
  } else {
    for (auto& sol : image_solutions(a, n, denom_cap, caps))
      if (mono(sol.image)) return std::move(sol.x);
  }
  return std::nullopt;
}

std::string format_coloring(const Coloring& coloring) {
  const int r = coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end()) + 1;
  std::string s = "{";
  for (int c = 0; c < r; ++c) {
    if (c) s += "|";
    bool first = true;
    for (std::size_t k = 0; k < coloring.size(); ++k)
      if (coloring[k] == c) {
        s += (first ? "" : ",") + std::to_string(k + 1);
        first = false;
      }
  }
  return s + "}";
}

}  // namespace prdual
