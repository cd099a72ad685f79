#include "rbo/kernels.hpp"

#include <algorithm>
#include <atomic>

#include "rbo/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rbo::kernels {

namespace {
#ifdef _OPENMP
std::atomic<bool> g_parallel{true};
#else
std::atomic<bool> g_parallel{false};
#endif

// Below this many scalar ops the fork/join overhead dominates; the arithmetic
// is the same either way.
constexpr std::size_t kMinWork = 16384;
}  // namespace

void set_parallel(bool on) {
#ifdef _OPENMP
  g_parallel.store(on);
#else
  (void)on;
#endif
}

bool parallel_enabled() { return g_parallel.load(); }

void matmul_serial(const Matrix& a, const Matrix& b, Matrix& c) {
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  const double* pa = a.data().data();
  const double* pb = b.data().data();
  double* pc = c.data().data();
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = pc + i * n;
    std::fill(ci, ci + n, 0.0);
    for (std::size_t l = 0; l < k; ++l) {
      const double ail = pa[i * k + l];
      if (ail == 0.0) continue;
      const double* bl = pb + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
    }
  }
}

void matmul(const Matrix& a, const Matrix& b, Matrix& c) {
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
#ifdef _OPENMP
  if (g_parallel.load() && m * k * n >= kMinWork && m > 1) {
    const double* pa = a.data().data();
    const double* pb = b.data().data();
    double* pc = c.data().data();
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(m); ++i) {
      double* ci = pc + i * n;
      std::fill(ci, ci + n, 0.0);
      for (std::size_t l = 0; l < k; ++l) {
        const double ail = pa[i * k + l];
        if (ail == 0.0) continue;
        const double* bl = pb + l * n;
        for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
      }
    }
    return;
  }
#endif
  matmul_serial(a, b, c);
}

void eliminate_rows_serial(double* a, std::size_t n_cols, std::size_t pivot_row,
                           std::size_t begin, std::size_t end, const double* factors) {
  const double* prow = a + pivot_row * n_cols;
  for (std::size_t i = begin; i < end; ++i) {
    if (i == pivot_row) continue;
    const double f = factors[i];
    if (f == 0.0) continue;
    double* ri = a + i * n_cols;
    for (std::size_t j = 0; j < n_cols; ++j) ri[j] -= f * prow[j];
  }
}

void eliminate_rows(double* a, std::size_t n_cols, std::size_t pivot_row, std::size_t begin,
                    std::size_t end, const double* factors) {
#ifdef _OPENMP
  if (g_parallel.load() && (end - begin) * n_cols >= kMinWork) {
    const double* prow = a + pivot_row * n_cols;
#pragma omp parallel for schedule(static)
    for (long long i = static_cast<long long>(begin); i < static_cast<long long>(end); ++i) {
      if (static_cast<std::size_t>(i) == pivot_row) continue;
      const double f = factors[i];
      if (f == 0.0) continue;
      double* ri = a + i * n_cols;
      for (std::size_t j = 0; j < n_cols; ++j) ri[j] -= f * prow[j];
    }
    return;
  }
#endif
  eliminate_rows_serial(a, n_cols, pivot_row, begin, end, factors);
}

void parallel_for_serial(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
  if (g_parallel.load() && n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) body(static_cast<std::size_t>(i));
    return;
  }
#endif
  parallel_for_serial(n, body);
}

double max_over_serial(std::size_t n, const std::function<double(std::size_t)>& score) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, score(i));
  return best;
}

double max_over(std::size_t n, const std::function<double(std::size_t)>& score) {
#ifdef _OPENMP
  if (g_parallel.load() && n > 1) {
    double best = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : best)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      best = std::max(best, score(static_cast<std::size_t>(i)));
    return best;
  }
#endif
  return max_over_serial(n, score);
}

}  // namespace rbo::kernels
