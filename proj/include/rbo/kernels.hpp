#pragma once

#include <cstddef>
#include <functional>

namespace rbo {
class Matrix;
}

/// Data-parallel inner loops. Every kernel here has a serial reference twin
/// (suffix `_serial`) that performs the identical arithmetic in the identical
/// per-element order, so results are bitwise equal and the parallel variants
/// can be validated against the serial ones. Parallelism is OpenMP and is
/// applied over independent output rows/columns/samples only; reductions are
/// restricted to max, which is order-independent.
namespace rbo::kernels {

/// Globally enable/disable the OpenMP paths (default: enabled when compiled
/// with OpenMP). Serial twins ignore this switch.
void set_parallel(bool on);
bool parallel_enabled();

/// c = a * b. Shapes must already agree.
void matmul(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_serial(const Matrix& a, const Matrix& b, Matrix& c);

/// Rank-1 style row elimination: for each row i in [begin, end), i != pivot,
/// rows[i] -= factor[i] * rows[pivot]. Operates on a row-major buffer.
void eliminate_rows(double* a, std::size_t n_cols, std::size_t pivot_row, std::size_t begin,
                    std::size_t end, const double* factors);
void eliminate_rows_serial(double* a, std::size_t n_cols, std::size_t pivot_row, std::size_t begin,
                           std::size_t end, const double* factors);

/// Runs body(i) for i in [0, n). Iterations must be independent; used for
/// column-wise assembly of differential matrices.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);
void parallel_for_serial(std::size_t n, const std::function<void(std::size_t)>& body);

/// max over i in [0, n) of score(i). The reduction is a plain max, so the
/// result does not depend on evaluation order; used for sample sweeps.
double max_over(std::size_t n, const std::function<double(std::size_t)>& score);
double max_over_serial(std::size_t n, const std::function<double(std::size_t)>& score);

}  // namespace rbo::kernels
