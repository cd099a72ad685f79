#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rbo/matrix.hpp"

namespace rbo {

/// Matrix exponential by scaling and squaring: scale so the 1-norm drops
/// below 0.5, sum the Taylor series to order 16, square back. Dependency-free
/// and accurate to ~1e-12 relative for norm1 <= 10.
Matrix mat_exp(const Matrix& m);

/// Principal matrix logarithm by inverse scaling and squaring: Denman-Beavers
/// square roots until ||M - I||_1 < 0.25, then a degree-16 Gregory series,
/// then rescale. Intended for near-identity inputs; ||exp(log M) - M|| <= 1e-10
/// on that domain.
Matrix mat_log(const Matrix& m);

struct RankResult {
  int rank = 0;
  std::vector<Vec> kernel_basis;
};

/// Gaussian elimination with partial pivoting. A pivot counts as zero when
/// |pivot| <= tol.abs + tol.rel * (largest |entry| of the input).
RankResult rank_and_kernel(const Matrix& m, const Tolerance& tol = {});

/// Basis of the column space: the pivot columns of m (original entries).
std::vector<Vec> column_space_basis(const Matrix& m, const Tolerance& tol = {});

/// Solve a x = b by LU with partial pivoting. Throws SingularError.
Vec lu_solve(const Matrix& a, const Vec& b);
Matrix lu_solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);

/// Least squares min ||a x - b|| via Householder QR. Returns (x, residual).
std::pair<Vec, double> lsq_solve(const Matrix& a, const Vec& b);

using Curve = std::function<Vec(double)>;
using MatrixCurve = std::function<Matrix(double)>;

/// Default finite-difference step; balances truncation against round-off.
inline constexpr double kFdStep = 1e-5;

/// d/dt at 0 by the 4th-order central stencil
/// (f(-2h) - 8 f(-h) + 8 f(h) - f(2h)) / (12 h).
Vec directional_derivative(const Curve& f, double h = kFdStep);
Matrix directional_derivative(const MatrixCurve& f, double h = kFdStep);

/// Mixed partial d^m/dt_1..dt_m at 0 for m <= 3, via the tensor product of
/// the 4th-order stencil in each variable (wide stencil, O(h^4)).
Vec mixed_partials(const std::function<Vec(const Vec&)>& f, std::size_t m, double h = kFdStep);

/// Classical RK4 for y' = f(t, y) from t=0 to t=1 with the given step count.
Vec rk4_integrate(const std::function<Vec(double, const Vec&)>& f, Vec y0, int steps);

/// Step-count heuristic for group flows: max(50, ceil(norm / 0.02)).
int rk4_steps_for_norm(double norm);

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 50;
  double fd_step = 1e-6;
};

/// Newton iteration for F(u) = target with a column-wise central-difference
/// Jacobian. Throws SingularError / ConvergenceError.
Vec newton_solve(const std::function<Vec(const Vec&)>& f, const Vec& target, Vec guess,
                 const NewtonOptions& opts = {});

/// Integral over [0,1] of a vector-valued function, 8-point Gauss-Legendre.
Vec gauss_legendre_8(const std::function<Vec(double)>& f);

}  // namespace rbo
