#include "rbo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rbo/kernels.hpp"

namespace rbo {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (!m.square()) throw DimensionError(std::string(who) + ": matrix must be square");
}

}  // namespace

Matrix mat_exp(const Matrix& m) {
  require_square(m, "mat_exp");
  if (!m.all_finite()) throw DomainError("mat_exp: non-finite entries");
  const std::size_t n = m.rows();
  if (n == 0) return m;

  int s = 0;
  double nrm = m.norm1();
  while (nrm >= 0.5) {
    nrm *= 0.5;
    ++s;
  }
  Matrix x = std::ldexp(1.0, -s) * m;

  // Taylor to order 16; remainder < 1e-19 at ||x|| < 0.5.
  Matrix e = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 16; ++k) {
    term = (1.0 / k) * (term * x);
    e += term;
  }
  for (int k = 0; k < s; ++k) e = e * e;
  return e;
}

Matrix mat_log(const Matrix& m) {
  require_square(m, "mat_log");
  const std::size_t n = m.rows();
  if (n == 0) return m;

  Matrix x = m;
  int halvings = 0;
  const Matrix id = Matrix::identity(n);
  while ((x - id).norm1() >= 0.25) {
    if (++halvings > 100) throw DomainError("mat_log: square-root iteration did not converge");
    // Denman-Beavers: y -> sqrt(x), z -> inv(sqrt(x)).
    Matrix y = x, z = id;
    bool done = false;
    for (int it = 0; it < 60; ++it) {
      Matrix yn = 0.5 * (y + inverse(z));
      Matrix zn = 0.5 * (z + inverse(y));
      double delta = (yn - y).norm1();
      y = yn;
      z = zn;
      if (delta <= 1e-15 * std::max(1.0, y.norm1())) {
        done = true;
        break;
      }
    }
    if (!done) throw DomainError("mat_log: Denman-Beavers iteration did not converge");
    x = y;
  }

  // Gregory series: log x = 2 * sum_{j odd <= 15} w^j / j, w = (x-I)(x+I)^{-1}.
  Matrix w = lu_solve((x + id).transpose(), (x - id).transpose()).transpose();
  Matrix w2 = w * w;
  Matrix term = w;
  Matrix acc = (2.0 / 1.0) * w;
  for (int j = 3; j <= 15; j += 2) {
    term = term * w2;
    acc += (2.0 / j) * term;
  }
  return std::ldexp(1.0, halvings) * acc;
}

RankResult rank_and_kernel(const Matrix& m, const Tolerance& tol) {
  if (!m.all_finite()) throw DomainError("rank_and_kernel: non-finite entries");
  const std::size_t rows = m.rows(), cols = m.cols();
  RankResult out;
  if (cols == 0) return out;
  if (rows == 0) {
    for (std::size_t j = 0; j < cols; ++j) {
      Vec k(cols, 0.0);
      k[j] = 1.0;
      out.kernel_basis.push_back(std::move(k));
    }
    return out;
  }

  Matrix a = m;
  const double thresh = tol.threshold(m.norm_max());

  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> col_is_pivot(cols, false);
  std::size_t r = 0;
  std::vector<double> factors(rows, 0.0);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (std::abs(a(i, c)) > std::abs(a(best, c))) best = i;
    if (std::abs(a(best, c)) <= thresh) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(best, j));
    const double piv = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) factors[i] = a(i, c) / piv;
    kernels::eliminate_rows(a.data().data(), cols, r, r + 1, rows, factors.data());
    for (std::size_t i = r + 1; i < rows; ++i) a(i, c) = 0.0;
    pivot_col_of_row.push_back(c);
    col_is_pivot[c] = true;
    ++r;
  }
  out.rank = static_cast<int>(r);

  // Back-substitute one kernel vector per free column.
  for (std::size_t c = 0; c < cols; ++c) {
    if (col_is_pivot[c]) continue;
    Vec k(cols, 0.0);
    k[c] = 1.0;
    for (std::size_t i = r; i-- > 0;) {
      const std::size_t pc = pivot_col_of_row[i];
      double s = 0.0;
      for (std::size_t j = pc + 1; j < cols; ++j) s += a(i, j) * k[j];
      k[pc] = -s / a(i, pc);
    }
    out.kernel_basis.push_back(std::move(k));
  }
  return out;
}

std::vector<Vec> column_space_basis(const Matrix& m, const Tolerance& tol) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Vec> basis;
  if (rows == 0 || cols == 0) return basis;
  Matrix a = m;
  const double thresh = tol.threshold(m.norm_max());
  std::size_t r = 0;
  std::vector<double> factors(rows, 0.0);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (std::abs(a(i, c)) > std::abs(a(best, c))) best = i;
    if (std::abs(a(best, c)) <= thresh) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(best, j));
    const double piv = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) factors[i] = a(i, c) / piv;
    kernels::eliminate_rows(a.data().data(), cols, r, r + 1, rows, factors.data());
    for (std::size_t i = r + 1; i < rows; ++i) a(i, c) = 0.0;
    basis.push_back(m.col(c));
    ++r;
  }
  return basis;
}

namespace {

struct Lu {
  Matrix a;
  std::vector<std::size_t> perm;
};

Lu lu_factor(const Matrix& a0) {
  if (!a0.square()) throw DimensionError("lu: matrix must be square");
  const std::size_t n = a0.rows();
  Lu lu{a0, std::vector<std::size_t>(n)};
  std::iota(lu.perm.begin(), lu.perm.end(), std::size_t{0});
  Matrix& a = lu.a;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(best, k))) best = i;
    if (a(best, k) == 0.0) throw SingularError("lu: singular matrix");
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(best, j));
      std::swap(lu.perm[k], lu.perm[best]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      const double f = a(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return lu;
}

Vec lu_apply(const Lu& lu, const Vec& b) {
  const std::size_t n = lu.a.rows();
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[lu.perm[i]];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu.a(i, j) * x[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu.a(i, j) * x[j];
    x[i] /= lu.a(i, i);
  }
  return x;
}

}  // namespace

Vec lu_solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionError("lu_solve: rhs length mismatch");
  return lu_apply(lu_factor(a), b);
}

Matrix lu_solve(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows()) throw DimensionError("lu_solve: rhs shape mismatch");
  const Lu lu = lu_factor(a);
  Matrix x(b.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) x.set_col(j, lu_apply(lu, b.col(j)));
  return x;
}

Matrix inverse(const Matrix& a) { return lu_solve(a, Matrix::identity(a.rows())); }

std::pair<Vec, double> lsq_solve(const Matrix& a, const Vec& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw DimensionError("lsq_solve: rhs length mismatch");
  if (m < n) throw DimensionError("lsq_solve: underdetermined system");
  Matrix r = a;
  Vec y = b;
  // Householder QR, applying the reflectors to y as we go.
  for (std::size_t k = 0; k < n; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k; i < m; ++i) alpha += r(i, k) * r(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (r(k, k) > 0) alpha = -alpha;
    Vec v(m, 0.0);
    v[k] = r(k, k) - alpha;
    for (std::size_t i = k + 1; i < m; ++i) v[i] = r(i, k);
    double vtv = 0.0;
    for (std::size_t i = k; i < m; ++i) vtv += v[i] * v[i];
    if (vtv == 0.0) continue;
    for (std::size_t j = k; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < m; ++i) s += v[i] * r(i, j);
      s *= 2.0 / vtv;
      for (std::size_t i = k; i < m; ++i) r(i, j) -= s * v[i];
    }
    double s = 0.0;
    for (std::size_t i = k; i < m; ++i) s += v[i] * y[i];
    s *= 2.0 / vtv;
    for (std::size_t i = k; i < m; ++i) y[i] -= s * v[i];
  }
  Vec x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= r(i, j) * x[j];
    x[i] = (r(i, i) != 0.0) ? s / r(i, i) : 0.0;
  }
  double res2 = 0.0;
  for (std::size_t i = n; i < m; ++i) res2 += y[i] * y[i];
  // Rank-deficient columns leave a residual inside the triangle too.
  for (std::size_t i = 0; i < n; ++i)
    if (r(i, i) == 0.0) res2 += y[i] * y[i];
  return {x, std::sqrt(res2)};
}

namespace {
constexpr double kStencil[4] = {1.0, -8.0, 8.0, -1.0};
constexpr double kNodes[4] = {-2.0, -1.0, 1.0, 2.0};
}  // namespace

Vec directional_derivative(const Curve& f, double h) {
  Vec acc;
  for (int q = 0; q < 4; ++q) {
    Vec v = f(kNodes[q] * h);
    if (acc.empty()) acc.assign(v.size(), 0.0);
    vec_axpy(acc, kStencil[q] / (12.0 * h), v);
  }
  return acc;
}

Matrix directional_derivative(const MatrixCurve& f, double h) {
  Matrix probe = f(0.0);
  Curve g = [&](double t) { return f(t).data(); };
  return Matrix(probe.rows(), probe.cols(), directional_derivative(g, h));
}

Vec mixed_partials(const std::function<Vec(const Vec&)>& f, std::size_t m, double h) {
  if (m == 0 || m > 3) throw UnsupportedError("mixed_partials: only 1 <= m <= 3 supported");
  Vec acc;
  std::vector<int> idx(m, 0);
  const std::size_t total = std::size_t(1) << (2 * m);  // 4^m stencil points
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    double w = 1.0;
    Vec t(m);
    for (std::size_t d = 0; d < m; ++d) {
      const int q = static_cast<int>(rem & 3);
      rem >>= 2;
      w *= kStencil[q] / (12.0 * h);
      t[d] = kNodes[q] * h;
    }
    Vec v = f(t);
    if (acc.empty()) acc.assign(v.size(), 0.0);
    vec_axpy(acc, w, v);
  }
  return acc;
}

Vec rk4_integrate(const std::function<Vec(double, const Vec&)>& f, Vec y, int steps) {
  const double dt = 1.0 / steps;
  double t = 0.0;
  for (int s = 0; s < steps; ++s) {
    Vec k1 = f(t, y);
    Vec y2 = y;
    vec_axpy(y2, dt / 2, k1);
    Vec k2 = f(t + dt / 2, y2);
    Vec y3 = y;
    vec_axpy(y3, dt / 2, k2);
    Vec k3 = f(t + dt / 2, y3);
    Vec y4 = y;
    vec_axpy(y4, dt, k3);
    Vec k4 = f(t + dt, y4);
    vec_axpy(y, dt / 6, k1);
    vec_axpy(y, dt / 3, k2);
    vec_axpy(y, dt / 3, k3);
    vec_axpy(y, dt / 6, k4);
    t += dt;
  }
  return y;
}

int rk4_steps_for_norm(double norm) {
  return std::max(50, static_cast<int>(std::ceil(norm / 0.02)));
}

Vec newton_solve(const std::function<Vec(const Vec&)>& f, const Vec& target, Vec u,
                 const NewtonOptions& opts) {
  const std::size_t n = u.size();
  double res = 0.0;
  for (int it = 0; it < opts.max_iter; ++it) {
    Vec fu = f(u);
    if (fu.size() != target.size()) throw DimensionError("newton_solve: F output length mismatch");
    Vec err = vec_sub(fu, target);
    res = vec_norm(err);
    if (res <= opts.tol) return u;
    Matrix jac(target.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec up = u, um = u;
      up[j] += opts.fd_step;
      um[j] -= opts.fd_step;
      Vec d = vec_scale(1.0 / (2.0 * opts.fd_step), vec_sub(f(up), f(um)));
      jac.set_col(j, d);
    }
    Vec step;
    try {
      step = lu_solve(jac, err);
    } catch (const SingularError&) {
      throw SingularError("newton_solve: singular Jacobian");
    }
    for (std::size_t j = 0; j < n; ++j) u[j] -= step[j];
  }
  Vec fu = f(u);
  res = vec_norm(vec_sub(fu, target));
  if (res <= opts.tol) return u;
  throw ConvergenceError("newton_solve: no convergence after max iterations", res);
}

Vec gauss_legendre_8(const std::function<Vec(double)>& f) {
  // Nodes/weights for [-1,1], mapped to [0,1].
  static const double xs[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                               -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                               0.7966664774136267,  0.9602898564975363};
  static const double ws[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                               0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                               0.2223810344533745, 0.1012285362903763};
  Vec acc;
  for (int q = 0; q < 8; ++q) {
    const double s = 0.5 * (xs[q] + 1.0);
    Vec v = f(s);
    if (acc.empty()) acc.assign(v.size(), 0.0);
    vec_axpy(acc, 0.5 * ws[q], v);
  }
  return acc;
}

}  // namespace rbo
