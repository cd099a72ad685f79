#include "rbo/group.hpp"

#include <algorithm>
#include <cmath>

#include "rbo/kernels.hpp"

namespace rbo {

MatrixGroup::MatrixGroup(std::string name, std::size_t ambient_dim, std::vector<Matrix> basis)
    : name_(std::move(name)), n_(ambient_dim), basis_(std::move(basis)) {
  for (const Matrix& b : basis_)
    if (b.rows() != n_ || b.cols() != n_)
      throw DimensionError("matrix group: basis element has wrong ambient size");
  span_ = Matrix(n_ * n_, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) span_.set_col(j, basis_[j].data());
  // Linear independence; also validates later coords_of calls.
  if (!basis_.empty()) {
    RankResult rr = rank_and_kernel(span_, Tolerance{1e-12, 1e-12});
    if (rr.rank != static_cast<int>(basis_.size()))
      throw DomainError("matrix group: algebra basis is linearly dependent");
  }
}

Matrix MatrixGroup::to_ambient(const Vec& coords) const {
  if (coords.size() != basis_.size()) throw DimensionError("to_ambient: coordinate length");
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0.0) {
      Matrix t = basis_[i];
      t *= coords[i];
      m += t;
    }
  return m;
}

Vec MatrixGroup::coords_of(const Matrix& m, double* residual) const {
  if (m.rows() != n_ || m.cols() != n_) throw DimensionError("coords_of: ambient size mismatch");
  auto [x, res] = lsq_solve(span_, m.data());
  if (residual) *residual = res;
  return x;
}

LieAlgebra MatrixGroup::algebra() const { return algebra_from_generators(basis_); }

Matrix MatrixGroup::adjoint(const Matrix& g) const {
  Matrix gi = inverse(g);
  Matrix ad(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) ad.set_col(j, coords_of(g * basis_[j] * gi));
  return ad;
}

CheckReport check_group_action(const GroupAction& phi, const MatrixGroup& G, const MatrixGroup& H,
                               int samples, double tol, std::uint32_t seed) {
  std::mt19937 rng(seed);
  double worst = 0.0;
  // Phi(e_G) = id.
  for (int s = 0; s < samples; ++s) {
    Matrix h = H.exp(sample_algebra_coords(H.dim(), 0.3, rng));
    worst = std::max(worst, (phi(G.identity(), h) - h).norm_max());
  }
  // Phi(g1 g2) = Phi(g1) Phi(g2) and Phi(g)(h1 h2) = Phi(g)h1 . Phi(g)h2.
  for (int s = 0; s < samples; ++s) {
    Matrix g1 = G.exp(sample_algebra_coords(G.dim(), 0.3, rng));
    Matrix g2 = G.exp(sample_algebra_coords(G.dim(), 0.3, rng));
    Matrix h1 = H.exp(sample_algebra_coords(H.dim(), 0.3, rng));
    Matrix h2 = H.exp(sample_algebra_coords(H.dim(), 0.3, rng));
    worst = std::max(worst, (phi(g1 * g2, h1) - phi(g1, phi(g2, h1))).norm_max());
    worst = std::max(worst, (phi(g1, h1 * h2) - phi(g1, h1) * phi(g1, h2)).norm_max());
  }
  CheckReport r = CheckReport::from_residual("group_action", worst, tol);
  return r;
}

bool GroupRBO::in_domain(const Matrix& h) const {
  if (!std::isfinite(domain_radius)) return true;
  try {
    return H.log_norm(h) <= domain_radius;
  } catch (const DomainError&) {
    return false;
  }
}

Vec sample_algebra_coords(std::size_t dim, double radius, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vec v(dim);
  for (double& x : v) x = gauss(rng);
  const double n = vec_norm(v);
  if (n == 0.0) return v;
  // log-uniform magnitude over two decades below `radius`
  const double mag = radius * std::pow(10.0, -2.0 * unif(rng));
  return vec_scale(mag / n, v);
}

std::vector<Matrix> sample_group_points(const MatrixGroup& H, int count, double radius,
                                        std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Matrix> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) pts.push_back(H.exp(sample_algebra_coords(H.dim(), radius, rng)));
  return pts;
}

CheckReport check_group_rbo(const GroupRBO& o, const SampleOptions& s, double tol) {
  std::vector<Matrix> pts = sample_group_points(o.H, 2 * s.count, s.radius, s.seed);
  std::vector<std::pair<Matrix, Matrix>> pairs;
  int skipped = 0;
  for (int i = 0; i < s.count; ++i) {
    const Matrix& h1 = pts[2 * i];
    const Matrix& h2 = pts[2 * i + 1];
    if (!o.in_domain(h1) || !o.in_domain(h2)) {
      ++skipped;
      continue;
    }
    Matrix arg = h1 * o.Phi(o.B(h1), h2);
    if (!o.in_domain(arg)) {
      ++skipped;
      continue;
    }
    pairs.emplace_back(h1, h2);
  }
  const double worst = kernels::max_over(pairs.size(), [&](std::size_t i) {
    const auto& [h1, h2] = pairs[i];
    Matrix lhs = o.B(h1) * o.B(h2);
    Matrix rhs = o.B(h1 * o.Phi(o.B(h1), h2));
    return (lhs - rhs).norm_max();
  });
  CheckReport r = CheckReport::from_residual("group_rbo", worst, tol);
  r.skipped = skipped;
  return r;
}

Matrix star(const GroupRBO& o, const Matrix& h1, const Matrix& h2) {
  return h1 * o.Phi(o.B(h1), h2);
}

Matrix dag(const GroupRBO& o, const Matrix& h) {
  return o.Phi(inverse(o.B(h)), inverse(h));
}

Matrix theta_group_action(const GroupRBO& o, const Matrix& h, const Matrix& g) {
  Matrix hd = dag(o, h);
  return inverse(o.B(o.Phi(g, hd))) * g * o.B(hd);
}

Matrix theta_linearized(const GroupRBO& o, const Matrix& h, double fd_step) {
  const std::size_t ng = o.G.dim();
  Matrix m(ng, ng);
  for (std::size_t a = 0; a < ng; ++a) {
    Vec ea(ng, 0.0);
    ea[a] = 1.0;
    Matrix d = directional_derivative(
        [&](double t) { return theta_group_action(o, h, o.G.exp(vec_scale(t, ea))); }, fd_step);
    m.set_col(a, o.G.coords_of(d));
  }
  return m;
}

SemidirectGroup::Pair SemidirectGroup::identity() const {
  return {G->identity(), H->identity()};
}

SemidirectGroup::Pair SemidirectGroup::multiply(const Pair& a, const Pair& b) const {
  return {a.first * b.first, a.second * (*Phi)(a.first, b.second)};
}

SemidirectGroup::Pair SemidirectGroup::inverse(const Pair& a) const {
  Matrix gi = rbo::inverse(a.first);
  return {gi, (*Phi)(gi, rbo::inverse(a.second))};
}

SemidirectGroup::Pair SemidirectGroup::exp_rk4(const Vec& x, const Vec& u) const {
  const Matrix X = G->to_ambient(x);
  const std::size_t n = G->ambient_dim(), m = H->ambient_dim();
  Vec y0 = Matrix::identity(n).data();
  Vec y0h = Matrix::identity(m).data();
  y0.insert(y0.end(), y0h.begin(), y0h.end());
  auto f = [&](double, const Vec& y) {
    Matrix g(n, n, Vec(y.begin(), y.begin() + n * n));
    Matrix h(m, m, Vec(y.begin() + n * n, y.end()));
    Matrix dg = g * X;
    Matrix dh = h * H->to_ambient(Phi->induced_on_algebra(g) * u);
    Vec dy = dg.data();
    dy.insert(dy.end(), dh.data().begin(), dh.data().end());
    return dy;
  };
  const double nrm = std::sqrt(vec_dot(x, x) + vec_dot(u, u));
  Vec y = rk4_integrate(f, y0, rk4_steps_for_norm(nrm));
  return {Matrix(n, n, Vec(y.begin(), y.begin() + n * n)), Matrix(m, m, Vec(y.begin() + n * n, y.end()))};
}

SemidirectGroup::Pair SemidirectGroup::exp(const Vec& x, const Vec& u) const {
  switch (Phi->kind) {
    case GroupAction::Kind::trivial:
      return {G->exp(x), H->exp(u)};
    case GroupAction::Kind::linear_on_vector_group: {
      // h(1) = exp_H of int_0^1 PhiTilde(exp(s x)) u ds.
      Vec v = gauss_legendre_8([&](double s) {
        return Vec(Phi->induced_on_algebra(G->exp(vec_scale(s, x))) * u);
      });
      return {G->exp(x), H->exp(v)};
    }
    case GroupAction::Kind::conjugation: {
      // G ltimes_Ad G is isomorphic to G x G via (g, h) -> (h g, g), giving
      // EXP(x, u) = (exp x, exp(u + x) exp(-x)).
      Matrix ex = G->exp(x);
      return {ex, G->exp(vec_add(u, x)) * rbo::inverse(ex)};
    }
    case GroupAction::Kind::generic:
      return exp_rk4(x, u);
  }
  return exp_rk4(x, u);
}

GroupCochain group_cochain_differential(const GroupRBO& o, const GroupCochain& F) {
  GroupCochain out;
  out.k = F.k + 1;
  const int k = F.k;  // dF takes k arguments
  out.f = [&o, F, k](const std::vector<Matrix>& hs) {
    if (hs.size() != static_cast<std::size_t>(k))
      throw DimensionError("group cochain differential: wrong argument count");
    Vec acc = theta_linearized(o, hs[0]) *
              F(std::vector<Matrix>(hs.begin() + 1, hs.end()));
    for (int i = 1; i <= k - 1; ++i) {
      std::vector<Matrix> args;
      for (int j = 0; j < i - 1; ++j) args.push_back(hs[j]);
      args.push_back(star(o, hs[i - 1], hs[i]));
      for (int j = i + 1; j < k; ++j) args.push_back(hs[j]);
      vec_axpy(acc, (i % 2 == 0) ? 1.0 : -1.0, F(args));
    }
    std::vector<Matrix> head(hs.begin(), hs.end() - 1);
    vec_axpy(acc, (k % 2 == 0) ? 1.0 : -1.0, F(head));
    return acc;
  };
  return out;
}

CheckReport check_group_rbo_hom(const GroupMap& psi_G, const GroupMap& psi_H, const GroupRBO& src,
                                const GroupRBO& dst, const SampleOptions& s, double tol) {
  std::mt19937 rng(s.seed);
  double worst = 0.0;
  int skipped = 0;
  for (int i = 0; i < s.count; ++i) {
    Matrix g = src.G.exp(sample_algebra_coords(src.G.dim(), s.radius, rng));
    Matrix h = src.H.exp(sample_algebra_coords(src.H.dim(), s.radius, rng));
    if (!src.in_domain(h)) {
      ++skipped;
      continue;
    }
    Matrix ph = psi_H(h);
    if (!dst.in_domain(ph)) {
      ++skipped;
      continue;
    }
    // (hom-rbo-gp1)
    worst = std::max(worst, (dst.B(ph) - psi_G(src.B(h))).norm_max());
    // (hom-rbo-gp2)
    worst = std::max(worst, (psi_H(src.Phi(g, h)) - dst.Phi(psi_G(g), ph)).norm_max());
    // Theta intertwining
    Matrix lhs = psi_G(theta_group_action(src, h, g));
    Matrix rhs = theta_group_action(dst, ph, psi_G(g));
    worst = std::max(worst, (lhs - rhs).norm_max());
  }
  CheckReport r = CheckReport::from_residual("group_rbo_hom", worst, tol);
  r.skipped = skipped;
  return r;
}

}  // namespace rbo
