#include "rbo/lie_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "rbo/numerics.hpp"

namespace rbo {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != dim_) throw DimensionError("lie algebra: label count != dim");
  c_.assign(dim_ * (dim_ > 0 ? dim_ - 1 : 0) / 2, Vec(dim_, 0.0));
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // i < j assumed
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& coeffs) {
  if (i >= j || j >= dim_) throw DimensionError("set_bracket: need i < j < dim");
  if (coeffs.size() != dim_) throw DimensionError("set_bracket: coefficient length mismatch");
  c_[pair_index(i, j)] = coeffs;
}

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw DimensionError("basis_bracket: index out of range");
  if (i == j) return Vec(dim_, 0.0);
  if (i < j) return c_[pair_index(i, j)];
  return vec_scale(-1.0, c_[pair_index(j, i)]);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("bracket: length mismatch");
  Vec out(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0.0 || i == j) continue;
      const double s = x[i] * y[j];
      const Vec& cij = (i < j) ? c_[pair_index(i, j)] : c_[pair_index(j, i)];
      const double sign = (i < j) ? s : -s;
      for (std::size_t k = 0; k < dim_; ++k) out[k] += sign * cij[k];
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec ej(dim_, 0.0);
    ej[j] = 1.0;
    m.set_col(j, bracket(x, ej));
  }
  return m;
}

CheckReport LieAlgebra::check_jacobi(double tol) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vec ei(dim_, 0.0), ej(dim_, 0.0), ek(dim_, 0.0);
        ei[i] = ej[j] = ek[k] = 1.0;
        ei[i] = 1.0;
        Vec r = bracket(bracket(ei, ej), ek);
        r = vec_add(r, bracket(bracket(ej, ek), ei));
        r = vec_add(r, bracket(bracket(ek, ei), ej));
        worst = std::max(worst, vec_norm_inf(r));
      }
  return CheckReport::from_residual("jacobi", worst, tol);
}

Matrix ActionPhi::of(const Vec& x) const {
  if (!g || !h) throw Error("action: unbound algebras");
  if (x.size() != g->dim()) throw DimensionError("action: argument length mismatch");
  Matrix m(h->dim(), h->dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0.0) {
      Matrix t = mats[i];
      t *= x[i];
      m += t;
    }
  return m;
}

CheckReport check_action(const ActionPhi& phi, double tol) {
  const auto& g = *phi.g;
  const auto& h = *phi.h;
  if (phi.mats.size() != g.dim()) throw DimensionError("check_action: matrix count != dim g");
  double worst = 0.0;
  // Each phi(x) is a derivation of h.
  for (std::size_t a = 0; a < g.dim(); ++a) {
    const Matrix& d = phi.mats[a];
    if (d.rows() != h.dim() || d.cols() != h.dim())
      throw DimensionError("check_action: matrix size != dim h");
    for (std::size_t i = 0; i < h.dim(); ++i)
      for (std::size_t j = i + 1; j < h.dim(); ++j) {
        Vec ei(h.dim(), 0.0), ej(h.dim(), 0.0);
        ei[i] = ej[j] = 1.0;
        Vec lhs = d * h.basis_bracket(i, j);
        Vec rhs = vec_add(h.bracket(d * ei, ej), h.bracket(ei, d * ej));
        worst = std::max(worst, vec_norm_inf(vec_sub(lhs, rhs)));
      }
  }
  // phi is a homomorphism g -> Der(h).
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b) {
      Matrix lhs = phi.of(g.basis_bracket(a, b));
      Matrix rhs = commutator(phi.mats[a], phi.mats[b]);
      worst = std::max(worst, (lhs - rhs).norm_max());
    }
  return CheckReport::from_residual("action", worst, tol);
}

Matrix Representation::of(const Vec& x) const {
  if (!algebra) throw Error("representation: unbound algebra");
  if (x.size() != algebra->dim()) throw DimensionError("representation: length mismatch");
  Matrix m(space_dim, space_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0.0) {
      Matrix t = mats[i];
      t *= x[i];
      m += t;
    }
  return m;
}

CheckReport check_representation(const Representation& rho, double tol) {
  const auto& a = *rho.algebra;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Matrix lhs = rho.of(a.basis_bracket(i, j));
      Matrix rhs = commutator(rho.mats[i], rho.mats[j]);
      worst = std::max(worst, (lhs - rhs).norm_max());
    }
  return CheckReport::from_residual("representation", worst, tol);
}

LieAlgebra semidirect_algebra(const LieAlgebra& g, const LieAlgebra& h, const ActionPhi& phi,
                              double action_tol) {
  CheckReport act = check_action(phi, action_tol);
  if (!act.pass)
    throw GateError("semidirect_algebra: phi failed the action check (residual " +
                    std::to_string(act.residual) + ")");
  const std::size_t ng = g.dim(), nh = h.dim();
  std::vector<std::string> labels;
  for (const auto& s : g.labels()) labels.push_back("g:" + s);
  for (const auto& s : h.labels()) labels.push_back("h:" + s);
  LieAlgebra out(ng + nh, std::move(labels));
  auto pad = [&](const Vec& xg, const Vec& xh) {
    Vec v(ng + nh, 0.0);
    for (std::size_t k = 0; k < ng; ++k) v[k] = xg[k];
    for (std::size_t k = 0; k < nh; ++k) v[ng + k] = xh[k];
    return v;
  };
  for (std::size_t i = 0; i < ng + nh; ++i)
    for (std::size_t j = i + 1; j < ng + nh; ++j) {
      Vec coeffs;
      if (j < ng) {
        coeffs = pad(g.basis_bracket(i, j), Vec(nh, 0.0));
      } else if (i >= ng) {
        coeffs = pad(Vec(ng, 0.0), h.basis_bracket(i - ng, j - ng));
      } else {
        // [x, v] = phi(x) v
        Vec ev(nh, 0.0);
        ev[j - ng] = 1.0;
        coeffs = pad(Vec(ng, 0.0), phi.mats[i] * ev);
      }
      out.set_bracket(i, j, coeffs);
    }
  return out;
}

CheckReport is_homomorphism(const LinearMap& f, double tol) {
  const auto& d = *f.domain;
  double worst = 0.0;
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = i + 1; j < d.dim(); ++j) {
      Vec ei(d.dim(), 0.0), ej(d.dim(), 0.0);
      ei[i] = ej[j] = 1.0;
      Vec lhs = f.apply(d.basis_bracket(i, j));
      Vec rhs = f.codomain->bracket(f.apply(ei), f.apply(ej));
      worst = std::max(worst, vec_norm_inf(vec_sub(lhs, rhs)));
    }
  return CheckReport::from_residual("homomorphism", worst, tol);
}

CheckReport is_subalgebra(const std::vector<Vec>& vectors, const LieAlgebra& ambient, double tol) {
  if (vectors.empty()) return CheckReport::from_residual("subalgebra", 0.0, tol);
  Matrix span(ambient.dim(), vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) span.set_col(j, vectors[j]);
  double worst = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      Vec w = ambient.bracket(vectors[i], vectors[j]);
      auto [x, res] = lsq_solve(span, w);
      worst = std::max(worst, res / std::max(1.0, vec_norm(w)));
    }
  return CheckReport::from_residual("subalgebra", worst, tol);
}

ActionPhi adjoint_action(const LieAlgebra& a) {
  ActionPhi phi;
  phi.g = &a;
  phi.h = &a;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec ei(a.dim(), 0.0);
    ei[i] = 1.0;
    phi.mats.push_back(a.ad(ei));
  }
  return phi;
}

LieAlgebra abelian_algebra(std::size_t n) { return LieAlgebra(n); }

LieAlgebra so3_algebra() {
  LieAlgebra a(3, {"e1", "e2", "e3"});
  a.set_bracket(0, 1, {0, 0, 1});
  a.set_bracket(0, 2, {0, -1, 0});
  a.set_bracket(1, 2, {1, 0, 0});
  return a;
}

LieAlgebra up2_algebra() {
  LieAlgebra a(3, {"E11", "E12", "E22"});
  a.set_bracket(0, 1, {0, 1, 0});   // [E11, E12] = E12
  a.set_bracket(0, 2, {0, 0, 0});   // [E11, E22] = 0
  a.set_bracket(1, 2, {0, 1, 0});   // [E12, E22] = E12
  return a;
}

LieAlgebra gl_algebra(std::size_t n) {
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(n, n);
      e(i, j) = 1.0;
      basis.push_back(e);
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return algebra_from_generators(basis, std::move(labels));
}

LieAlgebra euclidean_algebra(std::size_t n) {
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      Matrix e(n + 1, n + 1);
      e(p, q) = 1.0;
      e(q, p) = -1.0;
      basis.push_back(e);
      labels.push_back("L" + std::to_string(p + 1) + std::to_string(q + 1));
    }
  for (std::size_t k = 0; k < n; ++k) {
    Matrix e(n + 1, n + 1);
    e(k, n) = 1.0;
    basis.push_back(e);
    labels.push_back("t" + std::to_string(k + 1));
  }
  return algebra_from_generators(basis, std::move(labels));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::string> labels;
  for (const auto& s : a.labels()) labels.push_back("a:" + s);
  for (const auto& s : b.labels()) labels.push_back("b:" + s);
  LieAlgebra out(na + nb, std::move(labels));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) {
      Vec c = a.basis_bracket(i, j);
      c.resize(na + nb, 0.0);
      out.set_bracket(i, j, c);
    }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      Vec c(na, 0.0);
      Vec cb = b.basis_bracket(i, j);
      c.insert(c.end(), cb.begin(), cb.end());
      out.set_bracket(na + i, na + j, c);
    }
  return out;
}

LieAlgebra algebra_from_generators(const std::vector<Matrix>& basis,
                                   std::vector<std::string> labels) {
  const std::size_t d = basis.size();
  if (d == 0) return LieAlgebra(0);
  const std::size_t nn = basis[0].rows() * basis[0].cols();
  Matrix span(nn, d);
  for (std::size_t j = 0; j < d; ++j) span.set_col(j, basis[j].data());
  LieAlgebra out(d, std::move(labels));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix w = commutator(basis[i], basis[j]);
      auto [coeffs, res] = lsq_solve(span, w.data());
      if (res > 1e-8 * std::max(1.0, w.norm_fro()))
        throw DomainError("algebra_from_generators: basis not closed under commutator");
      out.set_bracket(i, j, coeffs);
    }
  return out;
}

}  // namespace rbo
