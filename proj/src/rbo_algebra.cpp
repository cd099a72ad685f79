#include "rbo/rbo_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "rbo/numerics.hpp"

namespace rbo {

namespace {

Vec basis_vec(std::size_t dim, std::size_t i) {
  Vec v(dim, 0.0);
  v[i] = 1.0;
  return v;
}

}  // namespace

CheckReport check_rbo(const RelRBO& o, double tol) {
  if (o.B.rows() != o.g.dim() || o.B.cols() != o.h.dim())
    throw DimensionError("check_rbo: B must be dim(g) x dim(h)");
  const std::size_t nh = o.h.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = i + 1; j < nh; ++j) {
      Vec u = basis_vec(nh, i), v = basis_vec(nh, j);
      Vec bu = o.apply_B(u), bv = o.apply_B(v);
      Vec lhs = o.g.bracket(bu, bv);
      Vec arg = vec_sub(o.phi(bu, v), o.phi(bv, u));
      arg = vec_add(arg, o.h.basis_bracket(i, j));
      Vec rhs = o.apply_B(arg);
      worst = std::max(worst, vec_norm_inf(vec_sub(lhs, rhs)));
    }
  return CheckReport::from_residual("rbo", worst, tol);
}

CheckReport graph_subalgebra_check(const RelRBO& o, double tol) {
  ActionPhi phi = o.action();
  LieAlgebra sd = semidirect_algebra(o.g, o.h, phi);
  std::vector<Vec> graph;
  for (std::size_t i = 0; i < o.h.dim(); ++i) {
    Vec u = basis_vec(o.h.dim(), i);
    graph.push_back(vec_cat(o.apply_B(u), u));
  }
  CheckReport r = is_subalgebra(graph, sd, tol);
  r.name = "graph_subalgebra";
  return r;
}

Vec descendent_bracket(const RelRBO& o, const Vec& u, const Vec& v) {
  Vec out = vec_sub(o.phi(o.apply_B(u), v), o.phi(o.apply_B(v), u));
  return vec_add(out, o.h.bracket(u, v));
}

LieAlgebra descendent_algebra(const RelRBO& o, double tol) {
  CheckReport gate = check_rbo(o, tol);
  if (!gate.pass)
    throw GateError("descendent_algebra: operator failed check_rbo (residual " +
                    std::to_string(gate.residual) + ")");
  const std::size_t nh = o.h.dim();
  LieAlgebra desc(nh, o.h.labels());
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = i + 1; j < nh; ++j)
      desc.set_bracket(i, j, descendent_bracket(o, basis_vec(nh, i), basis_vec(nh, j)));

  CheckReport jac = desc.check_jacobi(1e-10);
  if (!jac.pass) throw Error("descendent_algebra: Jacobi violated, residual " +
                             std::to_string(jac.residual));
  LinearMap bmap{&desc, &o.g, o.B};
  CheckReport hom = is_homomorphism(bmap, 1e-10);
  if (!hom.pass)
    throw Error("descendent_algebra: B is not a homomorphism to g, residual " +
                std::to_string(hom.residual));
  return desc;
}

Matrix theta_matrix(const RelRBO& o, const Vec& u) {
  const std::size_t ng = o.g.dim();
  Matrix m(ng, ng);
  Vec bu = o.apply_B(u);
  Matrix ad_bu = o.g.ad(bu);
  for (std::size_t a = 0; a < ng; ++a) {
    Vec x = basis_vec(ng, a);
    Vec col = vec_add(o.apply_B(o.phi(x, u)), ad_bu * x);
    m.set_col(a, col);
  }
  return m;
}

std::vector<Matrix> theta_basis_mats(const RelRBO& o) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < o.h.dim(); ++i)
    mats.push_back(theta_matrix(o, basis_vec(o.h.dim(), i)));
  return mats;
}

Representation theta_rep(const RelRBO& o, const LieAlgebra& descendent) {
  CheckReport gate = check_rbo(o, 1e-9);
  if (!gate.pass) throw GateError("theta_rep: operator failed check_rbo");
  return Representation{&descendent, o.g.dim(), theta_basis_mats(o)};
}

CheckReport mixed_identity_check(const RelRBO& o, double tol) {
  const std::size_t ng = o.g.dim(), nh = o.h.dim();
  double worst = 0.0;
  for (std::size_t a = 0; a < ng; ++a) {
    Vec x = basis_vec(ng, a);
    Matrix phix = o.action().of(x);
    Matrix thx(ng, 1);
    for (std::size_t i = 0; i < nh; ++i)
      for (std::size_t j = i + 1; j < nh; ++j) {
        Vec u = basis_vec(nh, i), v = basis_vec(nh, j);
        Vec lhs = phix * descendent_bracket(o, u, v);
        Vec rhs = descendent_bracket(o, phix * u, v);
        rhs = vec_add(rhs, descendent_bracket(o, u, phix * v));
        Vec tvx = theta_matrix(o, v) * x;
        Vec tux = theta_matrix(o, u) * x;
        rhs = vec_add(rhs, o.phi(tvx, u));
        rhs = vec_sub(rhs, o.phi(tux, v));
        worst = std::max(worst, vec_norm_inf(vec_sub(lhs, rhs)));
      }
  }
  return CheckReport::from_residual("mixed_identity", worst, tol);
}

CheckReport check_mybe(const ModifiedR& r, double tol) {
  const std::size_t n = r.g.dim();
  if (!r.R.square() || r.R.rows() != n) throw DimensionError("check_mybe: R must be dim(g) square");
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec u = basis_vec(n, i), v = basis_vec(n, j);
      Vec ru = r.R * u, rv = r.R * v;
      Vec lhs = r.g.bracket(ru, rv);
      Vec rhs = r.R * r.g.bracket(ru, v);
      rhs = vec_add(rhs, r.R * r.g.bracket(u, rv));
      rhs = vec_sub(rhs, r.g.basis_bracket(i, j));
      worst = std::max(worst, vec_norm_inf(vec_sub(lhs, rhs)));
    }
  return CheckReport::from_residual("mybe", worst, tol);
}

bool is_adjoint_rbo(const RelRBO& o, double tol) {
  if (o.g.dim() != o.h.dim()) return false;
  for (std::size_t i = 0; i < o.g.dim(); ++i) {
    Matrix ad = o.g.ad(basis_vec(o.g.dim(), i));
    if ((ad - o.phi_mats[i]).norm_max() > tol) return false;
  }
  return true;
}

ModifiedR to_modified_r(const RelRBO& o) {
  if (!is_adjoint_rbo(o))
    throw UnsupportedError("to_modified_r: operator is not adjoint (h = g, phi = ad)");
  Matrix r = o.B;
  r *= 2.0;
  r += Matrix::identity(o.g.dim());
  return ModifiedR{o.g, r};
}

RelRBO from_modified_r(const ModifiedR& r) {
  RelRBO o;
  o.g = r.g;
  o.h = r.g;
  o.B = 0.5 * (r.R - Matrix::identity(r.g.dim()));
  ActionPhi ad = adjoint_action(o.g);
  o.phi_mats = ad.mats;
  return o;
}

CheckReport check_rbo_hom(const Matrix& psi_g, const Matrix& psi_h, const RelRBO& src,
                          const RelRBO& dst, double tol) {
  const std::size_t ng = dst.g.dim(), nh = dst.h.dim();
  double worst = 0.0;
  {
    LinearMap fg{&src.g, &dst.g, psi_g};
    LinearMap fh{&src.h, &dst.h, psi_h};
    worst = std::max(worst, is_homomorphism(fg).residual);
    worst = std::max(worst, is_homomorphism(fh).residual);
  }
  // (hom-rbo1): psi_g B' = B psi_h.
  worst = std::max(worst, (psi_g * src.B - dst.B * psi_h).norm_max());
  // (hom-rbo2): psi_h(phi(x) v) = phi(psi_g x) psi_h v on bases.
  for (std::size_t a = 0; a < ng; ++a) {
    Vec x = basis_vec(ng, a);
    Matrix lhs = psi_h * src.action().of(x);
    Matrix rhs = dst.action().of(psi_g * x) * psi_h;
    worst = std::max(worst, (lhs - rhs).norm_max());
  }
  // Consequence: psi_h is a homomorphism of descendent algebras.
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = i + 1; j < nh; ++j) {
      Vec u = basis_vec(nh, i), v = basis_vec(nh, j);
      Vec lhs = psi_h * descendent_bracket(src, u, v);
      Vec rhs = descendent_bracket(dst, psi_h * u, psi_h * v);
      worst = std::max(worst, vec_norm_inf(vec_sub(lhs, rhs)));
    }
  // Consequence: psi_g theta'(u) = theta(psi_h u) psi_g.
  for (std::size_t i = 0; i < nh; ++i) {
    Vec u = basis_vec(nh, i);
    Matrix lhs = psi_g * theta_matrix(src, u);
    Matrix rhs = theta_matrix(dst, psi_h * u) * psi_g;
    worst = std::max(worst, (lhs - rhs).norm_max());
  }
  return CheckReport::from_residual("rbo_hom", worst, tol);
}

}  // namespace rbo
