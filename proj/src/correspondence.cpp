#include "rbo/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace rbo {

namespace {

Vec basis_vec(std::size_t dim, std::size_t i) {
  Vec v(dim, 0.0);
  v[i] = 1.0;
  return v;
}

}  // namespace

std::vector<Matrix> diff_action_mats(const GroupAction& phi, const MatrixGroup& G,
                                     const MatrixGroup& H, double fd_step) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < G.dim(); ++i) {
    Vec ei = basis_vec(G.dim(), i);
    mats.push_back(directional_derivative(
        [&](double t) { return phi.induced_on_algebra(G.exp(vec_scale(t, ei))); }, fd_step));
  }
  (void)H;
  return mats;
}

double diff_action_mismatch(const GroupAction& phi, const MatrixGroup& G, const MatrixGroup& H,
                            const RelRBO& rel) {
  std::vector<Matrix> mats = diff_action_mats(phi, G, H);
  double worst = 0.0;
  for (std::size_t i = 0; i < mats.size(); ++i)
    worst = std::max(worst, (mats[i] - rel.phi_mats[i]).norm_max());
  return worst;
}

RelRBO diff_group_rbo(const GroupRBO& o, double fd_step) {
  RelRBO rel;
  rel.g = o.G.algebra();
  rel.h = o.H.algebra();
  rel.phi_mats = diff_action_mats(o.Phi, o.G, o.H, fd_step);
  const std::size_t ng = o.G.dim(), nh = o.H.dim();
  double h = fd_step;
  if (std::isfinite(o.domain_radius)) h = std::min(h, o.domain_radius / 8.0);
  rel.B = Matrix(ng, nh);
  for (std::size_t i = 0; i < nh; ++i) {
    Vec ei = basis_vec(nh, i);
    Matrix d = directional_derivative(
        [&](double t) { return mat_log(o.B(o.H.exp(vec_scale(t, ei)))); }, h);
    rel.B.set_col(i, o.G.coords_of(d));
  }
  return rel;
}

Matrix descendent_exp(const GroupRBO& o, const Matrix& B, const Vec& u) {
  SemidirectGroup sd{&o.G, &o.H, &o.Phi};
  return sd.exp(B * u, u).second;
}

ReportSet descendent_compat_check(const GroupRBO& o, double tol) {
  ReportSet rs;
  RelRBO rel = diff_group_rbo(o);
  const std::size_t nh = o.H.dim(), ng = o.G.dim();
  auto exp_star = [&](const Vec& u) { return descendent_exp(o, rel.B, u); };

  double worst_bracket = 0.0;
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = i + 1; j < nh; ++j) {
      Vec u = basis_vec(nh, i), v = basis_vec(nh, j);
      Vec num = mixed_partials(
          [&](const Vec& t) {
            Matrix a = exp_star(vec_scale(t[0], u));
            Matrix b = exp_star(vec_scale(t[1], v));
            return (star(o, star(o, a, b), dag(o, a))).data();
          },
          2);
      Matrix m(o.H.ambient_dim(), o.H.ambient_dim(), num);
      Vec lhs = o.H.coords_of(m);
      Vec rhs = descendent_bracket(rel, u, v);
      worst_bracket = std::max(worst_bracket, vec_norm_inf(vec_sub(lhs, rhs)));
    }
  rs.add(CheckReport::from_residual("star_bracket_vs_descendent", worst_bracket, tol));

  double worst_theta = 0.0;
  for (std::size_t i = 0; i < nh; ++i) {
    Vec u = basis_vec(nh, i);
    Matrix expected = theta_matrix(rel, u);
    for (std::size_t a = 0; a < ng; ++a) {
      Vec ea = basis_vec(ng, a);
      Vec num = mixed_partials(
          [&](const Vec& t) {
            Matrix hh = exp_star(vec_scale(t[0], u));
            Matrix gg = o.G.exp(vec_scale(t[1], ea));
            return theta_group_action(o, hh, gg).data();
          },
          2);
      Matrix m(o.G.ambient_dim(), o.G.ambient_dim(), num);
      Vec col = o.G.coords_of(m);
      worst_theta = std::max(worst_theta, vec_norm_inf(vec_sub(col, expected.col(a))));
    }
  }
  rs.add(CheckReport::from_residual("theta_tangent_vs_theta", worst_theta, tol));
  return rs;
}

GroupRBO integrate_rbo(const RelRBO& rel, const MatrixGroup& G, const MatrixGroup& H,
                       const GroupAction& Phi, const IntegrateOptions& opts) {
  const double mism = diff_action_mismatch(Phi, G, H, rel);
  if (mism > opts.consistency_tol)
    throw GateError("integrate_rbo: Phi does not integrate phi (mismatch " +
                    std::to_string(mism) + ")");
  CheckReport gate = check_rbo(rel, 1e-8);
  if (!gate.pass) throw GateError("integrate_rbo: operator failed check_rbo");

  GroupRBO out;
  out.G = G;
  out.H = H;
  out.Phi = Phi;
  out.domain_radius = opts.radius;
  out.provenance = "integrated";

  struct Solver {
    RelRBO rel;
    MatrixGroup G, H;
    GroupAction Phi;
    NewtonOptions newton;
    std::map<std::vector<double>, Vec> cache;
    std::shared_mutex mutex;

    Vec solve_u(const Matrix& h) {
      {
        std::shared_lock lk(mutex);
        auto it = cache.find(h.data());
        if (it != cache.end()) return it->second;
      }
      SemidirectGroup sd{&G, &H, &Phi};
      auto f = [&](const Vec& u) {
        return H.log(sd.exp(rel.B * u, u).second);
      };
      Vec target = H.log(h);
      Vec u;
      try {
        u = newton_solve(f, target, target, newton);
      } catch (const ConvergenceError& e) {
        throw DomainError(
            "integration radius exceeded (Newton residual " +
            std::to_string(e.last_residual) + "); retry with a smaller radius");
      }
      std::unique_lock lk(mutex);
      cache.emplace(h.data(), u);
      return u;
    }
  };
  auto solver = std::make_shared<Solver>();
  solver->rel = rel;
  solver->G = G;
  solver->H = H;
  solver->Phi = Phi;
  solver->newton = opts.newton;

  out.B_map = GroupMap{"integrated", [solver](const Matrix& h) {
                         Vec u = solver->solve_u(h);
                         return solver->G.exp(solver->rel.B * u);
                       }};
  return out;
}

CheckReport check_local_rbo(const GroupRBO& o, const SampleOptions& s, double tol) {
  CheckReport r = check_group_rbo(o, s, tol);
  r.name = "local_rbo";
  return r;
}

Cochain van_est(const GroupRBO& o, const RelRBO& diff, const GroupCochain& F, double fd_step) {
  const int k = F.k;
  if (k < 1 || k > 3) throw UnsupportedError("van_est: degree must be 1, 2 or 3");
  const std::size_t nh = o.H.dim(), ng = o.G.dim();
  Cochain out;
  out.k = k;
  out.h_dim = nh;
  out.g_dim = ng;
  CochainBasis basis = make_cochain_basis(nh, ng, static_cast<std::size_t>(k - 1));
  out.coords.assign(basis.dim(), 0.0);
  auto exp_star = [&](const Vec& u) { return descendent_exp(o, diff.B, u); };

  if (k == 1) {
    out.coords = F({});
    return out;
  }
  if (k == 2) {
    for (std::size_t i = 0; i < nh; ++i) {
      Vec u = basis_vec(nh, i);
      Vec d = directional_derivative(
          [&](double t) { return F({exp_star(vec_scale(t, u))}); }, fd_step);
      for (std::size_t a = 0; a < ng; ++a) out.coords[basis.flat(i, a)] = d[a];
    }
    return out;
  }
  // k = 3: VE(F)(u1, u2) = D2 F(Exp(t1 u1), Exp(t2 u2)) - D2 F(Exp(t1 u2), Exp(t2 u1)).
  for (std::size_t t = 0; t < basis.tuples.size(); ++t) {
    const int i = basis.tuples[t][0], j = basis.tuples[t][1];
    Vec ui = basis_vec(nh, i), uj = basis_vec(nh, j);
    auto eval = [&](const Vec& a, const Vec& b) {
      return mixed_partials(
          [&](const Vec& tt) {
            return F({exp_star(vec_scale(tt[0], a)), exp_star(vec_scale(tt[1], b))});
          },
          2, fd_step);
    };
    Vec v = vec_sub(eval(ui, uj), eval(uj, ui));
    for (std::size_t a = 0; a < ng; ++a) out.coords[basis.flat(t, a)] = v[a];
  }
  return out;
}

CheckReport van_est_square_check(const GroupRBO& o, const RelRBO& diff, const GroupCochain& F,
                                 double tol) {
  if (F.k > 2) throw UnsupportedError("van_est_square_check: degree of F must be <= 2");
  GroupCochain dF = group_cochain_differential(o, F);
  Cochain lhs = van_est(o, diff, dF);
  Cochain veF = van_est(o, diff, F);
  Matrix dk = differential_matrix(diff, F.k);
  Vec rhs = dk * veF.coords;
  const double res = vec_norm_inf(vec_sub(lhs.coords, rhs));
  return CheckReport::from_residual("van_est_square", res, tol);
}

}  // namespace rbo
