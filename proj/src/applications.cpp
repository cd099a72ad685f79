#include "rbo/applications.hpp"

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

Matrix span_matrix(const std::vector<Vec>& vs, std::size_t dim) {
  Matrix m(dim, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) m.set_col(j, vs[j]);
  return m;
}

double membership_residual(const std::vector<Vec>& span, const Vec& w, std::size_t dim) {
  if (span.empty()) return vec_norm(w);
  auto [x, res] = lsq_solve(span_matrix(span, dim), w);
  return res / std::max(1.0, vec_norm(w));
}

// Ideal check: [k, s] stays in the span of k.
double ideal_residual(const LieAlgebra& a, const std::vector<Vec>& k, const std::vector<Vec>& s) {
  double worst = 0.0;
  for (const Vec& x : k)
    for (const Vec& y : s)
      worst = std::max(worst, membership_residual(k, a.bracket(x, y), a.dim()));
  return worst;
}

}  // namespace

InfinitesimalSplit split(const RelRBO& o, const Tolerance& tol) {
  if (!is_adjoint_rbo(o)) throw UnsupportedError("split: operator must be adjoint (h = g)");
  CheckReport gate = check_rbo(o, 1e-9);
  if (!gate.pass) throw GateError("split: operator failed check_rbo");
  const std::size_t n = o.g.dim();
  const Matrix bp = o.B + Matrix::identity(n);

  InfinitesimalSplit s;
  s.g_plus = column_space_basis(bp, tol);
  s.g_minus = column_space_basis(o.B, tol);
  s.k_plus = rank_and_kernel(o.B, tol).kernel_basis;
  s.k_minus = rank_and_kernel(bp, tol).kernel_basis;

  auto sub = [&](const char* name, const std::vector<Vec>& v) {
    CheckReport r = is_subalgebra(v, o.g, 1e-8);
    r.name = name;
    s.checks.add(r);
  };
  sub("g_plus_subalgebra", s.g_plus);
  sub("g_minus_subalgebra", s.g_minus);
  sub("k_plus_subalgebra", s.k_plus);
  sub("k_minus_subalgebra", s.k_minus);
  s.checks.add(CheckReport::from_residual("k_plus_ideal_in_g_plus",
                                          ideal_residual(o.g, s.k_plus, s.g_plus), 1e-8));
  s.checks.add(CheckReport::from_residual("k_minus_ideal_in_g_minus",
                                          ideal_residual(o.g, s.k_minus, s.g_minus), 1e-8));
  // Every x decomposes as x = x_+ - x_- with x_+ = (B+Id)x in g_+ and
  // x_- = B x in g_-, the pair related by the Cayley transform.
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = basis_vec(n, i);
    Vec xp = bp * x, xm = o.B * x;
    worst = std::max(worst, vec_norm_inf(vec_sub(x, vec_sub(xp, xm))));
    worst = std::max(worst, membership_residual(s.g_plus, xp, n));
    worst = std::max(worst, membership_residual(s.g_minus, xm, n));
  }
  s.checks.add(CheckReport::from_residual("decomposition", worst, 1e-9));
  return s;
}

namespace {

// Extends `base` to a basis of span(base + candidates); returns the added
// candidates (class representatives of the quotient).
std::vector<Vec> quotient_complement(const std::vector<Vec>& base,
                                     const std::vector<Vec>& candidates, std::size_t dim,
                                     const Tolerance& tol) {
  std::vector<Vec> current = base;
  std::vector<Vec> added;
  for (const Vec& c : candidates) {
    Matrix m(dim, current.size() + 1);
    for (std::size_t j = 0; j < current.size(); ++j) m.set_col(j, current[j]);
    m.set_col(current.size(), c);
    if (rank_and_kernel(m, tol).rank == static_cast<int>(current.size() + 1)) {
      current.push_back(c);
      added.push_back(c);
    }
  }
  return added;
}

// Coordinates of w in the basis [base | comp]; returns only the comp part.
Vec quotient_coords(const std::vector<Vec>& base, const std::vector<Vec>& comp, const Vec& w) {
  std::vector<Vec> all = base;
  all.insert(all.end(), comp.begin(), comp.end());
  if (all.empty()) return {};
  auto [x, res] = lsq_solve(span_matrix(all, w.size()), w);
  (void)res;
  return Vec(x.begin() + base.size(), x.end());
}

}  // namespace

CayleyTransform cayley_transform(const InfinitesimalSplit& s, const RelRBO& o,
                                 const Tolerance& tol) {
  const std::size_t n = o.g.dim();
  CayleyTransform c;
  c.q_plus = quotient_complement(s.k_plus, s.g_plus, n, tol);
  c.q_minus = quotient_complement(s.k_minus, s.g_minus, n, tol);
  c.map = Matrix(c.q_minus.size(), c.q_plus.size());
  if (c.q_plus.empty() && c.q_minus.empty()) {
    c.checks.add(CheckReport::from_residual("cayley_well_defined", 0.0, 1e-8));
    return c;  // zero-dimensional quotients: the empty map is valid
  }
  const Matrix bp = o.B + Matrix::identity(n);
  double worst = 0.0;
  for (std::size_t j = 0; j < c.q_plus.size(); ++j) {
    auto [u, res] = lsq_solve(bp, c.q_plus[j]);
    worst = std::max(worst, res);
    c.map.set_col(j, quotient_coords(s.k_minus, c.q_minus, o.B * u));
    // Independence of the representative: shift u by kernel elements.
    for (const Vec& z : s.k_minus) {
      Vec u2 = vec_add(u, z);
      Vec cls = quotient_coords(s.k_minus, c.q_minus, o.B * u2);
      worst = std::max(worst, vec_norm_inf(vec_sub(cls, c.map.col(j))));
    }
  }
  c.checks.add(CheckReport::from_residual("cayley_well_defined", worst, 1e-8));
  CheckReport inv;
  inv.name = "cayley_invertible";
  inv.tol = 0.5;
  if (c.q_plus.size() != c.q_minus.size()) {
    inv.pass = false;
    inv.residual = 1.0;
    inv.note = "quotient dimensions differ";
  } else {
    const int r = c.map.empty() ? 0 : rank_and_kernel(c.map, tol).rank;
    inv.pass = r == static_cast<int>(c.q_plus.size());
    inv.residual = inv.pass ? 0.0 : 1.0;
  }
  c.checks.add(inv);
  return c;
}

Factorization factorize(const GroupRBO& o, const Vec& X0, double t) {
  Factorization f;
  f.exp2tX = o.G.exp(vec_scale(2.0 * t, X0));
  if (!o.in_domain(f.exp2tX))
    throw DomainError("factorize: exp(2t X0) escapes the operator domain at t=" +
                      std::to_string(t));
  f.g_minus = o.B(f.exp2tX);
  f.g_plus = f.exp2tX * f.g_minus;
  f.residual = (f.exp2tX - f.g_plus * inverse(f.g_minus)).norm_fro();
  return f;
}

Vec aks_compatible_momentum(const LieAlgebra& a, const Vec& X0) {
  Matrix adT = a.ad(X0).transpose();
  RankResult rr = rank_and_kernel(adT);
  if (rr.kernel_basis.empty())
    throw SingularError("aks_compatible_momentum: ad_{X0}^T has trivial kernel");
  Vec L0 = rr.kernel_basis.front();
  return vec_scale(1.0 / vec_norm(L0), L0);
}

AksFlow aks_flow(const GroupRBO& o, const Vec& X0, const Vec& L0, const std::vector<double>& ts) {
  AksFlow flow;
  for (double t : ts) {
    try {
      Factorization f = factorize(o, X0, t);
      AksPoint p;
      p.t = t;
      p.L_plus = o.G.adjoint(f.g_plus).transpose() * L0;
      p.L_minus = o.G.adjoint(f.g_minus).transpose() * L0;
      p.agreement = vec_norm_inf(vec_sub(p.L_plus, p.L_minus));
      flow.points.push_back(std::move(p));
    } catch (const DomainError& e) {
      flow.truncated = true;
      flow.note = e.what();
      break;
    }
  }
  return flow;
}

Matrix star_local(const GroupRBO& o, const Matrix& g1, const Matrix& g2) {
  Matrix b1 = o.B(g1);
  return g1 * b1 * g2 * inverse(b1);
}

Matrix dag_local(const GroupRBO& o, const Matrix& g) {
  Matrix b = o.B(g);
  return inverse(b) * inverse(g) * b;
}

ReportSet local_descendent_group_check(const GroupRBO& o, const SampleOptions& s, double tol) {
  ReportSet rs;
  const Matrix e = o.G.identity();
  std::vector<Matrix> pts = sample_group_points(o.G, 3 * s.count, s.radius, s.seed);

  double r_id = 0.0, r_inv = 0.0, r_binv = 0.0, r_assoc = 0.0;
  int skipped = 0;
  for (int i = 0; i < s.count; ++i) {
    const Matrix& g = pts[3 * i];
    if (!o.in_domain(g)) {
      ++skipped;
      continue;
    }
    r_id = std::max(r_id, (star_local(o, g, e) - g).norm_max());
    r_id = std::max(r_id, (star_local(o, e, g) - g).norm_max());
    Matrix gd = dag_local(o, g);
    if (o.in_domain(gd)) {
      r_inv = std::max(r_inv, (star_local(o, g, gd) - e).norm_max());
      r_inv = std::max(r_inv, (star_local(o, gd, g) - e).norm_max());
      r_binv = std::max(r_binv, (o.B(gd) - inverse(o.B(g))).norm_max());
    } else {
      ++skipped;
    }
  }
  for (int i = 0; i < s.count; ++i) {
    const Matrix &g1 = pts[3 * i], &g2 = pts[3 * i + 1], &g3 = pts[3 * i + 2];
    if (!o.in_domain(g1) || !o.in_domain(g2) || !o.in_domain(g3)) {
      ++skipped;
      continue;
    }
    Matrix g12 = star_local(o, g1, g2);
    Matrix g23 = star_local(o, g2, g3);
    if (!o.in_domain(g12) || !o.in_domain(g23)) {
      ++skipped;
      continue;
    }
    r_assoc = std::max(r_assoc, (star_local(o, g12, g3) - star_local(o, g1, g23)).norm_max());
  }
  rs.add(CheckReport::from_residual("local_star_identity", r_id, tol));
  rs.add(CheckReport::from_residual("local_star_inverse", r_inv, tol));
  rs.add(CheckReport::from_residual("local_B_of_dag", r_binv, tol));
  CheckReport assoc = CheckReport::from_residual("local_star_associative", r_assoc, tol);
  assoc.skipped = skipped;
  rs.add(assoc);
  return rs;
}

ReportSet matched_pair_algebra_check(const MatchedPairAlg& mp, double tol) {
  ReportSet rs;
  Representation rho{&mp.g, mp.h.dim(), mp.rho};
  Representation mu{&mp.h, mp.g.dim(), mp.mu};
  CheckReport rr = check_representation(rho, tol);
  rr.name = "rho_representation";
  rs.add(rr);
  CheckReport rm = check_representation(mu, tol);
  rm.name = "mu_representation";
  rs.add(rm);

  const std::size_t ng = mp.g.dim(), nh = mp.h.dim();
  double w1 = 0.0, w2 = 0.0;
  for (std::size_t a = 0; a < ng; ++a) {
    Vec x = basis_vec(ng, a);
    const Matrix& rx = mp.rho[a];
    for (std::size_t i = 0; i < nh; ++i)
      for (std::size_t j = i + 1; j < nh; ++j) {
        Vec xi = basis_vec(nh, i), eta = basis_vec(nh, j);
        Vec lhs = rx * mp.h.basis_bracket(i, j);
        Vec rhs = vec_add(mp.h.bracket(rx * xi, eta), mp.h.bracket(xi, rx * eta));
        rhs = vec_add(rhs, rho.of(mp.mu[j] * x) * xi);
        rhs = vec_sub(rhs, rho.of(mp.mu[i] * x) * eta);
        w1 = std::max(w1, vec_norm_inf(vec_sub(lhs, rhs)));
      }
  }
  for (std::size_t a = 0; a < nh; ++a) {
    Vec xi = basis_vec(nh, a);
    const Matrix& mxi = mp.mu[a];
    for (std::size_t i = 0; i < ng; ++i)
      for (std::size_t j = i + 1; j < ng; ++j) {
        Vec x = basis_vec(ng, i), y = basis_vec(ng, j);
        Vec lhs = mxi * mp.g.basis_bracket(i, j);
        Vec rhs = vec_add(mp.g.bracket(mxi * x, y), mp.g.bracket(x, mxi * y));
        rhs = vec_add(rhs, mu.of(mp.rho[j] * xi) * x);
        rhs = vec_sub(rhs, mu.of(mp.rho[i] * xi) * y);
        w2 = std::max(w2, vec_norm_inf(vec_sub(lhs, rhs)));
      }
  }
  rs.add(CheckReport::from_residual("matched_pair_mp1", w1, tol));
  rs.add(CheckReport::from_residual("matched_pair_mp2", w2, tol));
  return rs;
}

MatchedPairFromRbo matched_pair_from_rbo(const RelRBO& o, const Tolerance& tol) {
  if (!is_adjoint_rbo(o))
    throw UnsupportedError("matched_pair_from_rbo: operator must be adjoint (h = g)");
  CheckReport gate = check_rbo(o, 1e-9);
  if (!gate.pass) throw GateError("matched_pair_from_rbo: operator failed check_rbo");
  const std::size_t n = o.g.dim();
  LieAlgebra dsum = direct_sum(o.g, o.g);

  MatchedPairFromRbo out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = basis_vec(n, i);
    Vec bx = o.B * x;
    out.gB_basis.push_back(vec_cat(bx, vec_add(x, bx)));
    out.diag_basis.push_back(vec_cat(x, x));
  }
  CheckReport s1 = is_subalgebra(out.gB_basis, dsum, 1e-8);
  s1.name = "gB_subalgebra";
  out.checks.add(s1);
  CheckReport s2 = is_subalgebra(out.diag_basis, dsum, 1e-8);
  s2.name = "gdiag_subalgebra";
  out.checks.add(s2);

  // Direct-sum rank: [diag | gB] has rank 2n.
  Matrix all(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    all.set_col(j, out.diag_basis[j]);
    all.set_col(n + j, out.gB_basis[j]);
  }
  const int rank = rank_and_kernel(all, tol).rank;
  CheckReport rk;
  rk.name = "direct_sum_rank";
  rk.pass = rank == static_cast<int>(2 * n);
  rk.residual = static_cast<double>(2 * n - rank);
  rk.tol = 0.5;
  out.checks.add(rk);

  // Structure constants of g_B in its own basis.
  Matrix gb_span = span_matrix(out.gB_basis, 2 * n);
  LieAlgebra gB(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec w = dsum.bracket(out.gB_basis[i], out.gB_basis[j]);
      auto [coeffs, res] = lsq_solve(gb_span, w);
      gB.set_bracket(i, j, coeffs);
    }

  // Cross brackets [p_i, q_j] = rho(p_i) q_j - mu(q_j) p_i, resolved in the
  // basis [diag | gB].
  std::vector<Matrix> rho(n, Matrix(n, n));
  std::vector<Matrix> mu(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = dsum.bracket(out.gB_basis[i], out.diag_basis[j]);
      Vec coeffs = lu_solve(all, w);
      for (std::size_t a = 0; a < n; ++a) {
        rho[i](a, j) = coeffs[a];        // diag component
        mu[j](a, i) = -coeffs[n + a];    // gB component, negated
      }
    }

  out.pair.g = gB;
  out.pair.h = o.g;  // g_diag is isomorphic to g
  out.pair.rho = rho;
  out.pair.mu = mu;
  for (CheckReport& c : matched_pair_algebra_check(out.pair).checks) out.checks.add(c);
  return out;
}

namespace {

using GPair = std::pair<Matrix, Matrix>;

GPair pair_mul(const GPair& a, const GPair& b) { return {a.first * b.first, a.second * b.second}; }
GPair pair_inv(const GPair& a) { return {inverse(a.first), inverse(a.second)}; }
double pair_dist(const GPair& a, const GPair& b) {
  return std::max((a.first - b.first).norm_max(), (a.second - b.second).norm_max());
}

// Membership of (a, b) in G_B = {(B(g), g B(g))}: the parameter is g = b a^{-1}
// and membership means a = B(b a^{-1}).
double gB_membership(const GroupRBO& o, const GPair& p) {
  return (p.first - o.B(p.second * inverse(p.first))).norm_max();
}

GPair gB_element(const GroupRBO& o, const Matrix& g) {
  Matrix b = o.B(g);
  return {b, g * b};
}

GPair diag_element(const Matrix& h) { return {h, h}; }

// Factor (a, b) = q' p' with q' in G_diag and p' in G_B:
// p' has parameter g' = dag(b^{-1} a) and q' = (h', h') with h' = a B(b^{-1} a).
void factor_qp(const GroupRBO& o, const GPair& ab, Matrix& h_out, Matrix& g_out) {
  Matrix w = inverse(ab.second) * ab.first;
  h_out = ab.first * o.B(w);
  g_out = dag_local(o, w);
}

}  // namespace

ReportSet matched_pair_group_check(const GroupRBO& o, const SampleOptions& s, double tol) {
  ReportSet rs;
  std::mt19937 rng(s.seed);
  double r_closure = 0.0, r_fact = 0.0, r_mpg1 = 0.0, r_mpg2 = 0.0;
  int skipped = 0;
  for (int it = 0; it < s.count; ++it) {
    Matrix g1 = o.G.exp(sample_algebra_coords(o.G.dim(), s.radius, rng));
    Matrix g2 = o.G.exp(sample_algebra_coords(o.G.dim(), s.radius, rng));
    Matrix h1 = o.G.exp(sample_algebra_coords(o.G.dim(), s.radius, rng));
    Matrix h2 = o.G.exp(sample_algebra_coords(o.G.dim(), s.radius, rng));
    if (!o.in_domain(g1) || !o.in_domain(g2)) {
      ++skipped;
      continue;
    }
    GPair p1 = gB_element(o, g1), p2 = gB_element(o, g2);
    r_closure = std::max(r_closure, gB_membership(o, pair_mul(p1, p2)));
    r_closure = std::max(r_closure, gB_membership(o, pair_inv(p1)));

    // Unique factorization of an arbitrary pair.
    GPair ab{g1, h1};
    Matrix w = ab.second * inverse(ab.first);
    GPair p = gB_element(o, w);
    Matrix q0 = inverse(o.B(w)) * ab.first;
    r_fact = std::max(r_fact, pair_dist(pair_mul(p, diag_element(q0)), ab));

    // Matched-pair actions from the opposite factorization p q = (p|>q)(p<|q).
    auto act = [&](const GPair& pp, const Matrix& h, Matrix& hr, Matrix& gr) {
      factor_qp(o, pair_mul(pp, diag_element(h)), hr, gr);
    };
    Matrix ha, ga, hb, gb, hc, gc;
    // (mpg1): p |> (h1 h2) = (p |> h1) ((p <| h1) |> h2)
    act(p1, h1 * h2, ha, ga);
    act(p1, h1, hb, gb);
    act(gB_element(o, gb), h2, hc, gc);
    r_mpg1 = std::max(r_mpg1, (ha - hb * hc).norm_max());
    // (mpg2): (p1 p2) <| h = (p1 <| (p2 |> h)) (p2 <| h)
    Matrix h12a, g12a;
    factor_qp(o, pair_mul(pair_mul(p1, p2), diag_element(h1)), h12a, g12a);
    Matrix hp2, gp2;
    act(p2, h1, hp2, gp2);
    Matrix hp1, gp1;
    act(p1, hp2, hp1, gp1);
    GPair lhs = gB_element(o, g12a);
    GPair rhs = pair_mul(gB_element(o, gp1), gB_element(o, gp2));
    r_mpg2 = std::max(r_mpg2, pair_dist(lhs, rhs));
  }
  CheckReport c1 = CheckReport::from_residual("group_closure", r_closure, tol);
  c1.skipped = skipped;
  rs.add(c1);
  rs.add(CheckReport::from_residual("unique_factorization", r_fact, tol));
  rs.add(CheckReport::from_residual("mpg1", r_mpg1, tol));
  rs.add(CheckReport::from_residual("mpg2", r_mpg2, tol));
  return rs;
}

}  // namespace rbo
