#include "rbo/cohomology.hpp"

#include <algorithm>
#include <cmath>

#include "rbo/kernels.hpp"
#include "rbo/numerics.hpp"

namespace rbo {

namespace {

Vec basis_vec(std::size_t dim, std::size_t i) {
  Vec v(dim, 0.0);
  v[i] = 1.0;
  return v;
}

// Inserts value c into the sorted tuple `rest`; returns the sign of the
// permutation moving c from the front to its slot, or 0 on a repeat.
int insert_sorted_with_sign(std::vector<int>& rest, int c) {
  int pos = 0;
  for (int r : rest) {
    if (r == c) return 0;
    if (r < c) ++pos;
  }
  rest.insert(rest.begin() + pos, c);
  return (pos % 2 == 0) ? 1 : -1;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t CochainBasis::tuple_index(const std::vector<int>& t) const {
  // Lexicographic rank via the combinatorial number system.
  std::size_t rank = 0;
  int prev = -1;
  for (std::size_t i = 0; i < m; ++i) {
    for (int x = prev + 1; x < t[i]; ++x) rank += binomial(h_dim - 1 - x, m - 1 - i);
    prev = t[i];
  }
  return rank;
}

CochainBasis make_cochain_basis(std::size_t h_dim, std::size_t g_dim, std::size_t m) {
  CochainBasis b;
  b.h_dim = h_dim;
  b.g_dim = g_dim;
  b.m = m;
  if (m > h_dim) return b;
  std::vector<int> t(m);
  for (std::size_t i = 0; i < m; ++i) t[i] = static_cast<int>(i);
  if (m == 0) {
    b.tuples.push_back({});
    return b;
  }
  while (true) {
    b.tuples.push_back(t);
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && t[i] == static_cast<int>(h_dim - m + i)) --i;
    if (i < 0) break;
    ++t[i];
    for (std::size_t j = i + 1; j < m; ++j) t[j] = t[j - 1] + 1;
  }
  return b;
}

Cochain cochain_from_linear_map(const Matrix& f) {
  Cochain c;
  c.k = 2;
  c.g_dim = f.rows();
  c.h_dim = f.cols();
  c.coords.resize(c.g_dim * c.h_dim);
  for (std::size_t u = 0; u < c.h_dim; ++u)
    for (std::size_t a = 0; a < c.g_dim; ++a) c.coords[u * c.g_dim + a] = f(a, u);
  return c;
}

Matrix linear_map_from_cochain(const Cochain& c) {
  if (c.k != 2) throw DimensionError("linear_map_from_cochain: degree must be 2");
  Matrix f(c.g_dim, c.h_dim);
  for (std::size_t u = 0; u < c.h_dim; ++u)
    for (std::size_t a = 0; a < c.g_dim; ++a) f(a, u) = c.coords[u * c.g_dim + a];
  return f;
}

Matrix differential_matrix(const RelRBO& o, int k) {
  if (k < 1) throw DimensionError("differential_matrix: k >= 1 required");
  const std::size_t nh = o.h.dim(), ng = o.g.dim();
  const std::size_t m = static_cast<std::size_t>(k - 1);
  CochainBasis in = make_cochain_basis(nh, ng, m);
  CochainBasis out = make_cochain_basis(nh, ng, m + 1);
  Matrix d(out.dim(), in.dim());
  if (in.dim() == 0 || out.dim() == 0) return d;

  const std::vector<Matrix> theta = theta_basis_mats(o);
  // Structure constants of the descendent bracket on basis pairs.
  std::vector<std::vector<Vec>> cb(nh, std::vector<Vec>(nh));
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nh; ++j)
      cb[i][j] = descendent_bracket(o, basis_vec(nh, i), basis_vec(nh, j));

  // Row-blocks (output tuples J) are independent.
  kernels::parallel_for(out.tuples.size(), [&](std::size_t jt) {
    const std::vector<int>& J = out.tuples[jt];
    const std::size_t kk = J.size();
    for (std::size_t pos = 0; pos < kk; ++pos) {
      // (-1)^{pos} theta(u_{J[pos]}) f(J without pos); the paper indexes from
      // 1, hence (-1)^{i+1} = (-1)^{pos}.
      std::vector<int> sub(J);
      sub.erase(sub.begin() + pos);
      const double sgn = (pos % 2 == 0) ? 1.0 : -1.0;
      const std::size_t col_t = in.tuple_index(sub);
      const Matrix& th = theta[J[pos]];
      for (std::size_t r = 0; r < ng; ++r)
        for (std::size_t c = 0; c < ng; ++c)
          d(out.flat(jt, r), in.flat(col_t, c)) += sgn * th(r, c);
    }
    for (std::size_t p = 0; p < kk; ++p)
      for (std::size_t q = p + 1; q < kk; ++q) {
        // (-1)^{p+q+...}: paper's (-1)^{i+j} with 1-based i,j equals
        // (-1)^{p+q} for 0-based p,q... (i+j) = (p+1)+(q+1) = p+q+2.
        const double sgn_pq = ((p + q) % 2 == 0) ? 1.0 : -1.0;
        std::vector<int> rest(J);
        rest.erase(rest.begin() + q);
        rest.erase(rest.begin() + p);
        const Vec& w = cb[J[p]][J[q]];
        for (std::size_t c = 0; c < nh; ++c) {
          if (w[c] == 0.0) continue;
          std::vector<int> t(rest);
          const int s = insert_sorted_with_sign(t, static_cast<int>(c));
          if (s == 0) continue;
          const std::size_t col_t = in.tuple_index(t);
          const double coeff = sgn_pq * w[c] * s;
          for (std::size_t a = 0; a < ng; ++a)
            d(out.flat(jt, a), in.flat(col_t, a)) += coeff;
        }
      }
  });
  return d;
}

int cohomology_dim(const RelRBO& o, int k, const Tolerance& tol) {
  if (k < 1) throw DimensionError("cohomology_dim: k >= 1 required");
  Matrix dk = differential_matrix(o, k);
  const std::size_t dim_ck =
      make_cochain_basis(o.h.dim(), o.g.dim(), static_cast<std::size_t>(k - 1)).dim();
  int rank_dk = 0;
  if (!dk.empty()) rank_dk = rank_and_kernel(dk, tol).rank;
  int rank_prev = 0;
  if (k > 1) {
    Matrix dprev = differential_matrix(o, k - 1);
    if (!dprev.empty()) rank_prev = rank_and_kernel(dprev, tol).rank;
  }
  const int dim_ker = static_cast<int>(dim_ck) - rank_dk;
  return dim_ker - rank_prev;
}

CohomologyTable cohomology_table(const RelRBO& o, int kmax, const Tolerance& tol) {
  CohomologyTable t;
  std::vector<Matrix> ds;
  std::vector<int> ranks;
  for (int k = 1; k <= kmax + 1; ++k) ds.push_back(differential_matrix(o, k));
  for (const Matrix& d : ds) ranks.push_back(d.empty() ? 0 : rank_and_kernel(d, tol).rank);
  for (int k = 1; k <= kmax; ++k) {
    CohomologyRow row;
    row.k = k;
    row.dim_cochains =
        make_cochain_basis(o.h.dim(), o.g.dim(), static_cast<std::size_t>(k - 1)).dim();
    row.rank_dk = ranks[k - 1];
    const int rank_prev = (k >= 2) ? ranks[k - 2] : 0;
    row.dim_hk = static_cast<int>(row.dim_cochains) - row.rank_dk - rank_prev;
    t.rows.push_back(row);
  }
  for (int k = 1; k <= kmax; ++k) {
    if (ds[k - 1].empty() || ds[k].empty()) continue;
    t.dd_max = std::max(t.dd_max, (ds[k] * ds[k - 1]).norm_max());
  }
  return t;
}

ReportSet check_deformation(const RelRBO& o, const DeformationDirection& d, double tol) {
  ReportSet rs;
  const std::size_t nh = o.h.dim();
  const Matrix& bh = d.Bhat;
  double w0 = 0.0;
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = i + 1; j < nh; ++j) {
      Vec u = basis_vec(nh, i), v = basis_vec(nh, j);
      Vec bu = bh * u, bv = bh * v;
      Vec lhs = o.g.bracket(bu, bv);
      Vec rhs = vec_sub(bh * o.phi(bu, v), bh * o.phi(bv, u));
      w0 = std::max(w0, vec_norm_inf(vec_sub(lhs, rhs)));
    }
  rs.add(CheckReport::from_residual("weight0_identity", w0, tol));

  Matrix d2 = differential_matrix(o, 2);
  Vec vecb = cochain_from_linear_map(bh).coords;
  rs.add(CheckReport::from_residual("two_cocycle", vec_norm_inf(d2 * vecb), tol));

  for (double t : {1.0, -1.0, 0.5, -0.5}) {
    RelRBO ot = o;
    Matrix tb = bh;
    tb *= t;
    ot.B += tb;
    CheckReport r = check_rbo(ot, tol);
    r.name = "rbo_at_t=" + std::to_string(t);
    rs.add(r);
  }
  return rs;
}

double coboundary_membership_residual(const RelRBO& o, const Matrix& f) {
  Matrix d1 = differential_matrix(o, 1);
  Vec vecf = cochain_from_linear_map(f).coords;
  auto [x, res] = lsq_solve(d1, vecf);
  return res / std::max(1.0, vec_norm(vecf));
}

ReportSet deformation_equivalence(const RelRBO& o, const DeformationDirection& d1,
                                  const DeformationDirection& d2, const Vec& x, double tol) {
  ReportSet rs;
  const std::size_t nh = o.h.dim(), ng = o.g.dim();
  // Bhat1 - Bhat2 = d_CE x, i.e. (Bhat1 - Bhat2)(u) = B(phi(x) u) + [B u, x].
  double r1 = 0.0, r2 = 0.0;
  Matrix phix = o.action().of(x);
  for (std::size_t i = 0; i < nh; ++i) {
    Vec u = basis_vec(nh, i);
    Vec diff = vec_sub(d1.Bhat * u, d2.Bhat * u);
    Vec dx = vec_add(o.apply_B(phix * u), o.g.bracket(o.apply_B(u), x));
    r1 = std::max(r1, vec_norm_inf(vec_sub(diff, dx)));
    Vec aux_l = o.g.bracket(x, d1.Bhat * u);
    Vec aux_r = d2.Bhat * (phix * u);
    r2 = std::max(r2, vec_norm_inf(vec_sub(aux_l, aux_r)));
  }
  (void)ng;
  rs.add(CheckReport::from_residual("sameclass_coboundary", r1, tol));
  rs.add(CheckReport::from_residual("sameclass_auxiliary", r2, tol));
  rs.add(CheckReport::from_residual("class_membership",
                                    coboundary_membership_residual(o, d1.Bhat - d2.Bhat), 1e-8));
  return rs;
}

ReportSet r_matrix_deformation_bridge(const ModifiedR& r, const Matrix& Rhat, double tol) {
  CheckReport gate = check_mybe(r, 1e-9);
  if (!gate.pass) throw GateError("r_matrix_deformation_bridge: R failed check_mybe");
  RelRBO o = from_modified_r(r);
  DeformationDirection d{0.5 * Rhat};
  ReportSet rs = check_deformation(o, d, tol);
  // Two-sided correspondence at sampled t: R + t Rhat is a modified r-matrix
  // iff B + t Rhat/2 is a Rota-Baxter operator.
  for (double t : {0.5, -0.5, 1.0, -1.0}) {
    ModifiedR rt = r;
    Matrix tr = Rhat;
    tr *= t;
    rt.R += tr;
    RelRBO ot = o;
    Matrix tb = d.Bhat;
    tb *= t;
    ot.B += tb;
    const bool mybe_ok = check_mybe(rt, tol).pass;
    const bool rbo_ok = check_rbo(ot, tol).pass;
    CheckReport c;
    c.name = "bridge_verdicts_t=" + std::to_string(t);
    c.pass = (mybe_ok == rbo_ok);
    c.residual = mybe_ok == rbo_ok ? 0.0 : 1.0;
    c.tol = 0.5;
    rs.add(c);
  }
  return rs;
}

namespace {

double det_small(Matrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1.0;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(best, k))) best = i;
    if (a(best, k) == 0.0) return 0.0;
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(best, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace

Matrix pushforward_matrix(const Matrix& psi_g, const Matrix& psi_h, int k) {
  const std::size_t ng = psi_g.rows(), nh = psi_h.rows();
  const std::size_t m = static_cast<std::size_t>(k - 1);
  CochainBasis basis = make_cochain_basis(nh, ng, m);
  Matrix inv_h = inverse(psi_h);
  Matrix p(basis.dim(), basis.dim());
  // p(omega)(e_I) = psi_g sum_J det(inv_h[J, I]) omega(e_J).
  for (std::size_t it = 0; it < basis.tuples.size(); ++it) {
    const auto& I = basis.tuples[it];
    for (std::size_t jt = 0; jt < basis.tuples.size(); ++jt) {
      const auto& J = basis.tuples[jt];
      Matrix minor(m, m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) minor(r, c) = inv_h(J[r], I[c]);
      const double dmin = det_small(minor);
      if (dmin == 0.0) continue;
      for (std::size_t a = 0; a < ng; ++a)
        for (std::size_t b = 0; b < ng; ++b)
          p(basis.flat(it, a), basis.flat(jt, b)) += dmin * psi_g(a, b);
    }
  }
  return p;
}

Cochain pushforward_cochain(const Matrix& psi_g, const Matrix& psi_h, const Cochain& omega) {
  Matrix p = pushforward_matrix(psi_g, psi_h, omega.k);
  Cochain out = omega;
  out.coords = p * omega.coords;
  return out;
}

}  // namespace rbo
