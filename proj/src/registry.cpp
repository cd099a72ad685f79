#include "rbo/registry.hpp"

#include <algorithm>

#include "rbo/numerics.hpp"

namespace rbo {

MatrixGroup euclidean_group(std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      Matrix e(n + 1, n + 1);
      e(p, q) = 1.0;
      e(q, p) = -1.0;
      basis.push_back(e);
    }
  for (std::size_t k = 0; k < n; ++k) {
    Matrix e(n + 1, n + 1);
    e(k, n) = 1.0;
    basis.push_back(e);
  }
  return MatrixGroup("euclidean" + std::to_string(n), n + 1, std::move(basis));
}

MatrixGroup so3_group() {
  Matrix l1(3, 3), l2(3, 3), l3(3, 3);
  l1(1, 2) = -1.0;
  l1(2, 1) = 1.0;
  l2(0, 2) = 1.0;
  l2(2, 0) = -1.0;
  l3(0, 1) = -1.0;
  l3(1, 0) = 1.0;
  return MatrixGroup("so3", 3, {l1, l2, l3});
}

MatrixGroup up2_group() {
  Matrix e11(2, 2), e12(2, 2), e22(2, 2);
  e11(0, 0) = 1.0;
  e12(0, 1) = 1.0;
  e22(1, 1) = 1.0;
  return MatrixGroup("up2", 2, {e11, e12, e22});
}

MatrixGroup unipotent_line_group() {
  Matrix e12(2, 2);
  e12(0, 1) = 1.0;
  return MatrixGroup("line", 2, {e12});
}

MatrixGroup gl_group(std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(n, n);
      e(i, j) = 1.0;
      basis.push_back(e);
    }
  return MatrixGroup("gl" + std::to_string(n), n, std::move(basis));
}

GroupAction trivial_action(const MatrixGroup& H) {
  GroupAction a;
  a.name = "trivial";
  a.kind = GroupAction::Kind::trivial;
  a.act = [](const Matrix&, const Matrix& h) { return h; };
  const std::size_t d = H.dim();
  a.induced_on_algebra = [d](const Matrix&) { return Matrix::identity(d); };
  return a;
}

GroupAction conjugation_action(const MatrixGroup& H) {
  GroupAction a;
  a.name = "conjugation";
  a.kind = GroupAction::Kind::conjugation;
  a.act = [](const Matrix& g, const Matrix& h) { return g * h * inverse(g); };
  a.induced_on_algebra = [H](const Matrix& g) {
    Matrix gi = inverse(g);
    Matrix m(H.dim(), H.dim());
    for (std::size_t j = 0; j < H.dim(); ++j) m.set_col(j, H.coords_of(g * H.basis()[j] * gi));
    return m;
  };
  return a;
}

GroupAction up2_scaling_action() {
  GroupAction a;
  a.name = "up2_scaling";
  a.kind = GroupAction::Kind::linear_on_vector_group;
  a.act = [](const Matrix& g, const Matrix& h) {
    Matrix out = Matrix::identity(2);
    out(0, 1) = g(0, 0) * h(0, 1);
    return out;
  };
  a.induced_on_algebra = [](const Matrix& g) {
    Matrix m(1, 1);
    m(0, 0) = g(0, 0);
    return m;
  };
  return a;
}

GroupMap identity_operator_map(const MatrixGroup& G) {
  const std::size_t n = G.ambient_dim();
  return GroupMap{"identity", [n](const Matrix&) { return Matrix::identity(n); }};
}

GroupMap inverse_operator_map() {
  return GroupMap{"inverse", [](const Matrix& g) { return inverse(g); }};
}

GroupMap euclidean_factorization_map(std::size_t n) {
  return GroupMap{"euclidean_factorization", [n](const Matrix& x) {
                    Matrix out = Matrix::identity(n + 1);
                    // out translation = -A^T alpha
                    for (std::size_t i = 0; i < n; ++i) {
                      double s = 0.0;
                      for (std::size_t j = 0; j < n; ++j) s += x(j, i) * x(j, n);
                      out(i, n) = -s;
                    }
                    return out;
                  }};
}

GroupMap up2_unipotent_embedding() {
  return GroupMap{"up2_unipotent", [](const Matrix& h) { return h; }};
}

GroupMap gl_block_lower_factor_map(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  return GroupMap{"gl_block_lower_factor", [p, q, n](const Matrix& g) {
                    // g = g_+ g_- with g_+ block upper unipotent and
                    // g_- = [[A - B D^{-1} C, 0], [C, D]]; returns g_-^{-1}.
                    Matrix d(q, q);
                    for (std::size_t i = 0; i < q; ++i)
                      for (std::size_t j = 0; j < q; ++j) d(i, j) = g(p + i, p + j);
                    Matrix dinv = inverse(d);
                    Matrix gm(n, n);
                    for (std::size_t i = 0; i < q; ++i)
                      for (std::size_t j = 0; j < n; ++j) gm(p + i, j) = g(p + i, j);
                    for (std::size_t i = 0; i < p; ++i)
                      for (std::size_t j = 0; j < p; ++j) {
                        double bdc = 0.0;
                        for (std::size_t r = 0; r < q; ++r)
                          for (std::size_t s = 0; s < q; ++s)
                            bdc += g(i, p + r) * dinv(r, s) * g(p + s, j);
                        gm(i, j) = g(i, j) - bdc;
                      }
                    return inverse(gm);
                  }};
}

RelRBO zero_rbo_so3() {
  RelRBO o;
  o.g = so3_algebra();
  o.h = o.g;
  o.phi_mats = adjoint_action(o.g).mats;
  o.B = Matrix(3, 3);
  return o;
}

RelRBO neg_id_rbo(const LieAlgebra& a) {
  RelRBO o;
  o.g = a;
  o.h = a;
  o.phi_mats = adjoint_action(o.g).mats;
  o.B = -1.0 * Matrix::identity(a.dim());
  return o;
}

RelRBO ex24_rbo() {
  RelRBO o;
  o.g = up2_algebra();
  o.h = abelian_algebra(1);
  Matrix one(1, 1), zero(1, 1);
  one(0, 0) = 1.0;
  o.phi_mats = {one, zero, zero};
  o.B = Matrix(3, 1);
  o.B(1, 0) = 1.0;  // B(r) = r E12
  return o;
}

RelRBO euclidean_rbo(std::size_t n) {
  RelRBO o;
  o.g = euclidean_algebra(n);
  o.h = o.g;
  o.phi_mats = adjoint_action(o.g).mats;
  const std::size_t r = n * (n - 1) / 2;
  o.B = Matrix(r + n, r + n);
  for (std::size_t k = 0; k < n; ++k) o.B(r + k, r + k) = -1.0;  // (x, u) -> (0, -u)
  return o;
}

RelRBO perturbed_euclidean_rbo(double eps) {
  RelRBO o = euclidean_rbo(2);
  o.B(1, 1) += eps;  // first translation coordinate; breaks eq. (B) at order eps
  return o;
}

RelRBO gl2_split_rbo() {
  RelRBO o;
  o.g = gl_algebra(2);  // basis E11, E12, E21, E22
  o.h = o.g;
  o.phi_mats = adjoint_action(o.g).mats;
  o.B = Matrix(4, 4);
  o.B(0, 0) = -0.5;
  o.B(2, 2) = -1.0;
  o.B(3, 3) = -0.5;
  return o;
}

RelRBO abelian_trivial_rbo(std::size_t n) {
  RelRBO o;
  o.g = abelian_algebra(n);
  o.h = o.g;
  o.phi_mats.assign(n, Matrix(n, n));
  o.B = Matrix(n, n);
  return o;
}

std::vector<std::string> registry_names() {
  return {"trivial", "euclidean2", "euclidean3", "so3_inverse", "up2", "gl_block"};
}

OperatorBundle make_bundle(const std::string& name) {
  OperatorBundle b;
  b.name = name;
  if (name == "euclidean2" || name == "euclidean3") {
    const std::size_t n = (name == "euclidean2") ? 2 : 3;
    b.group_op.G = euclidean_group(n);
    b.group_op.H = b.group_op.G;
    b.group_op.Phi = conjugation_action(b.group_op.H);
    b.group_op.B_map = euclidean_factorization_map(n);
    b.algebra_op = euclidean_rbo(n);
  } else if (name == "so3_inverse") {
    b.group_op.G = so3_group();
    b.group_op.H = b.group_op.G;
    b.group_op.Phi = conjugation_action(b.group_op.H);
    b.group_op.B_map = inverse_operator_map();
    b.algebra_op = neg_id_rbo(so3_algebra());
  } else if (name == "up2") {
    b.group_op.G = up2_group();
    b.group_op.H = unipotent_line_group();
    b.group_op.Phi = up2_scaling_action();
    b.group_op.B_map = up2_unipotent_embedding();
    b.algebra_op = ex24_rbo();
  } else if (name == "trivial") {
    b.group_op.G = euclidean_group(2);
    b.group_op.H = b.group_op.G;
    b.group_op.Phi = conjugation_action(b.group_op.H);
    b.group_op.B_map = identity_operator_map(b.group_op.G);
    b.algebra_op = euclidean_rbo(2);
    b.algebra_op.B = Matrix(b.algebra_op.g.dim(), b.algebra_op.h.dim());
  } else if (name == "gl_block") {
    b.group_op.G = gl_group(2);
    b.group_op.H = b.group_op.G;
    b.group_op.Phi = conjugation_action(b.group_op.H);
    b.group_op.B_map = gl_block_lower_factor_map(1, 1);
    b.group_op.domain_radius = 0.6;
    b.algebra_op.g = gl_algebra(2);
    b.algebra_op.h = b.algebra_op.g;
    b.algebra_op.phi_mats = adjoint_action(b.algebra_op.g).mats;
    b.algebra_op.B = Matrix(4, 4);
    b.algebra_op.B(0, 0) = -1.0;  // -projection onto the block-lower part
    b.algebra_op.B(2, 2) = -1.0;
    b.algebra_op.B(3, 3) = -1.0;
  } else {
    throw Error("unknown registry operator: " + name);
  }
  return b;
}

}  // namespace rbo
