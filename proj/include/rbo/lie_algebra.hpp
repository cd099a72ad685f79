#pragma once

#include <string>
#include <vector>

#include "rbo/matrix.hpp"
#include "rbo/report.hpp"

namespace rbo {

/// Finite-dimensional real Lie algebra given by structure constants over a
/// fixed basis. Constants are stored for i < j only; the bracket for i > j
/// follows by antisymmetry, so antisymmetry is structural rather than tested.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sets [e_i, e_j] = sum_k coeffs[k] e_k for i < j.
  void set_bracket(std::size_t i, std::size_t j, const Vec& coeffs);
  /// Coefficients of [e_i, e_j] for any i, j (sign-flipped when i > j).
  Vec basis_bracket(std::size_t i, std::size_t j) const;

  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad_x acting on the algebra.
  Matrix ad(const Vec& x) const;

  /// Max Jacobi residual over basis triples.
  CheckReport check_jacobi(double tol = 1e-10) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Vec> c_;  // upper-triangular pair (i<j) -> coefficient vector
  std::size_t pair_index(std::size_t i, std::size_t j) const;
};

/// Linear map between algebras, as a codomain.dim x domain.dim matrix.
struct LinearMap {
  const LieAlgebra* domain = nullptr;
  const LieAlgebra* codomain = nullptr;
  Matrix m;

  Vec apply(const Vec& x) const { return m * x; }
};

/// phi: g -> Der(h), stored as one h.dim x h.dim matrix per basis vector of g.
struct ActionPhi {
  const LieAlgebra* g = nullptr;
  const LieAlgebra* h = nullptr;
  std::vector<Matrix> mats;

  Matrix of(const Vec& x) const;
  Vec apply(const Vec& x, const Vec& u) const { return of(x) * u; }
};

/// phi(x) is a derivation of h for every basis x, and phi respects brackets.
CheckReport check_action(const ActionPhi& phi, double tol = 1e-10);

/// Representation of an algebra on R^space_dim.
struct Representation {
  const LieAlgebra* algebra = nullptr;
  std::size_t space_dim = 0;
  std::vector<Matrix> mats;

  Matrix of(const Vec& x) const;
};

/// rho([x,y]) = [rho(x), rho(y)] on basis pairs.
CheckReport check_representation(const Representation& rho, double tol = 1e-10);

/// g ltimes_phi h with bracket
/// [x+u, y+v] = [x,y]_g + phi(x)v - phi(y)u + [u,v]_h. Coordinates are the
/// g block followed by the h block.
LieAlgebra semidirect_algebra(const LieAlgebra& g, const LieAlgebra& h, const ActionPhi& phi,
                              double action_tol = 1e-8);

/// f[x,y] = [f x, f y] on basis pairs.
CheckReport is_homomorphism(const LinearMap& f, double tol = 1e-10);

/// Brackets of spanning vectors stay in the span (least-squares residual).
CheckReport is_subalgebra(const std::vector<Vec>& vectors, const LieAlgebra& ambient,
                          double tol = 1e-8);

/// The adjoint action of an algebra on itself.
ActionPhi adjoint_action(const LieAlgebra& a);

// Stock algebras.
LieAlgebra abelian_algebra(std::size_t n);
LieAlgebra so3_algebra();
/// Upper-triangular 2x2 matrices, basis (E11, E12, E22).
LieAlgebra up2_algebra();
/// so(n) ltimes R^n; basis: L_{ij} (i<j, lexicographic) then translations.
LieAlgebra euclidean_algebra(std::size_t n);
/// gl(n) with basis E_{ij} in row-major order.
LieAlgebra gl_algebra(std::size_t n);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Structure constants from matrix generators: [b_i, b_j] resolved in the
/// span of the generators by least squares.
LieAlgebra algebra_from_generators(const std::vector<Matrix>& basis,
                                   std::vector<std::string> labels = {});

}  // namespace rbo
