#pragma once

#include <map>
#include <vector>

#include "rbo/rbo_algebra.hpp"

namespace rbo {

/// Basis of Hom(wedge^m h, g): sorted m-tuples of basis indices in
/// lexicographic order, with the g-coordinate fastest. A degree-k cochain of
/// the operator complex C^k(B) = Hom(wedge^{k-1} h, g) uses m = k - 1.
struct CochainBasis {
  std::size_t h_dim = 0;
  std::size_t g_dim = 0;
  std::size_t m = 0;
  std::vector<std::vector<int>> tuples;

  std::size_t dim() const { return tuples.size() * g_dim; }
  std::size_t tuple_index(const std::vector<int>& t) const;
  std::size_t flat(std::size_t tuple_idx, std::size_t a) const { return tuple_idx * g_dim + a; }
};

CochainBasis make_cochain_basis(std::size_t h_dim, std::size_t g_dim, std::size_t m);

std::size_t binomial(std::size_t n, std::size_t k);

/// Element of C^k(B), stored in the canonical basis above.
struct Cochain {
  int k = 1;
  std::size_t h_dim = 0;
  std::size_t g_dim = 0;
  Vec coords;
};

/// A 2-cochain is a linear map h -> g; conversions between the two layouts.
Cochain cochain_from_linear_map(const Matrix& f);
Matrix linear_map_from_cochain(const Cochain& c);

/// Matrix of d_CE^B: C^k(B) -> C^{k+1}(B) in the canonical bases, assembled
/// from theta and the descendent bracket. Column-blocks are assembled in
/// parallel; the result is deterministic.
Matrix differential_matrix(const RelRBO& o, int k);

/// dim ker D_k - rank D_{k-1} (D_0 maps from the zero space).
int cohomology_dim(const RelRBO& o, int k, const Tolerance& tol = {});

struct CohomologyRow {
  int k = 0;
  std::size_t dim_cochains = 0;
  int rank_dk = 0;
  int dim_hk = 0;
};

struct CohomologyTable {
  std::vector<CohomologyRow> rows;
  double dd_max = 0.0;  // max over k of ||D_{k+1} D_k||_max
};

CohomologyTable cohomology_table(const RelRBO& o, int kmax, const Tolerance& tol = {});

/// Infinitesimal deformation direction B + t Bhat.
struct DeformationDirection {
  Matrix Bhat;  // g.dim x h.dim
};

/// (i) Bhat is a weight-0 operator: [Bhat u, Bhat v] = Bhat(phi(Bhat u) v) -
/// Bhat(phi(Bhat v) u); (ii) Bhat is a 2-cocycle (D_2 vec = 0); plus the
/// direct check that B + t Bhat satisfies the weight-1 identity at
/// t in {+-1, +-0.5}.
ReportSet check_deformation(const RelRBO& o, const DeformationDirection& d, double tol = 1e-9);

/// Verifies Bhat1 - Bhat2 = d_CE x together with the auxiliary relation
/// [x, Bhat1(u)] = Bhat2(phi(x) u), and reports coboundary membership of the
/// difference by least squares against the image of D_1.
ReportSet deformation_equivalence(const RelRBO& o, const DeformationDirection& d1,
                                  const DeformationDirection& d2, const Vec& x,
                                  double tol = 1e-10);

/// Deformations of a modified r-matrix via B = (R - Id)/2, Bhat = Rhat/2;
/// also confirms the two-sided correspondence at sampled t.
ReportSet r_matrix_deformation_bridge(const ModifiedR& r, const Matrix& Rhat, double tol = 1e-9);

/// p(omega)(u_1, ..) = psi_g(omega(psi_h^{-1} u_1, ..)). Requires invertible
/// psi_h; omega.k gives the degree.
Cochain pushforward_cochain(const Matrix& psi_g, const Matrix& psi_h, const Cochain& omega);

/// Matrix of the pushforward on C^k in the canonical bases.
Matrix pushforward_matrix(const Matrix& psi_g, const Matrix& psi_h, int k);

/// Relative least-squares residual of vec(f) against the image of D_1;
/// <= tol means f is (numerically) a coboundary.
double coboundary_membership_residual(const RelRBO& o, const Matrix& f);

}  // namespace rbo
