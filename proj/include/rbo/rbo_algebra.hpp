#pragma once

#include "rbo/lie_algebra.hpp"
#include "rbo/matrix.hpp"
#include "rbo/report.hpp"

namespace rbo {

/// Relative Rota-Baxter operator of weight 1: B: h -> g with action phi,
/// subject to [B u, B v]_g = B(phi(B u) v - phi(B v) u + [u,v]_h).
/// Algebras are held by value; action() and maps view into this object.
struct RelRBO {
  LieAlgebra g;
  LieAlgebra h;
  std::vector<Matrix> phi_mats;  // one h.dim x h.dim matrix per g basis vector
  Matrix B;                      // g.dim x h.dim

  ActionPhi action() const { return ActionPhi{&g, &h, phi_mats}; }
  Vec apply_B(const Vec& u) const { return B * u; }
  /// phi(x) u for coordinate vectors.
  Vec phi(const Vec& x, const Vec& u) const { return action().apply(x, u); }
};

/// Max residual of the defining identity over basis pairs of h.
CheckReport check_rbo(const RelRBO& o, double tol = 1e-10);

/// Builds g ltimes_phi h and runs the subalgebra test on Gr(B) = {(B u, u)}.
/// Equivalent to check_rbo by the graph criterion.
CheckReport graph_subalgebra_check(const RelRBO& o, double tol = 1e-8);

/// Coefficients of [u,v]_B = phi(B u) v - phi(B v) u + [u,v]_h.
Vec descendent_bracket(const RelRBO& o, const Vec& u, const Vec& v);

/// The descendent Lie algebra (h, [.,.]_B). Refuses operators that fail
/// check_rbo; verifies Jacobi and that B is a homomorphism to g.
LieAlgebra descendent_algebra(const RelRBO& o, double tol = 1e-9);

/// theta(u) x = B(phi(x) u) + [B u, x]_g as a matrix on g, for u in h.
Matrix theta_matrix(const RelRBO& o, const Vec& u);
std::vector<Matrix> theta_basis_mats(const RelRBO& o);

/// theta as a representation of the descendent algebra on g. `descendent`
/// must outlive the result.
Representation theta_rep(const RelRBO& o, const LieAlgebra& descendent);

/// Prop-2.9-style compatibility of phi with the descendent bracket and theta,
/// over basis triples (x, u, v).
CheckReport mixed_identity_check(const RelRBO& o, double tol = 1e-10);

/// Solution R of the modified Yang-Baxter equation
/// [R u, R v] = R[R u, v] + R[u, R v] - [u, v].
struct ModifiedR {
  LieAlgebra g;
  Matrix R;
};

CheckReport check_mybe(const ModifiedR& r, double tol = 1e-10);

/// R = Id + 2B. Requires h = g with the adjoint action.
ModifiedR to_modified_r(const RelRBO& o);
/// B = (R - Id)/2 with the adjoint action.
RelRBO from_modified_r(const ModifiedR& r);

/// True when the operator's action is the adjoint action of g on itself.
bool is_adjoint_rbo(const RelRBO& o, double tol = 1e-12);

/// Homomorphism conditions psi_g o B' = B o psi_h and
/// psi_h(phi(x) v) = phi(psi_g x) psi_h v, plus their consequences
/// (descendent homomorphism and theta intertwining).
CheckReport check_rbo_hom(const Matrix& psi_g, const Matrix& psi_h, const RelRBO& src,
                          const RelRBO& dst, double tol = 1e-10);

}  // namespace rbo
