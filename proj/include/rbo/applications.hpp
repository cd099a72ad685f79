#pragma once

#include "rbo/group.hpp"
#include "rbo/rbo_algebra.hpp"

namespace rbo {

/// Infinitesimal factorization of g induced by a Rota-Baxter operator:
/// g_+ = Im(B + Id), g_- = Im(B), k_+ = ker(B), k_- = ker(B + Id).
struct InfinitesimalSplit {
  std::vector<Vec> g_plus, g_minus, k_plus, k_minus;
  ReportSet checks;  // subalgebra, ideal and decomposition checks
};

/// Requires h = g with the adjoint action.
InfinitesimalSplit split(const RelRBO& o, const Tolerance& tol = {});

/// The induced isomorphism g_+/k_+ -> g_-/k_-, (B+Id)u-class -> B(u)-class,
/// in quotient coordinates given by complements of k_+- inside g_+-.
struct CayleyTransform {
  std::vector<Vec> q_plus;   // complement of k_+ in g_+ (class representatives)
  std::vector<Vec> q_minus;  // complement of k_- in g_-
  Matrix map;                // dim(q_minus) x dim(q_plus)
  ReportSet checks;          // well-definedness and invertibility
};

CayleyTransform cayley_transform(const InfinitesimalSplit& s, const RelRBO& o,
                                 const Tolerance& tol = {});

/// g_-(t) = B(exp 2t X0), g_+(t) = exp(2t X0) . B(exp 2t X0), so that
/// exp(2t X0) = g_+ g_-^{-1}.
struct Factorization {
  Matrix exp2tX;
  Matrix g_plus;
  Matrix g_minus;
  double residual = 0.0;  // || exp(2tX0) - g_+ g_-^{-1} ||_F
};

Factorization factorize(const GroupRBO& o, const Vec& X0, double t);

/// Coadjoint trajectory L(t) carried along both factors; the matrix applied
/// to L0 is Ad(g)^T, i.e. the pairing <Ad*_g L, x> = <L, Ad_g x> in the dual
/// of the chosen basis. The two expressions agree when ad_{X0}^T L0 = 0.
struct AksPoint {
  double t = 0.0;
  Vec L_plus;
  Vec L_minus;
  double agreement = 0.0;
};

struct AksFlow {
  std::vector<AksPoint> points;
  bool truncated = false;
  std::string note;
};

AksFlow aks_flow(const GroupRBO& o, const Vec& X0, const Vec& L0, const std::vector<double>& ts);

/// An L0 with ad_{X0}^T L0 = 0 (normalized); the stabilizer condition the
/// AKS identity needs.
Vec aks_compatible_momentum(const LieAlgebra& a, const Vec& X0);

/// Local descendent group of a (local) Rota-Baxter operator with H = G:
/// g1 * g2 = g1 . B(g1) . g2 . B(g1)^{-1}, dag(g) = B(g)^{-1} g^{-1} B(g).
Matrix star_local(const GroupRBO& o, const Matrix& g1, const Matrix& g2);
Matrix dag_local(const GroupRBO& o, const Matrix& g);

/// Identity, inverse, associativity and B(dag g) = B(g)^{-1} at in-domain
/// samples.
ReportSet local_descendent_group_check(const GroupRBO& o, const SampleOptions& s = {},
                                       double tol = 1e-9);

/// Matched pair of Lie algebras: rho a representation of g on h, mu of h on
/// g, compatible through the two mixed identities.
struct MatchedPairAlg {
  LieAlgebra g;
  LieAlgebra h;
  std::vector<Matrix> rho;  // one h-matrix per g basis vector
  std::vector<Matrix> mu;   // one g-matrix per h basis vector
};

ReportSet matched_pair_algebra_check(const MatchedPairAlg& mp, double tol = 1e-10);

/// The matched pair (g_B, g_diag) inside g (+) g, with
/// g_B = {(B x, x + B x)} and g_diag = {(x, x)}; actions extracted from the
/// cross-bracket projections.
struct MatchedPairFromRbo {
  std::vector<Vec> gB_basis;    // in g (+) g coordinates
  std::vector<Vec> diag_basis;  // in g (+) g coordinates
  MatchedPairAlg pair;
  ReportSet checks;  // subalgebra checks and the direct-sum rank check
};

MatchedPairFromRbo matched_pair_from_rbo(const RelRBO& o, const Tolerance& tol = {});

/// Group-level matched pair (G_B, G_diag) in G x G: closure, unique
/// factorization, and the two action compatibilities at samples.
ReportSet matched_pair_group_check(const GroupRBO& o, const SampleOptions& s = {},
                                   double tol = 1e-9);

}  // namespace rbo
