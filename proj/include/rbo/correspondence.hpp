#pragma once

#include "rbo/cohomology.hpp"
#include "rbo/group.hpp"
#include "rbo/rbo_algebra.hpp"

namespace rbo {

/// Matrices of the differentiated action phi = d/dt Phi~(exp_G(t e_i)) at 0.
std::vector<Matrix> diff_action_mats(const GroupAction& phi, const MatrixGroup& G,
                                     const MatrixGroup& H, double fd_step = kFdStep);

/// Max deviation between diff_action_mats and the stored phi of `rel`.
double diff_action_mismatch(const GroupAction& phi, const MatrixGroup& G, const MatrixGroup& H,
                            const RelRBO& rel);

/// The differentiated operator: B(u) = d/dt log_G(B(exp_H(t u))) at 0,
/// with the differentiated action. The finite-difference step shrinks to fit
/// the operator's domain radius.
RelRBO diff_group_rbo(const GroupRBO& o, double fd_step = kFdStep);

/// Exp of the descendent group: Exp_star(u) = P_H(EXP(B u, u)) in the
/// semidirect product G ltimes_Phi H.
Matrix descendent_exp(const GroupRBO& o, const Matrix& B, const Vec& u);

/// (i) the bracket of (H, star), computed from second mixed derivatives of
/// Exp_star conjugation curves, equals the descendent bracket of Diff(B);
/// (ii) the tangent of Theta at e_H equals theta of Diff(B).
ReportSet descendent_compat_check(const GroupRBO& o, double tol = 1e-5);

struct IntegrateOptions {
  double radius = 0.3;
  double consistency_tol = 1e-6;
  NewtonOptions newton;
};

/// Local integration: the unique local operator with
/// B(P_H(EXP(B u, u))) = exp_G(B u), realized by a Newton solve in
/// logarithmic coordinates (initial guess log_H h). Solved points are cached.
/// Throws GateError when diff(Phi) and rel.phi disagree; Newton failures
/// surface as DomainError("integration radius exceeded ...").
GroupRBO integrate_rbo(const RelRBO& rel, const MatrixGroup& G, const MatrixGroup& H,
                       const GroupAction& Phi, const IntegrateOptions& opts = {});

/// The defining identity evaluated only on pairs whose composed argument
/// stays in the log-ball; skipped pairs are counted.
CheckReport check_local_rbo(const GroupRBO& o, const SampleOptions& s = {.count = 100,
                                                                          .radius = 0.1},
                            double tol = 1e-8);

/// Van Est map: alternating sum over permutations of mixed derivatives of F
/// along Exp_star curves. Supported degrees k <= 3.
Cochain van_est(const GroupRBO& o, const RelRBO& diff, const GroupCochain& F,
                double fd_step = kFdStep);

/// || VE(d^B F) - d_CE(VE F) || on all basis tuples; degree of F at most 2.
CheckReport van_est_square_check(const GroupRBO& o, const RelRBO& diff, const GroupCochain& F,
                                 double tol = 1e-3);

}  // namespace rbo
