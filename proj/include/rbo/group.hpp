#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rbo/lie_algebra.hpp"
#include "rbo/matrix.hpp"
#include "rbo/numerics.hpp"
#include "rbo/report.hpp"

namespace rbo {

/// Default seed for sample sweeps ("RB01" as ASCII bytes).
inline constexpr std::uint32_t kDefaultSeed = 0x52423031u;

/// Matrix Lie group: elements are invertible N x N matrices, the Lie algebra
/// is spanned by `basis` inside gl(N). Coordinates always refer to this basis.
class MatrixGroup {
 public:
  MatrixGroup() = default;
  MatrixGroup(std::string name, std::size_t ambient_dim, std::vector<Matrix> basis);

  const std::string& name() const { return name_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }

  Matrix identity() const { return Matrix::identity(n_); }
  Matrix to_ambient(const Vec& coords) const;
  /// Least-squares coordinates of an ambient matrix in the algebra basis.
  Vec coords_of(const Matrix& m, double* residual = nullptr) const;

  Matrix exp(const Vec& coords) const { return mat_exp(to_ambient(coords)); }
  Vec log(const Matrix& g) const { return coords_of(mat_log(g)); }
  /// Frobenius norm of log(g); the in-domain test for local operators.
  double log_norm(const Matrix& g) const { return mat_log(g).norm_fro(); }

  /// Structure constants resolved in the basis.
  LieAlgebra algebra() const;

  /// Matrix of Ad_g on the algebra basis.
  Matrix adjoint(const Matrix& g) const;

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::vector<Matrix> basis_;
  Matrix span_;  // flattened basis, N^2 x dim, for coords_of
};

/// Registry-backed smooth map between groups (analytic built-in or numeric).
struct GroupMap {
  std::string name;
  std::function<Matrix(const Matrix&)> f;
  Matrix operator()(const Matrix& m) const { return f(m); }
};

/// Action of G on H: the pointwise map plus the induced map on h-coordinates
/// (the derivative of Phi(g) at e_H).
struct GroupAction {
  enum class Kind { trivial, conjugation, linear_on_vector_group, generic };

  std::string name;
  Kind kind = Kind::generic;
  std::function<Matrix(const Matrix& g, const Matrix& h)> act;
  std::function<Matrix(const Matrix& g)> induced_on_algebra;  // dim(h) x dim(h)

  Matrix operator()(const Matrix& g, const Matrix& h) const { return act(g, h); }
};

/// Sanity checks for a group action at seeded sample points.
CheckReport check_group_action(const GroupAction& phi, const MatrixGroup& G, const MatrixGroup& H,
                               int samples = 20, double tol = 1e-9,
                               std::uint32_t seed = kDefaultSeed);

/// (Possibly local) relative Rota-Baxter operator on groups:
/// B(h1) B(h2) = B(h1 . Phi(B(h1)) h2), defined on the log-ball of radius
/// `domain_radius` (infinity for global analytic entries).
struct GroupRBO {
  MatrixGroup G;
  MatrixGroup H;
  GroupAction Phi;
  GroupMap B_map;
  double domain_radius = std::numeric_limits<double>::infinity();
  std::string provenance = "analytic";

  bool in_domain(const Matrix& h) const;
  Matrix B(const Matrix& h) const { return B_map(h); }
};

/// Seeded log-uniform sample points in H: direction uniform, log-radius
/// log-uniform in [radius/100, radius].
std::vector<Matrix> sample_group_points(const MatrixGroup& H, int count, double radius,
                                        std::uint32_t seed);
Vec sample_algebra_coords(std::size_t dim, double radius, std::mt19937& rng);

struct SampleOptions {
  int count = 100;
  double radius = 0.3;
  std::uint32_t seed = kDefaultSeed;
};

/// Max residual of the defining identity over sampled pairs; pairs whose
/// composed argument leaves the domain are skipped and counted.
CheckReport check_group_rbo(const GroupRBO& o, const SampleOptions& s = {}, double tol = 1e-10);

/// Descendent multiplication h1 * h2 = h1 . Phi(B(h1)) h2 and its inverse
/// dag(h) = Phi(B(h)^{-1}) h^{-1}.
Matrix star(const GroupRBO& o, const Matrix& h1, const Matrix& h2);
Matrix dag(const GroupRBO& o, const Matrix& h);

/// Theta(h) g = B(Phi(g) h^dag)^{-1} . g . B(h^dag).
Matrix theta_group_action(const GroupRBO& o, const Matrix& h, const Matrix& g);

/// Tangent map of g -> Theta(h) g at e_G, by directional differentiation
/// along exp_G(t e_a).
Matrix theta_linearized(const GroupRBO& o, const Matrix& h, double fd_step = kFdStep);

/// Semidirect product group G ltimes_Phi H with
/// (g1,h1)(g2,h2) = (g1 g2, h1 . Phi(g1) h2).
struct SemidirectGroup {
  const MatrixGroup* G = nullptr;
  const MatrixGroup* H = nullptr;
  const GroupAction* Phi = nullptr;

  using Pair = std::pair<Matrix, Matrix>;

  Pair identity() const;
  Pair multiply(const Pair& a, const Pair& b) const;
  Pair inverse(const Pair& a) const;

  /// Exponential EXP(x, u): closed form when H is a vector group (translation
  /// part by 8-point Gauss-Legendre quadrature) or when Phi is conjugation
  /// with H = G; otherwise an RK4 flow of the left-invariant field.
  Pair exp(const Vec& x, const Vec& u) const;
  /// The generic RK4 path, kept callable for cross-validation.
  Pair exp_rk4(const Vec& x, const Vec& u) const;
};

/// Smooth cochain on the descendent group: a map H^{k-1} -> g-coordinates.
struct GroupCochain {
  int k = 1;
  std::function<Vec(const std::vector<Matrix>&)> f;

  Vec operator()(const std::vector<Matrix>& hs) const { return f(hs); }
};

/// Group cohomology differential for (H, star) acting on g through Theta:
/// (dF)(h_1..h_k) = Theta(h_1) F(h_2..h_k)
///                + sum_i (-1)^i F(.., h_i * h_{i+1}, ..)
///                + (-1)^k F(h_1..h_{k-1}).
GroupCochain group_cochain_differential(const GroupRBO& o, const GroupCochain& F);

/// Homomorphism conditions B o Psi_H = Psi_G o B' and
/// Psi_H(Phi(g) h) = Phi(Psi_G g) Psi_H h at samples, plus the
/// Theta-intertwining Psi_G o Theta'(h) = Theta(Psi_H h) o Psi_G.
CheckReport check_group_rbo_hom(const GroupMap& psi_G, const GroupMap& psi_H, const GroupRBO& src,
                                const GroupRBO& dst, const SampleOptions& s = {},
                                double tol = 1e-9);

}  // namespace rbo
