#pragma once

#include <string>
#include <vector>

#include "rbo/group.hpp"
#include "rbo/rbo_algebra.hpp"

namespace rbo {

// Stock matrix groups.
MatrixGroup euclidean_group(std::size_t n);  // SO(n) ltimes R^n, (n+1)x(n+1)
MatrixGroup so3_group();
MatrixGroup up2_group();              // invertible upper-triangular 2x2
MatrixGroup unipotent_line_group();   // {[[1,r],[0,1]]}, the vector group R
MatrixGroup gl_group(std::size_t n);

// Stock actions.
GroupAction trivial_action(const MatrixGroup& H);
/// Phi(g) h = g h g^{-1}; requires H and G in the same ambient space.
GroupAction conjugation_action(const MatrixGroup& H);
GroupAction up2_scaling_action();  // Phi([[a,b],[0,c]]) r = a r

// Stock operators.
GroupMap identity_operator_map(const MatrixGroup& G);   // B(h) = e_G
GroupMap inverse_operator_map();                        // B(g) = g^{-1}
GroupMap euclidean_factorization_map(std::size_t n);    // (A, alpha) -> (I, -A^T alpha)
GroupMap up2_unipotent_embedding();                     // [[1,r],[0,1]] in UP(2)
GroupMap gl_block_lower_factor_map(std::size_t p, std::size_t q);  // g -> g_-^{-1}

// Algebra-level fixtures.
RelRBO zero_rbo_so3();
RelRBO neg_id_rbo(const LieAlgebra& a);
RelRBO ex24_rbo();
RelRBO euclidean_rbo(std::size_t n);
RelRBO perturbed_euclidean_rbo(double eps = 1e-3);
/// Triangular split of gl(2) with the diagonal shared between both halves:
/// B = -(strictly lower projection) - (diagonal projection)/2, the operator
/// of the modified r-matrix R = pi_> - pi_<.
RelRBO gl2_split_rbo();
RelRBO abelian_trivial_rbo(std::size_t n = 2);

/// A named group operator together with its differentiated algebra operator.
struct OperatorBundle {
  std::string name;
  GroupRBO group_op;
  RelRBO algebra_op;
};

std::vector<std::string> registry_names();
/// Names: trivial, euclidean2, euclidean3, so3_inverse, up2, gl_block.
OperatorBundle make_bundle(const std::string& name);

}  // namespace rbo
