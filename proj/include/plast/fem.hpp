// SPDX-License-Identifier: Apache-2.0
//
// P1 vector / P0 tensor finite element spaces on the structured mesh:
// strain and divergence-type assembly, mass matrices, and Dirichlet
// constrained sparse SPD solves. Displacement dofs are interleaved,
// node n -> (2n, 2n+1).

#pragma once

#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "plast/mesh.hpp"
#include "plast/tensor.hpp"

namespace plast {

using P1VectorField = Eigen::VectorXd;            // size 2 * n_nodes
using P0TensorField = std::vector<SymTensor2>;    // size n_cells
using SparseMat = Eigen::SparseMatrix<double>;

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-cell geometry cache: area and the 3x6 Mandel strain matrix mapping
/// the 6 nodal displacements (u0x,u0y,u1x,u1y,u2x,u2y) to (e_xx, e_yy,
/// sqrt(2) e_xy).
struct ElementCache {
  explicit ElementCache(const Mesh& mesh);

  const Mesh& mesh;
  std::vector<double> area;
  std::vector<Eigen::Matrix<double, 3, 6>> strain_op;
};

/// Cellwise symmetric gradient of a P1 field (exact; P0 result).
P0TensorField strain(const ElementCache& cache, const P1VectorField& u);

/// Covector with entries (s, grad^s phi_i)_{L2(Omega)} — the discrete -div.
P1VectorField assemble_load_from_tensor(const ElementCache& cache, const P0TensorField& s);

/// L2(Omega) inner product of two P0 tensor fields.
double l2_inner(const ElementCache& cache, const P0TensorField& a, const P0TensorField& b);
double l2_norm(const ElementCache& cache, const P0TensorField& a);

/// Stiffness with one constitutive Mandel matrix for all cells.
SparseMat assemble_stiffness(const ElementCache& cache, const Eigen::Matrix3d& d_mandel);

/// Stiffness with a per-cell constitutive Mandel matrix. The sparsity
/// pattern is independent of the coefficients.
SparseMat assemble_stiffness(const ElementCache& cache,
                             const std::vector<Eigen::Matrix3d>& d_mandel);

/// Consistent P1 vector mass matrix over Omega.
SparseMat assemble_mass(const ElementCache& cache);

/// P1 vector mass matrix over the boundary part (edge-wise consistent mass).
SparseMat assemble_boundary_mass(const Mesh& mesh, LambdaPart part);
SparseMat assemble_boundary_mass(const Mesh& mesh, GammaPart part);

/// Dirichlet dof mask (both components of every node on the given part).
std::vector<char> dirichlet_dof_mask(const Mesh& mesh, DirichletPart part);

/// Symmetric positive definite system with a fixed constrained-dof set,
/// solved by sparse Cholesky-type factorization. Constraints are applied by
/// symmetric elimination with lifted boundary values. The sparsity pattern
/// of the reduced matrix is analyzed once; later coefficient updates reuse
/// the symbolic factorization.
class ConstrainedSpdSolver {
 public:
  ConstrainedSpdSolver(SparseMat full_matrix, std::vector<char> constrained_dofs);

  /// Replace coefficients; the pattern must match the construction-time one.
  void update_matrix(const SparseMat& full_matrix);

  /// Solve A x = load with x = lifted on constrained dofs. The load is the
  /// full-length covector; constrained entries of it are ignored. One step
  /// of iterative refinement is applied; a relative residual above rel_tol
  /// throws SolverError with the achieved residual.
  P1VectorField solve(const P1VectorField& load, const P1VectorField& lifted,
                      double rel_tol = 1e-12) const;

  /// Homogeneous-constraint convenience overload.
  P1VectorField solve(const P1VectorField& load, double rel_tol = 1e-12) const;

  /// Full (unconstrained) operator action.
  P1VectorField apply_full(const P1VectorField& x) const { return full_ * x; }

  const SparseMat& full_matrix() const { return full_; }
  const std::vector<char>& constrained() const { return constrained_; }
  int n_free() const { return static_cast<int>(free_of_full_.size()); }

  /// Euclidean norm of the free-dof restriction of a covector.
  double free_norm(const P1VectorField& covector) const;

 private:
  void rebuild_reduced();

  SparseMat full_;
  std::vector<char> constrained_;
  std::vector<int> free_of_full_;   // free index -> full index
  std::vector<int> full_to_free_;   // full index -> free index or -1
  SparseMat reduced_;
  Eigen::SimplicialLDLT<SparseMat> ldlt_;
  bool analyzed_ = false;
};

}  // namespace plast
