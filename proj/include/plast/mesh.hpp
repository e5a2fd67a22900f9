// SPDX-License-Identifier: Apache-2.0
//
// Structured triangulation of the rectangle (0,4) x (0,1) with the two
// independent boundary partitions used by the control problem:
//   Gamma_D = {0,4} x [0,1]   (clamped ends, displacement data)
//   Lambda_D = [1,3] x {0,1}  (pseudo Dirichlet boundary of the control
//                              elasticity problem)
// Gamma_N and Lambda_N are the respective complements; Gamma_D lies inside
// Lambda_N and dist(Gamma_D, Lambda_D) = 1.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace plast {

enum class GammaPart : std::uint8_t { dirichlet, neumann };
enum class LambdaPart : std::uint8_t { dirichlet, neumann };

/// Which node set a Dirichlet-constrained operator eliminates.
enum class DirichletPart : std::uint8_t { gamma_d, lambda_d, all_boundary };

struct BoundaryEdge {
  int a = 0;
  int b = 0;
  GammaPart gamma = GammaPart::neumann;
  LambdaPart lambda = LambdaPart::neumann;
};

struct Mesh {
  int nx = 0;
  int ny = 0;
  std::vector<Eigen::Vector2d> nodes;           // [mm]
  std::vector<std::array<int, 3>> triangles;    // counter-clockwise
  std::vector<BoundaryEdge> boundary_edges;

  // per-node partition membership (closed sets: corners of [1,3] included)
  std::vector<char> node_on_gamma_d;
  std::vector<char> node_on_lambda_d;
  std::vector<char> node_on_boundary;

  int n_nodes() const { return static_cast<int>(nodes.size()); }
  int n_cells() const { return static_cast<int>(triangles.size()); }
  int n_dofs() const { return 2 * n_nodes(); }

  double cell_area(int c) const;
  double total_area() const;

  const std::vector<char>& dirichlet_nodes(DirichletPart part) const;
};

/// Uniform grid of nx x ny cells, each split along the diagonal from the
/// lower-left to the upper-right corner. Throws std::invalid_argument for
/// non-positive sizes.
Mesh build_mesh(int nx, int ny);

double boundary_length(const Mesh& mesh, GammaPart part);
double boundary_length(const Mesh& mesh, LambdaPart part);

}  // namespace plast
