// SPDX-License-Identifier: Apache-2.0

#include "plast/fem.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace plast {

ElementCache::ElementCache(const Mesh& m) : mesh(m) {
  const int nc = mesh.n_cells();
  area.resize(nc);
  strain_op.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const auto& t = mesh.triangles[c];
    const Eigen::Vector2d p0 = mesh.nodes[t[0]];
    const Eigen::Vector2d p1 = mesh.nodes[t[1]];
    const Eigen::Vector2d p2 = mesh.nodes[t[2]];
    const double a2 = (p1.x() - p0.x()) * (p2.y() - p0.y()) - (p1.y() - p0.y()) * (p2.x() - p0.x());
    area[c] = 0.5 * a2;

    // gradients of the barycentric basis functions
    const double gx[3] = {(p1.y() - p2.y()) / a2, (p2.y() - p0.y()) / a2, (p0.y() - p1.y()) / a2};
    const double gy[3] = {(p2.x() - p1.x()) / a2, (p0.x() - p2.x()) / a2, (p1.x() - p0.x()) / a2};

    Eigen::Matrix<double, 3, 6> b = Eigen::Matrix<double, 3, 6>::Zero();
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (int a = 0; a < 3; ++a) {
      b(0, 2 * a) = gx[a];
      b(1, 2 * a + 1) = gy[a];
      b(2, 2 * a) = inv_sqrt2 * gy[a];
      b(2, 2 * a + 1) = inv_sqrt2 * gx[a];
    }
    strain_op[c] = b;
  }
}

namespace {

Eigen::Matrix<double, 6, 1> gather_cell(const Mesh& mesh, int c, const P1VectorField& u) {
  const auto& t = mesh.triangles[c];
  Eigen::Matrix<double, 6, 1> ue;
  for (int a = 0; a < 3; ++a) {
    ue[2 * a] = u[2 * t[a]];
    ue[2 * a + 1] = u[2 * t[a] + 1];
  }
  return ue;
}

}  // namespace

P0TensorField strain(const ElementCache& cache, const P1VectorField& u) {
  const int nc = cache.mesh.n_cells();
  P0TensorField eps(nc);
  for (int c = 0; c < nc; ++c)
    eps[c] = from_mandel(cache.strain_op[c] * gather_cell(cache.mesh, c, u));
  return eps;
}

P1VectorField assemble_load_from_tensor(const ElementCache& cache, const P0TensorField& s) {
  P1VectorField f = P1VectorField::Zero(cache.mesh.n_dofs());
  for (int c = 0; c < cache.mesh.n_cells(); ++c) {
    const Eigen::Matrix<double, 6, 1> fe =
        cache.area[c] * cache.strain_op[c].transpose() * mandel(s[c]);
    const auto& t = cache.mesh.triangles[c];
    for (int a = 0; a < 3; ++a) {
      f[2 * t[a]] += fe[2 * a];
      f[2 * t[a] + 1] += fe[2 * a + 1];
    }
  }
  return f;
}

double l2_inner(const ElementCache& cache, const P0TensorField& a, const P0TensorField& b) {
  double v = 0.0;
  for (int c = 0; c < cache.mesh.n_cells(); ++c) v += cache.area[c] * frob_inner(a[c], b[c]);
  return v;
}

double l2_norm(const ElementCache& cache, const P0TensorField& a) {
  return std::sqrt(l2_inner(cache, a, a));
}

SparseMat assemble_stiffness(const ElementCache& cache, const Eigen::Matrix3d& d_mandel) {
  std::vector<Eigen::Matrix3d> per_cell(cache.mesh.n_cells(), d_mandel);
  return assemble_stiffness(cache, per_cell);
}

SparseMat assemble_stiffness(const ElementCache& cache,
                             const std::vector<Eigen::Matrix3d>& d_mandel) {
  const Mesh& mesh = cache.mesh;
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(36 * mesh.n_cells());
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const Eigen::Matrix<double, 6, 6> ke =
        cache.area[c] * cache.strain_op[c].transpose() * d_mandel[c] * cache.strain_op[c];
    const auto& t = mesh.triangles[c];
    int dof[6];
    for (int a = 0; a < 3; ++a) {
      dof[2 * a] = 2 * t[a];
      dof[2 * a + 1] = 2 * t[a] + 1;
    }
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) trip.emplace_back(dof[i], dof[j], ke(i, j));
  }
  SparseMat k(mesh.n_dofs(), mesh.n_dofs());
  k.setFromTriplets(trip.begin(), trip.end());
  return k;
}

SparseMat assemble_mass(const ElementCache& cache) {
  const Mesh& mesh = cache.mesh;
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(18 * mesh.n_cells());
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const auto& t = mesh.triangles[c];
    const double w = cache.area[c] / 12.0;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const double m = (a == b ? 2.0 : 1.0) * w;
        trip.emplace_back(2 * t[a], 2 * t[b], m);
        trip.emplace_back(2 * t[a] + 1, 2 * t[b] + 1, m);
      }
    }
  }
  SparseMat m(mesh.n_dofs(), mesh.n_dofs());
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

namespace {

template <typename Pred>
SparseMat boundary_mass_impl(const Mesh& mesh, Pred include) {
  std::vector<Eigen::Triplet<double>> trip;
  for (const auto& e : mesh.boundary_edges) {
    if (!include(e)) continue;
    const double len = (mesh.nodes[e.b] - mesh.nodes[e.a]).norm();
    const int n[2] = {e.a, e.b};
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const double m = (a == b ? len / 3.0 : len / 6.0);
        trip.emplace_back(2 * n[a], 2 * n[b], m);
        trip.emplace_back(2 * n[a] + 1, 2 * n[b] + 1, m);
      }
    }
  }
  SparseMat m(mesh.n_dofs(), mesh.n_dofs());
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

}  // namespace

SparseMat assemble_boundary_mass(const Mesh& mesh, LambdaPart part) {
  return boundary_mass_impl(mesh, [part](const BoundaryEdge& e) { return e.lambda == part; });
}

SparseMat assemble_boundary_mass(const Mesh& mesh, GammaPart part) {
  return boundary_mass_impl(mesh, [part](const BoundaryEdge& e) { return e.gamma == part; });
}

std::vector<char> dirichlet_dof_mask(const Mesh& mesh, DirichletPart part) {
  const auto& nodes = mesh.dirichlet_nodes(part);
  std::vector<char> mask(mesh.n_dofs(), 0);
  for (int n = 0; n < mesh.n_nodes(); ++n)
    if (nodes[n]) mask[2 * n] = mask[2 * n + 1] = 1;
  return mask;
}

ConstrainedSpdSolver::ConstrainedSpdSolver(SparseMat full_matrix, std::vector<char> constrained_dofs)
    : full_(std::move(full_matrix)), constrained_(std::move(constrained_dofs)) {
  const int n = static_cast<int>(full_.rows());
  if (static_cast<int>(constrained_.size()) != n)
    throw std::invalid_argument("ConstrainedSpdSolver: mask size mismatch");
  bool any = false;
  for (char c : constrained_) any = any || c;
  if (!any)
    throw std::invalid_argument(
        "ConstrainedSpdSolver: empty Dirichlet set (matrix singular: rigid body modes)");
  full_to_free_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!constrained_[i]) {
      full_to_free_[i] = static_cast<int>(free_of_full_.size());
      free_of_full_.push_back(i);
    }
  }
  rebuild_reduced();
}

void ConstrainedSpdSolver::rebuild_reduced() {
  const int nf = n_free();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(full_.nonZeros());
  for (int k = 0; k < full_.outerSize(); ++k) {
    for (SparseMat::InnerIterator it(full_, k); it; ++it) {
      const int i = full_to_free_[it.row()];
      const int j = full_to_free_[it.col()];
      if (i >= 0 && j >= 0) trip.emplace_back(i, j, it.value());
    }
  }
  reduced_.resize(nf, nf);
  reduced_.setFromTriplets(trip.begin(), trip.end());
  if (!analyzed_) {
    ldlt_.analyzePattern(reduced_);
    analyzed_ = true;
  }
  ldlt_.factorize(reduced_);
  if (ldlt_.info() != Eigen::Success)
    throw SolverError("ConstrainedSpdSolver: factorization failed (matrix not SPD?)");
}

void ConstrainedSpdSolver::update_matrix(const SparseMat& full_matrix) {
  full_ = full_matrix;
  rebuild_reduced();
}

double ConstrainedSpdSolver::free_norm(const P1VectorField& covector) const {
  double s = 0.0;
  for (int i : free_of_full_) s += covector[i] * covector[i];
  return std::sqrt(s);
}

P1VectorField ConstrainedSpdSolver::solve(const P1VectorField& load, const P1VectorField& lifted,
                                          double rel_tol) const {
  const int n = static_cast<int>(full_.rows());
  // rhs_f = load_f - A_fc u_c, computed as load - A*lift restricted to free dofs
  P1VectorField lift = P1VectorField::Zero(n);
  for (int i = 0; i < n; ++i)
    if (constrained_[i]) lift[i] = lifted[i];
  const P1VectorField coupling = full_ * lift;

  const int nf = n_free();
  Eigen::VectorXd rhs(nf);
  for (int f = 0; f < nf; ++f) {
    const int i = free_of_full_[f];
    rhs[f] = load[i] - coupling[i];
  }

  Eigen::VectorXd x = ldlt_.solve(rhs);
  // one step of iterative refinement
  Eigen::VectorXd r = rhs - reduced_ * x;
  x += ldlt_.solve(r);
  r = rhs - reduced_ * x;

  const double rhs_norm = rhs.norm();
  const double res = r.norm();
  if (res > rel_tol * std::max(rhs_norm, 1e-300)) {
    if (rhs_norm > 0.0 || res > rel_tol) {
      std::ostringstream msg;
      msg << "ConstrainedSpdSolver: relative residual " << res / std::max(rhs_norm, 1e-300)
          << " exceeds " << rel_tol;
      throw SolverError(msg.str());
    }
  }

  P1VectorField out = lift;
  for (int f = 0; f < nf; ++f) out[free_of_full_[f]] = x[f];
  return out;
}

P1VectorField ConstrainedSpdSolver::solve(const P1VectorField& load, double rel_tol) const {
  return solve(load, P1VectorField::Zero(full_.rows()), rel_tol);
}

}  // namespace plast
