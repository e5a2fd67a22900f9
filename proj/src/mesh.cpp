// SPDX-License-Identifier: Apache-2.0

#include "plast/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace plast {

namespace {

constexpr double kWidth = 4.0;
constexpr double kHeight = 1.0;
constexpr double kLambdaLeft = 1.0;
constexpr double kLambdaRight = 3.0;
constexpr double kGeomTol = 1e-12;

bool on_gamma_d(const Eigen::Vector2d& p) {
  return std::abs(p.x()) < kGeomTol || std::abs(p.x() - kWidth) < kGeomTol;
}

bool on_lambda_d(const Eigen::Vector2d& p) {
  const bool horizontal = std::abs(p.y()) < kGeomTol || std::abs(p.y() - kHeight) < kGeomTol;
  return horizontal && p.x() >= kLambdaLeft - kGeomTol && p.x() <= kLambdaRight + kGeomTol;
}

}  // namespace

double Mesh::cell_area(int c) const {
  const auto& t = triangles[c];
  const Eigen::Vector2d e1 = nodes[t[1]] - nodes[t[0]];
  const Eigen::Vector2d e2 = nodes[t[2]] - nodes[t[0]];
  return 0.5 * (e1.x() * e2.y() - e1.y() * e2.x());
}

double Mesh::total_area() const {
  double a = 0.0;
  for (int c = 0; c < n_cells(); ++c) a += cell_area(c);
  return a;
}

const std::vector<char>& Mesh::dirichlet_nodes(DirichletPart part) const {
  switch (part) {
    case DirichletPart::gamma_d: return node_on_gamma_d;
    case DirichletPart::lambda_d: return node_on_lambda_d;
    case DirichletPart::all_boundary: return node_on_boundary;
  }
  throw std::logic_error("unknown DirichletPart");
}

Mesh build_mesh(int nx, int ny) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("build_mesh: grid sizes must be positive");

  Mesh mesh;
  mesh.nx = nx;
  mesh.ny = ny;

  const double hx = kWidth / nx;
  const double hy = kHeight / ny;
  const auto node_id = [nx](int i, int j) { return j * (nx + 1) + i; };

  mesh.nodes.reserve((nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) mesh.nodes.emplace_back(i * hx, j * hy);

  mesh.triangles.reserve(2 * nx * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int v00 = node_id(i, j);
      const int v10 = node_id(i + 1, j);
      const int v01 = node_id(i, j + 1);
      const int v11 = node_id(i + 1, j + 1);
      mesh.triangles.push_back({v00, v10, v11});
      mesh.triangles.push_back({v00, v11, v01});
    }
  }

  const auto classify = [&](int a, int b) {
    BoundaryEdge e;
    e.a = a;
    e.b = b;
    const Eigen::Vector2d mid = 0.5 * (mesh.nodes[a] + mesh.nodes[b]);
    e.gamma = on_gamma_d(mid) ? GammaPart::dirichlet : GammaPart::neumann;
    e.lambda = on_lambda_d(mid) ? LambdaPart::dirichlet : LambdaPart::neumann;
    return e;
  };

  for (int i = 0; i < nx; ++i) {
    mesh.boundary_edges.push_back(classify(node_id(i, 0), node_id(i + 1, 0)));
    mesh.boundary_edges.push_back(classify(node_id(i, ny), node_id(i + 1, ny)));
  }
  for (int j = 0; j < ny; ++j) {
    mesh.boundary_edges.push_back(classify(node_id(0, j), node_id(0, j + 1)));
    mesh.boundary_edges.push_back(classify(node_id(nx, j), node_id(nx, j + 1)));
  }

  mesh.node_on_gamma_d.assign(mesh.n_nodes(), 0);
  mesh.node_on_lambda_d.assign(mesh.n_nodes(), 0);
  mesh.node_on_boundary.assign(mesh.n_nodes(), 0);
  for (int n = 0; n < mesh.n_nodes(); ++n) {
    const auto& p = mesh.nodes[n];
    const bool boundary = std::abs(p.x()) < kGeomTol || std::abs(p.x() - kWidth) < kGeomTol ||
                          std::abs(p.y()) < kGeomTol || std::abs(p.y() - kHeight) < kGeomTol;
    mesh.node_on_boundary[n] = boundary;
    mesh.node_on_gamma_d[n] = on_gamma_d(p);
    mesh.node_on_lambda_d[n] = on_lambda_d(p);
  }

  return mesh;
}

double boundary_length(const Mesh& mesh, GammaPart part) {
  double len = 0.0;
  for (const auto& e : mesh.boundary_edges)
    if (e.gamma == part) len += (mesh.nodes[e.b] - mesh.nodes[e.a]).norm();
  return len;
}

double boundary_length(const Mesh& mesh, LambdaPart part) {
  double len = 0.0;
  for (const auto& e : mesh.boundary_edges)
    if (e.lambda == part) len += (mesh.nodes[e.b] - mesh.nodes[e.a]).norm();
  return len;
}

}  // namespace plast
