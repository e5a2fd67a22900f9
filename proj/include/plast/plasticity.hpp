// SPDX-License-Identifier: Apache-2.0
//
// Von Mises feasible set K = { |tau^D|_F <= gamma }, the projection onto K,
// its Yosida regularization, and the C^1-smoothed operator A_delta with its
// derivative. All maps act pointwise on symmetric 2x2 tensors and cellwise
// on P0 fields.

#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "plast/tensor.hpp"

namespace plast {

struct YieldParams {
  double gamma = 0.45;              // uniaxial yield stress [kN/mm^2]
  double lambda_yosida = 1.0;       // > 0
  double delta_smooth = 1e-8;       // in (0,1)
  double epsilon_hardening = 0.0;   // >= 0

  void validate() const {
    if (!(gamma > 0.0)) throw std::invalid_argument("YieldParams: gamma must be positive");
    if (!(lambda_yosida > 0.0))
      throw std::invalid_argument("YieldParams: lambda_yosida must be positive");
    if (!(delta_smooth > 0.0 && delta_smooth < 1.0))
      throw std::invalid_argument("YieldParams: delta_smooth must lie in (0,1)");
    if (epsilon_hardening < 0.0)
      throw std::invalid_argument("YieldParams: epsilon_hardening must be nonnegative");
  }
};

// Deviator norms below this are treated as zero (the yield maps extend
// continuously by 0 there).
inline constexpr double kDevNormFloor = 1e-300;

inline bool in_K(const SymTensor2& t, const YieldParams& p) {
  return frob_norm(deviator(t)) <= p.gamma;
}

/// Pointwise projection onto K: the deviator is radially scaled back to the
/// yield surface, the volumetric part is untouched.
inline SymTensor2 project_K(const SymTensor2& t, const YieldParams& p) {
  const SymTensor2 dev = deviator(t);
  const double r = frob_norm(dev);
  if (r <= p.gamma) return t;
  return t - (1.0 - p.gamma / r) * dev;
}

/// Yosida approximation (1/lambda) max{0, 1 - gamma/|t^D|} t^D,
/// with the convention max{0, 1 - gamma/0} := 0.
inline SymTensor2 yosida(const SymTensor2& t, const YieldParams& p) {
  const SymTensor2 dev = deviator(t);
  const double r = frob_norm(dev);
  if (r < kDevNormFloor || r <= p.gamma) return SymTensor2::zero();
  return ((1.0 - p.gamma / r) / p.lambda_yosida) * dev;
}

/// C^1 smoothing of max{0, .}: quadratic blend on |r| < delta.
inline double max_delta(double r, const YieldParams& p) {
  const double d = p.delta_smooth;
  if (r <= -d) return 0.0;
  if (r >= d) return r;
  const double s = r + d;
  return s * s / (4.0 * d);
}

inline double max_delta_prime(double r, const YieldParams& p) {
  const double d = p.delta_smooth;
  if (r <= -d) return 0.0;
  if (r >= d) return 1.0;
  return (r + d) / (2.0 * d);
}

/// A_delta(t) = (1/lambda) max_delta(1 - gamma/|t^D|) t^D; zero for t^D = 0.
inline SymTensor2 A_delta(const SymTensor2& t, const YieldParams& p) {
  const SymTensor2 dev = deviator(t);
  const double r = frob_norm(dev);
  if (r < kDevNormFloor) return SymTensor2::zero();
  const double m = max_delta(1.0 - p.gamma / r, p);
  if (m == 0.0) return SymTensor2::zero();
  return (m / p.lambda_yosida) * dev;
}

/// Directional derivative A_delta'(t) h. Self-adjoint in the Frobenius
/// inner product; zero map for t^D = 0.
inline SymTensor2 A_delta_jac(const SymTensor2& t, const YieldParams& p, const SymTensor2& h) {
  const SymTensor2 dev = deviator(t);
  const double r = frob_norm(dev);
  if (r < kDevNormFloor) return SymTensor2::zero();
  const double a = 1.0 - p.gamma / r;
  const double mp = max_delta_prime(a, p);
  const double m = max_delta(a, p);
  if (mp == 0.0 && m == 0.0) return SymTensor2::zero();
  const SymTensor2 hdev = deviator(h);
  const double c1 = mp * p.gamma / (r * r * r) * frob_inner(dev, hdev);
  return (c1 / p.lambda_yosida) * dev + (m / p.lambda_yosida) * hdev;
}

/// Mandel matrix of A_delta'(t); symmetric positive semidefinite with
/// spectral norm at most 1/lambda.
inline Eigen::Matrix3d A_delta_jac_matrix(const SymTensor2& t, const YieldParams& p) {
  const SymTensor2 dev = deviator(t);
  const double r = frob_norm(dev);
  if (r < kDevNormFloor) return Eigen::Matrix3d::Zero();
  const double a = 1.0 - p.gamma / r;
  const double mp = max_delta_prime(a, p);
  const double m = max_delta(a, p);
  if (mp == 0.0 && m == 0.0) return Eigen::Matrix3d::Zero();
  const Eigen::Vector3d n = mandel(dev);
  Eigen::Matrix3d jac = (m / p.lambda_yosida) * mandel_dev_projector();
  jac += (mp * p.gamma / (r * r * r) / p.lambda_yosida) * (n * n.transpose());
  return jac;
}

}  // namespace plast
