// SPDX-License-Identifier: Apache-2.0
//
// Pointwise symmetric 2x2 tensor algebra and the isotropic elasticity,
// compliance and hardening operators. Stress-like quantities carry units
// of kN/mm^2, strain-like quantities are dimensionless.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace plast {

/// Symmetric 2x2 tensor stored as its three independent components.
/// The Frobenius inner product counts the off-diagonal twice:
///   <a,b> = a.xx b.xx + a.yy b.yy + 2 a.xy b.xy.
struct SymTensor2 {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;

  static SymTensor2 zero() { return {}; }
  static SymTensor2 identity() { return {1.0, 1.0, 0.0}; }
  static SymTensor2 diag(double a, double b) { return {a, b, 0.0}; }

  double trace() const { return xx + yy; }

  SymTensor2& operator+=(const SymTensor2& o) {
    xx += o.xx;
    yy += o.yy;
    xy += o.xy;
    return *this;
  }
  SymTensor2& operator-=(const SymTensor2& o) {
    xx -= o.xx;
    yy -= o.yy;
    xy -= o.xy;
    return *this;
  }
  SymTensor2& operator*=(double s) {
    xx *= s;
    yy *= s;
    xy *= s;
    return *this;
  }

  friend SymTensor2 operator+(SymTensor2 a, const SymTensor2& b) { return a += b; }
  friend SymTensor2 operator-(SymTensor2 a, const SymTensor2& b) { return a -= b; }
  friend SymTensor2 operator*(double s, SymTensor2 a) { return a *= s; }
  friend SymTensor2 operator*(SymTensor2 a, double s) { return a *= s; }
  friend SymTensor2 operator-(SymTensor2 a) { return a *= -1.0; }
};

/// Trace-free part, t - (1/2) tr(t) I.
inline SymTensor2 deviator(const SymTensor2& t) {
  const double m = 0.5 * t.trace();
  return {t.xx - m, t.yy - m, t.xy};
}

/// Frobenius inner product with the factor-2 convention on xy.
inline double frob_inner(const SymTensor2& a, const SymTensor2& b) {
  return a.xx * b.xx + a.yy * b.yy + 2.0 * a.xy * b.xy;
}

inline double frob_norm(const SymTensor2& t) { return std::sqrt(frob_inner(t, t)); }

/// Orthonormal (Mandel) coordinates (xx, yy, sqrt(2) xy). In this basis the
/// Frobenius inner product is the plain dot product, so self-adjoint cell
/// operators are represented by symmetric 3x3 matrices.
inline Eigen::Vector3d mandel(const SymTensor2& t) {
  return {t.xx, t.yy, std::numbers::sqrt2 * t.xy};
}

inline SymTensor2 from_mandel(const Eigen::Vector3d& v) {
  return {v[0], v[1], v[2] / std::numbers::sqrt2};
}

/// Mandel matrix of the deviatoric projector t -> t - (1/2) tr(t) I.
inline Eigen::Matrix3d mandel_dev_projector() {
  Eigen::Matrix3d p = Eigen::Matrix3d::Identity();
  p(0, 0) = 0.5;
  p(1, 1) = 0.5;
  p(0, 1) = -0.5;
  p(1, 0) = -0.5;
  return p;
}

/// Isotropic elasticity tensor C e = lambda tr(e) I + 2 mu e and its
/// closed-form inverse A = C^-1 (2D, plane-strain Lame constants).
struct IsotropicElasticity {
  double lambda_lame;  // [kN/mm^2]
  double mu_lame;      // [kN/mm^2]

  IsotropicElasticity(double lambda, double mu) : lambda_lame(lambda), mu_lame(mu) {
    if (!(mu_lame > 0.0) || !(2.0 * lambda_lame + 2.0 * mu_lame > 0.0))
      throw std::invalid_argument("IsotropicElasticity: moduli violate coercivity");
  }

  static IsotropicElasticity from_youngs_poisson(double youngs, double poisson) {
    const double lambda = youngs * poisson / ((1.0 + poisson) * (1.0 - 2.0 * poisson));
    const double mu = youngs / (2.0 + 2.0 * poisson);
    return {lambda, mu};
  }

  SymTensor2 apply(const SymTensor2& e) const {
    const double v = lambda_lame * e.trace();
    return {v + 2.0 * mu_lame * e.xx, v + 2.0 * mu_lame * e.yy, 2.0 * mu_lame * e.xy};
  }

  /// e = s/(2 mu) - lambda/(2 mu (2 lambda + 2 mu)) tr(s) I.
  SymTensor2 apply_inverse(const SymTensor2& s) const {
    const double two_mu = 2.0 * mu_lame;
    const double c = lambda_lame / (two_mu * (2.0 * lambda_lame + two_mu));
    const double v = c * s.trace();
    return {s.xx / two_mu - v, s.yy / two_mu - v, s.xy / two_mu};
  }

  Eigen::Matrix3d mandel_matrix() const {
    Eigen::Matrix3d m = 2.0 * mu_lame * Eigen::Matrix3d::Identity();
    m(0, 0) += lambda_lame;
    m(0, 1) += lambda_lame;
    m(1, 0) += lambda_lame;
    m(1, 1) += lambda_lame;
    return m;
  }
};

/// Hardening tensor B = scale * identity.
struct HardeningTensor {
  double scale = 1.0;

  SymTensor2 apply(const SymTensor2& z) const { return scale * z; }
  Eigen::Matrix3d mandel_matrix() const { return scale * Eigen::Matrix3d::Identity(); }
};

}  // namespace plast
