#pragma once

// Complex 3-vector ("mixed number") composition of velocities.
//
//   U +^ V = (U + V + i U x V / c) / (1 + U.V / c^2)
//
// Dot and cross products are bilinear: no component is conjugated. Under this
// product the law is the multiplication of 1 + U.sigma/c in the Pauli algebra,
// which makes it associative and keeps U.U = c^2 invariant. The cross term is
// divided by c (not c^2) so that the law is homogeneous in units of c; in
// natural units the two readings coincide.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>

#include <Eigen/Core>

#include "recip/errors.hpp"
#include "recip/scalar_algebra.hpp"

namespace recip {

template <std::floating_point S>
using Vector3 = Eigen::Matrix<S, 3, 1>;

template <std::floating_point S>
using ComplexVector3 = Eigen::Matrix<std::complex<S>, 3, 1>;

/// sum_i a_i b_i. Eigen's dot() conjugates its left operand; this does not.
template <class DerivedA, class DerivedB>
typename DerivedA::Scalar bilinear_dot(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return a.cwiseProduct(b).sum();
}

/// Formal determinant cross product. Eigen's cross() conjugates complex results.
template <class DerivedA, class DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, 3, 1> bilinear_cross(const Eigen::MatrixBase<DerivedA>& a,
                                                              const Eigen::MatrixBase<DerivedB>& b) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedA, 3)
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedB, 3)
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

template <std::floating_point S>
ComplexVector3<S> complexify(const Vector3<S>& v) {
  return v.template cast<std::complex<S>>();
}

enum class Composition {
  /// U +^ (-V): the velocity of U relative to an observer moving with V.
  relative,
  /// U +^ V.
  sum,
};

template <std::floating_point S>
ComplexVector3<S> compose(const ComplexVector3<S>& u, const ComplexVector3<S>& v,
                          Composition mode = Composition::relative, LightSpeed<S> c = LightSpeed<S>{}) {
  using C = std::complex<S>;
  const S c2 = c.squared();
  const ComplexVector3<S> w = mode == Composition::relative ? ComplexVector3<S>(-v) : v;
  const C den = C(1) + bilinear_dot(u, w) / c2;
  if (den == C(0)) throw DegenerateSum("vector composition: 1 + U.V/c^2 vanishes");
  const ComplexVector3<S> num = u + w + C(0, 1) * bilinear_cross(u, w) / c.value();
  return num / den;
}

/// Axis and angle of a rotation in reciprocity space.
template <std::floating_point S>
class ReciprocityRotation {
 public:
  ReciprocityRotation(Vector3<S> axis, S angle) : axis_(std::move(axis)), angle_(angle) {
    if (!(std::abs(axis_.norm() - S(1)) <= S(1e-12))) throw DomainError("rotation axis must be a unit vector");
    if (!std::isfinite(angle)) throw DomainError("rotation angle must be finite");
  }

  const Vector3<S>& axis() const { return axis_; }
  S angle() const { return angle_; }

  /// True when the angle is an odd multiple of pi (the reciprocal limit).
  bool is_reciprocal() const {
    return std::abs(std::remainder(angle_, S(2) * std::numbers::pi_v<S>)) == std::numbers::pi_v<S>;
  }

 private:
  Vector3<S> axis_;
  S angle_;
};

/// c (i c r - W x r) / (i W.r): the phi -> pi limit of the reciprocity
/// rotation. W.result = c^2.
template <std::floating_point S>
ComplexVector3<S> reciprocal_vector(const ComplexVector3<S>& w, const Vector3<S>& axis,
                                    LightSpeed<S> c = LightSpeed<S>{}) {
  using C = std::complex<S>;
  const ComplexVector3<S> r = complexify(axis);
  const C d = bilinear_dot(w, r);
  if (d == C(0)) throw DegenerateSum("reciprocal vector: W is orthogonal to the axis");
  const ComplexVector3<S> num = C(0, c.squared()) * r - c.value() * bilinear_cross(w, r);
  return num / (C(0, 1) * d);
}

/// (W + (i c r - W x r) tan(phi/2)) / (1 + i (W.r / c) tan(phi/2)).
///
/// Equivalently W +^ (i c tan(phi/2) r), so rotations about one axis compose by
/// adding angles. Odd multiples of pi evaluate the closed-form limit.
template <std::floating_point S>
ComplexVector3<S> rotate_reciprocity(const ComplexVector3<S>& w, const ReciprocityRotation<S>& rot,
                                     LightSpeed<S> c = LightSpeed<S>{}) {
  using C = std::complex<S>;
  if (rot.angle() == S(0)) return w;
  if (rot.is_reciprocal()) return reciprocal_vector(w, rot.axis(), c);
  const S tau = std::tan(rot.angle() / S(2));
  const ComplexVector3<S> r = complexify(rot.axis());
  const C den = C(1) + C(0, tau) * bilinear_dot(w, r) / c.value();
  if (den == C(0)) throw DegenerateSum("reciprocity rotation: denominator vanishes");
  const ComplexVector3<S> shift = C(0, c.value()) * r - bilinear_cross(w, r);
  return (w + tau * shift) / den;
}

/// Composition of both operands after the same reciprocity rotation. phi = 0
/// gives relative velocities, phi = pi relative slownesses.
template <std::floating_point S>
ComplexVector3<S> general_compose(const ComplexVector3<S>& u, const ComplexVector3<S>& v,
                                  const ReciprocityRotation<S>& rot, Composition mode = Composition::relative,
                                  LightSpeed<S> c = LightSpeed<S>{}) {
  return compose(rotate_reciprocity(u, rot, c), rotate_reciprocity(v, rot, c), mode, c);
}

/// max_i |L_i - R_i| / max_i(|L_i|, |R_i|) for L = (U +^ V) +^ Y and
/// R = U +^ (V +^ Y). Zero when both groupings vanish.
template <std::floating_point S>
S associativity_residual(const ComplexVector3<S>& u, const ComplexVector3<S>& v, const ComplexVector3<S>& y,
                         LightSpeed<S> c = LightSpeed<S>{}) {
  const ComplexVector3<S> left = compose(compose(u, v, Composition::sum, c), y, Composition::sum, c);
  const ComplexVector3<S> right = compose(u, compose(v, y, Composition::sum, c), Composition::sum, c);
  const S scale = std::max(left.cwiseAbs().maxCoeff(), right.cwiseAbs().maxCoeff());
  if (scale == S(0)) return S(0);
  return (left - right).cwiseAbs().maxCoeff() / scale;
}

}  // namespace recip
