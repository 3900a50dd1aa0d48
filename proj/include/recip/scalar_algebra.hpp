#pragma once

// Reciprocal-symmetric scalar kinematics.
//
// A velocity u (|u| <= c) and its slowness u* = c^2/u (|u*| >= c) are images of
// one another under reciprocation. The composition laws
//
//   u (+) v   = (u + v) / (1 + u v / c^2)
//   u* (+)* v* = (c^2 + u* v*) / (u* + v*)
//
// commute with reciprocation, and the multiplication laws n (x) u, n (x)* u*
// are the iterated forms of these compositions (exact for integer n, extended
// to real n through real powers of the strictly positive base).

#include <cmath>
#include <concepts>
#include <limits>

#include "recip/errors.hpp"

namespace recip {

/// Speed of light a value is measured against. Defaults to natural units.
template <std::floating_point S>
class LightSpeed {
 public:
  constexpr LightSpeed() = default;
  explicit LightSpeed(S c) : c_(c) {
    if (!(c > S(0)) || !std::isfinite(c)) {
      throw DomainError("light speed must be positive and finite");
    }
  }

  S value() const { return c_; }
  S squared() const { return c_ * c_; }

  friend bool operator==(LightSpeed, LightSpeed) = default;

 private:
  S c_ = S(1);
};

/// A signed speed with |value| <= c. Light itself (|value| = c) is allowed.
template <std::floating_point S>
class Velocity {
 public:
  explicit Velocity(S value, LightSpeed<S> c = LightSpeed<S>{}) : value_(value), c_(c) {
    if (!(std::abs(value) <= c.value())) {
      throw DomainError("velocity magnitude exceeds the light speed");
    }
  }

  /// Clamps a computed value onto [-c, c]; used for results whose exact value is
  /// in range but whose rounded value may overshoot by an ulp.
  static Velocity saturating(S value, LightSpeed<S> c) {
    if (std::isnan(value)) throw DomainError("velocity is NaN");
    const S bound = c.value();
    return Velocity(value > bound ? bound : (value < -bound ? -bound : value), c);
  }

  S value() const { return value_; }
  LightSpeed<S> light_speed() const { return c_; }
  bool is_light() const { return std::abs(value_) == c_.value(); }

  Velocity operator-() const { return Velocity(-value_, c_); }

 private:
  S value_;
  LightSpeed<S> c_;
};

/// A signed slowness with |value| >= c, or +-infinity for a body at rest.
template <std::floating_point S>
class Slowness {
 public:
  explicit Slowness(S value, LightSpeed<S> c = LightSpeed<S>{}) : value_(value), c_(c) {
    if (!(std::abs(value) >= c.value())) {
      throw DomainError("slowness magnitude is below the slowness of light");
    }
  }

  /// Lifts a computed value with |value| slightly below c back onto the bound.
  static Slowness saturating(S value, LightSpeed<S> c) {
    if (std::isnan(value)) throw DomainError("slowness is NaN");
    return Slowness(std::abs(value) < c.value() ? std::copysign(c.value(), value) : value, c);
  }

  S value() const { return value_; }
  LightSpeed<S> light_speed() const { return c_; }
  bool is_light() const { return std::abs(value_) == c_.value(); }
  bool is_rest() const { return std::isinf(value_); }

  Slowness operator-() const { return Slowness(-value_, c_); }

 private:
  S value_;
  LightSpeed<S> c_;
};

namespace detail {

template <class A, class B>
void require_same_light_speed(const A& a, const B& b) {
  if (!(a.light_speed() == b.light_speed())) {
    throw DomainError("operands are measured against different light speeds");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Untyped laws. These evaluate the composition formulas on plain reals so the
// same law can be applied across the velocity/slowness divide.

/// (u + v) / (1 + u v / c^2) for arbitrary extended reals. An infinite operand
/// is treated by its limit (inf (+) v = c^2 / v); a vanishing denominator with a
/// nonzero numerator yields +inf, the slowness of a body at rest. An operand of
/// magnitude c is returned as is, since rounding in u v / c^2 would otherwise
/// spoil the fixed point when the other operand is close to -c.
template <std::floating_point S>
S einstein_sum(S u, S v, S c = S(1)) {
  const S c2 = c * c;
  if (std::isinf(u) && std::isinf(v)) return S(0);
  if (std::isinf(u)) return c2 / v;
  if (std::isinf(v)) return c2 / u;
  if (std::abs(u) == c || std::abs(v) == c) {
    if (u == -v) throw DegenerateSum("u (+) v: 0/0 form");
    return std::abs(u) == c ? u : v;
  }
  const S num = u + v;
  const S den = S(1) + u * v / c2;
  if (den == S(0)) {
    if (num == S(0)) throw DegenerateSum("u (+) v: 0/0 form");
    return std::numeric_limits<S>::infinity();
  }
  return num / den;
}

/// (c^2 + u v) / (u + v) for arbitrary extended reals. inf (+)* v = v.
template <std::floating_point S>
S slowness_sum(S u, S v, S c = S(1)) {
  if (u == -v) throw DegenerateSum("u* (+)* v*: operands cancel");
  if (std::isinf(u) && std::isinf(v)) return u;
  const S c2 = c * c;
  const S product = u * v;
  if (std::isfinite(product)) return (c2 + product) / (u + v);
  // Large operands: divide through by the larger one.
  const S big = std::abs(u) >= std::abs(v) ? u : v;
  const S small = std::abs(u) >= std::abs(v) ? v : u;
  return (c2 / big + small) / (S(1) + small / big);
}

// ---------------------------------------------------------------------------
// Reciprocation.

/// c^2 / v. Rest (+-0) maps to +-inf.
template <std::floating_point S>
Slowness<S> reciprocate(const Velocity<S>& v) {
  const LightSpeed<S> c = v.light_speed();
  if (v.is_light()) return Slowness<S>(v.value(), c);
  return Slowness<S>::saturating(c.squared() / v.value(), c);
}

/// c^2 / v*. +-inf maps to +-0.
template <std::floating_point S>
Velocity<S> reciprocate(const Slowness<S>& v) {
  const LightSpeed<S> c = v.light_speed();
  if (v.is_light()) return Velocity<S>(v.value(), c);
  return Velocity<S>::saturating(c.squared() / v.value(), c);
}

// ---------------------------------------------------------------------------
// Addition.

template <std::floating_point S>
Velocity<S> add_velocity(const Velocity<S>& u, const Velocity<S>& v) {
  detail::require_same_light_speed(u, v);
  const LightSpeed<S> c = u.light_speed();
  if (u.is_light() || v.is_light()) {
    if (u.is_light() && v.is_light() && u.value() != v.value()) {
      throw DegenerateSum("u (+) v: light added to counter-moving light");
    }
    return u.is_light() ? u : v;
  }
  return Velocity<S>::saturating(einstein_sum(u.value(), v.value(), c.value()), c);
}

/// Velocity composed with a slowness: the image of u (+) v under
/// reciprocation of the second term, c^2 / (u (+) v).
template <std::floating_point S>
Slowness<S> add_velocity(const Velocity<S>& u, const Slowness<S>& v) {
  detail::require_same_light_speed(u, v);
  const LightSpeed<S> c = u.light_speed();
  if (u.is_light() || v.is_light()) {
    if (u.is_light() && v.is_light() && u.value() != v.value()) {
      throw DegenerateSum("u (+) v*: light added to counter-moving light");
    }
    return Slowness<S>(u.is_light() ? u.value() : v.value(), c);
  }
  return Slowness<S>::saturating(einstein_sum(u.value(), v.value(), c.value()), c);
}

template <std::floating_point S>
Slowness<S> add_velocity(const Slowness<S>& u, const Velocity<S>& v) {
  return add_velocity(v, u);
}

template <std::floating_point S>
Slowness<S> add_slowness(const Slowness<S>& u, const Slowness<S>& v) {
  detail::require_same_light_speed(u, v);
  const LightSpeed<S> c = u.light_speed();
  if (u.is_light() || v.is_light()) {
    if (u.is_light() && v.is_light() && u.value() != v.value()) {
      throw DegenerateSum("u* (+)* v*: operands cancel");
    }
    return u.is_light() ? u : v;
  }
  return Slowness<S>::saturating(slowness_sum(u.value(), v.value(), c.value()), c);
}

// ---------------------------------------------------------------------------
// Multiplication.
//
// With r = (c+u)/(c-u), n (x) u = c (r^n - 1)/(r^n + 1) = c tanh(n atanh(u/c)).
// The hyperbolic form is the same law evaluated without the cancellation in
// r^n - 1 for small u.

template <std::floating_point S>
Velocity<S> scale_velocity(S n, const Velocity<S>& u) {
  const LightSpeed<S> c = u.light_speed();
  if (u.is_light()) {
    if (!(n > S(0))) throw DomainError("n (x) u: light scaled by a nonpositive factor");
    return u;
  }
  if (n == S(1)) return u;
  if (n == S(-1)) return -u;
  return Velocity<S>::saturating(c.value() * std::tanh(n * std::atanh(u.value() / c.value())), c);
}

/// With q = (u*+c)/(u*-c), n (x)* u* = c (q^n + 1)/(q^n - 1) = c / tanh(n atanh(c/u*)).
template <std::floating_point S>
Slowness<S> scale_slowness(S n, const Slowness<S>& u) {
  const LightSpeed<S> c = u.light_speed();
  if (u.is_light()) throw DomainError("n (x)* u*: base (u*+c)/(u*-c) is singular at u* = +-c");
  if (n == S(0)) throw DegenerateSum("0 (x)* u*: q^0 - 1 vanishes");
  if (n == S(1)) return u;
  if (n == S(-1)) return -u;
  return Slowness<S>::saturating(c.value() / std::tanh(n * std::atanh(c.value() / u.value())), c);
}

// ---------------------------------------------------------------------------
// Rate of energy transfer.

/// Energy E transferred in time t, measured against a reference time T. The
/// bound c applies to E/t (energy per unit time).
template <std::floating_point S>
struct TransferRate {
  S energy;
  S elapsed;
  S scale;
  LightSpeed<S> c{};

  TransferRate(S energy, S elapsed, S scale, LightSpeed<S> c = LightSpeed<S>{})
      : energy(energy), elapsed(elapsed), scale(scale), c(c) {
    if (!(elapsed > S(0)) || !(scale > S(0))) {
      throw DomainError("transfer rate: elapsed and reference times must be positive");
    }
  }

  S mean_rate() const { return energy / scale; }
  S exponent() const { return scale / elapsed; }
};

/// y = (T/t) (x) (E/T). Bounded by c.
template <std::floating_point S>
S rate_of_transfer(const TransferRate<S>& r) {
  const S base = r.mean_rate();
  if (!(std::abs(base) < r.c.value())) throw DomainError("rate of transfer requires |E/T| < c");
  return scale_velocity(r.exponent(), Velocity<S>(base, r.c)).value();
}

template <std::floating_point S>
bool heisenberg_holds(const TransferRate<S>& r) {
  return r.energy * r.elapsed >= r.c.value() * r.scale * r.scale;
}

template <std::floating_point S>
struct ReciprocalRate {
  S value;
  /// E t >= c T^2.
  bool heisenberg_holds;
};

/// y* = (T/t) (x)* (E/T). Bounded below by c.
template <std::floating_point S>
ReciprocalRate<S> reciprocal_rate(const TransferRate<S>& r) {
  const S base = r.mean_rate();
  if (!(std::abs(base) > r.c.value())) throw DomainError("reciprocal rate requires |E/T| > c");
  const S y = scale_slowness(r.exponent(), Slowness<S>(base, r.c)).value();
  return {y, heisenberg_holds(r)};
}

}  // namespace recip
