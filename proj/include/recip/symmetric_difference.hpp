#pragma once

// Reflection-symmetric finite differences and the exact solutions of
//
//   (N(s+d) - N(s-d)) / 2d = -Ebar N        (bounded-energy decay)
//   (g(t+d) - g(t-d)) / 2d = -+ i w g       (oscillator)
//
// together with the level formulas built from the oscillator branches.
//
// Exactness holds on grid points (s = k/W, t = k d). Off the grid the same
// closed forms are evaluated with principal-branch powers.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <optional>

#include <Eigen/Core>

#include "recip/errors.hpp"

namespace recip {

template <std::floating_point S>
using ComplexVectorX = Eigen::Matrix<std::complex<S>, Eigen::Dynamic, 1>;

/// Points origin + k * step for k = 0 .. count-1.
template <std::floating_point S>
class SymmetricGrid {
 public:
  SymmetricGrid(S step, S origin, Eigen::Index count) : step_(step), origin_(origin), count_(count) {
    if (!(step > S(0)) || !std::isfinite(step)) throw DomainError("grid step must be positive");
    if (count < 1) throw DomainError("grid must have at least one point");
  }

  S step() const { return step_; }
  S origin() const { return origin_; }
  Eigen::Index count() const { return count_; }
  S point(Eigen::Index k) const { return origin_ + static_cast<S>(k) * step_; }

 private:
  S step_;
  S origin_;
  Eigen::Index count_;
};

template <std::floating_point S>
class GridFunction {
 public:
  GridFunction(SymmetricGrid<S> grid, ComplexVectorX<S> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.count()) throw DomainError("grid function length does not match its grid");
  }

  const SymmetricGrid<S>& grid() const { return grid_; }
  const ComplexVectorX<S>& values() const { return values_; }
  std::complex<S> operator[](Eigen::Index k) const { return values_[k]; }

 private:
  SymmetricGrid<S> grid_;
  ComplexVectorX<S> values_;
};

/// Samples fn(point) at every grid point.
template <std::floating_point S, class Fn>
GridFunction<S> sample(const SymmetricGrid<S>& grid, Fn&& fn) {
  ComplexVectorX<S> values(grid.count());
  for (Eigen::Index k = 0; k < grid.count(); ++k) values[k] = std::complex<S>(fn(grid.point(k)));
  return GridFunction<S>(grid, std::move(values));
}

/// (values[k+1] - values[k-1]) / (2 step) for any nonzero step, including
/// negative ones. Reversing the samples and negating the step gives a
/// bit-identical result.
template <class Derived>
typename Derived::Scalar central_difference(const Eigen::MatrixBase<Derived>& values, Eigen::Index k,
                                            typename Eigen::NumTraits<typename Derived::Scalar>::Real step) {
  if (k < 1 || k + 1 >= values.size()) throw IndexError("central difference needs both neighbours");
  if (step == 0) throw DomainError("central difference with zero step");
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return (values(k + 1) - values(k - 1)) / (Real(2) * step);
}

template <std::floating_point S>
std::complex<S> symmetric_difference(const GridFunction<S>& f, Eigen::Index k) {
  return central_difference(f.values(), k, f.grid().step());
}

// ---------------------------------------------------------------------------
// Bounded-energy decay.

/// Energy E under the bound |E| < 2W; the matching grid step is 1/W.
template <std::floating_point S>
struct BoundedDecayParams {
  S energy;
  S bound;
  S amplitude = S(1);

  S step() const { return S(1) / bound; }
  SymmetricGrid<S> grid(S origin, Eigen::Index count) const { return SymmetricGrid<S>(step(), origin, count); }
};

/// Which printed form of the image solution to evaluate. The two agree on even
/// integer s/d and differ by (-1)^(s/d) otherwise.
enum class ImageForm {
  /// Base (1 + 2/(E d)) / (1 - 2/(E d)): f1 with E/2W replaced by -2W/E.
  reciprocal_argument,
  /// Base (1 + E d/2) / (1 - E d/2).
  inverted_base,
};

template <std::floating_point S>
struct BoundedDecayValues {
  S f1;
  /// Unset when E = 0. Real on grid points (the imaginary part is exactly 0).
  std::optional<std::complex<S>> f2;
  S effective_energy;
};

/// E / (1 - (E/2W)^2).
template <std::floating_point S>
S effective_energy(S energy, S bound) {
  const S x = energy / (S(2) * bound);
  return energy / (S(1) - x * x);
}

/// The unnormalized weight ((1 - E/2W)/(1 + E/2W))^(W s) for |E| <= 2W. At
/// E = 2W the weight is 0 (for s > 0).
template <std::floating_point S>
S decay_weight(S energy, S bound, S s) {
  if (!(bound > S(0))) throw DomainError("energy bound W must be positive");
  const S x = energy / (S(2) * bound);
  if (!(std::abs(x) <= S(1))) throw DomainError("energy exceeds the bound 2W");
  if (x == S(1)) return s > S(0) ? S(0) : (s == S(0) ? S(1) : std::numeric_limits<S>::infinity());
  // log of the base is -2 atanh(x).
  return std::exp(S(-2) * bound * s * std::atanh(x));
}

namespace detail {

/// Rounds p to the nearest integer when it is within rounding noise of one.
template <std::floating_point S>
std::optional<S> grid_index(S p) {
  const S k = std::nearbyint(p);
  const S tol = S(64) * std::numeric_limits<S>::epsilon() * std::max(S(1), std::abs(p));
  if (std::abs(p - k) <= tol) return k;
  return std::nullopt;
}

}  // namespace detail

template <std::floating_point S>
BoundedDecayValues<S> bounded_decay_solutions(const BoundedDecayParams<S>& p, S s,
                                              ImageForm form = ImageForm::reciprocal_argument) {
  if (!(p.bound > S(0))) throw DomainError("energy bound W must be positive");
  const S x = p.energy / (S(2) * p.bound);
  if (!(std::abs(x) < S(1))) throw DomainError("bounded decay requires |E| < 2W");

  const S atx = std::atanh(x);
  const S exponent = p.bound * s;  // s / d
  BoundedDecayValues<S> out{p.amplitude * std::exp(S(-2) * exponent * atx), std::nullopt,
                            effective_energy(p.energy, p.bound)};
  if (p.energy == S(0)) return out;

  // |base| = ((1+x)/(1-x)) for both forms.
  const S magnitude = p.amplitude * std::exp(S(2) * exponent * atx);
  if (form == ImageForm::inverted_base) {
    out.f2 = std::complex<S>(magnitude);
    return out;
  }
  // The reciprocal-argument base is negative; its principal log carries i*pi.
  if (const auto k = detail::grid_index(exponent)) {
    const bool odd = std::fmod(std::abs(*k), S(2)) == S(1);
    out.f2 = std::complex<S>(odd ? -magnitude : magnitude);
  } else {
    out.f2 = std::polar(magnitude, std::numbers::pi_v<S> * exponent);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oscillator.

template <std::floating_point S>
struct OscillatorParams {
  S frequency;
  S step;
  std::complex<S> amplitude{1};
  /// +1: the classical branch g1 tends to exp(-i w t); -1 swaps the branches.
  int sign = 1;
  /// Level index used by effective_frequency(); g1 and g2 always use the
  /// principal branch.
  int branch = 0;
};

template <std::floating_point S>
struct OscillatorValues {
  std::complex<S> g1;
  std::complex<S> g2;
};

/// q = (1 - sqrt(1 - (w d)^2)) / (w d), in the cancellation-free form
/// w d / (1 + sqrt(1 - (w d)^2)). 2q/(1+q^2) = w d.
template <std::floating_point S>
S oscillator_half_angle(S frequency, S step) {
  const S wd = frequency * step;
  if (!(std::abs(wd) < S(1))) throw DomainError("oscillator requires |w d| < 1");
  if (!(step > S(0))) throw DomainError("oscillator step must be positive");
  return wd / (S(1) + std::sqrt(S(1) - wd * wd));
}

/// g1 = A ((1 - i q)/(1 + i q))^(t/d), g2 = A ((1 + i q)/(1 - i q))^(t/d).
/// Both bases have unit modulus; with sign = +1, g1 solves the difference
/// equation with -i w and g2 with +i w.
template <std::floating_point S>
OscillatorValues<S> oscillator_solutions(const OscillatorParams<S>& p, S t) {
  if (p.sign != 1 && p.sign != -1) throw DomainError("oscillator sign must be +1 or -1");
  const S q = oscillator_half_angle(p.frequency, p.step);
  // arg((1 - i q)/(1 + i q)) = -2 atan(q), inside (-pi/2, pi/2).
  const S phase = S(-2) * std::atan(q) * static_cast<S>(p.sign) * (t / p.step);
  return {p.amplitude * std::polar(S(1), phase), p.amplitude * std::polar(S(1), -phase)};
}

/// (2n+1) pi / d + w.
template <std::floating_point S>
S effective_frequency(int n, S step, S frequency) {
  if (!(step > S(0))) throw DomainError("step must be positive");
  return static_cast<S>(2 * n + 1) * std::numbers::pi_v<S> / step + frequency;
}

template <std::floating_point S>
S effective_frequency(const OscillatorParams<S>& p) {
  return effective_frequency(p.branch, p.step, p.frequency);
}

template <std::floating_point S>
struct OscillatorEnergyTerms {
  S level;   // ((2n+1) pi / d)^2
  S cross;   // 2 (2(n + 1/2) pi / d) w
  S square;  // w^2
  S total() const { return level + cross + square; }
};

/// Expansion of the squared effective frequency.
template <std::floating_point S>
OscillatorEnergyTerms<S> oscillator_energy_terms(int n, S step, S frequency) {
  if (!(step > S(0))) throw DomainError("step must be positive");
  const S y = static_cast<S>(2 * n + 1) * std::numbers::pi_v<S> / step;
  const S half_integral = S(2) * (static_cast<S>(n) + S(0.5)) * std::numbers::pi_v<S> / step;
  return {y * y, S(2) * half_integral * frequency, frequency * frequency};
}

/// E = m (A n pi / d)^2 / 2 for a particle between walls 2A apart.
template <std::floating_point S>
S well_energy(int n, S mass, S halfwidth, S step) {
  if (n < 1) throw DomainError("well level n must be a positive integer");
  if (!(mass > S(0)) || !(halfwidth > S(0)) || !(step > S(0))) {
    throw DomainError("well mass, half-width and step must be positive");
  }
  const S k = halfwidth * static_cast<S>(n) * std::numbers::pi_v<S> / step;
  return S(0.5) * mass * k * k;
}

}  // namespace recip
