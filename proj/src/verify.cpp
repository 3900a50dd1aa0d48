#include "recip/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>

#include "recip/format.hpp"
#include "recip/fuzz.hpp"
#include "recip/scalar_algebra.hpp"
#include "recip/symmetric_difference.hpp"
#include "recip/vector_algebra.hpp"

namespace recip {

namespace {

using CVec = ComplexVector3<double>;
using RVec = Vector3<double>;
using Cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

struct Check {
  std::size_t trials = 0;
  double max_residual = 0;
  bool nonfinite = false;

  void record(double residual) {
    ++trials;
    if (!std::isfinite(residual)) {
      nonfinite = true;
    } else {
      max_residual = std::max(max_residual, residual);
    }
  }
};

struct Context {
  FuzzRng rng;
  double c;
  LightSpeed<double> light;
  std::size_t trials;

  std::size_t fraction(std::size_t divisor) const { return std::max<std::size_t>(1, trials / divisor); }

  /// Velocity with |u| in [1e-6, 1 - 1e-6] c and random sign.
  double velocity(double lo = 1e-6, double hi = 1 - 1e-6) { return rng.signed_magnitude(lo, hi) * c; }
};

double rel(double a, double b) {
  if (a == b) return 0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

double rel(const CVec& a, const CVec& b) {
  const double scale = std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
  if (scale == 0) return 0;
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

// ---------------------------------------------------------------------------
// Scalar composition.

void velocity_law_on_slownesses(Context& ctx, Check& out) {
  const double c2 = ctx.c * ctx.c;
  for (std::size_t i = 0; i < ctx.trials; ++i) {
    const double u = ctx.velocity(), v = ctx.velocity(), s = ctx.rng.sign();
    out.record(rel(einstein_sum(c2 / u, s * c2 / v, ctx.c), einstein_sum(u, s * v, ctx.c)));
  }
}

void slowness_closure(Context& ctx, Check& out) {
  const double c2 = ctx.c * ctx.c;
  for (std::size_t i = 0; i < ctx.trials; ++i) {
    const double us = c2 / ctx.velocity(), vs = c2 / ctx.velocity();
    const double w = slowness_sum(us, ctx.rng.sign() * vs, ctx.c);
    out.record(std::max(0.0, 1 - std::abs(w) / ctx.c));
  }
}

void velocity_closure(Context& ctx, Check& out) {
  for (std::size_t i = 0; i < ctx.trials; ++i) {
    const double w = einstein_sum(ctx.velocity(), ctx.velocity(), ctx.c);
    out.record(std::max(0.0, std::abs(w) / ctx.c - 1));
  }
}

void reciprocal_symmetry(Context& ctx, Check& out) {
  for (std::size_t i = 0; i < ctx.trials; ++i) {
    const Velocity<double> u(ctx.velocity(), ctx.light), v(ctx.velocity(), ctx.light);
    const double direct = add_velocity(u, v).value();
    const double image = reciprocate(add_slowness(reciprocate(u), reciprocate(v))).value();
    out.record(rel(direct, image));
  }
}

void image_property(Context& ctx, Check& out) {
  const double c2 = ctx.c * ctx.c;
  for (std::size_t i = 0; i < ctx.trials; ++i) {
    const double u = ctx.velocity(), v = ctx.velocity();
    out.record(rel(einstein_sum(u, c2 / v, ctx.c) * einstein_sum(u, v, ctx.c), c2));
  }
}

void light_invariance(Context& ctx, Check& out) {
  const Velocity<double> light(ctx.c, ctx.light);
  for (std::size_t i = 0; i < ctx.trials; ++i) {
    const double u = ctx.velocity();
    out.record(rel(einstein_sum(u, ctx.c, ctx.c), ctx.c));
    out.record(rel(add_velocity(Velocity<double>(u, ctx.light), light).value(), ctx.c));
  }
}

// ---------------------------------------------------------------------------
// Multiplication.

constexpr int kMaxFactor = 8;

void velocity_distributivity(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(100); i < m; ++i) {
    const Velocity<double> u(ctx.velocity(1e-6, 0.5), ctx.light), v(ctx.velocity(1e-6, 0.5), ctx.light);
    for (int a = -kMaxFactor; a <= kMaxFactor; ++a) {
      const Velocity<double> au = scale_velocity(double(a), u);
      for (int b = -kMaxFactor; b <= kMaxFactor; ++b) {
        const double lhs = add_velocity(au, scale_velocity(double(b), u)).value();
        out.record(rel(lhs, scale_velocity(double(a + b), u).value()));
      }
      const double lhs = add_velocity(au, scale_velocity(double(a), v)).value();
      out.record(rel(lhs, scale_velocity(double(a), add_velocity(u, v)).value()));
    }
  }
}

void multiplication_duality(Context& ctx, Check& out) {
  const double c2 = ctx.c * ctx.c;
  for (std::size_t i = 0, m = ctx.fraction(100); i < m; ++i) {
    const Velocity<double> u(ctx.velocity(1e-6, 0.5), ctx.light);
    const Slowness<double> us = reciprocate(u);
    auto check = [&](double n) {
      out.record(rel(scale_slowness(n, us).value(), c2 / scale_velocity(n, u).value()));
    };
    for (int a = -kMaxFactor; a <= kMaxFactor; ++a) {
      if (a != 0) check(a);
    }
    check(ctx.rng.signed_magnitude(0.05, kMaxFactor));
  }
}

void slowness_distributivity(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(100); i < m; ++i) {
    const Slowness<double> us = reciprocate(Velocity<double>(ctx.velocity(1e-6, 0.5), ctx.light));
    const Slowness<double> vs = reciprocate(Velocity<double>(ctx.velocity(1e-6, 0.5), ctx.light));
    for (int a = -kMaxFactor; a <= kMaxFactor; ++a) {
      if (a == 0) continue;  // 0 (x)* u* is degenerate
      const Slowness<double> au = scale_slowness(double(a), us);
      for (int b = -kMaxFactor; b <= kMaxFactor; ++b) {
        if (b == 0 || a + b == 0) continue;
        const double lhs = add_slowness(au, scale_slowness(double(b), us)).value();
        out.record(rel(lhs, scale_slowness(double(a + b), us).value()));
      }
      const double lhs = add_slowness(au, scale_slowness(double(a), vs)).value();
      out.record(rel(lhs, scale_slowness(double(a), add_slowness(us, vs)).value()));
    }
  }
}

/// |n (x) u - n u| / |n u| normalised by n^2 (u/c)^2, for integer |n| >= 1.
double velocity_limit_ratio(double n, double x, const LightSpeed<double>& light) {
  const double u = x * light.value();
  const double err = std::abs(scale_velocity(n, Velocity<double>(u, light)).value() - n * u) / std::abs(n * u);
  return err / (n * n * x * x);
}

/// |n (x)* u* - u*/n| / |u*/n| normalised by n^2 (c/u*)^2, for integer |n| >= 1.
double slowness_limit_ratio(double n, double x, const LightSpeed<double>& light) {
  const double us = light.value() / x;
  const double err = std::abs(scale_slowness(n, Slowness<double>(us, light)).value() - us / n) / std::abs(us / n);
  return err / (n * n * x * x);
}

template <class Ratio>
void limit_bound(Context& ctx, Check& out, Ratio ratio) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const double n = double(ctx.rng.integer(1, kMaxFactor)) * ctx.rng.sign();
    const double x = ctx.rng.sign() * ctx.rng.log_uniform(1e-5, 1e-3);
    out.record(ratio(n, x, ctx.light));
  }
}

/// Shortfall of the observed convergence order below 2, per decade of the
/// small parameter, over three decades.
template <class Ratio>
void limit_order(Context& ctx, Check& out, Ratio ratio) {
  for (int n = 2; n <= kMaxFactor; ++n) {
    const double x0 = ctx.rng.uniform(1e-3, 2e-3);
    double prev = std::abs(ratio(n, x0, ctx.light)) * x0 * x0;
    for (int decade = 1; decade <= 3; ++decade) {
      const double x = x0 * std::pow(10.0, -decade);
      const double err = std::abs(ratio(n, x, ctx.light)) * x * x;
      out.record(std::max(0.0, 2 - std::log10(prev / err)));
      prev = err;
    }
  }
}

// ---------------------------------------------------------------------------
// Rates of energy transfer.

void rate_bound(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const double scale = ctx.rng.log_uniform(1e-3, 1e3);
    const double elapsed = scale * ctx.rng.log_uniform(1e-3, 1e3);
    const double energy = scale * ctx.rng.uniform(-1, 1) * (1 - 1e-12) * ctx.c;
    const double y = rate_of_transfer(TransferRate<double>(energy, elapsed, scale, ctx.light));
    out.record(std::max(0.0, std::abs(y) / ctx.c - 1));
  }
}

void rate_limit(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const double scale = ctx.rng.log_uniform(1e-3, 1e3);
    const double elapsed = scale / ctx.rng.log_uniform(0.25, 4);
    const double energy = 1e-6 * ctx.c * scale;
    const double y = rate_of_transfer(TransferRate<double>(energy, elapsed, scale, ctx.light));
    out.record(rel(y, energy / elapsed));
  }
}

void reciprocal_rate_bound(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const double scale = ctx.rng.log_uniform(1e-3, 1e3);
    const double elapsed = scale * ctx.rng.log_uniform(1e-3, 1e3);
    const double energy = ctx.rng.sign() * scale * ctx.c * ctx.rng.log_uniform(1 + 1e-9, 1e6);
    const auto y = reciprocal_rate(TransferRate<double>(energy, elapsed, scale, ctx.light));
    out.record(std::max(0.0, 1 - std::abs(y.value) / ctx.c));
  }
}

void reciprocal_rate_limit(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const double scale = ctx.rng.log_uniform(1e-3, 1e3);
    const double elapsed = scale / ctx.rng.log_uniform(0.25, 4);
    const double energy = 1e6 * ctx.c * scale;
    const auto y = reciprocal_rate(TransferRate<double>(energy, elapsed, scale, ctx.light));
    out.record(rel(y.value, energy * elapsed / (scale * scale)));
  }
}

/// E t >= c T^2 for transfers above the rate bound that take at least the
/// reference time.
void heisenberg_relation(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const double scale = ctx.rng.log_uniform(1e-3, 1e3);
    const double elapsed = scale * ctx.rng.log_uniform(1, 1e3);
    const double energy = scale * ctx.c * ctx.rng.log_uniform(1 + 1e-9, 1e6);
    const TransferRate<double> rate(energy, elapsed, scale, ctx.light);
    const auto y = reciprocal_rate(rate);
    const double shortfall = std::max(0.0, 1 - energy * elapsed / (ctx.c * scale * scale));
    out.record(y.heisenberg_holds && y.value >= ctx.c ? shortfall : 1.0);
  }
}

// ---------------------------------------------------------------------------
// Difference equations.

constexpr Eigen::Index kGridPoints = 64;

// The difference of neighbouring samples cancels about log10(2W/E) digits, so
// for E = 0.1, W = 1e3 double rounding alone reaches ~1.6e-12. The solutions
// are evaluated in extended precision to measure the equation, not the
// cancellation.
using Ext = long double;

template <class Fn>
void for_each_decay_case(Fn&& fn) {
  for (const Ext bound : {Ext(10), Ext(1e3)}) {
    for (const Ext energy : {Ext(0.1), Ext(1), Ext(1.9) * bound}) {
      for (const Ext sign : {Ext(1), Ext(-1)}) {
        for (const Ext amplitude : {Ext(1), Ext(-2.5)}) fn(BoundedDecayParams<Ext>{sign * energy, bound, amplitude});
      }
    }
  }
}

void decay_residual(Context&, Check& out) {
  for_each_decay_case([&](const BoundedDecayParams<Ext>& p) {
    const auto grid = p.grid(0, kGridPoints);
    const auto f = sample(grid, [&](Ext s) { return bounded_decay_solutions(p, s).f1; });
    const Ext ebar = effective_energy(p.energy, p.bound);
    for (Eigen::Index k = 1; k + 1 < kGridPoints; ++k) {
      out.record(static_cast<double>(std::abs(symmetric_difference(f, k) + ebar * f[k]) / std::abs(ebar * f[k])));
    }
  });
}

void image_decay_residual(Context&, Check& out) {
  for_each_decay_case([&](const BoundedDecayParams<Ext>& p) {
    const auto grid = p.grid(0, kGridPoints);
    const Ext ebar = effective_energy(p.energy, p.bound);
    for (const auto& [form, sign] : {std::pair{ImageForm::reciprocal_argument, Ext(-1)}, {ImageForm::inverted_base, Ext(1)}}) {
      const auto f = sample(grid, [&](Ext s) { return *bounded_decay_solutions(p, s, form).f2; });
      for (Eigen::Index k = 1; k + 1 < kGridPoints; ++k) {
        out.record(static_cast<double>(std::abs(symmetric_difference(f, k) - sign * ebar * f[k]) / std::abs(ebar * f[k])));
      }
    }
  });
}

template <class Fn>
void for_each_oscillator_case(Fn&& fn) {
  for (const double wd : {0.1, 0.5, 0.9}) {
    for (const double step : {1e-3, 1.0}) {
      for (const int sign : {1, -1}) {
        for (const Cplx amplitude : {Cplx(1), Cplx(0.3, -2)}) {
          fn(OscillatorParams<double>{wd / step, step, amplitude, sign, 0});
        }
      }
    }
  }
}

void oscillator_residual(Context&, Check& out) {
  for_each_oscillator_case([&](const OscillatorParams<double>& p) {
    const SymmetricGrid<double> grid(p.step, 0, kGridPoints);
    const auto g1 = sample(grid, [&](double t) { return oscillator_solutions(p, t).g1; });
    const auto g2 = sample(grid, [&](double t) { return oscillator_solutions(p, t).g2; });
    const Cplx iw(0, p.frequency * p.sign);
    for (Eigen::Index k = 1; k + 1 < kGridPoints; ++k) {
      out.record(std::abs(symmetric_difference(g1, k) + iw * g1[k]) / std::abs(iw * g1[k]));
      out.record(std::abs(symmetric_difference(g2, k) - iw * g2[k]) / std::abs(iw * g2[k]));
    }
  });
}

void oscillator_modulus(Context&, Check& out) {
  for_each_oscillator_case([&](const OscillatorParams<double>& p) {
    const double a = std::abs(p.amplitude);
    for (Eigen::Index k = 0; k < kGridPoints; ++k) {
      const auto g = oscillator_solutions(p, double(k) * p.step);
      out.record(std::abs(std::abs(g.g1) - a) / a);
      out.record(std::abs(std::abs(g.g2) - a) / a);
    }
  });
}

void oscillator_levels(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const int n = int(ctx.rng.integer(-20, 20));
    const double step = ctx.rng.log_uniform(1e-3, 10);
    const double w = ctx.rng.uniform(0, 1) / step;
    const double wp = effective_frequency(n, step, w);
    out.record(rel(oscillator_energy_terms(n, step, w).total(), wp * wp));
  }
}

// ---------------------------------------------------------------------------
// Vector composition.

constexpr double kMaxNorm = 0.99;

CVec real_vector(Context& ctx, double lo = 0, double hi = kMaxNorm) { return complexify(RVec(ctx.rng.vector(lo, hi) * ctx.c)); }

void reciprocal_vector_dot(Context& ctx, Check& out) {
  const double c2 = ctx.c * ctx.c;
  for (std::size_t i = 0, m = ctx.fraction(10); i < m;) {
    CVec w;
    for (int j = 0; j < 3; ++j) w(j) = Cplx(ctx.rng.uniform(-1, 1), ctx.rng.uniform(-1, 1)) * ctx.c;
    const RVec r = ctx.rng.unit_vector();
    if (std::abs(bilinear_dot(w, complexify(r))) < 1e-6 * ctx.c) continue;
    out.record(std::abs(bilinear_dot(w, reciprocal_vector(w, r, ctx.light)) - c2) / c2);
    ++i;
  }
}

void associativity(Context& ctx, Check& out) {
  for (std::size_t i = 0; i < ctx.trials; ++i) {
    const CVec u = real_vector(ctx), v = real_vector(ctx), y = real_vector(ctx);
    out.record(associativity_residual(u, v, y, ctx.light));
  }
}

void collinear_reduction(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const double u = ctx.velocity(1e-6, kMaxNorm), v = ctx.velocity(1e-6, kMaxNorm);
    CVec axis = CVec::Zero();
    axis(ctx.rng.integer(0, 2)) = ctx.rng.sign();
    const CVec relative = compose<double>(u * axis, v * axis, Composition::relative, ctx.light);
    const CVec sum = compose<double>(u * axis, v * axis, Composition::sum, ctx.light);
    out.record(rel(relative, CVec(einstein_sum(u, -v, ctx.c) * axis)));
    out.record(rel(sum, CVec(einstein_sum(u, v, ctx.c) * axis)));
  }
}

/// U with U.U = c^2: real part a orthogonal to imaginary part b, |a|^2 - |b|^2 = c^2.
CVec null_vector(Context& ctx) {
  const RVec b = ctx.rng.vector(0, 0.3) * ctx.c;
  RVec a = ctx.rng.unit_vector();
  if (b.norm() > 0) a = (a - a.dot(b) / b.squaredNorm() * b).normalized();
  a *= std::sqrt(ctx.c * ctx.c + b.squaredNorm());
  return a.cast<Cplx>() + Cplx(0, 1) * b.cast<Cplx>();
}

void light_cone(Context& ctx, Check& out) {
  const double c2 = ctx.c * ctx.c;
  for (std::size_t i = 0, m = ctx.fraction(10); i < m;) {
    const CVec u = null_vector(ctx), v = real_vector(ctx);
    if (std::abs(1.0 - bilinear_dot(u, v) / c2) < 1e-2) continue;
    const CVec w = compose(u, v, Composition::relative, ctx.light);
    out.record(std::abs(bilinear_dot(w, w) - c2) / c2);
    ++i;
  }
}

void rotation_composition(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m;) {
    const CVec w = real_vector(ctx);
    const RVec r = ctx.rng.unit_vector();
    const double a = ctx.rng.uniform(-1, 1), b = ctx.rng.uniform(-1, 1);
    try {
      const CVec twice = rotate_reciprocity(rotate_reciprocity(w, {r, a}, ctx.light), {r, b}, ctx.light);
      out.record(rel(twice, rotate_reciprocity(w, {r, a + b}, ctx.light)));
      ++i;
    } catch (const DegenerateSum&) {
    }
  }
}

void rotation_reciprocal_limit(Context& ctx, Check& out) {
  const double c2 = ctx.c * ctx.c;
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const RVec w = ctx.rng.vector(1e-3, kMaxNorm) * ctx.c;
    const CVec rotated = rotate_reciprocity(complexify(w), {w.normalized(), pi}, ctx.light);
    out.record(rel(rotated, complexify(RVec(c2 * w / w.squaredNorm()))));
  }
}

// Two readings of "the reciprocal of U" for the reciprocal-symmetry relation of
// vector relative velocities.

void shared_reciprocal(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m;) {
    const CVec u = real_vector(ctx, 0.05), v = real_vector(ctx, 0.05);
    const RVec r = ctx.rng.unit_vector();
    const ReciprocityRotation<double> rot(r, pi);
    const CVec ur = complexify(r);
    if (std::abs(bilinear_dot(u, ur)) < 0.1 * u.norm() || std::abs(bilinear_dot(v, ur)) < 0.1 * v.norm()) continue;
    out.record(rel(general_compose(u, v, rot, Composition::relative, ctx.light),
                   compose(u, v, Composition::relative, ctx.light)));
    ++i;
  }
}

CVec own_reciprocal(const CVec& x, const LightSpeed<double>& light) {
  return reciprocal_vector(x, RVec(x.real().normalized()), light);
}

void per_vector_reciprocal(Context& ctx, Check& out) {
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const CVec u = real_vector(ctx, 0.05), v = real_vector(ctx, 0.05);
    out.record(rel(compose(own_reciprocal(u, ctx.light), own_reciprocal(v, ctx.light), Composition::relative, ctx.light),
                   compose(u, v, Composition::relative, ctx.light)));
  }
}

void per_vector_reciprocal_dot(Context& ctx, Check& out) {
  const double c2 = ctx.c * ctx.c;
  for (std::size_t i = 0, m = ctx.fraction(10); i < m; ++i) {
    const RVec a = ctx.rng.unit_vector();
    RVec b = ctx.rng.unit_vector();
    b = (b - b.dot(a) * a).normalized();
    const CVec u = complexify(RVec(a * ctx.rng.uniform(0.05, kMaxNorm) * ctx.c));
    const CVec v = complexify(RVec(b * ctx.rng.uniform(0.05, kMaxNorm) * ctx.c));
    const CVec direct = compose(u, v, Composition::relative, ctx.light);
    const CVec image = compose(own_reciprocal(u, ctx.light), own_reciprocal(v, ctx.light), Composition::relative, ctx.light);
    out.record(std::abs(bilinear_dot(image, direct) - c2) / c2);
  }
}

// ---------------------------------------------------------------------------

struct Identity {
  const char* id;
  const char* eq;
  double tolerance;
  /// Unasserted identities report `ambiguous` instead of `fail`.
  bool asserted;
  std::function<void(Context&, Check&)> run;
};

const double kOrderSlack = 2 - std::log10(90.0);

const std::vector<Identity>& identities() {
  static const std::vector<Identity> table = {
      {"velocity_law_on_slownesses", "1", 1e-10, true, velocity_law_on_slownesses},
      {"slowness_closure", "7", 1e-12, true, slowness_closure},
      {"velocity_closure", "8", 1e-12, true, velocity_closure},
      {"reciprocal_symmetry", "10", 1e-10, true, reciprocal_symmetry},
      {"image_property", "11", 1e-10, true, image_property},
      {"light_invariance", "14", 1e-12, true, light_invariance},
      {"velocity_distributivity", "36", 1e-10, true, velocity_distributivity},
      {"multiplication_duality", "37", 1e-10, true, multiplication_duality},
      {"slowness_distributivity", "38", 1e-10, true, slowness_distributivity},
      {"velocity_scaling_bound", "39", 1.0 / 3.0, true,
       [](Context& c, Check& o) { limit_bound(c, o, velocity_limit_ratio); }},
      {"velocity_scaling_order", "39", kOrderSlack, true,
       [](Context& c, Check& o) { limit_order(c, o, velocity_limit_ratio); }},
      {"slowness_scaling_bound", "40", 1.0 / 3.0, true,
       [](Context& c, Check& o) { limit_bound(c, o, slowness_limit_ratio); }},
      {"slowness_scaling_order", "40", kOrderSlack, true,
       [](Context& c, Check& o) { limit_order(c, o, slowness_limit_ratio); }},
      {"rate_bound", "41", 1e-12, true, rate_bound},
      {"rate_limit", "42", 1e-6, true, rate_limit},
      {"reciprocal_rate_bound", "44", 1e-12, true, reciprocal_rate_bound},
      {"reciprocal_rate_limit", "45", 1e-6, true, reciprocal_rate_limit},
      {"heisenberg_relation", "46", 0.0, true, heisenberg_relation},
      {"decay_residual", "19", 1e-12, true, decay_residual},
      {"image_decay_residual", "25", 1e-12, true, image_decay_residual},
      {"oscillator_residual", "48", 1e-12, true, oscillator_residual},
      {"oscillator_modulus", "49-50", 1e-12, true, oscillator_modulus},
      {"oscillator_levels", "54", 1e-12, true, oscillator_levels},
      {"collinear_reduction", "56", 1e-12, true, collinear_reduction},
      {"light_cone", "56", 1e-10, true, light_cone},
      {"rotation_composition", "57", 1e-10, true, rotation_composition},
      {"rotation_reciprocal_limit", "62", 1e-12, true, rotation_reciprocal_limit},
      {"reciprocal_vector", "59", 1e-12, true, reciprocal_vector_dot},
      {"reciprocal_relation_shared_axis", "60", 1e-10, false, shared_reciprocal},
      {"reciprocal_relation_own_axis", "60", 1e-10, false, per_vector_reciprocal},
      {"reciprocal_relation_own_axis_dot", "60", 1e-10, false, per_vector_reciprocal_dot},
      {"associativity", "63", 1e-9, true, associativity},
  };
  return table;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::exact: return "exact";
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::ambiguous: return "ambiguous";
  }
  return "unknown";
}

bool VerificationReport::has_failures() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.status == Status::fail; });
}

const VerificationEntry* VerificationReport::find(std::string_view id) const {
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.id == id; });
  return it == entries.end() ? nullptr : &*it;
}

std::vector<std::pair<std::string, double>> default_tolerances() {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& identity : identities()) out.emplace_back(identity.id, identity.tolerance);
  return out;
}

VerificationReport run_verification(const RunConfig& config) {
  for (const auto& [id, tol] : config.tolerance_overrides) {
    const auto& table = identities();
    if (std::none_of(table.begin(), table.end(), [&](const auto& e) { return e.id == id; })) {
      throw DomainError("unknown identity '" + id + "'");
    }
    if (!(tol >= 0)) throw DomainError("tolerance for '" + id + "' must be nonnegative");
  }

  VerificationReport report{config.seed, config.c, {}};
  const LightSpeed<double> light(config.c);
  std::uint32_t stream = 0;
  for (const auto& identity : identities()) {
    Context ctx{FuzzRng(config.seed, stream++), config.c, light, std::max<std::size_t>(1, config.trials)};
    Check check;
    identity.run(ctx, check);

    VerificationEntry entry;
    entry.id = identity.id;
    entry.eq = identity.eq;
    entry.trials = check.trials;
    entry.max_residual = check.nonfinite ? std::numeric_limits<double>::infinity() : check.max_residual;
    const auto override = config.tolerance_overrides.find(entry.id);
    entry.tolerance = override != config.tolerance_overrides.end() ? override->second : identity.tolerance;
    if (entry.max_residual == 0) {
      entry.status = Status::exact;
    } else if (entry.max_residual <= entry.tolerance) {
      entry.status = Status::pass;
    } else {
      entry.status = identity.asserted ? Status::fail : Status::ambiguous;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["seed"] = report.seed;
  out["c"] = report.c;
  auto& entries = out["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json j;
    j["id"] = e.id;
    j["eq"] = e.eq;
    j["trials"] = e.trials;
    // JSON has no infinity; a non-finite residual is reported as null.
    if (std::isfinite(e.max_residual)) {
      j["max_residual"] = e.max_residual;
    } else {
      j["max_residual"] = nullptr;
    }
    j["tolerance"] = e.tolerance;
    j["status"] = to_string(e.status);
    entries.push_back(std::move(j));
  }
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "seed " << report.seed << "  c " << format_number(report.c) << '\n';
  for (const auto& e : report.entries) {
    out << e.id << "  eq " << e.eq << "  trials " << e.trials << "  max_residual " << format_number(e.max_residual)
        << "  tolerance " << format_number(e.tolerance) << "  " << to_string(e.status) << '\n';
  }
  return out.str();
}

}  // namespace recip
