#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "recip/fuzz.hpp"
#include "recip/symmetric_difference.hpp"

using namespace recip;
using Cplx = std::complex<double>;
using std::numbers::pi;

TEST_CASE("grid and grid function validation") {
  CHECK_THROWS_AS(SymmetricGrid<double>(0.0, 0.0, 3), DomainError);
  CHECK_THROWS_AS(SymmetricGrid<double>(-1.0, 0.0, 3), DomainError);
  CHECK_THROWS_AS(SymmetricGrid<double>(1.0, 0.0, 0), DomainError);
  const SymmetricGrid<double> g(0.25, -1.0, 9);
  CHECK(g.point(0) == -1.0);
  CHECK(g.point(8) == 1.0);
  CHECK_THROWS_AS(GridFunction<double>(g, ComplexVectorX<double>::Zero(4)), DomainError);
}

TEST_CASE("symmetric difference basics") {
  const SymmetricGrid<double> g(0.125, 2.0, 16);

  SUBCASE("constant function") {
    const auto f = sample(g, [](double) { return 3.5; });
    for (Eigen::Index k = 1; k < 15; ++k) CHECK(symmetric_difference(f, k) == Cplx(0));
  }

  SUBCASE("identity samples give exactly one") {
    const auto f = sample(g, [](double s) { return s; });
    for (Eigen::Index k = 1; k < 15; ++k) CHECK(symmetric_difference(f, k) == Cplx(1));
  }

  SUBCASE("boundary indices are rejected") {
    const auto f = sample(g, [](double s) { return s; });
    CHECK_THROWS_AS(symmetric_difference(f, 0), IndexError);
    CHECK_THROWS_AS(symmetric_difference(f, 15), IndexError);
    CHECK_THROWS_AS(symmetric_difference(f, -3), IndexError);
    CHECK_THROWS_AS(central_difference(f.values(), 3, 0.0), DomainError);
  }

  SUBCASE("reflecting the grid flips nothing but the step sign") {
    FuzzRng rng(3);
    ComplexVectorX<double> v(16);
    for (auto& x : v) x = Cplx(rng.uniform(-5, 5), rng.uniform(-5, 5));
    const ComplexVectorX<double> reversed = v.reverse();
    for (Eigen::Index k = 1; k < 15; ++k) {
      const Cplx forward = central_difference(v, k, 0.125);
      const Cplx backward = central_difference(reversed, 15 - k, -0.125);
      CHECK(forward == backward);
    }
  }
}

TEST_CASE("effective energy and weights") {
  CHECK(effective_energy(1.0, 1.0) == doctest::Approx(1.0 / 0.75));
  CHECK(effective_energy(0.0, 5.0) == 0.0);
  CHECK(decay_weight(2.0, 1.0, 1.0) == 0.0);
  CHECK(decay_weight(2.0, 1.0, 0.0) == 1.0);
  CHECK_THROWS_AS(decay_weight(2.5, 1.0, 1.0), DomainError);
  // ((1 - x)/(1 + x))^(W s) at x = 0.25, W = 2, s = 1.5.
  CHECK(decay_weight(1.0, 2.0, 1.5) == doctest::Approx(std::pow(0.75 / 1.25, 3.0)).epsilon(1e-14));
}

TEST_CASE("bounded decay solutions") {
  SUBCASE("special values") {
    const BoundedDecayParams<double> zero{0.0, 4.0, 2.0};
    const auto v = bounded_decay_solutions(zero, 1.7);
    CHECK(v.f1 == 2.0);
    CHECK_FALSE(v.f2.has_value());
    CHECK_THROWS_AS(bounded_decay_solutions(BoundedDecayParams<double>{8.0, 4.0}, 1.0), DomainError);
    CHECK_THROWS_AS(bounded_decay_solutions(BoundedDecayParams<double>{1.0, 0.0}, 1.0), DomainError);
  }

  SUBCASE("classical limit") {
    const auto v = bounded_decay_solutions(BoundedDecayParams<double>{1.0, 1e6}, 1.0);
    CHECK(std::abs(v.f1 - std::exp(-1.0)) / std::exp(-1.0) <= 1e-11);
  }

  SUBCASE("power form oracle") {
    // f1 = A ((1 - E/2W)/(1 + E/2W))^(W s).
    const BoundedDecayParams<double> p{3.0, 5.0, -1.5};
    for (const double s : {0.0, 0.2, 0.37, 1.0, 2.6}) {
      const double oracle = -1.5 * std::pow(0.7 / 1.3, 5.0 * s);
      CHECK(bounded_decay_solutions(p, s).f1 == doctest::Approx(oracle).epsilon(1e-13));
    }
  }

  SUBCASE("difference equation holds on the grid") {
    for (const double bound : {10.0, 250.0}) {
      for (const double energy : {0.5, -3.0, 1.7 * bound}) {
        const BoundedDecayParams<double> p{energy, bound, 1.25};
        const auto grid = p.grid(-0.3 * 8 / bound, 24);
        const auto f1 = sample(grid, [&](double s) { return bounded_decay_solutions(p, s).f1; });
        const auto ebar = effective_energy(energy, bound);
        for (Eigen::Index k = 1; k < 23; ++k) {
          CHECK(std::abs(symmetric_difference(f1, k) + ebar * f1[k]) <= 1e-11 * std::abs(ebar * f1[k]));
        }
      }
    }
  }

  SUBCASE("image solutions") {
    const BoundedDecayParams<double> p{2.0, 10.0, 1.0};
    const auto grid = p.grid(0.0, 12);
    const double ebar = effective_energy(2.0, 10.0);
    const auto alternating = sample(grid, [&](double s) { return *bounded_decay_solutions(p, s).f2; });
    const auto inverted =
        sample(grid, [&](double s) { return *bounded_decay_solutions(p, s, ImageForm::inverted_base).f2; });
    for (Eigen::Index k = 0; k < 12; ++k) {
      // On grid points the two forms differ by (-1)^k and are real.
      CHECK(alternating[k].imag() == 0.0);
      CHECK(alternating[k].real() == doctest::Approx((k % 2 ? -1.0 : 1.0) * inverted[k].real()));
    }
    for (Eigen::Index k = 1; k < 11; ++k) {
      CHECK(std::abs(symmetric_difference(alternating, k) + ebar * alternating[k]) <= 1e-12 * std::abs(ebar * alternating[k]));
      CHECK(std::abs(symmetric_difference(inverted, k) - ebar * inverted[k]) <= 1e-12 * std::abs(ebar * inverted[k]));
    }
    // Off the grid the alternating form takes the principal complex branch.
    const Cplx off = *bounded_decay_solutions(p, 0.05).f2;
    CHECK(std::arg(off) == doctest::Approx(pi / 2));
  }
}

TEST_CASE("oscillator") {
  SUBCASE("half angle") {
    for (const double wd : {0.1, 0.5, 0.9, -0.4}) {
      const double q = oscillator_half_angle(wd, 1.0);
      CHECK(2 * q / (1 + q * q) == doctest::Approx(wd).epsilon(1e-15));
    }
    CHECK_THROWS_AS(oscillator_half_angle(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(oscillator_half_angle(0.1, -1.0), DomainError);
  }

  SUBCASE("initial value and modulus") {
    const OscillatorParams<double> p{2.0, 0.1, Cplx(0.3, -2.0)};
    const auto at0 = oscillator_solutions(p, 0.0);
    CHECK(at0.g1 == p.amplitude);
    CHECK(at0.g2 == p.amplitude);
    for (int k = -20; k <= 20; ++k) {
      const auto v = oscillator_solutions(p, k * 0.1);
      CHECK(std::abs(std::abs(v.g1) - std::abs(p.amplitude)) <= 1e-12);
      CHECK(std::abs(std::abs(v.g2) - std::abs(p.amplitude)) <= 1e-12);
    }
    CHECK_THROWS_AS(oscillator_solutions(OscillatorParams<double>{1, 0.1, Cplx(1), 0}, 0.0), DomainError);
  }

  SUBCASE("classical limit") {
    const OscillatorParams<double> p{1.0, 1e-4};
    CHECK(std::abs(oscillator_solutions(p, 1.0).g1 - std::polar(1.0, -1.0)) <= 1e-7);
    OscillatorParams<double> swapped = p;
    swapped.sign = -1;
    CHECK(std::abs(oscillator_solutions(swapped, 1.0).g1 - std::polar(1.0, 1.0)) <= 1e-7);
  }

  SUBCASE("difference equation on the grid") {
    for (const int sign : {1, -1}) {
      const OscillatorParams<double> p{4.0, 0.2, Cplx(1.0, 1.0), sign};
      const SymmetricGrid<double> grid(p.step, -1.0, 30);
      const auto g1 = sample(grid, [&](double t) { return oscillator_solutions(p, t).g1; });
      const auto g2 = sample(grid, [&](double t) { return oscillator_solutions(p, t).g2; });
      const Cplx iw(0, p.frequency * sign);
      for (Eigen::Index k = 1; k < 29; ++k) {
        CHECK(std::abs(symmetric_difference(g1, k) + iw * g1[k]) <= 1e-12 * std::abs(iw * g1[k]));
        CHECK(std::abs(symmetric_difference(g2, k) - iw * g2[k]) <= 1e-12 * std::abs(iw * g2[k]));
      }
    }
  }
}

TEST_CASE("level formulas") {
  CHECK(effective_frequency(0, pi, 0.0) == doctest::Approx(1.0));
  CHECK(effective_frequency(0, 0.5, 3.0) == doctest::Approx(2 * pi + 3.0));
  CHECK(effective_frequency(-1, 2.0, 0.0) == doctest::Approx(-pi / 2));
  CHECK(effective_frequency(OscillatorParams<double>{1.5, 0.5, Cplx(1), 1, 2}) == doctest::Approx(10 * pi + 1.5));
  CHECK_THROWS_AS(effective_frequency(0, 0.0, 1.0), DomainError);

  const auto t0 = oscillator_energy_terms(0, 1.0, 1.0);
  CHECK(t0.level == doctest::Approx(pi * pi));
  CHECK(t0.cross == doctest::Approx(2 * pi));
  CHECK(t0.square == 1.0);
  CHECK(t0.total() == doctest::Approx(pi * pi + 2 * pi + 1));

  for (int n = -3; n <= 6; ++n) {
    const double step = 0.3, w = 1.7;
    const auto t = oscillator_energy_terms(n, step, w);
    CHECK(t.cross / (2 * w * pi / step) == doctest::Approx(2 * n + 1));
    const double wp = effective_frequency(n, step, w);
    CHECK(t.total() == doctest::Approx(wp * wp).epsilon(1e-13));
    const auto still = oscillator_energy_terms(n, step, 0.0);
    CHECK(still.cross == 0.0);
    CHECK(still.total() == still.level);
  }

  CHECK(well_energy(1, 1.0, 1.0, 1.0) == doctest::Approx(pi * pi / 2).epsilon(1e-15));
  for (int n = 2; n <= 5; ++n) {
    CHECK(well_energy(n, 2.0, 0.7, 0.1) == doctest::Approx(n * n * well_energy(1, 2.0, 0.7, 0.1)));
  }
  CHECK_THROWS_AS(well_energy(0, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(well_energy(1, -1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(well_energy(1, 1.0, 1.0, 0.0), DomainError);
}
