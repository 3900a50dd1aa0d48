#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Geometry>

#include "recip/fuzz.hpp"
#include "recip/scalar_algebra.hpp"
#include "recip/vector_algebra.hpp"

using namespace recip;
using Cplx = std::complex<double>;
using CVec = ComplexVector3<double>;
using RVec = Vector3<double>;
using std::numbers::pi;

namespace {

constexpr Cplx I(0, 1);

double dist(const CVec& a, const CVec& b) { return (a - b).cwiseAbs().maxCoeff(); }

double rel_scaled(const CVec& a, const CVec& b) { return dist(a, b) / std::max(1.0, b.cwiseAbs().maxCoeff()); }

// Pauli-algebra oracle: 1 + U.sigma as a 2x2 matrix. The product
// (1 + U.sigma)(1 + V.sigma) = (1 + U.V) + (U + V + i U x V).sigma.
using Mat2 = Eigen::Matrix2cd;

Mat2 pauli(const CVec& u) {
  Mat2 m;
  m << Cplx(1) + u(2), u(0) - I * u(1), u(0) + I * u(1), Cplx(1) - u(2);
  return m;
}

CVec from_pauli(const Mat2& m) {
  const Cplx scalar = (m(0, 0) + m(1, 1)) / 2.0;
  const CVec v((m(0, 1) + m(1, 0)) / 2.0, (m(1, 0) - m(0, 1)) / (2.0 * I), (m(0, 0) - m(1, 1)) / 2.0);
  return v / scalar;
}

}  // namespace

TEST_CASE("bilinear products differ from Eigen's sesquilinear ones") {
  const CVec a(Cplx(1, 2), Cplx(0, -1), Cplx(3, 0.5));
  const CVec b(Cplx(-2, 1), Cplx(4, 0), Cplx(0, 1));
  const Cplx by_hand = a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
  CHECK(std::abs(bilinear_dot(a, b) - by_hand) <= 1e-15);
  CHECK(std::abs(a.dot(b) - by_hand) > 1);
  const CVec cross = bilinear_cross(a, b);
  CHECK(std::abs(cross(0) - (a(1) * b(2) - a(2) * b(1))) <= 1e-15);
  CHECK(std::abs(cross(1) - (a(2) * b(0) - a(0) * b(2))) <= 1e-15);
  CHECK(std::abs(cross(2) - (a(0) * b(1) - a(1) * b(0))) <= 1e-15);
  CHECK(dist(a.cross(b), cross.conjugate()) <= 1e-15);
  const RVec x(1, 2, 3), y(-1, 0.5, 2);
  CHECK((bilinear_cross(x, y) - x.cross(y)).norm() == 0.0);
}

TEST_CASE("composition examples") {
  const CVec u = complexify(RVec(0.5, 0, 0));
  CHECK(compose(u, CVec::Zero().eval()) == u);
  CHECK(dist(compose(u, complexify(RVec(-0.5, 0, 0))), complexify(RVec(0.8, 0, 0))) <= 1e-15);
  CHECK(dist(compose(u, complexify(RVec(0, 0.5, 0))), CVec(0.5, -0.5, Cplx(0, -0.25))) <= 1e-15);
  CHECK(dist(compose(u, complexify(RVec(0, 0.5, 0)), Composition::sum), CVec(0.5, 0.5, Cplx(0, 0.25))) <= 1e-15);
  CHECK_THROWS_AS(compose(u, complexify(RVec(2, 0, 0)), Composition::relative), DegenerateSum);

  SUBCASE("scaled units") {
    const LightSpeed<double> c(10.0);
    const CVec w = compose(complexify(RVec(5, 0, 0)), complexify(RVec(0, 5, 0)), Composition::sum, c);
    CHECK(dist(w, CVec(5, 5, Cplx(0, 2.5))) <= 1e-14);
  }
}

TEST_CASE("composition matches the Pauli product") {
  FuzzRng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const CVec u = complexify(rng.vector(0, 0.99)), v = complexify(rng.vector(0, 0.99));
    const CVec oracle = from_pauli(pauli(u) * pauli(v));
    CHECK(dist(compose(u, v, Composition::sum), oracle) <= 1e-12 * std::max(1.0, oracle.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("collinear and degenerate cases") {
  FuzzRng rng(6);
  for (int i = 0; i < 2000; ++i) {
    const double a = rng.uniform(-0.99, 0.99), b = rng.uniform(-0.99, 0.99);
    const RVec axis = rng.unit_vector();
    const CVec w = compose(complexify(RVec(a * axis)), complexify(RVec(b * axis)), Composition::sum);
    const CVec expected = complexify(RVec(einstein_sum(a, b) * axis));
    CHECK(dist(w, expected) <= 1e-12);
  }
  const CVec x = complexify(rng.vector(0.1, 0.9));
  CHECK(dist(compose(x, x), CVec::Zero()) == 0.0);
}

TEST_CASE("associativity") {
  FuzzRng rng(8);
  for (int i = 0; i < 5000; ++i) {
    const CVec u = complexify(rng.vector(0, 0.99)), v = complexify(rng.vector(0, 0.99)),
               y = complexify(rng.vector(0, 0.99));
    CHECK(associativity_residual(u, v, y) <= 1e-9);
  }
  const CVec u = complexify(rng.vector(0, 0.9)), v = complexify(rng.vector(0, 0.9));
  CHECK(associativity_residual(u, v, CVec::Zero().eval()) <= 1e-15);
  const RVec axis = rng.unit_vector();
  CHECK(associativity_residual(complexify(RVec(0.3 * axis)), complexify(RVec(-0.7 * axis)),
                               complexify(RVec(0.95 * axis))) <= 1e-12);
}

TEST_CASE("light cone is preserved") {
  FuzzRng rng(9);
  for (int i = 0; i < 2000; ++i) {
    // U = a + i b with a perpendicular to b and |a|^2 - |b|^2 = 1.
    const RVec b = rng.vector(0, 0.3);
    RVec a = rng.unit_vector();
    a -= b.dot(a) / std::max(b.squaredNorm(), 1e-300) * b;
    if (a.norm() < 1e-3) continue;
    a *= std::sqrt(1 + b.squaredNorm()) / a.norm();
    const CVec u = complexify(a) + I * complexify(b);
    REQUIRE(std::abs(bilinear_dot(u, u) - 1.0) <= 1e-14);
    const CVec v = complexify(rng.vector(0, 0.9));
    if (std::abs(1.0 + bilinear_dot(u, v)) < 1e-2) continue;
    const CVec w = compose(u, v, Composition::sum);
    CHECK(std::abs(bilinear_dot(w, w) - 1.0) <= 1e-10);
  }
}

TEST_CASE("reciprocity rotation") {
  CHECK_THROWS_AS(ReciprocityRotation<double>(RVec(1, 1, 0), 0.3), DomainError);
  CHECK_THROWS_AS(ReciprocityRotation<double>(RVec(1, 0, 0), std::nan("")), DomainError);
  CHECK(ReciprocityRotation<double>(RVec(0, 0, 1), pi).is_reciprocal());
  CHECK(ReciprocityRotation<double>(RVec(0, 0, 1), -3 * pi).is_reciprocal());
  CHECK_FALSE(ReciprocityRotation<double>(RVec(0, 0, 1), 2 * pi).is_reciprocal());

  FuzzRng rng(10);
  const CVec w = complexify(rng.vector(0.1, 0.9));
  const RVec r = rng.unit_vector();

  SUBCASE("zero angle is the identity") {
    CHECK(rotate_reciprocity(w, ReciprocityRotation<double>(r, 0.0)) == w);
  }

  SUBCASE("continuity at the identity") {
    const double phi = 1e-7;
    CHECK(dist(rotate_reciprocity(w, ReciprocityRotation<double>(r, phi)), w) <= 10 * phi);
  }

  SUBCASE("angles about one axis add") {
    for (int i = 0; i < 200; ++i) {
      const double a = rng.uniform(-1.4, 1.4), b = rng.uniform(-1.4, 1.4);
      const CVec twice = rotate_reciprocity(rotate_reciprocity(w, {r, a}), {r, b});
      const CVec once = rotate_reciprocity(w, {r, a + b});
      CHECK(dist(twice, once) <= 1e-10 * std::max(1.0, once.cwiseAbs().maxCoeff()));
    }
  }

  SUBCASE("pi is the limit of nearby angles") {
    const CVec limit = rotate_reciprocity(w, {r, pi});
    const CVec near = rotate_reciprocity(w, {r, pi - 1e-7});
    CHECK(dist(limit, near) <= 1e-5 * std::max(1.0, limit.cwiseAbs().maxCoeff()));
  }

  SUBCASE("reciprocal along the vector itself") {
    const RVec real = rng.vector(0.2, 0.9);
    const CVec got = rotate_reciprocity(complexify(real), {real.normalized(), pi});
    CHECK(dist(got, complexify(RVec(real / real.squaredNorm()))) <= 1e-14);
  }
}

TEST_CASE("reciprocal vector") {
  const LightSpeed<double> c(2.0);
  CHECK(dist(reciprocal_vector(complexify(RVec(0.5, 0, 0)), RVec(1, 0, 0), c), complexify(RVec(8, 0, 0))) <= 1e-15);
  CHECK_THROWS_AS(reciprocal_vector(complexify(RVec(0, 1, 0)), RVec(1, 0, 0)), DegenerateSum);

  FuzzRng rng(13);
  for (int i = 0; i < 2000; ++i) {
    const CVec w = complexify(rng.vector(0.05, 0.99));
    const RVec r = rng.unit_vector();
    if (std::abs(bilinear_dot(w, complexify(r))) < 1e-3) continue;
    CHECK(std::abs(bilinear_dot(w, reciprocal_vector(w, r)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("general composition") {
  FuzzRng rng(14);
  const CVec u = complexify(rng.vector(0.1, 0.9)), v = complexify(rng.vector(0.1, 0.9));
  const RVec r = rng.unit_vector();
  CHECK(general_compose(u, v, {r, 0.0}) == compose(u, v));
  CHECK(dist(general_compose(u, u, {r, 0.8}), CVec::Zero()) <= 1e-15);

  SUBCASE("collinear operands at pi reduce to the scalar law on slownesses") {
    const RVec axis = rng.unit_vector();
    const double a = 0.6, b = -0.3;
    const CVec got =
        general_compose(complexify(RVec(a * axis)), complexify(RVec(b * axis)), ReciprocityRotation<double>(axis, pi));
    // The rotated operands are 1/a and 1/b along the axis, and the addition law
    // applied to slownesses agrees with the law applied to the velocities.
    CHECK(dist(got, complexify(RVec(einstein_sum(1 / a, -1 / b) * axis))) <= 1e-12);
    CHECK(dist(got, complexify(RVec(einstein_sum(a, -b) * axis))) <= 1e-12);
  }
}

TEST_CASE("laws hold outside natural units") {
  const LightSpeed<double> c(3.0);
  FuzzRng rng(15);
  for (int i = 0; i < 1000; ++i) {
    const CVec u = complexify(RVec(rng.vector(0, 0.99) * 3.0)), v = complexify(RVec(rng.vector(0, 0.99) * 3.0)),
               y = complexify(RVec(rng.vector(0, 0.99) * 3.0));
    CHECK(associativity_residual(u, v, y, c) <= 1e-9);
    // Rescaling every velocity by c reproduces the natural-unit result.
    CHECK(rel_scaled(compose(u, v, Composition::sum, c) / 3.0, compose<double>(u / 3.0, v / 3.0, Composition::sum)) <=
          1e-14);
    const RVec r = rng.unit_vector();
    if (std::abs(bilinear_dot(u, complexify(r))) > 1e-3) {
      CHECK(std::abs(bilinear_dot(u, reciprocal_vector(u, r, c)) - 9.0) <= 1e-11);
    }
  }
  const CVec w = complexify(RVec(1.0, -0.5, 2.0));
  const RVec r(0, 0.6, 0.8);
  const CVec twice = rotate_reciprocity(rotate_reciprocity(w, {r, 0.4}, c), {r, 0.9}, c);
  CHECK(dist(twice, rotate_reciprocity(w, {r, 1.3}, c)) <= 1e-13);
}
