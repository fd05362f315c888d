#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qse/steering_ellipsoid.hpp"
#include "qse/two_qubit_state.hpp"

using namespace qse;

namespace {

constexpr double kPi = std::numbers::pi;

TwoQubitState werner(double p) {
  Eigen::Matrix4cd rho = p * TwoQubitState::bell_phi_plus().matrix() +
                         (1.0 - p) * Eigen::Matrix4cd::Identity() / 4.0;
  return TwoQubitState{rho};
}

}  // namespace

TEST_SUITE("steering_ellipsoid") {

TEST_CASE("bell state steers to the whole Bloch sphere") {
  const auto e = ellipsoid_for_a(decompose(TwoQubitState::bell_phi_plus()));
  CHECK(e.center.norm() == doctest::Approx(0.0));
  CHECK(e.semiaxes.isApprox(Eigen::Vector3d::Ones(), 1e-12));
  CHECK(e.volume == doctest::Approx(4.0 * kPi / 3.0));
  CHECK(classify_shape(e) == ShapeClass::sphere);
  CHECK_FALSE(e.degenerate);
}

TEST_CASE("maximally mixed state steers nowhere") {
  const auto e = ellipsoid_for_a(decompose(TwoQubitState::maximally_mixed()));
  CHECK(e.semiaxes.norm() == doctest::Approx(0.0));
  CHECK(e.volume == doctest::Approx(0.0));
  CHECK(classify_shape(e) == ShapeClass::point);
}

TEST_CASE("werner family: sphere of radius p, volume threshold at p = 1/3") {
  for (double p : {0.1, 0.25, 1.0 / 3.0, 0.5, 0.9}) {
    const auto e = ellipsoid_for_a(decompose(werner(p)));
    CHECK(e.semiaxes(0) == doctest::Approx(p).epsilon(1e-10));
    CHECK(e.semiaxes(2) == doctest::Approx(p).epsilon(1e-10));
    CHECK(e.volume == doctest::Approx(4.0 * kPi / 3.0 * p * p * p));
    // The volume bound 4*pi/81 is the p = 1/3 Werner sphere, exactly the
    // separability threshold of this family.
    CHECK(exceeds_entanglement_volume_bound(e.volume) == (p > 1.0 / 3.0 + 1e-12));
  }
}

TEST_CASE("pure product state collapses to a point at the marginal") {
  const auto f = decompose(TwoQubitState::computational(0, 0));
  const auto e = ellipsoid_for_a(f);
  CHECK(e.degenerate);
  CHECK(classify_shape(e) == ShapeClass::point);
  CHECK(e.center.isApprox(Eigen::Vector3d(0, 0, 1), 1e-12));
  CHECK(e.volume == doctest::Approx(0.0));
}

TEST_CASE("steered states stay on the reported ellipsoid surface") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto rho = TwoQubitState::random(rng, 4);
    const PauliForm f = decompose(rho);
    const auto e = ellipsoid_for_a(f);
    // Probe along random measurement directions on B's Bloch sphere.
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 20; ++k) {
      Eigen::Vector3d x(gauss(rng), gauss(rng), gauss(rng));
      x.normalize();
      const Eigen::Vector3d p = steered_state(f, x);
      CHECK(p.norm() <= 1.0 + 1e-12);
      // Surface test: (p - c) must satisfy the quadratic form of Q_A.
      const Eigen::Vector3d d = p - e.center;
      if (!e.degenerate && e.semiaxes(2) > 1e-3) {
        const double q = d.dot(e.q_matrix.inverse() * d);
        CHECK(q == doctest::Approx(1.0).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("steered_state rejects bad inputs") {
  const PauliForm f = decompose(TwoQubitState::computational(0, 0));
  CHECK_THROWS_AS(steered_state(f, Eigen::Vector3d(2, 0, 0)), std::domain_error);
  // b = +z here, so x = -z makes the outcome probability vanish.
  CHECK_THROWS_AS(steered_state(f, Eigen::Vector3d(0, 0, -1)), std::domain_error);
}

TEST_CASE("determinant volume formula matches the semiaxis product") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 500; ++i) {
    const auto rho = TwoQubitState::random(rng, 4);
    const auto e = ellipsoid_for_a(decompose(rho));
    const double v_axes = 4.0 * kPi / 3.0 * e.semiaxes.prod();
    const double v_det = ellipsoid_volume(rho);
    CHECK(std::abs(v_det - v_axes) <= 1e-10 * std::max(1.0, v_axes));
  }
}

TEST_CASE("a-side and b-side ellipsoids differ for asymmetric states") {
  std::mt19937_64 rng(5);
  const auto rho = TwoQubitState::random(rng, 3);
  const PauliForm f = decompose(rho);
  const auto ea = ellipsoid_for_a(f);
  const auto eb = ellipsoid_for_b(f);
  // Both must fit inside the Bloch ball: every extreme point along each
  // principal axis is a physical steered state.
  for (const auto& e : {ea, eb})
    for (int k = 0; k < 3; ++k) {
      CHECK((e.center + e.semiaxes(k) * e.axes.col(k)).norm() <= 1.0 + 1e-9);
      CHECK((e.center - e.semiaxes(k) * e.axes.col(k)).norm() <= 1.0 + 1e-9);
    }
}

TEST_CASE("semiaxis classification covers every branch") {
  CHECK(classify_semiaxes({0, 0, 0}) == ShapeClass::point);
  CHECK(classify_semiaxes({1, 1, 1}) == ShapeClass::sphere);
  CHECK(classify_semiaxes({1, 0, 0}) == ShapeClass::needle);
  CHECK(classify_semiaxes({0.7, 0.7, 0.2}) == ShapeClass::oblate);
  CHECK(classify_semiaxes({0.9, 0.3, 0.3}) == ShapeClass::prolate);
  CHECK(classify_semiaxes({0.9, 0.5, 0.2}) == ShapeClass::triaxial);
  // Tolerance is relative: a hair below equal still classifies as sphere.
  CHECK(classify_semiaxes({1.0, 1.0 - 1e-8, 1.0 - 1e-8}) == ShapeClass::sphere);
  CHECK(classify_semiaxes({1.0, 1.0 - 1e-8, 1.0 - 1e-8}, 1e-12) ==
        ShapeClass::prolate);
}

TEST_CASE("to_string round-trips the shape labels") {
  CHECK(to_string(ShapeClass::needle) == "needle");
  CHECK(to_string(ShapeClass::oblate) == "oblate");
  CHECK(to_string(ShapeClass::prolate) == "prolate");
  CHECK(to_string(ShapeClass::sphere) == "sphere");
  CHECK(to_string(ShapeClass::point) == "point");
  CHECK(to_string(ShapeClass::triaxial) == "triaxial");
}

}  // TEST_SUITE
