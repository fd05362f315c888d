#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qse/steering_ellipsoid.hpp"
#include "qse/xxz_model.hpp"

using namespace qse;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent check of the Delta > 1 energy branch: rapidly convergent
// series at anisotropy eta = arccosh(Delta),
//   e = Delta/4 - sinh(eta) * (1/2 + 2 sum_{n>=1} 1 / (1 + exp(2 n eta))).
double massive_branch_series(double delta) {
  const double eta = std::acosh(delta);
  double sum = 0.0;
  for (int n = 1; n < 4000; ++n) {
    const double term = 1.0 / (1.0 + std::exp(2.0 * n * eta));
    sum += term;
    if (term < 1e-18) break;
  }
  return delta / 4.0 - std::sinh(eta) * (0.5 + 2.0 * sum);
}

}  // namespace

TEST_SUITE("xxz_model") {

TEST_CASE("phase map") {
  CHECK(phase_of(-2.0) == Phase::ferromagnetic);
  CHECK(phase_of(-1.0) == Phase::first_order_point);
  CHECK(phase_of(0.0) == Phase::gapless);
  CHECK(phase_of(1.0) == Phase::kt_point);
  CHECK(phase_of(2.5) == Phase::antiferromagnetic);
}

TEST_CASE("ground energy anchors") {
  CHECK(ground_energy(-2.0) == doctest::Approx(0.5));          // -Delta/4
  CHECK(ground_energy(0.0) == doctest::Approx(-1.0 / kPi).epsilon(1e-12));
  CHECK(ground_energy(0.5) == doctest::Approx(-0.375).epsilon(1e-12));
  CHECK(ground_energy(1.0) ==
        doctest::Approx(0.25 - std::log(2.0)).epsilon(1e-12));
  // Regression constants, pinned after cross-checking against the
  // massive-branch series at 40-digit precision.
  CHECK(ground_energy(-0.999) == doctest::Approx(-0.2500023609101092).epsilon(1e-10));
  CHECK(ground_energy(2.0) == doctest::Approx(-0.6172220459758656).epsilon(1e-12));
  CHECK(ground_energy(3.0) == doctest::Approx(-0.8310204065300397).epsilon(1e-12));
}

TEST_CASE("massive branch agrees with the independent series") {
  for (double delta : {1.05, 1.2, 1.5, 2.0, 3.0, 5.0, 10.0})
    CHECK(ground_energy(delta) ==
          doctest::Approx(massive_branch_series(delta)).epsilon(1e-11));
}

TEST_CASE("energy is continuous across Delta = 1") {
  const double at = ground_energy(1.0);
  CHECK(std::abs(ground_energy(1.0 - 2e-6) - at) < 1e-5);
  CHECK(std::abs(ground_energy(1.0 + 2e-6) - at) < 1e-5);
  // Inputs inside the clamp window snap to the boundary offset.
  CHECK(ground_energy(1.0 + 1e-9) == ground_energy(1.0 + 9e-7));
}

TEST_CASE("zz correlator anchors") {
  CHECK(zz_correlator(-1.5) == doctest::Approx(-1.0));
  CHECK(zz_correlator(0.0) == doctest::Approx(-4.0 / (kPi * kPi)).epsilon(1e-9));
  CHECK(zz_correlator(0.5) == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(zz_correlator(1.0) ==
        doctest::Approx((1.0 - 4.0 * std::log(2.0)) / 3.0).epsilon(1e-7));
}

TEST_CASE("derivative side reporting near the KT point") {
  CHECK(zz_correlator_info(1.0).side == CriticalSide::left);
  CHECK(zz_correlator_info(1.0 - 5e-4).side == CriticalSide::left);
  CHECK(zz_correlator_info(1.0 + 5e-4).side == CriticalSide::right);
  CHECK(zz_correlator_info(0.5).side == CriticalSide::none);
  CHECK(zz_correlator_info(-1.0).side == CriticalSide::left);
}

TEST_CASE("xx follows from the energy identity") {
  for (double delta : {-0.7, 0.0, 0.4, 1.3, 2.0}) {
    const CorrelatorTriple c = correlators(delta);
    CHECK(c.xx == doctest::Approx(c.yy));
    CHECK(0.25 * (c.xx + c.yy + delta * c.zz) ==
          doctest::Approx(ground_energy(delta)).epsilon(1e-8));
    CHECK(std::abs(c.zz) <= 1.0 + 1e-9);
    CHECK(std::abs(c.xx) <= 1.0 + 1e-9);
  }
}

TEST_CASE("isotropic point has isotropic correlators") {
  const CorrelatorTriple c = correlators(1.0);
  CHECK(c.xx == doctest::Approx(c.zz).epsilon(1e-6));
}

TEST_CASE("nearest-neighbor density matrix reproduces its correlators") {
  for (double delta : {-0.5, 0.0, 0.8, 1.0, 2.5}) {
    const TwoQubitState rho = nn_density_matrix(delta);
    CHECK(rho.min_eigenvalue() >= -1e-12);
    const PauliForm f = decompose(rho);
    const CorrelatorTriple c = correlators(delta);
    CHECK(f.a().norm() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f.b().norm() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f.t()(0, 0) == doctest::Approx(c.xx).epsilon(1e-12));
    CHECK(f.t()(1, 1) == doctest::Approx(c.yy).epsilon(1e-12));
    CHECK(f.t()(2, 2) == doctest::Approx(c.zz).epsilon(1e-12));
  }
}

TEST_CASE("directed semiaxes are correlator magnitudes") {
  const DirectedSemiaxes s = semiaxes(0.5);
  CHECK(s.sx == doctest::Approx(0.625).epsilon(1e-9));
  CHECK(s.sy == doctest::Approx(0.625).epsilon(1e-9));
  CHECK(s.sz == doctest::Approx(0.5).epsilon(1e-8));
  // Ferro branch: needle along z.
  const DirectedSemiaxes f = semiaxes(-2.0);
  CHECK(f.sx == 0.0);
  CHECK(f.sy == 0.0);
  CHECK(f.sz == 1.0);
}

TEST_CASE("semiaxes jump at the first-order point") {
  const DirectedSemiaxes left = semiaxes(-1.0 - 1e-3);
  const DirectedSemiaxes right = semiaxes(-1.0 + 1e-3);
  CHECK(std::abs(right.sx - left.sx) > 0.1);
  CHECK(std::abs(right.sz - left.sz) > 0.1);
  // Pinned value just right of the transition.
  const DirectedSemiaxes near = semiaxes(-0.999);
  CHECK(near.sx == doctest::Approx(0.5071).epsilon(5e-4));
  CHECK(near.sz == doctest::Approx(0.01414).epsilon(5e-3));
}

TEST_CASE("nn ellipsoid matches the direction-labeled semiaxes") {
  for (double delta : {-0.3, 0.7, 1.8}) {
    const auto e = ellipsoid_for_a(decompose(nn_density_matrix(delta)));
    Eigen::Vector3d expect = semiaxes(delta).vec();
    std::sort(expect.data(), expect.data() + 3, std::greater<double>());
    CHECK(e.semiaxes.isApprox(expect, 1e-9));
    CHECK(e.center.norm() == doctest::Approx(0.0).epsilon(1e-12));
  }
}

}  // TEST_SUITE
