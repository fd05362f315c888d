#pragma once

#include <string>

#include "qse/two_qubit_state.hpp"
#include "qse/tolerances.hpp"

namespace qse {

enum class ShapeClass { point, needle, oblate, prolate, sphere, triaxial };

std::string to_string(ShapeClass shape);

// Steering ellipsoid of one qubit: the set of Bloch vectors its partner
// can steer it to.  Semiaxes are sorted descending; axes columns are the
// matching orthonormal eigenvectors of q_matrix.  degenerate marks the
// |b| -> 1 single-point case.
struct SteeringEllipsoid {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Matrix3d q_matrix = Eigen::Matrix3d::Zero();
  Eigen::Vector3d semiaxes = Eigen::Vector3d::Zero();
  Eigen::Matrix3d axes = Eigen::Matrix3d::Identity();
  double volume = 0.0;
  bool degenerate = false;
};

// Ellipsoid steered onto qubit A by measurements on B:
//   c_A = (a - T b) / (1 - b^2)
//   Q_A = (T - a b^T)(I + b b^T/(1 - b^2))(T^T - b a^T) / (1 - b^2)
// The |b| >= 1 - tol::degenerate_b case collapses to the point a.
SteeringEllipsoid ellipsoid_for_a(const PauliForm& form);

// Same with a <-> b and T -> T^T.
SteeringEllipsoid ellipsoid_for_b(const PauliForm& form);

// Bloch vector (a + T x) / (1 + b.x) that A is steered to when B's
// measurement direction is x, |x| <= 1.  Throws std::domain_error when
// 1 + b.x is too small to normalize.
Eigen::Vector3d steered_state(const PauliForm& form, const Eigen::Vector3d& x);

// Ellipsoid volume straight from the state:
//   V_A = (64 pi / 3) |det rho - det rho^{T_B}| / (1 - b^2)^2,
// 0 with the degenerate flag semantics when |b| -> 1.  Cross-checks
// against (4 pi / 3) s1 s2 s3 to 1e-10 relative.
double ellipsoid_volume(const TwoQubitState& state);

// Deterministic classification with relative tolerance eps.  Test order:
// point -> sphere -> needle -> oblate -> prolate -> triaxial.
ShapeClass classify_shape(const SteeringEllipsoid& e,
                          double eps = tol::shape_default);
ShapeClass classify_semiaxes(Eigen::Vector3d s, double eps = tol::shape_default);

// Any state whose ellipsoid volume exceeds 4*pi/81 must be entangled.
bool exceeds_entanglement_volume_bound(double volume);

}  // namespace qse
