#include "qse/steering_ellipsoid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qse {

namespace {

constexpr double kPi = std::numbers::pi;

SteeringEllipsoid from_blocks(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                              const Eigen::Matrix3d& t) {
  SteeringEllipsoid e;
  const double b2 = b.squaredNorm();
  if (b.norm() >= 1.0 - tol::degenerate_b) {
    e.center = a;
    e.degenerate = true;
    return e;
  }
  const double inv = 1.0 / (1.0 - b2);
  e.center = inv * (a - t * b);
  Eigen::Matrix3d q = inv * (t - a * b.transpose()) *
                      (Eigen::Matrix3d::Identity() + inv * b * b.transpose()) *
                      (t.transpose() - b * a.transpose());
  q = 0.5 * (q + q.transpose().eval());  // symmetrize before eigendecomposition
  e.q_matrix = q;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(q);
  Eigen::Vector3d vals = es.eigenvalues();
  for (int i = 0; i < 3; ++i) {
    if (vals(i) < 0.0 && vals(i) >= -1e-9) vals(i) = 0.0;
    if (vals(i) < 0.0)
      throw std::domain_error("ellipsoid matrix has a negative eigenvalue");
  }
  // SelfAdjointEigenSolver sorts ascending; flip to descending.
  for (int i = 0; i < 3; ++i) {
    e.semiaxes(i) = std::sqrt(vals(2 - i));
    e.axes.col(i) = es.eigenvectors().col(2 - i);
  }
  e.volume = (4.0 * kPi / 3.0) * e.semiaxes.prod();
  return e;
}

}  // namespace

std::string to_string(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::point: return "point";
    case ShapeClass::needle: return "needle";
    case ShapeClass::oblate: return "oblate";
    case ShapeClass::prolate: return "prolate";
    case ShapeClass::sphere: return "sphere";
    case ShapeClass::triaxial: return "triaxial";
  }
  return "unknown";
}

SteeringEllipsoid ellipsoid_for_a(const PauliForm& form) {
  return from_blocks(form.a(), form.b(), form.t());
}

SteeringEllipsoid ellipsoid_for_b(const PauliForm& form) {
  return from_blocks(form.b(), form.a(), form.t().transpose());
}

Eigen::Vector3d steered_state(const PauliForm& form, const Eigen::Vector3d& x) {
  if (x.norm() > 1.0 + tol::structural)
    throw std::domain_error("measurement direction must satisfy |x| <= 1");
  const double denom = 1.0 + form.b().dot(x);
  if (denom <= 1e-12)
    throw std::domain_error("unnormalizable steering outcome: 1 + b.x ~ 0");
  return (form.a() + form.t() * x) / denom;
}

double ellipsoid_volume(const TwoQubitState& state) {
  const PauliForm form = decompose(state);
  const double b2 = form.b().squaredNorm();
  if (form.b().norm() >= 1.0 - tol::degenerate_b) return 0.0;
  const std::complex<double> det_rho = state.matrix().determinant();
  const std::complex<double> det_pt =
      Eigen::Matrix4cd(partial_transpose_b(state)).determinant();
  const double denom = (1.0 - b2) * (1.0 - b2);
  return (64.0 * kPi / 3.0) * std::abs(det_rho.real() - det_pt.real()) / denom;
}

ShapeClass classify_semiaxes(Eigen::Vector3d s, double eps) {
  std::sort(s.data(), s.data() + 3, std::greater<double>());
  const double s1 = s(0), s2 = s(1), s3 = s(2);
  const double scale = std::max(s1, 1e-300);
  if (s1 <= eps) return ShapeClass::point;
  if ((s1 - s3) <= eps * scale) return ShapeClass::sphere;
  if (s2 <= eps * scale) return ShapeClass::needle;
  if ((s1 - s2) <= eps * scale) return ShapeClass::oblate;
  if ((s2 - s3) <= eps * scale) return ShapeClass::prolate;
  return ShapeClass::triaxial;
}

ShapeClass classify_shape(const SteeringEllipsoid& e, double eps) {
  if (e.degenerate) return ShapeClass::point;
  return classify_semiaxes(e.semiaxes, eps);
}

bool exceeds_entanglement_volume_bound(double volume) {
  return volume > 4.0 * kPi / 81.0;
}

}  // namespace qse
