#include "qse/correlation_measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qse/steering_ellipsoid.hpp"
#include "qse/tolerances.hpp"

namespace qse {

namespace {

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Semiaxes of a Bell-diagonal state's origin-centered ellipsoid are the
// singular values of T.
Eigen::Vector3d bell_diagonal_semiaxes(const PauliForm& form) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(form.t());
  return svd.singularValues();
}

void require_bell_diagonal(const PauliForm& form) {
  if (form.a().norm() > tol::quadrature_fail || form.b().norm() > tol::quadrature_fail)
    throw std::domain_error("closed form requires a Bell-diagonal state (a = b = 0)");
}

}  // namespace

double binary_entropy(double g) {
  return -xlog2x((1.0 + g) / 2.0) - xlog2x((1.0 - g) / 2.0);
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    s -= xlog2x(std::max(es.eigenvalues()(i), 0.0));
  return s;
}

double concurrence(const TwoQubitState& state) {
  const Eigen::Matrix4cd sysy = [] {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 3) = -1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 0) = -1;
    return m;
  }();
  const Eigen::Matrix4cd& rho = state.matrix();
  const Eigen::Matrix4cd flipped = sysy * rho.conjugate() * sysy;
  // rho * rho~ is similar to a PSD product; eigenvalues are real >= 0 up
  // to roundoff.
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(rho * flipped);
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) {
    double v = es.eigenvalues()(i).real();
    if (v < 0.0) {
      if (v < tol::psd_floor)
        throw std::runtime_error("spin-flip spectrum has a large negative eigenvalue");
      v = 0.0;
    }
    lambda[i] = std::sqrt(v);
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<double>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double concurrence_from_semiaxes(double delta, const DirectedSemiaxes& s) {
  if (delta <= -1.0) return 0.0;
  return (s.sx + s.sy + s.sz - 1.0) / 2.0;
}

double discord_bell_diagonal(const TwoQubitState& state) {
  const PauliForm form = decompose(state);
  require_bell_diagonal(form);
  const Eigen::Vector3d s = bell_diagonal_semiaxes(form);
  // h is monotonically decreasing, so min_i h(s_i) = h(max_i s_i).
  const double min_conditional = binary_entropy(s.maxCoeff());
  const double s_b = von_neumann_entropy(partial_trace(state, Qubit::B));
  const double s_ab = von_neumann_entropy(state.matrix());
  return std::max(0.0, min_conditional + s_b - s_ab);
}

double chsh_closed_form(const TwoQubitState& state) {
  const PauliForm form = decompose(state);
  require_bell_diagonal(form);
  Eigen::Vector3d s = bell_diagonal_semiaxes(form);
  std::sort(s.data(), s.data() + 3, std::greater<double>());
  return 2.0 * std::sqrt(s(0) * s(0) + s(1) * s(1));
}

ChshResult chsh_brute_force(const TwoQubitState& state, std::uint64_t seed,
                            int restarts) {
  const Eigen::Matrix3d t = decompose(state).t();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_unit = [&] {
    Eigen::Vector3d v;
    do {
      v = {gauss(rng), gauss(rng), gauss(rng)};
    } while (v.norm() < 1e-12);
    return Eigen::Vector3d(v.normalized());
  };
  auto safe_normalize = [](const Eigen::Vector3d& v, const Eigen::Vector3d& keep) {
    return v.norm() > 1e-300 ? Eigen::Vector3d(v.normalized()) : keep;
  };

  ChshResult best;
  for (int start = 0; start < restarts; ++start) {
    Eigen::Vector3d n1 = random_unit(), n2 = random_unit();
    double value = 0.0;
    bool converged = false;
    for (int it = 0; it < 500; ++it) {
      // <B> = m1.T(n1+n2) + m2.T(n1-n2): each factor is maximized by the
      // unit vector along its partner, so ascend alternately.
      const Eigen::Vector3d m1 = safe_normalize(t * (n1 + n2), random_unit());
      const Eigen::Vector3d m2 = safe_normalize(t * (n1 - n2), random_unit());
      n1 = safe_normalize(t.transpose() * (m1 + m2), n1);
      n2 = safe_normalize(t.transpose() * (m1 - m2), n2);
      const double next = m1.dot(t * (n1 + n2)) + m2.dot(t * (n1 - n2));
      if (std::abs(next - value) < 1e-10 && it > 0) {
        value = next;
        converged = true;
        break;
      }
      value = next;
    }
    if (value > best.value || start == 0) {
      best.value = std::max(value, 0.0);
      best.converged = converged;
    }
  }
  return best;
}

double bond_strength_difference(double delta, const DirectedSemiaxes& s) {
  if (delta >= 0.0)
    throw std::domain_error("bond strength difference is defined for Delta < 0");
  if (delta < -1.0) return -0.25 * (s.sx + s.sy - s.sz);
  return -0.25 * (s.sx + s.sy + s.sz);
}

MeasureReport measures_at(double delta) {
  const TwoQubitState rho = nn_density_matrix(delta);
  const DirectedSemiaxes s = semiaxes(delta);
  MeasureReport r;
  r.concurrence = concurrence_from_semiaxes(delta, s);
  r.discord = discord_bell_diagonal(rho);
  r.chsh = chsh_closed_form(rho);
  if (delta < 0.0) r.bond_strength_diff = bond_strength_difference(delta, s);
  return r;
}

}  // namespace qse
