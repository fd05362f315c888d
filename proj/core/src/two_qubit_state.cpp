#include "qse/two_qubit_state.hpp"

#include <complex>
#include <stdexcept>

#include "qse/tolerances.hpp"

namespace qse {

using std::complex;

namespace {

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

Eigen::Matrix2cd pauli(int mu) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  const complex<double> i(0.0, 1.0);
  switch (mu) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index must be 0..3");
  }
  return m;
}

PauliForm PauliForm::from_blocks(const Eigen::Vector3d& a,
                                 const Eigen::Vector3d& b,
                                 const Eigen::Matrix3d& t) {
  PauliForm f;
  f.theta(0, 0) = 1.0;
  f.theta.block<3, 1>(1, 0) = a;
  f.theta.block<1, 3>(0, 1) = b.transpose();
  f.theta.block<3, 3>(1, 1) = t;
  return f;
}

TwoQubitState::TwoQubitState(const Eigen::Matrix4cd& rho) : rho_(rho) {
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::structural)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > tol::structural)
    throw std::invalid_argument("density matrix does not have unit trace");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < tol::psd_floor)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

double TwoQubitState::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

TwoQubitState TwoQubitState::maximally_mixed() {
  return TwoQubitState(Eigen::Matrix4cd::Identity() / 4.0);
}

TwoQubitState TwoQubitState::bell_phi_plus() {
  Eigen::Vector4cd psi;
  psi << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  return TwoQubitState(psi * psi.adjoint());
}

TwoQubitState TwoQubitState::computational(int q_a, int q_b) {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(2 * q_a + q_b) = 1.0;
  return TwoQubitState(psi * psi.adjoint());
}

TwoQubitState TwoQubitState::random(std::mt19937_64& rng, int rank) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(4, rank);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < rank; ++c) g(r, c) = complex<double>(gauss(rng), gauss(rng));
  Eigen::Matrix4cd rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint().eval());  // kill roundoff asymmetry
  return TwoQubitState(rho);
}

PauliForm decompose(const TwoQubitState& state) {
  PauliForm f;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Eigen::Matrix4cd op = kron2(pauli(mu), pauli(nu));
      f.theta(mu, nu) = (state.matrix() * op).trace().real();
    }
  return f;
}

TwoQubitState reconstruct(const PauliForm& form) {
  if (std::abs(form.theta(0, 0) - 1.0) > tol::structural)
    throw std::domain_error("Pauli form must have theta[0][0] = 1");
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      rho += form.theta(mu, nu) * kron2(pauli(mu), pauli(nu));
  rho /= 4.0;
  rho = 0.5 * (rho + rho.adjoint().eval());
  try {
    return TwoQubitState(rho);
  } catch (const std::invalid_argument& e) {
    throw std::domain_error(std::string("non-physical Pauli form: ") + e.what());
  }
}

Eigen::Matrix2cd partial_trace(const TwoQubitState& state, Qubit keep) {
  const Eigen::Matrix4cd& rho = state.matrix();
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        out(p, q) += (keep == Qubit::A) ? rho(2 * p + r, 2 * q + r)
                                        : rho(2 * r + p, 2 * r + q);
  return out;
}

Eigen::Matrix4cd partial_transpose_b(const TwoQubitState& state) {
  const Eigen::Matrix4cd& rho = state.matrix();
  Eigen::Matrix4cd out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          out(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
  return out;
}

double partial_transpose_min_eigenvalue(const TwoQubitState& state) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(partial_transpose_b(state),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace qse
