#pragma once

#include <Eigen/Dense>
#include <random>

namespace qse {

enum class Qubit { A, B };

// Pauli matrix sigma^mu, mu = 0 (identity), 1 (x), 2 (y), 3 (z).
Eigen::Matrix2cd pauli(int mu);

// (Theta, a, b, T) decomposition of a two-qubit state.  Theta is the 4x4
// real matrix with block structure [[1, b^T], [a, T]]; a and b are the
// Bloch vectors of the two marginals and T is the correlation block.
struct PauliForm {
  Eigen::Matrix4d theta = Eigen::Matrix4d::Zero();

  Eigen::Vector3d a() const { return theta.block<3, 1>(1, 0); }
  Eigen::Vector3d b() const { return theta.block<1, 3>(0, 1).transpose(); }
  Eigen::Matrix3d t() const { return theta.block<3, 3>(1, 1); }

  static PauliForm from_blocks(const Eigen::Vector3d& a,
                               const Eigen::Vector3d& b,
                               const Eigen::Matrix3d& t);
};

// A 4x4 density matrix in the product basis |00>, |01>, |10>, |11>,
// first factor = qubit A.  Construction validates Hermiticity, unit
// trace and positive semidefiniteness and throws std::invalid_argument
// on violation.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Eigen::Matrix4cd& rho);

  const Eigen::Matrix4cd& matrix() const { return rho_; }
  double min_eigenvalue() const;

  static TwoQubitState maximally_mixed();
  static TwoQubitState bell_phi_plus();
  // |q_a q_b><q_a q_b| product state.
  static TwoQubitState computational(int q_a, int q_b);
  // Full-rank random physical state: normalize G G^dagger for a random
  // complex 4 x rank matrix G with standard normal entries.
  static TwoQubitState random(std::mt19937_64& rng, int rank = 4);

 private:
  Eigen::Matrix4cd rho_;
};

// Theta_{mu nu} = tr(rho sigma^mu_A x sigma^nu_B).
PauliForm decompose(const TwoQubitState& state);

// rho = (1/4) sum Theta_{mu nu} sigma^mu_A x sigma^nu_B.  Throws
// std::domain_error if the reconstructed matrix is not a physical state.
TwoQubitState reconstruct(const PauliForm& form);

// Reduced density matrix of the kept qubit.
Eigen::Matrix2cd partial_trace(const TwoQubitState& state, Qubit keep);

// Transpose of the B indices only.  Involution; trace- and
// Hermiticity-preserving.  The result is generally not a state.
Eigen::Matrix4cd partial_transpose_b(const TwoQubitState& state);

// Minimum eigenvalue of the partial transpose; negative iff entangled
// (Peres-Horodecki, exact for two qubits).
double partial_transpose_min_eigenvalue(const TwoQubitState& state);

}  // namespace qse
