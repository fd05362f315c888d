#pragma once

#include <cstdint>
#include <optional>

#include "qse/two_qubit_state.hpp"
#include "qse/xxz_model.hpp"

namespace qse {

// Binary entropy h(g) = -((1+g)/2) log2((1+g)/2) - ((1-g)/2) log2((1-g)/2),
// strictly decreasing on [0, 1] with h(0) = 1 and h(1) = 0.
double binary_entropy(double g);

// Von Neumann entropy in bits of an arbitrary Hermitian PSD matrix.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

// Wootters concurrence: max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)}
// with l_i the descending eigenvalues of rho * (sy x sy) rho^* (sy x sy).
double concurrence(const TwoQubitState& state);

// Semiaxis form for the nearest-neighbor XXZ state:
// 0 for Delta <= -1, (s1 + s2 + s3 - 1)/2 for Delta > -1.
double concurrence_from_semiaxes(double delta, const DirectedSemiaxes& s);

// Closed-form quantum discord for Bell-diagonal states:
//   Q = min_i h(s_i) + S(rho_B) - S(rho_AB),  min_i h(s_i) = h(max_i s_i).
// Throws std::domain_error if the state is not Bell-diagonal (a, b != 0).
double discord_bell_diagonal(const TwoQubitState& state);

// Maximal CHSH expectation 2 sqrt(s_(1)^2 + s_(2)^2) over the two largest
// semiaxes; closed form valid for Bell-diagonal states (checked).
double chsh_closed_form(const TwoQubitState& state);

struct ChshResult {
  double value = 0.0;
  bool converged = false;
};

// Direct maximization of <B_CHSH> over the four measurement unit vectors
// by alternating closed-step ascent from seeded random starts.
// Deterministic for a fixed seed; works for any state.
ChshResult chsh_brute_force(const TwoQubitState& state,
                            std::uint64_t seed = 0x9e3779b97f4a7c15ULL,
                            int restarts = 32);

// Difference of bond strength around the first-order transition,
// from the direction-labeled semiaxes:
//   -(s_x + s_y - s_z)/4 for Delta < -1,
//   -(s_x + s_y + s_z)/4 for -1 <= Delta < 0.
// Throws std::domain_error for Delta >= 0 (outside the formula's domain).
double bond_strength_difference(double delta, const DirectedSemiaxes& s);

struct MeasureReport {
  double concurrence = 0.0;
  double discord = 0.0;
  double chsh = 0.0;
  std::optional<double> bond_strength_diff;
};

// All four quantifiers evaluated on the nearest-neighbor XXZ state.
MeasureReport measures_at(double delta);

}  // namespace qse
