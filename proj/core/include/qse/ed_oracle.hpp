#pragma once

#include <Eigen/Sparse>
#include <vector>

#include "qse/two_qubit_state.hpp"
#include "qse/xxz_model.hpp"

namespace qse::ed {

// Periodic spin-1/2 XXZ chain, H = sum_j SxSx + SySy + Delta SzSz.
// N must be even, 2 <= N <= 14.  N = 2 is treated as a single open bond
// (periodic wrap would double-count it) and exists for hand checks only.
struct SpinChainSpec {
  int n_sites = 8;
  double delta = 1.0;
};

struct GroundSolution {
  int n_sites = 0;
  double delta = 0.0;
  double energy_total = 0.0;
  double energy_per_site = 0.0;
  // Amplitudes over the full 2^N basis; bit j of the index is site j,
  // bit set = spin up.  H is real in this basis, so are the amplitudes.
  // Equal-weight superposition of the two ground states when degenerate.
  Eigen::VectorXd state;
  int degeneracy = 1;
  int sz_sector = 0;  // total 2*Sz of the sector the minimum came from
};

// Full Hamiltonian as a sparse real symmetric matrix (handy for symmetry
// checks at small N; ground_state diagonalizes per Sz sector instead).
Eigen::SparseMatrix<double> build_hamiltonian(const SpinChainSpec& spec);

// Lowest eigenpair across all Sz sectors, dense solve per sector.
// Energies within 1e-10 of the minimum count as degenerate and are
// symmetrized into an equal-weight superposition.
GroundSolution ground_state(const SpinChainSpec& spec);

// Two-site reduced density matrix of sites (i, i+1 mod N), mapped to the
// |00>,|01>,|10>,|11> convention with site i as qubit A and computational
// |0> = spin up.
TwoQubitState reduced_density(const GroundSolution& sol, int site);

// Nearest-neighbor correlators from the site-0 reduced density matrix.
CorrelatorTriple correlators(const GroundSolution& sol);

// Least-squares fit of e(N) = e_inf + c / N^2; returns e_inf.
double extrapolate_energy(const std::vector<std::pair<int, double>>& energies);

}  // namespace qse::ed
