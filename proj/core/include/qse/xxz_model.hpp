#pragma once

#include "qse/two_qubit_state.hpp"

namespace qse {

enum class Phase { ferromagnetic, first_order_point, gapless, kt_point, antiferromagnetic };

Phase phase_of(double delta);

// Which one-sided limit a derivative was taken from when the requested
// anisotropy sits on (or hugs) a phase boundary.
enum class CriticalSide { none, left, right };

// Nearest-neighbor correlators of the infinite chain's ground state.
// xx == yy by construction.
struct CorrelatorTriple {
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;
};

// Direction-labeled (unsorted) semiaxes of the nearest-neighbor QSE:
// s_kappa = |<sigma^kappa_i sigma^kappa_{i+1}>|.
struct DirectedSemiaxes {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;

  Eigen::Vector3d vec() const { return {sx, sy, sz}; }
};

// Bethe-ansatz ground-state energy per site:
//   -Delta/4                      for Delta <= -1,
//   Delta/4 + contour integral    for -1 < Delta < 1 (Delta = cos pi*xi),
//   1/4 - ln 2                    at Delta = 1,
//   analytic continuation xi = i*phi (Delta = cosh pi*phi) for Delta > 1.
// Inputs within tol::critical_clamp of +-1 are evaluated at the clamped
// boundary offset.  Throws std::runtime_error if the quadrature error
// estimate exceeds tol::quadrature_fail.
double ground_energy(double delta);

struct DerivativeInfo {
  double value = 0.0;
  CriticalSide side = CriticalSide::none;
  bool clamped = false;
};

// <sigma^z sigma^z> = 4 d e_g / d Delta, never differencing across a
// phase boundary.  At Delta = +-1 exactly the left-side limit is used
// and reported through DerivativeInfo.
DerivativeInfo zz_correlator_info(double delta);
double zz_correlator(double delta);

// <sigma^x sigma^x> = <sigma^y sigma^y> = (4 e_g - Delta <sigma^z sigma^z>)/2.
double xx_correlator(double delta);

CorrelatorTriple correlators(double delta);

// Two-site reduced density matrix of nearest neighbors:
//   diag-plus-flip form with u = (1+zz)/4, w = (1-zz)/4, y = (xx+yy)/4.
TwoQubitState nn_density_matrix(double delta);

DirectedSemiaxes semiaxes(double delta);

}  // namespace qse
