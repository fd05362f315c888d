#pragma once

// Central home for the numerical tolerances used across the library.
// Values are tuned for double precision; change them here, not at call sites.

namespace qse::tol {

// Structural checks on density matrices (Hermiticity, trace) and on
// round trips through the Pauli decomposition.
inline constexpr double structural = 1e-12;

// Smallest eigenvalue a density matrix may have before it is rejected
// as non positive semidefinite.
inline constexpr double psd_floor = -1e-10;

// |b| >= 1 - degenerate_b means the steering ellipsoid collapses to a
// single point; the center/matrix formulas blow up numerically there.
inline constexpr double degenerate_b = 1e-9;

// Default relative tolerance for shape classification.
inline constexpr double shape_default = 1e-6;

// Absolute tolerance requested from the adaptive quadrature behind the
// Bethe-ansatz energy; errors above quadrature_fail are reported.
inline constexpr double quadrature = 1e-13;
inline constexpr double quadrature_fail = 1e-9;

// Anisotropy values closer than this to a critical point are evaluated
// at the clamped boundary offset inside the library.
inline constexpr double critical_clamp = 1e-6;

// Derivative stencils switch to one-sided differences within this
// distance of a phase boundary; also the clamping offset used by scans.
inline constexpr double critical_guard = 1e-3;

}  // namespace qse::tol
