#pragma once

#include <iosfwd>

#include "qse/xxz_model.hpp"

namespace qse {

// Wavefront-style ASCII mesh of an origin-centered ellipsoid with the
// given direction-labeled semiaxes, triangulated as a UV sphere.
// Degenerate shapes (needle, point) are written as annotated segment /
// point geometry instead of a zero-area triangle soup.
void export_ellipsoid_obj(std::ostream& out, const DirectedSemiaxes& s,
                          int n_longitude = 64, int n_latitude = 32);

// Unit Bloch sphere reference mesh.
void export_unit_sphere_obj(std::ostream& out, int n_longitude = 64,
                            int n_latitude = 32);

}  // namespace qse
