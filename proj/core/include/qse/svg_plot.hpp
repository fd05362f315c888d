#pragma once

#include <iosfwd>
#include <vector>

#include "qse/scan.hpp"

namespace qse {

// Semiaxis lengths s_x, s_y, s_z versus Delta: exactly three labeled
// polylines.  Byte-deterministic for fixed input.  Throws
// std::invalid_argument for fewer than two records.
void render_semiaxes_svg(std::ostream& out, const std::vector<ScanRecord>& records);

// Ellipsoid volume versus Delta.
void render_volume_svg(std::ostream& out, const std::vector<ScanRecord>& records);

}  // namespace qse
