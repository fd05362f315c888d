#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qse/xxz_model.hpp"

namespace qse {

struct ScanConfig {
  double delta_min = -1.5;
  double delta_max = 3.0;
  double step = 0.01;
  double shape_tolerance = 1e-6;
  std::uint64_t seed = 0;
  int oracle_n = 0;  // 0 disables the ED columns
  std::vector<double> mesh_deltas;
};

// One row of a Delta sweep.  bond_strength_diff is empty for Delta >= 0;
// the oracle columns are filled only when requested.
struct ScanRecord {
  double delta = 0.0;
  double e_g = 0.0;
  double xx = 0.0, yy = 0.0, zz = 0.0;
  double s_x = 0.0, s_y = 0.0, s_z = 0.0;
  double volume = 0.0;
  std::string shape;
  double concurrence = 0.0;
  double discord = 0.0;
  double chsh = 0.0;
  std::optional<double> bond_strength_diff;
  std::string critical_point_note;
  std::optional<double> ed_e_g, ed_xx, ed_zz;
  bool failed = false;
  std::string error;
};

// Deterministic shortest-round-trip decimal rendering ('.' separator).
std::string format_double(double value);

// Grid points within tol::critical_guard of +-1 are evaluated at the
// clamped offset and annotated in critical_point_note.
ScanRecord compute_record(double delta, double shape_tolerance = 1e-6);

std::vector<ScanRecord> run_scan(const ScanConfig& config);

// Exact declared column order; LF line endings; byte-deterministic.
void write_csv(std::ostream& out, const std::vector<ScanRecord>& records,
               bool oracle_columns);
// One JSON object per record per line, mirroring the CSV schema.
void write_json_lines(std::ostream& out, const std::vector<ScanRecord>& records,
                      bool oracle_columns);

// Minimal CSV reader for records produced by write_csv (plot subcommand).
std::vector<ScanRecord> read_csv(std::istream& in);

}  // namespace qse
