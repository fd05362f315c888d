#include "qse/scan.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qse/correlation_measures.hpp"
#include "qse/ed_oracle.hpp"
#include "qse/steering_ellipsoid.hpp"
#include "qse/tolerances.hpp"

namespace qse {

namespace {

// Requested grid value -> the value actually fed to the pipeline, plus
// the note explaining any clamping near the critical points.
std::pair<double, std::string> clamp_critical(double delta) {
  for (double critical : {-1.0, 1.0}) {
    if (delta == critical) {
      return {delta, critical > 0 ? "kt point; one-sided derivative (left)"
                                  : "first-order point; ferro branch"};
    }
    if (std::abs(delta - critical) < tol::critical_guard) {
      const double clamped =
          critical + (delta < critical ? -tol::critical_guard : tol::critical_guard);
      return {clamped, "clamped to " + format_double(clamped)};
    }
  }
  return {delta, ""};
}

std::string opt_str(const std::optional<double>& v) {
  return v ? format_double(*v) : "";
}

std::string json_opt(const std::optional<double>& v) {
  return v ? format_double(*v) : "null";
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

ScanRecord compute_record(double delta, double shape_tolerance) {
  ScanRecord rec;
  rec.delta = delta;
  try {
    auto [d, note] = clamp_critical(delta);
    rec.critical_point_note = note;
    rec.e_g = ground_energy(d);
    const CorrelatorTriple c = correlators(d);
    rec.xx = c.xx;
    rec.yy = c.yy;
    rec.zz = c.zz;
    const DirectedSemiaxes s = semiaxes(d);
    rec.s_x = s.sx;
    rec.s_y = s.sy;
    rec.s_z = s.sz;
    rec.volume = (4.0 * std::numbers::pi / 3.0) * s.sx * s.sy * s.sz;
    rec.shape = to_string(classify_semiaxes(s.vec(), shape_tolerance));
    rec.concurrence = concurrence_from_semiaxes(d, s);
    const TwoQubitState rho = nn_density_matrix(d);
    rec.discord = discord_bell_diagonal(rho);
    rec.chsh = chsh_closed_form(rho);
    if (d < 0.0) rec.bond_strength_diff = bond_strength_difference(d, s);
  } catch (const std::exception& e) {
    rec.failed = true;
    rec.error = e.what();
  }
  return rec;
}

std::vector<ScanRecord> run_scan(const ScanConfig& config) {
  if (!(config.delta_min < config.delta_max) || !(config.step > 0.0))
    throw std::invalid_argument("scan range requires delta_min < delta_max, step > 0");
  const int count =
      static_cast<int>(std::floor((config.delta_max - config.delta_min) / config.step +
                                  1e-9)) +
      1;
  std::vector<ScanRecord> records;
  records.reserve(count);
  for (int i = 0; i < count; ++i) {
    double delta = config.delta_min + i * config.step;
    // Snap floating grid arithmetic onto the critical points so each
    // point is owned by exactly one branch.
    for (double critical : {-1.0, 1.0})
      if (std::abs(delta - critical) < 1e-9) delta = critical;
    ScanRecord rec = compute_record(delta, config.shape_tolerance);
    if (config.oracle_n > 0 && !rec.failed) {
      try {
        const ed::GroundSolution sol = ed::ground_state({config.oracle_n, delta});
        const CorrelatorTriple c = ed::correlators(sol);
        rec.ed_e_g = sol.energy_per_site;
        rec.ed_xx = c.xx;
        rec.ed_zz = c.zz;
      } catch (const std::exception& e) {
        rec.failed = true;
        rec.error = e.what();
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<ScanRecord>& records,
               bool oracle_columns) {
  out << "delta,e_g,xx,yy,zz,s_x,s_y,s_z,volume,shape,concurrence,discord,chsh,"
         "bond_strength_diff,critical_point_note";
  if (oracle_columns) out << ",ed_e_g,ed_xx,ed_zz";
  out << "\n";
  for (const ScanRecord& r : records) {
    out << format_double(r.delta) << ',' << format_double(r.e_g) << ','
        << format_double(r.xx) << ',' << format_double(r.yy) << ','
        << format_double(r.zz) << ',' << format_double(r.s_x) << ','
        << format_double(r.s_y) << ',' << format_double(r.s_z) << ','
        << format_double(r.volume) << ',' << r.shape << ','
        << format_double(r.concurrence) << ',' << format_double(r.discord) << ','
        << format_double(r.chsh) << ',' << opt_str(r.bond_strength_diff) << ','
        << r.critical_point_note;
    if (oracle_columns)
      out << ',' << opt_str(r.ed_e_g) << ',' << opt_str(r.ed_xx) << ','
          << opt_str(r.ed_zz);
    out << "\n";
  }
}

void write_json_lines(std::ostream& out, const std::vector<ScanRecord>& records,
                      bool oracle_columns) {
  for (const ScanRecord& r : records) {
    out << "{\"delta\":" << format_double(r.delta) << ",\"e_g\":" << format_double(r.e_g)
        << ",\"xx\":" << format_double(r.xx) << ",\"yy\":" << format_double(r.yy)
        << ",\"zz\":" << format_double(r.zz) << ",\"s_x\":" << format_double(r.s_x)
        << ",\"s_y\":" << format_double(r.s_y) << ",\"s_z\":" << format_double(r.s_z)
        << ",\"volume\":" << format_double(r.volume) << ",\"shape\":\"" << r.shape
        << "\",\"concurrence\":" << format_double(r.concurrence)
        << ",\"discord\":" << format_double(r.discord)
        << ",\"chsh\":" << format_double(r.chsh)
        << ",\"bond_strength_diff\":" << json_opt(r.bond_strength_diff)
        << ",\"critical_point_note\":\"" << json_escape(r.critical_point_note) << "\"";
    if (oracle_columns)
      out << ",\"ed_e_g\":" << json_opt(r.ed_e_g) << ",\"ed_xx\":" << json_opt(r.ed_xx)
          << ",\"ed_zz\":" << json_opt(r.ed_zz);
    out << "}\n";
  }
}

std::vector<ScanRecord> read_csv(std::istream& in) {
  std::vector<ScanRecord> records;
  std::string line;
  if (!std::getline(in, line)) return records;  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    while (fields.size() < 15) fields.emplace_back();
    ScanRecord r;
    r.delta = std::stod(fields[0]);
    r.e_g = std::stod(fields[1]);
    r.xx = std::stod(fields[2]);
    r.yy = std::stod(fields[3]);
    r.zz = std::stod(fields[4]);
    r.s_x = std::stod(fields[5]);
    r.s_y = std::stod(fields[6]);
    r.s_z = std::stod(fields[7]);
    r.volume = std::stod(fields[8]);
    r.shape = fields[9];
    r.concurrence = std::stod(fields[10]);
    r.discord = std::stod(fields[11]);
    r.chsh = std::stod(fields[12]);
    if (!fields[13].empty()) r.bond_strength_diff = std::stod(fields[13]);
    r.critical_point_note = fields[14];
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace qse
