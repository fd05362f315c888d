// Command-line front end: Delta sweeps over the XXZ chain's nearest-neighbor
// steering ellipsoid, SVG figure generation, ellipsoid mesh export, and
// exact-diagonalization comparison reports.
//
// Exit codes: 0 success, 1 usage error, 2 computation failure in >= 1
// record, 3 I/O failure.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qse/correlation_measures.hpp"
#include "qse/ed_oracle.hpp"
#include "qse/mesh.hpp"
#include "qse/scan.hpp"
#include "qse/svg_plot.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitIo = 3;

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path.string());
  return out;
}

std::string mesh_file_name(double delta) {
  std::string tag = qse::format_double(delta);
  for (char& c : tag)
    if (c == '.') c = 'p';
  return "ellipsoid_delta_" + tag + ".obj";
}

int run_scan_command(const qse::ScanConfig& config, const fs::path& out_dir,
                     const std::vector<std::string>& outputs, int mesh_resolution) {
  fs::create_directories(out_dir);
  const std::vector<qse::ScanRecord> records = qse::run_scan(config);
  const bool oracle = config.oracle_n > 0;

  for (const std::string& kind : outputs) {
    if (kind == "csv") {
      auto out = open_output(out_dir / "scan.csv");
      qse::write_csv(out, records, oracle);
    } else if (kind == "json") {
      auto out = open_output(out_dir / "scan.jsonl");
      qse::write_json_lines(out, records, oracle);
    } else if (kind == "svg-semiaxes") {
      auto out = open_output(out_dir / "semiaxes.svg");
      qse::render_semiaxes_svg(out, records);
    } else if (kind == "svg-volume") {
      auto out = open_output(out_dir / "volume.svg");
      qse::render_volume_svg(out, records);
    } else if (kind == "mesh") {
      for (double delta : config.mesh_deltas) {
        auto out = open_output(out_dir / mesh_file_name(delta));
        qse::export_ellipsoid_obj(out, qse::semiaxes(delta), mesh_resolution,
                                  mesh_resolution / 2);
      }
      auto out = open_output(out_dir / "bloch_sphere.obj");
      qse::export_unit_sphere_obj(out, mesh_resolution, mesh_resolution / 2);
    } else {
      std::cerr << "unknown output kind: " << kind << "\n";
      return kExitUsage;
    }
  }

  int failures = 0;
  for (const qse::ScanRecord& r : records)
    if (r.failed) {
      ++failures;
      std::cerr << "record delta=" << qse::format_double(r.delta)
                << " failed: " << r.error << "\n";
    }
  std::cout << "scan: " << records.size() << " records, " << failures
            << " failed -> " << out_dir.string() << "\n";
  return failures == 0 ? kExitOk : kExitComputation;
}

int run_mesh_command(const std::vector<double>& deltas, const fs::path& out_dir,
                     int resolution) {
  fs::create_directories(out_dir);
  for (double delta : deltas) {
    if (!std::isfinite(delta)) {
      std::cerr << "mesh: delta must be finite\n";
      return kExitUsage;
    }
    auto out = open_output(out_dir / mesh_file_name(delta));
    qse::export_ellipsoid_obj(out, qse::semiaxes(delta), resolution, resolution / 2);
  }
  auto out = open_output(out_dir / "bloch_sphere.obj");
  qse::export_unit_sphere_obj(out, resolution, resolution / 2);
  std::cout << "mesh: wrote " << deltas.size() << " ellipsoids -> "
            << out_dir.string() << "\n";
  return kExitOk;
}

int run_plot_command(const fs::path& input, const fs::path& out_dir) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "plot: cannot read " << input.string() << "\n";
    return kExitIo;
  }
  const std::vector<qse::ScanRecord> records = qse::read_csv(in);
  if (records.size() < 2) {
    std::cerr << "plot: need at least two records\n";
    return kExitUsage;
  }
  fs::create_directories(out_dir);
  {
    auto out = open_output(out_dir / "semiaxes.svg");
    qse::render_semiaxes_svg(out, records);
  }
  {
    auto out = open_output(out_dir / "volume.svg");
    qse::render_volume_svg(out, records);
  }
  std::cout << "plot: wrote semiaxes.svg, volume.svg -> " << out_dir.string() << "\n";
  return kExitOk;
}

int run_oracle_command(const std::vector<double>& deltas, int n_sites) {
  std::cout << "delta,n,ed_e_g,ed_xx,ed_zz,e_g,xx,zz,d_e,d_xx,d_zz\n";
  int failures = 0;
  for (double delta : deltas) {
    try {
      const qse::ed::GroundSolution sol = qse::ed::ground_state({n_sites, delta});
      const qse::CorrelatorTriple ed_c = qse::ed::correlators(sol);
      const double e_g = qse::ground_energy(delta);
      const qse::CorrelatorTriple c = qse::correlators(delta);
      // Ferro-branch comparisons are by magnitude (sign convention of the
      // thermodynamic pipeline's energy formula).
      std::cout << qse::format_double(delta) << ',' << n_sites << ','
                << qse::format_double(sol.energy_per_site) << ','
                << qse::format_double(ed_c.xx) << ',' << qse::format_double(ed_c.zz)
                << ',' << qse::format_double(e_g) << ',' << qse::format_double(c.xx)
                << ',' << qse::format_double(c.zz) << ','
                << qse::format_double(std::abs(std::abs(sol.energy_per_site) -
                                               std::abs(e_g)))
                << ','
                << qse::format_double(std::abs(std::abs(ed_c.xx) - std::abs(c.xx)))
                << ','
                << qse::format_double(std::abs(std::abs(ed_c.zz) - std::abs(c.zz)))
                << "\n";
    } catch (const std::exception& e) {
      std::cerr << "oracle: delta=" << qse::format_double(delta)
                << " failed: " << e.what() << "\n";
      ++failures;
    }
  }
  return failures == 0 ? kExitOk : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum steering ellipsoid scans of the spin-1/2 XXZ chain"};
  app.require_subcommand(1);
  app.set_config("--config");

  qse::ScanConfig config;
  std::string out_dir = "out";
  std::vector<std::string> outputs = {"csv"};
  int mesh_resolution = 64;
  std::vector<double> deltas;
  int oracle_n = 12;
  std::string input_csv;

  CLI::App* scan = app.add_subcommand("scan", "sweep Delta and write record files");
  scan->add_option("--delta-min", config.delta_min, "lower end of the sweep");
  scan->add_option("--delta-max", config.delta_max, "upper end of the sweep");
  scan->add_option("--step", config.step, "grid step (> 0)");
  scan->add_option("--out-dir", out_dir, "output directory");
  scan->add_option("--oracle-n", config.oracle_n,
                   "ED chain length for per-record oracle columns (0 = off)")
      ->check(CLI::Range(0, 14));
  scan->add_option("--tolerance", config.shape_tolerance,
                   "relative tolerance for shape classification");
  scan->add_option("--seed", config.seed, "seed for randomized paths");
  scan->add_option("--outputs", outputs,
                   "any of: csv json svg-semiaxes svg-volume mesh")
      ->delimiter(',');
  scan->add_option("--mesh-delta", config.mesh_deltas,
                   "Delta snapshots for the mesh output")
      ->delimiter(',');
  scan->add_option("--mesh-resolution", mesh_resolution, "longitude segments");

  CLI::App* mesh = app.add_subcommand("mesh", "export ellipsoid meshes");
  mesh->add_option("--delta", deltas, "Delta snapshot list")
      ->required()
      ->delimiter(',');
  mesh->add_option("--out-dir", out_dir, "output directory");
  mesh->add_option("--mesh-resolution", mesh_resolution, "longitude segments");

  CLI::App* plot = app.add_subcommand("plot", "render SVG figures from a scan CSV");
  plot->add_option("--input", input_csv, "scan.csv produced by the scan subcommand")
      ->required();
  plot->add_option("--out-dir", out_dir, "output directory");

  CLI::App* oracle = app.add_subcommand("oracle", "compare pipeline against ED");
  oracle->add_option("--delta", deltas, "Delta values to compare")
      ->required()
      ->delimiter(',');
  oracle->add_option("--oracle-n", oracle_n, "ED chain length (even, <= 14)")
      ->check(CLI::Range(2, 14));

  CLI11_PARSE(app, argc, argv);

  try {
    if (scan->parsed())
      return run_scan_command(config, out_dir, outputs, mesh_resolution);
    if (mesh->parsed()) return run_mesh_command(deltas, out_dir, mesh_resolution);
    if (plot->parsed()) return run_plot_command(input_csv, out_dir);
    if (oracle->parsed()) return run_oracle_command(deltas, oracle_n);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
