#include "qse/mesh.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qse/scan.hpp"

namespace qse {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerate = 1e-12;

void write_vertex(std::ostream& out, double x, double y, double z) {
  out << "v " << format_double(x) << ' ' << format_double(y) << ' '
      << format_double(z) << "\n";
}

void write_uv_sphere(std::ostream& out, double sx, double sy, double sz,
                     int n_lon, int n_lat) {
  if (n_lon < 3 || n_lat < 2)
    throw std::invalid_argument("mesh resolution too low");
  // Poles first, then (n_lat - 1) rings of n_lon vertices.
  write_vertex(out, 0.0, 0.0, sz);
  write_vertex(out, 0.0, 0.0, -sz);
  for (int i = 1; i < n_lat; ++i) {
    const double theta = kPi * i / n_lat;
    for (int j = 0; j < n_lon; ++j) {
      const double phi = 2.0 * kPi * j / n_lon;
      write_vertex(out, sx * std::sin(theta) * std::cos(phi),
                   sy * std::sin(theta) * std::sin(phi), sz * std::cos(theta));
    }
  }
  auto ring = [n_lon](int i, int j) { return 3 + (i - 1) * n_lon + (j % n_lon); };
  for (int j = 0; j < n_lon; ++j) {
    out << "f 1 " << ring(1, j) << ' ' << ring(1, j + 1) << "\n";
    out << "f 2 " << ring(n_lat - 1, j + 1) << ' ' << ring(n_lat - 1, j) << "\n";
  }
  for (int i = 1; i < n_lat - 1; ++i)
    for (int j = 0; j < n_lon; ++j) {
      out << "f " << ring(i, j) << ' ' << ring(i + 1, j) << ' ' << ring(i + 1, j + 1)
          << "\n";
      out << "f " << ring(i, j) << ' ' << ring(i + 1, j + 1) << ' ' << ring(i, j + 1)
          << "\n";
    }
}

}  // namespace

void export_ellipsoid_obj(std::ostream& out, const DirectedSemiaxes& s, int n_longitude,
                          int n_latitude) {
  const int positive = (s.sx > kDegenerate) + (s.sy > kDegenerate) + (s.sz > kDegenerate);
  out << "# quantum steering ellipsoid, semiaxes s_x=" << format_double(s.sx)
      << " s_y=" << format_double(s.sy) << " s_z=" << format_double(s.sz) << "\n";
  if (positive == 0) {
    out << "# degenerate: point\n";
    write_vertex(out, 0.0, 0.0, 0.0);
    out << "p 1\n";
    return;
  }
  if (positive == 1) {
    out << "# degenerate: needle (line segment)\n";
    write_vertex(out, -s.sx, -s.sy, -s.sz);
    write_vertex(out, s.sx, s.sy, s.sz);
    out << "l 1 2\n";
    return;
  }
  if (positive == 2) {
    out << "# degenerate: flat ellipse (zero thickness)\n";
  }
  write_uv_sphere(out, s.sx, s.sy, s.sz, n_longitude, n_latitude);
}

void export_unit_sphere_obj(std::ostream& out, int n_longitude, int n_latitude) {
  out << "# unit Bloch sphere reference\n";
  write_uv_sphere(out, 1.0, 1.0, 1.0, n_longitude, n_latitude);
}

}  // namespace qse
