#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "qse/mesh.hpp"
#include "qse/scan.hpp"
#include "qse/svg_plot.hpp"

using namespace qse;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++n;
  return n;
}

std::vector<ScanRecord> small_scan() {
  ScanConfig cfg;
  cfg.delta_min = -1.2;
  cfg.delta_max = 1.4;
  cfg.step = 0.2;
  return run_scan(cfg);
}

}  // namespace

TEST_SUITE("scan_output") {

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.0, -1.0, 0.1, -0.4431471805599453, 1e-17, 3.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(-1.0) == "-1");
}

TEST_CASE("grid construction hits both endpoints") {
  ScanConfig cfg;
  cfg.delta_min = -1.5;
  cfg.delta_max = 3.0;
  cfg.step = 0.5;
  const auto records = run_scan(cfg);
  REQUIRE(records.size() == 10);
  CHECK(records.front().delta == -1.5);
  CHECK(records.back().delta == 3.0);
}

TEST_CASE("CSV header and shape of the emitted table") {
  const auto records = small_scan();
  std::ostringstream out;
  write_csv(out, records, false);
  const std::string text = out.str();
  std::istringstream lines(text);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "delta,e_g,xx,yy,zz,s_x,s_y,s_z,volume,shape,concurrence,discord,"
        "chsh,bond_strength_diff,critical_point_note");
  CHECK(count_occurrences(text, "\n") == static_cast<int>(records.size()) + 1);
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("oracle columns appear only when requested") {
  const auto records = small_scan();
  std::ostringstream with, without;
  write_csv(with, records, true);
  write_csv(without, records, false);
  CHECK(with.str().find(",ed_e_g,ed_xx,ed_zz") != std::string::npos);
  CHECK(without.str().find("ed_e_g") == std::string::npos);
}

TEST_CASE("writers are byte-deterministic") {
  const auto a = small_scan();
  const auto b = small_scan();
  std::ostringstream ca, cb, ja, jb;
  write_csv(ca, a, false);
  write_csv(cb, b, false);
  write_json_lines(ja, a, false);
  write_json_lines(jb, b, false);
  CHECK(ca.str() == cb.str());
  CHECK(ja.str() == jb.str());
}

TEST_CASE("CSV round-trips through the reader") {
  const auto records = small_scan();
  std::ostringstream out;
  write_csv(out, records, false);
  std::istringstream in(out.str());
  const auto back = read_csv(in);
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(back[i].delta == records[i].delta);
    CHECK(back[i].s_x == records[i].s_x);
    CHECK(back[i].volume == records[i].volume);
    CHECK(back[i].shape == records[i].shape);
  }
}

TEST_CASE("critical grid points carry a note") {
  ScanConfig cfg;
  cfg.delta_min = -1.0;
  cfg.delta_max = 1.0;
  cfg.step = 0.5;
  const auto records = run_scan(cfg);
  CHECK(records.front().critical_point_note.find("first-order") !=
        std::string::npos);
  CHECK(records.back().critical_point_note.find("one-sided") !=
        std::string::npos);
  CHECK(records[2].critical_point_note.empty());
  // A grid point hugging the boundary reports the clamped evaluation.
  const ScanRecord hug = compute_record(1.0 + 1e-4);
  CHECK_FALSE(hug.critical_point_note.empty());
}

TEST_CASE("semiaxes SVG has exactly three labeled polylines") {
  const auto records = small_scan();
  std::ostringstream out;
  render_semiaxes_svg(out, records);
  const std::string svg = out.str();
  CHECK(count_occurrences(svg, "<polyline") == 3);
  CHECK(svg.find("s_x") != std::string::npos);
  CHECK(svg.find("s_y") != std::string::npos);
  CHECK(svg.find("s_z") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  std::ostringstream again;
  render_semiaxes_svg(again, records);
  CHECK(svg == again.str());
}

TEST_CASE("volume SVG has one polyline and rejects tiny inputs") {
  const auto records = small_scan();
  std::ostringstream out;
  render_volume_svg(out, records);
  CHECK(count_occurrences(out.str(), "<polyline") == 1);

  std::ostringstream bad;
  CHECK_THROWS_AS(render_volume_svg(bad, {records.front()}),
                  std::invalid_argument);
}

TEST_CASE("ellipsoid mesh vertices lie on the ellipsoid") {
  std::ostringstream out;
  const DirectedSemiaxes s{0.6, 0.6, 0.3};
  export_ellipsoid_obj(out, s, 16, 8);
  std::istringstream in(out.str());
  std::string tag;
  int vertices = 0, faces = 0;
  double x, y, z;
  while (in >> tag) {
    if (tag == "v") {
      in >> x >> y >> z;
      const double r = (x / s.sx) * (x / s.sx) + (y / s.sy) * (y / s.sy) +
                       (z / s.sz) * (z / s.sz);
      CHECK(r == doctest::Approx(1.0).epsilon(1e-9));
      ++vertices;
    } else if (tag == "f") {
      ++faces;
      in.ignore(256, '\n');
    } else {
      in.ignore(256, '\n');
    }
  }
  CHECK(vertices == 2 + 7 * 16);
  CHECK(faces == 2 * 16 + 2 * 16 * 6);
}

TEST_CASE("degenerate meshes are annotated") {
  std::ostringstream needle;
  export_ellipsoid_obj(needle, {0.0, 0.0, 1.0});
  CHECK(needle.str().find("needle") != std::string::npos);
  CHECK(needle.str().find("l 1 2") != std::string::npos);

  std::ostringstream point;
  export_ellipsoid_obj(point, {0.0, 0.0, 0.0});
  CHECK(point.str().find("point") != std::string::npos);
  CHECK(point.str().find("p 1") != std::string::npos);
}

TEST_CASE("failed records are quarantined, not fatal") {
  const ScanRecord r = compute_record(0.5);
  CHECK_FALSE(r.failed);
  CHECK(r.error.empty());
  CHECK(r.shape == "oblate");
}

}  // TEST_SUITE
