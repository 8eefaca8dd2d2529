#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frontlab/dynamics.hpp"
#include "frontlab/geodesy.hpp"
#include "frontlab/geometry.hpp"
#include "frontlab/io.hpp"
#include "frontlab/subsolution.hpp"
#include "frontlab/wulff.hpp"

using namespace frontlab;
using Catch::Approx;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path scratch_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

SpeedProfile sample_anisotropic_profile(int n) {
  std::vector<SpeedSample> samples;
  for (int j = 0; j < n; ++j) {
    SpeedSample s;
    s.theta = 2.0 * kPi * j / n;
    s.e = Vec2::unit(s.theta);
    s.speed = 2.0 * std::sqrt(4.0 * s.e.x * s.e.x + s.e.y * s.e.y);
    s.stderr_ = 0.01 * (j % 3);
    s.method = SpeedMethod::closed_form;
    samples.push_back(s);
  }
  return SpeedProfile(std::move(samples), "analytic diag(4,1)");
}

}  // namespace

TEST_CASE("speed method names round-trip", "[io]") {
  for (SpeedMethod m :
       {SpeedMethod::eigenvalue, SpeedMethod::empirical, SpeedMethod::closed_form})
    CHECK(speed_method_from_string(to_string(m)) == m);
  CHECK_THROWS_WITH(speed_method_from_string("divination"),
                    ContainsSubstring("unknown speed method"));
}

TEST_CASE("profile tables round-trip byte for byte", "[io]") {
  const SpeedProfile profile = sample_anisotropic_profile(16);
  const std::string text = serialize_profile_csv(profile);
  CHECK_THAT(text, ContainsSubstring("theta,ex,ey,speed,method,stderr\n"));

  const SpeedProfile parsed = parse_profile_csv(text, profile.description());
  REQUIRE(parsed.size() == profile.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed.samples()[i].theta == profile.samples()[i].theta);
    CHECK(parsed.samples()[i].e.x == profile.samples()[i].e.x);
    CHECK(parsed.samples()[i].e.y == profile.samples()[i].e.y);
    CHECK(parsed.samples()[i].speed == profile.samples()[i].speed);
    CHECK(parsed.samples()[i].stderr_ == profile.samples()[i].stderr_);
    CHECK(parsed.samples()[i].method == profile.samples()[i].method);
  }
  CHECK(serialize_profile_csv(parsed) == text);

  const auto path = scratch_file("frontlab_io_profile.csv");
  save_profile_csv(profile, path.string());
  CHECK(slurp(path) == text);
  std::filesystem::remove(path);
}

TEST_CASE("profile tables reject malformed input", "[io]") {
  CHECK_THROWS_WITH(parse_profile_csv("a,b,c\n1,2,3\n"), ContainsSubstring("bad header"));
  CHECK_THROWS_WITH(parse_profile_csv("theta,ex,ey,speed,method,stderr\n0,1,0,2\n"),
                    ContainsSubstring("missing columns"));
  CHECK_THROWS_WITH(
      parse_profile_csv("theta,ex,ey,speed,method,stderr\n0,1,0,2,guesswork,0\n"),
      ContainsSubstring("unknown speed method"));
}

TEST_CASE("profile sidecar summarizes the sampling", "[io]") {
  const SpeedProfile profile = sample_anisotropic_profile(8);
  const auto j = nlohmann::json::parse(serialize_profile_sidecar_json(profile));
  CHECK(j.at("description") == "analytic diag(4,1)");
  CHECK(j.at("directions") == 8);
  CHECK(j.at("max_angular_gap").get<double>() == Approx(2.0 * kPi / 8).epsilon(1e-12));
  CHECK(j.at("argmin").at("speed").get<double>() == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("distance tables list finite cells with their centers", "[io]") {
  const auto mask = build_holes_domain(0.7, 0.2, 0.1);
  const GeodesicField field(mask, {0, 0}, 1);
  const std::string text = serialize_distance_csv(field);
  REQUIRE_THAT(text, ContainsSubstring("x,y,d\n"));

  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  std::size_t finite = 0;
  const CellWindow& window = field.window();
  for (long j = window.j0; j < window.j0 + window.h; ++j)
    for (long i = window.i0; i < window.i0 + window.w; ++i)
      if (std::isfinite(field.distance_cell(i, j))) ++finite;
  CHECK(rows == finite);
}

TEST_CASE("audit summaries carry the fitted constants", "[io]") {
  HeatAuditReport report;
  report.epsilon = 0.5;
  report.C = 0.25;
  report.delta = 1.5;
  report.violations = 0;
  report.samples = 32;
  const std::string text = serialize_audit_json(report);
  CHECK(text.back() == '\n');
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("epsilon") == 0.5);
  CHECK(j.at("C") == 0.25);
  CHECK(j.at("delta") == 1.5);
  CHECK(j.at("violations") == 0);
  CHECK(j.at("samples") == 32);
}

TEST_CASE("bump catalogs list the construction constants", "[io]") {
  const SubsolutionBump bump = construct(Nonlinearity::combustion(0.25, 1.0));
  const auto j = nlohmann::json::parse(serialize_bump_json(bump));
  REQUIRE(j.size() == 10);
  CHECK(j.at("theta") == bump.theta);
  CHECK(j.at("C") == bump.C);
  CHECK(j.at("K") == bump.K);
  CHECK(j.at("F") == bump.F);
  CHECK(j.at("alpha") == bump.alpha);
  CHECK(j.at("c") == bump.c);
  CHECK(j.at("beta") == bump.beta);
  CHECK(j.at("R1") == bump.R1);
  CHECK(j.at("R2") == bump.R2);
  CHECK(j.at("R3") == bump.R3);
}

TEST_CASE("bump profiles end exactly at the support radius", "[io]") {
  const SubsolutionBump bump = construct(Nonlinearity::combustion(0.25, 1.0));
  const std::string text = serialize_bump_profile_csv(bump, 0.5);
  REQUIRE_THAT(text, ContainsSubstring("r,h\n"));
  std::istringstream in(text);
  std::string line, last;
  std::getline(in, line);
  while (std::getline(in, line)) last = line;
  CHECK(last.substr(0, last.find(',')) == detail::format_double(bump.R3));
  CHECK_THROWS_WITH(serialize_bump_profile_csv(bump, 0.0), ContainsSubstring("positive step"));
}

TEST_CASE("polygon tables walk the vertex chain", "[io]") {
  std::vector<HalfPlane> cuts;
  for (int j = 0; j < 4; ++j) cuts.push_back({Vec2::unit(kPi * j / 2.0), 1.0});
  const WulffPolygon region = wulff_from_halfplanes(cuts, 8);
  const std::string text = serialize_polygon_csv(region);
  REQUIRE_THAT(text, ContainsSubstring("x,y\n"));
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == region.vertices().size());
}

TEST_CASE("measurement tables are time-major", "[io]") {
  SpreadingMeasurement m;
  m.eta = 0.5;
  m.times = {1.0, 2.0};
  m.directions = {{1.0, 0.0}, {0.0, 1.0}};
  m.radii = {{1.5, 3.25}, {1.25, 2.75}};
  const std::string text = serialize_measurement_csv(m);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,direction,radius");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "1,0,1.5");
  CHECK(rows[1] == "1," + std::string(detail::format_double(kPi / 2.0)) + ",1.25");
  CHECK(rows[2] == "2,0,3.25");
  CHECK(rows[3] == "2," + std::string(detail::format_double(kPi / 2.0)) + ",2.75");
}

TEST_CASE("polar plots are deterministic and labeled", "[io]") {
  const SpeedProfile profile = sample_anisotropic_profile(32);
  std::vector<HalfPlane> cuts;
  for (const SpeedSample& s : profile.samples()) cuts.push_back({s.e, s.speed});
  const WulffPolygon region = wulff_from_halfplanes(cuts, 32);

  const std::string svg = render_polar_svg(profile, region, 400);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK_THAT(svg, ContainsSubstring("front speed c"));
  CHECK_THAT(svg, ContainsSubstring("invasion speed w"));
  CHECK_THAT(svg, ContainsSubstring("spreading polygon"));
  CHECK_THAT(svg, ContainsSubstring("<polygon"));
  CHECK(render_polar_svg(profile, region, 400) == svg);
  CHECK_THROWS_WITH(render_polar_svg(profile, region, 64), ContainsSubstring("100 pixels"));
}
