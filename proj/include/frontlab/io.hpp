// File emission for laboratory artifacts: CSV tables for distance fields,
// speed profiles, spreading logs, polygon vertices and bump profiles; JSON
// for audit reports, profile sidecars and bump parameters; and the polar
// SVG overlay of a front-speed curve, its invasion curve and the spreading
// polygon. Serializers return the full file body and are deterministic
// (fixed row/key orders, 17-significant-digit floats), so re-emitting the
// same object is byte-identical; save_* wrappers write to disk.
#ifndef FRONTLAB_IO_HPP
#define FRONTLAB_IO_HPP

#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "frontlab/fronts.hpp"
#include "frontlab/geodesy.hpp"
#include "frontlab/geometry.hpp"
#include "frontlab/grid.hpp"
#include "frontlab/subsolution.hpp"
#include "frontlab/wulff.hpp"

namespace frontlab {

namespace detail {

inline void write_file(const std::string& body, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << body;
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Geodesic distance fields: CSV with columns x,y,d, one row per reachable
// fluid cell of the window (row-major, y increasing). Obstacle and
// unreachable cells carry no distance and are omitted.

inline std::string serialize_distance_csv(const GeodesicField& field) {
  std::string out = "x,y,d\n";
  const CellWindow& w = field.window();
  for (long j = w.j0; j < w.j0 + w.h; ++j)
    for (long i = w.i0; i < w.i0 + w.w; ++i) {
      const double d = field.distance_cell(i, j);
      if (!std::isfinite(d)) continue;
      const Vec2 p = field.cell_center(i, j);
      out += detail::format_double(p.x);
      out += ',';
      out += detail::format_double(p.y);
      out += ',';
      out += detail::format_double(d);
      out += '\n';
    }
  return out;
}

inline void save_distance_csv(const GeodesicField& field, const std::string& path) {
  detail::write_file(serialize_distance_csv(field), path);
}

// Heat-kernel audit report as JSON with exactly the fitted quantities.
inline std::string serialize_audit_json(const HeatAuditReport& report) {
  nlohmann::json j;
  j["epsilon"] = report.epsilon;
  j["C"] = report.C;
  j["delta"] = report.delta;
  j["violations"] = report.violations;
  j["samples"] = report.samples;
  return j.dump(2) + "\n";
}

inline void save_audit_json(const HeatAuditReport& report, const std::string& path) {
  detail::write_file(serialize_audit_json(report), path);
}

// ---------------------------------------------------------------------------
// Speed profiles: CSV with columns theta,ex,ey,speed,method,stderr, one row
// per sampled direction in profile order, plus a JSON sidecar carrying the
// metadata the table cannot (description, gap, argmin).

inline std::string serialize_profile_csv(const SpeedProfile& profile) {
  std::string out = "theta,ex,ey,speed,method,stderr\n";
  for (const SpeedSample& s : profile.samples()) {
    out += detail::format_double(s.theta);
    out += ',';
    out += detail::format_double(s.e.x);
    out += ',';
    out += detail::format_double(s.e.y);
    out += ',';
    out += detail::format_double(s.speed);
    out += ',';
    out += to_string(s.method);
    out += ',';
    out += detail::format_double(s.stderr_);
    out += '\n';
  }
  return out;
}

inline void save_profile_csv(const SpeedProfile& profile, const std::string& path) {
  detail::write_file(serialize_profile_csv(profile), path);
}

inline SpeedMethod speed_method_from_string(const std::string& name) {
  if (name == "eigenvalue") return SpeedMethod::eigenvalue;
  if (name == "empirical") return SpeedMethod::empirical;
  if (name == "closed_form") return SpeedMethod::closed_form;
  throw std::invalid_argument("unknown speed method: " + name);
}

// Inverse of serialize_profile_csv; the description is not stored in the
// table, so the caller supplies it (or accepts an empty one).
inline SpeedProfile parse_profile_csv(const std::string& text, std::string description = {}) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "theta,ex,ey,speed,method,stderr")
    throw std::runtime_error("not a speed profile table: bad header");
  std::vector<SpeedSample> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<std::string> fields;
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 6)
      throw std::runtime_error("speed profile row is missing columns");
    SpeedSample s;
    s.theta = std::stod(fields[0]);
    s.e = {std::stod(fields[1]), std::stod(fields[2])};
    s.speed = std::stod(fields[3]);
    s.method = speed_method_from_string(fields[4]);
    s.stderr_ = std::stod(fields[5]);
    samples.push_back(s);
  }
  return SpeedProfile(std::move(samples), std::move(description));
}

inline SpeedProfile load_profile_csv(const std::string& path, std::string description = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open profile file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile_csv(buf.str(), std::move(description));
}

inline std::string serialize_profile_sidecar_json(const SpeedProfile& profile) {
  nlohmann::json j;
  j["description"] = profile.description();
  j["directions"] = profile.size();
  j["max_angular_gap"] = profile.max_angular_gap();
  const SpeedSample& lo = profile.argmin();
  j["argmin"] = {{"theta", lo.theta}, {"speed", lo.speed}};
  return j.dump(2) + "\n";
}

inline void save_profile_sidecar_json(const SpeedProfile& profile, const std::string& path) {
  detail::write_file(serialize_profile_sidecar_json(profile), path);
}

// ---------------------------------------------------------------------------
// Spreading regions and measurements

// Vertex list of the spreading polygon, counterclockwise, columns x,y.
inline std::string serialize_polygon_csv(const WulffPolygon& region) {
  std::string out = "x,y\n";
  for (const Vec2& v : region.vertices()) {
    out += detail::format_double(v.x);
    out += ',';
    out += detail::format_double(v.y);
    out += '\n';
  }
  return out;
}

inline void save_polygon_csv(const WulffPolygon& region, const std::string& path) {
  detail::write_file(serialize_polygon_csv(region), path);
}

// Radius log of a spreading measurement: columns t,direction,radius with the
// direction reported as its angle; time-major, directions in input order.
inline std::string serialize_measurement_csv(const SpreadingMeasurement& measurement) {
  std::string out = "t,direction,radius\n";
  for (std::size_t k = 0; k < measurement.times.size(); ++k)
    for (std::size_t d = 0; d < measurement.directions.size(); ++d) {
      out += detail::format_double(measurement.times[k]);
      out += ',';
      out += detail::format_double(measurement.directions[d].angle());
      out += ',';
      out += detail::format_double(measurement.radii[d][k]);
      out += '\n';
    }
  return out;
}

inline void save_measurement_csv(const SpreadingMeasurement& measurement,
                                 const std::string& path) {
  detail::write_file(serialize_measurement_csv(measurement), path);
}

// ---------------------------------------------------------------------------
// Subsolution bumps: the construction parameters as JSON and the radial
// profile as a CSV with columns r,h sampled at the given step (the support
// endpoint R3 is always included as the final row).

inline std::string serialize_bump_json(const SubsolutionBump& bump) {
  nlohmann::json j;
  j["theta"] = bump.theta;
  j["C"] = bump.C;
  j["K"] = bump.K;
  j["F"] = bump.F;
  j["alpha"] = bump.alpha;
  j["c"] = bump.c;
  j["beta"] = bump.beta;
  j["R1"] = bump.R1;
  j["R2"] = bump.R2;
  j["R3"] = bump.R3;
  return j.dump(2) + "\n";
}

inline void save_bump_json(const SubsolutionBump& bump, const std::string& path) {
  detail::write_file(serialize_bump_json(bump), path);
}

inline std::string serialize_bump_profile_csv(const SubsolutionBump& bump, double r_step) {
  if (!(r_step > 0.0)) throw std::invalid_argument("bump profile needs a positive step");
  std::string out = "r,h\n";
  auto row = [&](double r) {
    out += detail::format_double(r);
    out += ',';
    out += detail::format_double(bump.h(r));
    out += '\n';
  };
  double r = 0.0;
  for (long k = 0; r < bump.R3; r = r_step * static_cast<double>(++k)) row(r);
  row(bump.R3);
  return out;
}

inline void save_bump_profile_csv(const SubsolutionBump& bump, double r_step,
                                  const std::string& path) {
  detail::write_file(serialize_bump_profile_csv(bump, r_step), path);
}

// ---------------------------------------------------------------------------
// Polar SVG overlay: an 800x800 plot with polar axes (four radius rings,
// spokes every 30 degrees), the front-speed curve, the invasion curve
// w = radial function of the spreading polygon, and the polygon outline
// itself. The front profile and the polygon may come from different
// direction counts; each curve is drawn at its own sampling.

namespace detail {

// Math coordinates -> pixel coordinates (y flipped, origin at the center).
struct PolarFrame {
  double scale = 1.0;
  double half = 400.0;

  std::string point(Vec2 p) const {
    return format_double(half + scale * p.x) + "," + format_double(half - scale * p.y);
  }
};

inline void append_closed_polyline(std::string& out, const PolarFrame& frame,
                                   const std::vector<Vec2>& points, const char* color,
                                   const char* extra) {
  out += "<polygon points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) out += ' ';
    out += frame.point(points[i]);
  }
  out += "\" fill=\"none\" stroke=\"";
  out += color;
  out += "\"";
  out += extra;
  out += "/>\n";
}

}  // namespace detail

inline std::string render_polar_svg(const SpeedProfile& front_speeds,
                                    const WulffPolygon& region, int size = 800) {
  if (size < 100) throw std::invalid_argument("polar plot needs at least 100 pixels");

  double r_max = 0.0;
  for (const SpeedSample& s : front_speeds.samples()) r_max = std::max(r_max, s.speed);
  for (const Vec2& v : region.vertices()) r_max = std::max(r_max, v.norm());

  detail::PolarFrame frame;
  frame.half = 0.5 * static_cast<double>(size);
  frame.scale = (frame.half - 40.0) / r_max;

  const std::string dim = std::to_string(size);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + dim +
                    "\" height=\"" + dim + "\" viewBox=\"0 0 " + dim + " " + dim + "\">\n";
  out += "<rect width=\"" + dim + "\" height=\"" + dim + "\" fill=\"white\"/>\n";

  // Polar axes: four radius rings with labels and twelve spokes.
  for (int k = 1; k <= 4; ++k) {
    const double r = r_max * static_cast<double>(k) / 4.0;
    out += "<circle cx=\"" + detail::format_double(frame.half) + "\" cy=\"" +
           detail::format_double(frame.half) + "\" r=\"" + detail::format_double(frame.scale * r) +
           "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + detail::format_double(frame.half + frame.scale * r + 3.0) + "\" y=\"" +
           detail::format_double(frame.half - 3.0) +
           "\" font-size=\"11\" fill=\"#888888\">" + detail::format_double(r) + "</text>\n";
  }
  for (int k = 0; k < 12; ++k) {
    const double t = kPi * static_cast<double>(k) / 6.0;
    out += "<line x1=\"" + detail::format_double(frame.half) + "\" y1=\"" +
           detail::format_double(frame.half) + "\" x2=\"" +
           detail::format_double(frame.half + frame.scale * r_max * std::cos(t)) + "\" y2=\"" +
           detail::format_double(frame.half - frame.scale * r_max * std::sin(t)) +
           "\" stroke=\"#eeeeee\"/>\n";
  }

  // Invasion curve w at the polygon's own radial sampling, then the polygon,
  // then the front-speed curve on top.
  std::vector<Vec2> w_curve;
  for (const RadialSample& s : region.radial()) w_curve.push_back(s.e * s.value);
  detail::append_closed_polyline(out, frame, w_curve, "#2c7fb8", " stroke-width=\"2\"");
  detail::append_closed_polyline(out, frame, region.vertices(), "#a6bddb",
                                 " stroke-dasharray=\"4 3\"");
  std::vector<Vec2> c_curve;
  for (const SpeedSample& s : front_speeds.samples()) c_curve.push_back(s.e * s.speed);
  detail::append_closed_polyline(out, frame, c_curve, "#d7301f", " stroke-width=\"2\"");

  out += "<text x=\"10\" y=\"20\" font-size=\"13\" fill=\"#d7301f\">front speed c</text>\n";
  out += "<text x=\"10\" y=\"38\" font-size=\"13\" fill=\"#2c7fb8\">invasion speed w</text>\n";
  out += "<text x=\"10\" y=\"56\" font-size=\"13\" fill=\"#a6bddb\">spreading polygon</text>\n";
  out += "</svg>\n";
  return out;
}

inline void save_polar_svg(const SpeedProfile& front_speeds, const WulffPolygon& region,
                           const std::string& path, int size = 800) {
  detail::write_file(render_polar_svg(front_speeds, region, size), path);
}

}  // namespace frontlab

#endif  // FRONTLAB_IO_HPP
