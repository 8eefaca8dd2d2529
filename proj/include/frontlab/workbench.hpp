// Experiment orchestration: the seven named laboratory experiments as flat
// key=value configurations, the driver that runs each measurement pipeline
// into a report of quantities and named verdicts, and deterministic emission
// of reports as CSV tables, a versioned JSON summary and a polar SVG.
#ifndef FRONTLAB_WORKBENCH_HPP
#define FRONTLAB_WORKBENCH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frontlab/dynamics.hpp"
#include "frontlab/fronts.hpp"
#include "frontlab/geodesy.hpp"
#include "frontlab/geometry.hpp"
#include "frontlab/grid.hpp"
#include "frontlab/io.hpp"
#include "frontlab/subsolution.hpp"
#include "frontlab/wulff.hpp"

namespace frontlab {

// ---------------------------------------------------------------------------
// Experiment identity and configuration

enum class ExperimentId {
  free_kpp,
  anisotropic,
  holes_kpp,
  slant_combustion,
  monostable_sandwich,
  symmetry,
  heat_audit,
};

inline const char* to_string(ExperimentId id) {
  switch (id) {
    case ExperimentId::free_kpp: return "free-kpp";
    case ExperimentId::anisotropic: return "anisotropic";
    case ExperimentId::holes_kpp: return "holes-kpp";
    case ExperimentId::slant_combustion: return "slant-combustion";
    case ExperimentId::monostable_sandwich: return "monostable-sandwich";
    case ExperimentId::symmetry: return "symmetry";
    case ExperimentId::heat_audit: return "heat-audit";
  }
  return "unknown";
}

inline const std::vector<ExperimentId>& all_experiments() {
  static const std::vector<ExperimentId> ids{
      ExperimentId::free_kpp,        ExperimentId::anisotropic,
      ExperimentId::holes_kpp,       ExperimentId::slant_combustion,
      ExperimentId::monostable_sandwich, ExperimentId::symmetry,
      ExperimentId::heat_audit,
  };
  return ids;
}

inline ExperimentId experiment_from_string(const std::string& name) {
  for (ExperimentId id : all_experiments())
    if (name == to_string(id)) return id;
  throw std::invalid_argument("unknown experiment: " + name);
}

// One flat key=value schema covers every experiment; each pipeline reads the
// keys it needs and ignores the rest, but unknown keys are always rejected.
struct ExperimentConfig {
  ExperimentId id = ExperimentId::free_kpp;

  // Mask parameters.
  double alpha = 0.9;          // hole width / slant slope
  double beta = 0.05;          // hole neck height
  double disc_radius = 0.3;    // symmetry-lattice obstacle radius
  std::vector<double> alphas;  // slant sweep, in run order
  double kappa = 4.0;          // slab band radius as a multiple of the bump support

  // Reaction and diffusion parameters.
  double tensor_a = 1.0;   // diagonal diffusion entries
  double tensor_b = 1.0;
  double rate = 1.0;       // KPP linear rate f'(0)
  double sigma = 1.0;      // reaction amplitude scale (amplitude = sigma^2)
  double ignition = 0.25;  // combustion threshold
  double epsilon = 0.5;    // heat-audit exponent slack

  // Resolution.
  double dx = 0.05;           // primary grid step
  double spreading_dx = 0.1;  // grid step for invasion measurements
  double horizon = 20.0;      // final measurement time

  // Direction counts.
  int eigen_directions = 16;
  int profile_directions = 256;
  int output_directions = 64;
  int spread_directions = 8;

  // Tolerances.
  double front_tolerance = 0.02;     // relative, eigenvalue/analytic checks
  double invasion_tolerance = 0.05;  // relative, empirical spreading checks
  double gap_margin = 0.05;          // absolute margin for strict inequalities

  std::string output_dir = ".";

  static ExperimentConfig defaults(ExperimentId id) {
    ExperimentConfig c;
    c.id = id;
    switch (id) {
      case ExperimentId::free_kpp:
        c.dx = 0.05;
        c.spreading_dx = 0.15;
        c.horizon = 40.0;
        break;
      case ExperimentId::anisotropic:
        c.tensor_a = 4.0;
        c.tensor_b = 1.0;
        c.profile_directions = 256;
        c.output_directions = 256;
        c.front_tolerance = 0.01;
        break;
      case ExperimentId::holes_kpp:
        c.alpha = 0.9;
        c.beta = 0.05;
        c.dx = 0.01;
        c.spreading_dx = 0.1;
        c.horizon = 25.0;
        break;
      case ExperimentId::slant_combustion:
        c.alphas = {0.4, 0.2, 0.1};
        c.sigma = 8.0;
        c.ignition = 0.25;
        c.kappa = 4.0;
        c.dx = 0.1;
        break;
      case ExperimentId::monostable_sandwich:
        c.alpha = 0.2;
        c.sigma = 3.5;
        c.kappa = 1.1;
        c.dx = 0.1;
        break;
      case ExperimentId::symmetry:
        c.disc_radius = 0.3;
        c.dx = 1.0 / 16.0;
        c.eigen_directions = 32;
        break;
      case ExperimentId::heat_audit:
        c.epsilon = 0.5;
        c.dx = 0.05;
        c.spreading_dx = 0.05;
        c.horizon = 4.0;
        c.front_tolerance = 0.10;
        break;
    }
    return c;
  }

  // Applies one key=value assignment; throws on unknown keys or bad values.
  void apply(const std::string& key, const std::string& value) {
    auto as_double = [&](double& slot) {
      try {
        std::size_t used = 0;
        slot = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("config value for " + key + " is not a number: " + value);
      }
    };
    auto as_int = [&](int& slot) {
      try {
        std::size_t used = 0;
        slot = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("config value for " + key + " is not an integer: " + value);
      }
    };
    if (key == "experiment") {
      id = experiment_from_string(value);
    } else if (key == "alpha") {
      as_double(alpha);
    } else if (key == "beta") {
      as_double(beta);
    } else if (key == "disc_radius") {
      as_double(disc_radius);
    } else if (key == "alphas") {
      alphas.clear();
      std::istringstream list(value);
      std::string item;
      while (std::getline(list, item, ',')) {
        double v = 0.0;
        try {
          std::size_t used = 0;
          v = std::stod(item, &used);
          if (used != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw std::invalid_argument("config value for alphas has a bad entry: " + item);
        }
        alphas.push_back(v);
      }
      if (alphas.empty())
        throw std::invalid_argument("config value for alphas must list at least one value");
    } else if (key == "kappa") {
      as_double(kappa);
    } else if (key == "tensor_a") {
      as_double(tensor_a);
    } else if (key == "tensor_b") {
      as_double(tensor_b);
    } else if (key == "rate") {
      as_double(rate);
    } else if (key == "sigma") {
      as_double(sigma);
    } else if (key == "ignition") {
      as_double(ignition);
    } else if (key == "epsilon") {
      as_double(epsilon);
    } else if (key == "dx") {
      as_double(dx);
    } else if (key == "spreading_dx") {
      as_double(spreading_dx);
    } else if (key == "horizon") {
      as_double(horizon);
    } else if (key == "eigen_directions") {
      as_int(eigen_directions);
    } else if (key == "profile_directions") {
      as_int(profile_directions);
    } else if (key == "output_directions") {
      as_int(output_directions);
    } else if (key == "spread_directions") {
      as_int(spread_directions);
    } else if (key == "front_tolerance") {
      as_double(front_tolerance);
    } else if (key == "invasion_tolerance") {
      as_double(invasion_tolerance);
    } else if (key == "gap_margin") {
      as_double(gap_margin);
    } else if (key == "output_dir") {
      output_dir = value;
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }

  // Flat key=value text: one assignment per line, '#' comments, blank lines
  // ignored. The experiment key is required and seeds the defaults; the
  // remaining assignments override them in file order.
  static ExperimentConfig parse(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::istringstream in(text);
    std::string line;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
      const std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      const auto eq = t.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("config line is not a key=value assignment: " + t);
      entries.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    std::string experiment;
    for (const auto& [k, v] : entries)
      if (k == "experiment") experiment = v;
    if (experiment.empty())
      throw std::invalid_argument("config is missing the experiment key");
    ExperimentConfig c = defaults(experiment_from_string(experiment));
    for (const auto& [k, v] : entries)
      if (k != "experiment") c.apply(k, v);
    return c;
  }

  static ExperimentConfig load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

  // Full echo in fixed key order; parse(serialize()) reproduces the config.
  std::string serialize() const {
    std::string out;
    auto put = [&](const char* key, const std::string& value) {
      out += key;
      out += '=';
      out += value;
      out += '\n';
    };
    put("experiment", to_string(id));
    put("alpha", detail::format_double(alpha));
    put("beta", detail::format_double(beta));
    put("disc_radius", detail::format_double(disc_radius));
    if (!alphas.empty()) {
      std::string list;
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i > 0) list += ',';
        list += detail::format_double(alphas[i]);
      }
      put("alphas", list);
    }
    put("kappa", detail::format_double(kappa));
    put("tensor_a", detail::format_double(tensor_a));
    put("tensor_b", detail::format_double(tensor_b));
    put("rate", detail::format_double(rate));
    put("sigma", detail::format_double(sigma));
    put("ignition", detail::format_double(ignition));
    put("epsilon", detail::format_double(epsilon));
    put("dx", detail::format_double(dx));
    put("spreading_dx", detail::format_double(spreading_dx));
    put("horizon", detail::format_double(horizon));
    put("eigen_directions", std::to_string(eigen_directions));
    put("profile_directions", std::to_string(profile_directions));
    put("output_directions", std::to_string(output_directions));
    put("spread_directions", std::to_string(spread_directions));
    put("front_tolerance", detail::format_double(front_tolerance));
    put("invasion_tolerance", detail::format_double(invasion_tolerance));
    put("gap_margin", detail::format_double(gap_margin));
    put("output_dir", output_dir);
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["experiment"] = to_string(id);
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["disc_radius"] = disc_radius;
    j["alphas"] = alphas;
    j["kappa"] = kappa;
    j["tensor_a"] = tensor_a;
    j["tensor_b"] = tensor_b;
    j["rate"] = rate;
    j["sigma"] = sigma;
    j["ignition"] = ignition;
    j["epsilon"] = epsilon;
    j["dx"] = dx;
    j["spreading_dx"] = spreading_dx;
    j["horizon"] = horizon;
    j["eigen_directions"] = eigen_directions;
    j["profile_directions"] = profile_directions;
    j["output_directions"] = output_directions;
    j["spread_directions"] = spread_directions;
    j["front_tolerance"] = front_tolerance;
    j["invasion_tolerance"] = invasion_tolerance;
    j["gap_margin"] = gap_margin;
    j["output_dir"] = output_dir;
    return j;
  }
};

// ---------------------------------------------------------------------------
// Reports

struct QuantityResult {
  std::string name;
  double value = 0.0;
  double uncertainty = 0.0;
};

struct Verdict {
  std::string clause;  // names the acceptance clause the check reproduces
  bool pass = false;
  std::string detail;
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<QuantityResult> results;
  std::vector<Verdict> verdicts;
  std::vector<StageTiming> timings;
  std::vector<std::string> artifacts;  // filled by emit

  // Payloads behind the tables and plots.
  std::vector<std::pair<std::string, SpeedProfile>> profiles;
  std::vector<std::pair<std::string, SpreadingMeasurement>> measurements;
  std::vector<std::pair<std::string, HeatAuditReport>> audits;
  std::optional<WulffPolygon> region;

  bool all_pass() const {
    if (verdicts.empty()) return false;
    for (const Verdict& v : verdicts)
      if (!v.pass) return false;
    return true;
  }

  const QuantityResult* find(const std::string& name) const {
    for (const QuantityResult& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }
};

// Fitted heat-audit prefactor on the free plane at the default configuration
// (dx=0.05, epsilon=0.5, times {0.5,1,2,4}, the standard sample points),
// recorded once and asserted stable thereafter.
constexpr double kFreePlaneAuditC = 0.039743136806606093;

namespace detail {

inline std::string brief(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& out)
      : out_(&out), last_(std::chrono::steady_clock::now()) {}

  void lap(std::string stage) {
    const auto now = std::chrono::steady_clock::now();
    out_->push_back({std::move(stage), std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }

 private:
  std::vector<StageTiming>* out_;
  std::chrono::steady_clock::time_point last_;
};

inline std::vector<double> uniform_angles(int n) {
  if (n < 1) throw std::invalid_argument("need at least one direction");
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) angles[static_cast<std::size_t>(k)] = 2.0 * kPi * k / n;
  return angles;
}

inline std::vector<double> measurement_times(double lo, double hi, int n) {
  std::vector<double> times(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    times[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (n - 1);
  return times;
}

inline std::vector<HalfPlane> support_cuts(const SpeedProfile& profile) {
  std::vector<HalfPlane> cuts;
  cuts.reserve(profile.size());
  for (const SpeedSample& s : profile.samples()) cuts.push_back({s.e, s.speed});
  return cuts;
}

inline SpeedProfile profile_from_radial(const WulffPolygon& region, std::string description) {
  std::vector<SpeedSample> samples;
  samples.reserve(region.radial().size());
  for (const RadialSample& r : region.radial()) {
    SpeedSample s;
    s.theta = r.theta;
    s.e = r.e;
    s.speed = r.value;
    s.method = SpeedMethod::closed_form;
    samples.push_back(s);
  }
  return SpeedProfile(std::move(samples), std::move(description));
}

// Grid step at or below both the requested step and the slit-resolution
// limit, snapped so it divides the 3R period exactly.
inline double slant_grid_step(double alpha, double band_R, double requested) {
  const double period = 3.0 * band_R;
  const double target = std::min(requested, alpha * band_R / 16.0);
  const double n = std::max(2.0, std::round(period / target));
  return period / n;
}

// Invasion speed along the corridor axis of a slant domain: origin bump,
// symmetric window whose x extent is sized by the universal spreading bound
// 2 sqrt(max f/u) so a legitimate front can never outrun the measurement,
// and whose height keeps the first slab rows (and their leak) in play.
inline SpeedSample slant_speed_along_x(const PeriodicCellMask& mask, const Nonlinearity& f,
                                       double band_R, double bump_radius, double level,
                                       double radius_periods, SpreadingMeasurement* log_out) {
  const double root_ratio = std::sqrt(f.max_slope_ratio());
  const double guess =
      f.is_kpp() ? 2.0 * std::sqrt(f.linear_rate()) : 0.9 * root_ratio;
  const double cap = 2.0 * root_ratio;
  const double period = mask.L1();
  const double horizon = radius_periods * period / guess;
  const double x_half = 1.05 * cap * horizon + 2.0 * period + 8.0;
  const double y_half = 2.5 * band_R;
  const WindowSpec window{-x_half, x_half, -y_half, y_half, BoundaryMode::clamped,
                          BoundaryMode::clamped};
  auto mask_ptr = std::make_shared<const PeriodicCellMask>(mask);
  FieldState state = initial_bump(mask_ptr, window, 0.9, bump_radius, {0.0, 0.0});
  const SpreadingMeasurement m =
      empirical_spreading(std::move(state), f, DiffusionTensor::identity(), level,
                          measurement_times(0.5 * horizon, horizon, 8), {{1.0, 0.0}});
  if (log_out) *log_out = m;
  return m.speeds.front();
}

// Invasion speed across the slab rows. The window is asymmetric: capped
// above by the geodesic ceiling 6 alpha sqrt(max f/u) (clipped by the
// universal bound), and truncated left/right at the given multiples of the
// band radius because ascending paths drift sideways along the slits; the
// clamped walls can only slow the measured ascent, which keeps the ceiling
// check honest and the sweep comparison consistent. Callers that know the
// leg's speed scale better than the slope heuristic (the sandwich brackets)
// can override the window cap and the horizon-setting speed guess; zero
// keeps the derived values.
inline SpeedSample slant_speed_along_y(const PeriodicCellMask& mask, const Nonlinearity& f,
                                       double band_R, double alpha, double bump_radius,
                                       double level, double radius_periods, double x_lo_bands,
                                       double x_hi_bands, SpreadingMeasurement* log_out,
                                       double cap_override = 0.0, double guess_override = 0.0) {
  const double root_ratio = std::sqrt(f.max_slope_ratio());
  const double derived_cap = std::min(6.0 * alpha * root_ratio * 1.05, 2.0 * root_ratio);
  const double cap = cap_override > 0.0 ? cap_override : derived_cap;
  const double guess = guess_override > 0.0 ? guess_override : 0.35 * cap;
  const double period = mask.L2();
  const double radius_target = radius_periods * period;
  const double horizon = radius_target / guess;
  const double y_hi = 1.05 * cap * horizon + 2.0 * period + 8.0;
  const double y_lo = -(2.0 * band_R + 8.0);
  const WindowSpec window{-x_lo_bands * band_R, x_hi_bands * band_R, y_lo, y_hi,
                          BoundaryMode::clamped, BoundaryMode::clamped};
  auto mask_ptr = std::make_shared<const PeriodicCellMask>(mask);
  FieldState state = initial_bump(mask_ptr, window, 0.9, bump_radius, {0.0, 0.0});
  const SpreadingMeasurement m =
      empirical_spreading(std::move(state), f, DiffusionTensor::identity(), level,
                          measurement_times(0.5 * horizon, horizon, 8), {{0.0, 1.0}});
  if (log_out) *log_out = m;
  return m.speeds.front();
}

// ---------------------------------------------------------------------------
// The seven pipelines

inline void run_free_kpp(const ExperimentConfig& c, ExperimentReport& report) {
  StageClock clock(report.timings);
  const Nonlinearity f = Nonlinearity::kpp(c.rate);
  const double target = 2.0 * std::sqrt(c.rate);

  const auto eigen_mask = build_free_plane(1.0, 1.0, c.dx);
  const SpeedProfile front = sample_profile(eigen_mask, f, DiffusionTensor::identity(),
                                            uniform_angles(c.eigen_directions),
                                            SpeedMethod::eigenvalue, {}, "eigenvalue front speeds");
  double front_lo = front.samples().front().speed, front_hi = front_lo;
  for (const SpeedSample& s : front.samples()) {
    front_lo = std::min(front_lo, s.speed);
    front_hi = std::max(front_hi, s.speed);
  }
  const double front_dev =
      std::max(std::abs(front_lo / target - 1.0), std::abs(front_hi / target - 1.0));
  clock.lap("eigenvalues");

  report.region = wulff_from_halfplanes(support_cuts(front), c.output_directions);
  clock.lap("transform");

  const double L = 8.0 * c.spreading_dx;
  const auto spread_mask = build_free_plane(L, L, c.spreading_dx);
  const double half = 1.05 * target * c.horizon + 1.0;
  const WindowSpec window{-half, half, -half, half, BoundaryMode::clamped,
                          BoundaryMode::clamped};
  auto mask_ptr = std::make_shared<const PeriodicCellMask>(spread_mask);
  FieldState state = initial_bump(mask_ptr, window, 0.9, 2.0, {0.0, 0.0});
  const SpreadingMeasurement spreading = empirical_spreading(
      std::move(state), f, DiffusionTensor::identity(), 0.5,
      measurement_times(0.25 * c.horizon, c.horizon, 16),
      direction_fan(c.spread_directions));
  double inv_lo = spreading.speeds.front().speed, inv_hi = inv_lo;
  for (const SpeedSample& s : spreading.speeds) {
    inv_lo = std::min(inv_lo, s.speed);
    inv_hi = std::max(inv_hi, s.speed);
  }
  const double inv_dev =
      std::max(std::abs(inv_lo / target - 1.0), std::abs(inv_hi / target - 1.0));
  clock.lap("spreading");

  report.results = {
      {"front-speed-min", front_lo, 0.0},
      {"front-speed-max", front_hi, 0.0},
      {"front-speed-target", target, 0.0},
      {"front-tolerance", c.front_tolerance, 0.0},
      {"invasion-speed-min", inv_lo, 0.0},
      {"invasion-speed-max", inv_hi, 0.0},
      {"invasion-tolerance", c.invasion_tolerance, 0.0},
  };
  report.verdicts.push_back({"free-plane-front-speed", front_dev <= c.front_tolerance,
                             std::to_string(c.eigen_directions) + " directions within " +
                                 brief(100.0 * front_dev) + "% of " + brief(target) +
                                 " (tolerance " + brief(100.0 * c.front_tolerance) + "%)"});
  report.verdicts.push_back({"free-plane-invasion-speed", inv_dev <= c.invasion_tolerance,
                             std::to_string(c.spread_directions) + " rays within " +
                                 brief(100.0 * inv_dev) + "% of " + brief(target) +
                                 " (tolerance " + brief(100.0 * c.invasion_tolerance) + "%)"});
  report.profiles.emplace_back("front_speeds", front);
  report.profiles.emplace_back("invasion_speeds",
                               SpeedProfile(spreading.speeds, "fitted spreading speeds"));
  report.measurements.emplace_back("spreading", spreading);
}

inline void run_anisotropic(const ExperimentConfig& c, ExperimentReport& report) {
  StageClock clock(report.timings);
  const Nonlinearity f = Nonlinearity::kpp(c.rate);
  const DiffusionTensor A{c.tensor_a, c.tensor_b};
  const auto plane = build_free_plane(1.0, 1.0, 0.25);

  const SpeedProfile front =
      sample_profile(plane, f, A, uniform_angles(c.profile_directions),
                     SpeedMethod::closed_form, {}, "closed-form front speeds");
  clock.lap("profile");

  const WulffPolygon region = wulff_from_halfplanes(support_cuts(front), c.output_directions);
  auto exact_invasion = [&](Vec2 e) {
    return 2.0 * std::sqrt(c.rate / (e.x * e.x / c.tensor_a + e.y * e.y / c.tensor_b));
  };
  double match_dev = 0.0;
  std::vector<SpeedSample> exact_samples;
  for (const RadialSample& r : region.radial()) {
    const double w_exact = exact_invasion(r.e);
    match_dev = std::max(match_dev, std::abs(r.value / w_exact - 1.0));
    SpeedSample s;
    s.theta = r.theta;
    s.e = r.e;
    s.speed = w_exact;
    s.method = SpeedMethod::closed_form;
    exact_samples.push_back(s);
  }
  const Vec2 e_d = Vec2::unit(kPi / 4.0);
  const double c_diag = closed_form_speed(A, c.rate, e_d);
  const double w_diag = region.radial_at(e_d);
  const double gap = c_diag - w_diag;
  const double gap_expected = c_diag - exact_invasion(e_d);
  const double gap_dev = std::abs(gap / gap_expected - 1.0);
  clock.lap("transform");

  report.results = {
      {"transform-max-mismatch", match_dev, 0.0},
      {"match-tolerance", c.front_tolerance, 0.0},
      {"diagonal-front-speed", c_diag, 0.0},
      {"diagonal-invasion-speed", w_diag, 0.0},
      {"diagonal-gap", gap, 0.0},
      {"diagonal-gap-expected", gap_expected, 0.0},
  };
  report.verdicts.push_back(
      {"anisotropic-transform-match", match_dev <= c.front_tolerance,
       std::to_string(c.output_directions) + " directions, transform within " +
           brief(100.0 * match_dev) + "% of the inverse-form speed"});
  report.verdicts.push_back(
      {"anisotropic-diagonal-gap", gap_dev <= c.front_tolerance,
       "diagonal gap " + brief(gap) + " vs " + brief(gap_expected) + " expected (" +
           brief(100.0 * gap_dev) + "% off)"});
  report.profiles.emplace_back("front_speeds", front);
  report.profiles.emplace_back("invasion_speeds",
                               profile_from_radial(region, "transform of the front speeds"));
  report.profiles.emplace_back("invasion_exact",
                               SpeedProfile(std::move(exact_samples), "inverse-form speeds"));
  report.region = region;
}

inline void run_holes_kpp(const ExperimentConfig& c, ExperimentReport& report) {
  StageClock clock(report.timings);
  const Nonlinearity f = Nonlinearity::kpp(c.rate);
  const Vec2 e_d = Vec2::unit(kPi / 4.0);

  const auto fine_mask = build_holes_domain(c.alpha, c.beta, c.dx);
  const double c_x = kpp_front_speed(fine_mask, DiffusionTensor::identity(), c.rate, {1.0, 0.0});
  clock.lap("eigenvalue");

  const ObstructionCoefficient cone = cone_coefficient(fine_mask, e_d, 8);
  const double bound = speed_upper_bound(cone, f);
  // Zigzag detours around the near-closed cells give the analytic ceiling
  // 1/(sqrt(2)(alpha - beta)) for the diagonal coefficient, up to the
  // stencil's metric error.
  const double cone_ceiling =
      1.0 / (std::sqrt(2.0) * (c.alpha - c.beta)) + metric_error(StencilOrder::sixteen);
  clock.lap("geodesics");

  const auto spread_mask = build_holes_domain(c.alpha, c.beta, c.spreading_dx);
  const double half = 1.05 * bound * c.horizon + 4.0;
  const WindowSpec window{-half, half, -half, half, BoundaryMode::clamped,
                          BoundaryMode::clamped};
  auto mask_ptr = std::make_shared<const PeriodicCellMask>(spread_mask);
  FieldState state = initial_bump(mask_ptr, window, 0.9, 1.5, {0.0, 0.0});
  const SpreadingMeasurement spreading = empirical_spreading(
      std::move(state), f, DiffusionTensor::identity(), 0.5,
      measurement_times(0.2 * c.horizon, c.horizon, 11), {e_d});
  const SpeedSample w_d = spreading.speeds.front();
  clock.lap("spreading");

  report.results = {
      {"front-speed-x", c_x, 0.0},
      {"cone-coefficient-diagonal", cone.value, 0.0},
      {"cone-ceiling", cone_ceiling, 0.0},
      {"geodesic-speed-bound", bound, 0.0},
      {"speed-gap", c_x - bound, 0.0},
      {"gap-margin", c.gap_margin, 0.0},
      {"invasion-speed-diagonal", w_d.speed, w_d.stderr_},
      {"invasion-ceiling", bound * (1.0 + c.invasion_tolerance), 0.0},
  };
  report.verdicts.push_back(
      {"holes-speed-gap", c_x > bound + c.gap_margin,
       "front speed " + brief(c_x) + " vs geodesic bound " + brief(bound) + " (margin " +
           brief(c_x - bound) + ", required " + brief(c.gap_margin) + ")"});
  report.verdicts.push_back({"holes-cone-ceiling", cone.value <= cone_ceiling,
                             "diagonal coefficient " + brief(cone.value) + " vs ceiling " +
                                 brief(cone_ceiling)});
  report.verdicts.push_back(
      {"holes-invasion-bound", w_d.speed <= bound * (1.0 + c.invasion_tolerance),
       "diagonal invasion " + brief(w_d.speed) + " vs bound " + brief(bound) + " + " +
           brief(100.0 * c.invasion_tolerance) + "%"});
  report.profiles.emplace_back(
      "front_speeds", SpeedProfile({{0.0, {1.0, 0.0}, c_x, 0.0, SpeedMethod::eigenvalue}},
                                   "eigenvalue front speed along the open axis"));
  report.measurements.emplace_back("diagonal_spreading", spreading);
}

inline void run_slant_combustion(const ExperimentConfig& c, ExperimentReport& report) {
  StageClock clock(report.timings);
  if (c.alphas.empty())
    throw std::invalid_argument("slant-combustion needs a nonempty alphas sweep");
  const Nonlinearity f = Nonlinearity::combustion(c.ignition, c.sigma * c.sigma);
  const SubsolutionBump bump = construct(f, c.ignition, 0.9, 0.5);
  const double band_R = c.kappa * bump.R3;
  const double level = 0.5 * (1.0 + c.ignition);
  const double bump_radius = 1.05 * bump.R3;
  const double root_ratio = std::sqrt(f.max_slope_ratio());

  report.results = {
      {"certified-speed", bump.c, 0.0},
      {"support-radius", bump.R3, 0.0},
      {"band-radius", band_R, 0.0},
      {"horizontal-floor", 0.95 * bump.c, 0.0},
  };

  std::vector<double> w_x(c.alphas.size()), w_y(c.alphas.size()), ceilings(c.alphas.size());
  for (std::size_t i = 0; i < c.alphas.size(); ++i) {
    const double alpha = c.alphas[i];
    const double step = slant_grid_step(alpha, band_R, c.dx);
    const auto mask = build_slant_domain(alpha, band_R, step);
    char stem[48];

    SpreadingMeasurement log_x;
    const SpeedSample sx = slant_speed_along_x(mask, f, band_R, bump_radius, level,
                                               alpha >= 0.15 ? 2.0 : 1.5, &log_x);
    w_x[i] = sx.speed;
    std::snprintf(stem, sizeof(stem), "spreading_x_%g", alpha);
    report.measurements.emplace_back(stem, log_x);
    clock.lap(std::string("corridor alpha=") + brief(alpha));

    // Shorter ascent targets at tighter slopes keep each alpha inside its
    // runtime budget; the fitted slope still orders the sweep.
    const double radius_periods = alpha >= 0.3 ? 1.5 : (alpha >= 0.15 ? 1.25 : 0.65);
    const double x_lo_bands = alpha >= 0.3 ? 6.0 : (alpha >= 0.15 ? 5.0 : 4.0);
    const double x_hi_bands = alpha >= 0.3 ? 16.0 : (alpha >= 0.15 ? 14.0 : 10.0);
    SpreadingMeasurement log_y;
    const SpeedSample sy =
        slant_speed_along_y(mask, f, band_R, alpha, bump_radius, level, radius_periods,
                            x_lo_bands, x_hi_bands, &log_y);
    w_y[i] = sy.speed;
    ceilings[i] = 6.0 * alpha * root_ratio;
    std::snprintf(stem, sizeof(stem), "spreading_y_%g", alpha);
    report.measurements.emplace_back(stem, log_y);
    clock.lap(std::string("ascent alpha=") + brief(alpha));

    char name[48];
    std::snprintf(name, sizeof(name), "invasion-speed-x[%g]", alpha);
    report.results.push_back({name, sx.speed, sx.stderr_});
    std::snprintf(name, sizeof(name), "invasion-speed-y[%g]", alpha);
    report.results.push_back({name, sy.speed, sy.stderr_});
    std::snprintf(name, sizeof(name), "vertical-ceiling[%g]", alpha);
    report.results.push_back({name, ceilings[i], 0.0});
  }

  double floor_ratio = w_x.front() / bump.c;
  for (double w : w_x) floor_ratio = std::min(floor_ratio, w / bump.c);
  bool decreasing = true;
  for (std::size_t i = 1; i < w_y.size(); ++i)
    if (!(w_y[i] < w_y[i - 1])) decreasing = false;
  bool below_ceiling = true;
  double worst_excess = -1e300;
  for (std::size_t i = 0; i < w_y.size(); ++i) {
    const double limit = ceilings[i] * (1.0 + c.invasion_tolerance);
    worst_excess = std::max(worst_excess, w_y[i] - limit);
    if (w_y[i] > limit) below_ceiling = false;
  }

  report.verdicts.push_back({"slant-horizontal-floor", floor_ratio >= 0.95,
                             "min corridor speed at " + brief(floor_ratio) +
                                 "x the certified speed " + brief(bump.c) + " (need 0.95x)"});
  std::string sweep;
  for (std::size_t i = 0; i < w_y.size(); ++i) {
    if (i > 0) sweep += " > ";
    sweep += brief(w_y[i]);
  }
  report.verdicts.push_back({"slant-vertical-decrease", decreasing,
                             "ascent speeds along the sweep: " + sweep});
  report.verdicts.push_back({"slant-vertical-ceiling", below_ceiling,
                             "worst ceiling excess " + brief(worst_excess)});
}

inline void run_monostable_sandwich(const ExperimentConfig& c, ExperimentReport& report) {
  StageClock clock(report.timings);
  const double amp = c.sigma * c.sigma;
  // Monostable but not KPP: f(u) > f'(0) u on (0, 0.8), bracketed pointwise
  // by the combustion term below and the KPP term above.
  const Nonlinearity f_mid = Nonlinearity::monostable(
      [amp](double u) { return amp * u * (1.0 - u) * (u + 0.2); }, 0.2 * amp, 0.64);
  const Nonlinearity f_up = Nonlinearity::kpp(1.2 * amp);
  const Nonlinearity f_low = Nonlinearity::combustion(0.15, 0.9 * amp);

  const SubsolutionBump low_bump = construct(f_low);
  const double band_R = c.kappa * low_bump.R3;
  const double bump_radius = 1.05 * low_bump.R3;
  const double level = 0.5 * (1.0 + f_low.ignition());
  const double step = slant_grid_step(c.alpha, band_R, c.dx);
  const auto mask = build_slant_domain(c.alpha, band_R, step);

  // Ascent speeds differ by an order of magnitude across the bracket, so
  // each leg gets its own window cap and horizon speed (in units of sigma,
  // the common amplitude scale): generous caps keep fast legs unclipped,
  // slow horizon speeds give slow legs time to clear the first slab row.
  struct Leg {
    const char* tag;
    const Nonlinearity* f;
    double y_cap, y_guess;
    double wx = 0.0, wx_err = 0.0, wy = 0.0, wy_err = 0.0;
  };
  const double s = c.sigma;
  std::vector<Leg> legs{{"lower", &f_low, 0.8 * s, 0.22 * s},
                        {"middle", &f_mid, 1.6 * s, 0.28 * s},
                        {"upper", &f_up, 2.3 * s, 1.2 * s}};
  for (Leg& leg : legs) {
    SpreadingMeasurement log_x, log_y;
    const SpeedSample sx =
        slant_speed_along_x(mask, *leg.f, band_R, bump_radius, level, 2.0, &log_x);
    const SpeedSample sy =
        slant_speed_along_y(mask, *leg.f, band_R, c.alpha, bump_radius, level, 1.0, 4.0,
                            11.0, &log_y, leg.y_cap, leg.y_guess);
    leg.wx = sx.speed;
    leg.wx_err = sx.stderr_;
    leg.wy = sy.speed;
    leg.wy_err = sy.stderr_;
    report.measurements.emplace_back(std::string("spreading_x_") + leg.tag, log_x);
    report.measurements.emplace_back(std::string("spreading_y_") + leg.tag, log_y);
    report.results.push_back({std::string("invasion-speed-x-") + leg.tag, sx.speed, sx.stderr_});
    report.results.push_back({std::string("invasion-speed-y-") + leg.tag, sy.speed, sy.stderr_});
    clock.lap(std::string("spreading ") + leg.tag);
  }

  const Leg& lo = legs[0];
  const Leg& mid = legs[1];
  const Leg& up = legs[2];
  const double slack = c.invasion_tolerance;
  const bool x_ok =
      mid.wx >= lo.wx * (1.0 - slack) && mid.wx <= up.wx * (1.0 + slack);
  const bool y_ok =
      mid.wy >= lo.wy * (1.0 - slack) && mid.wy <= up.wy * (1.0 + slack);
  report.results.push_back({"sandwich-slack", slack, 0.0});
  report.verdicts.push_back({"sandwich-horizontal", x_ok,
                             brief(lo.wx) + " <= " + brief(mid.wx) + " <= " + brief(up.wx) +
                                 " within " + brief(100.0 * slack) + "%"});
  report.verdicts.push_back({"sandwich-vertical", y_ok,
                             brief(lo.wy) + " <= " + brief(mid.wy) + " <= " + brief(up.wy) +
                                 " within " + brief(100.0 * slack) + "%"});
}

inline void run_symmetry(const ExperimentConfig& c, ExperimentReport& report) {
  StageClock clock(report.timings);
  const Nonlinearity f = Nonlinearity::kpp(c.rate);
  const auto mask = build_disc_lattice(c.disc_radius, c.dx);
  const SpeedProfile front = sample_profile(mask, f, DiffusionTensor::identity(),
                                            uniform_angles(c.eigen_directions),
                                            SpeedMethod::eigenvalue, {}, "eigenvalue front speeds");
  clock.lap("eigenvalues");

  const WulffPolygon region = wulff_from_halfplanes(support_cuts(front), c.output_directions);
  const double c_x = front.samples().front().speed;  // angle zero comes first
  const double w_x = region.radial_at({1.0, 0.0});
  const double rel_gap = std::abs(c_x - w_x) / c_x;
  clock.lap("transform");

  report.results = {
      {"front-speed-x", c_x, 0.0},
      {"transform-speed-x", w_x, 0.0},
      {"axis-relative-gap", rel_gap, 0.0},
      {"gap-tolerance", c.front_tolerance, 0.0},
  };
  report.verdicts.push_back(
      {"symmetry-axis-match", rel_gap <= c.front_tolerance,
       "front " + brief(c_x) + " vs transform " + brief(w_x) + " on the axis (" +
           brief(100.0 * rel_gap) + "% apart)"});
  report.profiles.emplace_back("front_speeds", front);
  report.profiles.emplace_back("invasion_speeds",
                               profile_from_radial(region, "transform of the front speeds"));
  report.region = region;
}

inline void run_heat_audit(const ExperimentConfig& c, ExperimentReport& report) {
  StageClock clock(report.timings);
  const std::vector<double> times{c.horizon / 8.0, c.horizon / 4.0, c.horizon / 2.0,
                                  c.horizon};
  const std::vector<Vec2> points{{0.05, 0.05}, {0.5, 0.0},  {-1.0, 0.3}, {1.5, -1.0},
                                 {2.0, 2.0},   {0.0, -2.0}, {3.0, 0.5},  {-2.5, -1.5}};

  const auto free_mask = build_free_plane(1.0, 1.0, c.dx);
  const HeatAuditReport free_audit = heat_bound_audit(free_mask, c.epsilon, times, points);
  clock.lap("free plane");

  const auto perforated = build_holes_domain(c.alpha, c.beta, c.spreading_dx);
  const HeatAuditReport holes_audit = heat_bound_audit(perforated, c.epsilon, times, points);
  clock.lap("perforated");

  const double drift = std::abs(free_audit.C / kFreePlaneAuditC - 1.0);
  report.results = {
      {"free-plane-C", free_audit.C, 0.0},
      {"free-plane-C-reference", kFreePlaneAuditC, 0.0},
      {"free-plane-delta", free_audit.delta, 0.0},
      {"free-plane-violations", static_cast<double>(free_audit.violations), 0.0},
      {"free-plane-samples", static_cast<double>(free_audit.samples), 0.0},
      {"regression-tolerance", c.front_tolerance, 0.0},
      {"perforated-C", holes_audit.C, 0.0},
      {"perforated-delta", holes_audit.delta, 0.0},
      {"perforated-violations", static_cast<double>(holes_audit.violations), 0.0},
      {"perforated-samples", static_cast<double>(holes_audit.samples), 0.0},
  };
  report.verdicts.push_back({"heat-free-plane-fit", free_audit.violations == 0,
                             "fitted bound holds on all " +
                                 std::to_string(free_audit.samples) + " samples"});
  report.verdicts.push_back(
      {"heat-free-plane-regression", drift <= c.front_tolerance,
       "prefactor " + brief(free_audit.C) + " within " + brief(100.0 * drift) +
           "% of the recorded " + brief(kFreePlaneAuditC)});
  report.verdicts.push_back({"heat-perforated-fit", holes_audit.violations == 0,
                             "fitted bound holds on all " +
                                 std::to_string(holes_audit.samples) + " samples"});
  report.audits.emplace_back("free_plane_audit", free_audit);
  report.audits.emplace_back("perforated_audit", holes_audit);
}

}  // namespace detail

// Single-period domain mask for the configured experiment at its base grid
// step. The pipelines build their own measurement windows (often at a
// different resolution); this is the geometry the standalone mask, geodesy
// and speed commands operate on.
inline PeriodicCellMask domain_mask(const ExperimentConfig& c) {
  switch (c.id) {
    case ExperimentId::free_kpp:
    case ExperimentId::anisotropic:
      return build_free_plane(1.0, 1.0, c.dx);
    case ExperimentId::holes_kpp:
    case ExperimentId::heat_audit:
      return build_holes_domain(c.alpha, c.beta, c.dx);
    case ExperimentId::slant_combustion: {
      if (c.alphas.empty())
        throw std::invalid_argument("slant-combustion needs a nonempty alphas sweep");
      const Nonlinearity f = Nonlinearity::combustion(c.ignition, c.sigma * c.sigma);
      const double band_R = c.kappa * construct(f, c.ignition, 0.9, 0.5).R3;
      const double alpha = c.alphas.front();
      return build_slant_domain(alpha, band_R, detail::slant_grid_step(alpha, band_R, c.dx));
    }
    case ExperimentId::monostable_sandwich: {
      const Nonlinearity f_low = Nonlinearity::combustion(0.15, 0.9 * c.sigma * c.sigma);
      const double band_R = c.kappa * construct(f_low).R3;
      return build_slant_domain(c.alpha, band_R,
                                detail::slant_grid_step(c.alpha, band_R, c.dx));
    }
    case ExperimentId::symmetry:
      return build_disc_lattice(c.disc_radius, c.dx);
  }
  throw std::logic_error("unhandled experiment id");
}

// Reaction term the configured experiment propagates. The sandwich reports
// its middle (non-KPP monostable) leg here; its bracket legs are internal.
inline Nonlinearity reaction(const ExperimentConfig& c) {
  switch (c.id) {
    case ExperimentId::slant_combustion:
      return Nonlinearity::combustion(c.ignition, c.sigma * c.sigma);
    case ExperimentId::monostable_sandwich: {
      const double amp = c.sigma * c.sigma;
      return Nonlinearity::monostable(
          [amp](double u) { return amp * u * (1.0 - u) * (u + 0.2); }, 0.2 * amp, 0.64);
    }
    default:
      return Nonlinearity::kpp(c.rate);
  }
}

// Diffusion tensor; only the anisotropic experiment departs from identity.
inline DiffusionTensor diffusion(const ExperimentConfig& c) {
  return c.id == ExperimentId::anisotropic ? DiffusionTensor(c.tensor_a, c.tensor_b)
                                           : DiffusionTensor::identity();
}

// Runs the configured experiment's full measurement pipeline. Deterministic
// for a fixed config: fixed iteration orders, no wall-clock dependence in
// any result (timings are recorded but are not results).
inline ExperimentReport run(const ExperimentConfig& config) {
  ExperimentReport report;
  report.config = config;
  detail::StageClock total(report.timings);
  try {
    switch (config.id) {
      case ExperimentId::free_kpp: detail::run_free_kpp(config, report); break;
      case ExperimentId::anisotropic: detail::run_anisotropic(config, report); break;
      case ExperimentId::holes_kpp: detail::run_holes_kpp(config, report); break;
      case ExperimentId::slant_combustion:
        detail::run_slant_combustion(config, report);
        break;
      case ExperimentId::monostable_sandwich:
        detail::run_monostable_sandwich(config, report);
        break;
      case ExperimentId::symmetry: detail::run_symmetry(config, report); break;
      case ExperimentId::heat_audit: detail::run_heat_audit(config, report); break;
    }
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(to_string(config.id)) + ": " + e.what());
  }
  total.lap("total");
  return report;
}

// ---------------------------------------------------------------------------
// Emission

enum class ReportFormat { csv, json, svg };

namespace detail {

inline std::string serialize_results_csv(const ExperimentReport& report) {
  std::string out = "quantity,value,uncertainty\n";
  for (const QuantityResult& r : report.results) {
    out += r.name;
    out += ',';
    out += format_double(r.value);
    out += ',';
    out += format_double(r.uncertainty);
    out += '\n';
  }
  return out;
}

inline std::string serialize_report_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["experiment"] = to_string(report.config.id);
  j["config"] = report.config.to_json();
  j["results"] = nlohmann::json::array();
  for (const QuantityResult& r : report.results)
    j["results"].push_back({{"name", r.name}, {"value", r.value}, {"uncertainty", r.uncertainty}});
  j["verdicts"] = nlohmann::json::array();
  for (const Verdict& v : report.verdicts)
    j["verdicts"].push_back({{"clause", v.clause}, {"pass", v.pass}, {"detail", v.detail}});
  j["timings"] = nlohmann::json::array();
  for (const StageTiming& t : report.timings)
    j["timings"].push_back({{"stage", t.stage}, {"seconds", t.seconds}});
  j["artifacts"] = report.artifacts;
  j["all_pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace detail

// Writes the report's artifacts into the output directory (the config's by
// default) and returns the file names, which are also recorded in the
// report's manifest. Emission is deterministic: re-emitting the same report
// produces byte-identical files.
inline std::vector<std::string> emit(ExperimentReport& report,
                                     const std::vector<ReportFormat>& formats,
                                     std::string output_dir = {}) {
  if (report.results.empty() && report.verdicts.empty())
    throw std::invalid_argument("cannot emit an empty report");
  if (formats.empty()) throw std::invalid_argument("emit needs at least one format");
  const bool want_csv = std::find(formats.begin(), formats.end(), ReportFormat::csv) !=
                        formats.end();
  const bool want_json = std::find(formats.begin(), formats.end(), ReportFormat::json) !=
                         formats.end();
  const bool want_svg = std::find(formats.begin(), formats.end(), ReportFormat::svg) !=
                        formats.end();
  if (output_dir.empty()) output_dir = report.config.output_dir;
  std::filesystem::create_directories(output_dir);
  const auto path = [&](const std::string& name) {
    return (std::filesystem::path(output_dir) / name).string();
  };

  // The manifest is fixed before anything is written so the JSON report can
  // list every artifact, itself included.
  report.artifacts.clear();
  report.artifacts.push_back("config.txt");
  if (want_csv) {
    report.artifacts.push_back("results.csv");
    for (const auto& [stem, profile] : report.profiles) report.artifacts.push_back(stem + ".csv");
    for (const auto& [stem, m] : report.measurements) report.artifacts.push_back(stem + ".csv");
    if (report.region) report.artifacts.push_back("polygon.csv");
  }
  if (want_json) {
    for (const auto& [stem, profile] : report.profiles)
      report.artifacts.push_back(stem + "_meta.json");
    for (const auto& [stem, audit] : report.audits) report.artifacts.push_back(stem + ".json");
  }
  if (want_svg && report.region && !report.profiles.empty())
    report.artifacts.push_back("polar.svg");
  if (want_json) report.artifacts.push_back("report.json");

  detail::write_file(report.config.serialize(), path("config.txt"));
  if (want_csv) {
    detail::write_file(detail::serialize_results_csv(report), path("results.csv"));
    for (const auto& [stem, profile] : report.profiles)
      save_profile_csv(profile, path(stem + ".csv"));
    for (const auto& [stem, m] : report.measurements)
      save_measurement_csv(m, path(stem + ".csv"));
    if (report.region) save_polygon_csv(*report.region, path("polygon.csv"));
  }
  if (want_json) {
    for (const auto& [stem, profile] : report.profiles)
      save_profile_sidecar_json(profile, path(stem + "_meta.json"));
    for (const auto& [stem, audit] : report.audits) save_audit_json(audit, path(stem + ".json"));
  }
  if (want_svg && report.region && !report.profiles.empty())
    save_polar_svg(report.profiles.front().second, *report.region, path("polar.svg"));
  if (want_json)
    detail::write_file(detail::serialize_report_json(report), path("report.json"));
  return report.artifacts;
}

}  // namespace frontlab

#endif  // FRONTLAB_WORKBENCH_HPP
