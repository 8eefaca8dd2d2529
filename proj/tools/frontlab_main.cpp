// Command-line front for the laboratory. Six verbs cover the standalone
// building blocks (mask, geodesy, speed, wulff, subsolution) and the packaged
// experiments (experiment list / experiment run). Every verb reads the same
// flat key=value configuration: an optional --config file first, then
// positional key=value overrides in order, later assignments winning.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frontlab/io.hpp"
#include "frontlab/workbench.hpp"

namespace {

using namespace frontlab;

// Routes defaults, the optional config file and command-line overrides
// through the one file parser, so later assignments win and unknown keys are
// rejected identically everywhere. A null fallback requires the input to
// name the experiment itself.
ExperimentConfig assemble_config(const std::string& config_path,
                                 const std::vector<std::string>& overrides,
                                 const char* fallback_experiment) {
  std::string text;
  if (fallback_experiment != nullptr)
    text += std::string("experiment=") + fallback_experiment + "\n";
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config file: " + config_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text += buffer.str();
    if (!text.empty() && text.back() != '\n') text += '\n';
  }
  for (const std::string& line : overrides) text += line + "\n";
  return ExperimentConfig::parse(text);
}

std::string output_path(const ExperimentConfig& c, const char* name) {
  std::filesystem::create_directories(c.output_dir);
  return (std::filesystem::path(c.output_dir) / name).string();
}

std::vector<double> uniform_angles(int n) {
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) angles[static_cast<std::size_t>(i)] = 2.0 * kPi * i / n;
  return angles;
}

// Cheapest exact route for the configured domain. Combustion and monostable
// terms have no linearized profile; their speeds come from the experiment
// pipelines instead.
SpeedMethod profile_method(const PeriodicCellMask& mask, const Nonlinearity& f) {
  if (!f.is_kpp() || !f.has_linear_rate())
    throw std::runtime_error(
        "speed profiles need a KPP reaction; use 'experiment run' for combustion or "
        "monostable terms");
  return mask.obstacle_count() == 0 ? SpeedMethod::closed_form : SpeedMethod::eigenvalue;
}

SpeedProfile sample_for(const ExperimentConfig& c, const PeriodicCellMask& mask) {
  const Nonlinearity f = reaction(c);
  const SpeedMethod method = profile_method(mask, f);
  const int n =
      method == SpeedMethod::closed_form ? c.profile_directions : c.eigen_directions;
  return sample_profile(mask, f, diffusion(c), uniform_angles(n), method, {},
                        std::string("front speeds, ") + to_string(c.id));
}

int cmd_mask(const ExperimentConfig& c) {
  const PeriodicCellMask mask = domain_mask(c);
  const std::string path = output_path(c, "mask.txt");
  save_mask(mask, path);
  const double cells = static_cast<double>(mask.nx()) * mask.ny();
  std::printf("%s: %dx%d cells over period %g x %g, fluid fraction %.4f -> %s\n",
              to_string(c.id), mask.nx(), mask.ny(), mask.L1(), mask.L2(),
              1.0 - static_cast<double>(mask.obstacle_count()) / cells, path.c_str());
  return 0;
}

int cmd_geodesy(const ExperimentConfig& c) {
  const PeriodicCellMask mask = domain_mask(c);
  const auto source = nearest_fluid_cell(mask, {0.0, 0.0}, 2 * std::max(mask.nx(), mask.ny()));
  const auto window = CellWindow::from_lengths(mask, -2.0 * mask.L1(), 2.0 * mask.L1(),
                                               -2.0 * mask.L2(), 2.0 * mask.L2());
  const GeodesicField field(mask, source, window, StencilOrder::sixteen);
  const std::string path = output_path(c, "distances.csv");
  save_distance_csv(field, path);
  std::printf("%s: distances from cell (%ld, %ld) over a %dx%d window -> %s\n",
              to_string(c.id), source.first, source.second, window.w, window.h, path.c_str());
  return 0;
}

int cmd_speed(const ExperimentConfig& c) {
  const PeriodicCellMask mask = domain_mask(c);
  const SpeedProfile profile = sample_for(c, mask);
  const std::string path = output_path(c, "profile.csv");
  save_profile_csv(profile, path);
  save_profile_sidecar_json(profile, output_path(c, "profile_meta.json"));
  const SpeedSample& slowest = profile.argmin();
  std::printf("%s: %zu directions via %s, min speed %.6f at theta=%.4f -> %s\n",
              to_string(c.id), profile.size(), to_string(slowest.method), slowest.speed,
              slowest.theta, path.c_str());
  return 0;
}

int cmd_wulff(const ExperimentConfig& c) {
  const PeriodicCellMask mask = domain_mask(c);
  const SpeedProfile profile = sample_for(c, mask);
  const WulffPolygon region = fg_transform(profile, c.output_directions);
  const std::string path = output_path(c, "polygon.csv");
  save_polygon_csv(region, path);
  save_polar_svg(profile, region, output_path(c, "polar.svg"));
  std::printf("%s: spreading polygon with %zu vertices, radius %.6f along e_x -> %s\n",
              to_string(c.id), region.vertices().size(), region.radial_at({1.0, 0.0}),
              path.c_str());
  return 0;
}

int cmd_subsolution(const ExperimentConfig& c) {
  const Nonlinearity f = Nonlinearity::combustion(c.ignition, c.sigma * c.sigma);
  const SubsolutionBump bump = construct(f);
  const SubsolutionReport report = verify(bump, 1e-3);
  save_bump_json(bump, output_path(c, "bump.json"));
  save_bump_profile_csv(bump, bump.R3 / 256.0, output_path(c, "bump_profile.csv"));
  std::printf("combustion(theta=%g, amplitude=%g): certified speed %.6f, support radius "
              "%.6f, %s\n",
              c.ignition, c.sigma * c.sigma, bump.c, bump.R3,
              report.admissible ? "admissible" : "NOT admissible");
  return report.admissible ? 0 : 1;
}

int cmd_experiment_run(const ExperimentConfig& c) {
  ExperimentReport report = run(c);
  for (const Verdict& v : report.verdicts)
    std::printf("[%s] %s: %s\n", v.pass ? "pass" : "FAIL", v.clause.c_str(),
                v.detail.c_str());
  for (const QuantityResult& q : report.results) {
    if (q.uncertainty > 0.0)
      std::printf("  %-34s %.6f +- %.6f\n", q.name.c_str(), q.value, q.uncertainty);
    else
      std::printf("  %-34s %.6f\n", q.name.c_str(), q.value);
  }
  const auto files =
      emit(report, {ReportFormat::csv, ReportFormat::json, ReportFormat::svg});
  const double total = report.timings.empty() ? 0.0 : report.timings.back().seconds;
  std::printf("%zu files in %s (%.1f s)\n", files.size(), c.output_dir.c_str(), total);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for front propagation in periodic perforated domains"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::function<int()> action;

  struct Verb {
    const char* name;
    const char* help;
    int (*fn)(const ExperimentConfig&);
    const char* fallback;  // experiment assumed when none is named
  };
  // Only one subcommand parses per invocation, so all verbs can share the
  // config/override storage.
  const std::vector<Verb> verbs = {
      {"mask", "rasterize the experiment domain and write mask.txt", &cmd_mask, "free-kpp"},
      {"geodesy", "compute a geodesic distance field and write distances.csv", &cmd_geodesy,
       "free-kpp"},
      {"speed", "sample the directional front-speed profile and write profile.csv",
       &cmd_speed, "free-kpp"},
      {"wulff", "build the spreading polygon and write polygon.csv plus polar.svg",
       &cmd_wulff, "free-kpp"},
      {"subsolution", "construct and verify the certified bump, write bump.json",
       &cmd_subsolution, "slant-combustion"},
  };
  for (const Verb& verb : verbs) {
    CLI::App* sub = app.add_subcommand(verb.name, verb.help);
    sub->add_option("--config", config_path, "key=value config file");
    sub->add_option("overrides", overrides, "key=value overrides, applied in order");
    sub->callback([&, fn = verb.fn, fallback = verb.fallback] {
      action = [&, fn, fallback] {
        return fn(assemble_config(config_path, overrides, fallback));
      };
    });
  }

  CLI::App* experiment =
      app.add_subcommand("experiment", "drive a packaged experiment end to end");
  experiment->require_subcommand(1);
  CLI::App* list = experiment->add_subcommand("list", "enumerate the packaged experiments");
  list->callback([&] {
    action = [] {
      for (ExperimentId id : all_experiments()) std::printf("%s\n", to_string(id));
      return 0;
    };
  });
  CLI::App* run_cmd = experiment->add_subcommand(
      "run", "run one experiment, write its reports, exit 0 iff every verdict passes");
  run_cmd->add_option("--config", config_path, "key=value config file");
  run_cmd->add_option("overrides", overrides,
                      "key=value overrides, applied in order (must name the experiment "
                      "unless the config file does)");
  run_cmd->callback([&] {
    action = [&] { return cmd_experiment_run(assemble_config(config_path, overrides, nullptr)); };
  });

  CLI11_PARSE(app, argc, argv);
  try {
    return action();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "frontlab: %s\n", e.what());
    return 2;
  }
}
