#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frontlab/workbench.hpp"

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

std::filesystem::path fresh_dir(const char* name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

// Quantity table as emitted in results.csv, keyed by name.
std::map<std::string, double> parse_results_csv(const std::string& text) {
  std::map<std::string, double> values;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "quantity,value,uncertainty");
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    REQUIRE(c2 != std::string::npos);
    values[line.substr(0, c1)] = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
  }
  return values;
}

const Verdict& verdict_named(const ExperimentReport& report, const std::string& clause) {
  for (const Verdict& v : report.verdicts)
    if (v.clause == clause) return v;
  FAIL("no verdict named " + clause);
  return report.verdicts.front();
}

}  // namespace

TEST_CASE("experiment names round-trip", "[workbench]") {
  REQUIRE(all_experiments().size() == 7);
  for (ExperimentId id : all_experiments())
    CHECK(experiment_from_string(to_string(id)) == id);
  CHECK_THROWS_WITH(experiment_from_string("interpolation"),
                    ContainsSubstring("unknown experiment"));
}

TEST_CASE("configs serialize and reparse unchanged", "[workbench]") {
  for (ExperimentId id : all_experiments()) {
    const ExperimentConfig c = ExperimentConfig::defaults(id);
    const ExperimentConfig back = ExperimentConfig::parse(c.serialize());
    CHECK(back.serialize() == c.serialize());
  }
}

TEST_CASE("config parsing applies overrides in file order", "[workbench]") {
  const ExperimentConfig c = ExperimentConfig::parse(
      "# comment line\n"
      "experiment = holes-kpp\n"
      "\n"
      "dx = 0.04\n"
      "dx = 0.02\n"
      "alphas = 0.5, 0.25\n");
  CHECK(c.id == ExperimentId::holes_kpp);
  CHECK(c.dx == 0.02);
  REQUIRE(c.alphas.size() == 2);
  CHECK(c.alphas[0] == 0.5);
  CHECK(c.alphas[1] == 0.25);
  CHECK(c.beta == 0.05);  // untouched default
}

TEST_CASE("config parsing rejects malformed input", "[workbench]") {
  CHECK_THROWS_WITH(ExperimentConfig::parse("dx = 0.1\n"),
                    ContainsSubstring("missing the experiment key"));
  CHECK_THROWS_WITH(ExperimentConfig::parse("experiment = free-kpp\nquux = 1\n"),
                    ContainsSubstring("unknown config key"));
  CHECK_THROWS_WITH(ExperimentConfig::parse("experiment = free-kpp\ndx = fast\n"),
                    ContainsSubstring("not a number"));
  CHECK_THROWS_WITH(ExperimentConfig::parse("experiment = free-kpp\neigen_directions = 4.5\n"),
                    ContainsSubstring("not an integer"));
  CHECK_THROWS_WITH(ExperimentConfig::parse("experiment = free-kpp\nno equals sign\n"),
                    ContainsSubstring("key=value"));
  CHECK_THROWS_WITH(ExperimentConfig::parse("experiment = slant-combustion\nalphas = \n"),
                    ContainsSubstring("at least one value"));
  CHECK_THROWS_WITH(ExperimentConfig::load("/nonexistent/frontlab.cfg"),
                    ContainsSubstring("cannot open config file"));
}

TEST_CASE("run reports failures with experiment context", "[workbench]") {
  ExperimentConfig c = ExperimentConfig::defaults(ExperimentId::slant_combustion);
  c.alphas.clear();
  CHECK_THROWS_WITH(run(c), ContainsSubstring("slant-combustion:"));
}

TEST_CASE("anisotropic run matches the inverse-form speeds", "[workbench]") {
  const ExperimentReport report = run(ExperimentConfig::defaults(ExperimentId::anisotropic));
  REQUIRE(report.verdicts.size() == 2);
  CHECK(report.all_pass());
  CHECK(report.region.has_value());
  REQUIRE(report.profiles.size() == 3);
  REQUIRE(report.find("diagonal-gap") != nullptr);
  CHECK(report.find("diagonal-gap")->value == Approx(0.63246).margin(5e-3));
  CHECK(report.timings.back().stage == "total");
  for (const StageTiming& t : report.timings) CHECK(t.seconds >= 0.0);
}

TEST_CASE("symmetry run agrees with its own transform on the axis", "[workbench]") {
  const ExperimentReport report = run(ExperimentConfig::defaults(ExperimentId::symmetry));
  CHECK(report.all_pass());
  REQUIRE(report.find("front-speed-x") != nullptr);
  CHECK(report.find("front-speed-x")->value == Approx(1.6484).margin(5e-3));
  CHECK(verdict_named(report, "symmetry-axis-match").pass);
}

TEST_CASE("emission writes a reproducible bundle", "[workbench]") {
  ExperimentConfig config = ExperimentConfig::defaults(ExperimentId::anisotropic);
  const auto dir_a = fresh_dir("frontlab_wb_emit_a");
  const auto dir_b = fresh_dir("frontlab_wb_emit_b");
  config.output_dir = dir_a.string();
  ExperimentReport report = run(config);

  const std::vector<ReportFormat> all{ReportFormat::csv, ReportFormat::json,
                                      ReportFormat::svg};
  const std::vector<std::string> names = emit(report, all);
  CHECK(names == report.artifacts);
  emit(report, all, dir_b.string());
  for (const std::string& name : names) {
    CHECK(std::filesystem::exists(dir_a / name));
    CHECK(slurp(dir_a / name) == slurp(dir_b / name));
  }

  // The JSON summary lists every artifact, itself included.
  const auto summary = nlohmann::json::parse(slurp(dir_a / "report.json"));
  CHECK(summary.at("schema") == 1);
  CHECK(summary.at("experiment") == "anisotropic");
  CHECK(summary.at("all_pass") == true);
  const auto listed = summary.at("artifacts").get<std::vector<std::string>>();
  CHECK(listed == names);
  CHECK(std::find(listed.begin(), listed.end(), "report.json") != listed.end());

  // The config echo reproduces the exact configuration.
  CHECK(ExperimentConfig::parse(slurp(dir_a / "config.txt")).serialize() ==
        config.serialize());

  std::filesystem::remove_all(dir_a);
  std::filesystem::remove_all(dir_b);
}

TEST_CASE("verdicts recompute from the emitted tables alone", "[workbench]") {
  ExperimentConfig config = ExperimentConfig::defaults(ExperimentId::anisotropic);
  const auto dir = fresh_dir("frontlab_wb_recompute");
  config.output_dir = dir.string();
  ExperimentReport report = run(config);
  emit(report, {ReportFormat::csv});

  const auto q = parse_results_csv(slurp(dir / "results.csv"));
  const bool match_pass = q.at("transform-max-mismatch") <= q.at("match-tolerance");
  const bool gap_pass =
      std::abs(q.at("diagonal-gap") / q.at("diagonal-gap-expected") - 1.0) <=
      q.at("match-tolerance");
  CHECK(match_pass == verdict_named(report, "anisotropic-transform-match").pass);
  CHECK(gap_pass == verdict_named(report, "anisotropic-diagonal-gap").pass);
  std::filesystem::remove_all(dir);
}

TEST_CASE("emission honors the requested formats", "[workbench]") {
  ExperimentConfig config = ExperimentConfig::defaults(ExperimentId::symmetry);
  const auto dir = fresh_dir("frontlab_wb_formats");
  config.output_dir = dir.string();
  ExperimentReport report = run(config);

  const auto svg_only = emit(report, {ReportFormat::svg});
  CHECK(svg_only == std::vector<std::string>{"config.txt", "polar.svg"});
  const auto csv_only = emit(report, {ReportFormat::csv});
  CHECK(!std::filesystem::exists(dir / "report.json"));
  CHECK(std::filesystem::exists(dir / "results.csv"));
  CHECK(std::find(csv_only.begin(), csv_only.end(), "polygon.csv") != csv_only.end());

  ExperimentReport empty;
  empty.config = config;
  CHECK_THROWS_WITH(emit(empty, {ReportFormat::csv}), ContainsSubstring("empty report"));
  CHECK_THROWS_WITH(emit(report, {}), ContainsSubstring("at least one format"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("heat audit run reproduces the recorded prefactor", "[workbench][slow]") {
  const ExperimentReport report = run(ExperimentConfig::defaults(ExperimentId::heat_audit));
  CHECK(report.all_pass());
  CHECK(report.find("free-plane-violations")->value == 0.0);
  CHECK(report.find("perforated-violations")->value == 0.0);
  CHECK(report.find("free-plane-C")->value ==
        Approx(kFreePlaneAuditC).epsilon(report.config.front_tolerance));
  REQUIRE(report.audits.size() == 2);
}

TEST_CASE("free plane run meets both speed tolerances", "[workbench][slow]") {
  const ExperimentReport report = run(ExperimentConfig::defaults(ExperimentId::free_kpp));
  CHECK(report.all_pass());
  CHECK(report.find("front-speed-max")->value == Approx(2.0).epsilon(1e-9));
  CHECK(report.find("front-speed-min")->value == Approx(2.0).epsilon(1e-9));
  CHECK(report.find("invasion-speed-min")->value > 1.9);
  REQUIRE(report.measurements.size() == 1);
  CHECK(report.measurements.front().second.radii_nondecreasing(0, 1e-9));
}

TEST_CASE("holes run certifies the cone bound but not the strict gap", "[workbench][slow]") {
  const ExperimentReport report = run(ExperimentConfig::defaults(ExperimentId::holes_kpp));
  CHECK(verdict_named(report, "holes-cone-ceiling").pass);
  CHECK(verdict_named(report, "holes-invasion-bound").pass);
  // At this porosity the eigenvalue speed sits below twice the diagonal
  // cone coefficient, so the strict-gap clause reads false; the measured
  // numbers are pinned by the deterministic pipeline.
  CHECK_FALSE(verdict_named(report, "holes-speed-gap").pass);
  CHECK(report.find("front-speed-x")->value == Approx(1.2713).margin(2e-3));
  CHECK(report.find("cone-coefficient-diagonal")->value == Approx(0.7399).margin(2e-3));
}

TEST_CASE("a reduced slant sweep exercises the measurement mechanics",
          "[workbench][slow]") {
  ExperimentConfig config = ExperimentConfig::defaults(ExperimentId::slant_combustion);
  config.alphas = {0.4};
  config.kappa = 1.0;  // one bump support per band keeps the windows small
  const ExperimentReport report = run(config);
  CHECK(verdict_named(report, "slant-horizontal-floor").pass);
  CHECK(verdict_named(report, "slant-vertical-ceiling").pass);
  REQUIRE(report.measurements.size() == 2);
  REQUIRE(report.find("invasion-speed-x[0.4]") != nullptr);
  CHECK(report.find("invasion-speed-x[0.4]")->value >
        0.95 * report.find("certified-speed")->value);
}
