// Demonstrates the central dichotomy on the perforated chessboard domain:
// fronts thread a grid of narrow streets whose two widths differ, so the
// directional front-speed profile is far from constant — and then its
// transform, the radial function of the spreading set, must dip strictly
// below it somewhere: a compactly supported ignition invades a region
// strictly inside the Wulff shape of the front speeds.

#include <cstdio>
#include <variant>
#include <vector>

#include "frontlab/fronts.hpp"
#include "frontlab/geodesy.hpp"
#include "frontlab/wulff.hpp"

int main() {
  using namespace frontlab;

  // Wide corridors (alpha close to 1) with thin necks (small beta) make the
  // contrast stark; demo resolution keeps the eigenvalue sweep quick.
  const double alpha = 0.9, beta = 0.05, dx = 0.02;
  const PeriodicCellMask mask = build_holes_domain(alpha, beta, dx);
  const Nonlinearity f = Nonlinearity::kpp(1.0);

  const int directions = 16;
  std::vector<double> angles(directions);
  for (int i = 0; i < directions; ++i) angles[i] = 2.0 * kPi * i / directions;
  const SpeedProfile front_speeds =
      sample_profile(mask, f, DiffusionTensor::identity(), angles, SpeedMethod::eigenvalue,
                     {}, "front speeds on the chessboard domain");
  const SpeedSample* fastest = &front_speeds.samples().front();
  for (const SpeedSample& s : front_speeds.samples())
    if (s.speed > fastest->speed) fastest = &s;
  std::printf("front speeds range from %.6f (theta=%.4f) to %.6f (theta=%.4f)\n",
              front_speeds.argmin().speed, front_speeds.argmin().theta, fastest->speed,
              fastest->theta);

  // Transform of the profile = radial function of the spreading set,
  // sampled at the same directions so the two profiles compare pointwise.
  const WulffPolygon region = fg_transform(front_speeds, 256);
  std::vector<SpeedSample> radial;
  for (const SpeedSample& s : front_speeds.samples())
    radial.push_back({s.theta, s.e, region.radial_at(s.e), 0.0, SpeedMethod::closed_form});
  const SpeedProfile invasion_speeds(std::move(radial), "transform of the front speeds");

  const DichotomyResult verdict = constancy_dichotomy(front_speeds, invasion_speeds, 1e-6);
  if (const auto* witness = std::get_if<SpeedGapWitness>(&verdict)) {
    std::printf("invasion lags the front by %.6f along (%.4f, %.4f):\n", witness->gap,
                witness->e.x, witness->e.y);
    std::printf("the spreading set is strictly inside the Wulff shape\n");
  } else {
    std::printf("front speeds constant at this resolution; no gap detected\n");
    return 1;
  }

  // The mechanism: diagonal geodesics detour through the necks, so the
  // normalized obstruction coefficient sits well below 1 and caps the
  // diagonal invasion speed independently of the profile.
  const ObstructionCoefficient cone = cone_coefficient(mask, Vec2{1.0, 1.0}.normalized(), 8);
  std::printf("diagonal obstruction coefficient C(e_d) = %.6f, invasion bound %.6f\n",
              cone.value, speed_upper_bound(cone, f));
  return 0;
}
