#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <vector>

#include "frontlab/dynamics.hpp"
#include "frontlab/geometry.hpp"
#include "frontlab/subsolution.hpp"

using namespace frontlab;

namespace {

const Nonlinearity base_comb = Nonlinearity::combustion(0.25, 1.0);

std::vector<double> field_values(const FieldState& s) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(s.width()) * s.height());
  for (long j = s.j0(); j < s.j0() + s.height(); ++j)
    for (long i = s.i0(); i < s.i0() + s.width(); ++i) v.push_back(s.value(i, j));
  return v;
}

}  // namespace

TEST_CASE("reaction infimum over the matching band", "[subsolution]") {
  // (u-1/4)(1-u) is concave on [0.5, 0.9]; the minimum sits at the right
  // endpoint: f(0.9) = 0.065.
  CHECK(infimum_F(base_comb, 0.5, 0.9) == Catch::Approx(0.065).margin(1e-9));

  // Plateau reaction: the scan returns the plateau height exactly.
  const auto plateau =
      Nonlinearity::monostable_from_table({0.0, 0.2, 0.2, 0.2, 0.2, 0.0}, 0.0, 0.8);
  CHECK(infimum_F(plateau, 0.4, 0.75) == Catch::Approx(0.2).margin(1e-12));

  CHECK_THROWS_AS(infimum_F(base_comb, 0.25, 0.9), std::invalid_argument);  // K = theta
  CHECK_THROWS_AS(infimum_F(base_comb, 0.1, 0.9), std::invalid_argument);   // K < theta
  CHECK_THROWS_AS(infimum_F(base_comb, 0.9, 0.5), std::invalid_argument);   // K > C
}

TEST_CASE("closed-form bump for the reference parameters", "[subsolution]") {
  const auto b = construct(base_comb, 0.25, 0.9, 0.5);
  CHECK(b.F == Catch::Approx(0.065).margin(1e-9));
  CHECK(b.alpha == Catch::Approx(0.065 / 1.4).epsilon(1e-12));
  CHECK(b.c == Catch::Approx(0.0481812).epsilon(1e-5));
  CHECK(b.c_tilde == Catch::Approx(2.0 * b.c).epsilon(1e-15));
  CHECK(b.beta == Catch::Approx(3.0 * b.K).epsilon(1e-12));  // slope matching
  CHECK(b.R1 == Catch::Approx(20.75504).epsilon(1e-5));
  CHECK(b.R2 - b.R1 == Catch::Approx(4.15100).epsilon(1e-5));
  CHECK(b.R3 == Catch::Approx(27.89147).epsilon(1e-5));
  CHECK((b.R1 < b.R2 && b.R2 < b.R3));

  // Profile landmarks and monotonicity.
  CHECK(b.h(0.0) == b.C);
  CHECK(b.h(b.R1) == b.C);
  CHECK(b.h(b.R2) == Catch::Approx(b.K).margin(1e-12));
  CHECK(std::abs(b.h(b.R3)) <= 1e-15);
  CHECK(b.h(b.R3 + 1.0) == 0.0);
  double prev = b.h(0.0);
  for (double r = 0.05; r <= b.R3 + 0.5; r += 0.05) {
    const double cur = b.h(r);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
}

TEST_CASE("bump parameters obey the scaling symmetry", "[subsolution]") {
  const double sigma = 2.5;
  const auto b1 = construct(base_comb, 0.25, 0.9, 0.5);
  const auto b2 =
      construct(Nonlinearity::combustion(0.25, sigma * sigma), 0.25, 0.9, 0.5);
  CHECK(b2.F == Catch::Approx(sigma * sigma * b1.F).epsilon(1e-10));
  CHECK(b2.alpha == Catch::Approx(sigma * sigma * b1.alpha).epsilon(1e-10));
  CHECK(b2.c == Catch::Approx(sigma * b1.c).epsilon(1e-10));
  CHECK(b2.beta == Catch::Approx(b1.beta).epsilon(1e-10));
  CHECK(b2.R1 == Catch::Approx(b1.R1 / sigma).epsilon(1e-10));
  CHECK(b2.R3 == Catch::Approx(b1.R3 / sigma).epsilon(1e-10));
}

TEST_CASE("defaults pick levels inside the admissible wedge", "[subsolution]") {
  const auto b = construct(base_comb);
  CHECK(b.C == Catch::Approx(0.9375));   // (theta + 1 + decay) / 2
  CHECK(b.K == Catch::Approx(0.59375));  // halfway down to ignition
  CHECK(verify(b, b.R1 / 100.0).admissible);
}

TEST_CASE("construction rejects inconsistent inputs", "[subsolution]") {
  CHECK_THROWS_AS(construct(Nonlinearity::kpp(1.0), 0.0, 0.9, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(construct(base_comb, 0.30, 0.9, 0.5), std::invalid_argument);  // wrong theta
  CHECK_THROWS_AS(construct(base_comb, 0.25, 0.9, 0.2), std::invalid_argument);  // K <= theta
  CHECK_THROWS_AS(construct(base_comb, 0.25, 1.0, 0.5), std::invalid_argument);  // C = 1
  CHECK_THROWS_AS(construct(base_comb, 0.25, 0.5, 0.6), std::invalid_argument);  // K > C
}

TEST_CASE("narrow matching band is impractical but not an error", "[subsolution]") {
  const auto b = construct(base_comb, 0.25, 0.501, 0.5);
  CHECK(b.R1 > 200.0);
  CHECK((b.R1 < b.R2 && b.R2 < b.R3));
  CHECK_FALSE(b.practical_for(100.0));
  CHECK(b.practical_for(1000.0));
}

TEST_CASE("verification margins for the reference bump", "[subsolution]") {
  const auto b = construct(base_comb, 0.25, 0.9, 0.5);
  const auto rep = verify(b, b.R1 / 200.0);
  CHECK(rep.admissible);
  CHECK(rep.plateau_margin == Catch::Approx(0.065).margin(1e-12));  // f(C), flat piece
  // Parabola: f(h(r)) - alpha (1 + c_tilde (r - R1)), worst near r = R1.
  CHECK(rep.parabola_margin >= -1e-8);
  CHECK(rep.parabola_margin == Catch::Approx(0.0182).margin(8e-4));
  // Exponential piece: h'' + c_tilde h' cancels exactly; f(h) >= 0 remains.
  CHECK(rep.tail_margin >= -1e-12);
  CHECK(rep.tail_margin <= 1e-12);
  CHECK(rep.level_error <= 1e-12);
  CHECK(rep.slope_error <= 1e-9);

  CHECK_THROWS_AS(verify(b, b.R1 / 50.0), std::invalid_argument);  // step too coarse
}

TEST_CASE("verification catches a detuned tail amplitude", "[subsolution]") {
  auto broken = construct(base_comb, 0.25, 0.9, 0.5);
  broken.beta = broken.K;  // halves the tail slope at R2 and breaks continuity
  const auto rep = verify(broken, broken.R1 / 200.0);
  CHECK_FALSE(rep.admissible);
  CHECK((rep.continuity_error > 1e-3 || rep.slope_error > 1e-3));
}

TEST_CASE("all relations hold across parameter sweeps", "[subsolution]") {
  struct Combo {
    double theta, amplitude, C, K;
  };
  const std::vector<Combo> combos{{0.25, 1.0, 0.9, 0.5},       {0.25, 1.0, 0.8, 0.45},
                                  {0.25, 1.0, 0.95, 0.6},      {0.25, 64.0, 0.9, 0.5},
                                  {0.15, 5.625, 0.8625, 0.50625}};
  for (const auto& combo : combos) {
    const auto f = Nonlinearity::combustion(combo.theta, combo.amplitude);
    const auto b = construct(f, combo.theta, combo.C, combo.K);  // validates residuals
    CHECK(b.beta == Catch::Approx(3.0 * combo.K).epsilon(1e-12));
    CHECK(verify(b, b.R1 / 100.0).admissible);
  }
}

TEST_CASE("planting on the free plane reproduces the profile", "[subsolution]") {
  const auto f8 = Nonlinearity::combustion(0.25, 64.0);  // R3 ~ 3.49, desk scale
  const auto b = construct(f8, 0.25, 0.9, 0.5);
  auto mask = std::make_shared<const PeriodicCellMask>(build_free_plane(1.0, 1.0, 0.1));
  const FieldState state = plant(b, mask, {0.0, 0.0});
  CHECK(state.sup() == Catch::Approx(b.C));
  for (long i : {0L, 27L, 33L}) {
    const Vec2 p = state.cell_center(i, 0);
    CHECK(state.value(i, 0) == Catch::Approx(b.h(p.norm())).margin(1e-14));
  }
  CHECK(state.value(static_cast<long>(b.R3 / 0.1) + 2, 0) == 0.0);
}

TEST_CASE("planted bump never recedes and invades the plane", "[subsolution]") {
  const auto f8 = Nonlinearity::combustion(0.25, 64.0);
  const auto b = construct(f8, 0.25, 0.9, 0.5);
  auto mask = std::make_shared<const PeriodicCellMask>(build_free_plane(1.0, 1.0, 0.1));
  FieldState state = plant(b, mask, {0.0, 0.0});
  const DiffusionTensor A = DiffusionTensor::identity();

  const double dt = stable_dt(*mask, A, f8);
  std::vector<double> before = field_values(state);
  for (int n = 0; n < 200; ++n) {
    state.step(f8, A, dt);
    std::vector<double> after = field_values(state);
    for (std::size_t k = 0; k < after.size(); ++k) {
      if (after[k] < before[k] - 1e-12)
        FAIL("field receded at step " << n << " by " << before[k] - after[k]);
    }
    before = std::move(after);
  }
  SUCCEED("200 steps without any pointwise decrease");

  evolve(state, f8, A, 1.0 - state.time());
  CHECK(state.value(0, 0) > 0.99);
  evolve(state, f8, A, 4.0);
  CHECK(state.value(45, 0) > 0.9);  // level 1 region has outrun the initial disc
}

TEST_CASE("evolved bump dominates its translate", "[subsolution]") {
  const auto f8 = Nonlinearity::combustion(0.25, 64.0);
  const auto b = construct(f8, 0.25, 0.9, 0.5);
  const double tau = 1.0;

  // Free plane, then a slanted corridor wide enough for the moving disc.
  auto free_mask = std::make_shared<const PeriodicCellMask>(build_free_plane(1.0, 1.0, 0.1));
  const double R = b.R3;
  auto slant_mask = std::make_shared<const PeriodicCellMask>(
      build_slant_domain(0.4, R, 3.0 * R / 105.0));

  struct Setup {
    std::shared_ptr<const PeriodicCellMask> mask;
    Vec2 center;
  };
  for (const auto& setup : std::vector<Setup>{{free_mask, {0.0, 0.0}}, {slant_mask, {0.0, 3.0 * R}}}) {
    FieldState state = plant(b, setup.mask, setup.center);
    evolve(state, f8, DiffusionTensor::identity(), tau);
    const Vec2 moved{setup.center.x + b.c * tau, setup.center.y};
    double worst = 1.0;
    for (long j = state.j0(); j < state.j0() + state.height(); ++j)
      for (long i = state.i0(); i < state.i0() + state.width(); ++i) {
        const Vec2 p = state.cell_center(i, j);
        const double r = (p - moved).norm();
        if (r > b.R3 || !state.fluid_cell(i, j)) continue;
        worst = std::min(worst, state.value(i, j) - b.h(r));
      }
    CHECK(worst >= -1e-3);
  }
}

TEST_CASE("planting requires the disc to clear the obstacles", "[subsolution]") {
  const auto f8 = Nonlinearity::combustion(0.25, 64.0);
  const auto b = construct(f8, 0.25, 0.9, 0.5);
  const double R = b.R3;  // domain period matched to the bump support
  auto mask = std::make_shared<const PeriodicCellMask>(
      build_slant_domain(0.4, R, 3.0 * R / 105.0));

  // Corridor axis y = 3R: the support disc exactly spans the free corridor.
  const FieldState ok = plant(b, mask, {0.0, 3.0 * R});
  CHECK(ok.sup() == Catch::Approx(b.C));

  // Center inside the slab band: the disc overlaps obstacle cells.
  CHECK_THROWS_WITH(plant(b, mask, {0.0, 1.5 * R}),
                    Catch::Matchers::ContainsSubstring("obstacle"));
}
