#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>
#include <vector>

#include "frontlab/geodesy.hpp"
#include "frontlab/geometry.hpp"

using namespace frontlab;

namespace {

// Exhaustive relaxation (Bellman-Ford) over the same graph the Dijkstra
// solver uses: same stencil, same supercover admissibility, same weights.
std::vector<double> relax_oracle(const PeriodicCellMask& mask, std::pair<long, long> source,
                                 const CellWindow& win, StencilOrder order) {
  const std::size_t n = static_cast<std::size_t>(win.w) * win.h;
  std::vector<std::uint8_t> fluid(n);
  for (int j = 0; j < win.h; ++j)
    for (int i = 0; i < win.w; ++i)
      fluid[static_cast<std::size_t>(j) * win.w + i] =
          mask.fluid_wrapped(win.i0 + i, win.j0 + j) ? 1 : 0;
  const auto steps = detail::stencil_steps(order);
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  dist[static_cast<std::size_t>(source.second - win.j0) * win.w + (source.first - win.i0)] = 0.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < win.h; ++j)
      for (int i = 0; i < win.w; ++i) {
        const std::size_t k = static_cast<std::size_t>(j) * win.w + i;
        if (!std::isfinite(dist[k])) continue;
        for (const auto& s : steps) {
          const int ni = i + s.di, nj = j + s.dj;
          if (ni < 0 || ni >= win.w || nj < 0 || nj >= win.h) continue;
          const std::size_t nk = static_cast<std::size_t>(nj) * win.w + ni;
          if (!fluid[nk]) continue;
          bool open = true;
          for (int c = 0; c < s.cover_count; ++c) {
            const int mi = i + s.cover[c][0], mj = j + s.cover[c][1];
            if (mi < 0 || mi >= win.w || mj < 0 || mj >= win.h ||
                !fluid[static_cast<std::size_t>(mj) * win.w + mi]) {
              open = false;
              break;
            }
          }
          if (!open) continue;
          const double nd = dist[k] + s.unit_len * mask.dx();
          if (nd < dist[nk]) {
            dist[nk] = nd;
            changed = true;
          }
        }
      }
  }
  return dist;
}

// 2x2-periodic cell with a 1 x 0.5 wall; tiles into a field of staggered
// obstacles with 1-wide gaps.
PeriodicCellMask wall_mask() {
  return PeriodicCellMask::from_predicate(2.0, 2.0, 0.1, [](double x, double y) {
    return !(x >= 0.5 && x <= 1.5 && y >= 0.75 && y <= 1.25);
  });
}

}  // namespace

TEST_CASE("free-plane distances are Euclidean up to the stencil error", "[geodesy]") {
  const auto mask = build_free_plane(1.0, 1.0, 0.1);
  for (StencilOrder order : {StencilOrder::eight, StencilOrder::sixteen}) {
    const GeodesicField field(mask, {0, 0}, 5, order);
    const double d = field.distance_to({3.0, 4.0});
    CHECK(d >= 5.0 - 1e-12);
    CHECK(d <= 5.0 * (1.0 + metric_error(order)));

    // Full-window ratio envelope (targets at least one period away).
    const GeodesicField near(mask, {0, 0}, 4, order);
    for (long j = -40; j < 50; ++j)
      for (long i = -40; i < 50; ++i) {
        const Vec2 delta = near.cell_center(i, j) - near.cell_center(0, 0);
        const double euclid = delta.norm();
        if (euclid < 1.0) continue;
        const double ratio = near.distance_cell(i, j) / euclid;
        if (ratio < 1.0 - 1e-12 || ratio > 1.0 + metric_error(order)) {
          FAIL("ratio " << ratio << " out of envelope at (" << i << "," << j << ")");
        }
      }
  }
  SUCCEED("ratio envelope holds for both stencils");
}

TEST_CASE("walled domain matches the exhaustive relaxation oracle", "[geodesy]") {
  const auto mask = wall_mask();
  const CellWindow window{-40, -40, 100, 100};  // 5x5 periods, 10^4 nodes
  for (StencilOrder order : {StencilOrder::eight, StencilOrder::sixteen}) {
    const GeodesicField field(mask, {0, 0}, window, order);
    const auto oracle = relax_oracle(mask, {0, 0}, window, order);
    for (int j = 0; j < window.h; ++j)
      for (int i = 0; i < window.w; ++i) {
        const double a = field.distance_cell(window.i0 + i, window.j0 + j);
        const double b = oracle[static_cast<std::size_t>(j) * window.w + i];
        if (std::isfinite(a) || std::isfinite(b)) {
          if (a != b) FAIL("mismatch vs oracle at (" << i << "," << j << "): " << a << " vs " << b);
        }
      }
  }
  SUCCEED("Dijkstra equals the relaxation oracle on both stencils");
}

TEST_CASE("graph metric is symmetric and triangular", "[geodesy]") {
  const auto mask = wall_mask();
  const CellWindow window{-40, -40, 100, 100};
  const GeodesicField from_a(mask, {0, 0}, window);
  const GeodesicField from_b(mask, {7, 13}, window);
  const double dab = from_a.distance_cell(7, 13);
  const double dba = from_b.distance_cell(0, 0);
  CHECK(dab == Catch::Approx(dba).epsilon(1e-12));

  std::mt19937 rng(99);
  std::uniform_int_distribution<long> pick(-35, 55);
  int checked = 0;
  while (checked < 25) {
    const long xi = pick(rng), xj = pick(rng);
    if (!mask.fluid_wrapped(xi, xj)) continue;
    const double via = from_a.distance_cell(7, 13) + from_b.distance_cell(xi, xj);
    const double direct = from_a.distance_cell(xi, xj);
    if (std::isfinite(direct) && std::isfinite(via)) CHECK(direct <= via + 1e-9);
    ++checked;
  }
}

TEST_CASE("distances are invariant under lattice shifts", "[geodesy]") {
  const auto mask = wall_mask();
  const CellWindow base{-40, -40, 100, 100};
  const GeodesicField origin(mask, {0, 0}, base);
  const CellWindow shifted{base.i0 + mask.nx(), base.j0 + mask.ny(), base.w, base.h};
  const GeodesicField moved(mask, {mask.nx(), mask.ny()}, shifted);
  for (long j = -30; j < 40; j += 7)
    for (long i = -30; i < 40; i += 7)
      CHECK(origin.distance_cell(i, j) == moved.distance_cell(i + mask.nx(), j + mask.ny()));
}

TEST_CASE("holes domain stretches diagonal distances", "[geodesy]") {
  const auto mask = build_holes_domain(0.9, 0.05, 0.02);
  const CellWindow window = CellWindow::from_lengths(mask, -1.5, 9.5, -1.5, 9.5);
  const GeodesicField field(mask, {0, 0}, window);
  for (int n : {2, 4, 8}) {
    const double d = field.distance_to({static_cast<double>(n), static_cast<double>(n)});
    CHECK(d >= 1.7 * n);        // 2 n (alpha - beta) detour bound
    CHECK(d <= 2.3 * n);        // sanity: the L-shaped channel route exists
  }
}

TEST_CASE("geodesic solver validates sources", "[geodesy]") {
  const auto holes = build_holes_domain(0.9, 0.05, 0.02);
  CHECK_THROWS_AS(GeodesicField(holes, {25, 25}, 2), std::invalid_argument);  // obstacle
  const CellWindow window{0, 0, 10, 10};
  CHECK_THROWS_AS(GeodesicField(holes, {40, 40}, window), std::invalid_argument);  // outside
}

TEST_CASE("nearest fluid cell snaps out of obstacles", "[geodesy]") {
  const auto mask = build_holes_domain(0.9, 0.05, 0.02);
  const auto cell = nearest_fluid_cell(mask, {0.5, 0.5}, 40);
  CHECK(mask.fluid_wrapped(cell.first, cell.second));
  const double d = std::hypot((cell.first + 0.5) * 0.02 - 0.5, (cell.second + 0.5) * 0.02 - 0.5);
  CHECK(d == Catch::Approx(0.41).margin(0.03));  // hole half-width 0.4 plus snap

  CHECK_THROWS_AS(nearest_fluid_cell(mask, {0.5, 0.5}, 2), std::runtime_error);
}

TEST_CASE("free-plane obstruction coefficient is one", "[geodesy]") {
  const auto mask = build_free_plane(1.0, 1.0, 0.05);
  const Vec2 e = Vec2::unit(kPi / 6.0);
  for (StencilOrder order : {StencilOrder::eight, StencilOrder::sixteen}) {
    const auto C = cone_coefficient(mask, e, 8, order);
    CHECK_FALSE(C.unreachable);
    CHECK(C.value <= 1.0 + metric_error(order));
    CHECK(C.value >= 1.0 / (1.0 + metric_error(order)) - 0.01);
    CHECK(C.lambda_min == Catch::Approx(4.0));
    CHECK(C.lambda_max == Catch::Approx(8.0));
  }
}

TEST_CASE("holes domain obstructs the diagonal", "[geodesy]") {
  const auto mask = build_holes_domain(0.9, 0.05, 0.02);
  const auto C = cone_coefficient(mask, Vec2{1.0, 1.0}.normalized(), 8);
  const double bound = 1.0 / (std::sqrt(2.0) * (0.9 - 0.05));  // 0.8319
  CHECK(C.value <= bound + metric_error(StencilOrder::sixteen));
  CHECK(C.value >= 0.5);  // the channel route keeps the diagonal reachable
  CHECK(C.spread < 0.2);
}

TEST_CASE("obstruction coefficient validates its inputs", "[geodesy]") {
  const auto mask = build_free_plane(1.0, 1.0, 0.1);
  CHECK_THROWS_AS(cone_coefficient(mask, {1.0, 1.0}, 8), std::invalid_argument);
  CHECK_THROWS_AS(cone_coefficient(mask, {1.0, 0.0}, 3), std::invalid_argument);
}

TEST_CASE("slant domain obstruction collapses along e_y", "[geodesy][slow]") {
  const double alpha = 0.1, R = 10.0;  // 30-periodic; slab drift per crossing ~ R/alpha
  const auto mask = build_slant_domain(alpha, R, 0.1);
  CellWindow window = CellWindow::from_lengths(mask, -30.0, 200.0, -15.0, 135.0);
  const auto C = cone_coefficient(mask, {0.0, 1.0}, 4, StencilOrder::sixteen, &window);
  CHECK_FALSE(C.unreachable);
  CHECK(C.value <= 3.0 * alpha * (1.0 + metric_error(StencilOrder::sixteen)));
  CHECK(C.value >= 0.12);  // staircase route through the slanted gaps is usable
}

TEST_CASE("geodesic speed bound composes coefficient and reaction", "[geodesy]") {
  ObstructionCoefficient unit{{1.0, 0.0}, 1.0, 4.0, 8.0, 0.0, false};
  CHECK(speed_upper_bound(unit, Nonlinearity::kpp(1.0)) == Catch::Approx(2.0).margin(1e-9));

  const auto comb = Nonlinearity::combustion(0.25, 1.0);
  const double m = comb.max_slope_ratio();
  ObstructionCoefficient c03{{0.0, 1.0}, 0.3, 4.0, 8.0, 0.0, false};
  CHECK(speed_upper_bound(c03, comb) == Catch::Approx(0.6 * std::sqrt(m)).margin(1e-9));

  ObstructionCoefficient blocked{{0.0, 1.0}, 0.0, 4.0, 8.0, 0.0, true};
  CHECK(speed_upper_bound(blocked, comb) == 0.0);

  // Monotone in the coefficient and in max f(u)/u.
  ObstructionCoefficient c05 = c03;
  c05.value = 0.5;
  CHECK(speed_upper_bound(c05, comb) > speed_upper_bound(c03, comb));
  CHECK(speed_upper_bound(c03, Nonlinearity::kpp(2.0)) >
        speed_upper_bound(c03, Nonlinearity::kpp(1.0)));
}

TEST_CASE("heat kernel bound fits cleanly on the free plane", "[geodesy]") {
  const auto mask = build_free_plane(1.0, 1.0, 0.1);
  const std::vector<double> times{0.5, 1.0, 2.0, 4.0};
  const std::vector<Vec2> samples{{0.05, 0.05}, {0.5, 0.0},  {-1.0, 0.3}, {1.5, -1.0},
                                  {2.0, 2.0},   {0.0, -2.0}, {3.0, 0.5},  {-2.5, -1.5}};
  const auto report = heat_bound_audit(mask, 0.5, times, samples);
  CHECK(report.violations == 0);
  CHECK(report.samples == 32);
  // Late-time fit tracks the exact kernel peak 1/(4 pi t) at t_median = 2.
  CHECK(report.C == Catch::Approx(1.0 / (8.0 * kPi)).epsilon(0.15));
  CHECK(report.delta >= 0.0);
  CHECK(report.delta < 5.0);
}

TEST_CASE("heat kernel bound fits cleanly on the holes domain", "[geodesy]") {
  const auto mask = build_holes_domain(0.9, 0.05, 0.05);
  const std::vector<double> times{0.5, 1.0, 2.0, 4.0};
  const std::vector<Vec2> samples{{0.0, 0.0}, {1.0, 0.0},  {0.0, 1.0},  {1.0, 1.0},
                                  {2.0, 0.0}, {0.0, -2.0}, {-1.0, 1.0}, {0.5, 0.5}};
  const auto report = heat_bound_audit(mask, 0.5, times, samples);
  CHECK(report.violations == 0);
  CHECK(report.C > 0.0);
  // (0.5, 0.5) sits in the hole and is skipped: 7 usable points x 4 times.
  CHECK(report.samples == 28);
}

TEST_CASE("heat kernel audit rejects invalid setups", "[geodesy]") {
  const auto mask = build_free_plane(1.0, 1.0, 0.1);
  const std::vector<Vec2> samples{{0.5, 0.5}};
  CHECK_THROWS_AS(heat_bound_audit(mask, 0.0, {1.0}, samples), std::invalid_argument);
  CHECK_THROWS_AS(heat_bound_audit(mask, 0.5, {0.001}, samples), std::invalid_argument);
  CHECK_THROWS_AS(heat_bound_audit(mask, 0.5, {}, samples), std::invalid_argument);
}
