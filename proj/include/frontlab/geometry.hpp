// Rasterized periodic perforated domains: the periodicity-cell mask type,
// builders for the example families (free plane, holes, slanted slabs, disc
// lattice), connectivity and symmetry checks, and the PMASK2 text format.
#ifndef FRONTLAB_GEOMETRY_HPP
#define FRONTLAB_GEOMETRY_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frontlab/grid.hpp"

namespace frontlab {

namespace detail {

// Mathematical (always non-negative) remainder.
inline int wrap_index(long i, int n) {
  const long m = i % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

// round(L/dx), rejecting steps that do not divide the period to 1e-9
// relative accuracy.
inline int cells_per_period(double L, double dx, const char* axis) {
  const double q = L / dx;
  const int n = static_cast<int>(std::lround(q));
  if (n < 1 || std::abs(n * dx - L) > 1e-9 * L) {
    throw std::invalid_argument(std::string("grid step does not divide the ") + axis +
                                " period (" + std::to_string(dx) + " vs " + std::to_string(L) + ")");
  }
  return n;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

// One periodicity cell of a periodic perforated plane, rasterized on a
// uniform grid. Cell (i, j) covers [i dx, (i+1) dx) x [j dx, (j+1) dx) and is
// classified fluid/obstacle by a point test at its center. The origin cell
// (0, 0) must be fluid; it anchors geodesic sources and spreading experiments.
class PeriodicCellMask {
 public:
  PeriodicCellMask(double L1, double L2, double dx, std::vector<std::uint8_t> occupancy)
      : L1_(L1), L2_(L2), dx_(dx) {
    if (L1 <= 0.0 || L2 <= 0.0 || dx <= 0.0)
      throw std::invalid_argument("periods and grid step must be positive");
    nx_ = detail::cells_per_period(L1, dx, "x");
    ny_ = detail::cells_per_period(L2, dx, "y");
    if (occupancy.size() != static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_))
      throw std::invalid_argument("occupancy size does not match grid dimensions");
    occupancy_ = std::move(occupancy);
    obstacle_count_ = 0;
    for (std::uint8_t c : occupancy_)
      if (!c) ++obstacle_count_;
    if (obstacle_count_ == occupancy_.size())
      throw std::invalid_argument("mask has no fluid cells");
    if (!occupancy_[0])
      throw std::invalid_argument("origin cell must be fluid");
  }

  double L1() const { return L1_; }
  double L2() const { return L2_; }
  double dx() const { return dx_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  std::size_t obstacle_count() const { return obstacle_count_; }

  bool fluid(int i, int j) const {
    assert(i >= 0 && i < nx_ && j >= 0 && j < ny_);
    return occupancy_[static_cast<std::size_t>(j) * nx_ + i] != 0;
  }
  // Periodic access for consumers that unfold the tiling on demand.
  bool fluid_wrapped(long i, long j) const {
    return fluid(detail::wrap_index(i, nx_), detail::wrap_index(j, ny_));
  }

  double cell_x(int i) const { return (i + 0.5) * dx_; }
  double cell_y(int j) const { return (j + 0.5) * dx_; }

  // Index of the cell containing (x, y) after periodic reduction.
  std::pair<int, int> cell_of(double x, double y) const {
    const long i = static_cast<long>(std::floor(x / dx_));
    const long j = static_cast<long>(std::floor(y / dx_));
    return {detail::wrap_index(i, nx_), detail::wrap_index(j, ny_)};
  }

  bool fluid_at(double x, double y) const {
    const auto [i, j] = cell_of(x, y);
    return fluid(i, j);
  }

  bool operator==(const PeriodicCellMask& o) const {
    return L1_ == o.L1_ && L2_ == o.L2_ && dx_ == o.dx_ && occupancy_ == o.occupancy_;
  }

  // Classifies every cell center with `fluid_at`, which receives coordinates
  // in [0, L1) x [0, L2).
  static PeriodicCellMask from_predicate(double L1, double L2, double dx,
                                         const std::function<bool(double, double)>& fluid_at) {
    if (L1 <= 0.0 || L2 <= 0.0 || dx <= 0.0)
      throw std::invalid_argument("periods and grid step must be positive");
    const int nx = detail::cells_per_period(L1, dx, "x");
    const int ny = detail::cells_per_period(L2, dx, "y");
    std::vector<std::uint8_t> occ(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        occ[static_cast<std::size_t>(j) * nx + i] =
            fluid_at((i + 0.5) * dx, (j + 0.5) * dx) ? 1 : 0;
    return PeriodicCellMask(L1, L2, dx, std::move(occ));
  }

 private:
  double L1_, L2_, dx_;
  int nx_ = 0, ny_ = 0;
  std::vector<std::uint8_t> occupancy_;  // row-major, index j*nx + i; 1 = fluid
  std::size_t obstacle_count_ = 0;
};

// True iff the periodic tiling of the fluid set is 4-connected as a subset
// of the plane. Torus components come from union-find with winding offsets:
// merging two cells that already share a component across the periodic
// boundary closes a loop whose winding vector (in period units) generates a
// sublattice H of Z^2. The planar lift of a torus-connected fluid set has
// one component per coset of H, so the tiling is connected exactly when the
// fluid is a single torus component and H is all of Z^2. This stays exact
// for strongly sheared geometries (slant slabs at small slope) where any
// fixed tiled block would be too narrow. Diagonal contact does not connect,
// matching the 5-point stencil used by the evolution scheme.
inline bool check_connected(const PeriodicCellMask& mask) {
  const int nx = mask.nx(), ny = mask.ny();
  const std::size_t n = static_cast<std::size_t>(nx) * ny;
  std::vector<std::int32_t> parent(n), off_x(n, 0), off_y(n, 0);
  for (std::size_t c = 0; c < n; ++c) parent[c] = static_cast<std::int32_t>(c);

  // Root lookup with path compression; accumulates the winding offset of the
  // cell's lift relative to the root's copy.
  auto find = [&](std::int32_t c, std::int32_t& ox, std::int32_t& oy) {
    std::int32_t root = c, ax = 0, ay = 0;
    while (parent[root] != root) {
      ax += off_x[root];
      ay += off_y[root];
      root = parent[root];
    }
    std::int32_t cur = c, px = 0, py = 0;
    while (parent[cur] != cur) {
      const std::int32_t nxt = parent[cur];
      const std::int32_t sx = off_x[cur], sy = off_y[cur];
      parent[cur] = root;
      off_x[cur] = ax - px;
      off_y[cur] = ay - py;
      px += sx;
      py += sy;
      cur = nxt;
    }
    ox = ax;
    oy = ay;
    return root;
  };

  // Winding sublattice in Hermite-like form: g1 = (a, b) with the x-gcd,
  // g2 = (0, c); H = Z^2 iff |a| == 1 and c == 1.
  std::int32_t g1x = 0, g1y = 0, g2y = 0;
  auto fold_winding = [&](std::int32_t vx, std::int32_t vy) {
    while (vx != 0) {
      if (g1x == 0) {
        std::swap(g1x, vx);
        std::swap(g1y, vy);
        continue;
      }
      const std::int32_t q = vx / g1x;
      vx -= q * g1x;
      vy -= q * g1y;
      if (vx != 0) {
        std::swap(g1x, vx);
        std::swap(g1y, vy);
      }
    }
    g2y = std::gcd(g2y, std::abs(vy));
  };

  auto unite = [&](std::int32_t a, std::int32_t b, std::int32_t tx, std::int32_t ty) {
    std::int32_t oax, oay, obx, oby;
    const std::int32_t ra = find(a, oax, oay);
    const std::int32_t rb = find(b, obx, oby);
    if (ra == rb) {
      fold_winding(oax + tx - obx, oay + ty - oby);
      return;
    }
    parent[rb] = ra;
    off_x[rb] = oax + tx - obx;
    off_y[rb] = oay + ty - oby;
  };

  bool any_fluid = false;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!mask.fluid(i, j)) continue;
      any_fluid = true;
      const std::int32_t c = static_cast<std::int32_t>(j) * nx + i;
      const int ir = i + 1 == nx ? 0 : i + 1;
      if (mask.fluid(ir, j)) unite(c, static_cast<std::int32_t>(j) * nx + ir, i + 1 == nx, 0);
      const int ju = j + 1 == ny ? 0 : j + 1;
      if (mask.fluid(i, ju)) unite(c, static_cast<std::int32_t>(ju) * nx + i, 0, j + 1 == ny);
    }
  if (!any_fluid) return false;

  std::int32_t first_root = -1;
  for (std::size_t c = 0; c < n; ++c) {
    const int i = static_cast<int>(c) % nx, j = static_cast<int>(c) / nx;
    if (!mask.fluid(i, j)) continue;
    std::int32_t ox, oy;
    const std::int32_t root = find(static_cast<std::int32_t>(c), ox, oy);
    if (first_root < 0) first_root = root;
    if (root != first_root) return false;
  }
  return std::abs(g1x) == 1 && g2y == 1;
}

// ---------------------------------------------------------------------------
// Builders

inline PeriodicCellMask build_free_plane(double L1, double L2, double dx) {
  return PeriodicCellMask::from_predicate(L1, L2, dx, [](double, double) { return true; });
}

// 1-periodic domain whose obstacle is the rectangle (1-alpha, alpha) x
// [beta, 1-beta] in each unit cell. A horizontal free channel of height
// 2*beta survives around integer heights, while the vertical gaps between
// consecutive obstacles have width 2*(1-alpha).
inline PeriodicCellMask build_holes_domain(double alpha, double beta, double dx) {
  if (!(alpha > 0.5 && alpha < 1.0))
    throw std::invalid_argument("holes domain needs alpha in (1/2, 1)");
  if (!(beta > 0.0 && beta < 0.5))
    throw std::invalid_argument("holes domain needs beta in (0, 1/2)");
  auto mask = PeriodicCellMask::from_predicate(1.0, 1.0, dx, [=](double x, double y) {
    const bool inside_hole = (x > 1.0 - alpha && x < alpha) && (y >= beta && y <= 1.0 - beta);
    return !inside_hole;
  });
  // The hole must span at least two cells per axis, or the rasterized
  // geometry no longer resembles the requested rectangle.
  int imin = mask.nx(), imax = -1, jmin = mask.ny(), jmax = -1;
  for (int j = 0; j < mask.ny(); ++j)
    for (int i = 0; i < mask.nx(); ++i)
      if (!mask.fluid(i, j)) {
        imin = std::min(imin, i);
        imax = std::max(imax, i);
        jmin = std::min(jmin, j);
        jmax = std::max(jmax, j);
      }
  if (imax < 0 || imax - imin < 1 || jmax - jmin < 1)
    throw std::invalid_argument("holes domain under-resolved: hole spans fewer than 2 cells");
  // The free channels (height 2*beta, width 2*(1-alpha)) must survive: there
  // has to be at least one fully fluid row and column.
  bool free_row = false, free_col = false;
  for (int j = 0; j < mask.ny() && !free_row; ++j) {
    bool all = true;
    for (int i = 0; i < mask.nx(); ++i) all = all && mask.fluid(i, j);
    free_row = all;
  }
  for (int i = 0; i < mask.nx() && !free_col; ++i) {
    bool all = true;
    for (int j = 0; j < mask.ny(); ++j) all = all && mask.fluid(i, j);
    free_col = all;
  }
  if (!free_row || !free_col)
    throw std::invalid_argument("holes domain under-resolved: free channels closed off");
  assert(check_connected(mask) && "holes construction must preserve connectivity");
  return mask;
}

// Point test for the slanted-slab obstacle family. The reference slab is
//   { (x, y) : alpha*x + R + eps <= y <= alpha*x + (1+alpha)*R - eps,
//             y in [R, 2R] },
// and the obstacle set is its union of translates by 3R*Z^2. The slab spans
// roughly x in (-R, R/alpha), i.e. many periods at small alpha, so the test
// folds x through every translate overlapping that range.
inline bool slant_obstacle_contains(double alpha, double R, double eps, double x, double y) {
  const double period = 3.0 * R;
  double yr = y - period * std::floor(y / period);
  if (yr < R || yr > 2.0 * R) return false;
  const double x_lo = (yr - (1.0 + alpha) * R + eps) / alpha;
  const double x_hi = (yr - R - eps) / alpha;
  if (x_lo > x_hi) return false;
  const long m_lo = static_cast<long>(std::ceil((x_lo - x) / period));
  const long m_hi = static_cast<long>(std::floor((x_hi - x) / period));
  return m_lo <= m_hi;
}

// 3R-periodic domain perforated by slanted slabs of slope alpha confined to
// the strip y in [R, 2R] of each cell row. The complementary corridor
// y in (2R, 4R) keeps a straight horizontal channel of height 2R, while
// vertical progress must thread the slanted gaps between slab translates.
// The slab shrinkage defaults to eps = alpha*R/8 and may be overridden with
// any value in [0, alpha*R/4] (negative = use the default).
inline PeriodicCellMask build_slant_domain(double alpha, double R, double dx,
                                           double epsilon = -1.0) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("slant domain needs alpha in (0, 1)");
  if (R <= 0.0) throw std::invalid_argument("slant domain needs R > 0");
  const double eps = epsilon < 0.0 ? alpha * R / 8.0 : epsilon;
  if (eps > alpha * R / 4.0 + 1e-12)
    throw std::invalid_argument("slant shrinkage must lie in [0, alpha*R/4]");
  if (alpha * R / 8.0 < dx)
    throw std::invalid_argument("slant domain under-resolved: need alpha*R/8 >= dx");
  auto mask = PeriodicCellMask::from_predicate(3.0 * R, 3.0 * R, dx, [=](double x, double y) {
    return !slant_obstacle_contains(alpha, R, eps, x, y);
  });
  assert(check_connected(mask) && "slant construction must preserve connectivity");
  return mask;
}

// 1-periodic domain with a disc obstacle of radius r centered in each unit
// cell; symmetric about both coordinate axes by construction.
inline PeriodicCellMask build_disc_lattice(double r, double dx) {
  if (!(r > 0.0 && r < 0.5 - dx))
    throw std::invalid_argument("disc lattice needs 0 < r < 1/2 - dx (non-touching discs)");
  auto mask = PeriodicCellMask::from_predicate(1.0, 1.0, dx, [=](double x, double y) {
    const double ux = x - 0.5, uy = y - 0.5;
    return ux * ux + uy * uy > r * r;
  });
  if (!check_connected(mask))
    throw std::invalid_argument("disc lattice throats under-resolved");
  return mask;
}

// ---------------------------------------------------------------------------
// Lattice isometries

// A lattice-compatible planar isometry: reflection about a horizontal or
// vertical line, or rotation by pi about a point. Compatibility means every
// cell center maps onto a cell center modulo the periods, which requires the
// doubled line position / doubled center to be a multiple of dx.
struct Isometry2D {
  enum class Kind { reflect_about_horizontal, reflect_about_vertical, rotate_pi };

  Kind kind;
  Vec2 anchor;  // point on the reflection line, or the rotation center

  static Isometry2D reflection_about_horizontal(double y0) {
    return {Kind::reflect_about_horizontal, {0.0, y0}};
  }
  static Isometry2D reflection_about_vertical(double x0) {
    return {Kind::reflect_about_vertical, {x0, 0.0}};
  }
  static Isometry2D rotation_pi(Vec2 center) { return {Kind::rotate_pi, center}; }

  Vec2 apply(Vec2 p) const {
    switch (kind) {
      case Kind::reflect_about_horizontal: return {p.x, 2.0 * anchor.y - p.y};
      case Kind::reflect_about_vertical: return {2.0 * anchor.x - p.x, p.y};
      case Kind::rotate_pi: return {2.0 * anchor.x - p.x, 2.0 * anchor.y - p.y};
    }
    return p;
  }
};

// True iff the mask occupancy is invariant cell-by-cell under the isometry.
// Rejects isometries whose image of the grid does not land on the grid.
inline bool symmetry_holds(const PeriodicCellMask& mask, const Isometry2D& iso) {
  auto on_grid = [&](double doubled) {
    const double q = doubled / mask.dx();
    return std::abs(q - std::round(q)) < 1e-9;
  };
  bool compatible = true;
  switch (iso.kind) {
    case Isometry2D::Kind::reflect_about_horizontal: compatible = on_grid(2.0 * iso.anchor.y); break;
    case Isometry2D::Kind::reflect_about_vertical: compatible = on_grid(2.0 * iso.anchor.x); break;
    case Isometry2D::Kind::rotate_pi:
      compatible = on_grid(2.0 * iso.anchor.x) && on_grid(2.0 * iso.anchor.y);
      break;
  }
  if (!compatible)
    throw std::invalid_argument("isometry is not compatible with the grid lattice");

  for (int j = 0; j < mask.ny(); ++j)
    for (int i = 0; i < mask.nx(); ++i) {
      const Vec2 image = iso.apply({mask.cell_x(i), mask.cell_y(j)});
      if (mask.fluid(i, j) != mask.fluid_at(image.x, image.y)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// PMASK2 text format: header `PMASK2 L1 L2 dx`, then ny rows of nx '0'/'1'
// characters with y increasing ('1' = fluid). Save/load round-trips are
// byte-exact; the header doubles are printed with 17 significant digits.

inline std::string serialize_mask(const PeriodicCellMask& mask) {
  std::string out = "PMASK2 " + detail::format_double(mask.L1()) + " " +
                    detail::format_double(mask.L2()) + " " + detail::format_double(mask.dx()) +
                    "\n";
  out.reserve(out.size() + static_cast<std::size_t>(mask.ny()) * (mask.nx() + 1));
  for (int j = 0; j < mask.ny(); ++j) {
    for (int i = 0; i < mask.nx(); ++i) out.push_back(mask.fluid(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline PeriodicCellMask parse_mask(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  double L1 = 0.0, L2 = 0.0, dx = 0.0;
  if (!(in >> tag >> L1 >> L2 >> dx) || tag != "PMASK2")
    throw std::runtime_error("not a PMASK2 mask: bad header");
  PeriodicCellMask probe = build_free_plane(L1, L2, dx);  // validates dims
  std::vector<std::uint8_t> occ(static_cast<std::size_t>(probe.nx()) * probe.ny());
  std::string row;
  std::getline(in, row);  // consume the header newline
  for (int j = 0; j < probe.ny(); ++j) {
    if (!std::getline(in, row))
      throw std::runtime_error("PMASK2 truncated: expected " + std::to_string(probe.ny()) +
                               " rows");
    if (static_cast<int>(row.size()) != probe.nx())
      throw std::runtime_error("PMASK2 row " + std::to_string(j) + " has wrong length");
    for (int i = 0; i < probe.nx(); ++i) {
      if (row[i] != '0' && row[i] != '1')
        throw std::runtime_error("PMASK2 row contains characters other than 0/1");
      occ[static_cast<std::size_t>(j) * probe.nx() + i] = row[i] == '1' ? 1 : 0;
    }
  }
  return PeriodicCellMask(L1, L2, dx, std::move(occ));
}

inline void save_mask(const PeriodicCellMask& mask, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open mask file for writing: " + path);
  out << serialize_mask(mask);
  if (!out) throw std::runtime_error("failed writing mask file: " + path);
}

inline PeriodicCellMask load_mask(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open mask file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mask(buf.str());
}

}  // namespace frontlab

#endif  // FRONTLAB_GEOMETRY_HPP
