// Invasion-speed geometry: turning a directional front-speed profile into
// the spreading region (intersection of half-planes and its radial
// function), measuring spreading sets empirically from invading data, and
// the structural audits that constrain which shapes can occur (constancy
// dichotomy, positive-cone inequality, ellipse feasibility).
#ifndef FRONTLAB_WULFF_HPP
#define FRONTLAB_WULFF_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frontlab/dynamics.hpp"
#include "frontlab/fronts.hpp"
#include "frontlab/geometry.hpp"
#include "frontlab/grid.hpp"

namespace frontlab {

// One support constraint {x : x . e <= c} of the spreading region; c > 0
// keeps the origin strictly interior.
struct HalfPlane {
  Vec2 e;
  double c = 0.0;
};

struct RadialSample {
  double theta = 0.0;
  Vec2 e;
  double value = 0.0;
};

// Convex spreading region W = bigcap_i {x . e_i <= c_i}: a counterclockwise
// vertex chain with the origin strictly interior, the active support
// constraints in angular order, and the radial function sampled at the
// requested output directions. Every vertex is the corner of exactly its
// two adjacent support lines, so rebuilding the polygon from `support()`
// reproduces the vertices bit for bit.
class WulffPolygon {
 public:
  WulffPolygon(std::vector<Vec2> vertices, std::vector<HalfPlane> support,
               std::vector<RadialSample> radial)
      : vertices_(std::move(vertices)), support_(std::move(support)), radial_(std::move(radial)) {
    if (vertices_.size() < 3 || support_.size() < 3)
      throw std::invalid_argument("wulff polygon needs at least three vertices and supports");
    const std::size_t n = vertices_.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Vec2 a = vertices_[k] - vertices_[(k + n - 1) % n];
      const Vec2 b = vertices_[(k + 1) % n] - vertices_[k];
      if (!(a.cross(b) > 0.0))
        throw std::invalid_argument("wulff polygon must be strictly convex counterclockwise");
    }
    for (const HalfPlane& cut : support_) {
      if (!(cut.c > 0.0))
        throw std::invalid_argument("wulff polygon must contain the origin strictly");
      for (const Vec2& v : vertices_)
        if (v.dot(cut.e) > cut.c + 1e-9 * (1.0 + cut.c))
          throw std::invalid_argument("wulff polygon vertex violates a support constraint");
    }
  }

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<HalfPlane>& support() const { return support_; }
  const std::vector<RadialSample>& radial() const { return radial_; }

  // Exact radial function of the region: min over support cuts of c/(xi.e).
  double radial_at(Vec2 xi) const {
    double r = std::numeric_limits<double>::infinity();
    for (const HalfPlane& cut : support_) {
      const double d = xi.dot(cut.e);
      if (d > 0.0) r = std::min(r, cut.c / d);
    }
    if (!std::isfinite(r))
      throw std::logic_error("radial query direction is unsupported by every cut");
    return r;
  }

  bool contains(Vec2 p, double tol = 0.0) const {
    for (const HalfPlane& cut : support_)
      if (p.dot(cut.e) > cut.c + tol) return false;
    return true;
  }

 private:
  std::vector<Vec2> vertices_;
  std::vector<HalfPlane> support_;
  std::vector<RadialSample> radial_;
};

namespace detail {

// Corner of the two support lines x.e = c: a single 2x2 solve against the
// scaled normals p = e/c (so p.v = 1), giving deterministic vertices that
// depend only on the two adjacent cuts.
inline Vec2 support_corner(const HalfPlane& lhs, const HalfPlane& rhs) {
  const Vec2 p{lhs.e.x / lhs.c, lhs.e.y / lhs.c};
  const Vec2 q{rhs.e.x / rhs.c, rhs.e.y / rhs.c};
  const double det = p.cross(q);
  if (!(det > 0.0)) throw std::logic_error("adjacent support lines failed to intersect");
  return {(q.y - p.y) / det, (p.x - q.x) / det};
}

}  // namespace detail

// Intersection of half-planes whose unit normals come in strictly increasing
// angular order and leave no gap of pi or more (otherwise the region is
// unbounded). A constraint is redundant exactly when its scaled normal e/c
// falls inside the convex hull of the others, so the active set is the hull
// of the scaled normals (polar duality); vertices are the corners of
// angularly adjacent active cuts.
inline WulffPolygon wulff_from_halfplanes(const std::vector<HalfPlane>& cuts,
                                          int output_directions) {
  const std::size_t n = cuts.size();
  if (n < 3) throw std::invalid_argument("half-plane intersection needs at least three cuts");
  if (output_directions < 1)
    throw std::invalid_argument("half-plane intersection needs at least one output direction");
  std::vector<double> theta(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(cuts[i].c > 0.0))
      throw std::invalid_argument("half-plane support values must be positive");
    if (std::abs(cuts[i].e.norm() - 1.0) > 1e-9)
      throw std::invalid_argument("half-plane normals must be unit vectors");
    double a = cuts[i].e.angle();
    if (a < 0.0) a += 2.0 * kPi;
    theta[i] = a;
    if (i > 0 && !(theta[i] > theta[i - 1]))
      throw std::invalid_argument("half-plane normals must have strictly increasing angles");
  }
  double gap = theta.front() + 2.0 * kPi - theta.back();
  for (std::size_t i = 1; i < n; ++i) gap = std::max(gap, theta[i] - theta[i - 1]);
  if (!(gap < kPi))
    throw std::invalid_argument("half-plane normals leave a half-circle open (region unbounded)");

  std::vector<Vec2> dual(n);
  for (std::size_t i = 0; i < n; ++i) dual[i] = {cuts[i].e.x / cuts[i].c, cuts[i].e.y / cuts[i].c};

  // Circular convex-hull scan of the dual points, started at the farthest
  // point from the origin (always a hull vertex); collinear middles drop.
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (dual[i].norm() > dual[start].norm()) start = i;
  std::vector<std::size_t> hull{start};
  auto pops_back = [&](std::size_t next) {
    const Vec2 a = dual[hull.back()] - dual[hull[hull.size() - 2]];
    const Vec2 b = dual[next] - dual[hull.back()];
    return !(a.cross(b) > 0.0);
  };
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t i = (start + k) % n;
    while (hull.size() >= 2 && pops_back(i)) hull.pop_back();
    hull.push_back(i);
  }
  while (hull.size() >= 3 && pops_back(start)) hull.pop_back();
  if (hull.size() < 3) throw std::invalid_argument("half-plane intersection degenerated");
  // Restore ascending angular order (the scan started mid-sequence).
  std::rotate(hull.begin(), std::min_element(hull.begin(), hull.end()), hull.end());

  const std::size_t m = hull.size();
  std::vector<HalfPlane> support(m);
  for (std::size_t k = 0; k < m; ++k) support[k] = cuts[hull[k]];
  std::vector<Vec2> vertices(m);
  for (std::size_t k = 0; k < m; ++k)
    vertices[k] = detail::support_corner(support[k], support[(k + 1) % m]);

  std::vector<RadialSample> radial(static_cast<std::size_t>(output_directions));
  for (int j = 0; j < output_directions; ++j) {
    RadialSample& s = radial[static_cast<std::size_t>(j)];
    s.theta = 2.0 * kPi * j / output_directions;
    s.e = Vec2::unit(s.theta);
    double r = std::numeric_limits<double>::infinity();
    for (const HalfPlane& cut : support) {
      const double d = s.e.dot(cut.e);
      if (d > 0.0) r = std::min(r, cut.c / d);
    }
    s.value = r;
  }
  return WulffPolygon(std::move(vertices), std::move(support), std::move(radial));
}

// The front-speed-to-invasion-speed transform: the spreading region is the
// intersection of the half-planes {x . e <= c*(e)} over the sampled
// directions, and its radial function w(xi) = min_e c*(e)/(xi . e) is the
// invasion speed along xi. Exact for the sampled profile.
inline WulffPolygon fg_transform(const SpeedProfile& profile, int output_directions) {
  if (!(profile.max_angular_gap() < 2.0 * kPi / 8.0))
    throw std::invalid_argument("speed profile leaves an angular gap of pi/4 or more");
  std::vector<HalfPlane> cuts;
  cuts.reserve(profile.size());
  for (const SpeedSample& s : profile.samples()) cuts.push_back({s.e, s.speed});
  return wulff_from_halfplanes(cuts, output_directions);
}

// ---------------------------------------------------------------------------
// Empirical spreading sets

// Level-eta invasion radii along each requested direction at each requested
// time, with last-half least-squares speeds. Radii are the per-direction
// monotone-prefix variant of the level-set radius: the largest sampled r
// whose whole fluid prefix along the ray sits above eta.
struct SpreadingMeasurement {
  double eta = 0.5;
  std::vector<double> times;
  std::vector<Vec2> directions;
  std::vector<std::vector<double>> radii;  // radii[d][k] at times[k]
  std::vector<SpeedSample> speeds;         // fitted per direction, input order
  double invaded_time = std::numeric_limits<double>::infinity();

  // True when every direction's radius sequence is nondecreasing (up to
  // `slack`) from the given time index on.
  bool radii_nondecreasing(std::size_t first_index, double slack = 0.0) const {
    for (const std::vector<double>& r : radii)
      for (std::size_t k = first_index + 1; k < r.size(); ++k)
        if (r[k] < r[k - 1] - slack) return false;
    return true;
  }
};

namespace detail {

// Nearest fluid cell (by center distance, <= 2 dx) to a point, among the
// 5x5 index neighborhood; {found, gi, gj}.
struct NearestFluid {
  bool found = false;
  long gi = 0, gj = 0;
};

inline NearestFluid nearest_fluid_cell(const FieldState& state, Vec2 p) {
  const double dx = state.dx();
  const long ci = static_cast<long>(std::floor(p.x / dx));
  const long cj = static_cast<long>(std::floor(p.y / dx));
  NearestFluid best;
  double best_d2 = 4.0 * dx * dx;
  for (long j = cj - 2; j <= cj + 2; ++j)
    for (long i = ci - 2; i <= ci + 2; ++i) {
      if (!state.contains(i, j) || !state.fluid_cell(i, j)) continue;
      const Vec2 c = state.cell_center(i, j);
      const double d2 = (c.x - p.x) * (c.x - p.x) + (c.y - p.y) * (c.y - p.y);
      if (d2 <= best_d2 && (!best.found || d2 < best_d2)) {
        best = {true, i, j};
        best_d2 = d2;
      }
    }
  return best;
}

}  // namespace detail

// Evolves invading initial data through the measurement times and records
// the level-eta radius along each direction. Throws when the datum fails to
// invade (the origin cell must exceed 1 - 1e-3 before the final time) or
// when a measured front runs out of window.
inline SpreadingMeasurement empirical_spreading(FieldState state, const Nonlinearity& f,
                                                const DiffusionTensor& A, double eta,
                                                const std::vector<double>& times,
                                                const std::vector<Vec2>& directions) {
  if (!(eta > f.ignition() && eta < 1.0))
    throw std::invalid_argument(
        "spreading level must lie strictly between the reaction threshold and 1");
  if (times.size() < 4)
    throw std::invalid_argument("spreading measurement needs at least four times");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (k == 0 && times[k] < state.time() - 1e-12)
      throw std::invalid_argument("first measurement time precedes the state time");
    if (k > 0 && !(times[k] > times[k - 1]))
      throw std::invalid_argument("measurement times must be strictly increasing");
  }
  if (directions.empty()) throw std::invalid_argument("spreading measurement needs directions");
  for (const Vec2& e : directions)
    if (std::abs(e.norm() - 1.0) > 1e-9)
      throw std::invalid_argument("spreading directions must be unit vectors");

  const detail::NearestFluid origin = detail::nearest_fluid_cell(state, {0.0, 0.0});
  if (!origin.found)
    throw std::runtime_error("no fluid cell within 2 dx of the origin inside the window");

  const double dx = state.dx();
  const double edge_margin = 2.0 * std::max(state.mask().L1(), state.mask().L2());
  // Largest sample index whose whole 5x5 search block stays in the window.
  const auto cap_index = [&](Vec2 e) {
    long k = 0;
    for (;; ++k) {
      const Vec2 p = e * (static_cast<double>(k) * dx);
      const long ci = static_cast<long>(std::floor(p.x / dx));
      const long cj = static_cast<long>(std::floor(p.y / dx));
      if (!state.contains(ci - 2, cj - 2) || !state.contains(ci + 2, cj + 2)) break;
    }
    return k - 1;
  };
  std::vector<long> caps(directions.size());
  for (std::size_t d = 0; d < directions.size(); ++d) {
    caps[d] = cap_index(directions[d]);
    if (caps[d] < 1)
      throw std::invalid_argument("measurement window leaves no room along a direction");
  }

  SpreadingMeasurement out;
  out.eta = eta;
  out.times = times;
  out.directions = directions;
  out.radii.assign(directions.size(), {});

  for (double t : times) {
    const double span = t - state.time();
    if (span > 1e-12) evolve(state, f, A, span);
    if (!std::isfinite(out.invaded_time) &&
        state.value(origin.gi, origin.gj) > 1.0 - 1e-3)
      out.invaded_time = t;
    for (std::size_t d = 0; d < directions.size(); ++d) {
      double radius = 0.0;
      for (long k = 0; k <= caps[d]; ++k) {
        const double r = static_cast<double>(k) * dx;
        const detail::NearestFluid cell =
            detail::nearest_fluid_cell(state, directions[d] * r);
        if (!cell.found) continue;  // ray sample inside an obstacle: skip
        if (!(state.value(cell.gi, cell.gj) > eta)) break;
        radius = r;
      }
      if (radius > static_cast<double>(caps[d]) * dx - edge_margin)
        throw std::runtime_error("spreading front reached the measurement window edge");
      out.radii[d].push_back(radius);
    }
  }
  if (!(out.invaded_time < times.back()))
    throw std::runtime_error(
        "initial datum does not invade: origin never reached level 0.999 before the final time");

  const std::size_t mid = times.size() / 2;
  const std::vector<double> tail_t(times.begin() + static_cast<long>(mid), times.end());
  for (std::size_t d = 0; d < directions.size(); ++d) {
    const std::vector<double> tail_r(out.radii[d].begin() + static_cast<long>(mid),
                                     out.radii[d].end());
    const LineFit fit = fit_line(tail_t, tail_r);
    SpeedSample s;
    double a = directions[d].angle();
    if (a < 0.0) a += 2.0 * kPi;
    s.theta = a;
    s.e = directions[d];
    s.speed = fit.slope;
    s.stderr_ = fit.slope_stderr;
    s.method = SpeedMethod::empirical;
    out.speeds.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural audits

// Constancy test: if the front-speed profile is constant (within tol) the
// two speed notions coincide; otherwise some direction carries a positive
// gap, and the maximizing direction witnesses it.
struct ConstantSpeed {
  double value = 0.0;
};
struct SpeedGapWitness {
  Vec2 e;
  double gap = 0.0;
};
using DichotomyResult = std::variant<ConstantSpeed, SpeedGapWitness>;

inline DichotomyResult constancy_dichotomy(const SpeedProfile& front_speeds,
                                           const SpeedProfile& invasion_speeds, double tol) {
  if (tol < 0.0) throw std::invalid_argument("constancy tolerance must be nonnegative");
  if (front_speeds.size() != invasion_speeds.size())
    throw std::invalid_argument("profiles must share their direction set");
  for (std::size_t i = 0; i < front_speeds.size(); ++i)
    if (std::abs(front_speeds.samples()[i].theta - invasion_speeds.samples()[i].theta) > 1e-12)
      throw std::invalid_argument("profiles must share their direction set");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const SpeedSample& s : front_speeds.samples()) {
    lo = std::min(lo, s.speed);
    hi = std::max(hi, s.speed);
  }
  if (hi - lo <= tol) return ConstantSpeed{0.5 * (lo + hi)};
  std::size_t best = 0;
  double best_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < front_speeds.size(); ++i) {
    const double gap = front_speeds.samples()[i].speed - invasion_speeds.samples()[i].speed;
    if (gap > best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  return SpeedGapWitness{front_speeds.samples()[best].e, best_gap};
}

// One failure of the positive-cone inequality: the speed at e exceeds both
// directional quotients of a flanking pair, by `excess`.
struct ConeViolation {
  Vec2 e;
  Vec2 xi1, xi2;
  double excess = 0.0;
};

// Checks c(e) <= max(c(xi1)/(e.xi1), c(xi2)/(e.xi2)) over sampled pairs
// flanking each audited direction. A violating pair exists exactly when the
// quotient minima on the two angular sides of e both fall below c(e) - tol,
// so each side is minimized separately and the two argmins witness the
// violation (quadratic instead of cubic in the sample count).
inline std::vector<ConeViolation> cone_inequality_audit(const SpeedProfile& profile, int samples,
                                                        double tol = 1e-9) {
  if (samples < 1) throw std::invalid_argument("cone audit needs at least one sampled direction");
  if (tol < 0.0) throw std::invalid_argument("cone audit tolerance must be nonnegative");
  const std::size_t n = profile.size();
  const std::size_t stride = std::max<std::size_t>(1, n / static_cast<std::size_t>(samples));
  std::vector<ConeViolation> violations;
  for (std::size_t i = 0; i < n; i += stride) {
    const Vec2 e = profile.samples()[i].e;
    const double ce = profile.samples()[i].speed;
    double left = std::numeric_limits<double>::infinity(), right = left;
    Vec2 left_xi, right_xi;
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2 xi = profile.samples()[j].e;
      const double d = e.dot(xi);
      if (!(d > 0.0)) continue;
      const double q = profile.samples()[j].speed / d;
      if (e.cross(xi) >= 0.0) {
        if (q < left) {
          left = q;
          left_xi = xi;
        }
      } else if (q < right) {
        right = q;
        right_xi = xi;
      }
    }
    if (left < ce - tol && right < ce - tol)
      violations.push_back({e, left_xi, right_xi, ce - std::max(left, right)});
  }
  return violations;
}

// Whether an ellipse radial profile survives the positive-cone audit.
// `feasible_under_audit` only means no violation was found; infeasibility is
// the theorem-backed verdict.
struct EllipseVerdict {
  bool feasible_under_audit = true;
  double eccentricity = 0.0;
  std::vector<ConeViolation> violations;
};

inline EllipseVerdict ellipse_feasibility(double a, double b, int M, double tol = 1e-9) {
  if (!(b > 0.0) || a < b)
    throw std::invalid_argument("ellipse semi-axes must satisfy a >= b > 0");
  if (M < 8) throw std::invalid_argument("ellipse audit needs at least eight directions");
  std::vector<SpeedSample> samples(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    SpeedSample& s = samples[static_cast<std::size_t>(j)];
    s.theta = 2.0 * kPi * j / M;
    s.e = Vec2::unit(s.theta);
    s.speed = 1.0 / std::sqrt(s.e.x * s.e.x / (a * a) + s.e.y * s.e.y / (b * b));
  }
  SpeedProfile profile(std::move(samples), "ellipse radial profile");
  EllipseVerdict verdict;
  verdict.eccentricity = std::sqrt(1.0 - (b * b) / (a * a));
  verdict.violations = cone_inequality_audit(profile, M, tol);
  verdict.feasible_under_audit = verdict.violations.empty();
  return verdict;
}

// Smallest eccentricity the audit flags as infeasible at M directions,
// located by bisection between the circle and a known-infeasible value.
inline double ellipse_infeasibility_threshold(int M, int iterations = 40, double tol = 1e-9) {
  if (iterations < 1) throw std::invalid_argument("threshold bisection needs iterations >= 1");
  const auto infeasible = [&](double ecc) {
    const double b = std::sqrt(1.0 - ecc * ecc);
    return !ellipse_feasibility(1.0, b, M, tol).feasible_under_audit;
  };
  double hi = 0.9;
  while (!infeasible(hi)) {
    hi = 0.5 * (hi + 0.999);
    if (hi > 0.998)
      throw std::runtime_error("ellipse audit found no infeasible eccentricity below 0.998");
  }
  double lo = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    (infeasible(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace frontlab

#endif  // FRONTLAB_WULFF_HPP
