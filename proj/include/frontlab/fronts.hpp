// Critical front speeds c*(e): principal-eigenvalue route for KPP reactions,
// empirical strip measurements for arbitrary reactions, and the free-plane
// closed form. The eigenvalue route solves the periodic cell problem
//   L psi = div(A grad psi) - 2 lambda (Ae).grad psi + (lambda^2 e.Ae + r) psi
// with the oblique condition nu.A grad psi = lambda (nu.Ae) psi on obstacle
// boundaries, then minimizes k(lambda e)/lambda over lambda.
#ifndef FRONTLAB_FRONTS_HPP
#define FRONTLAB_FRONTS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frontlab/dynamics.hpp"
#include "frontlab/geometry.hpp"
#include "frontlab/grid.hpp"

namespace frontlab {

// ---------------------------------------------------------------------------
// Principal eigenvalue of the KPP cell problem

// Power iteration on the advection-diffusion part D of the operator over one
// periodic cell; the zeroth-order part lambda^2 e.Ae + r is added exactly.
// The iteration psi <- psi + dt D psi renormalizes in the max norm, so the
// converged growth rate (rho - 1)/dt is the discrete eigenvalue of D
// independently of dt. The max norm keeps the arithmetic invariant under
// grid reflections (addition commutes, max is order-free), which makes the
// reflection-equivariance property hold bitwise.
class KppEigenSolver {
 public:
  KppEigenSolver(const PeriodicCellMask& mask, const DiffusionTensor& A, double r, Vec2 e)
      : A_(A), r_(r), e_(e) {
    if (std::abs(e.norm() - 1.0) > 1e-9)
      throw std::invalid_argument("eigenvalue direction must be a unit vector");
    if (!(r > 0.0)) throw std::invalid_argument("KPP linearization rate must be positive");
    if (!check_connected(mask)) throw std::invalid_argument("eigenvalue mask must be connected");
    nx_ = mask.nx();
    ny_ = mask.ny();
    dx_ = mask.dx();
    fluid_.resize(static_cast<std::size_t>(nx_) * ny_);
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i)
        fluid_[static_cast<std::size_t>(j) * nx_ + i] = mask.fluid(i, j) ? 1 : 0;
    psi_.assign(fluid_.size(), 1.0);
    for (std::size_t k = 0; k < fluid_.size(); ++k)
      if (!fluid_[k]) psi_[k] = 0.0;
    work_.assign(fluid_.size(), 0.0);
  }

  // k(lambda e); warm-started from the previous call's eigenfunction.
  double eigenvalue(double lambda) {
    const double zeroth = lambda * lambda * A_.form(e_) + r_;
    const double adv_x = lambda * A_.a * e_.x;  // (A e) scaled by lambda
    const double adv_y = lambda * A_.b * e_.y;
    const double dt =
        0.9 / (2.0 * (A_.a + A_.b) / (dx_ * dx_) +
               2.0 * (std::abs(adv_x) + std::abs(adv_y)) / dx_ + 1e-300);
    const double inv_dx2 = 1.0 / (dx_ * dx_);
    const double inv_dx = 1.0 / dx_;
    // Ghost multipliers for obstacle faces: psi_ghost = psi (1 + dx lambda e.nu).
    const double ghost_e = 1.0 + dx_ * lambda * e_.x, ghost_w = 1.0 - dx_ * lambda * e_.x;
    const double ghost_n = 1.0 + dx_ * lambda * e_.y, ghost_s = 1.0 - dx_ * lambda * e_.y;

    double growth = std::numeric_limits<double>::quiet_NaN();
    int settled = 0;
    for (long iter = 0; iter < kMaxIters; ++iter) {
      double peak = 0.0;
      for (int j = 0; j < ny_; ++j) {
        const int jn = j + 1 == ny_ ? 0 : j + 1;
        const int js = j == 0 ? ny_ - 1 : j - 1;
        for (int i = 0; i < nx_; ++i) {
          const std::size_t k = static_cast<std::size_t>(j) * nx_ + i;
          if (!fluid_[k]) continue;
          const int ie = i + 1 == nx_ ? 0 : i + 1;
          const int iw = i == 0 ? nx_ - 1 : i - 1;
          const double c = psi_[k];
          const std::size_t ke = static_cast<std::size_t>(j) * nx_ + ie;
          const std::size_t kw = static_cast<std::size_t>(j) * nx_ + iw;
          const std::size_t kn = static_cast<std::size_t>(jn) * nx_ + i;
          const std::size_t ks = static_cast<std::size_t>(js) * nx_ + i;
          const double pe = fluid_[ke] ? psi_[ke] : c * ghost_e;
          const double pw = fluid_[kw] ? psi_[kw] : c * ghost_w;
          const double pn = fluid_[kn] ? psi_[kn] : c * ghost_n;
          const double ps = fluid_[ks] ? psi_[ks] : c * ghost_s;
          // Face-difference form: pairwise sums commute, so a grid reflection
          // (which swaps N/S or E/W gathers) reproduces identical floats.
          const double diff =
              (A_.a * ((pe - c) + (pw - c)) + A_.b * ((pn - c) + (ps - c))) * inv_dx2;
          const double adv = (adv_x * (pe - pw) + adv_y * (pn - ps)) * inv_dx;
          const double next = c + dt * (diff - adv);
          work_[k] = next;
          peak = std::max(peak, std::abs(next));
        }
      }
      if (!(peak > 0.0) || !std::isfinite(peak))
        throw std::runtime_error("eigenvalue iteration degenerated");
      const double inv_peak = 1.0 / peak;
      double low = std::numeric_limits<double>::infinity();
      double residual = 0.0;
      for (std::size_t k = 0; k < work_.size(); ++k) {
        if (!fluid_[k]) continue;
        work_[k] *= inv_peak;
        low = std::min(low, work_[k]);
        residual = std::max(residual, std::abs(work_[k] - psi_[k]));
      }
      if (low < 0.0)
        throw std::runtime_error(
            "eigenvalue iteration lost positivity (advection unresolved at this lambda)");
      psi_.swap(work_);
      const double estimate = (peak - 1.0) / dt;
      // Growth-rate stagnation alone can be a transient plateau of this
      // non-normal operator (notably on warm starts), so additionally demand
      // that the normalized iterate itself has stopped moving.
      if (std::isfinite(growth) && std::abs(estimate - growth) < 1e-8 && residual < 1e-11) {
        if (++settled >= 2) return estimate + zeroth;
      } else {
        settled = 0;
      }
      growth = estimate;
    }
    throw std::runtime_error("eigenvalue power iteration failed to converge");
  }

 private:
  static constexpr long kMaxIters = 3000000;

  DiffusionTensor A_;
  double r_;
  Vec2 e_;
  int nx_ = 0, ny_ = 0;
  double dx_ = 0.0;
  std::vector<std::uint8_t> fluid_;
  std::vector<double> psi_, work_;
};

inline double kpp_eigenvalue(const PeriodicCellMask& mask, const DiffusionTensor& A, double r,
                             Vec2 e, double lambda) {
  return KppEigenSolver(mask, A, r, e).eigenvalue(lambda);
}

// c*(e) = min_{lambda>0} k(lambda e)/lambda: 64-point pre-scan over
// log lambda in [-4, 4] seeds a golden-section refinement to relative width
// 1e-6. Unstable evaluations (too-large lambda for the grid) count as +inf;
// an edge minimizer widens the scan once before giving up.
inline double kpp_front_speed(const PeriodicCellMask& mask, const DiffusionTensor& A, double r,
                              Vec2 e) {
  KppEigenSolver solver(mask, A, r, e);
  const auto quotient = [&](double log_lambda) {
    const double lambda = std::exp(log_lambda);
    try {
      return solver.eigenvalue(lambda) / lambda;
    } catch (const std::runtime_error&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  double lo = -4.0, hi = 4.0;
  for (int attempt = 0; attempt < 2; ++attempt) {
    constexpr int n = 64;
    int best = -1;
    double best_q = std::numeric_limits<double>::infinity();
    std::vector<double> grid(n), q(n);
    for (int i = 0; i < n; ++i) {
      grid[i] = lo + (hi - lo) * i / (n - 1);
      q[i] = quotient(grid[i]);
      if (q[i] < best_q) {
        best_q = q[i];
        best = i;
      }
    }
    if (best < 0) throw std::runtime_error("front-speed scan found no stable eigenvalue");
    if (best == 0 || best == n - 1) {
      lo = grid[best] - 4.0;  // widen around the edge minimizer and retry
      hi = grid[best] + 4.0;
      if (attempt == 1)
        throw std::runtime_error("front-speed minimizer escaped the widened lambda bracket");
      continue;
    }
    double a = grid[best - 1], b = grid[best + 1];
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double q1 = quotient(x1), q2 = quotient(x2);
    while (b - a > 1e-6) {
      if (q1 <= q2) {
        b = x2;
        x2 = x1;
        q2 = q1;
        x1 = b - inv_phi * (b - a);
        q1 = quotient(x1);
      } else {
        a = x1;
        x1 = x2;
        q1 = q2;
        x2 = a + inv_phi * (b - a);
        q2 = quotient(x2);
      }
    }
    return std::min(q1, q2);
  }
  throw std::logic_error("unreachable");
}

// Free plane with constant diagonal tensor: c*(e) = 2 sqrt(r e.Ae).
inline double closed_form_speed(const DiffusionTensor& A, double r, Vec2 e) {
  if (!(r > 0.0)) throw std::invalid_argument("closed-form speed needs r > 0");
  if (std::abs(e.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("closed-form direction must be a unit vector");
  return 2.0 * std::sqrt(r * A.form(e));
}

// ---------------------------------------------------------------------------
// Empirical front speed on a strip aligned with a rational direction

// Lattice direction e = (p, q)/|(p, q)| with small integer components.
struct RationalDirection {
  int p = 1, q = 0;
  Vec2 unit() const {
    const double n = std::hypot(static_cast<double>(p), static_cast<double>(q));
    return {p / n, q / n};
  }
};

// Finds the rational representative of e with |p|,|q| <= 8, or throws.
inline RationalDirection rational_direction(Vec2 e) {
  if (std::abs(e.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("strip direction must be a unit vector");
  for (int denom = 1; denom <= 8; ++denom)
    for (int p = -denom; p <= denom; ++p)
      for (int q = -denom; q <= denom; ++q) {
        if (p == 0 && q == 0) continue;
        if (std::max(std::abs(p), std::abs(q)) != denom) continue;
        const RationalDirection d{p, q};
        const Vec2 u = d.unit();
        if (std::abs(u.x - e.x) < 1e-9 && std::abs(u.y - e.y) < 1e-9) return d;
      }
  throw std::invalid_argument("strip direction is not rational with entries up to 8");
}

struct StripOptions {
  double horizon = 20.0;        // total simulated time
  double length = -1.0;         // strip extent ahead of the datum; < 0 -> auto
  double tail = -1.0;           // strip extent behind the datum; < 0 -> auto
  int samples = 64;             // front-position samples over the horizon
  double level = 0.5;           // tracked level set
  double track_fraction = 0.5;  // transverse position of the tracked axis row
};

struct EmpiricalSpeed {
  Vec2 e;
  double speed = 0.0;
  double stderr_ = 0.0;
  bool stalled = false;   // no front motion detected (blocked direction)
  bool extended = false;  // the strip had to be lengthened once
  std::vector<std::pair<double, double>> trace;  // (t, rho(t))
};

namespace detail {

// Minimal double-buffered stepper on a strip in the rotated frame
// (s along e, tau across). The strip is periodic across with the lattice
// period L sqrt(p^2+q^2) and clamped along s. Only diagonal tensors in the
// strip frame are supported, which covers axis strips with any diagonal A
// and rotated strips with A = I.
class StripSimulator {
 public:
  StripSimulator(const PeriodicCellMask& mask, Vec2 e, double a_s, double a_t, double s_lo,
                 double s_hi, double width)
      : e_(e), perp_{-e.y, e.x}, a_s_(a_s), a_t_(a_t), s_lo_(s_lo) {
    ds_ = mask.dx();
    ns_ = static_cast<int>(std::ceil((s_hi - s_lo) / ds_));
    nt_ = std::max(1, static_cast<int>(std::lround(width / ds_)));
    dt_cell_ = width / nt_;
    u_.assign(cells(), 0.0);
    back_.assign(cells(), 0.0);
    rebuild_masks(mask);
  }

  int ns() const { return ns_; }
  int nt() const { return nt_; }
  double s_of(int is) const { return s_lo_ + (is + 0.5) * ds_; }
  bool fluid(int is, int it) const { return fluid_[idx(is, it)] != 0; }
  double value(int is, int it) const { return u_[idx(is, it)]; }
  void set_value(int is, int it, double v) {
    if (fluid_[idx(is, it)]) u_[idx(is, it)] = v;
  }

  double stable_dt(const Nonlinearity& f) const {
    return 0.95 / (2.0 * a_s_ / (ds_ * ds_) + 2.0 * a_t_ / (dt_cell_ * dt_cell_) +
                   f.lipschitz_bound());
  }

  void step(const Nonlinearity& f, double dt) {
    const double cs = dt * a_s_ / (ds_ * ds_);
    const double ct = dt * a_t_ / (dt_cell_ * dt_cell_);
    for (int is = 0; is < ns_; ++is) {
      for (int it = 0; it < nt_; ++it) {
        const std::size_t k = idx(is, it);
        if (!fluid_[k]) {
          back_[k] = 0.0;
          continue;
        }
        const double c = u_[k];
        if (is == 0 || is == ns_ - 1) {
          back_[k] = c;  // clamped strip ends
          continue;
        }
        const int itn = it + 1 == nt_ ? 0 : it + 1;
        const int its = it == 0 ? nt_ - 1 : it - 1;
        const double ue = open_e_[k] ? u_[idx(is + 1, it)] : c;
        const double uw = open_w_[k] ? u_[idx(is - 1, it)] : c;
        const double un = open_n_[k] ? u_[idx(is, itn)] : c;
        const double us = open_s_[k] ? u_[idx(is, its)] : c;
        back_[k] = c + cs * ((ue - c) + (uw - c)) + ct * ((un - c) + (us - c)) + dt * f(c);
      }
    }
    u_.swap(back_);
  }

  // Grows the strip ahead by `extra`, preserving the field.
  void extend(const PeriodicCellMask& mask, double extra) {
    const int add = static_cast<int>(std::ceil(extra / ds_));
    std::vector<double> u_old;
    u_old.swap(u_);
    const int ns_old = ns_;
    ns_ += add;
    u_.assign(cells(), 0.0);
    back_.assign(cells(), 0.0);
    rebuild_masks(mask);
    for (int is = 0; is < ns_old; ++is)
      for (int it = 0; it < nt_; ++it)
        if (fluid_[idx(is, it)])
          u_[idx(is, it)] = u_old[static_cast<std::size_t>(is) * nt_ + it];
  }

 private:
  std::size_t cells() const { return static_cast<std::size_t>(ns_) * nt_; }
  std::size_t idx(int is, int it) const { return static_cast<std::size_t>(is) * nt_ + it; }

  void rebuild_masks(const PeriodicCellMask& mask) {
    fluid_.assign(cells(), 0);
    open_e_.assign(cells(), 0);
    open_w_.assign(cells(), 0);
    open_n_.assign(cells(), 0);
    open_s_.assign(cells(), 0);
    const auto fluid_at = [&](int is, int it) {
      const double s = s_of(is);
      const double t = (it + 0.5) * dt_cell_;
      return mask.fluid_at(e_.x * s + perp_.x * t, e_.y * s + perp_.y * t);
    };
    for (int is = 0; is < ns_; ++is)
      for (int it = 0; it < nt_; ++it) fluid_[idx(is, it)] = fluid_at(is, it) ? 1 : 0;
    for (int is = 0; is < ns_; ++is)
      for (int it = 0; it < nt_; ++it) {
        const std::size_t k = idx(is, it);
        if (!fluid_[k]) continue;
        const int itn = it + 1 == nt_ ? 0 : it + 1;
        const int its = it == 0 ? nt_ - 1 : it - 1;
        open_e_[k] = is + 1 < ns_ && fluid_[idx(is + 1, it)];
        open_w_[k] = is > 0 && fluid_[idx(is - 1, it)];
        open_n_[k] = fluid_[idx(is, itn)];
        open_s_[k] = fluid_[idx(is, its)];
      }
  }

  Vec2 e_, perp_;
  double a_s_, a_t_;
  double s_lo_, ds_ = 0.0, dt_cell_ = 0.0;
  int ns_ = 0, nt_ = 0;
  std::vector<double> u_, back_;
  std::vector<std::uint8_t> fluid_, open_e_, open_w_, open_n_, open_s_;
};

}  // namespace detail

// Measures the pulsating-front speed along a rational direction: half-space
// datum on a strip, level-set position rho(t) on the strip axis, slope of
// the least-squares line through the last half of the samples.
inline EmpiricalSpeed empirical_front_speed(const PeriodicCellMask& mask, const Nonlinearity& f,
                                            const DiffusionTensor& A, Vec2 e,
                                            const StripOptions& options = {}) {
  if (!(options.horizon > 0.0)) throw std::invalid_argument("strip horizon must be positive");
  if (options.samples < 8) throw std::invalid_argument("need at least 8 front samples");
  if (!(options.level > 0.0) || !(options.level < 1.0))
    throw std::invalid_argument("tracked level must lie in (0, 1)");
  if (!(options.track_fraction >= 0.0) || !(options.track_fraction < 1.0))
    throw std::invalid_argument("track fraction must lie in [0, 1)");
  const RationalDirection dir = rational_direction(e);
  const bool axis = dir.p == 0 || dir.q == 0;
  if (!axis && std::abs(A.a - A.b) > 1e-12)
    throw std::invalid_argument(
        "anisotropic tensors are only supported on axis-aligned strips");
  double a_s = A.a, a_t = A.b;
  if (dir.p == 0) std::swap(a_s, a_t);

  const double L = std::max(mask.L1(), mask.L2());
  const double width =
      std::hypot(static_cast<double>(dir.p), static_cast<double>(dir.q)) * L;
  const double guess = 2.0 * std::sqrt(std::max(f.max_slope_ratio(), 0.25));
  const double length =
      options.length > 0.0 ? options.length : guess * options.horizon * 1.3 + 5.0 * L;
  const double tail = options.tail > 0.0 ? options.tail : 5.0 * L;

  detail::StripSimulator sim(mask, dir.unit(), a_s, a_t, -tail, length, width);
  for (int is = 0; is < sim.ns(); ++is)
    for (int it = 0; it < sim.nt(); ++it)
      if (sim.s_of(is) <= 0.0) sim.set_value(is, it, 1.0);

  const int axis_row = std::min(sim.nt() - 1, static_cast<int>(options.track_fraction * sim.nt()));
  const auto front_position = [&]() {
    int found = -1;
    for (int is = sim.ns() - 1; is >= 0; --is)
      if (sim.fluid(is, axis_row) && sim.value(is, axis_row) > options.level) {
        found = is;
        break;
      }
    if (found < 0) return -tail;
    if (found + 1 < sim.ns() && sim.fluid(found + 1, axis_row)) {
      const double u0 = sim.value(found, axis_row), u1 = sim.value(found + 1, axis_row);
      if (u1 <= options.level && u0 > u1)
        return sim.s_of(found) + mask.dx() * (u0 - options.level) / (u0 - u1);
    }
    return sim.s_of(found);
  };

  EmpiricalSpeed out;
  out.e = dir.unit();
  const double dt_max = sim.stable_dt(f);
  out.trace.push_back({0.0, front_position()});
  double t = 0.0;
  for (int sample = 1; sample <= options.samples; ++sample) {
    const double target = options.horizon * sample / options.samples;
    const long steps = std::max(1L, static_cast<long>(std::ceil((target - t) / dt_max - 1e-12)));
    const double dt = (target - t) / steps;
    for (long n = 0; n < steps; ++n) sim.step(f, dt);
    t = target;
    const double rho = front_position();
    out.trace.push_back({t, rho});
    // Keep the front comfortably inside; one extension is allowed.
    const double s_end = sim.s_of(sim.ns() - 1);
    if (rho > s_end - std::max(2.0 * L, 0.1 * length)) {
      if (out.extended)
        throw std::runtime_error("front reached the strip end after one extension");
      sim.extend(mask, 0.75 * length);
      out.extended = true;
    }
  }

  std::vector<double> ts, rhos;
  for (std::size_t i = out.trace.size() / 2; i < out.trace.size(); ++i) {
    ts.push_back(out.trace[i].first);
    rhos.push_back(out.trace[i].second);
  }
  const LineFit fit = fit_line(ts, rhos);
  out.speed = fit.slope;
  out.stderr_ = fit.slope_stderr;
  const double travelled = out.trace.back().second - out.trace[out.trace.size() / 2].second;
  out.stalled = travelled < 2.0 * mask.dx();
  return out;
}

// ---------------------------------------------------------------------------
// Direction-indexed speed profiles

enum class SpeedMethod { eigenvalue, empirical, closed_form };

inline const char* to_string(SpeedMethod m) {
  switch (m) {
    case SpeedMethod::eigenvalue: return "eigenvalue";
    case SpeedMethod::empirical: return "empirical";
    case SpeedMethod::closed_form: return "closed_form";
  }
  return "unknown";
}

struct SpeedSample {
  double theta = 0.0;  // angle of e in [0, 2 pi)
  Vec2 e;
  double speed = 0.0;
  double stderr_ = 0.0;
  SpeedMethod method = SpeedMethod::closed_form;
};

class SpeedProfile {
 public:
  SpeedProfile(std::vector<SpeedSample> samples, std::string description)
      : samples_(std::move(samples)), description_(std::move(description)) {
    if (samples_.empty()) throw std::invalid_argument("speed profile cannot be empty");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
      const SpeedSample& s = samples_[i];
      if (!(s.speed > 0.0)) throw std::invalid_argument("speed profile entries must be positive");
      if (std::abs(s.e.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("speed profile directions must be unit vectors");
      if (s.theta < 0.0 || s.theta >= 2.0 * kPi)
        throw std::invalid_argument("speed profile angles must lie in [0, 2 pi)");
      if (i > 0 && !(s.theta > samples_[i - 1].theta))
        throw std::invalid_argument("speed profile angles must be strictly increasing");
    }
  }

  const std::vector<SpeedSample>& samples() const { return samples_; }
  const std::string& description() const { return description_; }
  std::size_t size() const { return samples_.size(); }

  // Largest angular gap between consecutive directions (wrapping around).
  double max_angular_gap() const {
    double gap = samples_.front().theta + 2.0 * kPi - samples_.back().theta;
    for (std::size_t i = 1; i < samples_.size(); ++i)
      gap = std::max(gap, samples_[i].theta - samples_[i - 1].theta);
    return gap;
  }

  const SpeedSample& argmin() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < samples_.size(); ++i)
      if (samples_[i].speed < samples_[best].speed) best = i;
    return samples_[best];
  }

 private:
  std::vector<SpeedSample> samples_;
  std::string description_;
};

// Batch driver: one speed per direction with the requested method.
// Directions must come as strictly increasing angles; empirical sampling
// requires every direction to be rational.
inline SpeedProfile sample_profile(const PeriodicCellMask& mask, const Nonlinearity& f,
                                   const DiffusionTensor& A, const std::vector<double>& angles,
                                   SpeedMethod method, const StripOptions& strip_options = {},
                                   std::string description = {}) {
  std::vector<SpeedSample> samples;
  samples.reserve(angles.size());
  for (double theta : angles) {
    SpeedSample s;
    s.theta = theta;
    s.e = Vec2::unit(theta);
    s.method = method;
    switch (method) {
      case SpeedMethod::eigenvalue:
        if (!f.is_kpp() || !f.has_linear_rate())
          throw std::invalid_argument("eigenvalue speeds require a KPP reaction");
        s.speed = kpp_front_speed(mask, A, f.linear_rate(), s.e);
        break;
      case SpeedMethod::empirical: {
        const EmpiricalSpeed emp = empirical_front_speed(mask, f, A, s.e, strip_options);
        s.speed = emp.speed;
        s.stderr_ = emp.stderr_;
        break;
      }
      case SpeedMethod::closed_form:
        if (!f.has_linear_rate())
          throw std::invalid_argument("closed-form speeds require f'(0) > 0");
        if (mask.obstacle_count() != 0)
          throw std::invalid_argument("closed-form speeds hold on the free plane only");
        s.speed = closed_form_speed(A, f.linear_rate(), s.e);
        break;
    }
    samples.push_back(s);
  }
  return SpeedProfile(std::move(samples), std::move(description));
}

}  // namespace frontlab

#endif  // FRONTLAB_FRONTS_HPP
