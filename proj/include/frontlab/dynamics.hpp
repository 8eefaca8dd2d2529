// Monotone explicit finite-difference integrator for
//   du/dt = div(A grad u) + f(u)
// on perforated periodic domains with homogeneous Neumann conditions on
// obstacle boundaries, plus the reaction-term and initial-data vocabulary.
#ifndef FRONTLAB_DYNAMICS_HPP
#define FRONTLAB_DYNAMICS_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frontlab/geometry.hpp"
#include "frontlab/grid.hpp"

namespace frontlab {

// ---------------------------------------------------------------------------
// Reaction terms

// A reaction term f on [0,1] with its class tag. All constructors scan f on a
// dense grid (step 1e-4) and reject profiles violating the class axioms:
// f(0) = f(1) = 0, f >= 0, f nonincreasing on [S, 1], f(u) <= f'(0) u for the
// KPP class, and f = 0 on [0, theta] with f > 0 somewhere above theta for the
// combustion class.
class Nonlinearity {
 public:
  enum class Kind { kpp_quadratic, combustion, monostable_table };

  // f(u) = r u (1 - u).
  static Nonlinearity kpp(double r) {
    if (r <= 0.0) throw std::invalid_argument("KPP reaction needs linear rate r > 0");
    Nonlinearity f;
    f.kind_ = Kind::kpp_quadratic;
    f.rate_ = r;
    f.linear_rate_ = r;
    f.decay_threshold_ = 0.5;
    f.finish(true);
    return f;
  }

  // f(u) = amplitude (u - theta)(1 - u) for u > theta, 0 below the ignition
  // threshold.
  static Nonlinearity combustion(double theta, double amplitude) {
    if (!(theta > 0.0 && theta < 1.0))
      throw std::invalid_argument("combustion ignition threshold must lie in (0,1)");
    if (amplitude <= 0.0) throw std::invalid_argument("combustion amplitude must be positive");
    Nonlinearity f;
    f.kind_ = Kind::combustion;
    f.rate_ = amplitude;
    f.theta_ = theta;
    f.linear_rate_ = 0.0;
    f.decay_threshold_ = 0.5 * (theta + 1.0);
    f.finish(false);
    return f;
  }

  // f sampled on a uniform grid over [0,1] (>= 2 nodes), evaluated by linear
  // interpolation. linear_rate is the caller's f'(0) (0 for degenerate
  // monostable terms, which are accepted but excluded from eigenvalue
  // routes); S is the decay threshold above which f must not increase.
  static Nonlinearity monostable_from_table(std::vector<double> values, double linear_rate,
                                            double S) {
    if (values.size() < 2)
      throw std::invalid_argument("monostable table needs at least 2 samples");
    if (linear_rate < 0.0) throw std::invalid_argument("linear rate must be >= 0");
    if (!(S > 0.0 && S < 1.0)) throw std::invalid_argument("decay threshold must lie in (0,1)");
    Nonlinearity f;
    f.kind_ = Kind::monostable_table;
    f.table_ = std::move(values);
    f.linear_rate_ = linear_rate;
    f.decay_threshold_ = S;
    f.finish(false);
    return f;
  }

  // Convenience: tabulate an arbitrary monostable profile.
  static Nonlinearity monostable(const std::function<double(double)>& fn, double linear_rate,
                                 double S, int samples = 4096) {
    std::vector<double> values(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
      values[static_cast<std::size_t>(i)] = fn(static_cast<double>(i) / (samples - 1));
    return monostable_from_table(std::move(values), linear_rate, S);
  }

  // The zero reaction (pure heat flow), as a degenerate monostable table.
  static Nonlinearity zero() { return monostable_from_table({0.0, 0.0, 0.0}, 0.0, 0.5); }

  double operator()(double u) const {
    switch (kind_) {
      case Kind::kpp_quadratic:
        return rate_ * u * (1.0 - u);
      case Kind::combustion:
        return u > theta_ ? rate_ * (u - theta_) * (1.0 - u) : 0.0;
      case Kind::monostable_table: {
        const double s = std::clamp(u, 0.0, 1.0) * static_cast<double>(table_.size() - 1);
        const auto i = static_cast<std::size_t>(s);
        if (i + 1 >= table_.size()) return table_.back();
        const double w = s - static_cast<double>(i);
        return table_[i] + w * (table_[i + 1] - table_[i]);
      }
    }
    return 0.0;
  }

  Kind kind() const { return kind_; }
  // f'(0); zero for combustion and degenerate monostable terms.
  double linear_rate() const { return linear_rate_; }
  bool has_linear_rate() const { return linear_rate_ > 0.0; }
  // Ignition threshold (combustion only; 0 otherwise).
  double ignition() const { return theta_; }
  double decay_threshold() const { return decay_threshold_; }
  // max over (0,1] of f(u)/u, including the analytic limit f'(0) at 0.
  double max_slope_ratio() const { return max_slope_ratio_; }
  // A Lipschitz bound for f on [0,1], from the dense scan.
  double lipschitz_bound() const { return lipschitz_; }
  // True iff f'(0) > 0 and f(u) <= f'(0) u on the dense grid, i.e. the
  // linearization at 0 controls f and the eigenvalue route applies.
  bool is_kpp() const { return kpp_valid_; }

 private:
  Nonlinearity() = default;

  // Dense-grid validation shared by all constructors, plus the cached
  // extremal quantities used by speed bounds and time-step control.
  void finish(bool must_be_kpp) {
    constexpr double h = 1e-4;
    constexpr int n = 10000;  // u = 0, h, ..., 1
    const double f0 = (*this)(0.0), f1 = (*this)(1.0);
    if (std::abs(f0) > 1e-12 || std::abs(f1) > 1e-12)
      throw std::invalid_argument("reaction must vanish at u=0 and u=1");
    double prev = f0;
    max_slope_ratio_ = linear_rate_;
    lipschitz_ = 0.0;
    kpp_valid_ = linear_rate_ > 0.0;
    for (int i = 1; i <= n; ++i) {
      const double u = i * h;
      const double fu = (*this)(u);
      if (fu < -1e-12) throw std::invalid_argument("reaction must be nonnegative on [0,1]");
      if (u - h >= decay_threshold_ - 1e-12 && fu > prev + 1e-12)
        throw std::invalid_argument("reaction must be nonincreasing above the decay threshold");
      if (fu > linear_rate_ * u + 1e-12) kpp_valid_ = false;
      max_slope_ratio_ = std::max(max_slope_ratio_, fu / u);
      lipschitz_ = std::max(lipschitz_, std::abs(fu - prev) / h);
      prev = fu;
    }
    if (must_be_kpp && !kpp_valid_)
      throw std::invalid_argument("KPP reaction must satisfy f(u) <= f'(0) u with f'(0) > 0");
    if (kind_ == Kind::combustion) {
      bool positive_above = false;
      for (int i = 0; i <= n; ++i) {
        const double u = i * h;
        const double fu = (*this)(u);
        if (u <= theta_ && std::abs(fu) > 1e-12)
          throw std::invalid_argument("combustion reaction must vanish on [0, theta]");
        positive_above = positive_above || fu > 1e-12;
      }
      if (!positive_above)
        throw std::invalid_argument("combustion reaction must be positive somewhere above theta");
    }
  }

  Kind kind_ = Kind::monostable_table;
  double rate_ = 0.0;   // r for KPP, amplitude for combustion
  double theta_ = 0.0;  // ignition threshold (combustion)
  double linear_rate_ = 0.0;
  double decay_threshold_ = 0.5;
  double max_slope_ratio_ = 0.0;
  double lipschitz_ = 0.0;
  bool kpp_valid_ = false;
  std::vector<double> table_;
};

// Constant diagonal diffusion tensor diag(a, b).
struct DiffusionTensor {
  double a = 1.0;
  double b = 1.0;

  DiffusionTensor() = default;
  DiffusionTensor(double a_, double b_) : a(a_), b(b_) {
    if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("diffusion entries must be positive");
  }

  static DiffusionTensor identity() { return {1.0, 1.0}; }
  // Quadratic form e . A e.
  double form(Vec2 e) const { return a * e.x * e.x + b * e.y * e.y; }
  Vec2 apply(Vec2 v) const { return {a * v.x, b * v.y}; }
};

// Largest explicit-Euler step for which the pure diffusion update is
// order-preserving, with a 5% safety factor.
inline double cfl_dt(const PeriodicCellMask& mask, const DiffusionTensor& A) {
  return mask.dx() * mask.dx() / (2.0 * (A.a + A.b)) * 0.95;
}

// Step that also keeps the full reaction-diffusion update monotone: equals
// cfl_dt for f = 0 and shrinks for stiff reactions so that the center
// coefficient 1 - 2(cx+cy) - dt Lip(f) stays positive.
inline double stable_dt(const PeriodicCellMask& mask, const DiffusionTensor& A,
                        const Nonlinearity& f) {
  const double diffusion_rate = 2.0 * (A.a + A.b) / (mask.dx() * mask.dx());
  return 0.95 / (diffusion_rate + f.lipschitz_bound());
}

// ---------------------------------------------------------------------------
// Field state

enum class BoundaryMode { periodic, clamped };

// Rectangular window over the unfolded tiling, in absolute cell indices
// (cell (i,j) has center ((i+0.5) dx, (j+0.5) dx); indices may be negative).
struct WindowSpec {
  double xlo = 0.0, xhi = 0.0, ylo = 0.0, yhi = 0.0;
  BoundaryMode mode_x = BoundaryMode::clamped;
  BoundaryMode mode_y = BoundaryMode::clamped;
};

// The evolving field u over a window of the unfolded tiling. Values live on
// fluid cells (obstacle cells hold 0); faces adjacent to obstacle cells carry
// zero flux, which realizes the Neumann condition on the staircase boundary.
// A periodic axis wraps the window onto itself (the window span must then be
// a whole number of periods); a clamped axis freezes the window-edge cells,
// and windows are sized so fronts never reach them while being measured.
class FieldState {
 public:
  FieldState(std::shared_ptr<const PeriodicCellMask> mask, const WindowSpec& spec)
      : mask_(std::move(mask)) {
    if (!mask_) throw std::invalid_argument("field state needs a mask");
    const double dx = mask_->dx();
    mode_x_ = spec.mode_x;
    mode_y_ = spec.mode_y;
    i0_ = static_cast<long>(std::floor(spec.xlo / dx + 1e-9));
    j0_ = static_cast<long>(std::floor(spec.ylo / dx + 1e-9));
    long i1 = static_cast<long>(std::ceil(spec.xhi / dx - 1e-9));
    long j1 = static_cast<long>(std::ceil(spec.yhi / dx - 1e-9));
    if (mode_x_ == BoundaryMode::periodic) {
      const long per = mask_->nx();
      i1 = i0_ + ((i1 - i0_ + per - 1) / per) * per;
      if (i1 == i0_) i1 = i0_ + per;
    }
    if (mode_y_ == BoundaryMode::periodic) {
      const long per = mask_->ny();
      j1 = j0_ + ((j1 - j0_ + per - 1) / per) * per;
      if (j1 == j0_) j1 = j0_ + per;
    }
    if (i1 <= i0_ || j1 <= j0_) throw std::invalid_argument("window must have positive extent");
    w_ = static_cast<int>(i1 - i0_);
    h_ = static_cast<int>(j1 - j0_);
    stride_ = w_ + 2;
    values_.assign(static_cast<std::size_t>(stride_) * (h_ + 2), 0.0);
    back_.assign(values_.size(), 0.0);

    // Face-openness multipliers from the (always periodic) mask geometry.
    const std::size_t cells = static_cast<std::size_t>(w_) * h_;
    open_e_.resize(cells);
    open_w_.resize(cells);
    open_n_.resize(cells);
    open_s_.resize(cells);
    fluid_.resize(cells);
    for (int j = 0; j < h_; ++j)
      for (int i = 0; i < w_; ++i) {
        const long gi = i0_ + i, gj = j0_ + j;
        const bool c = mask_->fluid_wrapped(gi, gj);
        const std::size_t k = static_cast<std::size_t>(j) * w_ + i;
        fluid_[k] = c ? 1 : 0;
        open_e_[k] = (c && mask_->fluid_wrapped(gi + 1, gj)) ? 1 : 0;
        open_w_[k] = (c && mask_->fluid_wrapped(gi - 1, gj)) ? 1 : 0;
        open_n_[k] = (c && mask_->fluid_wrapped(gi, gj + 1)) ? 1 : 0;
        open_s_[k] = (c && mask_->fluid_wrapped(gi, gj - 1)) ? 1 : 0;
      }
  }

  const PeriodicCellMask& mask() const { return *mask_; }
  std::shared_ptr<const PeriodicCellMask> mask_ptr() const { return mask_; }
  double time() const { return t_; }
  void set_time(double t) { t_ = t; }
  int width() const { return w_; }
  int height() const { return h_; }
  long i0() const { return i0_; }
  long j0() const { return j0_; }
  BoundaryMode mode_x() const { return mode_x_; }
  BoundaryMode mode_y() const { return mode_y_; }
  double dx() const { return mask_->dx(); }

  bool fluid_cell(long gi, long gj) const {
    return fluid_[cell_index(gi, gj)] != 0;
  }
  double value(long gi, long gj) const { return values_[halo_index(gi, gj)]; }
  void set_value(long gi, long gj, double v) {
    if (v < 0.0 || v > 1.0) throw std::invalid_argument("field values must lie in [0,1]");
    if (fluid_[cell_index(gi, gj)]) values_[halo_index(gi, gj)] = v;
  }
  Vec2 cell_center(long gi, long gj) const {
    return {(static_cast<double>(gi) + 0.5) * dx(), (static_cast<double>(gj) + 0.5) * dx()};
  }
  bool contains(long gi, long gj) const {
    return gi >= i0_ && gi < i0_ + w_ && gj >= j0_ && gj < j0_ + h_;
  }

  double sup() const {
    double m = 0.0;
    for (int j = 0; j < h_; ++j)
      for (int i = 0; i < w_; ++i)
        m = std::max(m, values_[static_cast<std::size_t>(j + 1) * stride_ + i + 1]);
    return m;
  }
  double infimum_on_fluid() const {
    double m = 1.0;
    for (int j = 0; j < h_; ++j)
      for (int i = 0; i < w_; ++i)
        if (fluid_[static_cast<std::size_t>(j) * w_ + i])
          m = std::min(m, values_[static_cast<std::size_t>(j + 1) * stride_ + i + 1]);
    return m;
  }
  // Total mass  sum u dx^2.
  double mass() const {
    double s = 0.0;
    for (int j = 0; j < h_; ++j)
      for (int i = 0; i < w_; ++i)
        s += values_[static_cast<std::size_t>(j + 1) * stride_ + i + 1];
    return s * dx() * dx();
  }

  // One explicit Euler step; dt must respect cfl_dt for the tensor used.
  void step(const Nonlinearity& f, const DiffusionTensor& A, double dt) {
    if (dt <= 0.0 || dt > cfl_dt(*mask_, A) * (1.0 + 1e-12))
      throw std::invalid_argument("time step violates the CFL bound");
    fill_halos();
    const double inv = 1.0 / (dx() * dx());
    const double cx = A.a * dt * inv, cy = A.b * dt * inv;
    update_cells(cx, cy, dt, f);
    if (mode_x_ == BoundaryMode::clamped)
      for (int j = 0; j < h_; ++j) {
        back_[halo_raw(0, j)] = values_[halo_raw(0, j)];
        back_[halo_raw(w_ - 1, j)] = values_[halo_raw(w_ - 1, j)];
      }
    if (mode_y_ == BoundaryMode::clamped)
      for (int i = 0; i < w_; ++i) {
        back_[halo_raw(i, 0)] = values_[halo_raw(i, 0)];
        back_[halo_raw(i, h_ - 1)] = values_[halo_raw(i, h_ - 1)];
      }
    values_.swap(back_);
    t_ += dt;
  }

 private:
  std::size_t cell_index(long gi, long gj) const {
    assert(contains(gi, gj));
    return static_cast<std::size_t>(gj - j0_) * w_ + static_cast<std::size_t>(gi - i0_);
  }
  std::size_t halo_index(long gi, long gj) const {
    assert(contains(gi, gj));
    return static_cast<std::size_t>(gj - j0_ + 1) * stride_ +
           static_cast<std::size_t>(gi - i0_ + 1);
  }
  std::size_t halo_raw(int i, int j) const {
    return static_cast<std::size_t>(j + 1) * stride_ + static_cast<std::size_t>(i + 1);
  }

  void fill_halos() {
    // Left/right halo columns.
    for (int j = 0; j < h_; ++j) {
      const std::size_t row = static_cast<std::size_t>(j + 1) * stride_;
      if (mode_x_ == BoundaryMode::periodic) {
        values_[row] = values_[row + w_];
        values_[row + w_ + 1] = values_[row + 1];
      } else {
        values_[row] = values_[row + 1];
        values_[row + w_ + 1] = values_[row + w_];
      }
    }
    // Bottom/top halo rows (corners unused by the 5-point stencil).
    const std::size_t top = static_cast<std::size_t>(h_ + 1) * stride_;
    const std::size_t last = static_cast<std::size_t>(h_) * stride_;
    const std::size_t first = stride_;
    for (int i = 1; i <= w_; ++i) {
      if (mode_y_ == BoundaryMode::periodic) {
        values_[i] = values_[last + i];
        values_[top + i] = values_[first + i];
      } else {
        values_[i] = values_[first + i];
        values_[top + i] = values_[last + i];
      }
    }
  }

  template <class F>
  void update_cells(double cx, double cy, double dt, const F& f) {
    for (int j = 0; j < h_; ++j) {
      const double* row = values_.data() + static_cast<std::size_t>(j + 1) * stride_ + 1;
      const double* row_n = row + stride_;
      const double* row_s = row - stride_;
      double* out = back_.data() + static_cast<std::size_t>(j + 1) * stride_ + 1;
      const std::uint8_t* fe = open_e_.data() + static_cast<std::size_t>(j) * w_;
      const std::uint8_t* fw = open_w_.data() + static_cast<std::size_t>(j) * w_;
      const std::uint8_t* fn = open_n_.data() + static_cast<std::size_t>(j) * w_;
      const std::uint8_t* fs = open_s_.data() + static_cast<std::size_t>(j) * w_;
      for (int i = 0; i < w_; ++i) {
        const double u = row[i];
        const double flux = cx * (fe[i] * (row[i + 1] - u) + fw[i] * (row[i - 1] - u)) +
                            cy * (fn[i] * (row_n[i] - u) + fs[i] * (row_s[i] - u));
        out[i] = u + flux + dt * f(u);
      }
    }
  }

  std::shared_ptr<const PeriodicCellMask> mask_;
  double t_ = 0.0;
  long i0_ = 0, j0_ = 0;
  int w_ = 0, h_ = 0, stride_ = 0;
  BoundaryMode mode_x_ = BoundaryMode::clamped;
  BoundaryMode mode_y_ = BoundaryMode::clamped;
  std::vector<double> values_, back_;  // halo layout (w+2) x (h+2)
  std::vector<std::uint8_t> open_e_, open_w_, open_n_, open_s_, fluid_;
};

// ---------------------------------------------------------------------------
// Initial data

// u0 = eta on fluid cells within distance r of `center`, 0 elsewhere.
inline FieldState initial_bump(std::shared_ptr<const PeriodicCellMask> mask,
                               const WindowSpec& window, double eta, double r, Vec2 center) {
  if (eta < 0.0 || eta > 1.0)
    throw std::invalid_argument("bump level must lie in [0,1]");
  if (r <= 0.0) throw std::invalid_argument("bump radius must be positive");
  if (!mask->fluid_at(center.x, center.y))
    throw std::invalid_argument("bump center lies inside an obstacle");
  FieldState state(std::move(mask), window);
  const double r2 = r * r;
  for (long j = state.j0(); j < state.j0() + state.height(); ++j)
    for (long i = state.i0(); i < state.i0() + state.width(); ++i) {
      const Vec2 p = state.cell_center(i, j);
      const double ddx = p.x - center.x, ddy = p.y - center.y;
      if (ddx * ddx + ddy * ddy <= r2) state.set_value(i, j, eta);
    }
  return state;
}

// u0 = 1 where x . e <= offset, 0 elsewhere (cell-center test on fluid cells).
inline FieldState initial_half_space(std::shared_ptr<const PeriodicCellMask> mask,
                                     const WindowSpec& window, Vec2 e, double offset) {
  const double n = e.norm();
  if (std::abs(n - 1.0) > 1e-9)
    throw std::invalid_argument("half-space direction must be a unit vector");
  FieldState state(std::move(mask), window);
  for (long j = state.j0(); j < state.j0() + state.height(); ++j)
    for (long i = state.i0(); i < state.i0() + state.width(); ++i)
      if (state.cell_center(i, j).dot(e) <= offset) state.set_value(i, j, 1.0);
  return state;
}

// ---------------------------------------------------------------------------
// Evolution driver and observers

// Samples a scalar probe of the state at (approximately) regular intervals.
struct Observer {
  std::string name;
  double period = 0.1;
  std::function<double(const FieldState&)> probe;
  std::vector<std::pair<double, double>> log;  // (t, value)
};

// Advances the state to time t + T with the monotone step from stable_dt,
// sampling observers at t, every observer period, and at the final time.
inline void evolve(FieldState& state, const Nonlinearity& f, const DiffusionTensor& A, double T,
                   std::vector<Observer>* observers = nullptr) {
  if (T <= 0.0) throw std::invalid_argument("evolution horizon must be positive");
  const double dt_max = stable_dt(state.mask(), A, f);
  const long n = std::max(1L, static_cast<long>(std::ceil(T / dt_max - 1e-12)));
  const double dt = T / static_cast<double>(n);
  auto sample = [&](bool force) {
    if (!observers) return;
    for (Observer& obs : *observers) {
      if (!obs.log.empty() && !force &&
          state.time() < obs.log.back().first + obs.period - 1e-12)
        continue;
      obs.log.emplace_back(state.time(), obs.probe(state));
    }
  };
  sample(true);
  for (long s = 0; s < n; ++s) {
    state.step(f, A, dt);
    sample(s + 1 == n);
  }
}

// ---------------------------------------------------------------------------
// Snapshot / observer export

// CSV rows (x, y, u) over the window in the mask file's ordering (y rows
// increasing, x within a row).
inline void save_snapshot_csv(const FieldState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open snapshot file for writing: " + path);
  out << "x,y,u\n";
  for (long j = state.j0(); j < state.j0() + state.height(); ++j)
    for (long i = state.i0(); i < state.i0() + state.width(); ++i) {
      const Vec2 p = state.cell_center(i, j);
      out << detail::format_double(p.x) << ',' << detail::format_double(p.y) << ','
          << detail::format_double(state.value(i, j)) << '\n';
    }
  if (!out) throw std::runtime_error("failed writing snapshot file: " + path);
}

inline void save_observer_csv(const Observer& obs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open observer file for writing: " + path);
  out << "t," << (obs.name.empty() ? std::string("quantity") : obs.name) << "\n";
  for (const auto& [t, v] : obs.log)
    out << detail::format_double(t) << ',' << detail::format_double(v) << '\n';
  if (!out) throw std::runtime_error("failed writing observer file: " + path);
}

}  // namespace frontlab

#endif  // FRONTLAB_DYNAMICS_HPP
