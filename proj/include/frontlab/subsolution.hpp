// Explicit radial subsolution for ignition reactions: a compactly supported
// bump that every solution dominates forever, giving a certified lower bound
// c on the invasion speed. The profile is C on a core disc, a parabola down
// to the matching level K, and an exponential tail reaching 0 at R3.
#ifndef FRONTLAB_SUBSOLUTION_HPP
#define FRONTLAB_SUBSOLUTION_HPP

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "frontlab/dynamics.hpp"
#include "frontlab/geometry.hpp"
#include "frontlab/grid.hpp"

namespace frontlab {

// Radial profile h with h(0)=C, h(R2)=K, h(R3)=0, built so that
// h'' + c_tilde h' + f(h) >= 0 with c_tilde = c + 1/R1. Planted as initial
// data it certifies invasion at speed at least c.
struct SubsolutionBump {
  Nonlinearity reaction = Nonlinearity::zero();  // replaced by construct()
  double theta = 0.0;     // ignition threshold
  double C = 0.0;         // plateau level, in (theta, 1)
  double K = 0.0;         // matching level h(R2), in (theta, C)
  double F = 0.0;         // inf of f over [K, C]
  double alpha = 0.0;     // parabola curvature
  double c = 0.0;         // certified radial speed
  double c_tilde = 0.0;   // c + 1/R1 = 2c
  double beta = 0.0;      // tail amplitude
  double R1 = 0.0, R2 = 0.0, R3 = 0.0;

  double h(double r) const {
    if (r <= R1) return C;
    if (r <= R2) return C - 0.5 * alpha * (r - R1) * (r - R1);
    if (r <= R3) return beta * (std::exp(-c_tilde * (r - R3)) - 1.0);
    return 0.0;
  }
  double h_prime(double r) const {
    if (r <= R1) return 0.0;
    if (r <= R2) return -alpha * (r - R1);
    if (r <= R3) return -beta * c_tilde * std::exp(-c_tilde * (r - R3));
    return 0.0;
  }
  double h_second(double r) const {
    if (r <= R1) return 0.0;
    if (r <= R2) return -alpha;
    if (r <= R3) return beta * c_tilde * c_tilde * std::exp(-c_tilde * (r - R3));
    return 0.0;
  }

  // The closed form keeps R1 = 1/c, which blows up as C - K shrinks; callers
  // with a finite computational window should check the support fits.
  bool practical_for(double max_radius) const { return R3 <= max_radius; }
};

// inf f over the matching band [K, C], by dense grid scan with step 1e-5.
// The band endpoints are included: by continuity the infimum over the open
// interval is attained there when f is monotone near an endpoint.
inline double infimum_F(const Nonlinearity& f, double K, double C) {
  if (!(K < C && C < 1.0) || K <= 0.0)
    throw std::invalid_argument("matching band must satisfy 0 < K < C < 1");
  if (K <= f.ignition())
    throw std::invalid_argument("matching level K must exceed the ignition threshold");
  constexpr double step = 1e-5;
  double best = f(C);
  for (double s = K; s < C; s += step) best = std::min(best, f(s));
  if (best <= 0.0)
    throw std::invalid_argument("reaction is not positive on the matching band");
  return best;
}

// Closed-form solution of the algebraic system behind the bump. The tail
// amplitude comes from the slope-matching relation,
//   c_tilde (beta + K) = sqrt(2 alpha (C - K)),
// which with c = sqrt(2 alpha (C - K)) / (8 K) collapses to beta = 3K.
inline SubsolutionBump construct(const Nonlinearity& f, double theta, double C, double K) {
  if (f.kind() != Nonlinearity::Kind::combustion)
    throw std::invalid_argument("subsolution construction needs an ignition nonlinearity");
  if (std::abs(theta - f.ignition()) > 1e-9)
    throw std::invalid_argument("stated ignition threshold disagrees with the reaction");
  if (!(theta < K && K < C && C < 1.0))
    throw std::invalid_argument("subsolution levels must satisfy theta < K < C < 1");

  SubsolutionBump b;
  b.reaction = f;
  b.theta = theta;
  b.C = C;
  b.K = K;
  b.F = infimum_F(f, K, C);
  b.alpha = b.F / (1.0 + (C - K) / (2.0 * K));
  const double s = std::sqrt(2.0 * b.alpha * (C - K));  // parabola end slope
  b.c = s / (8.0 * K);
  b.R1 = 1.0 / b.c;
  b.c_tilde = b.c + 1.0 / b.R1;
  b.beta = s / b.c_tilde - K;
  if (b.beta <= 0.0)
    throw std::invalid_argument(
        "tail amplitude is nonpositive: slope matching c_tilde (beta + K) = "
        "sqrt(2 alpha (C-K)) has no positive solution");
  b.R2 = std::sqrt(2.0 * (C - K) / b.alpha) + b.R1;
  b.R3 = std::log(1.0 + K / b.beta) / b.c_tilde + b.R2;

  // The four algebraic relations must hold to rounding; the last with
  // equality, since alpha was defined as exactly F / (1 + c_tilde (R2-R1)).
  const double e32 = std::exp(b.c_tilde * (b.R3 - b.R2));
  const double r1 = std::abs(b.beta * (e32 - 1.0) - K) / K;
  const double r2 = std::abs(0.5 * b.alpha * (b.R2 - b.R1) * (b.R2 - b.R1) - (C - K)) / (C - K);
  const double r3 = std::abs(b.alpha * (b.R2 - b.R1) - b.beta * b.c_tilde * e32) / s;
  const double r4 = std::abs(b.F - b.alpha * (1.0 + b.c_tilde * (b.R2 - b.R1))) / b.F;
  if (r1 > 1e-12 || r2 > 1e-12 || r3 > 1e-12 || r4 > 1e-12)
    throw std::logic_error("subsolution algebra lost consistency beyond 1e-12");
  return b;
}

// Defaults: plateau halfway between full invasion and the ignition/decay
// landmarks, matching level halfway down to ignition.
inline SubsolutionBump construct(const Nonlinearity& f) {
  const double theta = f.ignition();
  const double guard = 1e-3 * (1.0 - theta);
  const double C =
      std::clamp(0.5 * (theta + 1.0 + f.decay_threshold()), theta + guard, 1.0 - guard);
  return construct(f, theta, C, 0.5 * (theta + C));
}

// Pointwise certificate for the bump: worst value of
//   h'' + c_tilde h' + f(h)
// per piece on a grid of step h_step, using the exact piecewise derivatives,
// plus the junction/level defects. Everything is checked against the profile
// as stored, so a hand-tampered bump fails here.
struct SubsolutionReport {
  double plateau_margin = 0.0;   // piece [0, R1]: equals f(C)
  double parabola_margin = 0.0;  // piece [R1, R2]
  double tail_margin = 0.0;      // piece [R2, R3]: equals min f(h) up to rounding
  double level_error = 0.0;      // max of |h(R2) - K| and |h(R3)|
  double continuity_error = 0.0; // worst value jump across junctions
  double slope_error = 0.0;      // worst one-sided slope mismatch at R1, R2
  bool admissible = false;
};

inline SubsolutionReport verify(const SubsolutionBump& b, double h_step) {
  if (!(h_step > 0.0) || h_step > b.R1 / 100.0)
    throw std::invalid_argument("verification grid step must be positive and <= R1/100");
  const Nonlinearity& f = b.reaction;
  const auto residual = [&](double r) { return b.h_second(r) + b.c_tilde * b.h_prime(r) + f(b.h(r)); };

  const auto scan = [&](double lo, double hi) {
    double worst = residual(hi);
    for (double r = lo; r < hi; r += h_step) worst = std::min(worst, residual(r));
    return worst;
  };
  SubsolutionReport rep;
  rep.plateau_margin = scan(h_step, b.R1);  // r=0 excluded: profile is flat there anyway
  rep.parabola_margin = scan(b.R1 + 1e-12, b.R2);
  rep.tail_margin = scan(b.R2 + 1e-12, b.R3);

  rep.level_error = std::max(std::abs(b.h(b.R2) - b.K), std::abs(b.h(b.R3)));
  const double eps = 1e-9 * b.R1;
  rep.continuity_error = std::max(std::abs(b.h(b.R1 - eps) - b.h(b.R1 + eps)),
                                  std::abs(b.h(b.R2 - eps) - b.h(b.R2 + eps)));
  const double slope_scale = std::max(1.0, b.alpha * (b.R2 - b.R1));
  rep.slope_error = std::max(std::abs(b.h_prime(b.R1 - eps) - b.h_prime(b.R1 + eps)),
                             std::abs(b.h_prime(b.R2 - eps) - b.h_prime(b.R2 + eps)));
  rep.admissible = rep.plateau_margin >= -1e-8 && rep.parabola_margin >= -1e-8 &&
                   rep.tail_margin >= -1e-8 && rep.level_error <= 1e-9 &&
                   rep.continuity_error <= 1e-6 * slope_scale &&
                   rep.slope_error <= 1e-6 * slope_scale;
  return rep;
}

// Plants u0(x) = h(|x - center|) on the tiled mask. The whole support disc
// must be fluid; the first obstructed cell is reported otherwise.
inline FieldState plant(const SubsolutionBump& b,
                        std::shared_ptr<const PeriodicCellMask> mask, Vec2 center,
                        const WindowSpec* window = nullptr) {
  const PeriodicCellMask& m = *mask;
  const double dx = m.dx();
  const long ci0 = static_cast<long>(std::floor((center.x - b.R3) / dx));
  const long ci1 = static_cast<long>(std::ceil((center.x + b.R3) / dx));
  const long cj0 = static_cast<long>(std::floor((center.y - b.R3) / dx));
  const long cj1 = static_cast<long>(std::ceil((center.y + b.R3) / dx));
  for (long j = cj0; j <= cj1; ++j)
    for (long i = ci0; i <= ci1; ++i) {
      const double px = (static_cast<double>(i) + 0.5) * dx - center.x;
      const double py = (static_cast<double>(j) + 0.5) * dx - center.y;
      if (px * px + py * py > b.R3 * b.R3) continue;
      if (!m.fluid_wrapped(i, j)) {
        std::ostringstream msg;
        msg << "subsolution disc of radius " << b.R3 << " hits an obstacle cell at ("
            << i << ", " << j << ")";
        throw std::invalid_argument(msg.str());
      }
    }

  WindowSpec spec;
  if (window) {
    spec = *window;
  } else {
    const double pad = b.R3 + 2.0 * std::max(m.L1(), m.L2());
    spec = WindowSpec{center.x - pad, center.x + pad, center.y - pad, center.y + pad,
                      BoundaryMode::clamped, BoundaryMode::clamped};
  }
  FieldState state(std::move(mask), spec);
  for (long j = cj0; j <= cj1; ++j)
    for (long i = ci0; i <= ci1; ++i) {
      if (!state.contains(i, j)) continue;
      const double px = (static_cast<double>(i) + 0.5) * dx - center.x;
      const double py = (static_cast<double>(j) + 0.5) * dx - center.y;
      const double r = std::sqrt(px * px + py * py);
      if (r <= b.R3) state.set_value(i, j, b.h(r));
    }
  return state;
}

}  // namespace frontlab

#endif  // FRONTLAB_SUBSOLUTION_HPP
