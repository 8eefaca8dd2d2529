// Small shared vocabulary for the front-propagation laboratory: planar
// vectors, direction fans, and the least-squares line fit used by every
// speed estimator.
#ifndef FRONTLAB_GRID_HPP
#define FRONTLAB_GRID_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace frontlab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  // z-component of the cross product; positive when o lies counterclockwise.
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }

  Vec2 normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize a zero vector");
    return {x / n, y / n};
  }
  // Counterclockwise perpendicular.
  Vec2 perp() const { return {-y, x}; }
  double angle() const { return std::atan2(y, x); }

  static Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }
};

inline constexpr double kPi = 3.14159265358979323846;

// n unit vectors at strictly increasing angles 2*pi*i/n, i = 0..n-1.
inline std::vector<Vec2> direction_fan(int n) {
  if (n < 1) throw std::invalid_argument("direction fan needs n >= 1");
  std::vector<Vec2> dirs;
  dirs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) dirs.push_back(Vec2::unit(2.0 * kPi * i / n));
  return dirs;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

// Ordinary least squares y = a + b t with the usual slope standard error.
// Two points give an exact line with zero reported error.
inline LineFit fit_line(const std::vector<double>& t, const std::vector<double>& y) {
  const std::size_t n = t.size();
  if (n != y.size() || n < 2) throw std::invalid_argument("line fit needs >= 2 matched samples");
  double st = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    st += t[i];
    sy += y[i];
  }
  const double tbar = st / static_cast<double>(n);
  const double ybar = sy / static_cast<double>(n);
  double stt = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    stt += (t[i] - tbar) * (t[i] - tbar);
    sty += (t[i] - tbar) * (y[i] - ybar);
  }
  if (stt == 0.0) throw std::invalid_argument("line fit needs distinct abscissae");
  LineFit fit;
  fit.slope = sty / stt;
  fit.intercept = ybar - fit.slope * tbar;
  if (n > 2) {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - (fit.intercept + fit.slope * t[i]);
      ss_res += r * r;
    }
    fit.slope_stderr = std::sqrt(ss_res / (static_cast<double>(n) - 2.0) / stt);
  }
  return fit;
}

}  // namespace frontlab

#endif  // FRONTLAB_GRID_HPP
