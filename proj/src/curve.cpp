#include "torsym/curve.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "torsym/spline.hpp"

namespace torsym {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double wrap01(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r = 0.0;
  return r;
}
}

Eigen::Vector3d ClosedCurve3::position(double t) const { return eval(wrap01(t)); }

Eigen::Vector3d ClosedCurve3::derivative(double t) const {
  if (deriv) return deriv(wrap01(t));
  const double h = 1.0 / (8.0 * sample_count);
  return (position(t + h) - position(t - h)) / (2.0 * h);
}

Eigen::Vector3d ClosedCurve3::unit_tangent(double t) const {
  Eigen::Vector3d d = derivative(t);
  const double n = d.norm();
  if (n <= 0.0) throw DegenerateAxis("curve derivative vanishes");
  return d / n;
}

void SphericalCurveFamily::validate(int samples) const {
  for (int i = 0; i < samples; ++i) {
    const double t = kTwoPi * i / samples;
    const double rv = r(t), tv = theta(t);
    if (!(rv > 0.0)) throw DegenerateAxis("spherical family requires r(t) > 0");
    if (!(tv > 0.0 && tv < std::numbers::pi))
      throw DegenerateAxis("spherical family requires 0 < theta(t) < pi");
  }
}

ClosedCurve3 SphericalCurveFamily::to_curve(int sample_count) const {
  validate();
  auto rf = r, tf = theta, drf = dr, dtf = dtheta;
  ClosedCurve3 curve;
  curve.sample_count = sample_count;
  curve.eval = [rf, tf](double s) {
    const double t = kTwoPi * s;
    const double rv = rf(t), tv = tf(t);
    return Eigen::Vector3d(rv * std::cos(t) * std::sin(tv), rv * std::sin(t) * std::sin(tv),
                           rv * std::cos(tv));
  };
  if (drf && dtf) {
    curve.deriv = [rf, tf, drf, dtf](double s) {
      const double t = kTwoPi * s;
      const double rv = rf(t), tv = tf(t), rp = drf(t), tp = dtf(t);
      const double ct = std::cos(t), st = std::sin(t);
      const double cth = std::cos(tv), sth = std::sin(tv);
      // d/dt, then scaled by 2*pi for the phase parametrization
      Eigen::Vector3d d(rp * ct * sth - rv * st * sth + rv * ct * cth * tp,
                        rp * st * sth + rv * ct * sth + rv * st * cth * tp,
                        rp * cth - rv * sth * tp);
      return (kTwoPi * d).eval();
    };
  }
  return curve;
}

ReductionHypotheses check_reduction_hypotheses(const SphericalCurveFamily& family, int samples,
                                               double tol) {
  ReductionHypotheses h;
  h.theta_in_range = true;
  h.r_pi_periodic = true;
  h.theta_pi_periodic = true;

  double rmax = -1e300, rmin = 1e300;
  for (int i = 0; i < samples; ++i) {
    const double t = kTwoPi * i / samples;
    const double tv = family.theta(t);
    if (!(tv > 0.0 && tv < std::numbers::pi)) h.theta_in_range = false;
    if (std::abs(family.r(t + std::numbers::pi) - family.r(t)) > tol) h.r_pi_periodic = false;
    if (std::abs(family.theta(t + std::numbers::pi) - tv) > tol) h.theta_pi_periodic = false;
    rmax = std::max(rmax, family.r(t));
    rmin = std::min(rmin, family.r(t));
  }

  // Extremal phases of r must sit exactly on {0,pi} (max) and {pi/2,3pi/2}
  // (min); tolerance picks up the sampled neighborhoods of those phases.
  const double scale = std::max(std::abs(rmax), 1.0);
  const double band = 1e-6 * scale;
  h.r_max_only_at_0_pi = true;
  h.r_min_only_at_half_pi = true;
  for (int i = 0; i < samples; ++i) {
    const double t = kTwoPi * i / samples;
    const double rv = family.r(t);
    // distance of t to {0,pi} mod 2pi is |remainder(t,pi)|; to {pi/2,3pi/2}
    // it is |remainder(t-pi/2,pi)|
    if (rv > rmax - band && std::abs(std::remainder(t, std::numbers::pi)) > 0.1)
      h.r_max_only_at_0_pi = false;
    if (rv < rmin + band &&
        std::abs(std::remainder(t - std::numbers::pi / 2, std::numbers::pi)) > 0.1)
      h.r_min_only_at_half_pi = false;
  }

  h.theta_equatorial_at_extrema = true;
  for (double t : {0.0, std::numbers::pi / 2, std::numbers::pi, 3 * std::numbers::pi / 2})
    if (std::abs(family.theta(t) - std::numbers::pi / 2) > tol) h.theta_equatorial_at_extrema = false;

  const double q1 = family.theta(std::numbers::pi / 4);
  const double q3 = family.theta(3 * std::numbers::pi / 4);
  const double q7 = family.theta(7 * std::numbers::pi / 4);
  h.theta_quarter_inequalities = std::abs(q1 - q3) > tol && std::abs(q1 - q7) > tol;
  return h;
}

ClosedCurve3 unit_circle(double radius, int sample_count) {
  ClosedCurve3 c;
  c.sample_count = sample_count;
  c.eval = [radius](double t) {
    return Eigen::Vector3d(radius * std::cos(kTwoPi * t), radius * std::sin(kTwoPi * t), 0.0);
  };
  c.deriv = [radius](double t) {
    return Eigen::Vector3d(-kTwoPi * radius * std::sin(kTwoPi * t),
                           kTwoPi * radius * std::cos(kTwoPi * t), 0.0);
  };
  return c;
}

ClosedCurve3 transformed_circle(double radius, const Isometry3& iso, int sample_count) {
  return transform_curve(iso, unit_circle(radius, sample_count));
}

SphericalCurveFamily figure1_family() {
  SphericalCurveFamily f;
  f.r = [](double t) { return 2.0 + std::cos(2.0 * t); };
  f.theta = [](double t) { return std::numbers::pi / 2 + std::sin(2.0 * t) / 5.0; };
  f.dr = [](double t) { return -2.0 * std::sin(2.0 * t); };
  f.dtheta = [](double t) { return 2.0 * std::cos(2.0 * t) / 5.0; };
  return f;
}

ClosedCurve3 figure1_curve(int sample_count) { return figure1_family().to_curve(sample_count); }

ClosedCurve3 random_fourier_curve(unsigned seed, int max_mode, double decay, int sample_count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  // Base circle plus decaying random harmonics; kept mild so the curve stays
  // embedded with a usable reach.
  std::vector<Eigen::Vector3d> ak(max_mode + 1), bk(max_mode + 1);
  for (int k = 0; k <= max_mode; ++k) {
    const double amp = (k == 0) ? 0.0 : 0.25 / std::pow(static_cast<double>(k), decay);
    for (int c = 0; c < 3; ++c) {
      ak[k][c] = amp * unif(rng);
      bk[k][c] = amp * unif(rng);
    }
  }
  ClosedCurve3 curve;
  curve.sample_count = sample_count;
  curve.eval = [ak, bk, max_mode](double t) {
    const double a = kTwoPi * t;
    Eigen::Vector3d p(std::cos(a), std::sin(a), 0.0);
    for (int k = 1; k <= max_mode; ++k)
      p += ak[k] * std::cos(k * a) + bk[k] * std::sin(k * a);
    return p;
  };
  curve.deriv = [ak, bk, max_mode](double t) {
    const double a = kTwoPi * t;
    Eigen::Vector3d d(-std::sin(a), std::cos(a), 0.0);
    for (int k = 1; k <= max_mode; ++k)
      d += k * (-ak[k] * std::sin(k * a) + bk[k] * std::cos(k * a));
    return (kTwoPi * d).eval();
  };
  return curve;
}

ClosedCurve3 curve_from_samples(const std::vector<double>& t,
                                const std::vector<Eigen::Vector3d>& points, int sample_count) {
  if (t.size() != points.size() || points.size() < 3)
    throw DegenerateAxis("curve sample list too short or mismatched");
  // Resample onto a uniform phase grid; input phases must be sorted in [0,1).
  for (size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1])) throw DegenerateAxis("curve sample phases must be increasing");
  const int n = static_cast<int>(points.size());
  bool uniform = true;
  for (int i = 0; i < n; ++i)
    if (std::abs(t[i] - static_cast<double>(i) / n) > 1e-9) { uniform = false; break; }

  std::vector<Eigen::Vector3d> grid;
  if (uniform) {
    grid = points;
  } else {
    // Piecewise-linear resample, then smooth through the spline.
    grid.resize(n);
    for (int i = 0; i < n; ++i) {
      const double s = static_cast<double>(i) / n;
      size_t j = 0;
      while (j + 1 < t.size() && t[j + 1] <= s) ++j;
      const double t0 = t[j];
      const double t1 = (j + 1 < t.size()) ? t[j + 1] : t[0] + 1.0;
      const Eigen::Vector3d& p0 = points[j];
      const Eigen::Vector3d& p1 = points[(j + 1) % points.size()];
      const double w = (t1 > t0) ? (s - t0) / (t1 - t0) : 0.0;
      grid[i] = (1.0 - w) * p0 + w * p1;
    }
  }
  auto spline = std::make_shared<PeriodicSplineCurve>(grid);
  ClosedCurve3 curve;
  curve.sample_count = sample_count;
  curve.eval = [spline](double s) { return (*spline)(s); };
  curve.deriv = [spline](double s) { return spline->derivative(s); };
  return curve;
}

std::vector<Eigen::Vector3d> sample_curve(const ClosedCurve3& curve, int n) {
  std::vector<Eigen::Vector3d> out(n);
  for (int i = 0; i < n; ++i) out[i] = curve.position(static_cast<double>(i) / n);
  return out;
}

double curve_diameter(const ClosedCurve3& curve, int n) {
  const auto pts = sample_curve(curve, n);
  double d2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d2 = std::max(d2, (pts[i] - pts[j]).squaredNorm());
  return std::sqrt(d2);
}

double curve_length(const ClosedCurve3& curve, int n) {
  double len = 0.0;
  Eigen::Vector3d prev = curve.position(0.0);
  for (int i = 1; i <= n; ++i) {
    const Eigen::Vector3d p = curve.position(static_cast<double>(i) / n);
    len += (p - prev).norm();
    prev = p;
  }
  return len;
}

double max_curvature(const ClosedCurve3& curve, int n) {
  double kmax = 0.0;
  const double h = 1.0 / (8.0 * std::max(curve.sample_count, n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / n;
    const Eigen::Vector3d d1 = curve.derivative(t);
    const Eigen::Vector3d d2 = (curve.derivative(t + h) - curve.derivative(t - h)) / (2.0 * h);
    const double speed = d1.norm();
    if (speed <= 0.0) throw DegenerateAxis("curve derivative vanishes");
    kmax = std::max(kmax, d1.cross(d2).norm() / (speed * speed * speed));
  }
  return kmax;
}

void require_regular_closed(const ClosedCurve3& curve, int n) {
  const double scale = std::max(curve_diameter(curve, 128), 1e-300);
  for (double eps : {1e-4, 1e-6, 1e-8}) {
    const double gap = (curve.position(0.0) - curve.position(1.0 - eps)).norm();
    // closure gap must shrink proportionally with the probe offset
    if (gap > 1e3 * eps * scale + 1e-9 * scale)
      throw DegenerateAxis("curve is not closed (eval(0) != eval(1^-))");
  }
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / n;
    if (curve.derivative(t).norm() <= 1e-12 * scale)
      throw DegenerateAxis("curve is not regular (derivative vanishes)");
  }
}

ClosedCurve3 transform_curve(const Isometry3& iso, const ClosedCurve3& curve) {
  ClosedCurve3 out;
  out.sample_count = curve.sample_count;
  out.eval = [iso, curve](double t) { return iso(curve.position(t)); };
  out.deriv = [iso, curve](double t) { return iso.map_direction(curve.derivative(t)); };
  return out;
}

ClosedCurve3 reverse_curve(const ClosedCurve3& curve) {
  ClosedCurve3 out;
  out.sample_count = curve.sample_count;
  out.eval = [curve](double t) { return curve.position(-t); };
  out.deriv = [curve](double t) { return (-curve.derivative(-t)).eval(); };
  return out;
}

} // namespace torsym
