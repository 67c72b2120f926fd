#ifndef TORSYM_CURVE_HPP
#define TORSYM_CURVE_HPP

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "torsym/errors.hpp"
#include "torsym/isometry.hpp"

namespace torsym {

/// Smooth closed curve in R^3 parametrized by phase t in [0,1).
///
/// The evaluator is treated as 1-periodic; a missing derivative evaluator is
/// replaced by central finite differences with step 1/(8*sample_count).
struct ClosedCurve3 {
  std::function<Eigen::Vector3d(double)> eval;
  std::function<Eigen::Vector3d(double)> deriv;  // optional
  int sample_count = 512;

  Eigen::Vector3d position(double t) const;
  Eigen::Vector3d derivative(double t) const;
  Eigen::Vector3d unit_tangent(double t) const;
};

/// Curve on a sphere of varying radius: t in [0,2pi) maps to
/// (r cos t sin theta, r sin t sin theta, r cos theta).
///
/// r must be positive and theta must stay in (0,pi); both are 2pi-periodic.
struct SphericalCurveFamily {
  std::function<double(double)> r;
  std::function<double(double)> theta;
  std::function<double(double)> dr;      // optional
  std::function<double(double)> dtheta;  // optional

  /// Validates positivity/range on a sample grid; throws DegenerateAxis.
  void validate(int samples = 4096) const;

  /// Phase-[0,1) closed curve with analytic derivative when dr/dtheta given.
  ClosedCurve3 to_curve(int sample_count = 2048) const;
};

/// Report for the extremal-structure hypotheses behind the candidate
/// reduction of curve symmetries (pi-periodicity, axis-located extrema,
/// equatorial extrema, and the quarter-phase theta inequalities).
struct ReductionHypotheses {
  bool theta_in_range = false;
  bool r_pi_periodic = false;
  bool theta_pi_periodic = false;
  bool r_max_only_at_0_pi = false;
  bool r_min_only_at_half_pi = false;
  bool theta_equatorial_at_extrema = false;
  bool theta_quarter_inequalities = false;

  bool all() const {
    return theta_in_range && r_pi_periodic && theta_pi_periodic && r_max_only_at_0_pi &&
           r_min_only_at_half_pi && theta_equatorial_at_extrema && theta_quarter_inequalities;
  }
};

ReductionHypotheses check_reduction_hypotheses(const SphericalCurveFamily& family,
                                               int samples = 4096, double tol = 1e-9);

// --- built-in curves -------------------------------------------------------

/// Circle of given radius in the xy-plane, centered at the origin.
ClosedCurve3 unit_circle(double radius = 1.0, int sample_count = 512);

/// Circle mapped by an isometry (arbitrary plane/center).
ClosedCurve3 transformed_circle(double radius, const Isometry3& iso, int sample_count = 512);

/// The inversion-only-symmetric spherical curve with r(t) = 2 + cos 2t,
/// theta(t) = pi/2 + sin(2t)/5.
SphericalCurveFamily figure1_family();
ClosedCurve3 figure1_curve(int sample_count = 2048);

/// Random real Fourier-series curve (trigonometric polynomial per component)
/// with decaying coefficients; deterministic in the seed.
ClosedCurve3 random_fourier_curve(unsigned seed, int max_mode = 4, double decay = 3.0,
                                  int sample_count = 1024);

/// Closed curve through sampled points (t_i, x_i) via periodic cubic spline.
ClosedCurve3 curve_from_samples(const std::vector<double>& t,
                                const std::vector<Eigen::Vector3d>& points,
                                int sample_count = 1024);

// --- discrete curve utilities ----------------------------------------------

std::vector<Eigen::Vector3d> sample_curve(const ClosedCurve3& curve, int n);

double curve_diameter(const ClosedCurve3& curve, int n = 512);
double curve_length(const ClosedCurve3& curve, int n = 2048);
double max_curvature(const ClosedCurve3& curve, int n = 2048);

/// Checks eval(0) ~ eval(1) under refinement and ||gamma'|| > 0 at samples.
/// Throws DegenerateAxis on failure.
void require_regular_closed(const ClosedCurve3& curve, int n = 1024);

/// Image of a curve under an isometry (reparametrization-free).
ClosedCurve3 transform_curve(const Isometry3& iso, const ClosedCurve3& curve);

/// Reversed orientation: t |-> eval(-t).
ClosedCurve3 reverse_curve(const ClosedCurve3& curve);

} // namespace torsym

#endif
