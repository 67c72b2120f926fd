#include "torsym/winding.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace torsym {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kIntegerDriftBound = 0.1;
}

Eigen::Vector3d Line3::unit_direction() const {
  const double n = direction.norm();
  if (n <= 0.0) throw DegenerateAxis("line direction is zero");
  return direction / n;
}

double Line3::distance_to(const Eigen::Vector3d& x) const {
  const Eigen::Vector3d d = unit_direction();
  const Eigen::Vector3d r = x - point;
  return (r - d.dot(r) * d).norm();
}

WindingDetail winding_number_detail(const ClosedCurve3& curve, const Line3& axis, int samples,
                                    double min_distance) {
  const int n = samples > 0 ? samples : curve.sample_count;
  const Eigen::Vector3d d = axis.unit_direction();
  // Orthonormal frame (e1, e2, d), right-handed so that positive winding
  // matches the orientation of the line.
  Eigen::Vector3d e1 = d.unitOrthogonal();
  Eigen::Vector3d e2 = d.cross(e1);

  double total = 0.0;
  double px = 0.0, py = 0.0;
  for (int i = 0; i <= n; ++i) {
    const Eigen::Vector3d r = curve.position(static_cast<double>(i % n) / n) - axis.point;
    const double x = e1.dot(r), y = e2.dot(r);
    const double rad = std::hypot(x, y);
    if (rad <= min_distance) {
      std::ostringstream os;
      os << "curve passes within " << rad << " of the axis";
      throw CurveHitsAxis(os.str());
    }
    if (i > 0) {
      // signed angle between consecutive projections
      total += std::atan2(px * y - py * x, px * x + py * y);
    }
    px = x;
    py = y;
  }
  WindingDetail out;
  out.raw = total / kTwoPi;
  out.value = static_cast<int>(std::lround(out.raw));
  out.drift = std::abs(out.raw - out.value);
  if (out.drift > kIntegerDriftBound) {
    std::ostringstream os;
    os << "winding " << out.raw << " is not within 0.1 of an integer; refine sampling";
    throw NonIntegerWinding(os.str());
  }
  return out;
}

int winding_number(const ClosedCurve3& curve, const Line3& axis, int samples,
                   double min_distance) {
  return winding_number_detail(curve, axis, samples, min_distance).value;
}

LinkingDetail linking_number_detail(const ClosedCurve3& c1, const ClosedCurve3& c2, int samples,
                                    double min_distance) {
  const int n = samples;
  std::vector<Eigen::Vector3d> p1(n), d1(n), p2(n), d2(n);
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) / n;  // midpoint rule
    p1[i] = c1.position(t);
    d1[i] = c1.derivative(t);
    p2[i] = c2.position(t);
    d2[i] = c2.derivative(t);
  }
  double tol = min_distance;
  if (tol <= 0.0) {
    const double scale = std::max(curve_diameter(c1, 128), curve_diameter(c2, 128));
    tol = 1e-6 * scale;
  }

  double acc = 0.0;
  double min_d = 1e300;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Eigen::Vector3d diff = p1[i] - p2[j];
      const double dn = diff.norm();
      min_d = std::min(min_d, dn);
      if (dn <= tol) {
        std::ostringstream os;
        os << "curves come within " << dn << " of each other";
        throw CurvesIntersect(os.str());
      }
      acc += d1[i].cross(d2[j]).dot(diff) / (dn * dn * dn);
    }
  }
  LinkingDetail out;
  out.raw = acc / (4.0 * std::numbers::pi * n * n);
  out.value = static_cast<int>(std::lround(out.raw));
  out.drift = std::abs(out.raw - out.value);
  if (out.drift > kIntegerDriftBound) {
    std::ostringstream os;
    os << "linking " << out.raw << " is not within 0.1 of an integer (min distance " << min_d
       << "); refine sampling";
    throw NonIntegerLinking(os.str());
  }
  return out;
}

int linking_number(const ClosedCurve3& c1, const ClosedCurve3& c2, int samples,
                   double min_distance) {
  return linking_number_detail(c1, c2, samples, min_distance).value;
}

Line3 best_fit_normal_line(const ClosedCurve3& curve, int samples) {
  const auto pts = sample_curve(curve, samples);
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : pts) centroid += p;
  centroid /= static_cast<double>(pts.size());

  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& p : pts) {
    const Eigen::Vector3d r = p - centroid;
    cov += r * r.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
  // normal of the best-fit plane = least-variance direction
  Eigen::Vector3d normal = es.eigenvectors().col(0);

  Line3 line{centroid, normal};
  // Orient so the curve winds positively when it winds at all.
  try {
    if (winding_number(curve, line) < 0) line.direction = -normal;
  } catch (const Error&) {
    // leave orientation as computed; caller inspects winding itself
  }
  return line;
}

} // namespace torsym
