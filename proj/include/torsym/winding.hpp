#ifndef TORSYM_WINDING_HPP
#define TORSYM_WINDING_HPP

#include <Eigen/Dense>

#include "torsym/curve.hpp"

namespace torsym {

/// Oriented line {point + s * direction}; direction is normalized on use.
struct Line3 {
  Eigen::Vector3d point;
  Eigen::Vector3d direction;

  Eigen::Vector3d unit_direction() const;
  double distance_to(const Eigen::Vector3d& x) const;
};

struct WindingDetail {
  int value = 0;
  double raw = 0.0;
  double drift = 0.0;  // |raw - value|
};

/// Winding number of a closed curve about an oriented line: accumulated angle
/// of the projection onto the plane orthogonal to the line, divided by 2pi.
///
/// Throws CurveHitsAxis if the curve comes within `min_distance` of the line
/// and NonIntegerWinding if the accumulated value drifts more than 0.1 from
/// an integer (undersampling).
WindingDetail winding_number_detail(const ClosedCurve3& curve, const Line3& axis,
                                    int samples = 0, double min_distance = 1e-9);
int winding_number(const ClosedCurve3& curve, const Line3& axis, int samples = 0,
                   double min_distance = 1e-9);

struct LinkingDetail {
  int value = 0;
  double raw = 0.0;
  double drift = 0.0;
};

/// Gauss linking number of two disjoint closed curves by midpoint-rule double
/// quadrature over samples x samples nodes.
///
/// Throws CurvesIntersect when the sampled curves come closer than
/// `min_distance` (relative to the larger diameter when <= 0), and
/// NonIntegerLinking when the quadrature value is not within 0.1 of an
/// integer.
LinkingDetail linking_number_detail(const ClosedCurve3& c1, const ClosedCurve3& c2,
                                    int samples = 512, double min_distance = -1.0);
int linking_number(const ClosedCurve3& c1, const ClosedCurve3& c2, int samples = 512,
                   double min_distance = -1.0);

/// Line through the centroid of a curve along its best-fit plane normal,
/// oriented so that the curve winds positively about it when possible.
Line3 best_fit_normal_line(const ClosedCurve3& curve, int samples = 512);

} // namespace torsym

#endif
