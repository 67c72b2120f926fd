#ifndef TORSYM_SYMMETRY_HPP
#define TORSYM_SYMMETRY_HPP

#include <vector>

#include "torsym/curve.hpp"
#include "torsym/isometry.hpp"

namespace torsym {

struct InvarianceCertificate {
  bool invariant = false;
  double distance = 0.0;  // achieved two-sided Hausdorff distance
  double tolerance = 0.0;
};

/// Decides I(Gamma) = Gamma by the two-sided Hausdorff distance between the
/// sampled image and the sampled curve (point-to-polyline). A tolerance <= 0
/// selects the default 1e-6 * diameter.
InvarianceCertificate is_invariant_set(const Isometry3& iso, const ClosedCurve3& curve,
                                       double tol = -1.0, int samples = 0);

/// Candidate symmetries of a centrally symmetric curve via its extremal-radius
/// structure: when the max/min radius sets form two antipodal clusters on
/// coordinate axes (or the radius is constant), only the eight signed-diagonal
/// maps can preserve the curve.
///
/// Throws NotCentrallySymmetric when -Gamma != Gamma and ExtremaNotAxisAligned
/// when the extremal clusters do not reduce.
std::vector<Isometry3> curve_symmetry_candidates(const ClosedCurve3& curve, int samples = 2048,
                                                 double tol = -1.0);

struct SymmetryScanEntry {
  Isometry3 iso;
  InvarianceCertificate certificate;
};

/// Runs is_invariant_set over the candidate set and returns all entries;
/// the detected symmetry group is the subset with certificate.invariant.
std::vector<SymmetryScanEntry> scan_curve_symmetries(const ClosedCurve3& curve,
                                                     int samples = 2048, double tol = -1.0);

} // namespace torsym

#endif
