#include "torsym/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace torsym {

namespace {

double point_to_segment(const Eigen::Vector3d& x, const Eigen::Vector3d& a,
                        const Eigen::Vector3d& b) {
  const Eigen::Vector3d ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 <= 0.0) return (x - a).norm();
  const double s = std::clamp(ab.dot(x - a) / len2, 0.0, 1.0);
  return (x - (a + s * ab)).norm();
}

// max over `from` of the distance to the closed polyline through `to`
double directed_hausdorff(const std::vector<Eigen::Vector3d>& from,
                          const std::vector<Eigen::Vector3d>& to) {
  const int m = static_cast<int>(to.size());
  double worst = 0.0;
  for (const auto& x : from) {
    double best = 1e300;
    for (int j = 0; j < m; ++j) {
      best = std::min(best, point_to_segment(x, to[j], to[(j + 1) % m]));
      if (best == 0.0) break;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

} // namespace

InvarianceCertificate is_invariant_set(const Isometry3& iso, const ClosedCurve3& curve,
                                       double tol, int samples) {
  const int n = samples > 0 ? samples : std::max(curve.sample_count, 1024);
  const auto pts = sample_curve(curve, n);
  if (tol <= 0.0) tol = 1e-6 * curve_diameter(curve, std::min(n, 512));

  std::vector<Eigen::Vector3d> image(pts.size()), preimage(pts.size());
  const Isometry3 inv = iso.inverse();
  for (size_t i = 0; i < pts.size(); ++i) {
    image[i] = iso(pts[i]);
    preimage[i] = inv(pts[i]);
  }
  // d(I(Gamma), Gamma) and d(Gamma, I(Gamma)) = d(I^{-1}(Gamma), Gamma)
  const double forward = directed_hausdorff(image, pts);
  const double backward = directed_hausdorff(preimage, pts);

  InvarianceCertificate cert;
  cert.distance = std::max(forward, backward);
  cert.tolerance = tol;
  cert.invariant = cert.distance < tol;
  return cert;
}

std::vector<Isometry3> curve_symmetry_candidates(const ClosedCurve3& curve, int samples,
                                                 double tol) {
  const auto pts = sample_curve(curve, samples);
  const double diameter = curve_diameter(curve, std::min(samples, 512));
  if (tol <= 0.0) tol = 1e-6 * diameter;

  // central symmetry: -Gamma = Gamma
  {
    const auto cert = is_invariant_set(Isometry3::parity(), curve, tol, samples);
    if (!cert.invariant) {
      std::ostringstream os;
      os << "-Gamma != Gamma (Hausdorff distance " << cert.distance << ")";
      throw NotCentrallySymmetric(os.str());
    }
  }

  double rho = 0.0, m = 1e300;
  for (const auto& p : pts) {
    const double r = p.norm();
    rho = std::max(rho, r);
    m = std::min(m, r);
  }

  // Constant radius: the extremal sets are the whole curve and carry no
  // directional information; the signed-diagonal maps remain the candidate
  // set to test downstream.
  const double band = 1e-6 * std::max(rho, 1.0);
  const auto all8 = signed_diagonal_maps();
  std::vector<Isometry3> candidates(all8.begin(), all8.end());
  if (rho - m <= band) return candidates;

  // Locate the isolated radius extrema: detect sample-level local extrema,
  // refine each by golden-section, then keep the global band (within 1e-6 of
  // the extreme value). Each band must be two antipodal points on one
  // coordinate axis.
  auto refine = [&](double lo, double hi, bool maximal) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    auto value = [&](double t) {
      const double r = curve.position(t).norm();
      return maximal ? -r : r;
    };
    double a = lo, b = hi;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = value(c1), f2 = value(c2);
    for (int it = 0; it < 90 && (b - a) > 1e-14; ++it) {
      if (f1 < f2) {
        b = c2; c2 = c1; f2 = f1;
        c1 = b - gr * (b - a); f1 = value(c1);
      } else {
        a = c1; c1 = c2; f1 = f2;
        c2 = a + gr * (b - a); f2 = value(c2);
      }
    }
    return 0.5 * (a + b);
  };

  auto extremal_axis = [&](bool maximal) -> int {
    std::vector<Eigen::Vector3d> ext;
    double extreme = maximal ? 0.0 : 1e300;
    std::vector<std::pair<double, Eigen::Vector3d>> locals;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) {
      const double r0 = pts[(i + n - 1) % n].norm();
      const double r1 = pts[i].norm();
      const double r2 = pts[(i + 1) % n].norm();
      const bool is_local = maximal ? (r1 >= r0 && r1 >= r2) : (r1 <= r0 && r1 <= r2);
      if (!is_local) continue;
      const double t = refine((i - 1.0) / n, (i + 1.0) / n, maximal);
      const Eigen::Vector3d p = curve.position(t);
      locals.emplace_back(p.norm(), p);
      extreme = maximal ? std::max(extreme, p.norm()) : std::min(extreme, p.norm());
    }
    for (const auto& [r, p] : locals)
      if (std::abs(r - extreme) <= band) ext.push_back(p);
    if (ext.empty()) return -1;

    // two antipodal clusters <=> all points agree in direction up to sign
    const Eigen::Vector3d ref = ext.front().normalized();
    bool pos = false, neg = false;
    for (const auto& p : ext) {
      const Eigen::Vector3d q = p.normalized();
      if (std::abs(ref.dot(q)) < 1.0 - 1e-6) return -1;  // spread cluster
      ((ref.dot(q) > 0) ? pos : neg) = true;
    }
    if (!pos || !neg) return -1;
    int axis = -1;
    double best = 0.0;
    for (int c = 0; c < 3; ++c) {
      if (std::abs(ref[c]) > best) {
        best = std::abs(ref[c]);
        axis = c;
      }
    }
    // cluster direction must sit on the axis within ~1e-6 rad
    return (best >= 1.0 - 5e-13 || std::acos(std::min(best, 1.0)) < 1e-6) ? axis : -1;
  };

  const int axis_max = extremal_axis(true);
  const int axis_min = extremal_axis(false);
  if (axis_max < 0 || axis_min < 0 || axis_max == axis_min) {
    throw ExtremaNotAxisAligned(
        "extremal-radius sets are not two antipodal clusters on distinct coordinate axes");
  }
  return candidates;
}

std::vector<SymmetryScanEntry> scan_curve_symmetries(const ClosedCurve3& curve, int samples,
                                                     double tol) {
  const auto candidates = curve_symmetry_candidates(curve, samples, tol);
  std::vector<SymmetryScanEntry> out;
  out.reserve(candidates.size());
  for (const auto& iso : candidates)
    out.push_back({iso, is_invariant_set(iso, curve, tol, samples)});
  return out;
}

} // namespace torsym
