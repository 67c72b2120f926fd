#ifndef TORSYM_ISOMETRY_HPP
#define TORSYM_ISOMETRY_HPP

#include <Eigen/Dense>
#include <array>
#include <string>

#include "torsym/errors.hpp"

namespace torsym {

/// Euclidean isometry x |-> Ax + c with A orthogonal.
///
/// The constructor validates orthogonality (||A^T A - I|| < 1e-12) and that
/// det(A) is within 1e-9 of +-1; violations throw NonOrthogonal.
class Isometry3 {
public:
  Isometry3();  // identity
  Isometry3(const Eigen::Matrix3d& linear, const Eigen::Vector3d& translation);

  const Eigen::Matrix3d& linear() const { return linear_; }
  const Eigen::Vector3d& translation() const { return translation_; }

  Eigen::Vector3d operator()(const Eigen::Vector3d& x) const {
    return linear_ * x + translation_;
  }

  /// Push a tangent vector forward (just the linear part).
  Eigen::Vector3d map_direction(const Eigen::Vector3d& v) const { return linear_ * v; }

  Isometry3 inverse() const;
  Isometry3 compose(const Isometry3& other) const;  // this after other

  bool is_identity(double tol = 1e-12) const;
  bool is_linear(double tol = 1e-12) const { return translation_.norm() <= tol; }

  static Isometry3 identity();
  /// Signed-diagonal map I_{i,j,k}(x,y,z) = (ix, jy, kz), i,j,k in {-1,+1}.
  static Isometry3 signed_diagonal(int i, int j, int k);
  /// Parity map x |-> -x.
  static Isometry3 parity();
  /// Stellarator-type map (x,y,z) |-> (x,-y,-z).
  static Isometry3 stellarator();
  static Isometry3 rotation_z(double angle);
  static Isometry3 translate(const Eigen::Vector3d& t);

  std::string describe() const;

private:
  Eigen::Matrix3d linear_;
  Eigen::Vector3d translation_;
};

/// Determinant sign of the linear part, exactly +1 or -1.
int orientation_sign(const Isometry3& iso);

/// All eight signed-diagonal maps, ordered (+++, ++-, +-+, +--, -++, -+-, --+, ---).
std::array<Isometry3, 8> signed_diagonal_maps();

} // namespace torsym

#endif
