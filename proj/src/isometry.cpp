#include "torsym/isometry.hpp"

#include <cmath>
#include <sstream>

namespace torsym {

namespace {
constexpr double kOrthogonalityTol = 1e-12;
constexpr double kDetTol = 1e-9;
}

Isometry3::Isometry3() : linear_(Eigen::Matrix3d::Identity()), translation_(Eigen::Vector3d::Zero()) {}

Isometry3::Isometry3(const Eigen::Matrix3d& linear, const Eigen::Vector3d& translation)
    : linear_(linear), translation_(translation) {
  const double defect = (linear_.transpose() * linear_ - Eigen::Matrix3d::Identity()).norm();
  if (defect >= kOrthogonalityTol) {
    std::ostringstream os;
    os << "linear part is not orthogonal, ||A^T A - I|| = " << defect;
    throw NonOrthogonal(os.str());
  }
  const double det = linear_.determinant();
  if (std::abs(std::abs(det) - 1.0) > kDetTol) {
    std::ostringstream os;
    os << "determinant " << det << " not within 1e-9 of +-1";
    throw NonOrthogonal(os.str());
  }
}

Isometry3 Isometry3::inverse() const {
  const Eigen::Matrix3d at = linear_.transpose();
  return Isometry3(at, -(at * translation_));
}

Isometry3 Isometry3::compose(const Isometry3& other) const {
  return Isometry3(linear_ * other.linear_, linear_ * other.translation_ + translation_);
}

bool Isometry3::is_identity(double tol) const {
  return (linear_ - Eigen::Matrix3d::Identity()).norm() <= tol && translation_.norm() <= tol;
}

Isometry3 Isometry3::identity() { return Isometry3(); }

Isometry3 Isometry3::signed_diagonal(int i, int j, int k) {
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
  a(0, 0) = i < 0 ? -1.0 : 1.0;
  a(1, 1) = j < 0 ? -1.0 : 1.0;
  a(2, 2) = k < 0 ? -1.0 : 1.0;
  return Isometry3(a, Eigen::Vector3d::Zero());
}

Isometry3 Isometry3::parity() { return signed_diagonal(-1, -1, -1); }

Isometry3 Isometry3::stellarator() { return signed_diagonal(1, -1, -1); }

Isometry3 Isometry3::rotation_z(double angle) {
  Eigen::Matrix3d a;
  a << std::cos(angle), -std::sin(angle), 0.0,
       std::sin(angle),  std::cos(angle), 0.0,
       0.0, 0.0, 1.0;
  return Isometry3(a, Eigen::Vector3d::Zero());
}

Isometry3 Isometry3::translate(const Eigen::Vector3d& t) {
  return Isometry3(Eigen::Matrix3d::Identity(), t);
}

std::string Isometry3::describe() const {
  // Recognize the signed-diagonal maps; fall back to a matrix dump.
  bool diagonal = true;
  for (int r = 0; r < 3 && diagonal; ++r)
    for (int c = 0; c < 3; ++c)
      if (r != c && std::abs(linear_(r, c)) > 1e-14) { diagonal = false; break; }
  if (diagonal && translation_.norm() < 1e-14) {
    if (is_identity()) return "id";
    std::ostringstream os;
    os << "diag(" << (linear_(0, 0) > 0 ? "+1" : "-1") << ","
       << (linear_(1, 1) > 0 ? "+1" : "-1") << ","
       << (linear_(2, 2) > 0 ? "+1" : "-1") << ")";
    return os.str();
  }
  std::ostringstream os;
  os << "A=[" << linear_.row(0) << "; " << linear_.row(1) << "; " << linear_.row(2)
     << "], c=[" << translation_.transpose() << "]";
  return os.str();
}

int orientation_sign(const Isometry3& iso) {
  const double det = iso.linear().determinant();
  return det > 0.0 ? 1 : -1;
}

std::array<Isometry3, 8> signed_diagonal_maps() {
  std::array<Isometry3, 8> maps;
  int n = 0;
  for (int i : {1, -1})
    for (int j : {1, -1})
      for (int k : {1, -1}) maps[n++] = Isometry3::signed_diagonal(i, j, k);
  return maps;
}

} // namespace torsym
