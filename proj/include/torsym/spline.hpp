#ifndef TORSYM_SPLINE_HPP
#define TORSYM_SPLINE_HPP

#include <Eigen/Dense>
#include <vector>

namespace torsym {

/// Interpolating periodic cubic B-spline on the uniform grid i/n, period 1.
class PeriodicSpline1 {
public:
  PeriodicSpline1() = default;
  explicit PeriodicSpline1(const std::vector<double>& values);

  double operator()(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;

  int size() const { return n_; }

private:
  int n_ = 0;
  std::vector<double> coeff_;
};

/// Periodic cubic B-spline curve through Vector3d samples on a uniform grid.
class PeriodicSplineCurve {
public:
  PeriodicSplineCurve() = default;
  explicit PeriodicSplineCurve(const std::vector<Eigen::Vector3d>& values);

  Eigen::Vector3d operator()(double t) const;
  Eigen::Vector3d derivative(double t) const;
  Eigen::Vector3d second_derivative(double t) const;

  int size() const { return n_; }

private:
  int n_ = 0;
  std::vector<Eigen::Vector3d> coeff_;
};

/// Tensor-product periodic bicubic B-spline surface on the unit torus grid
/// (i/nu, j/nv). Interpolates the given samples; evaluation is local (4x4).
class PeriodicSplineSurface {
public:
  struct Jet {
    Eigen::Vector3d value;
    Eigen::Vector3d du;
    Eigen::Vector3d dv;
  };

  PeriodicSplineSurface() = default;
  /// samples[i][j] is the point at (u,v) = (i/nu, j/nv).
  PeriodicSplineSurface(int nu, int nv, const std::vector<Eigen::Vector3d>& samples);

  Eigen::Vector3d operator()(double u, double v) const;
  Jet jet(double u, double v) const;

  int nu() const { return nu_; }
  int nv() const { return nv_; }

private:
  int nu_ = 0, nv_ = 0;
  std::vector<Eigen::Vector3d> coeff_;  // row-major: coeff_[i*nv_+j]
};

/// Solves the periodic interpolation system (c_{i-1} + 4 c_i + c_{i+1})/6 = f_i.
void solve_periodic_bspline_coeffs(std::vector<double>& f);

} // namespace torsym

#endif
