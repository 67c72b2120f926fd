#include "torsym/spline.hpp"

#include <cmath>
#include <stdexcept>

namespace torsym {

namespace {

// Uniform cubic B-spline basis on [0,1), window {i-1, i, i+1, i+2}.
inline void bspline_weights(double w, double b[4]) {
  const double w2 = w * w, w3 = w2 * w;
  b[0] = (1.0 - 3.0 * w + 3.0 * w2 - w3) / 6.0;
  b[1] = (4.0 - 6.0 * w2 + 3.0 * w3) / 6.0;
  b[2] = (1.0 + 3.0 * w + 3.0 * w2 - 3.0 * w3) / 6.0;
  b[3] = w3 / 6.0;
}

inline void bspline_dweights(double w, double b[4]) {
  const double w2 = w * w;
  b[0] = (-3.0 + 6.0 * w - 3.0 * w2) / 6.0;
  b[1] = (-12.0 * w + 9.0 * w2) / 6.0;
  b[2] = (3.0 + 6.0 * w - 9.0 * w2) / 6.0;
  b[3] = 3.0 * w2 / 6.0;
}

inline void bspline_ddweights(double w, double b[4]) {
  b[0] = 1.0 - w;
  b[1] = 3.0 * w - 2.0;
  b[2] = 1.0 - 3.0 * w;
  b[3] = w;
}

inline double wrap01(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r = 0.0;
  return r;
}

inline int wrap_index(int i, int n) {
  int r = i % n;
  return r < 0 ? r + n : r;
}

// Cyclic tridiagonal solve with constant stencil (1/6, 4/6, 1/6) via
// Sherman-Morrison on top of the Thomas algorithm.
void solve_cyclic_146(std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  if (n < 3) throw std::invalid_argument("periodic spline needs at least 3 samples");
  const double a = 1.0 / 6.0, b = 4.0 / 6.0, c = 1.0 / 6.0;
  const double alpha = -b;  // perturbation choice
  std::vector<double> bb(n, b), u(n, 0.0);
  bb[0] = b - alpha;
  bb[n - 1] = b - c * a / alpha;
  u[0] = alpha;
  u[n - 1] = c;

  auto thomas = [&](std::vector<double>& rhs) {
    std::vector<double> cp(n);
    cp[0] = c / bb[0];
    rhs[0] /= bb[0];
    for (int i = 1; i < n; ++i) {
      const double m = bb[i] - a * cp[i - 1];
      cp[i] = c / m;
      rhs[i] = (rhs[i] - a * rhs[i - 1]) / m;
    }
    for (int i = n - 2; i >= 0; --i) rhs[i] -= cp[i] * rhs[i + 1];
  };

  std::vector<double> z = u;
  thomas(d);
  thomas(z);
  const double fact = (d[0] + (a / alpha) * d[n - 1]) / (1.0 + z[0] + (a / alpha) * z[n - 1]);
  for (int i = 0; i < n; ++i) d[i] -= fact * z[i];
}

} // namespace

void solve_periodic_bspline_coeffs(std::vector<double>& f) { solve_cyclic_146(f); }

PeriodicSpline1::PeriodicSpline1(const std::vector<double>& values)
    : n_(static_cast<int>(values.size())), coeff_(values) {
  solve_cyclic_146(coeff_);
}

double PeriodicSpline1::operator()(double t) const {
  const double s = wrap01(t) * n_;
  const int cell = static_cast<int>(s);
  const double w = s - cell;
  double b[4];
  bspline_weights(w, b);
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) acc += b[k] * coeff_[wrap_index(cell - 1 + k, n_)];
  return acc;
}

double PeriodicSpline1::derivative(double t) const {
  const double s = wrap01(t) * n_;
  const int cell = static_cast<int>(s);
  const double w = s - cell;
  double b[4];
  bspline_dweights(w, b);
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) acc += b[k] * coeff_[wrap_index(cell - 1 + k, n_)];
  return acc * n_;
}

double PeriodicSpline1::second_derivative(double t) const {
  const double s = wrap01(t) * n_;
  const int cell = static_cast<int>(s);
  const double w = s - cell;
  double b[4];
  bspline_ddweights(w, b);
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) acc += b[k] * coeff_[wrap_index(cell - 1 + k, n_)];
  return acc * n_ * n_;
}

PeriodicSplineCurve::PeriodicSplineCurve(const std::vector<Eigen::Vector3d>& values)
    : n_(static_cast<int>(values.size())), coeff_(values) {
  std::vector<double> comp(n_);
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < n_; ++i) comp[i] = values[i][c];
    solve_cyclic_146(comp);
    for (int i = 0; i < n_; ++i) coeff_[i][c] = comp[i];
  }
}

Eigen::Vector3d PeriodicSplineCurve::operator()(double t) const {
  const double s = wrap01(t) * n_;
  const int cell = static_cast<int>(s);
  const double w = s - cell;
  double b[4];
  bspline_weights(w, b);
  Eigen::Vector3d acc = Eigen::Vector3d::Zero();
  for (int k = 0; k < 4; ++k) acc += b[k] * coeff_[wrap_index(cell - 1 + k, n_)];
  return acc;
}

Eigen::Vector3d PeriodicSplineCurve::derivative(double t) const {
  const double s = wrap01(t) * n_;
  const int cell = static_cast<int>(s);
  const double w = s - cell;
  double b[4];
  bspline_dweights(w, b);
  Eigen::Vector3d acc = Eigen::Vector3d::Zero();
  for (int k = 0; k < 4; ++k) acc += b[k] * coeff_[wrap_index(cell - 1 + k, n_)];
  return acc * n_;
}

Eigen::Vector3d PeriodicSplineCurve::second_derivative(double t) const {
  const double s = wrap01(t) * n_;
  const int cell = static_cast<int>(s);
  const double w = s - cell;
  double b[4];
  bspline_ddweights(w, b);
  Eigen::Vector3d acc = Eigen::Vector3d::Zero();
  for (int k = 0; k < 4; ++k) acc += b[k] * coeff_[wrap_index(cell - 1 + k, n_)];
  return acc * n_ * n_;
}

PeriodicSplineSurface::PeriodicSplineSurface(int nu, int nv,
                                             const std::vector<Eigen::Vector3d>& samples)
    : nu_(nu), nv_(nv), coeff_(samples) {
  if (static_cast<int>(samples.size()) != nu * nv)
    throw std::invalid_argument("surface sample count mismatch");
  // Interpolate along v (rows), then along u (columns).
  std::vector<double> line;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < nu_; ++i) {
      line.resize(nv_);
      for (int j = 0; j < nv_; ++j) line[j] = coeff_[i * nv_ + j][c];
      solve_cyclic_146(line);
      for (int j = 0; j < nv_; ++j) coeff_[i * nv_ + j][c] = line[j];
    }
    for (int j = 0; j < nv_; ++j) {
      line.resize(nu_);
      for (int i = 0; i < nu_; ++i) line[i] = coeff_[i * nv_ + j][c];
      solve_cyclic_146(line);
      for (int i = 0; i < nu_; ++i) coeff_[i * nv_ + j][c] = line[i];
    }
  }
}

Eigen::Vector3d PeriodicSplineSurface::operator()(double u, double v) const {
  return jet(u, v).value;
}

PeriodicSplineSurface::Jet PeriodicSplineSurface::jet(double u, double v) const {
  const double su = wrap01(u) * nu_, sv = wrap01(v) * nv_;
  const int cu = static_cast<int>(su), cv = static_cast<int>(sv);
  const double wu = su - cu, wv = sv - cv;
  double bu[4], bv[4], du[4], dv[4];
  bspline_weights(wu, bu);
  bspline_weights(wv, bv);
  bspline_dweights(wu, du);
  bspline_dweights(wv, dv);

  Jet out{Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero()};
  for (int a = 0; a < 4; ++a) {
    const int i = wrap_index(cu - 1 + a, nu_);
    for (int b = 0; b < 4; ++b) {
      const int j = wrap_index(cv - 1 + b, nv_);
      const Eigen::Vector3d& cf = coeff_[i * nv_ + j];
      out.value += (bu[a] * bv[b]) * cf;
      out.du += (du[a] * bv[b]) * cf;
      out.dv += (bu[a] * dv[b]) * cf;
    }
  }
  out.du *= nu_;
  out.dv *= nv_;
  return out;
}

} // namespace torsym
