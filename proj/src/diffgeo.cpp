#include "wpstab/diffgeo.hpp"

#include <cmath>
#include <stdexcept>

namespace wpstab {

namespace {

using Point = std::vector<std::complex<double>>;

// Real coordinate axes: 2a = x_a, 2a+1 = y_a.
Point shift(const Point& p, int axis, double delta) {
  Point q = p;
  const int a = axis / 2;
  if (axis % 2 == 0)
    q[std::size_t(a)] += delta;
  else
    q[std::size_t(a)] += std::complex<double>(0.0, delta);
  return q;
}

double guarded_eval(const ChartedPotential& f, const Point& p) {
  if (f.guard && !f.guard(p))
    throw std::domain_error(
        "complex_hessian: stencil point leaves the chart domain; reduce the step");
  const double v = f.eval(p);
  if (!std::isfinite(v))
    throw std::runtime_error("complex_hessian: potential evaluated to a non-finite value");
  return v;
}

}  // namespace

ChartedPotential ChartedPotential::unguarded(
    int arity, std::function<double(const std::vector<std::complex<double>>&)> eval) {
  ChartedPotential f;
  f.arity = arity;
  f.eval = std::move(eval);
  f.guard = nullptr;
  return f;
}

HermitianForm complex_hessian(const ChartedPotential& f, const Point& p, double h) {
  const int m = f.arity;
  if (int(p.size()) != m)
    throw std::invalid_argument("complex_hessian: point arity mismatch");
  if (!(h > 0.0)) throw std::invalid_argument("complex_hessian: step must be positive");

  std::vector<double> step(std::size_t(2 * m));
  for (int a = 0; a < m; ++a) {
    const double s = h * std::max(1.0, std::abs(p[std::size_t(a)]));
    step[std::size_t(2 * a)] = s;
    step[std::size_t(2 * a + 1)] = s;
  }

  const double f0 = guarded_eval(f, p);

  // Real Hessian over the 2m real axes.
  Eigen::MatrixXd hess(2 * m, 2 * m);
  for (int u = 0; u < 2 * m; ++u) {
    const double hu = step[std::size_t(u)];
    const double fp = guarded_eval(f, shift(p, u, hu));
    const double fm = guarded_eval(f, shift(p, u, -hu));
    hess(u, u) = (fp - 2.0 * f0 + fm) / (hu * hu);
    for (int v = u + 1; v < 2 * m; ++v) {
      const double hv = step[std::size_t(v)];
      const double fpp = guarded_eval(f, shift(shift(p, u, hu), v, hv));
      const double fpm = guarded_eval(f, shift(shift(p, u, hu), v, -hv));
      const double fmp = guarded_eval(f, shift(shift(p, u, -hu), v, hv));
      const double fmm = guarded_eval(f, shift(shift(p, u, -hu), v, -hv));
      hess(u, v) = (fpp - fpm - fmp + fmm) / (4.0 * hu * hv);
      hess(v, u) = hess(u, v);
    }
  }

  // g_{a bbar} = (1/4) [ (d_xa d_xb + d_ya d_yb) + i (d_xa d_yb - d_ya d_xb) ] f
  HermitianForm out;
  out.g.resize(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const double re = hess(2 * a, 2 * b) + hess(2 * a + 1, 2 * b + 1);
      const double im = hess(2 * a, 2 * b + 1) - hess(2 * a + 1, 2 * b);
      out.g(a, b) = 0.25 * std::complex<double>(re, im);
    }
  out.hermiticity_drift = (out.g - out.g.adjoint().eval()).cwiseAbs().maxCoeff();
  out.g = 0.5 * (out.g + out.g.adjoint().eval());
  return out;
}

PositivityReport positivity_check(const HermitianForm& g, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.g);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("positivity_check: eigensolver failure");
  PositivityReport report;
  report.eigenvalues = es.eigenvalues();
  const double lo = report.eigenvalues.minCoeff();
  if (lo > tol)
    report.verdict = PositivityVerdict::positive_definite;
  else if (lo < -tol)
    report.verdict = PositivityVerdict::indefinite;
  else
    report.verdict = PositivityVerdict::degenerate;
  return report;
}

double curvature_1d(const ChartedPotential& f, std::complex<double> p, double h) {
  if (f.arity != 1)
    throw std::invalid_argument("curvature_1d: chart must be one-dimensional");
  auto metric = [&](std::complex<double> z) {
    const HermitianForm g = complex_hessian(f, {z}, h);
    const double val = g.g(0, 0).real();
    if (val <= 0.0)
      throw std::domain_error("curvature_1d: metric is not positive on the stencil");
    return val;
  };

  const double outer = 10.0 * h * std::max(1.0, std::abs(p));
  const double g0 = metric(p);
  const double lxp = std::log(metric(p + outer));
  const double lxm = std::log(metric(p - outer));
  const double lyp = std::log(metric(p + std::complex<double>(0.0, outer)));
  const double lym = std::log(metric(p - std::complex<double>(0.0, outer)));
  const double l0 = std::log(g0);
  const double laplacian = (lxp + lxm + lyp + lym - 4.0 * l0) / (outer * outer);
  const double ddbar_log_g = 0.25 * laplacian;
  return -2.0 / g0 * ddbar_log_g;
}

}  // namespace wpstab
