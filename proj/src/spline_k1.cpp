#include "hypspline/spline_k1.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hypspline::k1 {

namespace {

Spline1 make_fit(Family1 family, const Partition& partition,
                 const std::vector<double>& values, const TensionParam& alpha) {
  if (static_cast<int>(values.size()) != partition.node_count()) {
    raise(ErrorCode::LengthMismatch, "order-1 fit needs one value per node");
  }
  for (double v : values) {
    if (!std::isfinite(v)) raise(ErrorCode::NonFinite, "order-1 fit value is not finite");
  }
  check_tension(alpha.alpha, partition);
  return Spline1{family, alpha.alpha, partition, values};
}

/// cosh(a)/sinh(b) for a >= 0, b > 0 without overflow:
/// e^(a-b) (1 + e^(-2a)) / (1 - e^(-2b)) once either argument is large.
double cosh_sinh_ratio(double a, double b) {
  if (std::max(a, b) <= kLargeArgumentThreshold) {
    return std::cosh(a) / std::sinh(b);
  }
  return std::exp(a - b) * (1.0 + std::exp(-2.0 * a)) / (-std::expm1(-2.0 * b));
}

/// sech^2(Ax) / (tanh(Ar) - tanh(Al)), the x-independent factor of the
/// family-T derivative. Direct evaluation underflows to 0/0 for saturated
/// arguments, so large ones move to log space, where the exponent
/// log cosh(Al) + log cosh(Ar) - 2 log cosh(Ax) - log sinh(a h) stays small.
double t1_deriv_factor(double alpha, double xl, double xr, double x) {
  double al = alpha * xl, ar = alpha * xr, ax = alpha * x;
  if (std::abs(al) + std::abs(ar) <= kLogSpaceProductThreshold / 2.0) {
    double w = sech(ax);
    return w * w / tanh_diff(ar, al);
  }
  return std::exp(log_cosh(al) + log_cosh(ar) - 2.0 * log_cosh(ax) -
                  log_sinh_abs(alpha * (xr - xl)));
}

}  // namespace

Spline1 fit_s1(const Partition& partition, const std::vector<double>& values,
               const TensionParam& alpha) {
  return make_fit(Family1::S, partition, values, alpha);
}

Spline1 fit_t1(const Partition& partition, const std::vector<double>& values,
               const TensionParam& alpha) {
  return make_fit(Family1::T, partition, values, alpha);
}

double eval1(const Spline1& spline, double x, int deriv) {
  if (deriv != 0 && deriv != 1) {
    raise(ErrorCode::BadRequest, "order-1 evaluation supports derivatives 0..1");
  }
  const Partition& part = spline.partition;
  int j = part.find_interval(x);
  // Node conventions: exact stored value for deriv 0, left piece for deriv 1
  // at interior nodes (these splines are C0 only). The final node is the
  // right endpoint of the last interval, hence the second comparison.
  if (deriv == 0) {
    if (x == part.nodes[j]) return spline.values[j];
    if (x == part.nodes[j + 1]) return spline.values[j + 1];
  }
  if (x == part.nodes[j] && deriv == 1 && j > 0) j -= 1;

  double a = spline.alpha;
  double xl = part.nodes[j], xr = part.nodes[j + 1];
  double yl = spline.values[j], yr = spline.values[j + 1];
  double h = part.widths[j];

  if (spline.family == Family1::S) {
    if (deriv == 0) {
      return yl * stable_sinh_ratio(a * (xr - x), a * h) +
             yr * stable_sinh_ratio(a * (x - xl), a * h);
    }
    return a * (yr * cosh_sinh_ratio(a * (x - xl), a * h) -
                yl * cosh_sinh_ratio(a * (xr - x), a * h));
  }

  double al = a * xl, ar = a * xr, ax = a * x;
  if (deriv == 0) {
    // Weight ratios (tanh(ar) - tanh(ax)) / (tanh(ar) - tanh(al)) factored
    // into sinh and cosh ratios, each individually overflow-safe even when
    // the raw tanh differences underflow.
    double wl = stable_sinh_ratio(ar - ax, a * h) * cosh_ratio(al, ax);
    double wr = stable_sinh_ratio(ax - al, a * h) * cosh_ratio(ar, ax);
    return yl * wl + yr * wr;
  }
  return a * (yr - yl) * t1_deriv_factor(a, xl, xr, x);
}

}  // namespace hypspline::k1
