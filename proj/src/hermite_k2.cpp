#include "hypspline/hermite_k2.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace hypspline::hermite {

namespace {

/// Below this a h the exponential piece is numerically indistinguishable
/// from its cubic limit and the closed-form solve starts dividing by values
/// of order (a h)^3, so the cubic Hermite piece is substituted instead.
constexpr double kCubicFallbackThreshold = 1e-4;

std::array<double, 4> cubic_hermite_piece(double h, double yl, double yr, double dl,
                                          double dr) {
  double dd = (yr - yl) / h;
  return {yl, dl, (3.0 * dd - 2.0 * dl - dr) / h, (dl + dr - 2.0 * dd) / (h * h)};
}

}  // namespace

k2::ExpSpline2 fit_hermite_s2(const Partition& partition, const std::vector<double>& values,
                              const std::vector<double>& slopes, const TensionParam& alpha) {
  const int n = partition.node_count();
  if (static_cast<int>(values.size()) != n || static_cast<int>(slopes.size()) != n) {
    raise(ErrorCode::LengthMismatch, "Hermite fit needs one value and one slope per node");
  }
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(values[j]) || !std::isfinite(slopes[j])) {
      raise(ErrorCode::NonFinite, "Hermite fit data entry is not finite");
    }
  }
  check_tension(alpha.alpha, partition);
  const double a = alpha.alpha;

  k2::ExpSpline2 out;
  out.alpha = a;
  out.partition = partition;
  out.pieces.reserve(partition.interval_count());
  out.kinds.reserve(partition.interval_count());

  for (int j = 0; j < partition.interval_count(); ++j) {
    double h = partition.widths[j];
    double yl = values[j], yr = values[j + 1];
    double dl = slopes[j], dr = slopes[j + 1];
    if (a * h < kCubicFallbackThreshold) {
      out.pieces.push_back(cubic_hermite_piece(h, yl, yr, dl, dr));
      out.kinds.push_back(k2::PieceKind::Cubic);
      continue;
    }

    // Split the piece about the interval midpoint (v = u - h/2) into its
    // even part a cosh(a v) + b v sinh(a v) and odd part
    // c sinh(a v) + d v cosh(a v); each is determined by a 2x2 system with
    // a positive closed-form determinant.
    double w = 0.5 * a * h;
    double sw = std::sinh(w), cw = std::cosh(w);
    double even_val = 0.5 * (yl + yr), even_slope = 0.5 * (dr - dl);
    double odd_val = 0.5 * (yr - yl), odd_slope = 0.5 * (dl + dr);

    double det_even = 0.5 * std::sinh(2.0 * w) + w;
    double det_odd = 0.5 * sinh_minus(2.0 * w);  // (sinh(2w) - 2w)/2, no cancellation
    if (!(det_even > 0.0) || !(det_odd > 0.0) || !std::isfinite(det_even) ||
        !std::isfinite(det_odd)) {
      raise(ErrorCode::SingularLocalSystem,
            "Hermite midpoint system degenerate on interval " + std::to_string(j));
    }
    double ca = (even_val * (sw + w * cw) - 0.5 * h * sw * even_slope) / det_even;
    double cb = (cw * even_slope - a * sw * even_val) / det_even;
    double cc = (odd_val * (cw + w * sw) - 0.5 * h * cw * odd_slope) / det_odd;
    double cd = (sw * odd_slope - a * cw * odd_val) / det_odd;

    // Rewrite in the local exponential basis (u = v + h/2).
    double em = std::exp(-w), ep = std::exp(w);
    double coef_c = em * (0.5 * (ca + cc) - 0.25 * h * (cb + cd));
    double coef_d = em * 0.5 * (cb + cd);
    double coef_a = ep * (0.5 * (ca - cc) - 0.25 * h * (cd - cb));
    double coef_b = ep * 0.5 * (cd - cb);
    if (!std::isfinite(coef_a) || !std::isfinite(coef_b) || !std::isfinite(coef_c) ||
        !std::isfinite(coef_d)) {
      raise(ErrorCode::SingularLocalSystem,
            "Hermite coefficients left double range on interval " + std::to_string(j));
    }
    out.pieces.push_back({coef_a, coef_b, coef_c, coef_d});
    out.kinds.push_back(k2::PieceKind::Exponential);
  }
  return out;
}

const char* shape_property_name(ShapeProperty property) noexcept {
  switch (property) {
    case ShapeProperty::Positive: return "positive";
    case ShapeProperty::MonotoneUp: return "monotone_up";
    case ShapeProperty::MonotoneDown: return "monotone_down";
    case ShapeProperty::Convex: return "convex";
  }
  return "unknown";
}

namespace {

ShapeReport shape_check_impl(const Partition& partition,
                             const std::function<double(double, int)>& eval,
                             ShapeProperty property, int resolution) {
  if (resolution < 64) {
    raise(ErrorCode::BadRequest, "shape check resolution must be at least 64");
  }
  int deriv = 0;
  switch (property) {
    case ShapeProperty::Positive: deriv = 0; break;
    case ShapeProperty::MonotoneUp:
    case ShapeProperty::MonotoneDown: deriv = 1; break;
    case ShapeProperty::Convex: deriv = 2; break;
  }
  // MonotoneDown requires the quantity <= 0; all others >= 0.
  double orientation = property == ShapeProperty::MonotoneDown ? -1.0 : 1.0;

  auto for_each_sample = [&](const std::function<bool(double, double)>& visit) {
    for (int j = 0; j < partition.interval_count(); ++j) {
      double xl = partition.nodes[j], h = partition.widths[j];
      for (int k = 0; k < resolution; ++k) {
        double x = xl + h * static_cast<double>(k) / resolution;
        if (!visit(x, eval(x, deriv))) return;
      }
    }
    double xn = partition.right();
    visit(xn, eval(xn, deriv));
  };

  double max_abs = 0.0;
  for_each_sample([&](double, double v) {
    max_abs = std::max(max_abs, std::abs(v));
    return true;
  });
  double tol = 1e-12 * (1.0 + max_abs);

  ShapeReport report;
  report.property = property;
  report.resolution = resolution;
  report.holds = true;
  for_each_sample([&](double x, double v) {
    if (orientation * v < -tol) {
      report.holds = false;
      report.witness = x;
      report.violation = -(orientation * v);
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace

ShapeReport shape_check(const k2::ExpSpline2& spline, ShapeProperty property,
                        int resolution) {
  return shape_check_impl(
      spline.partition, [&](double x, int d) { return k2::eval2(spline, x, d); }, property,
      resolution);
}

ShapeReport shape_check(const cubic::CubicSpline& spline, ShapeProperty property,
                        int resolution) {
  return shape_check_impl(
      spline.partition, [&](double x, int d) { return spline.eval(x, d); }, property,
      resolution);
}

AlphaSearchResult shape_alpha_search(const Partition& partition,
                                     const std::vector<double>& values,
                                     const std::vector<double>& slopes,
                                     ShapeProperty property, double alpha0, int resolution,
                                     int max_halvings) {
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0)) {
    raise(ErrorCode::BadRequest, "alpha0 must be positive and finite");
  }
  double max_abs_x = std::max(std::abs(partition.left()), std::abs(partition.right()));
  double a = alpha0;
  for (int halvings = 0; halvings <= max_halvings; ++halvings, a *= 0.5) {
    k2::ExpSpline2 fit = fit_hermite_s2(partition, values, slopes, TensionParam(a, max_abs_x));
    ShapeReport report = shape_check(fit, property, resolution);
    if (report.holds) {
      return AlphaSearchResult{a, halvings, report};
    }
  }
  raise(ErrorCode::SearchFailed,
        std::string("no tension value preserved '") + shape_property_name(property) +
            "' within " + std::to_string(max_halvings) + " halvings from " +
            std::to_string(alpha0));
}

}  // namespace hypspline::hermite
