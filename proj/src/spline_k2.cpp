#include "hypspline/spline_k2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace hypspline::k2 {

namespace {

/// Below this z = a h the endpoint coefficients use the bracket form built
/// from the cancellation-free kernels; above it the cosh-ratio identity,
/// which stays accurate while the bracket form loses ~2z/ln(10) digits.
constexpr double kBracketRatioSeam = 2.0;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void check_values_length(const Partition& partition, const std::vector<double>& values,
                         const char* what) {
  if (static_cast<int>(values.size()) != partition.node_count()) {
    raise(ErrorCode::LengthMismatch,
          std::string(what) + " needs one entry per node (expected " +
              std::to_string(partition.node_count()) + ", got " +
              std::to_string(values.size()) + ")");
  }
  for (double v : values) {
    if (!std::isfinite(v)) raise(ErrorCode::NonFinite, std::string(what) + " entry is not finite");
  }
}

/// Shared per-interval geometry of the tanh form.
struct LocalGeometry {
  double h, z;       ///< width and tension argument z = a h
  double al, ar;     ///< a x_l, a x_r
  double tl, tr;     ///< tanh of those
  double delta;      ///< sinh(z)/(cosh al cosh ar) + z tanh(al) tanh(ar)
  double delta_hat;  ///< delta / z  (tends to 1 as a -> 0)
  bool flagged;      ///< determinant cancellation beyond 1e6
};

LocalGeometry local_geometry(double alpha, double xl, double xr) {
  LocalGeometry g;
  g.h = xr - xl;
  g.z = alpha * g.h;
  g.al = alpha * xl;
  g.ar = alpha * xr;
  g.tl = std::tanh(g.al);
  g.tr = std::tanh(g.ar);
  double t1;  // sinh(z) / (cosh(al) cosh(ar)), always positive
  if (std::abs(g.al) + std::abs(g.ar) <= kLogSpaceProductThreshold) {
    t1 = std::sinh(g.z) / (std::cosh(g.al) * std::cosh(g.ar));
  } else {
    t1 = std::exp(log_sinh_abs(g.z) - log_cosh(g.al) - log_cosh(g.ar));
  }
  double t2 = g.z * g.tl * g.tr;  // negative exactly when x_l < 0 < x_r
  double magnitude = std::abs(t1) + std::abs(t2);
  g.delta = t1 + t2;
  if (std::abs(g.delta) <= 1e-14 * magnitude) {
    raise(ErrorCode::SingularLocalSystem,
          "tanh-form determinant vanishes on [" + format_double(xl) + ", " +
              format_double(xr) + "] at alpha = " + format_double(alpha));
  }
  g.flagged = magnitude > 1e6 * std::abs(g.delta);
  g.delta_hat = g.delta / g.z;
  return g;
}

/// sinh(z) cosh(a) / cosh(b) for z > 0, overflow-safe.
double sinh_cosh_ratio(double z, double a, double b) {
  if (z <= 300.0 && std::abs(a) <= 300.0 && std::abs(b) <= 300.0) {
    return std::sinh(z) * std::cosh(a) / std::cosh(b);
  }
  return std::exp(log_sinh_abs(z) + log_cosh(a) - log_cosh(b));
}

/// cosh(L)^2 * T without spurious overflow: the direct product only once
/// cosh(L)^2 is representable, otherwise exp(2 log cosh(L) + log|T|). An
/// exact zero T short-circuits so inf * 0 never appears.
double scaled_cosh_sq(double l, double t) {
  if (t == 0.0) return 0.0;
  if (std::abs(l) <= kLogSpaceProductThreshold / 2.0) {
    double c = std::cosh(l);
    return c * c * t;
  }
  double v = std::exp(2.0 * log_cosh(l) + std::log(std::abs(t)));
  return t < 0.0 ? -v : v;
}

void check_rows_finite(const TridiagonalSystem& sys) {
  auto all_finite = [](const std::vector<double>& v) {
    for (double x : v) {
      if (!std::isfinite(x)) return false;
    }
    return true;
  };
  if (!all_finite(sys.sub) || !all_finite(sys.diag) || !all_finite(sys.sup) ||
      !all_finite(sys.rhs)) {
    raise(ErrorCode::Overflow, "system row left double range; reduce alpha");
  }
}

void require_dominance(const TridiagonalSystem& sys) {
  if (!(sys.dominance_margin > 0.0)) {
    raise(ErrorCode::TensionTooLarge,
          "dominance margin " + format_double(sys.dominance_margin) +
              " <= 0; alpha is too large for this partition");
  }
}

double piece_tanh_eval(const std::array<double, 4>& c, double alpha, double x, int deriv) {
  double tau = std::tanh(alpha * x);
  double qx = c[2] + c[3] * x;
  switch (deriv) {
    case 0:
      return c[0] + c[1] * x + qx * tau;
    case 1: {
      double s = sech(alpha * x);
      return c[1] + c[3] * tau + alpha * qx * s * s;
    }
    default: {
      double s = sech(alpha * x);
      return 2.0 * alpha * s * s * (c[3] - alpha * tau * qx);
    }
  }
}

double piece_exp_eval(const std::array<double, 4>& c, PieceKind kind, double alpha,
                      double u, int deriv) {
  if (kind == PieceKind::Cubic) {
    switch (deriv) {
      case 0: return c[0] + u * (c[1] + u * (c[2] + u * c[3]));
      case 1: return c[1] + u * (2.0 * c[2] + 3.0 * c[3] * u);
      default: return 2.0 * c[2] + 6.0 * c[3] * u;
    }
  }
  double a = alpha;
  double minus = 0.0, plus = 0.0;
  if (c[0] != 0.0 || c[1] != 0.0) {
    double em = std::exp(-a * u);
    switch (deriv) {
      case 0: minus = (c[0] + c[1] * u) * em; break;
      case 1: minus = (c[1] - a * (c[0] + c[1] * u)) * em; break;
      default: minus = (a * a * (c[0] + c[1] * u) - 2.0 * a * c[1]) * em; break;
    }
  }
  if (c[2] != 0.0 || c[3] != 0.0) {
    double ep = std::exp(a * u);
    switch (deriv) {
      case 0: plus = (c[2] + c[3] * u) * ep; break;
      case 1: plus = (c[3] + a * (c[2] + c[3] * u)) * ep; break;
      default: plus = (a * a * (c[2] + c[3] * u) + 2.0 * a * c[3]) * ep; break;
    }
  }
  return minus + plus;
}

void check_deriv_range(int deriv) {
  if (deriv < 0 || deriv > 2) {
    raise(ErrorCode::BadRequest, "order-2 evaluation supports derivatives 0..2");
  }
}

}  // namespace

IntervalCoeffs interval_coeffs(double alpha, double xl, double xr) {
  if (!(xr > xl)) raise(ErrorCode::NonMonotone, "interval endpoints must satisfy xl < xr");
  if (!(alpha > 0.0)) raise(ErrorCode::BadRequest, "alpha must be positive");
  LocalGeometry g = local_geometry(alpha, xl, xr);

  IntervalCoeffs out;
  out.delta = g.delta;
  out.cancellation_flagged = g.flagged;

  double lever = g.h / (2.0 * g.delta_hat);
  double e = kernel_zcosh_minus_sinh(g.z) * lever;
  out.q = cosh_ratio(g.ar, g.al) * e;
  out.qp = cosh_ratio(g.al, g.ar) * e;

  if (g.z < kBracketRatioSeam) {
    // Bracket form with the cancellation-free kernels, normalized by z^3 so
    // the a -> 0 limit (h/3) emerges without underflow.
    double z3 = g.z * g.z * g.z;
    double sm3 = sinh_minus(2.0 * g.z) / (2.0 * z3);
    double ss3 = sinhsq_minus(g.z) / z3;
    out.p = (sm3 - g.tr * ss3) * lever;
    out.pp = (sm3 + g.tl * ss3) * lever;
  } else {
    // Ratio form: the bracket form loses ~2z/ln 10 digits for large z, the
    // cosh-ratio identity does not.
    double z3 = g.z * g.z * g.z;
    out.p = (sinh_cosh_ratio(g.z, g.al, g.ar) - g.z * (1.0 - g.z * g.tr)) * g.h /
            (2.0 * z3 * g.delta_hat);
    out.pp = (sinh_cosh_ratio(g.z, g.ar, g.al) - g.z * (1.0 + g.z * g.tl)) * g.h /
             (2.0 * z3 * g.delta_hat);
  }
  return out;
}

TridiagonalSystem assemble_t2_system(const Partition& partition,
                                     const std::vector<double>& values, double alpha,
                                     const EndCondition& end) {
  check_values_length(partition, values, "tanh-system values");
  check_tension(alpha, partition);
  const int intervals = partition.interval_count();
  const int n = partition.node_count();

  std::vector<double> dd(intervals);
  for (int j = 0; j < intervals; ++j) {
    dd[j] = (values[j + 1] - values[j]) / partition.widths[j];
  }
  std::vector<IntervalCoeffs> ic(intervals);
  for (int j = 0; j < intervals; ++j) {
    ic[j] = interval_coeffs(alpha, partition.nodes[j], partition.nodes[j + 1]);
  }

  TridiagonalSystem sys;
  sys.sub.assign(n - 1, 0.0);
  sys.diag.assign(n, 0.0);
  sys.sup.assign(n - 1, 0.0);
  sys.rhs.assign(n, 0.0);
  // Interior rows: continuity of t' at each interior node.
  for (int j = 1; j + 1 < n; ++j) {
    sys.sub[j - 1] = ic[j - 1].qp;
    sys.diag[j] = ic[j - 1].pp + ic[j].p;
    sys.sup[j] = ic[j].q;
    sys.rhs[j] = dd[j] - dd[j - 1];
  }
  switch (end.kind) {
    case EndKind::TypeI:
      sys.diag[0] = ic[0].p;
      sys.sup[0] = ic[0].q;
      sys.rhs[0] = dd[0] - end.left;
      sys.sub[n - 2] = ic[intervals - 1].qp;
      sys.diag[n - 1] = ic[intervals - 1].pp;
      sys.rhs[n - 1] = end.right - dd[intervals - 1];
      break;
    case EndKind::TypeII:
    case EndKind::TypeIII:
      sys.diag[0] = 1.0;
      sys.sup[0] = 0.0;
      sys.diag[n - 1] = 1.0;
      sys.sub[n - 2] = 0.0;
      if (end.kind == EndKind::TypeIII) {
        sys.rhs[0] = end.left;
        sys.rhs[n - 1] = end.right;
      }
      break;
  }
  check_rows_finite(sys);
  sys.compute_margin();
  require_dominance(sys);
  return sys;
}

TanhSpline2 reconstruct_t2(const Partition& partition, const std::vector<double>& values,
                           double alpha, const std::vector<double>& tpp) {
  check_values_length(partition, values, "reconstruction values");
  if (tpp.size() != values.size()) {
    raise(ErrorCode::LengthMismatch, "second-derivative vector needs one entry per node");
  }
  TanhSpline2 out;
  out.alpha = alpha;
  out.partition = partition;
  out.node_second_derivs = tpp;
  out.pieces.reserve(partition.interval_count());
  for (int j = 0; j < partition.interval_count(); ++j) {
    double xl = partition.nodes[j], xr = partition.nodes[j + 1];
    LocalGeometry g = local_geometry(alpha, xl, xr);
    double cl_sq_tl = scaled_cosh_sq(g.al, tpp[j]);      // cosh(al)^2 t''_l
    double cr_sq_tr = scaled_cosh_sq(g.ar, tpp[j + 1]);  // cosh(ar)^2 t''_r
    double q1 = (g.tr * cl_sq_tl - g.tl * cr_sq_tr) / (2.0 * alpha * g.delta);
    double q0 = (cl_sq_tl * (1.0 - g.ar * g.tr) - cr_sq_tr * (1.0 - g.al * g.tl)) /
                (2.0 * alpha * alpha * g.delta);
    double gl = (q0 + q1 * xl) * g.tl;
    double gr = (q0 + q1 * xr) * g.tr;
    double p1 = (values[j + 1] - values[j]) / g.h - (gr - gl) / g.h;
    double p0 = values[j] - gl - p1 * xl;
    if (!std::isfinite(p0) || !std::isfinite(p1) || !std::isfinite(q0) || !std::isfinite(q1)) {
      raise(ErrorCode::Overflow, "tanh-form coefficients left double range on interval " +
                                     std::to_string(j));
    }
    out.pieces.push_back({p0, p1, q0, q1});
  }
  return out;
}

TanhSpline2 fit_t2(const Partition& partition, const std::vector<double>& values,
                   const TensionParam& alpha, const EndCondition& end) {
  TridiagonalSystem sys = assemble_t2_system(partition, values, alpha.alpha, end);
  std::vector<double> tpp = thomas_solve(sys);
  return reconstruct_t2(partition, values, alpha.alpha, tpp);
}

TanhSpline2 fit_s2_tanh_form(const Partition& partition, const std::vector<double>& values,
                             const TensionParam& alpha, const EndCondition& end) {
  check_values_length(partition, values, "fit values");
  const double a = alpha.alpha;
  const int n = partition.node_count();
  const int intervals = partition.interval_count();

  std::vector<double> scaled(n);
  for (int j = 0; j < n; ++j) {
    scaled[j] = sech(a * partition.nodes[j]) * values[j];
  }
  double tau0 = std::tanh(a * partition.left());
  double tau_n = std::tanh(a * partition.right());

  if (end.kind == EndKind::TypeI) {
    // s = cosh(a x) t, so s' = a sinh(a x) t + cosh(a x) t' transports the
    // prescribed end slopes of s to end slopes of t.
    double left = sech(a * partition.left()) * (end.left - a * tau0 * values.front());
    double right = sech(a * partition.right()) * (end.right - a * tau_n * values.back());
    TridiagonalSystem sys =
        assemble_t2_system(partition, scaled, a, EndCondition::type1(left, right));
    return reconstruct_t2(partition, scaled, a, thomas_solve(sys));
  }

  // Types II/III prescribe s'' at the ends. In t-unknowns,
  // s'' = cosh(a x) (t'' + 2 a tanh(a x) t' + a^2 t), and the end values of
  // t' are eliminated through the interval influence coefficients, giving
  // modified first and last rows.
  TridiagonalSystem sys = assemble_t2_system(partition, scaled, a, EndCondition::type2());
  IntervalCoeffs first = interval_coeffs(a, partition.nodes[0], partition.nodes[1]);
  IntervalCoeffs last =
      interval_coeffs(a, partition.nodes[n - 2], partition.nodes[n - 1]);
  double dd_first = (scaled[1] - scaled[0]) / partition.widths[0];
  double dd_last = (scaled[n - 1] - scaled[n - 2]) / partition.widths[intervals - 1];
  double spp_left = end.kind == EndKind::TypeIII ? end.left : 0.0;
  double spp_right = end.kind == EndKind::TypeIII ? end.right : 0.0;

  sys.diag[0] = 1.0 - 2.0 * a * tau0 * first.p;
  sys.sup[0] = -2.0 * a * tau0 * first.q;
  sys.rhs[0] = sech(a * partition.left()) * spp_left - a * a * scaled.front() -
               2.0 * a * tau0 * dd_first;
  sys.sub[n - 2] = 2.0 * a * tau_n * last.qp;
  sys.diag[n - 1] = 1.0 + 2.0 * a * tau_n * last.pp;
  sys.rhs[n - 1] = sech(a * partition.right()) * spp_right - a * a * scaled.back() -
                   2.0 * a * tau_n * dd_last;
  sys.compute_margin();
  require_dominance(sys);
  return reconstruct_t2(partition, scaled, a, thomas_solve(sys));
}

ExpSpline2 fit_s2(const Partition& partition, const std::vector<double>& values,
                  const TensionParam& alpha, const EndCondition& end) {
  return to_exp_representation(fit_s2_tanh_form(partition, values, alpha, end));
}

ExpSpline2 to_exp_representation(const TanhSpline2& t) {
  check_tension(t.alpha, t.partition);
  ExpSpline2 out;
  out.alpha = t.alpha;
  out.partition = t.partition;
  out.pieces.reserve(t.pieces.size());
  out.kinds.assign(t.pieces.size(), PieceKind::Exponential);
  for (std::size_t j = 0; j < t.pieces.size(); ++j) {
    const auto& c = t.pieces[j];
    double xl = t.partition.nodes[j];
    double al = t.alpha * xl;
    double ep = std::exp(al), em = std::exp(-al);
    double coef_c = 0.5 * ep * ((c[0] + c[2]) + (c[1] + c[3]) * xl);
    double coef_d = 0.5 * ep * (c[1] + c[3]);
    double coef_a = 0.5 * em * ((c[0] - c[2]) + (c[1] - c[3]) * xl);
    double coef_b = 0.5 * em * (c[1] - c[3]);
    if (!std::isfinite(coef_a) || !std::isfinite(coef_b) || !std::isfinite(coef_c) ||
        !std::isfinite(coef_d)) {
      raise(ErrorCode::Overflow, "exponential coefficients left double range on interval " +
                                     std::to_string(j));
    }
    out.pieces.push_back({coef_a, coef_b, coef_c, coef_d});
  }
  return out;
}

double eval2(const TanhSpline2& spline, double x, int deriv) {
  check_deriv_range(deriv);
  int j = spline.partition.find_interval(x);
  return piece_tanh_eval(spline.pieces[j], spline.alpha, x, deriv);
}

double eval2(const ExpSpline2& spline, double x, int deriv) {
  check_deriv_range(deriv);
  int j = spline.partition.find_interval(x);
  return piece_exp_eval(spline.pieces[j], spline.kinds[j], spline.alpha,
                        x - spline.partition.nodes[j], deriv);
}

double eval_piece(const TanhSpline2& spline, int piece, double x, int deriv) {
  check_deriv_range(deriv);
  return piece_tanh_eval(spline.pieces[piece], spline.alpha, x, deriv);
}

double eval_piece(const ExpSpline2& spline, int piece, double x, int deriv) {
  check_deriv_range(deriv);
  return piece_exp_eval(spline.pieces[piece], spline.kinds[piece], spline.alpha,
                        x - spline.partition.nodes[piece], deriv);
}

}  // namespace hypspline::k2
