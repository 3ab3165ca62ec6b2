#include "hypspline/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace hypspline {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// errors
// ---------------------------------------------------------------------------

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonMonotone: return "NON_MONOTONE";
    case ErrorCode::NonFinite: return "NON_FINITE";
    case ErrorCode::DivideByZero: return "DIVIDE_BY_ZERO";
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::OutOfDomain: return "OUT_OF_DOMAIN";
    case ErrorCode::BadRequest: return "BAD_REQUEST";
    case ErrorCode::TensionTooLarge: return "TENSION_TOO_LARGE";
    case ErrorCode::NotDominant: return "NOT_DOMINANT";
    case ErrorCode::SingularLocalSystem: return "SINGULAR_LOCAL_SYSTEM";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::SingularSystem: return "SINGULAR_SYSTEM";
    case ErrorCode::DenseTooLarge: return "DENSE_TOO_LARGE";
    case ErrorCode::DegenerateErrors: return "DEGENERATE_ERRORS";
    case ErrorCode::SearchFailed: return "SEARCH_FAILED";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code) {}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// ---------------------------------------------------------------------------
// domain types
// ---------------------------------------------------------------------------

int Partition::find_interval(double x) const {
  if (!std::isfinite(x)) raise(ErrorCode::NonFinite, "evaluation point is not finite");
  if (x < nodes.front() || x > nodes.back()) {
    raise(ErrorCode::OutOfDomain,
          "x = " + format_double(x) + " outside [" + format_double(nodes.front()) +
              ", " + format_double(nodes.back()) + "]");
  }
  // Right-piece convention: x_j maps to interval j except at the final node.
  auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  int j = static_cast<int>(it - nodes.begin()) - 1;
  return std::min(std::max(j, 0), interval_count() - 1);
}

Partition make_partition(std::vector<double> nodes) {
  if (nodes.size() < 2) {
    raise(ErrorCode::LengthMismatch, "a partition needs at least two nodes");
  }
  for (double x : nodes) {
    if (!std::isfinite(x)) raise(ErrorCode::NonFinite, "partition node is not finite");
  }
  Partition p;
  p.widths.reserve(nodes.size() - 1);
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    double h = nodes[j] - nodes[j - 1];
    if (!(h > 0.0)) {
      raise(ErrorCode::NonMonotone,
            "nodes must be strictly increasing; offending pair (" +
                format_double(nodes[j - 1]) + ", " + format_double(nodes[j]) + ")");
    }
    p.widths.push_back(h);
  }
  p.nodes = std::move(nodes);
  double hmax = *std::max_element(p.widths.begin(), p.widths.end());
  double hmin = *std::min_element(p.widths.begin(), p.widths.end());
  p.hbar = hmax;
  p.mesh_ratio = hmax / hmin;
  return p;
}

EndCondition EndCondition::type1(double left_slope, double right_slope) {
  if (!std::isfinite(left_slope) || !std::isfinite(right_slope)) {
    raise(ErrorCode::NonFinite, "end-slope payload is not finite");
  }
  return EndCondition{EndKind::TypeI, left_slope, right_slope};
}

EndCondition EndCondition::type2() { return EndCondition{EndKind::TypeII, 0.0, 0.0}; }

EndCondition EndCondition::type3(double left_second, double right_second) {
  if (!std::isfinite(left_second) || !std::isfinite(right_second)) {
    raise(ErrorCode::NonFinite, "end-curvature payload is not finite");
  }
  return EndCondition{EndKind::TypeIII, left_second, right_second};
}

TensionParam::TensionParam(double alpha_value, double max_abs_x) : alpha(alpha_value) {
  if (!std::isfinite(alpha) || !std::isfinite(max_abs_x)) {
    raise(ErrorCode::NonFinite, "tension parameter inputs must be finite");
  }
  if (!(alpha > 0.0)) {
    raise(ErrorCode::BadRequest, "tension parameter alpha must be positive");
  }
  if (alpha * max_abs_x > kTensionArgumentGuard) {
    raise(ErrorCode::Overflow,
          "alpha * max|x| = " + format_double(alpha * max_abs_x) +
              " exceeds the representable-cosh guard " +
              format_double(kTensionArgumentGuard));
  }
}

void check_tension(double alpha, const Partition& partition) {
  double max_abs_x = std::max(std::abs(partition.left()), std::abs(partition.right()));
  TensionParam guard(alpha, max_abs_x);
  (void)guard;
}

// ---------------------------------------------------------------------------
// stable kernels
// ---------------------------------------------------------------------------

namespace {

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

double log_sinh_abs(double d) {
  double ad = std::abs(d);
  if (ad > kLargeArgumentThreshold) {
    return ad - std::log(2.0) + std::log1p(-std::exp(-2.0 * ad));
  }
  return std::log(std::sinh(ad));
}

double stable_sinh_ratio(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    raise(ErrorCode::NonFinite, "stable_sinh_ratio arguments must be finite");
  }
  if (b == 0.0) raise(ErrorCode::DivideByZero, "stable_sinh_ratio requires b != 0");
  if (a == 0.0) return 0.0;
  double aa = std::abs(a);
  double ab = std::abs(b);
  double s = sign_of(a) * sign_of(b);
  if (std::max(aa, ab) <= kLargeArgumentThreshold) {
    return std::sinh(a) / std::sinh(b);
  }
  double ratio = std::exp(aa - ab) * (-std::expm1(-2.0 * aa)) / (-std::expm1(-2.0 * ab));
  return s * ratio;
}

double tanh_diff(double A, double B) {
  if (!std::isfinite(A) || !std::isfinite(B)) {
    raise(ErrorCode::NonFinite, "tanh_diff arguments must be finite");
  }
  double d = A - B;
  if (d == 0.0) return 0.0;
  if (std::abs(A) + std::abs(B) <= kLogSpaceProductThreshold) {
    return std::sinh(d) / (std::cosh(A) * std::cosh(B));
  }
  double magnitude = std::exp(log_sinh_abs(d) - log_cosh(A) - log_cosh(B));
  return sign_of(d) * magnitude;
}

double divided_difference(double x0, double x1, double y0, double y1) {
  if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(y0) || !std::isfinite(y1)) {
    raise(ErrorCode::NonFinite, "divided_difference arguments must be finite");
  }
  if (x0 == x1) raise(ErrorCode::DivideByZero, "divided_difference requires x0 != x1");
  return (y1 - y0) / (x1 - x0);
}

double log_cosh(double x) {
  double ax = std::abs(x);
  if (ax > kLargeArgumentThreshold) {
    return ax - std::log(2.0) + std::log1p(std::exp(-2.0 * ax));
  }
  return std::log(std::cosh(ax));
}

double sech(double x) {
  double e = std::exp(-std::abs(x));
  return 2.0 * e / (1.0 + e * e);
}

double cosh_ratio(double a, double b) {
  if (std::max(std::abs(a), std::abs(b)) <= kLargeArgumentThreshold) {
    return std::cosh(a) / std::cosh(b);
  }
  return std::exp(log_cosh(a) - log_cosh(b));
}

double kernel_zcosh_minus_sinh(double z) {
  double az = std::abs(z);
  if (az >= kSeriesThresholdK) {
    return (z * std::cosh(z) - std::sinh(z)) / (z * z * z);
  }
  // term_n = 2n z^(2n-2) / (2n+1)!;  ratio t_{n+1}/t_n = z^2 (n+1) / (n (2n+2)(2n+3))
  double z2 = z * z;
  double term = 1.0 / 3.0;
  double sum = term;
  for (int n = 1;; ++n) {
    term *= z2 * (n + 1) / (static_cast<double>(n) * (2 * n + 2) * (2 * n + 3));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double sinh_minus(double w) {
  if (std::abs(w) >= kSeriesThresholdSinhMinus) {
    return std::sinh(w) - w;
  }
  double w2 = w * w;
  double term = w * w2 / 6.0;
  double sum = term;
  for (int n = 1;; ++n) {
    term *= w2 / (static_cast<double>(2 * n + 2) * (2 * n + 3));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double cosh_minus_one_minus_half_sq(double w) {
  if (std::abs(w) >= kSeriesThresholdCoshRemainder) {
    return std::cosh(w) - 1.0 - 0.5 * w * w;
  }
  double w2 = w * w;
  double term = w2 * w2 / 24.0;
  double sum = term;
  for (int n = 2;; ++n) {
    term *= w2 / (static_cast<double>(2 * n + 1) * (2 * n + 2));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double sinhsq_minus(double z) {
  return 0.5 * cosh_minus_one_minus_half_sq(2.0 * z);
}

// ---------------------------------------------------------------------------
// shared tridiagonal machinery
// ---------------------------------------------------------------------------

void TridiagonalSystem::compute_margin() {
  int n = size();
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row -= std::abs(sub[i - 1]);
    if (i + 1 < n) row -= std::abs(sup[i]);
    margin = std::min(margin, row);
  }
  dominance_margin = margin;
}

std::vector<double> thomas_solve(const TridiagonalSystem& system) {
  int n = system.size();
  if (n == 0 || static_cast<int>(system.sub.size()) != n - 1 ||
      static_cast<int>(system.sup.size()) != n - 1 ||
      static_cast<int>(system.rhs.size()) != n) {
    raise(ErrorCode::LengthMismatch, "tridiagonal band lengths are inconsistent");
  }
  if (!(system.dominance_margin > 0.0)) {
    raise(ErrorCode::NotDominant,
          "dominance margin " + format_double(system.dominance_margin) +
              " <= 0; pivot-free elimination refused");
  }
  std::vector<double> c(n - 1), d(n);
  double beta = system.diag[0];
  if (n > 1) c[0] = system.sup[0] / beta;
  d[0] = system.rhs[0] / beta;
  for (int i = 1; i < n; ++i) {
    beta = system.diag[i] - system.sub[i - 1] * c[i - 1];
    if (beta == 0.0) {
      raise(ErrorCode::NotDominant, "elimination produced a zero pivot");
    }
    if (i < n - 1) c[i] = system.sup[i] / beta;
    d[i] = (system.rhs[i] - system.sub[i - 1] * d[i - 1]) / beta;
  }
  for (int i = n - 2; i >= 0; --i) {
    d[i] -= c[i] * d[i + 1];
  }
  return d;
}

}  // namespace hypspline
