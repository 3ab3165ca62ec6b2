#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/// Shared domain types and numerically hardened hyperbolic kernels used by
/// every spline family in the library.
///
/// All types are immutable after construction and all functions are pure, so
/// everything here is safe for unrestricted concurrent use.
namespace hypspline {

// ---------------------------------------------------------------------------
// errors
// ---------------------------------------------------------------------------

enum class ErrorCode {
  NonMonotone,         ///< abscissae not strictly increasing
  NonFinite,           ///< NaN or infinity in input
  DivideByZero,        ///< zero denominator in an exact-input operation
  LengthMismatch,      ///< data vector lengths inconsistent with the partition
  OutOfDomain,         ///< evaluation point outside [x_0, x_N]
  BadRequest,          ///< malformed request (CLI/front-end validation)
  TensionTooLarge,     ///< tridiagonal dominance margin <= 0 at this alpha
  NotDominant,         ///< pivot-free elimination refused
  SingularLocalSystem, ///< per-interval 2x2 or 4x4 system degenerate
  Overflow,            ///< representable-range guard tripped
  SingularSystem,      ///< dense elimination hit a negligible pivot
  DenseTooLarge,       ///< dense reference solver size guard
  DegenerateErrors,    ///< convergence errors at rounding floor; order undefined
  SearchFailed,        ///< iterative parameter search exhausted its budget
};

/// Returns a stable machine-readable name, e.g. "TENSION_TOO_LARGE".
const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

// ---------------------------------------------------------------------------
// domain types
// ---------------------------------------------------------------------------

/// Strictly increasing abscissae x_0 < ... < x_N plus derived mesh metrics.
struct Partition {
  std::vector<double> nodes;
  std::vector<double> widths;  ///< widths[j] = nodes[j+1] - nodes[j]
  double hbar = 0.0;           ///< max interval width
  double mesh_ratio = 1.0;     ///< hbar / min interval width

  int interval_count() const { return static_cast<int>(widths.size()); }
  int node_count() const { return static_cast<int>(nodes.size()); }
  double left() const { return nodes.front(); }
  double right() const { return nodes.back(); }

  /// Index j of the interval [nodes[j], nodes[j+1]] containing x, using the
  /// right-piece convention at interior nodes. Throws OutOfDomain.
  int find_interval(double x) const;
};

/// Validates and builds a Partition. Throws NonMonotone / NonFinite.
Partition make_partition(std::vector<double> nodes);

/// Ordinates plus optional end payloads and optional per-node slopes.
struct DataSet {
  std::vector<double> values;
  std::optional<double> left_end;   ///< y'_0 (first-derivative end data) or y''_0
  std::optional<double> right_end;  ///< y'_N or y''_N
  std::optional<std::vector<double>> slopes;  ///< per-node slopes, Hermite fits
};

enum class EndKind { TypeI, TypeII, TypeIII };

/// End condition: prescribed end first derivatives (Type I), natural ends
/// (Type II, zero second derivatives), or prescribed end second derivatives
/// (Type III). The payload pair is meaningful for Types I and III only.
struct EndCondition {
  EndKind kind = EndKind::TypeII;
  double left = 0.0;
  double right = 0.0;

  static EndCondition type1(double left_slope, double right_slope);
  static EndCondition type2();
  static EndCondition type3(double left_second, double right_second);
};

/// Largest |alpha * x| for which cosh(alpha * x) stays comfortably inside
/// double range.
inline constexpr double kTensionArgumentGuard = 700.0;

/// Tension parameter alpha > 0 with the representable-cosh guard
/// alpha * max(|x_0|, |x_N|) <= kTensionArgumentGuard.
struct TensionParam {
  double alpha = 0.0;
  TensionParam(double alpha_value, double max_abs_x);
};

/// Validates alpha against a partition's extremes. Throws NonFinite/Overflow.
void check_tension(double alpha, const Partition& partition);

// ---------------------------------------------------------------------------
// stable kernels
// ---------------------------------------------------------------------------

/// Arguments above this switch the kernels from direct library calls to
/// exponent-factored / log-space paths.
inline constexpr double kLargeArgumentThreshold = 30.0;

/// |A| + |B| above this uses log-space cosh products in tanh_diff.
inline constexpr double kLogSpaceProductThreshold = 350.0;

/// sinh(a)/sinh(b) without intermediate overflow for |a|, |b| up to ~1400.
/// Large arguments use e^(|a|-|b|) * (1 - e^(-2|a|)) / (1 - e^(-2|b|)) with
/// the sign restored afterwards. Throws DivideByZero when b == 0.
double stable_sinh_ratio(double a, double b);

/// tanh(A) - tanh(B) via sinh(A-B)/(cosh(A) cosh(B)), which never cancels;
/// the cosh product moves to log space once |A| + |B| exceeds
/// kLogSpaceProductThreshold.
double tanh_diff(double A, double B);

/// (y1 - y0) / (x1 - x0). Throws DivideByZero when x0 == x1.
double divided_difference(double x0, double x1, double y0, double y1);

/// log(cosh(x)), valid for all finite x (|x| - log 2 + log1p(e^(-2|x|)) for
/// large |x|).
double log_cosh(double x);

/// sech(x) = 1/cosh(x), computed as 2 e^(-|x|) / (1 + e^(-2|x|)).
double sech(double x);

/// cosh(a)/cosh(b) through log space once either argument is large.
double cosh_ratio(double a, double b);

/// log(sinh(|d|)) for d != 0, valid for |d| up to ~1400
/// (|d| - log 2 + log1p(-e^(-2|d|)) once |d| is large).
double log_sinh_abs(double d);

/// Series switch points for the small-argument kernels below.
inline constexpr double kSeriesThresholdK = 0.5;
inline constexpr double kSeriesThresholdSinhMinus = 1.0;
inline constexpr double kSeriesThresholdCoshRemainder = 2.0;

/// K(z) = (z cosh z - sinh z) / z^3. The raw form loses roughly
/// 3*|log10 z| digits near zero, so |z| < kSeriesThresholdK runs the
/// Maclaurin series 1/3 + z^2/30 + z^4/840 + ... to convergence. K(0) = 1/3.
double kernel_zcosh_minus_sinh(double z);

/// sinh(w) - w, by series below kSeriesThresholdSinhMinus.
double sinh_minus(double w);

/// cosh(w) - 1 - w^2/2, by series below kSeriesThresholdCoshRemainder.
double cosh_minus_one_minus_half_sq(double w);

/// sinh(z)^2 - z^2 = (cosh(2z) - 1 - (2z)^2/2) / 2, cancellation-free.
double sinhsq_minus(double z);

// ---------------------------------------------------------------------------
// shared tridiagonal machinery
// ---------------------------------------------------------------------------

/// Tridiagonal system with n unknowns: sub-diagonal a_1..a_{n-1}, diagonal
/// b_0..b_{n-1}, super-diagonal c_0..c_{n-2}, right-hand side d_0..d_{n-1}.
struct TridiagonalSystem {
  std::vector<double> sub;   ///< size n-1
  std::vector<double> diag;  ///< size n
  std::vector<double> sup;   ///< size n-1
  std::vector<double> rhs;   ///< size n
  double dominance_margin = 0.0;  ///< min_i (|b_i| - |a_i| - |c_i|)

  int size() const { return static_cast<int>(diag.size()); }
  /// Recomputes dominance_margin from the current bands.
  void compute_margin();
};

/// Pivot-free forward elimination / back substitution. Requires
/// dominance_margin > 0; throws NotDominant otherwise.
std::vector<double> thomas_solve(const TridiagonalSystem& system);

}  // namespace hypspline
