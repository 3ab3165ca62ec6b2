#pragma once

#include <array>
#include <vector>

#include "hypspline/core.hpp"

/// Second-order tension interpolation. The working representation is the
/// tanh form t(x) = p(x) + q(x) tanh(a x) with p, q linear per interval; the
/// exponential form s(x) = (A + B u) e^(-a u) + (C + D u) e^(a u) (local
/// coordinate u = x - x_{j-1}) is the cosh(a x)-scaled image of the same
/// space. A fit solves a tridiagonal system in the node second derivatives
/// t''_j, reconstructs the per-interval coefficients in closed form, and --
/// for the exponential family -- converts representation at the end.
namespace hypspline::k2 {

/// Influence of the two endpoint second derivatives on the endpoint slopes
/// of one interval's tanh-form piece:
///
///   t'(x_l) = dy/h - p * t''_l - q  * t''_r
///   t'(x_r) = dy/h + qp * t''_l + pp * t''_r
///
/// (dy/h is the interval divided difference of the interpolated values.)
/// All four coefficients reduce to the classical cubic weights h/3 and h/6
/// as a h -> 0; the small-argument regime is evaluated through the series
/// kernels so that limit is reached without 0/0 ratios.
struct IntervalCoeffs {
  double p = 0.0;
  double q = 0.0;
  double qp = 0.0;
  double pp = 0.0;
  double delta = 0.0;  ///< local 2x2 determinant of the curvature system
  /// True when the determinant lost more than six decimal digits to
  /// cancellation between its two terms (possible when x_l < 0 < x_r).
  bool cancellation_flagged = false;
};

/// Computes the influence coefficients for one interval [xl, xr].
/// Throws SingularLocalSystem when the local determinant is negligible
/// relative to its constituent terms.
IntervalCoeffs interval_coeffs(double alpha, double xl, double xr);

/// Tanh-form spline: piece j stores (p0, p1, q0, q1) meaning
/// t(x) = p0 + p1 x + (q0 + q1 x) tanh(a x) on [x_{j-1}, x_j].
struct TanhSpline2 {
  double alpha = 0.0;
  Partition partition;
  std::vector<std::array<double, 4>> pieces;
  std::vector<double> node_second_derivs;  ///< t''_0 .. t''_N
};

enum class PieceKind { Exponential, Cubic };

/// Exponential-form spline: piece j stores (A, B, C, D) meaning
/// s(x) = (A + B u) e^(-a u) + (C + D u) e^(a u) with u = x - x_{j-1}.
/// A piece tagged Cubic instead stores plain cubic coefficients (c0..c3) in
/// u; the Hermite fit substitutes those when a h is below its series floor.
struct ExpSpline2 {
  double alpha = 0.0;
  Partition partition;
  std::vector<std::array<double, 4>> pieces;
  std::vector<PieceKind> kinds;
};

/// Assembles the tridiagonal system in the unknown node second derivatives
/// of the tanh form for the given (already tanh-problem) values. End rows:
/// Type I pins the end slopes via the interval influence coefficients,
/// Type II/III pins the end second derivatives to 0 / the payloads.
/// Throws TensionTooLarge (message names the dominance margin) when the
/// assembled system loses strict diagonal dominance, and Overflow when a
/// row entry leaves double range.
TridiagonalSystem assemble_t2_system(const Partition& partition,
                                     const std::vector<double>& values, double alpha,
                                     const EndCondition& end);

/// Rebuilds the per-interval tanh-form coefficients from node values and
/// node second derivatives: the curvature pair determines q in closed form,
/// then p is the line making the piece interpolate. Throws
/// SingularLocalSystem / Overflow.
TanhSpline2 reconstruct_t2(const Partition& partition, const std::vector<double>& values,
                           double alpha, const std::vector<double>& tpp);

/// C2 tanh-family interpolant of (partition, values): assemble, solve,
/// reconstruct. Type I payloads are end first derivatives of t, Type III end
/// second derivatives of t.
TanhSpline2 fit_t2(const Partition& partition, const std::vector<double>& values,
                   const TensionParam& alpha, const EndCondition& end);

/// The tanh-form intermediate of fit_s2: scales the data by sech(a x_j),
/// transports the end conditions from s to t (Type I via the product rule on
/// s = cosh(a x) t; Types II/III by end rows enforcing s'' directly in terms
/// of the t unknowns), and fits. cosh(a x) * (this result) equals fit_s2.
TanhSpline2 fit_s2_tanh_form(const Partition& partition, const std::vector<double>& values,
                             const TensionParam& alpha, const EndCondition& end);

/// C2 exponential-family interpolant of (partition, values). Payloads are
/// end derivatives of s itself. Equals cosh(a x) * fit_s2_tanh_form(...),
/// converted to the exponential representation.
ExpSpline2 fit_s2(const Partition& partition, const std::vector<double>& values,
                  const TensionParam& alpha, const EndCondition& end);

/// Expands cosh(a x) * (p(x) + q(x) tanh(a x)) piecewise into the local
/// exponential basis. Throws Overflow if a coefficient leaves double range.
ExpSpline2 to_exp_representation(const TanhSpline2& t);

/// Value or derivative (0..2) at x; right-piece convention at interior
/// nodes (invisible up to tolerance for these C2 splines).
/// Throws OutOfDomain/BadRequest.
double eval2(const TanhSpline2& spline, double x, int deriv);
double eval2(const ExpSpline2& spline, double x, int deriv);

/// Evaluates piece j's formula at x regardless of which interval contains
/// x. Intended for smoothness diagnostics (one-sided node mismatches).
double eval_piece(const TanhSpline2& spline, int piece, double x, int deriv);
double eval_piece(const ExpSpline2& spline, int piece, double x, int deriv);

}  // namespace hypspline::k2
