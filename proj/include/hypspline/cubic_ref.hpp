#pragma once

#include <array>
#include <vector>

#include "hypspline/core.hpp"

/// Classical polynomial reference interpolants: the piecewise-linear spline,
/// the C2 cubic spline with end-condition Types I-III, the C1 cubic Hermite
/// spline, and a monotonicity-preserving slope selector. These serve as the
/// alpha -> 0 limit targets and error baselines for the tension families.
namespace hypspline::cubic {

enum class Smoothness { C2, C1 };

/// Piecewise cubic with per-interval coefficients in the local coordinate
/// u = x - x_{j-1}: value = c0 + c1 u + c2 u^2 + c3 u^3.
struct CubicSpline {
  Partition partition;
  std::vector<std::array<double, 4>> pieces;
  Smoothness smoothness = Smoothness::C2;

  /// Value (deriv 0), first (1), or second (2) derivative at x.
  /// Right-piece convention at interior nodes. Throws OutOfDomain/BadRequest.
  double eval(double x, int deriv = 0) const;
};

/// Piecewise-linear interpolant of (partition, values), returned in the same
/// representation with the quadratic and cubic coefficients zero (C1 tag,
/// since the first derivative generally jumps at nodes).
CubicSpline fit_linear(const Partition& partition, const std::vector<double>& values);

/// C2 cubic spline through (partition, values) with the requested end
/// condition: Type I prescribes end first derivatives, Type II (natural)
/// zeroes the end second derivatives, Type III prescribes them. Solves the
/// standard tridiagonal system in the node second derivatives, which is
/// unconditionally diagonally dominant.
CubicSpline fit_cubic(const Partition& partition, const std::vector<double>& values,
                      const EndCondition& end);

/// C1 cubic Hermite interpolant matching value and slope at every node.
CubicSpline fit_cubic_hermite(const Partition& partition, const std::vector<double>& values,
                              const std::vector<double>& slopes);

/// Monotonicity-preserving node slopes (Fritsch-Carlson limiter with
/// Fritsch-Butland weighted-harmonic interior slopes): one-sided secants at
/// the ends, zero at local extrema and across flat segments, and a final
/// radius-3 rescaling pass so each interval's slope pair stays inside the
/// monotonicity region. Feeding the result to fit_cubic_hermite yields a
/// monotone interpolant on every interval where the data are monotone.
std::vector<double> monotone_slopes(const Partition& partition,
                                    const std::vector<double>& values);

}  // namespace hypspline::cubic
