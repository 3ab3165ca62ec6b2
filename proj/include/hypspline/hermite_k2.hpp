#pragma once

#include <optional>
#include <vector>

#include "hypspline/core.hpp"
#include "hypspline/cubic_ref.hpp"
#include "hypspline/spline_k2.hpp"

/// Order-2 Hermite tension interpolation (value + slope at every node, C1
/// overall) and sampling-based shape verification. Shrinking alpha drives
/// the Hermite fit to the cubic Hermite interpolant, which is the lever the
/// shape search uses: pick slopes that make the cubic limit shape-preserving,
/// then halve alpha until the sampled check passes.
namespace hypspline::hermite {

/// Per-interval Hermite fit in the exponential basis. Each interval solves
/// two decoupled 2x2 systems (the even and odd parts of the piece about the
/// interval midpoint), which is equivalent to the full 4x4 collocation but
/// keeps the determinants in closed, cancellation-free form. Intervals with
/// a h below 1e-4 substitute the plain cubic Hermite piece (the limit form)
/// and are tagged PieceKind::Cubic. Throws LengthMismatch/SingularLocalSystem.
k2::ExpSpline2 fit_hermite_s2(const Partition& partition, const std::vector<double>& values,
                              const std::vector<double>& slopes, const TensionParam& alpha);

enum class ShapeProperty { Positive, MonotoneUp, MonotoneDown, Convex };

/// Name as used by the CLI ("positive", "monotone_up", ...).
const char* shape_property_name(ShapeProperty property) noexcept;

struct ShapeReport {
  ShapeProperty property = ShapeProperty::Positive;
  bool holds = false;
  std::optional<double> witness;  ///< first x where the property fails
  int resolution = 0;             ///< samples per interval
  double violation = 0.0;         ///< amount by which the witness violates
};

/// Samples the property's defining quantity (value, first, or second
/// derivative) at `resolution` equispaced points per interval plus all
/// nodes and reports the first violation beyond 1e-12 * (1 + max sampled
/// magnitude). Requires resolution >= 64 (BadRequest below).
ShapeReport shape_check(const k2::ExpSpline2& spline, ShapeProperty property, int resolution);
ShapeReport shape_check(const cubic::CubicSpline& spline, ShapeProperty property,
                        int resolution);

struct AlphaSearchResult {
  double alpha = 0.0;        ///< first tension value whose check passed
  int halvings = 0;          ///< how many halvings from alpha0 it took
  ShapeReport report;
};

/// Fits Hermite tension splines at alpha0, alpha0/2, ... until shape_check
/// passes, up to max_halvings. Throws SearchFailed when the budget runs out
/// (e.g. the data themselves violate the claimed property).
AlphaSearchResult shape_alpha_search(const Partition& partition,
                                     const std::vector<double>& values,
                                     const std::vector<double>& slopes,
                                     ShapeProperty property, double alpha0, int resolution,
                                     int max_halvings = 60);

}  // namespace hypspline::hermite
