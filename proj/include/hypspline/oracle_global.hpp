#pragma once

#include <vector>

#include "hypspline/core.hpp"
#include "hypspline/spline_k2.hpp"

/// Independent dense-solve reference for the order-2 exponential fit: one
/// global linear system over all 4N per-interval exponential coefficients,
/// solved with partial pivoting. Deliberately simple and O(N^3); its only
/// job is to cross-validate the tridiagonal pipeline.
namespace hypspline::oracle {

/// Largest interval count the dense reference accepts.
inline constexpr int kDenseSizeGuard = 200;

/// The assembled dense system, kept inspectable for structural tests.
/// Row layout: per interval its two interpolation rows (left end, right
/// end), then per interior node a first- and a second-derivative continuity
/// row, then the two end-condition rows.
struct DenseSystem {
  std::vector<std::vector<double>> matrix;
  std::vector<double> rhs;
  int interpolation_rows = 0;
  int continuity_rows = 0;
  int end_rows = 0;
};

/// Builds the dense system. By default the unknowns are the per-interval
/// coefficients in the local basis {e^(-a u), u e^(-a u), e^(a u), u e^(a u)},
/// u = x - x_{j-1}; global_basis = true instead uses the same basis in the
/// global coordinate x per interval (exponentially worse conditioned on wide
/// domains -- retained for fidelity testing on small ones).
DenseSystem build_s2_global_system(const Partition& partition,
                                   const std::vector<double>& values, double alpha,
                                   const EndCondition& end, bool global_basis = false);

/// Gaussian elimination with partial pivoting. Throws SingularSystem when
/// the best available pivot is below 1e-13 of its row's initial scale (the
/// message reports that ratio as a crude condition estimate);
/// LengthMismatch / NonFinite on malformed input.
std::vector<double> dense_solve(std::vector<std::vector<double>> matrix,
                                std::vector<double> rhs);

/// Dense reference fit of the order-2 exponential interpolant. Results agree
/// with k2::fit_s2 to oracle tolerance; see the cross-validation tests.
/// Throws DenseTooLarge above kDenseSizeGuard intervals.
k2::ExpSpline2 fit_s2_global(const Partition& partition, const std::vector<double>& values,
                             const TensionParam& alpha, const EndCondition& end,
                             bool global_basis = false);

}  // namespace hypspline::oracle
