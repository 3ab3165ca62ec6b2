#pragma once

#include <vector>

#include "hypspline/core.hpp"

/// First-order tension interpolants. Both families have closed barycentric
/// forms on each interval, so a fit stores only the node values plus a family
/// tag and evaluation computes the two interval weights on the fly:
///
///   family S:  s(x) = [ y_l sinh(a(x_r - x)) + y_r sinh(a(x - x_l)) ] / sinh(a h)
///   family T:  t(x) = [ y_l (tanh(a x_r) - tanh(a x))
///                       + y_r (tanh(a x) - tanh(a x_l)) ]
///                     / (tanh(a x_r) - tanh(a x_l))
///
/// The T weights form a partition of unity (constants are reproduced); the S
/// weights do not. Both interpolants are C0 only, with kinks at the nodes.
namespace hypspline::k1 {

enum class Family1 { S, T };

struct Spline1 {
  Family1 family = Family1::S;
  double alpha = 0.0;
  Partition partition;
  std::vector<double> values;
};

/// Family-S fit. All weights go through stable_sinh_ratio so large tension
/// arguments neither overflow nor cancel. Throws LengthMismatch/Overflow.
Spline1 fit_s1(const Partition& partition, const std::vector<double>& values,
               const TensionParam& alpha);

/// Family-T fit; weights use tanh_diff. Throws LengthMismatch/Overflow.
Spline1 fit_t1(const Partition& partition, const std::vector<double>& values,
               const TensionParam& alpha);

/// Value (deriv 0) or first derivative (deriv 1) at x. Node conventions for
/// the C0 families: deriv 0 at a node returns the stored y_j exactly; deriv 1
/// at an interior node uses the left piece. Throws OutOfDomain/BadRequest.
double eval1(const Spline1& spline, double x, int deriv);

}  // namespace hypspline::k1
