#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hypspline/core.hpp"

/// Empirical rate measurement: mesh-refinement studies (error vs mesh width
/// on doubling node counts) and tension-sweep studies (distance between a
/// tension family and its polynomial limit as alpha is halved). Orders are
/// estimated as log2 ratios of consecutive sup errors; the summary statistic
/// is the median with the coarsest step dropped, which keeps pre-asymptotic
/// pollution out of the estimate.
namespace hypspline::conv {

/// A function together with its derivatives: curve(x, d) = d-th derivative.
using Curve = std::function<double(double, int)>;

enum class Family { S1, T1, S2, T2, Cubic, Hermite };

/// Which parametrized family is compared against which alpha-independent
/// limit in a tension sweep.
enum class LimitPair {
  T1VsLinear,
  S1VsLinear,
  T2VsCubic,
  S2VsCubic,
  HermiteVsCubicHermite,
  CubicVsCubic,  ///< degenerate self-comparison; reports exact
};

struct ConvergenceReport {
  int derivative_order = 0;
  double target = 0.0;  ///< expected order for this family/derivative
  /// (mesh width, sup error) per level -- or (alpha, sup error) for sweeps.
  std::vector<std::pair<double, double>> levels;
  std::vector<double> fitted_orders;  ///< log2(e_l / e_{l+1})
  double summary_order = 0.0;         ///< median, coarsest step dropped
  bool exact = false;  ///< every level sat at the reproduction floor
  bool pass = false;
};

struct OrderEstimate {
  std::vector<double> per_step;
  double median = 0.0;
};

/// log2 ratios of consecutive errors plus their median (the coarsest step is
/// dropped from the median once at least two steps exist). Requires >= 3
/// positive entries (BadRequest) with every entry above 1e-14
/// (DegenerateErrors below -- exact reproduction has no meaningful order).
OrderEstimate estimate_orders(const std::vector<double>& errors);

/// Max of |f^(deriv) - spline^(deriv)| over a composite grid: `samples`
/// equispaced points per interval plus all nodes. Requires samples >= 100.
double sup_error(const Curve& f, const Partition& partition, const Curve& spline,
                 int deriv, int samples);

/// Fits `family` to f on uniform partitions of [a, b] with the given node
/// counts (strictly doubling, >= 3 levels), measures sup errors of the given
/// derivative, and estimates orders. End payloads for Types I/III are taken
/// from f's exact derivatives. pass means |median - target| <= 0.3, or exact
/// reproduction. Derivative 0..1 for the order-1 families, 0..2 otherwise.
ConvergenceReport run_convergence_study(const Curve& f, double a, double b, double alpha,
                                        Family family, EndKind end_kind,
                                        const std::vector<int>& levels, int deriv,
                                        int samples = 512);

/// Fixed data and partition; fits the parametrized family at each alpha in
/// the (halving, >= 3 entries) sweep and measures the sup distance to the
/// alpha-independent limit interpolant. `slopes` is required for the Hermite
/// pair and ignored otherwise. The report's levels hold (alpha, error);
/// target is 2 and pass means median >= 1.9, or exact agreement.
ConvergenceReport alpha_limit_study(const Partition& partition,
                                    const std::vector<double>& values, LimitPair pair,
                                    const EndCondition& end,
                                    const std::vector<double>& alphas,
                                    const std::vector<double>* slopes = nullptr,
                                    int samples = 512);

/// A named test curve on a fixed interval, with derivatives through order 3.
struct TestFunction {
  std::string name;
  double a = 0.0;
  double b = 0.0;
  Curve f;
};

/// Built-in corpus: sin on [0, pi] (vanishing end second derivatives, so
/// natural ends stay fourth order), exp on [0, 1], and 1/(1+x^2) on [-2, 2].
const std::vector<TestFunction>& builtin_corpus();

/// Corpus lookup by name; throws BadRequest for unknown names.
const TestFunction& find_test_function(const std::string& name);

}  // namespace hypspline::conv
