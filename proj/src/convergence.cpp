#include "hypspline/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <numbers>

#include "hypspline/cubic_ref.hpp"
#include "hypspline/hermite_k2.hpp"
#include "hypspline/spline_k1.hpp"
#include "hypspline/spline_k2.hpp"

namespace hypspline::conv {
namespace {

/// Errors at or below 1e-14 * (1 + max |data|) are treated as exact
/// reproduction: ratios of rounding noise carry no order information.
constexpr double kReproductionFloor = 1e-14;

/// Mesh studies pass when |median - target| <= this band.
constexpr double kMeshOrderBand = 0.3;

/// Tension sweeps pass when the median order reaches target minus this.
constexpr double kAlphaOrderSlack = 0.1;
constexpr double kAlphaTarget = 2.0;

/// Relative tolerance for "each alpha halves the previous one".
constexpr double kHalvingTolerance = 1e-9;

Partition uniform_partition(double a, double b, int intervals) {
  std::vector<double> nodes(static_cast<std::size_t>(intervals) + 1);
  for (int k = 0; k <= intervals; ++k) {
    nodes[static_cast<std::size_t>(k)] =
        a + (b - a) * (static_cast<double>(k) / static_cast<double>(intervals));
  }
  nodes.front() = a;
  nodes.back() = b;
  return make_partition(std::move(nodes));
}

Curve wrap(k1::Spline1 s) {
  auto held = std::make_shared<k1::Spline1>(std::move(s));
  return [held](double x, int deriv) { return k1::eval1(*held, x, deriv); };
}

Curve wrap(k2::TanhSpline2 s) {
  auto held = std::make_shared<k2::TanhSpline2>(std::move(s));
  return [held](double x, int deriv) { return k2::eval2(*held, x, deriv); };
}

Curve wrap(k2::ExpSpline2 s) {
  auto held = std::make_shared<k2::ExpSpline2>(std::move(s));
  return [held](double x, int deriv) { return k2::eval2(*held, x, deriv); };
}

Curve wrap(cubic::CubicSpline s) {
  auto held = std::make_shared<cubic::CubicSpline>(std::move(s));
  return [held](double x, int deriv) { return held->eval(x, deriv); };
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int max_derivative(Family family) {
  return (family == Family::S1 || family == Family::T1) ? 1 : 2;
}

double target_order(Family family, int deriv) {
  const double base = (family == Family::S1 || family == Family::T1) ? 2.0 : 4.0;
  return base - static_cast<double>(deriv);
}

TensionParam tension_for(double alpha, const Partition& partition) {
  return TensionParam(alpha, std::max(std::abs(partition.left()), std::abs(partition.right())));
}

std::vector<double> sample_nodes(const Curve& f, const Partition& partition, int deriv) {
  std::vector<double> out(static_cast<std::size_t>(partition.node_count()));
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = f(partition.nodes[j], deriv);
  return out;
}

Curve fit_for_study(Family family, const Partition& partition, const Curve& f, double alpha,
                    EndKind end_kind) {
  const std::vector<double> y = sample_nodes(f, partition, 0);
  EndCondition end = EndCondition::type2();
  if (end_kind == EndKind::TypeI) {
    end = EndCondition::type1(f(partition.left(), 1), f(partition.right(), 1));
  } else if (end_kind == EndKind::TypeIII) {
    end = EndCondition::type3(f(partition.left(), 2), f(partition.right(), 2));
  }
  switch (family) {
    case Family::S1:
      return wrap(k1::fit_s1(partition, y, tension_for(alpha, partition)));
    case Family::T1:
      return wrap(k1::fit_t1(partition, y, tension_for(alpha, partition)));
    case Family::S2:
      return wrap(k2::fit_s2(partition, y, tension_for(alpha, partition), end));
    case Family::T2:
      return wrap(k2::fit_t2(partition, y, tension_for(alpha, partition), end));
    case Family::Cubic:
      return wrap(cubic::fit_cubic(partition, y, end));
    case Family::Hermite:
      return wrap(hermite::fit_hermite_s2(partition, y, sample_nodes(f, partition, 1),
                                          tension_for(alpha, partition)));
  }
  raise(ErrorCode::BadRequest, "unknown family");
}

/// Longest leading run of errors sitting strictly above the floor. Levels at
/// the floor (always the finest ones, since errors decrease) are excluded
/// from order fitting.
std::size_t above_floor_prefix(const std::vector<std::pair<double, double>>& levels,
                               double floor) {
  std::size_t n = 0;
  while (n < levels.size() && levels[n].second > floor) ++n;
  return n;
}

void finish_report(ConvergenceReport& report, double floor, bool one_sided) {
  const std::size_t usable = above_floor_prefix(report.levels, floor);
  if (usable < 3) {
    // Everything (or all but a level or two) reproduced the target to
    // rounding: no order can be fitted, and that is a success.
    report.exact = true;
    report.pass = true;
    return;
  }
  std::vector<double> errors;
  errors.reserve(usable);
  for (std::size_t l = 0; l < usable; ++l) errors.push_back(report.levels[l].second);
  const OrderEstimate estimate = estimate_orders(errors);
  report.fitted_orders = estimate.per_step;
  report.summary_order = estimate.median;
  report.pass = one_sided
                    ? (report.summary_order >= report.target - kAlphaOrderSlack)
                    : (std::abs(report.summary_order - report.target) <= kMeshOrderBand);
}

}  // namespace

OrderEstimate estimate_orders(const std::vector<double>& errors) {
  if (errors.size() < 3) {
    raise(ErrorCode::BadRequest, "order estimation needs at least three error levels");
  }
  for (double e : errors) {
    if (!std::isfinite(e) || e <= 0.0) {
      raise(ErrorCode::BadRequest, "order estimation needs positive finite errors");
    }
    if (e <= kReproductionFloor) {
      raise(ErrorCode::DegenerateErrors,
            "error " + std::to_string(e) + " is at the rounding floor; order undefined");
    }
  }
  OrderEstimate out;
  out.per_step.reserve(errors.size() - 1);
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    out.per_step.push_back(std::log2(errors[i] / errors[i + 1]));
  }
  std::vector<double> kept = out.per_step;
  if (kept.size() >= 2) kept.erase(kept.begin());  // drop the coarsest step
  out.median = median_of(std::move(kept));
  return out;
}

double sup_error(const Curve& f, const Partition& partition, const Curve& spline, int deriv,
                 int samples) {
  if (samples < 100) {
    raise(ErrorCode::BadRequest, "sup_error needs at least 100 samples per interval");
  }
  double worst = 0.0;
  auto visit = [&](double x) {
    const double diff = f(x, deriv) - spline(x, deriv);
    if (!std::isfinite(diff)) {
      raise(ErrorCode::NonFinite, "non-finite value while sampling the error");
    }
    worst = std::max(worst, std::abs(diff));
  };
  for (int j = 0; j < partition.interval_count(); ++j) {
    const double xl = partition.nodes[static_cast<std::size_t>(j)];
    const double h = partition.widths[static_cast<std::size_t>(j)];
    for (int k = 0; k < samples; ++k) {
      visit(xl + h * (static_cast<double>(k) / static_cast<double>(samples)));
    }
  }
  visit(partition.right());
  return worst;
}

ConvergenceReport run_convergence_study(const Curve& f, double a, double b, double alpha,
                                        Family family, EndKind end_kind,
                                        const std::vector<int>& levels, int deriv,
                                        int samples) {
  if (levels.size() < 3) {
    raise(ErrorCode::BadRequest, "a convergence study needs at least three levels");
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (levels[l] < 1) raise(ErrorCode::BadRequest, "level interval counts must be positive");
    if (l > 0 && levels[l] != 2 * levels[l - 1]) {
      raise(ErrorCode::BadRequest, "each level must double the previous interval count");
    }
  }
  if (deriv < 0 || deriv > max_derivative(family)) {
    raise(ErrorCode::BadRequest, "derivative order out of range for this family");
  }

  ConvergenceReport report;
  report.derivative_order = deriv;
  report.target = target_order(family, deriv);

  double floor = 0.0;
  for (int n : levels) {
    const Partition partition = uniform_partition(a, b, n);
    const Curve fitted = fit_for_study(family, partition, f, alpha, end_kind);
    const double err = sup_error(f, partition, fitted, deriv, samples);
    report.levels.emplace_back(partition.hbar, err);
    floor = std::max(floor,
                     kReproductionFloor * (1.0 + max_abs(sample_nodes(f, partition, 0))));
  }
  finish_report(report, floor, /*one_sided=*/false);
  return report;
}

ConvergenceReport alpha_limit_study(const Partition& partition,
                                    const std::vector<double>& values, LimitPair pair,
                                    const EndCondition& end,
                                    const std::vector<double>& alphas,
                                    const std::vector<double>* slopes, int samples) {
  if (alphas.size() < 3) {
    raise(ErrorCode::BadRequest, "a tension sweep needs at least three alphas");
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!std::isfinite(alphas[i]) || alphas[i] <= 0.0) {
      raise(ErrorCode::BadRequest, "sweep alphas must be positive and finite");
    }
    if (i > 0 && std::abs(alphas[i] - 0.5 * alphas[i - 1]) > kHalvingTolerance * alphas[i - 1]) {
      raise(ErrorCode::BadRequest, "each sweep alpha must halve the previous one");
    }
  }
  const bool needs_slopes = pair == LimitPair::HermiteVsCubicHermite;
  if (needs_slopes &&
      (slopes == nullptr || slopes->size() != values.size())) {
    raise(ErrorCode::LengthMismatch, "the Hermite sweep needs one slope per node");
  }

  Curve limit;
  switch (pair) {
    case LimitPair::T1VsLinear:
    case LimitPair::S1VsLinear:
      limit = wrap(cubic::fit_linear(partition, values));
      break;
    case LimitPair::T2VsCubic:
    case LimitPair::S2VsCubic:
    case LimitPair::CubicVsCubic:
      limit = wrap(cubic::fit_cubic(partition, values, end));
      break;
    case LimitPair::HermiteVsCubicHermite:
      limit = wrap(cubic::fit_cubic_hermite(partition, values, *slopes));
      break;
  }

  ConvergenceReport report;
  report.derivative_order = 0;
  report.target = kAlphaTarget;
  for (double alpha : alphas) {
    Curve fitted;
    switch (pair) {
      case LimitPair::T1VsLinear:
        fitted = wrap(k1::fit_t1(partition, values, tension_for(alpha, partition)));
        break;
      case LimitPair::S1VsLinear:
        fitted = wrap(k1::fit_s1(partition, values, tension_for(alpha, partition)));
        break;
      case LimitPair::T2VsCubic:
        fitted = wrap(k2::fit_t2(partition, values, tension_for(alpha, partition), end));
        break;
      case LimitPair::S2VsCubic:
        fitted = wrap(k2::fit_s2(partition, values, tension_for(alpha, partition), end));
        break;
      case LimitPair::HermiteVsCubicHermite:
        fitted = wrap(hermite::fit_hermite_s2(partition, values, *slopes,
                                              tension_for(alpha, partition)));
        break;
      case LimitPair::CubicVsCubic:
        fitted = wrap(cubic::fit_cubic(partition, values, end));
        break;
    }
    report.levels.emplace_back(alpha, sup_error(limit, partition, fitted, 0, samples));
  }
  const double floor = kReproductionFloor * (1.0 + max_abs(values));
  finish_report(report, floor, /*one_sided=*/true);
  return report;
}

const std::vector<TestFunction>& builtin_corpus() {
  static const std::vector<TestFunction> corpus = [] {
    auto check_order = [](int d) {
      if (d < 0 || d > 3) raise(ErrorCode::BadRequest, "corpus derivative order must be 0..3");
    };
    std::vector<TestFunction> list;
    list.push_back({"sin", 0.0, std::numbers::pi, [check_order](double x, int d) {
                      check_order(d);
                      switch (d) {
                        case 0: return std::sin(x);
                        case 1: return std::cos(x);
                        case 2: return -std::sin(x);
                        default: return -std::cos(x);
                      }
                    }});
    list.push_back({"exp", 0.0, 1.0, [check_order](double x, int d) {
                      check_order(d);
                      return std::exp(x);
                    }});
    list.push_back({"runge", -2.0, 2.0, [check_order](double x, int d) {
                      check_order(d);
                      const double w = 1.0 + x * x;
                      switch (d) {
                        case 0: return 1.0 / w;
                        case 1: return -2.0 * x / (w * w);
                        case 2: return (6.0 * x * x - 2.0) / (w * w * w);
                        default: return 24.0 * x * (1.0 - x * x) / (w * w * w * w);
                      }
                    }});
    return list;
  }();
  return corpus;
}

const TestFunction& find_test_function(const std::string& name) {
  for (const TestFunction& tf : builtin_corpus()) {
    if (tf.name == name) return tf;
  }
  raise(ErrorCode::BadRequest, "unknown test function \"" + name + "\" (try sin, exp, runge)");
}

}  // namespace hypspline::conv
