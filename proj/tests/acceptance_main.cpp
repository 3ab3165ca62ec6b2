// Acceptance gate: one pass/fail line per criterion, pinned tolerances.
// Covers the empirical convergence rates, the alpha -> 0 polynomial limits,
// the dense-oracle equivalence, the cosh bridge between the two order-2
// families, exactness and smoothness guarantees, the Hermite limit, the
// shape-preservation search, and the stability kernels. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hypspline/convergence.hpp"
#include "hypspline/cubic_ref.hpp"
#include "hypspline/hermite_k2.hpp"
#include "hypspline/oracle_global.hpp"
#include "hypspline/spline_k1.hpp"
#include "hypspline/spline_k2.hpp"

namespace hs = hypspline;
using hs::conv::ConvergenceReport;

namespace {

constexpr unsigned long long kSeed = 12345;
constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", index, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

hs::Partition uniform_partition(double a, double b, int n) {
  std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) nodes[static_cast<std::size_t>(j)] = a + (b - a) * j / n;
  return hs::make_partition(std::move(nodes));
}

std::vector<double> random_values(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> out(count);
  for (double& v : out) v = uni(rng);
  return out;
}

bool in_band(double v, double lo, double hi) { return v >= lo && v <= hi; }

bool strictly_decreasing(const std::vector<std::pair<double, double>>& levels) {
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!(levels[i].second < levels[i - 1].second)) return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// 1. order-1 mesh rates
// --------------------------------------------------------------------------
void criterion1() {
  const hs::conv::TestFunction& sine = hs::conv::find_test_function("sin");
  const std::vector<int> levels{8, 16, 32, 64, 128, 256};

  auto t0 = std::chrono::steady_clock::now();
  ConvergenceReport rt = hs::conv::run_convergence_study(
      sine.f, 0.0, kPi, 0.5, hs::conv::Family::T1, hs::EndKind::TypeII, levels, 0);
  const double time_t = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  ConvergenceReport rs = hs::conv::run_convergence_study(
      sine.f, 0.0, kPi, 0.5, hs::conv::Family::S1, hs::EndKind::TypeII, levels, 0);
  const double time_s = seconds_since(t0);

  const bool pass = in_band(rt.summary_order, 1.85, 2.15) &&
                    in_band(rs.summary_order, 1.85, 2.15) && time_t < 1.0 && time_s < 1.0;
  report(1, "order-1 mesh rate, sin on [0,pi], alpha=0.5", pass,
         "t1 median " + fmt("%.3f", rt.summary_order) + " in [1.85,2.15] (" +
             fmt("%.2f", time_t) + "s), s1 median " + fmt("%.3f", rs.summary_order) + " (" +
             fmt("%.2f", time_s) + "s)");
}

// --------------------------------------------------------------------------
// 2. order-2 mesh rates per derivative
// --------------------------------------------------------------------------
void criterion2() {
  const hs::conv::TestFunction& sine = hs::conv::find_test_function("sin");
  const std::vector<int> levels{8, 16, 32, 64, 128};
  const auto t0 = std::chrono::steady_clock::now();

  double med[3] = {0, 0, 0};
  bool pass = true;
  for (int d = 0; d <= 2; ++d) {
    ConvergenceReport r = hs::conv::run_convergence_study(
        sine.f, 0.0, kPi, 0.5, hs::conv::Family::T2, hs::EndKind::TypeI, levels, d);
    med[d] = r.summary_order;
  }
  pass = pass && in_band(med[0], 3.7, 4.3) && in_band(med[1], 2.7, 3.3) &&
         in_band(med[2], 1.7, 2.3);

  ConvergenceReport rs = hs::conv::run_convergence_study(
      sine.f, 0.0, kPi, 0.5, hs::conv::Family::S2, hs::EndKind::TypeI, levels, 0);
  ConvergenceReport r2 = hs::conv::run_convergence_study(
      sine.f, 0.0, kPi, 0.5, hs::conv::Family::T2, hs::EndKind::TypeII, levels, 0);
  const double elapsed = seconds_since(t0);
  pass = pass && in_band(rs.summary_order, 3.7, 4.3) && in_band(r2.summary_order, 3.7, 4.3) &&
         elapsed < 2.0;

  report(2, "order-2 mesh rates, sin on [0,pi], alpha=0.5", pass,
         "t2/I deriv medians " + fmt("%.3f", med[0]) + "/" + fmt("%.3f", med[1]) + "/" +
             fmt("%.3f", med[2]) + ", s2/I " + fmt("%.3f", rs.summary_order) + ", t2/II " +
             fmt("%.3f", r2.summary_order) + " (" + fmt("%.2f", elapsed) + "s)");
}

// --------------------------------------------------------------------------
// 3. alpha -> 0 polynomial limits on seeded data
// --------------------------------------------------------------------------
void criterion3() {
  const hs::Partition p = uniform_partition(0.0, 3.0, 16);
  std::mt19937_64 rng(kSeed);
  const std::vector<double> values = random_values(rng, p.nodes.size());
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const double pl = uni(rng), pr = uni(rng);
  const std::vector<double> alphas{0.4, 0.2, 0.1, 0.05};

  struct Study {
    const char* label;
    hs::conv::LimitPair pair;
    hs::EndCondition end;
  };
  const std::vector<Study> studies = {
      {"t1", hs::conv::LimitPair::T1VsLinear, hs::EndCondition::type2()},
      {"t2/I", hs::conv::LimitPair::T2VsCubic, hs::EndCondition::type1(pl, pr)},
      {"t2/II", hs::conv::LimitPair::T2VsCubic, hs::EndCondition::type2()},
      {"t2/III", hs::conv::LimitPair::T2VsCubic, hs::EndCondition::type3(pl, pr)},
      {"s2/I", hs::conv::LimitPair::S2VsCubic, hs::EndCondition::type1(pl, pr)},
      {"s2/II", hs::conv::LimitPair::S2VsCubic, hs::EndCondition::type2()},
      {"s2/III", hs::conv::LimitPair::S2VsCubic, hs::EndCondition::type3(pl, pr)},
  };

  bool pass = true;
  std::string detail = "medians";
  for (const Study& st : studies) {
    ConvergenceReport r =
        hs::conv::alpha_limit_study(p, values, st.pair, st.end, alphas, nullptr);
    const bool ok = strictly_decreasing(r.levels) && r.summary_order >= 1.9;
    pass = pass && ok;
    detail += std::string(" ") + st.label + "=" + fmt("%.2f", r.summary_order);
    if (!ok) detail += "(!)";
  }
  report(3, "alpha->0 limits, seeded N=16, alpha in {0.4..0.05}", pass, detail);
}

// --------------------------------------------------------------------------
// 4. tridiagonal fit vs dense oracle
// --------------------------------------------------------------------------
void criterion4() {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double worst = 0.0;
  std::string worst_case = "-";

  for (int n : {4, 12, 20}) {
    for (double alpha : {0.25, 1.0}) {
      const hs::Partition p = uniform_partition(0.0, 3.0, n);
      const std::vector<double> values = random_values(rng, p.nodes.size());
      const double pl = uni(rng), pr = uni(rng);
      const hs::TensionParam a(alpha, 3.0);
      const hs::EndCondition ends[3] = {hs::EndCondition::type1(pl, pr),
                                        hs::EndCondition::type2(),
                                        hs::EndCondition::type3(pl, pr)};
      const char* labels[3] = {"I", "II", "III"};
      for (int e = 0; e < 3; ++e) {
        const hs::k2::ExpSpline2 fast = hs::k2::fit_s2(p, values, a, ends[e]);
        const hs::k2::ExpSpline2 dense = hs::oracle::fit_s2_global(p, values, a, ends[e]);
        for (int i = 0; i < 500; ++i) {
          const double x = p.left() + (p.right() - p.left()) * i / 499.0;
          const double sd = hs::k2::eval2(dense, x, 0);
          const double dev = std::abs(hs::k2::eval2(fast, x, 0) - sd) / (1.0 + std::abs(sd));
          if (dev > worst) {
            worst = dev;
            worst_case = "N=" + std::to_string(n) + " alpha=" + fmt("%.2f", alpha) +
                         " type " + labels[e];
          }
        }
      }
    }
  }
  report(4, "tridiagonal vs dense oracle, seeded data on [0,3]", worst <= 1e-8,
         "max rel deviation " + fmt("%.3g", worst) + " (tol 1e-08) at " + worst_case);
}

// --------------------------------------------------------------------------
// 5. cosh bridge between the families
// --------------------------------------------------------------------------
void criterion5() {
  const hs::Partition p = uniform_partition(0.0, 3.0, 12);
  std::mt19937_64 rng(kSeed);
  const std::vector<double> values = random_values(rng, p.nodes.size());
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const double da = uni(rng), db = uni(rng);
  const double alpha = 1.0;
  const hs::TensionParam a(alpha, 3.0);

  std::vector<double> tvalues(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    tvalues[j] = values[j] / std::cosh(alpha * p.nodes[j]);
  }

  auto bridge_dev = [&](const hs::k2::TanhSpline2& t, const hs::k2::ExpSpline2& s) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const double x = p.left() + (p.right() - p.left()) * i / 499.0;
      const double sv = hs::k2::eval2(s, x, 0);
      const double tv = std::cosh(alpha * x) * hs::k2::eval2(t, x, 0);
      worst = std::max(worst, std::abs(tv - sv) / (1.0 + std::abs(sv)));
    }
    return worst;
  };

  // Type I: prescribe end slopes for the cosh-scaled family and transport
  // them: t' = sech(ax) (s' - a tanh(ax) s).
  auto transport = [&](double x, double slope, double value) {
    return (slope - alpha * std::tanh(alpha * x) * value) / std::cosh(alpha * x);
  };
  const hs::k2::ExpSpline2 s1 =
      hs::k2::fit_s2(p, values, a, hs::EndCondition::type1(da, db));
  const hs::k2::TanhSpline2 t1 = hs::k2::fit_t2(
      p, tvalues, a,
      hs::EndCondition::type1(transport(p.left(), da, values.front()),
                              transport(p.right(), db, values.back())));
  const double dev1 = bridge_dev(t1, s1);

  // Type II in the tanh family: fit it first, then transport the resulting
  // end data through s'' = a^2 cosh t + 2 a sinh t' + cosh t'' with t'' = 0.
  const hs::k2::TanhSpline2 t2 = hs::k2::fit_t2(p, tvalues, a, hs::EndCondition::type2());
  auto s_second = [&](double x) {
    return alpha * alpha * std::cosh(alpha * x) * hs::k2::eval2(t2, x, 0) +
           2.0 * alpha * std::sinh(alpha * x) * hs::k2::eval2(t2, x, 1);
  };
  const hs::k2::ExpSpline2 s2 = hs::k2::fit_s2(
      p, values, a, hs::EndCondition::type3(s_second(p.left()), s_second(p.right())));
  const double dev2 = bridge_dev(t2, s2);

  const bool pass = dev1 <= 1e-10 && dev2 <= 1e-10;
  report(5, "cosh bridge cosh(ax) t(x) = s(x), N=12, alpha=1", pass,
         "type I dev " + fmt("%.3g", dev1) + ", type II dev " + fmt("%.3g", dev2) +
             " (tol 1e-10)");
}

// --------------------------------------------------------------------------
// 6. exactness on the families' own function spaces
// --------------------------------------------------------------------------
void criterion6() {
  const double alpha = 0.9;
  const hs::Partition p = uniform_partition(0.0, 3.0, 6);
  const hs::TensionParam a(alpha, 3.0);
  bool pass = true;
  std::string detail;

  // constants through the order-1 tanh family
  {
    const double c = 2.5;
    const std::vector<double> values(p.nodes.size(), c);
    const hs::k1::Spline1 t = hs::k1::fit_t1(p, values, a);
    double worst = 0.0;
    for (int i = 0; i <= 300; ++i) {
      const double x = 3.0 * i / 300.0;
      worst = std::max(worst, std::abs(hs::k1::eval1(t, x, 0) - c));
    }
    const double tol = 1e-12 * (1.0 + std::abs(c));
    pass = pass && worst <= tol;
    detail += "t1 const " + fmt("%.2g", worst);
  }

  // constants and linears through the order-2 tanh family, every end type
  {
    auto line = [](double x) { return 0.75 * x - 0.4; };
    std::vector<double> values;
    for (double x : p.nodes) values.push_back(line(x));
    const std::vector<double> constant(p.nodes.size(), -1.75);
    const double scale_l = 1.0 + 0.75 * 3.0 + 0.4;
    const hs::EndCondition ends_line[3] = {hs::EndCondition::type1(0.75, 0.75),
                                           hs::EndCondition::type2(),
                                           hs::EndCondition::type3(0.0, 0.0)};
    const hs::EndCondition ends_const[3] = {hs::EndCondition::type1(0.0, 0.0),
                                            hs::EndCondition::type2(),
                                            hs::EndCondition::type3(0.0, 0.0)};
    double worst = 0.0;
    for (int e = 0; e < 3; ++e) {
      const hs::k2::TanhSpline2 tl = hs::k2::fit_t2(p, values, a, ends_line[e]);
      const hs::k2::TanhSpline2 tc = hs::k2::fit_t2(p, constant, a, ends_const[e]);
      for (int i = 0; i <= 300; ++i) {
        const double x = 3.0 * i / 300.0;
        worst = std::max(worst, std::abs(hs::k2::eval2(tl, x, 0) - line(x)) / scale_l);
        worst = std::max(worst, std::abs(hs::k2::eval2(tc, x, 0) + 1.75) / 2.75);
      }
    }
    pass = pass && worst <= 1e-12;
    detail += ", t2 const/linear " + fmt("%.2g", worst) + " (tol 1e-12 scaled)";
  }

  // members of the order-2 hyperbolic space through fit_s2 with exact slopes
  {
    const hs::Partition q = uniform_partition(0.0, 3.0, 12);
    const hs::TensionParam a1(1.0, 3.0);
    struct Member {
      std::function<double(double)> f, df;
    };
    const Member members[2] = {
        {[](double x) { return std::cosh(x); }, [](double x) { return std::sinh(x); }},
        {[](double x) { return (1.0 + x) * std::cosh(x) + x * std::sinh(x); },
         [](double x) {
           return std::cosh(x) + (1.0 + x) * std::sinh(x) + std::sinh(x) +
                  x * std::cosh(x);
         }}};
    double worst = 0.0;
    for (const Member& m : members) {
      std::vector<double> values;
      for (double x : q.nodes) values.push_back(m.f(x));
      const hs::k2::ExpSpline2 s = hs::k2::fit_s2(
          q, values, a1, hs::EndCondition::type1(m.df(0.0), m.df(3.0)));
      for (int i = 0; i < 500; ++i) {
        const double x = 3.0 * i / 499.0;
        const double g = m.f(x);
        worst = std::max(worst, std::abs(hs::k2::eval2(s, x, 0) - g) / (1.0 + std::abs(g)));
      }
    }
    pass = pass && worst <= 1e-9;
    detail += ", own-space rel " + fmt("%.2g", worst) + " (tol 1e-09)";
  }

  report(6, "exactness suite", pass, detail);
}

// --------------------------------------------------------------------------
// 7. smoothness and the piecewise ODE
// --------------------------------------------------------------------------
void criterion7() {
  const double alpha = 1.0;
  const hs::Partition p = uniform_partition(0.0, 3.0, 12);
  const hs::TensionParam a(alpha, 3.0);
  std::mt19937_64 rng(kSeed);
  const std::vector<double> values = random_values(rng, p.nodes.size());
  const std::vector<double> slopes = random_values(rng, p.nodes.size());
  const hs::EndCondition ends[3] = {hs::EndCondition::type1(0.5, -0.5),
                                    hs::EndCondition::type2(),
                                    hs::EndCondition::type3(1.0, -1.0)};

  bool pass = true;
  double worst_c2 = 0.0, worst_ode = 0.0, worst_c1 = 0.0;

  auto node_scale = [&](auto&& eval) {
    double m = 0.0;
    for (double x : p.nodes) {
      m = std::max(m, std::abs(eval(x, 0)));
      m = std::max(m, std::abs(eval(x, 2)));
    }
    return 1.0 + m;
  };

  auto check_c2 = [&](auto&& spline) {
    auto eval = [&](double x, int d) { return hs::k2::eval2(spline, x, d); };
    const double scale = node_scale(eval);
    for (int j = 1; j < p.interval_count(); ++j) {
      const double x = p.nodes[static_cast<std::size_t>(j)];
      for (int d = 0; d <= 2; ++d) {
        const double gap = std::abs(hs::k2::eval_piece(spline, j - 1, x, d) -
                                    hs::k2::eval_piece(spline, j, x, d));
        worst_c2 = std::max(worst_c2, gap / scale);
      }
    }
  };

  // The FD residual is dominated by rounding in the fourth difference, which
  // scales with the size of the spline and its second derivative, so the
  // tolerance is relative to 1 + ||s||_nodes + ||s''||_nodes (the same scale
  // convention the solver tolerances use).
  auto check_ode = [&](const hs::k2::ExpSpline2& s) {
    const double e = 3e-3;
    auto eval = [&](double x, int d) { return hs::k2::eval2(s, x, d); };
    const double scale = node_scale(eval);
    for (int j = 0; j < p.interval_count(); ++j) {
      const std::size_t uj = static_cast<std::size_t>(j);
      const double mid = 0.5 * (p.nodes[uj] + p.nodes[uj + 1]);
      double v[5];
      for (int i = -2; i <= 2; ++i) {
        v[i + 2] = hs::k2::eval_piece(s, j, mid + i * e, 0);
      }
      const double d4 = (v[0] - 4 * v[1] + 6 * v[2] - 4 * v[3] + v[4]) / (e * e * e * e);
      const double d2 = (v[1] - 2 * v[2] + v[3]) / (e * e);
      const double res =
          d4 - 2 * alpha * alpha * d2 + alpha * alpha * alpha * alpha * v[2];
      worst_ode = std::max(worst_ode, std::abs(res) / scale);
    }
  };

  for (const hs::EndCondition& end : ends) {
    const hs::k2::TanhSpline2 t = hs::k2::fit_t2(p, values, a, end);
    const hs::k2::ExpSpline2 s = hs::k2::fit_s2(p, values, a, end);
    check_c2(t);
    check_c2(s);
    check_ode(s);
  }

  // Hermite: C1 by construction
  const hs::k2::ExpSpline2 h = hs::hermite::fit_hermite_s2(p, values, slopes, a);
  {
    auto eval = [&](double x, int d) { return hs::k2::eval2(h, x, d); };
    const double scale = node_scale(eval);
    for (int j = 1; j < p.interval_count(); ++j) {
      const double x = p.nodes[static_cast<std::size_t>(j)];
      for (int d = 0; d <= 1; ++d) {
        const double gap = std::abs(hs::k2::eval_piece(h, j - 1, x, d) -
                                    hs::k2::eval_piece(h, j, x, d));
        worst_c1 = std::max(worst_c1, gap / scale);
      }
    }
    check_ode(h);
  }

  pass = worst_c2 <= 1e-9 && worst_c1 <= 1e-9 && worst_ode <= 1e-4;
  report(7, "smoothness suite (C2, Hermite C1, piecewise ODE residual)", pass,
         "C2 " + fmt("%.2g", worst_c2) + " (tol 1e-09 scaled), C1 " + fmt("%.2g", worst_c1) +
             ", ODE " + fmt("%.2g", worst_ode) + " (tol 1e-04 scaled)");
}

// --------------------------------------------------------------------------
// 8. Hermite tension fit approaches the cubic Hermite interpolant
// --------------------------------------------------------------------------
void criterion8() {
  const hs::Partition p = uniform_partition(0.0, 3.0, 8);
  std::mt19937_64 rng(kSeed);
  const std::vector<double> values = random_values(rng, p.nodes.size());
  const std::vector<double> slopes = random_values(rng, p.nodes.size());
  const std::vector<double> alphas{0.8, 0.4, 0.2, 0.1};

  ConvergenceReport r = hs::conv::alpha_limit_study(
      p, values, hs::conv::LimitPair::HermiteVsCubicHermite, hs::EndCondition::type2(),
      alphas, &slopes);
  const bool pass = r.summary_order >= 1.9;
  report(8, "Hermite alpha->0 limit vs cubic Hermite", pass,
         "median alpha-order " + fmt("%.3f", r.summary_order) + " (need >= 1.9)");
}

// --------------------------------------------------------------------------
// 9. shape-preservation search
// --------------------------------------------------------------------------
void criterion9() {
  const std::vector<double> x{0, 1, 2, 3, 4};
  const std::vector<double> y{0, 0, 0.1, 10, 10};
  const hs::Partition p = hs::make_partition(x);
  const std::vector<double> slopes = hs::cubic::monotone_slopes(p, y);

  bool pass = false;
  std::string detail;
  try {
    const hs::hermite::AlphaSearchResult found = hs::hermite::shape_alpha_search(
        p, y, slopes, hs::hermite::ShapeProperty::MonotoneUp, 1.0, 2048, 60);
    const hs::k2::ExpSpline2 refit =
        hs::hermite::fit_hermite_s2(p, y, slopes, hs::TensionParam(found.alpha, 4.0));
    const hs::hermite::ShapeReport check =
        hs::hermite::shape_check(refit, hs::hermite::ShapeProperty::MonotoneUp, 2048);
    pass = found.halvings <= 60 && check.holds;
    detail = "alpha* " + fmt("%.6g", found.alpha) + " after " +
             std::to_string(found.halvings) + " halvings, recheck " +
             (check.holds ? "holds" : "fails");
  } catch (const hs::Error& e) {
    detail = std::string("search failed: ") + e.what();
  }
  report(9, "shape search on [0,0,0.1,10,10], monotone_up", pass, detail);
}

// --------------------------------------------------------------------------
// 10. stability kernels vs extended-precision oracles
// --------------------------------------------------------------------------
void criterion10() {
  double worst_ratio = 0.0, worst_diff = 0.0;

  // sinh-ratio grid: |a| <= |b|, |b| up to 350 (naive sinh overflows past ~710
  // in double but the intermediate e^b already loses the quotient's scale)
  const double denominators[] = {1e-8, 1e-4, 0.1, 1.0, 5.0, 30.0, 100.0, 200.0, 350.0};
  const double fractions[] = {-1.0, -0.75, -0.5, -0.25, -1e-3, 0.0, 1e-3, 0.25, 0.5, 0.9, 1.0};
  for (double b : denominators) {
    for (double f : fractions) {
      const double a = f * b;
      const long double ref = std::sinh(static_cast<long double>(a)) /
                              std::sinh(static_cast<long double>(b));
      const double got = hs::stable_sinh_ratio(a, b);
      const double err = std::abs(got - static_cast<double>(ref)) /
                         std::max(std::abs(static_cast<double>(ref)), 1e-30);
      if (a == 0.0) {
        worst_ratio = std::max(worst_ratio, std::abs(got));
      } else {
        worst_ratio = std::max(worst_ratio, err);
      }
    }
  }

  // tanh-difference grid: naive tanh(A)-tanh(B) cancels to zero once both
  // arguments pass ~20; the oracle uses sinh(A-B)/(cosh A cosh B) in long
  // double, which stays exact through |A|,|B| = 350.
  const double args[] = {0.0,  1e-8, 1e-3, 0.1,  1.0,   3.0,   10.0, 30.0,
                         100., 200., 350., -0.5, -30.0, -350.0};
  for (double A : args) {
    for (double B : args) {
      const long double la = A, lb = B;
      const long double ref =
          std::sinh(la - lb) / (std::cosh(la) * std::cosh(lb));
      const double got = hs::tanh_diff(A, B);
      if (A == B) {
        worst_diff = std::max(worst_diff, std::abs(got));
        continue;
      }
      const double err = std::abs(got - static_cast<double>(ref)) /
                         std::max(std::abs(static_cast<double>(ref)), 1e-30);
      worst_diff = std::max(worst_diff, err);
    }
  }

  const bool pass = worst_ratio <= 1e-13 && worst_diff <= 1e-13;
  report(10, "stability kernels vs long-double oracles", pass,
         "sinh-ratio max rel err " + fmt("%.2g", worst_ratio) + ", tanh-diff " +
             fmt("%.2g", worst_diff) + " (tol 1e-13)");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (g_failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  }
  return g_failures;
}
