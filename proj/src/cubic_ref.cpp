#include "hypspline/cubic_ref.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hypspline::cubic {

namespace {

void check_values_length(const Partition& partition, const std::vector<double>& values,
                         const char* what) {
  if (static_cast<int>(values.size()) != partition.node_count()) {
    raise(ErrorCode::LengthMismatch,
          std::string(what) + " needs one entry per node (expected " +
              std::to_string(partition.node_count()) + ", got " +
              std::to_string(values.size()) + ")");
  }
  for (double v : values) {
    if (!std::isfinite(v)) raise(ErrorCode::NonFinite, std::string(what) + " entry is not finite");
  }
}

}  // namespace

double CubicSpline::eval(double x, int deriv) const {
  if (deriv < 0 || deriv > 2) {
    raise(ErrorCode::BadRequest, "cubic evaluation supports derivatives 0..2");
  }
  int j = partition.find_interval(x);
  double u = x - partition.nodes[j];
  const auto& c = pieces[j];
  switch (deriv) {
    case 0: return c[0] + u * (c[1] + u * (c[2] + u * c[3]));
    case 1: return c[1] + u * (2.0 * c[2] + 3.0 * c[3] * u);
    default: return 2.0 * c[2] + 6.0 * c[3] * u;
  }
}

CubicSpline fit_linear(const Partition& partition, const std::vector<double>& values) {
  check_values_length(partition, values, "linear fit values");
  CubicSpline out;
  out.partition = partition;
  out.smoothness = Smoothness::C1;
  out.pieces.reserve(partition.interval_count());
  for (int j = 0; j < partition.interval_count(); ++j) {
    double slope = (values[j + 1] - values[j]) / partition.widths[j];
    out.pieces.push_back({values[j], slope, 0.0, 0.0});
  }
  return out;
}

CubicSpline fit_cubic(const Partition& partition, const std::vector<double>& values,
                      const EndCondition& end) {
  check_values_length(partition, values, "cubic fit values");
  const int intervals = partition.interval_count();
  const int n = partition.node_count();
  const auto& h = partition.widths;

  std::vector<double> dd(intervals);
  for (int j = 0; j < intervals; ++j) {
    dd[j] = (values[j + 1] - values[j]) / h[j];
  }

  // Unknowns are the node second derivatives M_0..M_N.
  TridiagonalSystem sys;
  sys.sub.assign(n - 1, 0.0);
  sys.diag.assign(n, 0.0);
  sys.sup.assign(n - 1, 0.0);
  sys.rhs.assign(n, 0.0);
  for (int j = 1; j + 1 < n; ++j) {
    sys.sub[j - 1] = h[j - 1] / 6.0;
    sys.diag[j] = (h[j - 1] + h[j]) / 3.0;
    sys.sup[j] = h[j] / 6.0;
    sys.rhs[j] = dd[j] - dd[j - 1];
  }
  switch (end.kind) {
    case EndKind::TypeI:
      sys.diag[0] = h[0] / 3.0;
      sys.sup[0] = h[0] / 6.0;
      sys.rhs[0] = dd[0] - end.left;
      sys.sub[n - 2] = h[intervals - 1] / 6.0;
      sys.diag[n - 1] = h[intervals - 1] / 3.0;
      sys.rhs[n - 1] = end.right - dd[intervals - 1];
      break;
    case EndKind::TypeII:
    case EndKind::TypeIII:
      sys.diag[0] = 1.0;
      sys.sup[0] = 0.0;
      sys.diag[n - 1] = 1.0;
      sys.sub[n - 2] = 0.0;
      if (end.kind == EndKind::TypeIII) {
        sys.rhs[0] = end.left;
        sys.rhs[n - 1] = end.right;
      }
      break;
  }
  sys.compute_margin();
  std::vector<double> M = thomas_solve(sys);

  CubicSpline out;
  out.partition = partition;
  out.smoothness = Smoothness::C2;
  out.pieces.reserve(intervals);
  for (int j = 0; j < intervals; ++j) {
    double ml = M[j], mr = M[j + 1];
    out.pieces.push_back({values[j],
                          dd[j] - h[j] * (2.0 * ml + mr) / 6.0,
                          ml / 2.0,
                          (mr - ml) / (6.0 * h[j])});
  }
  return out;
}

CubicSpline fit_cubic_hermite(const Partition& partition, const std::vector<double>& values,
                              const std::vector<double>& slopes) {
  check_values_length(partition, values, "Hermite fit values");
  check_values_length(partition, slopes, "Hermite fit slopes");
  CubicSpline out;
  out.partition = partition;
  out.smoothness = Smoothness::C1;
  out.pieces.reserve(partition.interval_count());
  for (int j = 0; j < partition.interval_count(); ++j) {
    double hh = partition.widths[j];
    double dl = slopes[j], dr = slopes[j + 1];
    double dd = (values[j + 1] - values[j]) / hh;
    out.pieces.push_back({values[j], dl,
                          (3.0 * dd - 2.0 * dl - dr) / hh,
                          (dl + dr - 2.0 * dd) / (hh * hh)});
  }
  return out;
}

std::vector<double> monotone_slopes(const Partition& partition,
                                    const std::vector<double>& values) {
  check_values_length(partition, values, "monotone slope values");
  const int intervals = partition.interval_count();
  const auto& h = partition.widths;

  std::vector<double> secant(intervals);
  for (int j = 0; j < intervals; ++j) {
    secant[j] = (values[j + 1] - values[j]) / h[j];
  }

  std::vector<double> m(partition.node_count());
  m.front() = secant.front();
  m.back() = secant.back();
  for (int j = 1; j < intervals; ++j) {
    double sl = secant[j - 1], sr = secant[j];
    if (sl * sr <= 0.0) {
      m[j] = 0.0;  // local extremum or flat neighbor
    } else {
      // Fritsch-Butland weighted harmonic mean of the adjacent secants.
      double wl = 2.0 * h[j] + h[j - 1];
      double wr = h[j] + 2.0 * h[j - 1];
      m[j] = 3.0 * (h[j - 1] + h[j]) / (wl / sl + wr / sr);
    }
  }

  // Flat segments force both bracketing slopes to zero.
  for (int j = 0; j < intervals; ++j) {
    if (secant[j] == 0.0) {
      m[j] = 0.0;
      m[j + 1] = 0.0;
    }
  }

  // Radius-3 rescaling keeps each interval's normalized slope pair inside
  // the monotonicity disk.
  for (int j = 0; j < intervals; ++j) {
    if (secant[j] == 0.0) continue;
    double rl = m[j] / secant[j];
    double rr = m[j + 1] / secant[j];
    double norm_sq = rl * rl + rr * rr;
    if (norm_sq > 9.0) {
      double f = 3.0 / std::sqrt(norm_sq);
      m[j] *= f;
      m[j + 1] *= f;
    }
  }
  return m;
}

}  // namespace hypspline::cubic
