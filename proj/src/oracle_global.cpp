#include "hypspline/oracle_global.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace hypspline::oracle {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Writes the four basis values (or derivative values) for one interval's
/// exponential basis evaluated at coordinate w (local u or global x).
void basis_row(double alpha, double w, int deriv, double* out) {
  double em = std::exp(-alpha * w);
  double ep = std::exp(alpha * w);
  switch (deriv) {
    case 0:
      out[0] = em;
      out[1] = w * em;
      out[2] = ep;
      out[3] = w * ep;
      break;
    case 1:
      out[0] = -alpha * em;
      out[1] = (1.0 - alpha * w) * em;
      out[2] = alpha * ep;
      out[3] = (1.0 + alpha * w) * ep;
      break;
    default:
      out[0] = alpha * alpha * em;
      out[1] = (alpha * alpha * w - 2.0 * alpha) * em;
      out[2] = alpha * alpha * ep;
      out[3] = (alpha * alpha * w + 2.0 * alpha) * ep;
      break;
  }
}

}  // namespace

DenseSystem build_s2_global_system(const Partition& partition,
                                   const std::vector<double>& values, double alpha,
                                   const EndCondition& end, bool global_basis) {
  if (static_cast<int>(values.size()) != partition.node_count()) {
    raise(ErrorCode::LengthMismatch, "dense fit needs one value per node");
  }
  const int intervals = partition.interval_count();
  if (intervals > kDenseSizeGuard) {
    raise(ErrorCode::DenseTooLarge,
          "dense reference accepts at most " + std::to_string(kDenseSizeGuard) +
              " intervals, got " + std::to_string(intervals));
  }
  const int n = 4 * intervals;
  DenseSystem sys;
  sys.matrix.assign(n, std::vector<double>(n, 0.0));
  sys.rhs.assign(n, 0.0);

  // Coordinate at which interval j's basis is evaluated for "its left node"
  // and "its right node".
  auto left_coord = [&](int j) { return global_basis ? partition.nodes[j] : 0.0; };
  auto right_coord = [&](int j) {
    return global_basis ? partition.nodes[j + 1] : partition.widths[j];
  };

  int row = 0;
  for (int j = 0; j < intervals; ++j) {
    basis_row(alpha, left_coord(j), 0, sys.matrix[row].data() + 4 * j);
    sys.rhs[row++] = values[j];
    basis_row(alpha, right_coord(j), 0, sys.matrix[row].data() + 4 * j);
    sys.rhs[row++] = values[j + 1];
  }
  sys.interpolation_rows = row;

  double lhs[4], rhs4[4];
  for (int i = 1; i < intervals; ++i) {
    for (int deriv = 1; deriv <= 2; ++deriv) {
      basis_row(alpha, right_coord(i - 1), deriv, lhs);
      basis_row(alpha, left_coord(i), deriv, rhs4);
      for (int k = 0; k < 4; ++k) {
        sys.matrix[row][4 * (i - 1) + k] = lhs[k];
        sys.matrix[row][4 * i + k] = -rhs4[k];
      }
      sys.rhs[row++] = 0.0;
    }
  }
  sys.continuity_rows = row - sys.interpolation_rows;

  int end_deriv = end.kind == EndKind::TypeI ? 1 : 2;
  basis_row(alpha, left_coord(0), end_deriv, sys.matrix[row].data());
  sys.rhs[row++] = end.kind == EndKind::TypeII ? 0.0 : end.left;
  basis_row(alpha, right_coord(intervals - 1), end_deriv,
            sys.matrix[row].data() + 4 * (intervals - 1));
  sys.rhs[row++] = end.kind == EndKind::TypeII ? 0.0 : end.right;
  sys.end_rows = 2;
  return sys;
}

std::vector<double> dense_solve(std::vector<std::vector<double>> matrix,
                                std::vector<double> rhs) {
  const int n = static_cast<int>(matrix.size());
  if (n == 0 || static_cast<int>(rhs.size()) != n) {
    raise(ErrorCode::LengthMismatch, "dense system must be square with matching rhs");
  }
  std::vector<double> scale(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n) {
      raise(ErrorCode::LengthMismatch, "dense system must be square with matching rhs");
    }
    for (double v : matrix[i]) {
      if (!std::isfinite(v)) raise(ErrorCode::NonFinite, "dense matrix entry is not finite");
      scale[i] = std::max(scale[i], std::abs(v));
    }
  }

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(matrix[r][col]) > std::abs(matrix[pivot][col])) pivot = r;
    }
    double p = matrix[pivot][col];
    double row_scale = std::max(scale[pivot], 1e-300);
    if (std::abs(p) < 1e-13 * row_scale) {
      raise(ErrorCode::SingularSystem,
            "pivot " + format_double(p) + " below 1e-13 of row scale " +
                format_double(row_scale) + " at column " + std::to_string(col));
    }
    if (pivot != col) {
      std::swap(matrix[pivot], matrix[col]);
      std::swap(rhs[pivot], rhs[col]);
      std::swap(scale[pivot], scale[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = matrix[r][col] / p;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) matrix[r][c] -= f * matrix[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double acc = rhs[i];
    for (int c = i + 1; c < n; ++c) acc -= matrix[i][c] * x[c];
    x[i] = acc / matrix[i][i];
  }
  return x;
}

k2::ExpSpline2 fit_s2_global(const Partition& partition, const std::vector<double>& values,
                             const TensionParam& alpha, const EndCondition& end,
                             bool global_basis) {
  check_tension(alpha.alpha, partition);
  DenseSystem sys = build_s2_global_system(partition, values, alpha.alpha, end, global_basis);
  std::vector<double> coef = dense_solve(std::move(sys.matrix), std::move(sys.rhs));

  k2::ExpSpline2 out;
  out.alpha = alpha.alpha;
  out.partition = partition;
  const int intervals = partition.interval_count();
  out.kinds.assign(intervals, k2::PieceKind::Exponential);
  out.pieces.reserve(intervals);
  for (int j = 0; j < intervals; ++j) {
    double a = coef[4 * j], b = coef[4 * j + 1], c = coef[4 * j + 2], d = coef[4 * j + 3];
    if (global_basis) {
      // (a + b x) e^(-ax) + (c + d x) e^(ax) rewritten in u = x - x_l.
      double xl = partition.nodes[j];
      double em = std::exp(-alpha.alpha * xl), ep = std::exp(alpha.alpha * xl);
      out.pieces.push_back({(a + b * xl) * em, b * em, (c + d * xl) * ep, d * ep});
    } else {
      out.pieces.push_back({a, b, c, d});
    }
  }
  return out;
}

}  // namespace hypspline::oracle
