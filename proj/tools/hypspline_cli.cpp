// Command-line front end: fit splines from data files and sample them to
// CSV/JSON, run mesh-convergence and tension-sweep studies, and run the
// shape-preservation search. All output is machine-readable, uses 17
// significant digits, and is byte-identical across runs for identical inputs
// (the only randomness is the seeded generator behind `limit`).
//
// Exit codes: 0 ok; 2 validation failure; 3 numerical-regime failure
// (dominance loss, overflow, singular systems, degenerate errors); 4 search
// failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypspline/convergence.hpp"
#include "hypspline/cubic_ref.hpp"
#include "hypspline/hermite_k2.hpp"
#include "hypspline/oracle_global.hpp"
#include "hypspline/spline_k1.hpp"
#include "hypspline/spline_k2.hpp"

namespace hs = hypspline;
using nlohmann::json;

namespace {

constexpr unsigned long long kDefaultSeed = 12345;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int exit_code_for(hs::ErrorCode code) {
  switch (code) {
    case hs::ErrorCode::BadRequest:
    case hs::ErrorCode::NonMonotone:
    case hs::ErrorCode::NonFinite:
    case hs::ErrorCode::LengthMismatch:
    case hs::ErrorCode::OutOfDomain:
    case hs::ErrorCode::DivideByZero:
      return 2;
    case hs::ErrorCode::TensionTooLarge:
    case hs::ErrorCode::NotDominant:
    case hs::ErrorCode::Overflow:
    case hs::ErrorCode::SingularLocalSystem:
    case hs::ErrorCode::SingularSystem:
    case hs::ErrorCode::DenseTooLarge:
    case hs::ErrorCode::DegenerateErrors:
      return 3;
    case hs::ErrorCode::SearchFailed:
      return 4;
  }
  return 2;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) {
    hs::raise(hs::ErrorCode::BadRequest, "cannot open output file " + path);
  }
  out << content;
  if (!out.good()) {
    hs::raise(hs::ErrorCode::BadRequest, "failed writing output file " + path);
  }
}

// ---------------------------------------------------------------------------
// input loading
// ---------------------------------------------------------------------------

struct FitRequest {
  std::vector<double> x;
  std::vector<double> y;
  std::optional<std::vector<double>> slopes;
  std::optional<double> alpha;
  int order = 2;
  std::string family = "s";
  std::string end_type = "II";
  std::optional<double> end_left;
  std::optional<double> end_right;
  int samples = 200;
};

std::vector<double> parse_number_list(const json& node, const std::string& name) {
  if (!node.is_array()) {
    hs::raise(hs::ErrorCode::BadRequest, "field \"" + name + "\" must be a numeric array");
  }
  std::vector<double> out;
  out.reserve(node.size());
  for (const json& v : node) {
    if (!v.is_number()) {
      hs::raise(hs::ErrorCode::BadRequest, "field \"" + name + "\" must be a numeric array");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

FitRequest load_fit_json(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) {
    hs::raise(hs::ErrorCode::BadRequest, "cannot open input file " + path);
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    hs::raise(hs::ErrorCode::BadRequest, std::string("invalid JSON input: ") + e.what());
  }
  if (!doc.is_object()) {
    hs::raise(hs::ErrorCode::BadRequest, "input document must be a JSON object");
  }
  FitRequest req;
  if (!doc.contains("x") || !doc.contains("y")) {
    hs::raise(hs::ErrorCode::BadRequest, "input document needs \"x\" and \"y\" arrays");
  }
  req.x = parse_number_list(doc["x"], "x");
  req.y = parse_number_list(doc["y"], "y");
  if (doc.contains("slopes")) req.slopes = parse_number_list(doc["slopes"], "slopes");
  if (doc.contains("alpha")) {
    if (!doc["alpha"].is_number()) {
      hs::raise(hs::ErrorCode::BadRequest, "field \"alpha\" must be a number");
    }
    req.alpha = doc["alpha"].get<double>();
  }
  if (doc.contains("order")) {
    if (!doc["order"].is_number_integer()) {
      hs::raise(hs::ErrorCode::BadRequest, "field \"order\" must be 1 or 2");
    }
    req.order = doc["order"].get<int>();
  }
  if (doc.contains("family")) {
    if (!doc["family"].is_string()) {
      hs::raise(hs::ErrorCode::BadRequest, "field \"family\" must be \"s\" or \"t\"");
    }
    req.family = doc["family"].get<std::string>();
  }
  if (doc.contains("samples")) {
    if (!doc["samples"].is_number_integer()) {
      hs::raise(hs::ErrorCode::BadRequest, "field \"samples\" must be an integer");
    }
    req.samples = doc["samples"].get<int>();
  }
  if (doc.contains("end")) {
    const json& end = doc["end"];
    if (!end.is_object() || !end.contains("type") || !end["type"].is_string()) {
      hs::raise(hs::ErrorCode::BadRequest, "field \"end\" must be {type, left?, right?}");
    }
    req.end_type = end["type"].get<std::string>();
    if (end.contains("left")) {
      if (!end["left"].is_number()) {
        hs::raise(hs::ErrorCode::BadRequest, "field \"end.left\" must be a number");
      }
      req.end_left = end["left"].get<double>();
    }
    if (end.contains("right")) {
      if (!end["right"].is_number()) {
        hs::raise(hs::ErrorCode::BadRequest, "field \"end.right\" must be a number");
      }
      req.end_right = end["right"].get<double>();
    }
  }
  return req;
}

void load_xy_csv(const std::string& path, std::vector<double>& x, std::vector<double>& y) {
  std::ifstream in(path);
  if (!in.is_open()) {
    hs::raise(hs::ErrorCode::BadRequest, "cannot open input file " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    hs::raise(hs::ErrorCode::BadRequest, "empty CSV input " + path);
  }
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  if (line != "x,y") {
    hs::raise(hs::ErrorCode::BadRequest, "CSV input must start with the header \"x,y\"");
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      hs::raise(hs::ErrorCode::BadRequest,
                "CSV line " + std::to_string(lineno) + " needs two comma-separated columns");
    }
    try {
      std::size_t used = 0;
      const std::string xs = line.substr(0, comma);
      const std::string ys = line.substr(comma + 1);
      x.push_back(std::stod(xs, &used));
      if (used != xs.size()) throw std::invalid_argument(xs);
      y.push_back(std::stod(ys, &used));
      if (used != ys.size()) throw std::invalid_argument(ys);
    } catch (const std::exception&) {
      hs::raise(hs::ErrorCode::BadRequest,
                "CSV line " + std::to_string(lineno) + " is not numeric");
    }
  }
  if (x.size() < 2) {
    hs::raise(hs::ErrorCode::BadRequest, "CSV input needs at least two data rows");
  }
}

hs::EndCondition build_end(const std::string& type, std::optional<double> left,
                           std::optional<double> right) {
  if (type == "II") {
    if (left.has_value() || right.has_value()) {
      hs::raise(hs::ErrorCode::BadRequest, "end type II takes no payloads");
    }
    return hs::EndCondition::type2();
  }
  if (type == "I" || type == "III") {
    if (!left.has_value() || !right.has_value()) {
      hs::raise(hs::ErrorCode::BadRequest,
                "end type " + type + " needs both left and right payloads");
    }
    return type == "I" ? hs::EndCondition::type1(*left, *right)
                       : hs::EndCondition::type3(*left, *right);
  }
  hs::raise(hs::ErrorCode::BadRequest, "end type must be I, II, or III");
}

// ---------------------------------------------------------------------------
// shared output helpers
// ---------------------------------------------------------------------------

std::vector<double> sample_grid(const hs::Partition& p, int samples) {
  if (samples < 1) {
    hs::raise(hs::ErrorCode::BadRequest, "samples must be at least 1");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(samples) * p.widths.size() + 1);
  for (int j = 0; j < p.interval_count(); ++j) {
    const double xl = p.nodes[static_cast<std::size_t>(j)];
    const double h = p.widths[static_cast<std::size_t>(j)];
    for (int k = 0; k < samples; ++k) {
      grid.push_back(xl + h * (static_cast<double>(k) / samples));
    }
  }
  grid.push_back(p.right());
  return grid;
}

struct StudyReport {
  std::string level_key;  // "h" for mesh studies, "alpha" for sweeps
  hs::conv::ConvergenceReport report;
};

std::string report_json(const StudyReport& sr) {
  const hs::conv::ConvergenceReport& r = sr.report;
  std::ostringstream out;
  out << "{\n";
  out << "  \"derivative\": " << r.derivative_order << ",\n";
  out << "  \"target\": " << fmt(r.target) << ",\n";
  out << "  \"exact\": " << (r.exact ? "true" : "false") << ",\n";
  out << "  \"pass\": " << (r.pass ? "true" : "false") << ",\n";
  out << "  \"median_order\": " << fmt(r.summary_order) << ",\n";
  out << "  \"orders\": [";
  for (std::size_t i = 0; i < r.fitted_orders.size(); ++i) {
    out << (i ? ", " : "") << fmt(r.fitted_orders[i]);
  }
  out << "],\n";
  out << "  \"levels\": [\n";
  for (std::size_t i = 0; i < r.levels.size(); ++i) {
    out << "    {\"" << sr.level_key << "\": " << fmt(r.levels[i].first)
        << ", \"error\": " << fmt(r.levels[i].second) << "}" << (i + 1 < r.levels.size() ? "," : "")
        << "\n";
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

std::string report_csv(const StudyReport& sr) {
  std::ostringstream out;
  out << sr.level_key << ",error\n";
  for (const auto& [lvl, err] : sr.report.levels) {
    out << fmt(lvl) << "," << fmt(err) << "\n";
  }
  return out.str();
}

void write_study(const StudyReport& sr, const std::string& out_path) {
  write_file(out_path, report_json(sr));
  write_file(out_path + ".csv", report_csv(sr));
}

// ---------------------------------------------------------------------------
// fit
// ---------------------------------------------------------------------------

struct FittedSpline {
  std::function<double(double, int)> eval;
  bool has_second = false;
  std::string coeff_json;
};

std::string k1_coeff_json(const hs::k1::Spline1& s, const std::string& family) {
  std::ostringstream out;
  out << "{\n  \"order\": 1,\n  \"family\": \"" << family << "\",\n  \"alpha\": "
      << fmt(s.alpha) << ",\n  \"intervals\": [\n";
  const hs::Partition& p = s.partition;
  for (int j = 0; j < p.interval_count(); ++j) {
    const std::size_t uj = static_cast<std::size_t>(j);
    out << "    {\"left\": " << fmt(p.nodes[uj]) << ", \"right\": " << fmt(p.nodes[uj + 1])
        << ", \"kind\": \"" << (family == "s" ? "sinh-ratio" : "tanh-ratio")
        << "\", \"coefficients\": [" << fmt(s.values[uj]) << ", " << fmt(s.values[uj + 1])
        << "]}" << (j + 1 < p.interval_count() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

template <typename Spline>
std::string k2_coeff_json(const Spline& s, const std::string& family,
                          const std::function<std::string(int)>& kind_of) {
  std::ostringstream out;
  out << "{\n  \"order\": 2,\n  \"family\": \"" << family << "\",\n  \"alpha\": "
      << fmt(s.alpha) << ",\n  \"intervals\": [\n";
  const hs::Partition& p = s.partition;
  for (int j = 0; j < p.interval_count(); ++j) {
    const std::size_t uj = static_cast<std::size_t>(j);
    out << "    {\"left\": " << fmt(p.nodes[uj]) << ", \"right\": " << fmt(p.nodes[uj + 1])
        << ", \"kind\": \"" << kind_of(j) << "\", \"coefficients\": [";
    for (int c = 0; c < 4; ++c) out << (c ? ", " : "") << fmt(s.pieces[uj][static_cast<std::size_t>(c)]);
    out << "]}" << (j + 1 < p.interval_count() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

FittedSpline fit_from_request(const FitRequest& req, const hs::Partition& p) {
  if (!req.alpha.has_value()) {
    hs::raise(hs::ErrorCode::BadRequest, "a tension value is required (alpha)");
  }
  if (req.order != 1 && req.order != 2) {
    hs::raise(hs::ErrorCode::BadRequest, "order must be 1 or 2");
  }
  if (req.family != "s" && req.family != "t") {
    hs::raise(hs::ErrorCode::BadRequest, "family must be \"s\" or \"t\"");
  }
  const hs::TensionParam alpha(*req.alpha,
                               std::max(std::abs(p.left()), std::abs(p.right())));

  FittedSpline out;
  if (req.slopes.has_value()) {
    if (req.order != 2 || req.family != "s") {
      hs::raise(hs::ErrorCode::BadRequest,
                "slopes select the Hermite fit, which needs order 2 and family \"s\"");
    }
    if (req.end_type != "II" || req.end_left.has_value() || req.end_right.has_value()) {
      std::cerr << "warning: end conditions are ignored for Hermite fits\n";
    }
    auto s = std::make_shared<hs::k2::ExpSpline2>(
        hs::hermite::fit_hermite_s2(p, req.y, *req.slopes, alpha));
    out.eval = [s](double x, int d) { return hs::k2::eval2(*s, x, d); };
    out.has_second = true;
    out.coeff_json = k2_coeff_json(*s, "s", [s](int j) {
      return s->kinds[static_cast<std::size_t>(j)] == hs::k2::PieceKind::Cubic
                 ? std::string("cubic")
                 : std::string("exponential");
    });
    return out;
  }

  if (req.order == 1) {
    if (req.end_type != "II" || req.end_left.has_value() || req.end_right.has_value()) {
      std::cerr << "warning: order-1 fits take no end conditions; payloads ignored\n";
    }
    auto s = std::make_shared<hs::k1::Spline1>(req.family == "s"
                                                   ? hs::k1::fit_s1(p, req.y, alpha)
                                                   : hs::k1::fit_t1(p, req.y, alpha));
    out.eval = [s](double x, int d) { return hs::k1::eval1(*s, x, d); };
    out.has_second = false;
    out.coeff_json = k1_coeff_json(*s, req.family);
    return out;
  }

  const hs::EndCondition end = build_end(req.end_type, req.end_left, req.end_right);
  if (req.family == "t") {
    auto s = std::make_shared<hs::k2::TanhSpline2>(hs::k2::fit_t2(p, req.y, alpha, end));
    out.eval = [s](double x, int d) { return hs::k2::eval2(*s, x, d); };
    out.has_second = true;
    out.coeff_json = k2_coeff_json(*s, "t", [](int) { return std::string("tanh"); });
    return out;
  }
  auto s = std::make_shared<hs::k2::ExpSpline2>(hs::k2::fit_s2(p, req.y, alpha, end));
  out.eval = [s](double x, int d) { return hs::k2::eval2(*s, x, d); };
  out.has_second = true;
  out.coeff_json = k2_coeff_json(*s, "s", [s](int j) {
    return s->kinds[static_cast<std::size_t>(j)] == hs::k2::PieceKind::Cubic
               ? std::string("cubic")
               : std::string("exponential");
  });
  return out;
}

std::string samples_csv(const FittedSpline& f, const std::vector<double>& grid) {
  std::ostringstream out;
  out << (f.has_second ? "x,v,d1,d2\n" : "x,v,d1\n");
  for (double x : grid) {
    out << fmt(x) << "," << fmt(f.eval(x, 0)) << "," << fmt(f.eval(x, 1));
    if (f.has_second) out << "," << fmt(f.eval(x, 2));
    out << "\n";
  }
  return out.str();
}

std::string samples_json(const FittedSpline& f, const std::vector<double>& grid) {
  std::ostringstream out;
  out << "{\n  \"samples\": [\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    out << "    {\"x\": " << fmt(x) << ", \"v\": " << fmt(f.eval(x, 0))
        << ", \"d1\": " << fmt(f.eval(x, 1));
    if (f.has_second) out << ", \"d2\": " << fmt(f.eval(x, 2));
    out << "}" << (i + 1 < grid.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// subcommand drivers
// ---------------------------------------------------------------------------

struct FitFlags {
  std::string input_json;
  std::string input_csv;
  std::string out;
  std::string coef_out;
  std::string format = "csv";
  double alpha = 0.0;
  bool alpha_given = false;
  int order = 0;
  std::string family;
  std::string end_type;
  double end_left = 0.0, end_right = 0.0;
  bool end_left_given = false, end_right_given = false;
  int samples = 0;
};

void run_fit(const FitFlags& flags) {
  if (flags.input_json.empty() == flags.input_csv.empty()) {
    hs::raise(hs::ErrorCode::BadRequest, "pass exactly one of --input or --input-csv");
  }
  FitRequest req;
  if (!flags.input_json.empty()) {
    req = load_fit_json(flags.input_json);
  } else {
    load_xy_csv(flags.input_csv, req.x, req.y);
  }
  // explicit flags override (or supply) the document's fields
  if (flags.alpha_given) req.alpha = flags.alpha;
  if (flags.order != 0) req.order = flags.order;
  if (!flags.family.empty()) req.family = flags.family;
  if (!flags.end_type.empty()) {
    req.end_type = flags.end_type;
    req.end_left.reset();
    req.end_right.reset();
  }
  if (flags.end_left_given) req.end_left = flags.end_left;
  if (flags.end_right_given) req.end_right = flags.end_right;
  if (flags.samples != 0) req.samples = flags.samples;

  hs::Partition p = hs::make_partition(req.x);
  if (req.y.size() != req.x.size()) {
    hs::raise(hs::ErrorCode::LengthMismatch, "x and y must have the same length");
  }
  FittedSpline fitted = fit_from_request(req, p);
  const std::vector<double> grid = sample_grid(p, req.samples);
  write_file(flags.out,
             flags.format == "json" ? samples_json(fitted, grid) : samples_csv(fitted, grid));
  const std::string coef_path =
      flags.coef_out.empty() ? flags.out + ".coeffs.json" : flags.coef_out;
  write_file(coef_path, fitted.coeff_json);
}

hs::conv::Family family_for(const std::string& family, int order) {
  if (family == "cubic") return hs::conv::Family::Cubic;
  if (family == "hermite") return hs::conv::Family::Hermite;
  if (order == 1) return family == "s" ? hs::conv::Family::S1 : hs::conv::Family::T1;
  return family == "s" ? hs::conv::Family::S2 : hs::conv::Family::T2;
}

hs::EndKind end_kind_for(const std::string& type) {
  if (type == "I") return hs::EndKind::TypeI;
  if (type == "II") return hs::EndKind::TypeII;
  if (type == "III") return hs::EndKind::TypeIII;
  hs::raise(hs::ErrorCode::BadRequest, "end type must be I, II, or III");
}

struct ConvergeFlags {
  std::string function;
  std::vector<double> interval;
  double alpha = 0.5;
  std::string family = "t";
  int order = 2;
  std::string end_type = "II";
  std::vector<int> levels;
  int deriv = 0;
  int samples = 512;
  std::string out;
};

void run_converge(const ConvergeFlags& flags) {
  const hs::conv::TestFunction& tf = hs::conv::find_test_function(flags.function);
  double a = tf.a, b = tf.b;
  if (!flags.interval.empty()) {
    a = flags.interval[0];
    b = flags.interval[1];
  }
  hs::conv::ConvergenceReport report = hs::conv::run_convergence_study(
      tf.f, a, b, flags.alpha, family_for(flags.family, flags.order),
      end_kind_for(flags.end_type), flags.levels, flags.deriv, flags.samples);
  write_study({"h", std::move(report)}, flags.out);
}

struct LimitFlags {
  std::string function;
  std::vector<double> interval{0.0, 3.0};
  int n = 16;
  std::string family = "t";
  int order = 2;
  std::string end_type = "II";
  double end_left = 0.0, end_right = 0.0;
  bool end_left_given = false, end_right_given = false;
  std::vector<double> alphas;
  int samples = 512;
  unsigned long long seed = kDefaultSeed;
  std::string out;
};

void run_limit(const LimitFlags& flags) {
  if (flags.n < 1) hs::raise(hs::ErrorCode::BadRequest, "--n must be at least 1");
  const double a = flags.interval[0], b = flags.interval[1];
  std::vector<double> nodes(static_cast<std::size_t>(flags.n) + 1);
  for (int j = 0; j <= flags.n; ++j) {
    nodes[static_cast<std::size_t>(j)] = a + (b - a) * (static_cast<double>(j) / flags.n);
  }
  hs::Partition p = hs::make_partition(std::move(nodes));

  const bool is_hermite = flags.family == "hermite";
  std::vector<double> values, slopes;
  std::optional<double> left, right;
  if (!flags.function.empty()) {
    const hs::conv::TestFunction& tf = hs::conv::find_test_function(flags.function);
    for (double x : p.nodes) values.push_back(tf.f(x, 0));
    if (is_hermite) {
      for (double x : p.nodes) slopes.push_back(tf.f(x, 1));
    }
    if (flags.end_type == "I") {
      left = tf.f(p.left(), 1);
      right = tf.f(p.right(), 1);
    } else if (flags.end_type == "III") {
      left = tf.f(p.left(), 2);
      right = tf.f(p.right(), 2);
    }
  } else {
    std::mt19937_64 rng(flags.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (std::size_t j = 0; j < p.nodes.size(); ++j) values.push_back(uni(rng));
    if (is_hermite) {
      for (std::size_t j = 0; j < p.nodes.size(); ++j) slopes.push_back(uni(rng));
    }
    if (flags.end_type != "II") {
      left = flags.end_left_given ? flags.end_left : 0.0;
      right = flags.end_right_given ? flags.end_right : 0.0;
    }
  }
  const hs::EndCondition end = build_end(flags.end_type, left, right);

  hs::conv::LimitPair pair = hs::conv::LimitPair::T2VsCubic;
  if (is_hermite) {
    pair = hs::conv::LimitPair::HermiteVsCubicHermite;
  } else if (flags.order == 1) {
    pair = flags.family == "s" ? hs::conv::LimitPair::S1VsLinear
                               : hs::conv::LimitPair::T1VsLinear;
  } else {
    pair = flags.family == "s" ? hs::conv::LimitPair::S2VsCubic
                               : hs::conv::LimitPair::T2VsCubic;
  }
  hs::conv::ConvergenceReport report = hs::conv::alpha_limit_study(
      p, values, pair, end, flags.alphas, is_hermite ? &slopes : nullptr, flags.samples);
  write_study({"alpha", std::move(report)}, flags.out);
}

struct ShapeFlags {
  std::string input_json;
  std::string input_csv;
  std::string property;
  double alpha0 = 1.0;
  int resolution = 2048;
  int max_halvings = 60;
  std::string out;
};

void run_shape(const ShapeFlags& flags) {
  if (flags.input_json.empty() == flags.input_csv.empty()) {
    hs::raise(hs::ErrorCode::BadRequest, "pass exactly one of --input or --input-csv");
  }
  FitRequest req;
  if (!flags.input_json.empty()) {
    req = load_fit_json(flags.input_json);
  } else {
    load_xy_csv(flags.input_csv, req.x, req.y);
  }
  hs::Partition p = hs::make_partition(req.x);

  hs::hermite::ShapeProperty property;
  if (flags.property == "positive") {
    property = hs::hermite::ShapeProperty::Positive;
  } else if (flags.property == "monotone_up") {
    property = hs::hermite::ShapeProperty::MonotoneUp;
  } else if (flags.property == "monotone_down") {
    property = hs::hermite::ShapeProperty::MonotoneDown;
  } else if (flags.property == "convex") {
    property = hs::hermite::ShapeProperty::Convex;
  } else {
    hs::raise(hs::ErrorCode::BadRequest,
              "property must be positive, monotone_up, monotone_down, or convex");
  }

  // supplied slopes win; otherwise the shape-preserving limiter picks them
  const std::vector<double> slopes =
      req.slopes.has_value() ? *req.slopes : hs::cubic::monotone_slopes(p, req.y);

  hs::hermite::AlphaSearchResult found = hs::hermite::shape_alpha_search(
      p, req.y, slopes, property, flags.alpha0, flags.resolution, flags.max_halvings);

  std::ostringstream out;
  out << "{\n";
  out << "  \"property\": \"" << hs::hermite::shape_property_name(property) << "\",\n";
  out << "  \"alpha0\": " << fmt(flags.alpha0) << ",\n";
  out << "  \"alpha\": " << fmt(found.alpha) << ",\n";
  out << "  \"halvings\": " << found.halvings << ",\n";
  out << "  \"resolution\": " << found.report.resolution << ",\n";
  out << "  \"holds\": " << (found.report.holds ? "true" : "false") << "\n";
  out << "}\n";
  write_file(flags.out, out.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tension-spline toolkit: fit hyperbolic/tanh tension splines, sample them, "
      "and run convergence, tension-sweep, and shape-preservation studies"};
  app.require_subcommand(1);

  FitFlags fit;
  CLI::App* cmd_fit = app.add_subcommand(
      "fit", "fit a spline to data and write a sample table plus coefficient dump");
  cmd_fit->add_option("--input", fit.input_json, "JSON request document");
  cmd_fit->add_option("--input-csv", fit.input_csv, "CSV data file with header x,y");
  cmd_fit->add_option("--out", fit.out, "output sample table path")->required();
  cmd_fit->add_option("--coef-out", fit.coef_out,
                      "coefficient dump path (default: <out>.coeffs.json)");
  cmd_fit->add_option("--format", fit.format, "sample table format (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  CLI::Option* fit_alpha = cmd_fit->add_option("--alpha", fit.alpha, "tension parameter");
  cmd_fit->add_option("--order", fit.order, "spline order (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  cmd_fit->add_option("--family", fit.family, "spline family (s or t)")
      ->check(CLI::IsMember({"s", "t"}));
  cmd_fit->add_option("--end", fit.end_type, "end condition type (I, II, III)")
      ->check(CLI::IsMember({"I", "II", "III"}));
  CLI::Option* fit_el = cmd_fit->add_option("--end-left", fit.end_left, "left end payload");
  CLI::Option* fit_er = cmd_fit->add_option("--end-right", fit.end_right, "right end payload");
  cmd_fit->add_option("--samples", fit.samples, "samples per interval (default 200)");
  unsigned long long unused_seed = kDefaultSeed;
  cmd_fit->add_option("--seed", unused_seed, "random seed (unused by fit; accepted for uniformity)");

  ConvergeFlags cv;
  CLI::App* cmd_converge = app.add_subcommand(
      "converge", "mesh-refinement study of a built-in test function");
  cmd_converge->add_option("--function", cv.function, "test function (sin, exp, runge)")
      ->required();
  cmd_converge->add_option("--interval", cv.interval,
                           "study interval a b (default: the function's own)")
      ->expected(2);
  cmd_converge->add_option("--alpha", cv.alpha, "tension parameter (default 0.5)");
  cmd_converge->add_option("--family", cv.family, "family (s, t, cubic, hermite)")
      ->check(CLI::IsMember({"s", "t", "cubic", "hermite"}));
  cmd_converge->add_option("--order", cv.order, "spline order (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  cmd_converge->add_option("--end", cv.end_type, "end condition type (default II)")
      ->check(CLI::IsMember({"I", "II", "III"}));
  cmd_converge->add_option("--levels", cv.levels, "interval counts, each double the last")
      ->required()
      ->expected(-1);
  cmd_converge->add_option("--deriv", cv.deriv, "derivative to measure (default 0)");
  cmd_converge->add_option("--samples", cv.samples, "error samples per interval (default 512)");
  cmd_converge->add_option("--out", cv.out, "report path (JSON; <out>.csv holds the levels)")
      ->required();
  cmd_converge->add_option("--seed", unused_seed, "random seed (unused by converge)");

  LimitFlags lm;
  CLI::App* cmd_limit = app.add_subcommand(
      "limit", "tension sweep measuring the approach to the polynomial limit");
  cmd_limit->add_option("--function", lm.function,
                        "test function for the data (default: seeded random values)");
  cmd_limit->add_option("--interval", lm.interval, "data interval a b (default 0 3)")
      ->expected(2);
  cmd_limit->add_option("--n", lm.n, "number of intervals (default 16)");
  cmd_limit->add_option("--family", lm.family, "family (s, t, hermite)")
      ->check(CLI::IsMember({"s", "t", "hermite"}));
  cmd_limit->add_option("--order", lm.order, "spline order (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  cmd_limit->add_option("--end", lm.end_type, "end condition type (default II)")
      ->check(CLI::IsMember({"I", "II", "III"}));
  CLI::Option* lm_el = cmd_limit->add_option("--end-left", lm.end_left,
                                             "left payload for seeded Type I/III data");
  CLI::Option* lm_er = cmd_limit->add_option("--end-right", lm.end_right,
                                             "right payload for seeded Type I/III data");
  cmd_limit->add_option("--alphas", lm.alphas, "tension sweep, each value half the last")
      ->required()
      ->expected(-1);
  cmd_limit->add_option("--samples", lm.samples, "error samples per interval (default 512)");
  cmd_limit->add_option("--seed", lm.seed, "seed for the random data (default 12345)");
  cmd_limit->add_option("--out", lm.out, "report path (JSON; <out>.csv holds the levels)")
      ->required();

  ShapeFlags sh;
  CLI::App* cmd_shape = app.add_subcommand(
      "shape", "halve tension until a Hermite fit provably keeps the claimed shape");
  cmd_shape->add_option("--input", sh.input_json, "JSON request document");
  cmd_shape->add_option("--input-csv", sh.input_csv, "CSV data file with header x,y");
  cmd_shape->add_option("--property", sh.property,
                        "positive, monotone_up, monotone_down, or convex")
      ->required();
  cmd_shape->add_option("--alpha0", sh.alpha0, "starting tension (default 1)");
  cmd_shape->add_option("--resolution", sh.resolution, "samples per interval (default 2048)");
  cmd_shape->add_option("--max-halvings", sh.max_halvings, "search budget (default 60)");
  cmd_shape->add_option("--out", sh.out, "report path (JSON)")->required();
  cmd_shape->add_option("--seed", unused_seed, "random seed (unused by shape)");

  try {
    app.parse(argc, argv);
    fit.alpha_given = fit_alpha->count() > 0;
    fit.end_left_given = fit_el->count() > 0;
    fit.end_right_given = fit_er->count() > 0;
    lm.end_left_given = lm_el->count() > 0;
    lm.end_right_given = lm_er->count() > 0;
    if (cmd_fit->parsed()) run_fit(fit);
    if (cmd_converge->parsed()) run_converge(cv);
    if (cmd_limit->parsed()) run_limit(lm);
    if (cmd_shape->parsed()) run_shape(sh);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const hs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
