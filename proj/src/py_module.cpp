// Python bindings: the fitting entry points, spline evaluation, the
// shape-preservation tools, and the two stability kernels. Library errors
// surface as the HypsplineError exception; the message keeps the error-name
// prefix so callers can branch on it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hypspline/core.hpp"
#include "hypspline/cubic_ref.hpp"
#include "hypspline/hermite_k2.hpp"
#include "hypspline/oracle_global.hpp"
#include "hypspline/spline_k1.hpp"
#include "hypspline/spline_k2.hpp"

namespace py = pybind11;
namespace hs = hypspline;

namespace {

hs::Partition partition_of(const std::vector<double>& x) { return hs::make_partition(x); }

hs::TensionParam tension_of(const hs::Partition& p, double alpha) {
  return hs::TensionParam(alpha, std::max(std::abs(p.left()), std::abs(p.right())));
}

hs::EndCondition end_of(const std::string& type, double left, double right) {
  if (type == "I") return hs::EndCondition::type1(left, right);
  if (type == "II") return hs::EndCondition::type2();
  if (type == "III") return hs::EndCondition::type3(left, right);
  hs::raise(hs::ErrorCode::BadRequest, "end type must be I, II, or III");
}

hs::hermite::ShapeProperty property_of(const std::string& name) {
  if (name == "positive") return hs::hermite::ShapeProperty::Positive;
  if (name == "monotone_up") return hs::hermite::ShapeProperty::MonotoneUp;
  if (name == "monotone_down") return hs::hermite::ShapeProperty::MonotoneDown;
  if (name == "convex") return hs::hermite::ShapeProperty::Convex;
  hs::raise(hs::ErrorCode::BadRequest,
            "property must be positive, monotone_up, monotone_down, or convex");
}

py::dict report_dict(const hs::hermite::ShapeReport& r) {
  py::dict d;
  d["property"] = hs::hermite::shape_property_name(r.property);
  d["holds"] = r.holds;
  d["witness"] = r.witness;
  d["resolution"] = r.resolution;
  d["violation"] = r.violation;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hypspline, m) {
  m.doc() =
      "Tension-spline interpolation: hyperbolic and tanh families of orders 1 "
      "and 2, Hermite and cubic references, and shape-preservation tools";

  py::register_exception<hs::Error>(m, "HypsplineError");

  py::class_<hs::k1::Spline1>(m, "Spline1", "order-1 tension interpolant")
      .def_readonly("alpha", &hs::k1::Spline1::alpha)
      .def_property_readonly(
          "nodes", [](const hs::k1::Spline1& s) { return s.partition.nodes; })
      .def_readonly("values", &hs::k1::Spline1::values)
      .def(
          "eval",
          [](const hs::k1::Spline1& s, double x, int deriv) {
            return hs::k1::eval1(s, x, deriv);
          },
          py::arg("x"), py::arg("deriv") = 0)
      .def(
          "__call__",
          [](const hs::k1::Spline1& s, double x) { return hs::k1::eval1(s, x, 0); },
          py::arg("x"));

  py::class_<hs::k2::TanhSpline2>(m, "TanhSpline2",
                                  "order-2 interpolant in tanh form")
      .def_readonly("alpha", &hs::k2::TanhSpline2::alpha)
      .def_property_readonly(
          "nodes", [](const hs::k2::TanhSpline2& s) { return s.partition.nodes; })
      .def_readonly("node_second_derivs", &hs::k2::TanhSpline2::node_second_derivs)
      .def(
          "eval",
          [](const hs::k2::TanhSpline2& s, double x, int deriv) {
            return hs::k2::eval2(s, x, deriv);
          },
          py::arg("x"), py::arg("deriv") = 0)
      .def(
          "__call__",
          [](const hs::k2::TanhSpline2& s, double x) { return hs::k2::eval2(s, x, 0); },
          py::arg("x"));

  py::class_<hs::k2::ExpSpline2>(m, "ExpSpline2",
                                 "order-2 interpolant in exponential form")
      .def_readonly("alpha", &hs::k2::ExpSpline2::alpha)
      .def_property_readonly(
          "nodes", [](const hs::k2::ExpSpline2& s) { return s.partition.nodes; })
      .def(
          "eval",
          [](const hs::k2::ExpSpline2& s, double x, int deriv) {
            return hs::k2::eval2(s, x, deriv);
          },
          py::arg("x"), py::arg("deriv") = 0)
      .def(
          "__call__",
          [](const hs::k2::ExpSpline2& s, double x) { return hs::k2::eval2(s, x, 0); },
          py::arg("x"));

  py::class_<hs::cubic::CubicSpline>(m, "CubicSpline", "polynomial reference spline")
      .def_property_readonly(
          "nodes", [](const hs::cubic::CubicSpline& s) { return s.partition.nodes; })
      .def(
          "eval",
          [](const hs::cubic::CubicSpline& s, double x, int deriv) {
            return s.eval(x, deriv);
          },
          py::arg("x"), py::arg("deriv") = 0)
      .def(
          "__call__",
          [](const hs::cubic::CubicSpline& s, double x) { return s.eval(x, 0); },
          py::arg("x"));

  m.def(
      "fit_s1",
      [](const std::vector<double>& x, const std::vector<double>& y, double alpha) {
        const hs::Partition p = partition_of(x);
        return hs::k1::fit_s1(p, y, tension_of(p, alpha));
      },
      py::arg("x"), py::arg("y"), py::arg("alpha"),
      "order-1 fit in the hyperbolic family");

  m.def(
      "fit_t1",
      [](const std::vector<double>& x, const std::vector<double>& y, double alpha) {
        const hs::Partition p = partition_of(x);
        return hs::k1::fit_t1(p, y, tension_of(p, alpha));
      },
      py::arg("x"), py::arg("y"), py::arg("alpha"),
      "order-1 fit in the tanh family");

  m.def(
      "fit_t2",
      [](const std::vector<double>& x, const std::vector<double>& y, double alpha,
         const std::string& end, double end_left, double end_right) {
        const hs::Partition p = partition_of(x);
        return hs::k2::fit_t2(p, y, tension_of(p, alpha), end_of(end, end_left, end_right));
      },
      py::arg("x"), py::arg("y"), py::arg("alpha"), py::arg("end") = "II",
      py::arg("end_left") = 0.0, py::arg("end_right") = 0.0,
      "order-2 fit in tanh form");

  m.def(
      "fit_s2",
      [](const std::vector<double>& x, const std::vector<double>& y, double alpha,
         const std::string& end, double end_left, double end_right) {
        const hs::Partition p = partition_of(x);
        return hs::k2::fit_s2(p, y, tension_of(p, alpha), end_of(end, end_left, end_right));
      },
      py::arg("x"), py::arg("y"), py::arg("alpha"), py::arg("end") = "II",
      py::arg("end_left") = 0.0, py::arg("end_right") = 0.0,
      "order-2 fit in exponential form (via the cosh bridge)");

  m.def(
      "fit_s2_global",
      [](const std::vector<double>& x, const std::vector<double>& y, double alpha,
         const std::string& end, double end_left, double end_right) {
        const hs::Partition p = partition_of(x);
        return hs::oracle::fit_s2_global(p, y, tension_of(p, alpha),
                                         end_of(end, end_left, end_right));
      },
      py::arg("x"), py::arg("y"), py::arg("alpha"), py::arg("end") = "II",
      py::arg("end_left") = 0.0, py::arg("end_right") = 0.0,
      "order-2 fit through the dense reference solver");

  m.def(
      "fit_hermite",
      [](const std::vector<double>& x, const std::vector<double>& y,
         const std::vector<double>& slopes, double alpha) {
        const hs::Partition p = partition_of(x);
        return hs::hermite::fit_hermite_s2(p, y, slopes, tension_of(p, alpha));
      },
      py::arg("x"), py::arg("y"), py::arg("slopes"), py::arg("alpha"),
      "order-2 Hermite fit matching values and first derivatives");

  m.def(
      "fit_cubic",
      [](const std::vector<double>& x, const std::vector<double>& y,
         const std::string& end, double end_left, double end_right) {
        return hs::cubic::fit_cubic(partition_of(x), y, end_of(end, end_left, end_right));
      },
      py::arg("x"), py::arg("y"), py::arg("end") = "II", py::arg("end_left") = 0.0,
      py::arg("end_right") = 0.0, "classical cubic interpolating spline");

  m.def(
      "fit_linear",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        return hs::cubic::fit_linear(partition_of(x), y);
      },
      py::arg("x"), py::arg("y"), "piecewise-linear interpolant");

  m.def(
      "fit_cubic_hermite",
      [](const std::vector<double>& x, const std::vector<double>& y,
         const std::vector<double>& slopes) {
        return hs::cubic::fit_cubic_hermite(partition_of(x), y, slopes);
      },
      py::arg("x"), py::arg("y"), py::arg("slopes"),
      "piecewise-cubic Hermite interpolant");

  m.def(
      "monotone_slopes",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        return hs::cubic::monotone_slopes(partition_of(x), y);
      },
      py::arg("x"), py::arg("y"),
      "shape-preserving node slopes (Fritsch-Carlson style limiter)");

  m.def(
      "shape_check",
      [](const hs::k2::ExpSpline2& s, const std::string& property, int resolution) {
        return report_dict(hs::hermite::shape_check(s, property_of(property), resolution));
      },
      py::arg("spline"), py::arg("property"), py::arg("resolution") = 2048,
      "sampled certificate that the spline keeps the claimed shape");

  m.def(
      "shape_alpha_search",
      [](const std::vector<double>& x, const std::vector<double>& y,
         const std::vector<double>& slopes, const std::string& property, double alpha0,
         int resolution, int max_halvings) {
        const hs::Partition p = partition_of(x);
        const hs::hermite::AlphaSearchResult r = hs::hermite::shape_alpha_search(
            p, y, slopes, property_of(property), alpha0, resolution, max_halvings);
        py::dict d;
        d["alpha"] = r.alpha;
        d["halvings"] = r.halvings;
        d["report"] = report_dict(r.report);
        return d;
      },
      py::arg("x"), py::arg("y"), py::arg("slopes"), py::arg("property"),
      py::arg("alpha0") = 1.0, py::arg("resolution") = 2048,
      py::arg("max_halvings") = 60,
      "halve the tension until the Hermite fit keeps the claimed shape");

  m.def("stable_sinh_ratio", &hs::stable_sinh_ratio, py::arg("a"), py::arg("b"),
        "sinh(a)/sinh(b) without overflow or cancellation");
  m.def("tanh_diff", &hs::tanh_diff, py::arg("a"), py::arg("b"),
        "tanh(a) - tanh(b) without cancellation");
}
