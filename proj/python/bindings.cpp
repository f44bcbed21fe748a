#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "ifdist/density.hpp"
#include "ifdist/dist_spec.hpp"
#include "ifdist/entropy.hpp"
#include "ifdist/errors.hpp"
#include "ifdist/moments.hpp"
#include "ifdist/registry.hpp"
#include "ifdist/verify.hpp"

namespace py = pybind11;
using namespace ifdist;

namespace {

double p_value(const IFParams& params) {
  return params.p.is_finite() ? params.p.value() : std::numeric_limits<double>::infinity();
}

IFParams to_params(const py::object& dist) {
  if (py::isinstance<py::str>(dist)) return parse_dist(dist.cast<std::string>());
  return dist.cast<IFParams>();
}

py::object moment_result(const MomentResult& m) {
  if (m.is_finite()) {
    return py::make_tuple("finite", m.value(), std::string(to_string(m.method())));
  }
  return py::make_tuple(m.is_divergent() ? "divergent" : "no-closed-form", py::none(),
                        py::none());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Interpolating-family size distributions";

  py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);
  py::register_exception<Unsupported>(m, "Unsupported", PyExc_NotImplementedError);

  py::class_<IFParams>(m, "IFParams")
      .def(py::init([](double p, double b, double c, double q, double x0) {
             return validate(p, b, c, q, x0);
           }),
           py::arg("p"), py::arg("b"), py::arg("c"), py::arg("q"), py::arg("x0"))
      .def_property_readonly("p", &p_value)
      .def_readonly("b", &IFParams::b)
      .def_readonly("c", &IFParams::c)
      .def_readonly("q", &IFParams::q)
      .def_readonly("x0", &IFParams::x0)
      .def_property_readonly("subfamily",
                             [](const IFParams& p) { return to_string(classify(p)); })
      .def("__eq__", [](const IFParams& a, const IFParams& b) { return a == b; })
      .def("__repr__", &render)
      .def("__str__", &render);

  m.def("parse", &parse_dist, py::arg("spec"),
        "Parse an if(...) or named-case spec string.");

  m.def("pdf", [](const py::object& d, double x) { return pdf(to_params(d), x); },
        py::arg("dist"), py::arg("x"));
  m.def("logpdf", [](const py::object& d, double x) { return log_pdf(to_params(d), x); },
        py::arg("dist"), py::arg("x"));
  m.def("cdf", [](const py::object& d, double x) { return cdf(to_params(d), x); },
        py::arg("dist"), py::arg("x"));
  m.def("sf", [](const py::object& d, double x) { return survival(to_params(d), x); },
        py::arg("dist"), py::arg("x"));
  m.def("quantile", [](const py::object& d, double u) { return quantile(to_params(d), u); },
        py::arg("dist"), py::arg("u"));
  m.def("sample",
        [](const py::object& d, std::size_t n, std::uint64_t seed) {
          return sample(to_params(d), seed, n);
        },
        py::arg("dist"), py::arg("n"), py::arg("seed") = 0);

  m.def("moment",
        [](const py::object& d, unsigned r, bool fallback) {
          MomentOptions opts;
          opts.numeric_fallback = fallback;
          return moment_result(moment(to_params(d), r, opts));
        },
        py::arg("dist"), py::arg("r"), py::arg("fallback") = false,
        "Returns (kind, value, method); kind is finite, divergent or no-closed-form.");
  m.def("entropy", [](const py::object& d) { return entropy(to_params(d)).value; },
        py::arg("dist"));

  m.def("cases", &registry::list_cases);
  m.def("resolve",
        [](const std::string& name, const std::map<std::string, double>& free) {
          return registry::resolve(name, registry::FreeParams(free.begin(), free.end()));
        },
        py::arg("name"), py::arg("params"));

  m.def("verify",
        [](const std::string& suite_name) {
          const auto suite = verify::parse_suite(suite_name);
          if (!suite) throw py::value_error("unknown suite: " + suite_name);
          const auto report = verify::run_suite(*suite);
          py::list checks;
          for (const auto& c : report.checks) {
            py::dict d;
            d["id"] = c.id;
            d["description"] = c.description;
            d["expected"] = c.expected;
            d["actual"] = c.actual;
            d["tolerance"] = c.tolerance;
            d["pass"] = c.pass;
            checks.append(d);
          }
          py::dict summary;
          summary["total"] = report.summary.total;
          summary["passed"] = report.summary.passed;
          summary["failed"] = report.summary.failed;
          py::dict out;
          out["checks"] = checks;
          out["summary"] = summary;
          return out;
        },
        py::arg("suite") = "all");
}
