#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>

#include "sta_zbw/checks.hpp"
#include "sta_zbw/config.hpp"
#include "sta_zbw/dirac.hpp"
#include "sta_zbw/frenet.hpp"
#include "sta_zbw/io.hpp"
#include "sta_zbw/oracle.hpp"
#include "sta_zbw/text.hpp"

namespace py = pybind11;
using namespace sta;

namespace {

Multivector from_list(const std::vector<double>& c) {
  if (c.size() != 16) throw py::value_error("expected 16 coefficients");
  Multivector m;
  for (unsigned b = 0; b < 16; ++b) m[b] = c[b];
  return m;
}

EvenElement to_even(const Multivector& m) { return EvenElement(m); }

py::dict table(const std::vector<SampleRow>& rows) {
  std::vector<std::vector<double>> cols(17);
  for (auto& c : cols) c.reserve(rows.size());
  for (const SampleRow& r : rows) {
    std::size_t k = 0;
    cols[k++].push_back(r.tau);
    for (double x : r.x) cols[k++].push_back(x);
    for (double v : r.v) cols[k++].push_back(v);
    for (double x : {r.H, r.pv, r.OmegaS, r.K1, r.K2, r.K3, r.res_nl, r.res_dh}) cols[k++].push_back(x);
  }
  static const char* names[17] = {"tau", "x0", "x1", "x2", "x3", "v0", "v1", "v2", "v3",
                                  "H",   "pv", "OmegaS", "K1", "K2", "K3", "res_nl", "res_dh"};
  py::dict d;
  for (std::size_t k = 0; k < 17; ++k) d[names[k]] = cols[k];
  return d;
}

py::list checks_to_list(const std::vector<CheckResult>& rs) {
  py::list out;
  for (const CheckResult& r : rs) {
    py::dict d;
    d["suite"] = r.suite;
    d["name"] = r.name;
    d["measured"] = r.measured;
    d["lo"] = r.lo;
    d["tol"] = r.tol;
    d["passed"] = r.pass;
    d["gated"] = r.gated;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_sta_zbw, m) {
  m.doc() = "Cl(1,3) multivectors and the spinning-electron simulator";

  // Translators are tried newest first: base class before subclasses.
  py::register_exception<Error>(m, "StaError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NumericalAbort>(m, "NumericalAbort", PyExc_ArithmeticError);

  py::class_<Multivector>(m, "Multivector")
      .def(py::init<>())
      .def(py::init(&from_list), py::arg("coeffs"))
      .def_static("scalar", &Multivector::scalar)
      .def_static("gamma", &Multivector::gamma)
      .def_static("vector", py::overload_cast<double, double, double, double>(&Multivector::vector))
      .def_static("pseudoscalar", &Multivector::pseudoscalar, py::arg("coef") = 1.0)
      .def_static("parse", [](const std::string& s) { return parse_multivector(s); })
      .def("coeffs", [](const Multivector& a) {
        const auto& c = a.coeffs();
        return std::vector<double>(c.begin(), c.end());
      })
      .def("__getitem__", [](const Multivector& a, unsigned b) {
        if (b >= 16) throw py::index_error();
        return a[b];
      })
      .def("reverse", [](const Multivector& a) { return reverse(a); })
      .def("grade", [](const Multivector& a, int r) { return grade_project(a, r); })
      .def("norm", &Multivector::coeff_norm)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Multivector& a) { return "Multivector(" + to_text(a) + ")"; })
      .def("__str__", [](const Multivector& a) { return to_text(a); });

  m.def("scalar_product", &scalar_product);
  m.def("exp", [](const Multivector& b) { return exp_even(to_even(b)).mv(); },
        "Exponential of an even multivector");
  m.def("log_rotor", [](const Multivector& r) { return log_rotor(to_even(r)); });
  m.def("sandwich", [](const Multivector& r, const Multivector& a) { return sandwich(r, a); });
  m.def("velocity", [](const Multivector& psi) { return velocity(to_even(psi)); });
  m.def("spin_bivector", [](const Multivector& psi) { return spin_bivector(to_even(psi)); });
  m.def("mv_to_matrix", [](const Multivector& a) {
    const Mat4c mat = mv_to_matrix(a);
    std::vector<std::vector<std::complex<double>>> rows(4, std::vector<std::complex<double>>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) rows[i][j] = mat(i, j);
    return rows;
  });

  m.def("config_text", [](const std::string& text) { return config_text(parse_config(text)); },
        "Canonical form of a config; raises ConfigError");

  m.def(
      "simulate",
      [](const std::string& text) {
        const RunConfig c = parse_config(text);
        return table(analyse(integrate(c.sim)));
      },
      py::arg("config_text"), "Integrate a config and return the trajectory.csv columns as lists");

  m.def(
      "write_trajectory",
      [](const std::string& text, const std::string& path) {
        std::ofstream out(path, std::ios::binary);
        write_csv(out, analyse(integrate(parse_config(text).sim)));
        if (!out) throw Error("cannot write " + path);
      },
      py::arg("config_text"), py::arg("path"));

  m.def(
      "oracle",
      [](const std::string& text, bool euler) {
        const OracleResult r = run_oracle(parse_config(text).sim, euler);
        py::dict d;
        d["steps_per_period"] = r.steps_per_period;
        d["max_error"] = r.max_error;
        d["max_error_half"] = r.max_error_half;
        d["ratio"] = r.ratio;
        d["bound"] = r.bound;
        d["passed"] = r.pass();
        return d;
      },
      py::arg("config_text"), py::arg("euler") = false);

  m.def(
      "check",
      [](const std::string& suite, std::uint64_t seed, double perturb, double tol_scale) {
        CheckOptions o;
        o.seed = seed;
        o.perturb = perturb;
        o.tol_scale = tol_scale;
        return checks_to_list(run_suite(suite, o));
      },
      py::arg("suite"), py::arg("seed") = 42, py::arg("perturb") = 0.0, py::arg("tol_scale") = 1.0);

  m.def("plane_wave_residual", [](const Multivector& psi0, double mass, const Multivector& x, double sign) {
    return dh_residual_planewave(to_even(psi0), mass, x, sign).coeff_norm();
  }, py::arg("psi0"), py::arg("mass"), py::arg("x"), py::arg("sign") = -1.0);
}
