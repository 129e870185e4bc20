#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cusp/cli.hpp"
#include "cusp/json_io.hpp"

namespace py = pybind11;
using cusp::json_io::Json;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    cusp::fail(cusp::ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

cusp::PuiseuxCurve curve_from(const std::string& text) { return cusp::json_io::parse_curve(parse(text)); }

std::string semigroup(long n, long m) {
  const cusp::PuiseuxPair pair(n, m);
  const cusp::CoPair cp = cusp::copair(pair);
  return Json{{"n", n}, {"m", m}, {"conductor", cusp::CuspSemigroup(pair).conductor()}, {"copair", {cp.b, cp.d}}}.dump();
}

std::string semimodule(long n, long m, const std::vector<long>& basis) {
  std::vector<cusp::Int> b(basis.begin(), basis.end());
  return cusp::json_io::semimodule(cusp::GammaSemimodule(cusp::CuspSemigroup(cusp::PuiseuxPair(n, m)), b)).dump();
}

std::string standard_basis(const std::string& curve, bool delorme) {
  return cusp::json_io::basis(cusp::compute_extended_standard_basis(curve_from(curve)), delorme).dump();
}

std::string oracle(const std::string& curve) {
  return cusp::json_io::semimodule(cusp::semimodule_oracle(curve_from(curve))).dump();
}

std::string dicritical_check(const std::string& form, long n, long m) {
  const cusp::PuiseuxPair pair(n, m);
  const cusp::OneForm w = cusp::json_io::parse_form(parse(form));
  return cusp::json_io::dicritical(w, pair, cusp::is_totally_dicritical(w, pair)).dump();
}

std::string verify(const std::string& curve, int i, const std::string& a) {
  const auto basis = cusp::compute_extended_standard_basis(curve_from(curve));
  return cusp::json_io::semiroot_report(cusp::verify_main_theorem(basis, i, cusp::parse_rational(a))).dump();
}

py::tuple run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"cusp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cusp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Analytic invariants of plane cusps";
  m.attr("__version__") = CUSPINV_VERSION;
  py::register_exception<cusp::Error>(m, "CuspError", PyExc_ValueError);
  m.def("semigroup", &semigroup, py::arg("n"), py::arg("m"));
  m.def("semimodule", &semimodule, py::arg("n"), py::arg("m"), py::arg("basis"));
  m.def("standard_basis", &standard_basis, py::arg("curve"), py::arg("delorme") = true);
  m.def("semimodule_oracle", &oracle, py::arg("curve"));
  m.def("dicritical_check", &dicritical_check, py::arg("form"), py::arg("n"), py::arg("m"));
  m.def("verify", &verify, py::arg("curve"), py::arg("i"), py::arg("a") = "1");
  m.def("run", &run, py::arg("args"));
}
