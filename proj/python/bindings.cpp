#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "nhosc/errors.h"
#include "nhosc/json_io.h"
#include "nhosc/moments.h"
#include "nhosc/numeric.h"

namespace py = pybind11;
using namespace nhosc;

namespace {

ModelParams quartic(const std::string& lambda, const std::string& b, const std::string& omega) {
  return ModelParams::quartic(Rational::parse(lambda), Rational::parse(b), Rational::parse(omega));
}

std::vector<std::pair<int, std::string>> py_spectrum(const std::string& lambda, const std::string& b,
                                                     const std::string& omega, int nmax) {
  std::vector<std::pair<int, std::string>> out;
  for (const auto& level : spectrum(quartic(lambda, b, omega), nmax)) out.emplace_back(level.n, level.energy.str());
  return out;
}

std::string py_build_cells(const std::string& lambda, const std::string& b, const std::string& omega, int nmax) {
  const ModelParams params = quartic(lambda, b, omega);
  std::vector<JordanCell> cells;
  for (int n = 0; n <= nmax; ++n) cells.push_back(build_cell(params, n));
  return dump(cells_file_to_json(cells));
}

std::string py_verify_cells(const std::string& cells_json) {
  VerificationReport report;
  const auto cells = cells_file_from_json(parse_json(cells_json));
  for (const auto& cell : cells) report.append(verify_cell(cell));
  const auto gm = gram_mismatches(gram(cells), cells);
  report.add("gram.pattern", gm.empty());
  int n_max = 0;
  for (const auto& c : cells) n_max = std::max(n_max, c.n);
  const auto jm = jordan_mismatches(jordan_matrix(cells, n_max), cells);
  report.add("jordan.pattern", jm.empty());
  return dump(report_to_json(report));
}

std::string py_moment(int N, int M, const std::string& lambda, const std::string& b) {
  return moment_coefficient(N, M, Rational::parse(lambda), Rational::parse(b)).str();
}

std::string py_apply_H(const std::string& ansatz_json) {
  return dump(ansatz_to_json(apply_H(ansatz_from_json(parse_json(ansatz_json)))));
}

std::string py_pairing(const std::string& f_json, const std::string& g_json) {
  return dump(pi_rational_to_json(pairing(ansatz_from_json(parse_json(f_json)), ansatz_from_json(parse_json(g_json)))));
}

std::complex<double> py_quad_moment(int N, int M, const std::string& lambda, const std::string& b, double tol) {
  const ModelParams params = quartic(lambda, b, "0");
  return quad_moment(N, M, params,
                     QuadratureSpec::for_moment(N, M, params.lambda().to_double(), params.b().to_double(), tol));
}

}  // namespace

PYBIND11_MODULE(_nhosc, m) {
  m.doc() = "Exact Jordan-cell engine for the non-Hermitian 2D anharmonic oscillator";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidParams>(m, "InvalidParams", base.ptr());
  py::register_exception<UnsolvableConstraints>(m, "UnsolvableConstraints", base.ptr());

  m.def("spectrum", &py_spectrum, py::arg("lambda_"), py::arg("b"), py::arg("omega"), py::arg("nmax"),
        "List of (n, energy) with energies as num/den strings");
  m.def("build_cells", &py_build_cells, py::arg("lambda_"), py::arg("b"), py::arg("omega"), py::arg("nmax"),
        "Cells file for n = 0..nmax as a JSON string");
  m.def("verify_cells", &py_verify_cells, py::arg("cells_json"), "Exact verification report as a JSON string");
  m.def("moment", &py_moment, py::arg("N"), py::arg("M"), py::arg("lambda_"), py::arg("b"),
        "Moment coefficient in units of pi");
  m.def("apply_H", &py_apply_H, py::arg("ansatz_json"));
  m.def("pairing", &py_pairing, py::arg("f_json"), py::arg("g_json"));
  m.def("quad_moment", &py_quad_moment, py::arg("N"), py::arg("M"), py::arg("lambda_"), py::arg("b"),
        py::arg("tol") = 1e-8);
}
