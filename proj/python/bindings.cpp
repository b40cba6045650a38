#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclohodge/errors.hpp"
#include "cyclohodge/jobs.hpp"

namespace py = pybind11;
using namespace cyclohodge;

namespace {

// Results cross the boundary as JSON text; the Python layer decodes them.
std::string call(const std::string& command, const std::string& input, std::int64_t bfs_bound, bool certify) {
  JobOptions opt;
  opt.bfs_bound = bfs_bound;
  opt.certify_infinite = certify;
  try {
    return run_command(command, Json::parse(input), opt).json.dump();
  } catch (const Error& e) {
    return error_json(std::string(to_string(e.code())), e.what()).dump();
  } catch (const Json::exception& e) {
    return error_json("SchemaViolation", e.what()).dump();
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact core of cyclohodge";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def("run_command", &call, py::arg("command"), py::arg("input"), py::arg("bfs_bound") = 20000,
        py::arg("certify_infinite") = true,
        "Run a command on a JSON input string; returns a JSON string (an error object on failure).");

  m.def("frac", [](const std::string& x) { return frac(Rational::parse(x)).value().str(); }, py::arg("x"));

  m.def(
      "cover_genus",
      [](std::int64_t n, const std::vector<std::int64_t>& exponents) {
        BranchData b;
        b.order = n;
        for (std::size_t i = 0; i < exponents.size(); ++i)
          b.branch.push_back({"p" + std::to_string(i), std::nullopt, exponents[i]});
        return cover_genus(b);
      },
      py::arg("n"), py::arg("exponents"));

  m.def(
      "hj_resolve", [](std::int64_t n, std::int64_t q) { return hj_resolve({n, q}).coefficients; }, py::arg("n"),
      py::arg("q"));

  m.def("semistable_base_order", &semistable_base_order, py::arg("multiplicities"));

  m.def("hurwitz_base_genus", &hurwitz_base_genus, py::arg("n"), py::arg("g_base"), py::arg("ramification"));

  static py::exception<Error> exc(m, "CoreError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });
}
