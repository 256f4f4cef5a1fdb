#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "posclass/bridge.hpp"
#include "posclass/error.hpp"
#include "posclass/lstree.hpp"
#include "posclass/oracle.hpp"
#include "posclass/verify.hpp"

namespace py = pybind11;
using namespace posclass;

namespace {

py::int_ to_py(const BigInt& c) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(c.str().c_str(), nullptr, 10));
}

py::tuple to_py(const Partition& lambda) { return py::cast(lambda.parts()); }

py::dict to_py(const std::map<Partition, BigInt>& terms) {
  py::dict out;
  for (const auto& [lambda, c] : terms) out[to_py(lambda)] = to_py(c);
  return out;
}

AffinePermutation window_of(std::vector<Int> window) {
  const int n = static_cast<int>(window.size());
  return AffinePermutation::from_window(n, std::move(window));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schur expansions of positroid classes";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&] { return py::object(py::exception<Error>(m, "PosclassError")); });
  // The exception carries the error code name as .code.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& cls = error.get_stored();
      py::object exc = cls(py::str(e.what()));
      exc.attr("code") = error_name(e.code());
      PyErr_SetObject(cls.ptr(), exc.ptr());
    }
  });

  m.def(
      "expand",
      [](std::vector<Int> window, int k, int threads) {
        const auto f = window_of(std::move(window));
        SchurVector g(0, 0);
        {
          py::gil_scoped_release release;
          g = expand(f, k, f.n(), ExpandOptions{threads}).result;
        }
        return to_py(g.terms());
      },
      py::arg("window"), py::arg("k"), py::arg("threads") = 1,
      "G_f in the Schur basis, as {partition: coefficient}.");

  m.def(
      "expand_stats",
      [](std::vector<Int> window, int k) {
        const auto f = window_of(std::move(window));
        const LsStats s = expand(f, k, f.n()).stats;
        py::dict out;
        out["node_count"] = s.node_count;
        out["distinct_nodes"] = s.distinct_nodes;
        out["max_depth"] = s.max_depth;
        out["memo_hits"] = s.memo_hits;
        return out;
      },
      py::arg("window"), py::arg("k"));

  m.def(
      "trace",
      [](std::vector<Int> window, int k) {
        const auto f = window_of(std::move(window));
        return trace(f, k, f.n());
      },
      py::arg("window"), py::arg("k"));

  m.def(
      "affine_stanley",
      [](std::vector<Int> window, int k) {
        return to_py(affine_stanley_truncated(window_of(std::move(window)), k).terms());
      },
      py::arg("window"), py::arg("k"),
      "Brute-force truncation of the affine Stanley symmetric function.");

  m.def(
      "toric_window",
      [](const std::string& shape) {
        return f_from_cylindric_shape(CylindricSkewShape::parse(shape)).window_vector();
      },
      py::arg("shape"));

  m.def(
      "toric",
      [](const std::string& shape) {
        return to_py(toric_gw_expand(CylindricSkewShape::parse(shape)).terms());
      },
      py::arg("shape"), "Toric Schur polynomial of \"lower=.. upper=.. offset=..\".");

  m.def(
      "cylindric_schur",
      [](const std::string& shape) {
        return to_py(cylindric_schur(CylindricSkewShape::parse(shape)).terms);
      },
      py::arg("shape"));

  m.def(
      "interval",
      [](const std::vector<int>& u, const std::vector<int>& v, int k) {
        return to_py(schubert_times_schur(KBruhatInterval(u, v, k)));
      },
      py::arg("u"), py::arg("v"), py::arg("k"),
      "Coefficients of S_w[lambda] in S_u * s_lambda(x_1..x_k) restricted to v.");

  m.def(
      "three_row",
      [](const std::string& diagram, int dim_v) {
        return to_py(three_row_decompose(parse_diagram(diagram), dim_v));
      },
      py::arg("diagram"), py::arg("dim_v") = 3);

  m.def(
      "schur_module",
      [](const std::string& diagram, int k) {
        return to_py(schur_module_character(parse_diagram(diagram), k));
      },
      py::arg("diagram"), py::arg("k"));

  m.def(
      "verify",
      [](int max_n, int samples) {
        VerifyOptions options;
        options.max_n = max_n;
        options.three_row_samples = samples;
        std::ostringstream log;
        const VerifyReport report = run_verify(options, log);
        return py::make_tuple(report.ok(), report.failures);
      },
      py::arg("max_n") = 4, py::arg("samples") = 10,
      "Runs the oracle cross-checks; returns (ok, failures).");
}
