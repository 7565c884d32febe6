#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "auctionlab/adversary.hpp"
#include "auctionlab/error.hpp"
#include "auctionlab/harness.hpp"
#include "auctionlab/marginals.hpp"
#include "auctionlab/position_randomized.hpp"
#include "auctionlab/report_io.hpp"

namespace py = pybind11;
using namespace auctionlab;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(to_string(r)));
}

// Accepts int, Fraction, str ("1/5", "0.2") or float (read through repr).
Rational from_python(const py::handle& value) {
  const std::string text = py::str(value);
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw py::value_error("not a rational: " + text);
  }
}

std::vector<Rational> from_python_list(const py::sequence& values) {
  std::vector<Rational> out;
  for (const py::handle v : values) out.push_back(from_python(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and Monte Carlo tools for budget-constrained multi-object auctions";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<AuctionError>(m, "AuctionError", PyExc_ValueError);

  m.def("cdf_F", [](int n, int k, double b) { return cdf_F(MarginalSpec(n, k), b); },
        py::arg("n"), py::arg("k"), py::arg("b"));
  m.def("pdf_f", [](int n, int k, double b) { return pdf_f(MarginalSpec(n, k), b); },
        py::arg("n"), py::arg("k"), py::arg("b"));
  m.def("density_s", &density_s, py::arg("v"));
  m.def("density_h", &density_h, py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("r_closed", &r_closed, py::arg("x"), py::arg("y"));
  m.def("density_g", [](const std::vector<double>& b) { return density_g(b); }, py::arg("b"));
  m.def("ks_threshold", &ks_threshold, py::arg("samples"));

  m.def("wins_vs_marginal",
        [](int n, int k, const py::sequence& bids) {
          return to_fraction(wins_vs_marginal(MarginalSpec(n, k), from_python_list(bids)));
        },
        py::arg("n"), py::arg("k"), py::arg("bids"));

  m.def("sharp_p", [](int n, int k, int p) { return to_fraction(sharp_p(n, k, p)); },
        py::arg("n"), py::arg("k"), py::arg("p"));

  m.def("c_sequence",
        [](int n, int k) {
          const CSequence c = c_sequence(n, k);
          py::list values;
          for (const Rational& v : c.c) values.append(to_fraction(v));
          return py::make_tuple(c.beta, values);
        },
        py::arg("n"), py::arg("k"), "Returns (beta, [c_1, ..., c_n]).");

  m.def("best_response",
        [](int n, int k) {
          const BestResponse br = best_response(n, k);
          py::list witness;
          for (const Bid& b : br.witness) witness.append(py::make_tuple(to_fraction(b.base), b.eps));
          py::dict out;
          out["value"] = to_fraction(br.value);
          out["witness"] = witness;
          out["c_index"] = br.witness_index;
          return out;
        },
        py::arg("n"), py::arg("k"),
        "Exact optimum against the permuted c-sequence; witness bids are (base, eps) pairs.");

  m.def("_estimate_json",
        [](const std::string& scenario_json) {
          const Scenario s = scenario_from_json(nlohmann::json::parse(scenario_json));
          Report r;
          {
            py::gil_scoped_release release;
            r = estimate(s);
          }
          return report_to_json(r).dump();
        },
        py::arg("scenario_json"));
}
