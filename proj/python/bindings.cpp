#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finrel/binomial.hpp"
#include "finrel/errors.hpp"
#include "finrel/finite.hpp"
#include "finrel/infinite.hpp"
#include "finrel/oracle.hpp"
#include "finrel/tabulate.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using finrel::Count;
using finrel::FinitePlan;
using finrel::Probability;
using finrel::TestEvidence;

FinitePlan plan(Count n, Count f, Count m) { return {{n, f}, m}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reliability, confidence and assurance for pass/fail test campaigns";

  auto base = py::register_exception<finrel::Error>(m, "FinrelError", PyExc_ValueError);
  py::register_exception<finrel::DomainError>(m, "DomainError", base);
  py::register_exception<finrel::NoSolutionError>(m, "NoSolutionError", base);
  py::register_exception<finrel::BoundaryError>(m, "BoundaryError", base);
  py::register_exception<finrel::DegeneratePlanError>(m, "DegeneratePlanError", base);
  py::register_exception<finrel::UnsupportedSizeError>(m, "UnsupportedSizeError", base);

  py::class_<finrel::ReliabilityStep>(m, "ReliabilityStep")
      .def_readonly("d", &finrel::ReliabilityStep::d)
      .def_readonly("step_reliability", &finrel::ReliabilityStep::step_reliability)
      .def_readonly("overall_reliability", &finrel::ReliabilityStep::overall_reliability)
      .def_readonly("confidence", &finrel::ReliabilityStep::confidence)
      .def("__repr__", [](const finrel::ReliabilityStep& s) {
        return py::str("ReliabilityStep(d={}, step_reliability={}, overall_reliability={}, confidence={})")
            .format(s.d, s.step_reliability, s.overall_reliability, s.confidence);
      });

  py::class_<finrel::AssuranceResult>(m, "AssuranceResult")
      .def_readonly("assurance", &finrel::AssuranceResult::assurance)
      .def_readonly("achieved_at_d", &finrel::AssuranceResult::achieved_at_d)
      .def_readonly("reliability_at", &finrel::AssuranceResult::reliability_at)
      .def_readonly("confidence_at", &finrel::AssuranceResult::confidence_at)
      .def("__repr__", [](const finrel::AssuranceResult& a) {
        return py::str("AssuranceResult(assurance={}, achieved_at_d={}, reliability_at={}, confidence_at={})")
            .format(a.assurance, a.achieved_at_d, a.reliability_at, a.confidence_at);
      });

  py::class_<finrel::TailEstimate>(m, "TailEstimate")
      .def_readonly("probability", &finrel::TailEstimate::probability)
      .def_readonly("standard_error", &finrel::TailEstimate::standard_error)
      .def_readonly("hits", &finrel::TailEstimate::hits)
      .def_readonly("trials", &finrel::TailEstimate::trials);

  py::class_<finrel::AssuranceTable>(m, "AssuranceTable")
      .def_readonly("f", &finrel::AssuranceTable::f)
      .def_readonly("n_values", &finrel::AssuranceTable::n_values)
      .def_readonly("m_values", &finrel::AssuranceTable::m_values)
      .def_readonly("has_infinite", &finrel::AssuranceTable::has_infinite)
      .def_readonly("cells", &finrel::AssuranceTable::cells)
      .def("at", &finrel::AssuranceTable::at, "row"_a, "col"_a)
      .def("to_csv", [](const finrel::AssuranceTable& t) { return finrel::to_csv(t); })
      .def("to_json", [](const finrel::AssuranceTable& t) { return finrel::to_json(t); });

  m.def(
      "confidence_infinite",
      [](Count n, Count f, double r) { return finrel::confidence_infinite({n, f}, Probability(r)).value(); }, "n"_a,
      "f"_a, "r"_a);
  m.def(
      "reliability_infinite",
      [](Count n, Count f, double c) { return finrel::reliability_infinite({n, f}, Probability(c)).value(); }, "n"_a,
      "f"_a, "c"_a);
  m.def(
      "assurance_infinite", [](Count n, Count f) { return finrel::assurance_infinite({n, f}).value(); }, "n"_a,
      "f"_a);

  m.def(
      "step_grid", [](Count n, Count f, Count m_add) { return finrel::step_grid(plan(n, f, m_add)); }, "n"_a, "f"_a,
      "m"_a);
  m.def(
      "confidence_finite",
      [](Count n, Count f, Count m_add, double r) {
        return finrel::confidence_finite(plan(n, f, m_add), Probability(r)).value();
      },
      "n"_a, "f"_a, "m"_a, "r"_a);
  m.def(
      "reliability_finite",
      [](Count n, Count f, Count m_add, double c) {
        return finrel::reliability_finite(plan(n, f, m_add), Probability(c)).value();
      },
      "n"_a, "f"_a, "m"_a, "c"_a);
  m.def(
      "assurance_finite", [](Count n, Count f, Count m_add) { return finrel::assurance_finite(plan(n, f, m_add)); },
      "n"_a, "f"_a, "m"_a);

  m.def(
      "simulate_tail_probability",
      [](Count n, Count f, double r, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
        py::gil_scoped_release release;
        return finrel::simulate_tail_probability({n, f}, {trials, seed, Probability(r), workers});
      },
      "n"_a, "f"_a, "r"_a, "trials"_a = 1'000'000, "seed"_a = 0, "workers"_a = 0);
  m.def(
      "enumerate_assurance_oracle",
      [](Count n, Count f, Count m_add) { return finrel::enumerate_assurance_oracle(plan(n, f, m_add)); }, "n"_a,
      "f"_a, "m"_a);

  m.def(
      "assurance_table",
      [](Count n_min, Count n_max, Count m_min, Count m_max, bool include_infinite, Count f) {
        return finrel::assurance_table({n_min, n_max}, {m_min, m_max}, include_infinite, f);
      },
      "n_min"_a = finrel::kDefaultTableRows.first, "n_max"_a = finrel::kDefaultTableRows.last,
      "m_min"_a = finrel::kDefaultTableColumns.first, "m_max"_a = finrel::kDefaultTableColumns.last,
      "include_infinite"_a = true, "f"_a = 0);
  m.def("format_percent", &finrel::format_percent, "fraction"_a);
}
