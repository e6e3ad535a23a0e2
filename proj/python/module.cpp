// Copyright 2026 The evcopula Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "evcopula/errors.hpp"
#include "evcopula/io.hpp"
#include "evcopula/measures.hpp"
#include "evcopula/pickands.hpp"
#include "evcopula/sampler.hpp"
#include "evcopula/transforms.hpp"
#include "evcopula/verification.hpp"

namespace py = pybind11;

namespace {

using evc::PiecewiseLinearPickands;

PiecewiseLinearPickands FromPairs(
    const std::vector<std::pair<double, double>>& pairs) {
  std::vector<evc::Vertex> raw;
  raw.reserve(pairs.size());
  for (const auto& [x, y] : pairs) raw.push_back({x, y});
  return PiecewiseLinearPickands::Validate(raw);
}

std::vector<std::pair<double, double>> ToPairs(
    const PiecewiseLinearPickands& a) {
  std::vector<std::pair<double, double>> out;
  for (const evc::Vertex& v : a.vertices()) out.emplace_back(v.x, v.y);
  return out;
}

std::vector<evc::SamplePair> PairsFromArray(
    const py::array_t<double, py::array::c_style | py::array::forcecast>&
        array) {
  if (array.ndim() != 2 || array.shape(1) != 2) {
    throw py::value_error("expected an (n, 2) array of pairs");
  }
  const auto view = array.unchecked<2>();
  std::vector<evc::SamplePair> pairs(static_cast<std::size_t>(view.shape(0)));
  for (py::ssize_t i = 0; i < view.shape(0); ++i) {
    pairs[static_cast<std::size_t>(i)] = {view(i, 0), view(i, 1)};
  }
  return pairs;
}

py::dict SampleDict(const evc::RegionSample& s) {
  py::dict d;
  d["vertices"] = ToPairs(s.function);
  d["source"] = s.source;
  d["tau"] = s.tau;
  d["rho"] = s.rho;
  d["slack_sharp"] = s.slack_sharp;
  d["slack_hl"] = s.slack_hl;
  d["violation"] = s.violation();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Extreme-value copulas from piecewise-linear Pickands functions";

  py::register_exception<evc::Error>(m, "EvcError", PyExc_ValueError);

  py::class_<PiecewiseLinearPickands>(m, "Pickands")
      .def(py::init(&FromPairs), py::arg("vertices") = py::list())
      .def_static("independence", &PiecewiseLinearPickands::Independence)
      .def_static("comonotonic", &PiecewiseLinearPickands::Comonotonic)
      .def_static("from_json",
                  [](const std::string& text) {
                    return evc::ParsePickands(text);
                  })
      .def("to_json",
           [](const PiecewiseLinearPickands& a) {
             return evc::PickandsToJson(a).dump();
           })
      .def_property_readonly("vertices", &ToPairs)
      .def("__call__", &evc::Eval, py::arg("t"))
      .def("right_derivative", &evc::RightDerivative, py::arg("t"))
      .def("__len__", &PiecewiseLinearPickands::vertex_count)
      .def(py::self == py::self)
      .def("__repr__", [](const PiecewiseLinearPickands& a) {
        return "Pickands(" + evc::PickandsToJson(a)["vertices"].dump() + ")";
      });

  py::class_<evc::MeasurePair>(m, "MeasurePair")
      .def_readonly("tau", &evc::MeasurePair::tau)
      .def_readonly("rho", &evc::MeasurePair::rho)
      .def_readonly("resolution", &evc::MeasurePair::resolution)
      .def_property_readonly("exact", &evc::MeasurePair::exact);

  py::class_<evc::DependenceEvaluator>(m, "DependenceEvaluator")
      .def(py::init<std::string, std::function<double(double)>, int>(),
           py::arg("name"), py::arg("fn"), py::arg("node_count") = 1024)
      .def_static("gumbel", &evc::DependenceEvaluator::Gumbel,
                  py::arg("theta"), py::arg("node_count") = 1024)
      .def_static("mixture", &evc::DependenceEvaluator::Mixture,
                  py::arg("weight"), py::arg("node_count") = 1024)
      .def("__call__", &evc::DependenceEvaluator::operator())
      .def_property_readonly("name", &evc::DependenceEvaluator::name);

  m.def("interpolate",
        py::overload_cast<const evc::DependenceEvaluator&, int>(
            &evc::Interpolate),
        py::arg("f"), py::arg("n"));
  m.def("support_geometry", [](const PiecewiseLinearPickands& a) {
    const evc::SupportGeometry g = evc::ComputeSupportGeometry(a);
    return std::make_pair(g.left, g.right);
  });
  m.def("support_curve", &evc::SupportCurve, py::arg("t"), py::arg("x"));

  m.def("tau", &evc::Tau);
  m.def("rho", &evc::Rho);
  m.def("measures", &evc::ExactMeasures);
  m.def("measures_general", &evc::MeasuresGeneral, py::arg("f"),
        py::arg("tol"));
  m.def("copula_cdf", &evc::CopulaCdf, py::arg("a"), py::arg("x"),
        py::arg("y"));
  m.def("copula_partial1", &evc::CopulaPartial1, py::arg("a"), py::arg("x"),
        py::arg("y"));
  m.def("bound_curves", [](double tau) {
    const evc::BoundCurves c = evc::ComputeBoundCurves(tau);
    return py::make_tuple(c.hl_lower, c.hl_upper, c.sharp_lower);
  });
  m.def("gap_function", &evc::GapFunction);
  m.def(
      "maximize_gap",
      [](int grid_points) {
        const evc::GapMaximum g = evc::MaximizeGap(grid_points);
        return std::make_pair(g.argmax, g.max);
      },
      py::arg("grid_points") = 1'000'000);

  m.def("triangular", &evc::Triangular, py::arg("x1"), py::arg("y1"));
  m.def(
      "admissible_interval",
      [](const PiecewiseLinearPickands& a, double x) {
        const evc::AdmissibleInterval i = evc::ComputeAdmissibleInterval(a, x);
        return std::make_pair(i.lo, i.hi);
      },
      py::arg("a"), py::arg("x"));
  m.def("vertex_insert", &evc::VertexInsert, py::arg("a"), py::arg("x"),
        py::arg("y"));
  m.def("delta_tau", &evc::DeltaTau);
  m.def("delta_rho", &evc::DeltaRho);
  m.def("capital_delta", &evc::CapitalDelta);
  m.def("lemma2_terms", [](double x1, double y1, double x, double y) {
    const evc::Lemma2Terms t = evc::ComputeLemma2Terms(x1, y1, x, y);
    py::dict d;
    d["N1"] = t.n1;
    d["N2"] = t.n2;
    d["N3"] = t.n3;
    d["D1"] = t.d1;
    d["D2"] = t.d2;
    d["D3"] = t.d3;
    d["D4"] = t.d4;
    d["D5"] = t.d5;
    d["D6"] = t.d6;
    d["quotient"] = t.Quotient();
    return d;
  });

  m.def(
      "random_pickands",
      [](int n, std::uint64_t seed) { return evc::RandomPickands(n, seed); },
      py::arg("n_vertices"), py::arg("seed"));
  m.def("check_sharp_inequality", [](const PiecewiseLinearPickands& a) {
    return SampleDict(evc::CheckSharpInequality(a));
  });
  m.def("check_ordering",
        [](const PiecewiseLinearPickands& a, const PiecewiseLinearPickands& b) {
          const evc::OrderingReport r = evc::CheckOrdering(a, b);
          py::dict d;
          d["relation"] = r.relation == evc::Dominance::kFirstDominates
                              ? "first"
                          : r.relation == evc::Dominance::kSecondDominates
                              ? "second"
                              : "equal";
          d["tau_first"] = r.tau_first;
          d["tau_second"] = r.tau_second;
          d["consistent"] = r.consistent;
          return d;
        });
  m.def(
      "lemma_suite",
      [](int trials, std::uint64_t seed, int workers) {
        evc::LemmaReport report;
        {
          py::gil_scoped_release release;
          report = evc::LemmaSuite(trials, seed, workers);
        }
        py::dict checks;
        for (const evc::CheckTally& c : report.checks) {
          py::dict d;
          d["checked"] = c.checked;
          d["violations"] = c.violations;
          d["worst_margin"] = c.worst_margin;
          checks[py::str(c.name)] = d;
        }
        py::dict out;
        out["trials"] = report.trials;
        out["passed"] = report.passed();
        out["checks"] = checks;
        return out;
      },
      py::arg("trials"), py::arg("seed"), py::arg("workers") = 1);
  m.def(
      "region_scan",
      [](int count, int max_vertices, std::uint64_t seed, int workers) {
        std::vector<evc::RegionSample> samples;
        {
          py::gil_scoped_release release;
          samples = evc::RegionScan(count, max_vertices, seed, workers);
        }
        py::list out;
        for (const auto& s : samples) out.append(SampleDict(s));
        return out;
      },
      py::arg("count"), py::arg("max_vertices"), py::arg("seed"),
      py::arg("workers") = 1);

  m.def(
      "sample",
      [](const PiecewiseLinearPickands& a, std::size_t n, std::uint64_t seed,
         int workers) {
        std::vector<evc::SamplePair> pairs;
        {
          py::gil_scoped_release release;
          pairs = evc::Sample(a, n, seed, workers);
        }
        py::array_t<double> out({static_cast<py::ssize_t>(n), py::ssize_t{2}});
        auto view = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < n; ++i) {
          view(static_cast<py::ssize_t>(i), 0) = pairs[i].u;
          view(static_cast<py::ssize_t>(i), 1) = pairs[i].v;
        }
        return out;
      },
      py::arg("a"), py::arg("n"), py::arg("seed"), py::arg("workers") = 1);
  m.def("empirical_tau", [](const py::array_t<double, py::array::c_style |
                                                          py::array::forcecast>&
                                pairs) {
    return evc::EmpiricalTau(PairsFromArray(pairs));
  });
  m.def("empirical_rho", [](const py::array_t<double, py::array::c_style |
                                                          py::array::forcecast>&
                                pairs) {
    return evc::EmpiricalRho(PairsFromArray(pairs));
  });
}
