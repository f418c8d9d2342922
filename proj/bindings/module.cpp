// Copyright 2026 The cohloss developers
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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohloss/io.hpp"

namespace py = pybind11;

namespace {

using cohloss::Complex;
using cohloss::ComplexMatrix;
using cohloss::DensityMatrix;
using cohloss::MeasureKind;
using cohloss::ProjectiveBasis;
using cohloss::Side;

using NpMatrix = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

py::array_t<Complex> to_numpy(const ComplexMatrix& m) {
  py::array_t<Complex> arr({m.dim(), m.dim()});
  auto view = arr.mutable_unchecked<2>();
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) view(r, c) = m(r, c);
  return arr;
}

ComplexMatrix from_numpy(const NpMatrix& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) {
    throw cohloss::ValidationError("expected a square 2-d array",
                                   static_cast<double>(arr.ndim()));
  }
  const int n = static_cast<int>(arr.shape(0));
  ComplexMatrix m(n);
  auto view = arr.unchecked<2>();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = view(r, c);
  if (!m.all_finite()) {
    throw cohloss::ValidationError("matrix entries must be finite", 0.0);
  }
  return m;
}

Side parse_side(const std::string& s) {
  if (s == "A" || s == "a") return Side::A;
  if (s == "B" || s == "b") return Side::B;
  throw cohloss::ValidationError("side must be 'A' or 'B'", 0.0);
}

MeasureKind parse_measure(const std::string& s) {
  if (auto m = cohloss::measure_from_name(s)) return *m;
  throw cohloss::ValidationError("unknown measure '" + s + "'", 0.0);
}

py::object json_to_py(const cohloss::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict outcome_to_py(const cohloss::SearchOutcome& o) {
  py::dict d;
  d["method"] = cohloss::search_method_name(o.method);
  d["best_loss"] = o.best_loss;
  d["baseline_loss_computational"] = o.baseline_loss_reference_basis;
  d["evaluations"] = o.evaluations;
  d["seed"] = o.seed;
  d["converged"] = o.converged;
  d["negative_loss_count"] = o.negatives.count;
  d["worst_negative_loss"] = o.negatives.worst;
  d["best_basis"] = to_numpy(o.best_basis.unitary());
  return d;
}

cohloss::SimplexOptions simplex_options(int restarts, int max_iters, int threads) {
  cohloss::SimplexOptions opts;
  opts.restarts = restarts;
  opts.max_iters = max_iters;
  opts.threads = threads;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bipartite-coherence bookkeeping and maximal-loss basis search";

  py::register_exception<cohloss::ValidationError>(m, "ValidationError",
                                                   PyExc_ValueError);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_property_readonly("dA", &DensityMatrix::dA)
      .def_property_readonly("dB", &DensityMatrix::dB)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def("matrix", [](const DensityMatrix& s) { return to_numpy(s.matrix()); })
      .def("reduced",
           [](const DensityMatrix& s, const std::string& traced) {
             return s.reduced(parse_side(traced));
           },
           py::arg("traced"))
      .def("with_dims", &DensityMatrix::with_dims, py::arg("dA"), py::arg("dB"))
      .def("__repr__", [](const DensityMatrix& s) {
        return "<DensityMatrix dA=" + std::to_string(s.dA()) +
               " dB=" + std::to_string(s.dB()) + ">";
      });

  py::class_<ProjectiveBasis>(m, "ProjectiveBasis")
      .def(py::init([](const NpMatrix& u) { return ProjectiveBasis(from_numpy(u)); }),
           py::arg("unitary"))
      .def_static("computational", &ProjectiveBasis::computational, py::arg("dim"))
      .def_property_readonly("dim", &ProjectiveBasis::dim)
      .def("unitary",
           [](const ProjectiveBasis& b) { return to_numpy(b.unitary()); });

  m.def("validate",
        [](const NpMatrix& mat, int dA, int dB) {
          return DensityMatrix::validate(from_numpy(mat), dA, dB);
        },
        py::arg("matrix"), py::arg("dA"), py::arg("dB"),
        "Check Hermiticity, unit trace and positivity; raises ValueError.");

  m.def("counterexample_state", &cohloss::counterexample_state);
  m.def("maximally_mixed", &cohloss::maximally_mixed, py::arg("dim"));
  m.def("maximally_coherent", &cohloss::maximally_coherent, py::arg("dim"));
  m.def("preset_state",
        [](const std::string& name) -> py::object {
          if (auto s = cohloss::preset_state(name)) return py::cast(*s);
          return py::none();
        },
        py::arg("name"));

  m.def("random_density",
        [](int dim, int rank, std::uint64_t seed) {
          cohloss::RngStream rng(seed);
          return cohloss::random_density(dim, rank, rng);
        },
        py::arg("dim"), py::arg("rank"), py::arg("seed"));
  m.def("random_qi_state",
        [](int dA, int dB, std::uint64_t seed) {
          cohloss::RngStream rng(seed);
          return cohloss::qi_state(cohloss::random_qi(dA, dB, rng), dB);
        },
        py::arg("dA"), py::arg("dB"), py::arg("seed"));
  m.def("random_unitary",
        [](int dim, std::uint64_t seed) {
          cohloss::RngStream rng(seed);
          return to_numpy(cohloss::random_unitary(dim, rng));
        },
        py::arg("dim"), py::arg("seed"));

  m.def("tensor",
        [](const NpMatrix& a, const NpMatrix& b) {
          return to_numpy(cohloss::tensor(from_numpy(a), from_numpy(b)));
        },
        py::arg("a"), py::arg("b"));
  m.def("partial_trace",
        [](const NpMatrix& mat, int dA, int dB, const std::string& traced) {
          return to_numpy(
              cohloss::partial_trace(from_numpy(mat), dA, dB, parse_side(traced)));
        },
        py::arg("matrix"), py::arg("dA"), py::arg("dB"), py::arg("traced"));

  m.def("dephase", &cohloss::dephase, py::arg("state"));
  m.def("abs_sum", &cohloss::abs_sum, py::arg("state"));
  m.def("c_l1", &cohloss::c_l1, py::arg("state"));
  m.def("c_relent", &cohloss::c_relent, py::arg("state"));
  m.def("entropy_bits", &cohloss::entropy_bits, py::arg("state"));
  m.def("coherence",
        [](const std::string& measure, const DensityMatrix& s) {
          return cohloss::coherence(parse_measure(measure), s);
        },
        py::arg("measure"), py::arg("state"));

  m.def("dual_basis_qubit", &cohloss::dual_basis_qubit);
  m.def("mub_family",
        [](int dim) {
          std::vector<ProjectiveBasis> out;
          for (auto& b : cohloss::mub_family(dim).bases) out.push_back(std::move(b));
          return out;
        },
        py::arg("dim"), "dim+1 pairwise unbiased bases, computational first.");
  m.def("verify_unbiased", &cohloss::verify_unbiased, py::arg("b1"), py::arg("b2"));
  m.def("project_local",
        [](const DensityMatrix& s, const std::string& side, const ProjectiveBasis& b) {
          return cohloss::project_local(s, parse_side(side), b);
        },
        py::arg("state"), py::arg("side"), py::arg("basis"));

  m.def("coherence_loss",
        [](const DensityMatrix& s, const std::string& side,
           const std::string& measure, const ProjectiveBasis& b) {
          return cohloss::coherence_loss({s, parse_side(side), parse_measure(measure)},
                                         b);
        },
        py::arg("state"), py::arg("side"), py::arg("measure"), py::arg("basis"));

  m.def("search_grid_qubit",
        [](const DensityMatrix& s, const std::string& side,
           const std::string& measure, int resolution) {
          return outcome_to_py(cohloss::search_grid_qubit(
              {s, parse_side(side), parse_measure(measure)}, resolution));
        },
        py::arg("state"), py::arg("side"), py::arg("measure"),
        py::arg("resolution") = 64);
  m.def("search_random",
        [](const DensityMatrix& s, const std::string& side,
           const std::string& measure, int samples, std::uint64_t seed) {
          return outcome_to_py(cohloss::search_random(
              {s, parse_side(side), parse_measure(measure)}, samples, seed));
        },
        py::arg("state"), py::arg("side"), py::arg("measure"), py::arg("samples"),
        py::arg("seed"));
  m.def("search_simplex",
        [](const DensityMatrix& s, const std::string& side,
           const std::string& measure, int restarts, int max_iters,
           std::uint64_t seed, int threads) {
          return outcome_to_py(cohloss::search_simplex(
              {s, parse_side(side), parse_measure(measure)},
              simplex_options(restarts, max_iters, threads), seed));
        },
        py::arg("state"), py::arg("side"), py::arg("measure"),
        py::arg("restarts") = 8, py::arg("max_iters") = 2000, py::arg("seed") = 0,
        py::arg("threads") = 1);

  m.def("qi_scan",
        [](int dA, int dB, int samples, std::uint64_t seed,
           const std::string& measure, int restarts, int max_iters, int threads) {
          return json_to_py(cohloss::qi_scan_to_json(
              cohloss::qi_scan(dA, dB, samples, seed, parse_measure(measure),
                               simplex_options(restarts, max_iters, threads))));
        },
        py::arg("dA"), py::arg("dB"), py::arg("samples"), py::arg("seed"),
        py::arg("measure") = "l1", py::arg("restarts") = 4,
        py::arg("max_iters") = 400, py::arg("threads") = 1);

#ifdef COHLOSS_VERSION
  m.attr("__version__") = COHLOSS_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
