// Copyright 2026 the tdesign authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "tdesign/admissibility.hpp"
#include "tdesign/boolfn.hpp"
#include "tdesign/codes.hpp"
#include "tdesign/delsarte.hpp"
#include "tdesign/design.hpp"
#include "tdesign/exactmath.hpp"
#include "tdesign/fixtures.hpp"
#include "tdesign/spectral.hpp"

namespace py = pybind11;

namespace {

// Exact big integers cross the boundary as decimal strings.
py::int_ to_py(const tdesign::ExactInt& v) {
  PyObject* p = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!p) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(p);
}

tdesign::IncidenceStructure structure_from(int n, const std::vector<std::vector<int>>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("blocks must be nonempty");
  std::vector<tdesign::PointSet> points;
  points.reserve(blocks.size());
  for (const auto& b : blocks) points.push_back(tdesign::PointSet::from_indices(n, b));
  return tdesign::IncidenceStructure(n, static_cast<int>(blocks.front().size()),
                                     std::move(points));
}

tdesign::BooleanFunction vectors_from(int n, const std::vector<std::vector<int>>& rows) {
  std::vector<tdesign::PointSet> points;
  points.reserve(rows.size());
  for (const auto& r : rows) points.push_back(tdesign::PointSet::from_indices(n, r));
  return tdesign::BooleanFunction::from_support(n, points);
}

py::dict pack_structure(const tdesign::IncidenceStructure& D) {
  py::dict out;
  out["n"] = D.n();
  out["k"] = D.k();
  py::list blocks;
  for (std::uint64_t m : D.blocks()) blocks.append(py::cast(tdesign::PointSet(D.n(), m).indices()));
  out["blocks"] = blocks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact t-design verification through Walsh spectra";

  m.def(
      "verify",
      [](int n, const std::vector<std::vector<int>>& blocks, int t) {
        tdesign::IncidenceStructure D = structure_from(n, blocks);
        tdesign::SpectralVerdict v = tdesign::verify_spectral(D, t);
        py::dict out;
        out["design"] = v.is_design;
        out["t"] = t;
        out["b"] = to_py(tdesign::ExactInt(D.block_count()));
        out["lambda"] = v.lambda ? py::object(to_py(*v.lambda)) : py::object(py::none());
        if (v.first_violation) {
          py::dict w;
          w["weight"] = v.first_violation->w.weight();
          w["points"] = py::cast(v.first_violation->w.indices());
          w["expected"] = v.first_violation->expected
                              ? py::object(to_py(*v.first_violation->expected))
                              : py::object(py::none());
          w["actual"] = to_py(v.first_violation->actual);
          out["witness"] = w;
        } else {
          out["witness"] = py::none();
        }
        return out;
      },
      py::arg("n"), py::arg("blocks"), py::arg("t"),
      "Spectral t-design verdict for 1-based point blocks.");

  m.def(
      "spectrum",
      [](int n, const std::vector<std::vector<int>>& blocks) {
        tdesign::IncidenceStructure D = structure_from(n, blocks);
        py::list rows;
        for (const auto& [h, values] :
             tdesign::walsh_full(D.characteristic_function()).by_weight())
          for (const auto& [value, mult] : values) rows.append(py::make_tuple(h, value, mult));
        return rows;
      },
      py::arg("n"), py::arg("blocks"),
      "Walsh spectrum as (weight, value, multiplicity) rows sorted by (weight, value).");

  m.def(
      "anf_terms",
      [](int n, const std::vector<std::vector<int>>& blocks) {
        tdesign::IncidenceStructure D = structure_from(n, blocks);
        tdesign::AlgebraicNormalForm a = tdesign::anf(D.characteristic_function());
        py::list terms;
        for (std::uint64_t term : a.terms)
          terms.append(py::cast(tdesign::PointSet(n, term).indices()));
        return terms;
      },
      py::arg("n"), py::arg("blocks"),
      "Multilinear polynomial terms as 1-based index lists, in canonical order.");

  m.def(
      "krawtchouk",
      [](int n, int k, int x) { return to_py(tdesign::krawtchouk(n, k, x)); }, py::arg("n"),
      py::arg("k"), py::arg("x"), "Exact Krawtchouk value P_k(x).");

  m.def(
      "binomial", [](int n, int k) { return to_py(tdesign::binomial(n, k)); }, py::arg("n"),
      py::arg("k"), "Exact binomial coefficient.");

  m.def(
      "admissible",
      [](int min_n, int max_n) { return tdesign::enumerate_admissible(min_n, max_n); },
      py::arg("min_n"), py::arg("max_n"),
      "Even n in [min_n, max_n] passing every half-size existence filter.");

  m.def(
      "code_weights",
      [](int n, const std::vector<std::vector<int>>& blocks) {
        tdesign::WeightDistribution d =
            tdesign::code_weight_distribution(structure_from(n, blocks).characteristic_function());
        py::dict out;
        for (const auto& [w, c] : d.counts) out[to_py(w)] = to_py(c);
        return out;
      },
      py::arg("n"), py::arg("blocks"),
      "Weight distribution {weight: count} of the attached binary code.");

  m.def(
      "oa_strength",
      [](int n, const std::vector<std::vector<int>>& rows) {
        return tdesign::oa_strength(vectors_from(n, rows));
      },
      py::arg("n"), py::arg("rows"), "Orthogonal-array strength of a set of 1-based index rows.");

  m.def(
      "steiner_a", [](int n) { return to_py(tdesign::steiner_a(n)); }, py::arg("n"),
      "Walsh value at a block of a hypothetical half-size system.");

  m.def(
      "steiner_a_tilde", [](int n) { return to_py(tdesign::steiner_a_tilde(n)); }, py::arg("n"),
      "Walsh value at a non-block half-weight input of a hypothetical half-size system.");

  m.def(
      "fano", [] { return pack_structure(tdesign::fano()); },
      "The seven lines of the order-2 projective plane.");

  m.def(
      "s5612", [] { return pack_structure(tdesign::s5612()); },
      "The 132 blocks of the 5-(12, 6, 1) design, re-verified on load.");
}
