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

#include "cohloss/states.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "cohloss/eig.hpp"

namespace cohloss {

namespace {

constexpr double kHermitianTol = 1e-9;
constexpr double kTraceTol = 1e-9;
constexpr double kEigenvalueFloor = -1e-9;

void require_split(int dim, int dA, int dB) {
  if (dA < 1 || dB < 1 || dA * dB != dim) {
    throw ValidationError("subsystem dimensions must multiply to dim",
                          static_cast<double>(dA) * dB);
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, int dA, int dB)
    : mat_(std::move(mat)), dA_(dA), dB_(dB) {}

DensityMatrix DensityMatrix::validate(ComplexMatrix mat, int dA, int dB) {
  require_split(mat.dim(), dA, dB);
  if (!mat.all_finite()) {
    throw ValidationError("state entries must be finite", 0.0);
  }
  const double herm = hermiticity_residual(mat);
  if (herm > kHermitianTol) {
    throw ValidationError("state must be Hermitian", herm);
  }
  const double trace_residual = std::abs(mat.trace() - Complex{1.0, 0.0});
  if (trace_residual > kTraceTol) {
    throw ValidationError("state must have unit trace", trace_residual);
  }
  const EigenDecomposition ed = eig_hermitian(mat);
  if (ed.eigenvalues.front() < kEigenvalueFloor) {
    throw ValidationError("state must be positive semidefinite",
                          -ed.eigenvalues.front());
  }
  return DensityMatrix(std::move(mat), dA, dB);
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix mat, int dA, int dB) {
  require_split(mat.dim(), dA, dB);
  return DensityMatrix(std::move(mat), dA, dB);
}

DensityMatrix DensityMatrix::reduced(Side traced) const {
  ComplexMatrix r = partial_trace(mat_, dA_, dB_, traced);
  const int d = r.dim();
  return DensityMatrix(std::move(r), d, 1);
}

DensityMatrix DensityMatrix::with_dims(int dA, int dB) const {
  require_split(mat_.dim(), dA, dB);
  return DensityMatrix(mat_, dA, dB);
}

DensityMatrix counterexample_state() {
  ComplexMatrix m(4);
  // 1/2 |+><+| (x) |0><0|: A-blocks at B-index 0
  m(0, 0) = 0.25;
  m(0, 2) = 0.25;
  m(2, 0) = 0.25;
  m(2, 2) = 0.25;
  // 1/2 |-><-| (x) |1><1|: A-blocks at B-index 1
  m(1, 1) = 0.25;
  m(1, 3) = -0.25;
  m(3, 1) = -0.25;
  m(3, 3) = 0.25;
  return DensityMatrix::unchecked(std::move(m), 2, 2);
}

DensityMatrix maximally_mixed(int dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= Complex{1.0 / dim, 0.0};
  return DensityMatrix::unchecked(std::move(m), dim, 1);
}

DensityMatrix maximally_coherent(int dim) {
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = 1.0 / dim;
  return DensityMatrix::unchecked(std::move(m), dim, 1);
}

DensityMatrix qi_state(const Ensemble& e, int dB) {
  const size_t n = e.probs.size();
  if (n == 0 || e.members.size() != n || e.labels.size() != n) {
    throw ValidationError("ensemble lists must be nonempty and equal-length",
                          static_cast<double>(n));
  }
  double psum = 0.0;
  for (double p : e.probs) {
    if (p < 0.0) throw ValidationError("ensemble probabilities must be nonnegative", p);
    psum += p;
  }
  if (std::abs(psum - 1.0) > 1e-9) {
    throw ValidationError("ensemble probabilities must sum to 1",
                          std::abs(psum - 1.0));
  }
  const int dA = e.members.front().dim();
  std::set<int> seen;
  for (size_t i = 0; i < n; ++i) {
    if (e.members[i].dim() != dA || e.members[i].dB() != 1) {
      throw ValidationError("ensemble members must share dA and be single-partite",
                            e.members[i].dim());
    }
    if (e.labels[i] < 0 || e.labels[i] >= dB) {
      throw ValidationError("ensemble label out of range", e.labels[i]);
    }
    if (!seen.insert(e.labels[i]).second) {
      throw ValidationError("ensemble labels must be distinct", e.labels[i]);
    }
  }

  ComplexMatrix out(dA * dB);
  for (size_t t = 0; t < n; ++t) {
    const ComplexMatrix& rho = e.members[t].matrix();
    const int j = e.labels[t];
    for (int i = 0; i < dA; ++i)
      for (int k = 0; k < dA; ++k)
        out(i * dB + j, k * dB + j) += e.probs[t] * rho(i, k);
  }
  return DensityMatrix::unchecked(std::move(out), dA, dB);
}

DensityMatrix random_density(int dim, int rank, RngStream& rng) {
  if (rank < 1 || rank > dim) {
    throw ValidationError("rank must be in [1, dim]", rank);
  }
  // dim x rank Ginibre block, sampled row-major.
  std::vector<std::vector<Complex>> g(dim, std::vector<Complex>(rank));
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < rank; ++c) g[r][c] = rng.next_complex_gaussian();

  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      Complex s{0.0, 0.0};
      for (int k = 0; k < rank; ++k) s += g[r][k] * std::conj(g[c][k]);
      m(r, c) = s;
    }
  const double tr = m.trace().real();
  m *= Complex{1.0 / tr, 0.0};
  // exact Hermiticity (the accumulation order above is not symmetric)
  for (int r = 0; r < dim; ++r) {
    m(r, r) = Complex{m(r, r).real(), 0.0};
    for (int c = r + 1; c < dim; ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m(r, c) = avg;
      m(c, r) = std::conj(avg);
    }
  }
  return DensityMatrix::unchecked(std::move(m), dim, 1);
}

Ensemble random_qi(int dA, int dB, RngStream& rng) {
  if (dA < 2 || dB < 2) {
    throw ValidationError("random QI ensembles need dA, dB >= 2",
                          std::min(dA, dB));
  }
  Ensemble e;
  double sum = 0.0;
  for (int i = 0; i < dB; ++i) {
    const double x = -std::log(1.0 - rng.next_double());
    e.probs.push_back(x);
    sum += x;
  }
  for (double& p : e.probs) p /= sum;
  for (int i = 0; i < dB; ++i) {
    e.members.push_back(random_density(dA, dA, rng));
    e.labels.push_back(i);
  }
  return e;
}

std::optional<DensityMatrix> preset_state(const std::string& name) {
  if (name == "counterexample") return counterexample_state();
  const auto parse_dim = [](const std::string& s) -> std::optional<int> {
    if (s.empty() || s.size() > 2) return std::nullopt;
    for (char c : s)
      if (c < '0' || c > '9') return std::nullopt;
    const int d = std::stoi(s);
    if (d < 1 || d > kMaxDim) return std::nullopt;
    return d;
  };
  if (name.rfind("maxmix:", 0) == 0) {
    if (auto d = parse_dim(name.substr(7))) return maximally_mixed(*d);
    throw ValidationError("bad preset dimension in '" + name + "'", 0.0);
  }
  if (name.rfind("maxcoh:", 0) == 0) {
    if (auto d = parse_dim(name.substr(7))) return maximally_coherent(*d);
    throw ValidationError("bad preset dimension in '" + name + "'", 0.0);
  }
  return std::nullopt;
}

}  // namespace cohloss
