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

#pragma once

#include "cohloss/rng.hpp"
#include "cohloss/states.hpp"

namespace cohloss::testing {

inline ComplexMatrix random_hermitian(int dim, RngStream& rng) {
  const ComplexMatrix g = random_ginibre(dim, rng);
  ComplexMatrix h(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
  return h;
}

inline ComplexMatrix plus_projector() {
  ComplexMatrix m(2);
  m(0, 0) = 0.5;
  m(0, 1) = 0.5;
  m(1, 0) = 0.5;
  m(1, 1) = 0.5;
  return m;
}

inline ComplexMatrix minus_projector() {
  ComplexMatrix m(2);
  m(0, 0) = 0.5;
  m(0, 1) = -0.5;
  m(1, 0) = -0.5;
  m(1, 1) = 0.5;
  return m;
}

inline ComplexMatrix ket_projector(int dim, int k) {
  ComplexMatrix m(dim);
  m(k, k) = 1.0;
  return m;
}

// random diagonal state (flat Dirichlet weights)
inline DensityMatrix random_incoherent(int dim, RngStream& rng) {
  std::vector<double> w(dim);
  double sum = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.next_double());
    sum += x;
  }
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = w[i] / sum;
  return DensityMatrix::unchecked(std::move(m), dim, 1);
}

// the Eq-style two-member ensemble behind the counterexample state
inline Ensemble counterexample_ensemble() {
  Ensemble e;
  e.probs = {0.5, 0.5};
  e.members.push_back(DensityMatrix::unchecked(plus_projector(), 2, 1));
  e.members.push_back(DensityMatrix::unchecked(minus_projector(), 2, 1));
  e.labels = {0, 1};
  return e;
}

}  // namespace cohloss::testing
