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

#include <vector>

#include "cohloss/matrix.hpp"

namespace cohloss {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
/// Input must be Hermitian to 1e-9 (max-entry norm); converged when the
/// off-diagonal Frobenius norm drops below 1e-12, capped at 100 sweeps.
/// Throws ValidationError on non-Hermitian input and Error (with the
/// residual) on non-convergence.
EigenDecomposition eig_hermitian(const ComplexMatrix& m);

/// exp(i*h) for Hermitian h, evaluated spectrally.
ComplexMatrix unitary_from_generator(const ComplexMatrix& h);

/// Principal Hermitian logarithm: returns h with exp(i*h) = u and
/// eigenvalues of h in (-pi, pi]. Used to seed generator-space searches at a
/// given basis.
ComplexMatrix generator_from_unitary(const ComplexMatrix& u);

}  // namespace cohloss
