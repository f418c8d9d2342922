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

#include "cohloss/states.hpp"

namespace cohloss {

/// Orthonormal basis of one subsystem, stored as a unitary whose columns are
/// the basis vectors. Construction checks unitarity to 1e-9.
class ProjectiveBasis {
public:
  explicit ProjectiveBasis(ComplexMatrix u);
  static ProjectiveBasis computational(int dim);

  int dim() const { return u_.dim(); }
  const ComplexMatrix& unitary() const { return u_; }

  /// True when the unitary is exactly the identity.
  bool is_computational() const;

private:
  ComplexMatrix u_;
};

/// {(1,1)/sqrt(2), (1,-1)/sqrt(2)}.
ProjectiveBasis dual_basis_qubit();

/// dim+1 pairwise mutually unbiased bases, computational first.
struct MubFamily {
  int dim;
  std::vector<ProjectiveBasis> bases;
};

/// Prime dimensions 2, 3, 5, 7 only. d = 2 uses the three hard-coded qubit
/// bases; odd primes use <k|lambda^a_j> = omega^(a k^2 + j k)/sqrt(d).
MubFamily mub_family(int dim);

/// max over (i,j) of | |<lambda1_i|lambda2_j>|^2 - 1/dim |.
double verify_unbiased(const ProjectiveBasis& b1, const ProjectiveBasis& b2);

/// Non-selective projective measurement of one subsystem:
/// sum_m (1 (x) P_m) rho (1 (x) P_m) with P_m = |lambda_m><lambda_m|
/// (mirrored for side A). Trace-preserving, idempotent, positivity-preserving.
DensityMatrix project_local(const DensityMatrix& rho, Side side,
                            const ProjectiveBasis& basis);

/// Entrywise max deviation between the basis-measured QI state and
/// (reduced A state) (x) identity/dB. Precondition: basis unbiased with
/// respect to the computational basis (residual <= 1e-9), else rejected.
double mub_collapse_check(const Ensemble& e, int dB,
                          const ProjectiveBasis& basis);

namespace detail {
/// Projector-sandwich channel, no computational-basis fast path. Exposed so
/// tests can pin the fast path against it.
ComplexMatrix project_sandwich(const ComplexMatrix& m, int dA, int dB,
                               Side side, const ComplexMatrix& u);
}  // namespace detail

}  // namespace cohloss
