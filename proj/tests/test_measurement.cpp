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

#include <doctest.h>

#include "cohloss/coherence.hpp"
#include "cohloss/eig.hpp"
#include "cohloss/measurement.hpp"
#include "test_helpers.hpp"

using namespace cohloss;
using namespace cohloss::testing;

TEST_CASE("computational measurement keeps the counterexample unchanged") {
  const DensityMatrix rho = counterexample_state();
  const DensityMatrix out =
      project_local(rho, Side::B, ProjectiveBasis::computational(2));
  CHECK(max_abs_diff(out.matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("dual measurement flattens the counterexample to identity/4") {
  const DensityMatrix rho = counterexample_state();
  const DensityMatrix out = project_local(rho, Side::B, dual_basis_qubit());
  CHECK(max_abs_diff(out.matrix(), maximally_mixed(4).matrix()) < 1e-15);
}

TEST_CASE("B-block-diagonal states are fixed points of the computational channel") {
  RngStream rng(51);
  const DensityMatrix chi = qi_state(random_qi(3, 2, rng), 2);
  const DensityMatrix out =
      project_local(chi, Side::B, ProjectiveBasis::computational(2));
  CHECK(max_abs_diff(out.matrix(), chi.matrix()) == 0.0);
}

TEST_CASE("channel properties on random states and bases") {
  RngStream rng(52);
  for (int trial = 0; trial < 15; ++trial) {
    const DensityMatrix s = random_density(6, 6, rng).with_dims(2, 3);
    const Side side = (trial % 2 == 0) ? Side::B : Side::A;
    const int sd = side == Side::B ? 3 : 2;
    const ProjectiveBasis basis(random_unitary(sd, rng));
    const DensityMatrix out = project_local(s, side, basis);

    CHECK(std::abs(out.matrix().trace() - Complex{1.0, 0.0}) < 1e-12);
    CHECK(hermiticity_residual(out.matrix()) < 1e-14);
    const DensityMatrix twice = project_local(out, side, basis);
    CHECK(max_abs_diff(twice.matrix(), out.matrix()) < 1e-12);
    CHECK(eig_hermitian(out.matrix()).eigenvalues.front() >= -1e-9);
  }
}

TEST_CASE("the computational fast path agrees with the projector sandwiches") {
  RngStream rng(53);
  for (Side side : {Side::A, Side::B}) {
    const DensityMatrix s = random_density(6, 6, rng).with_dims(3, 2);
    const int sd = side == Side::B ? 2 : 3;
    const DensityMatrix fast =
        project_local(s, side, ProjectiveBasis::computational(sd));
    const ComplexMatrix slow = detail::project_sandwich(
        s.matrix(), 3, 2, side, ComplexMatrix::identity(sd));
    CHECK(max_abs_diff(fast.matrix(), slow) < 1e-15);
  }
}

TEST_CASE("dual qubit basis") {
  const ProjectiveBasis dual = dual_basis_qubit();
  CHECK(unitarity_residual(dual.unitary()) < 1e-15);
  CHECK(verify_unbiased(ProjectiveBasis::computational(2), dual) < 1e-15);
  const DensityMatrix mixed = maximally_mixed(4).with_dims(2, 2);
  CHECK(max_abs_diff(project_local(mixed, Side::B, dual).matrix(),
                     mixed.matrix()) < 1e-15);
}

TEST_CASE("MUB families are pairwise unbiased") {
  for (int dim : {2, 3, 5, 7}) {
    const MubFamily fam = mub_family(dim);
    CHECK(static_cast<int>(fam.bases.size()) == dim + 1);
    CHECK(fam.bases.front().is_computational());
    for (size_t i = 0; i < fam.bases.size(); ++i) {
      CHECK(unitarity_residual(fam.bases[i].unitary()) < 1e-12);
      for (size_t j = i + 1; j < fam.bases.size(); ++j) {
        CHECK(verify_unbiased(fam.bases[i], fam.bases[j]) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(mub_family(4), ValidationError);
  CHECK_THROWS_AS(mub_family(6), ValidationError);
  CHECK_THROWS_AS(mub_family(11), ValidationError);
}

TEST_CASE("verify_unbiased self-overlap and Haar pairs") {
  for (int dim : {2, 3, 5}) {
    const ProjectiveBasis comp = ProjectiveBasis::computational(dim);
    CHECK(verify_unbiased(comp, comp) ==
          doctest::Approx(1.0 - 1.0 / dim).epsilon(1e-12));
  }
  RngStream rng(54);
  const ProjectiveBasis a(random_unitary(3, rng));
  const ProjectiveBasis b(random_unitary(3, rng));
  CHECK(verify_unbiased(a, b) > 1e-6);  // generic bases are not unbiased

  CHECK_THROWS_AS(
      verify_unbiased(ProjectiveBasis::computational(2), ProjectiveBasis::computational(3)),
      ValidationError);
}

TEST_CASE("MUB measurement collapses QI states") {
  SUBCASE("counterexample ensemble and the dual basis") {
    CHECK(mub_collapse_check(counterexample_ensemble(), 2, dual_basis_qubit()) <
          1e-12);
  }

  SUBCASE("random QI states, every nontrivial MUB basis") {
    RngStream rng(55);
    const Ensemble e = random_qi(3, 3, rng);
    const MubFamily fam = mub_family(3);
    for (size_t b = 1; b < fam.bases.size(); ++b) {
      CHECK(mub_collapse_check(e, 3, fam.bases[b]) < 1e-10);
    }
  }

  SUBCASE("the computational basis fails the precondition") {
    CHECK_THROWS_AS(mub_collapse_check(counterexample_ensemble(), 2,
                                       ProjectiveBasis::computational(2)),
                    ValidationError);
  }
}

TEST_CASE("post-measurement absolute sum is bounded below by the reduced state") {
  RngStream rng(56);
  for (int trial = 0; trial < 40; ++trial) {
    const int dA = 2 + static_cast<int>(rng.next_u64() % 3);
    const int dB = 2 + static_cast<int>(rng.next_u64() % 3);
    const DensityMatrix s = random_density(dA * dB, dA * dB, rng).with_dims(dA, dB);
    const ProjectiveBasis basis(random_unitary(dB, rng));
    const DensityMatrix out = project_local(s, Side::B, basis);

    const ComplexMatrix rho_a = s.reduced(Side::B).matrix();
    double rhs = 0.0;
    for (int i = 0; i < dA; ++i)
      for (int k = 0; k < dA; ++k) rhs += std::abs(rho_a(i, k));
    CHECK(abs_sum(out) >= rhs - 1e-9);
  }
}

TEST_CASE("computational measurement equals the B-block-diagonal restriction") {
  RngStream rng(57);
  const DensityMatrix s = random_density(8, 8, rng).with_dims(2, 4);
  const DensityMatrix out =
      project_local(s, Side::B, ProjectiveBasis::computational(4));

  // independent mask-and-scan oracle
  double masked_abs_sum = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 4; ++j) {
        const Complex entry = s.matrix()(i * 4 + j, k * 4 + j);
        masked_abs_sum += std::abs(entry);
        CHECK(std::abs(out.matrix()(i * 4 + j, k * 4 + j) - entry) == 0.0);
      }
  CHECK(std::abs(abs_sum(out) - masked_abs_sum) < 1e-12);
}

TEST_CASE("coherence chain on random QI states, both measures") {
  RngStream rng(58);
  const MubFamily fam = mub_family(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Ensemble e = random_qi(2, 3, rng);
    const DensityMatrix chi = qi_state(e, 3);
    const DensityMatrix rho_a = chi.reduced(Side::B);
    for (MeasureKind kind : {MeasureKind::L1, MeasureKind::RelativeEntropy}) {
      const double c_chi = coherence(kind, chi);
      const double after_comp = coherence(
          kind, project_local(chi, Side::B, ProjectiveBasis::computational(3)));
      CHECK(std::abs(after_comp - c_chi) < 1e-9);

      double mixture = 0.0;
      for (size_t i = 0; i < e.probs.size(); ++i)
        mixture += e.probs[i] * coherence(kind, e.members[i]);
      CHECK(std::abs(c_chi - mixture) < 1e-8);

      const double c_a = coherence(kind, rho_a);
      for (size_t b = 1; b < fam.bases.size(); ++b) {
        const double after_mub =
            coherence(kind, project_local(chi, Side::B, fam.bases[b]));
        CHECK(std::abs(after_mub - c_a) < 1e-8);
      }
      CHECK(c_a <= c_chi + 1e-9);
    }
  }
}

TEST_CASE("basis construction rejects non-unitary matrices") {
  RngStream rng(59);
  CHECK_THROWS_AS(ProjectiveBasis(random_ginibre(3, rng)), ValidationError);
}

TEST_CASE("project_local rejects a basis of the wrong dimension") {
  const DensityMatrix rho = counterexample_state();
  CHECK_THROWS_AS(project_local(rho, Side::B, ProjectiveBasis::computational(3)),
                  ValidationError);
}
