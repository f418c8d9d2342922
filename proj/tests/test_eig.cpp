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

#include <cmath>
#include <numbers>

#include "cohloss/eig.hpp"
#include "cohloss/measurement.hpp"
#include "cohloss/rng.hpp"
#include "test_helpers.hpp"

using namespace cohloss;
using namespace cohloss::testing;

namespace {

ComplexMatrix reconstruct(const EigenDecomposition& ed) {
  const int n = ed.eigenvectors.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Complex s{0.0, 0.0};
      for (int k = 0; k < n; ++k)
        s += ed.eigenvectors(r, k) * ed.eigenvalues[k] *
             std::conj(ed.eigenvectors(c, k));
      out(r, c) = s;
    }
  return out;
}

}  // namespace

TEST_CASE("already-diagonal input passes through") {
  ComplexMatrix m(2);
  m(0, 0) = 0.25;
  m(1, 1) = 0.75;
  const EigenDecomposition ed = eig_hermitian(m);
  CHECK(ed.eigenvalues[0] == doctest::Approx(0.25));
  CHECK(ed.eigenvalues[1] == doctest::Approx(0.75));
  CHECK(max_abs_diff(ed.eigenvectors, ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("rank-1 projector |+><+|") {
  const EigenDecomposition ed = eig_hermitian(plus_projector());
  CHECK(ed.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ed.eigenvalues[1] == doctest::Approx(1.0));
  // eigenvector for 1 is proportional to (1,1)/sqrt(2)
  const Complex overlap =
      (ed.eigenvectors(0, 1) + ed.eigenvectors(1, 1)) / std::sqrt(2.0);
  CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random Hermitian matrices reconstruct") {
  RngStream rng(21);
  for (int dim : {5, 8, 17, 32}) {
    const ComplexMatrix h = random_hermitian(dim, rng);
    const EigenDecomposition ed = eig_hermitian(h);
    CHECK(max_abs_diff(reconstruct(ed), h) < 1e-9);
    CHECK(unitarity_residual(ed.eigenvectors) < 1e-9);
    for (size_t k = 1; k < ed.eigenvalues.size(); ++k)
      CHECK(ed.eigenvalues[k - 1] <= ed.eigenvalues[k]);
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  RngStream rng(22);
  CHECK_THROWS_AS(eig_hermitian(random_ginibre(3, rng)), ValidationError);
}

TEST_CASE("exp of the zero generator is the identity") {
  const ComplexMatrix u = unitary_from_generator(ComplexMatrix(3));
  CHECK(max_abs_diff(u, ComplexMatrix::identity(3)) < 1e-15);
}

TEST_CASE("qubit generator exponential matches the closed form") {
  // h = theta * sigma_y, so exp(ih) = [[cos, sin], [-sin, cos]]
  const double theta = std::numbers::pi / 4.0;
  ComplexMatrix h(2);
  h(0, 1) = Complex{0.0, -theta};
  h(1, 0) = Complex{0.0, theta};
  const ComplexMatrix u = unitary_from_generator(h);
  ComplexMatrix expected(2);
  expected(0, 0) = std::cos(theta);
  expected(0, 1) = std::sin(theta);
  expected(1, 0) = -std::sin(theta);
  expected(1, 1) = std::cos(theta);
  CHECK(max_abs_diff(u, expected) < 1e-12);
  CHECK(std::norm(u(0, 0)) == doctest::Approx(0.5));
}

TEST_CASE("exp(ih) exp(-ih) = 1 and exp(ih) is unitary") {
  RngStream rng(23);
  for (int dim : {2, 3, 5}) {
    const ComplexMatrix h = random_hermitian(dim, rng);
    ComplexMatrix minus_h = h;
    minus_h *= Complex{-1.0, 0.0};
    const ComplexMatrix u = unitary_from_generator(h);
    CHECK(unitarity_residual(u) < 1e-9);
    CHECK(max_abs_diff(u * unitary_from_generator(minus_h),
                       ComplexMatrix::identity(dim)) < 1e-9);
  }
}

TEST_CASE("Hermitian logarithm round-trips Haar unitaries") {
  RngStream rng(24);
  for (int dim : {2, 3, 5, 7}) {
    const ComplexMatrix u = random_unitary(dim, rng);
    const ComplexMatrix h = generator_from_unitary(u);
    CHECK(hermiticity_residual(h) == 0.0);
    CHECK(max_abs_diff(unitary_from_generator(h), u) < 1e-8);
  }
}

TEST_CASE("Hermitian logarithm handles a -1 eigenvalue") {
  // the dual qubit basis is Hermitian-unitary with spectrum {1, -1}
  const ComplexMatrix u = dual_basis_qubit().unitary();
  const ComplexMatrix h = generator_from_unitary(u);
  CHECK(max_abs_diff(unitary_from_generator(h), u) < 1e-8);
}

TEST_CASE("logarithm rejects non-unitary input") {
  RngStream rng(25);
  CHECK_THROWS_AS(generator_from_unitary(random_ginibre(3, rng)),
                  ValidationError);
}
