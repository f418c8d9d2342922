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

#include "cohloss/matrix.hpp"
#include "cohloss/rng.hpp"
#include "test_helpers.hpp"

using namespace cohloss;
using namespace cohloss::testing;

TEST_CASE("tensor of identities is the identity") {
  const ComplexMatrix t = tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  CHECK(max_abs_diff(t, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("tensor index bookkeeping: |0><0| (x) |1><1|") {
  const ComplexMatrix t = tensor(ket_projector(2, 0), ket_projector(2, 1));
  ComplexMatrix expected(4);
  expected(1, 1) = 1.0;  // row = 0*2 + 1
  CHECK(max_abs_diff(t, expected) == 0.0);
}

TEST_CASE("tensor |+><+| (x) |0><0| matches the hand-multiplied blocks") {
  const ComplexMatrix t = tensor(plus_projector(), ket_projector(2, 0));
  ComplexMatrix expected(4);
  expected(0, 0) = 0.5;
  expected(0, 2) = 0.5;
  expected(2, 0) = 0.5;
  expected(2, 2) = 0.5;
  CHECK(max_abs_diff(t, expected) == 0.0);
}

TEST_CASE("tensor is associative entrywise") {
  RngStream rng(11);
  const ComplexMatrix a = random_ginibre(2, rng);
  const ComplexMatrix b = random_ginibre(3, rng);
  const ComplexMatrix c = random_ginibre(2, rng);
  CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) < 1e-13);
}

TEST_CASE("trace of a tensor product factorizes") {
  RngStream rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_ginibre(3, rng);
    const ComplexMatrix b = random_ginibre(4, rng);
    const Complex lhs = tensor(a, b).trace();
    const Complex rhs = a.trace() * b.trace();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
  }
}

TEST_CASE("tensor rejects composite dimensions above 64") {
  RngStream rng(13);
  const ComplexMatrix a = random_ginibre(9, rng);
  const ComplexMatrix b = random_ginibre(8, rng);
  CHECK_THROWS_AS(tensor(a, b), ValidationError);
}

TEST_CASE("partial trace of a product state factorizes") {
  RngStream rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_ginibre(3, rng);
    const ComplexMatrix b = random_ginibre(4, rng);
    const ComplexMatrix reduced = partial_trace(tensor(a, b), 3, 4, Side::B);
    ComplexMatrix expected = a;
    expected *= b.trace();
    CHECK(max_abs_diff(reduced, expected) < 1e-12);
  }
}

TEST_CASE("partial trace of the counterexample matrix gives identity/2") {
  // (|+><+| + |-><-|)/2 = 1/2, summed by hand
  ComplexMatrix m(4);
  m(0, 0) = m(0, 2) = m(2, 0) = m(2, 2) = 0.25;
  m(1, 1) = m(3, 3) = 0.25;
  m(1, 3) = m(3, 1) = -0.25;
  ComplexMatrix expected = ComplexMatrix::identity(2);
  expected *= Complex{0.5, 0.0};
  CHECK(max_abs_diff(partial_trace(m, 2, 2, Side::B), expected) == 0.0);
}

TEST_CASE("partial trace of the maximally mixed state") {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m *= Complex{0.25, 0.0};
  ComplexMatrix expected = ComplexMatrix::identity(2);
  expected *= Complex{0.5, 0.0};
  CHECK(max_abs_diff(partial_trace(m, 2, 2, Side::A), expected) == 0.0);
}

TEST_CASE("partial trace preserves the trace") {
  RngStream rng(15);
  const ComplexMatrix m = random_ginibre(6, rng);
  for (Side s : {Side::A, Side::B}) {
    const Complex t = partial_trace(m, 2, 3, s).trace();
    CHECK(std::abs(t - m.trace()) < 1e-13);
  }
}

TEST_CASE("partial trace rejects mismatched dimensions") {
  RngStream rng(16);
  const ComplexMatrix m = random_ginibre(6, rng);
  CHECK_THROWS_AS(partial_trace(m, 2, 2, Side::B), ValidationError);
}

TEST_CASE("matrix construction enforces the dimension cap") {
  CHECK_THROWS_AS(ComplexMatrix(0), ValidationError);
  CHECK_THROWS_AS(ComplexMatrix(65), ValidationError);
  CHECK_NOTHROW(ComplexMatrix(64));
}

TEST_CASE("from_rows rejects non-finite entries and ragged rows") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{Complex{nan, 0.0}}}), ValidationError);
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), ValidationError);
}

TEST_CASE("adjoint and hermiticity residual") {
  RngStream rng(17);
  const ComplexMatrix h = random_hermitian(4, rng);
  CHECK(hermiticity_residual(h) == 0.0);
  const ComplexMatrix g = random_ginibre(4, rng);
  CHECK(max_abs_diff(g.adjoint().adjoint(), g) == 0.0);
  CHECK(hermiticity_residual(g) > 0.1);  // almost surely
}
