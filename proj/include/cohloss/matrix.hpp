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

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohloss {

using Complex = std::complex<double>;

/// Largest composite dimension any matrix in this library may have.
inline constexpr int kMaxDim = 64;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: names the violated invariant and carries the measured
/// residual (or the offending value, for structural violations).
class ValidationError : public Error {
public:
  ValidationError(std::string invariant, double residual);

  const std::string& invariant() const { return invariant_; }
  double residual() const { return residual_; }

private:
  std::string invariant_;
  double residual_;
};

enum class Side { A, B };

/// Dense square matrix of complex doubles, row-major.
///
/// Composite bipartite indices follow the A-major convention throughout:
/// the basis vector |i>_A |j>_B sits at index i*dB + j.
class ComplexMatrix {
public:
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);

  /// Builds from explicit rows; checks shape and that every component is
  /// finite.
  static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
  const Complex& operator()(int r, int c) const {
    return e_[static_cast<size_t>(r) * dim_ + c];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Max-entry norm, max_{r,c} |m(r,c)|.
  double max_abs() const;
  double frobenius() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex z);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(Complex z, ComplexMatrix m) {
    m *= z;
    return m;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
  int dim_;
  std::vector<Complex> e_;
};

/// max_{r,c} |a(r,c) - b(r,c)|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{r,c} |m(r,c) - conj(m(c,r))|
double hermiticity_residual(const ComplexMatrix& m);

/// max-entry norm of u^dag u - identity
double unitarity_residual(const ComplexMatrix& u);

/// Kronecker product with A-major indexing:
/// result((i*dB+j),(k*dB+l)) = a(i,k) * b(j,l).
/// Rejects products above kMaxDim.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the named subsystem of a dA*dB composite matrix.
/// traced == Side::B keeps A: result(i,k) = sum_j m((i,j),(k,j)).
ComplexMatrix partial_trace(const ComplexMatrix& m, int dA, int dB, Side traced);

}  // namespace cohloss
