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

#include "cohloss/matrix.hpp"

#include <cmath>
#include <utility>

namespace cohloss {

namespace {

void require_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw ValidationError("matrix dimension must be in [1, 64]",
                          static_cast<double>(dim));
  }
}

}  // namespace

ValidationError::ValidationError(std::string invariant, double residual)
    : Error(invariant + " (residual = " + std::to_string(residual) + ")"),
      invariant_(std::move(invariant)),
      residual_(residual) {}

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  require_dim(dim);
  e_.assign(static_cast<size_t>(dim) * dim, Complex{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    const std::vector<std::vector<Complex>>& rows) {
  const int n = static_cast<int>(rows.size());
  require_dim(n);
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) {
      throw ValidationError("matrix rows must all have length dim",
                            static_cast<double>(rows[r].size()));
    }
    for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  if (!m.all_finite()) {
    throw ValidationError("matrix entries must be finite", 0.0);
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  std::vector<std::vector<Complex>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(c, r));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : e_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius() const {
  double s = 0.0;
  for (const Complex& z : e_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : e_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw ValidationError("matrix dimensions must match", o.dim_);
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw ValidationError("matrix dimensions must match", o.dim_);
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex z) {
  for (Complex& e : e_) e *= z;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw ValidationError("matrix dimensions must match", b.dim_);
  const int n = a.dim_;
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("matrix dimensions must match", b.dim());
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

double hermiticity_residual(const ComplexMatrix& m) {
  double r = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
  return r;
}

double unitarity_residual(const ComplexMatrix& u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  if (da * db > kMaxDim) {
    throw ValidationError("tensor product dimension exceeds 64",
                          static_cast<double>(da) * db);
  }
  ComplexMatrix out(da * db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k) {
      const Complex aik = a(i, k);
      for (int j = 0; j < db; ++j)
        for (int l = 0; l < db; ++l)
          out(i * db + j, k * db + l) = aik * b(j, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dA, int dB,
                            Side traced) {
  if (dA < 1 || dB < 1 || dA * dB != m.dim()) {
    throw ValidationError("partial trace dimensions must multiply to dim",
                          static_cast<double>(dA) * dB);
  }
  if (traced == Side::B) {
    ComplexMatrix out(dA);
    for (int i = 0; i < dA; ++i)
      for (int k = 0; k < dA; ++k) {
        Complex s{0.0, 0.0};
        for (int j = 0; j < dB; ++j) s += m(i * dB + j, k * dB + j);
        out(i, k) = s;
      }
    return out;
  }
  ComplexMatrix out(dB);
  for (int j = 0; j < dB; ++j)
    for (int l = 0; l < dB; ++l) {
      Complex s{0.0, 0.0};
      for (int i = 0; i < dA; ++i) s += m(i * dB + j, i * dB + l);
      out(j, l) = s;
    }
  return out;
}

}  // namespace cohloss
