// Copyright 2026 The cqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <initializer_list>
#include <vector>

#include "cqsim/common.hpp"

namespace cqsim {

/// Dense square complex matrix in row-major order.  Dimensions stay tiny
/// (2, 3, 4 or 9 here), so everything is value-semantic and copies are cheap.
/// Instances are immutable in practice once built and safe to share across
/// threads.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::initializer_list<Complex> row_major);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

  int dim() const { return dim_; }
  Complex& operator()(int i, int j) { return entries_[i * dim_ + j]; }
  const Complex& operator()(int i, int j) const { return entries_[i * dim_ + j]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  /// max_ij |a_ij - conj(a_ji)|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(double scale, ComplexMatrix m);

/// Kronecker product; (A x B)[(i*dimB+k),(j*dimB+l)] = A[i][j] * B[k][l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, same ordering
};

/// Hermitian eigendecomposition: closed form for 2x2, cyclic Jacobi with
/// complex rotations above that.  Rejects inputs whose Hermiticity defect
/// exceeds 1e-10 * max(1, |M|_inf), quoting the measured defect.
/// Within a degenerate cluster the eigenvector basis is arbitrary.
EigenDecomposition herm_eig(const ComplexMatrix& m);

/// U = exp(-i 2*pi H tau) for Hermitian H (GHz) and tau (ns), computed
/// through the eigendecomposition so U is unitary to round-off.
ComplexMatrix expm_unitary(const ComplexMatrix& h, double tau_ns);

using ComplexVector = std::vector<Complex>;

ComplexVector matvec(const ComplexMatrix& m, const ComplexVector& v);
Complex inner(const ComplexVector& a, const ComplexVector& b);  // <a|b>
double norm(const ComplexVector& v);
ComplexMatrix outer(const ComplexVector& v);  // |v><v|
ComplexVector column(const ComplexMatrix& m, int j);

/// U rho U^dagger, the constant-Hamiltonian density-matrix update.
ComplexMatrix conjugate_with(const ComplexMatrix& u, const ComplexMatrix& rho);

}  // namespace cqsim
