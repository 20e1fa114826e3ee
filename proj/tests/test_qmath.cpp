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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cqsim/qmath.hpp"
#include "support/oracles.hpp"

using namespace cqsim;
using namespace cqsim::testing;

namespace {

double reconstruction_error(const ComplexMatrix& m, const EigenDecomposition& eig) {
  const int n = m.dim();
  ComplexMatrix lambda(n);
  for (int i = 0; i < n; ++i) lambda(i, i) = eig.eigenvalues[i];
  return (m - eig.eigenvectors * lambda * eig.eigenvectors.adjoint()).frobenius_norm();
}

double orthonormality_error(const EigenDecomposition& eig) {
  const ComplexMatrix& v = eig.eigenvectors;
  return (v.adjoint() * v - ComplexMatrix::identity(v.dim())).frobenius_norm();
}

}  // namespace

TEST_CASE("herm_eig: diagonal and Pauli spectra") {
  const ComplexMatrix diag(3, {1, 0, 0, 0, 2, 0, 0, 0, 3});
  const EigenDecomposition e1 = herm_eig(diag);
  CHECK(e1.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e1.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e1.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-14));

  const EigenDecomposition e2 = herm_eig(pauli_x());
  CHECK(e2.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e2.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("herm_eig: tridiagonal chain eigenvalues") {
  // [[0,2,0],[2,0,0.1],[0,0.1,0]] has spectrum {-sqrt(4.01), 0, +sqrt(4.01)}
  // from lambda (lambda^2 - t^2 - d^2) = 0.
  const ComplexMatrix chain(3, {0, 2, 0, 2, 0, 0.1, 0, 0.1, 0});
  const EigenDecomposition eig = herm_eig(chain);
  const double s = std::sqrt(4.01);
  CHECK(std::abs(eig.eigenvalues[0] + s) < 1e-12);
  CHECK(std::abs(eig.eigenvalues[1]) < 1e-12);
  CHECK(std::abs(eig.eigenvalues[2] - s) < 1e-12);
}

TEST_CASE("herm_eig: rejects non-Hermitian input") {
  ComplexMatrix m(2, {0, 1, 0, 0});
  CHECK_THROWS_AS(herm_eig(m), std::invalid_argument);
}

TEST_CASE("herm_eig: random matrices reconstruct and match charpoly roots") {
  std::mt19937 rng(12345);
  for (int dim : {2, 3, 4, 9}) {
    for (int rep = 0; rep < 40; ++rep) {
      const ComplexMatrix m = random_hermitian(rng, dim, rep % 2 == 0 ? 1.0 : 1e3);
      const EigenDecomposition eig = herm_eig(m);
      CHECK(orthonormality_error(eig) < 1e-10);
      CHECK(reconstruction_error(m, eig) < 1e-10 * std::max(1.0, m.frobenius_norm()));
      for (size_t i = 1; i < eig.eigenvalues.size(); ++i)
        CHECK(eig.eigenvalues[i - 1] <= eig.eigenvalues[i]);
      const double scale = std::max(1.0, m.max_abs());
      if (dim == 2) {
        const auto roots = charpoly_roots_2x2(m);
        CHECK(std::abs(eig.eigenvalues[0] - roots[0]) < 1e-10 * scale);
        CHECK(std::abs(eig.eigenvalues[1] - roots[1]) < 1e-10 * scale);
      }
      if (dim == 3) {
        const auto roots = charpoly_roots_3x3(m);
        for (int i = 0; i < 3; ++i)
          CHECK(std::abs(eig.eigenvalues[i] - roots[i]) < 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("expm_unitary: closed-form cases") {
  // H = 0 gives the identity for any duration.
  const ComplexMatrix h0(2);
  CHECK((expm_unitary(h0, 7.5) - ComplexMatrix::identity(2)).frobenius_norm() < 1e-14);

  // H = sigma_x (1 GHz) for 0.25 ns rotates by pi/2: U = -i sigma_x.
  const ComplexMatrix u = expm_unitary(pauli_x(), 0.25);
  const ComplexMatrix expected = Complex(0, -1) * pauli_x();
  CHECK((u - expected).frobenius_norm() < 1e-12);

  // H = diag(1, 0) for 1 ns is a full 2*pi phase winding: the identity.
  const ComplexMatrix hz(2, {1, 0, 0, 0});
  CHECK((expm_unitary(hz, 1.0) - ComplexMatrix::identity(2)).frobenius_norm() < 1e-12);
}

TEST_CASE("expm_unitary: unitarity, semigroup property, global phase") {
  std::mt19937 rng(777);
  for (int dim : {2, 3, 4}) {
    for (int rep = 0; rep < 20; ++rep) {
      const ComplexMatrix h = random_hermitian(rng, dim, 2.0);
      std::uniform_real_distribution<double> dur(0.0, 2.0);
      const double t1 = dur(rng), t2 = dur(rng);
      const ComplexMatrix u1 = expm_unitary(h, t1);
      CHECK((u1.adjoint() * u1 - ComplexMatrix::identity(dim)).frobenius_norm() < 1e-12);
      const ComplexMatrix u2 = expm_unitary(h, t2);
      const ComplexMatrix u12 = expm_unitary(h, t1 + t2);
      CHECK((u1 * u2 - u12).frobenius_norm() < 1e-10);

      // Adding c*I only shifts the global phase: |Tr(U1^+ U2)| = dim.
      ComplexMatrix shifted = h;
      for (int i = 0; i < dim; ++i) shifted(i, i) += 0.37;
      const ComplexMatrix us = expm_unitary(shifted, t1);
      CHECK(std::abs(std::abs((u1.adjoint() * us).trace()) - dim) < 1e-10);
    }
  }
  CHECK_THROWS_AS(expm_unitary(pauli_x(), -1.0), std::invalid_argument);
}

TEST_CASE("kron: basics and mixed-product property") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK((kron(i2, i2) - ComplexMatrix::identity(4)).frobenius_norm() == 0.0);

  const ComplexMatrix zz = kron(pauli_z(), pauli_z());
  const ComplexMatrix expected(4, {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
  CHECK((zz - expected).frobenius_norm() == 0.0);

  std::mt19937 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix a = random_hermitian(rng, 2), c = random_hermitian(rng, 2);
    const ComplexMatrix b = random_hermitian(rng, 3), d = random_hermitian(rng, 3);
    const ComplexMatrix lhs = kron(a, b) * kron(c, d);
    const ComplexMatrix rhs = kron(a * c, b * d);
    CHECK((lhs - rhs).frobenius_norm() < 1e-12 * std::max(1.0, rhs.frobenius_norm()));
  }
}

TEST_CASE("degenerate clusters still give an orthonormal basis") {
  // Doubly degenerate spectrum {1, 1, 2}.
  std::mt19937 rng(99);
  const ComplexMatrix v = random_unitary(rng, 3);
  ComplexMatrix lambda(3);
  lambda(0, 0) = 1.0;
  lambda(1, 1) = 1.0;
  lambda(2, 2) = 2.0;
  const ComplexMatrix m = v * lambda * v.adjoint();
  const EigenDecomposition eig = herm_eig(m);
  CHECK(orthonormality_error(eig) < 1e-10);
  CHECK(reconstruction_error(m, eig) < 1e-10);
  CHECK(std::abs(eig.eigenvalues[0] - 1.0) < 1e-10);
  CHECK(std::abs(eig.eigenvalues[1] - 1.0) < 1e-10);
  CHECK(std::abs(eig.eigenvalues[2] - 2.0) < 1e-10);
}

TEST_CASE("vector helpers") {
  const ComplexVector v{Complex(1, 0), Complex(0, 1)};
  CHECK(norm(v) == doctest::Approx(std::sqrt(2.0)));
  const ComplexMatrix p = outer(v);
  CHECK(std::abs(p.trace() - Complex(2.0)) < 1e-15);
  const ComplexVector w = matvec(pauli_x(), v);
  CHECK(std::abs(w[0] - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(w[1] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(inner(v, v) - Complex(2.0)) < 1e-15);
}
