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

#include "cqsim/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cqsim {

namespace {

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require(a.dim() == b.dim(), "matrix dimension mismatch");
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {
  detail::require(dim >= 1, "matrix dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<Complex> row_major)
    : ComplexMatrix(dim) {
  detail::require(row_major.size() == entries_.size(), "entry count does not match dimension");
  std::copy(row_major.begin(), row_major.end(), entries_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  check_same_dim(*this, rhs);
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  check_same_dim(*this, rhs);
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  check_same_dim(lhs, rhs);
  const int n = lhs.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex lik = lhs(i, k);
      if (lik == Complex{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
ComplexMatrix operator*(double scale, ComplexMatrix m) { return m *= Complex(scale); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0, 1, 1, 0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, {0, Complex(0, -1), Complex(0, 1), 0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, {1, 0, 0, -1}); }

namespace {

// Off-diagonal Frobenius norm, the Jacobi convergence measure.
double off_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

EigenDecomposition eig2_closed_form(const ComplexMatrix& m) {
  const double a = std::real(m(0, 0));
  const double d = std::real(m(1, 1));
  const Complex b = m(0, 1);
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double r = std::hypot(half, std::abs(b));

  EigenDecomposition out;
  out.eigenvalues = {mean - r, mean + r};
  out.eigenvectors = ComplexMatrix::identity(2);
  if (r <= 0.0 || std::abs(b) == 0.0) {
    if (a > d) {  // diagonal but out of order: swap basis columns
      out.eigenvectors = ComplexMatrix(2, {0, 1, 1, 0});
    }
    return out;
  }
  // Use the eigenvalue farther from a for the explicitly solved eigenvector
  // (b, lam - a); the partner is its orthogonal complement.
  const double lam_lo = mean - r, lam_hi = mean + r;
  const bool solve_hi = std::abs(lam_hi - a) >= std::abs(lam_lo - a);
  const double lam = solve_hi ? lam_hi : lam_lo;
  const double e = lam - a;
  const double inv = 1.0 / std::sqrt(std::norm(b) + e * e);
  const Complex v0 = b * inv;
  const Complex v1 = Complex(e * inv);
  // Orthogonal complement of (v0, v1): (-conj(v1), conj(v0)).
  const int col_solved = solve_hi ? 1 : 0;
  const int col_other = 1 - col_solved;
  out.eigenvectors(0, col_solved) = v0;
  out.eigenvectors(1, col_solved) = v1;
  out.eigenvectors(0, col_other) = -std::conj(v1);
  out.eigenvectors(1, col_other) = std::conj(v0);
  return out;
}

EigenDecomposition eig_jacobi(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1e-300);

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  double previous_off = std::numeric_limits<double>::infinity();
  for (; sweep < kMaxSweeps; ++sweep) {
    const double off = off_norm(a);
    if (off <= 2.3e-16 * scale) break;
    // Round-off floor: off-norm no longer shrinking while already tiny.
    if (off >= previous_off && off <= 1e-12 * scale) break;
    previous_off = off;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-18 * scale) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const Complex phase = apq / mag;  // e^{i beta}
        const double zeta = (app - aqq) / (2.0 * mag);  // cot(2 theta)
        const double t = (zeta == 0.0)
                             ? 1.0
                             : std::copysign(1.0, zeta) /
                                   (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Givens-like rotation g: g(p,p)=c, g(p,q)=-s e^{i beta},
        // g(q,p)=s e^{-i beta}, g(q,q)=c; zeroes a(p,q) in g^t a g.
        ComplexMatrix g = ComplexMatrix::identity(n);
        g(p, p) = c;
        g(p, q) = -s * phase;
        g(q, p) = s * std::conj(phase);
        g(q, q) = c;
        a = g.adjoint() * a * g;
        a(p, q) = 0.0;  // annihilated by construction; clear round-off
        a(q, p) = 0.0;
        v = v * g;
      }
    }
  }
  if (sweep == kMaxSweeps)
    throw std::runtime_error("jacobi eigensolver did not converge");

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) out.eigenvalues[i] = std::real(a(i, i));
  out.eigenvectors = std::move(v);
  return out;
}

EigenDecomposition sorted_ascending(EigenDecomposition eig) {
  const int n = static_cast<int>(eig.eigenvalues.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return eig.eigenvalues[i] < eig.eigenvalues[j]; });
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = eig.eigenvalues[order[k]];
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = eig.eigenvectors(i, order[k]);
  }
  return out;
}

}  // namespace

EigenDecomposition herm_eig(const ComplexMatrix& m) {
  detail::require(m.dim() >= 1, "empty matrix");
  const double defect = m.hermiticity_defect();
  const double tol = 1e-10 * std::max(1.0, m.max_abs());
  if (defect > tol)
    detail::fail("herm_eig: matrix is not Hermitian (defect " + std::to_string(defect) + ")");

  // Work on the exactly Hermitian part so round-off asymmetry cannot leak in.
  ComplexMatrix h(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  if (m.dim() == 1) {
    EigenDecomposition out;
    out.eigenvalues = {std::real(h(0, 0))};
    out.eigenvectors = ComplexMatrix::identity(1);
    return out;
  }
  if (m.dim() == 2) return sorted_ascending(eig2_closed_form(h));
  return sorted_ascending(eig_jacobi(h));
}

ComplexMatrix expm_unitary(const ComplexMatrix& h, double tau_ns) {
  detail::require(tau_ns >= 0.0, "expm_unitary: duration must be nonnegative");
  const EigenDecomposition eig = herm_eig(h);
  const int n = h.dim();
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const Complex ph = std::polar(1.0, -kTwoPi * eig.eigenvalues[k] * tau_ns);
    for (int i = 0; i < n; ++i) {
      const Complex vik = v(i, k) * ph;
      if (vik == Complex{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += vik * std::conj(v(j, k));
    }
  }
  return out;
}

ComplexVector matvec(const ComplexMatrix& m, const ComplexVector& v) {
  detail::require(static_cast<int>(v.size()) == m.dim(), "matvec dimension mismatch");
  ComplexVector out(v.size());
  for (int i = 0; i < m.dim(); ++i) {
    Complex s = 0.0;
    for (int j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  detail::require(a.size() == b.size(), "inner-product dimension mismatch");
  Complex s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const ComplexVector& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix outer(const ComplexVector& v) {
  ComplexMatrix out(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = v[i] * std::conj(v[j]);
  return out;
}

ComplexVector column(const ComplexMatrix& m, int j) {
  ComplexVector out(m.dim());
  for (int i = 0; i < m.dim(); ++i) out[i] = m(i, j);
  return out;
}

ComplexMatrix conjugate_with(const ComplexMatrix& u, const ComplexMatrix& rho) {
  return u * rho * u.adjoint();
}

}  // namespace cqsim
