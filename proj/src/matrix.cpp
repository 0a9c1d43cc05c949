#include "qsd/matrix.hpp"

#include <cmath>

namespace qsd {

namespace {
void require_dim(int dim) {
  if (dim != 2 && dim != 4)
    throw DimMismatch("matrix dimension must be 2 or 4, got " + std::to_string(dim));
}
}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { require_dim(dim); }

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw DimMismatch("matrix addition with mismatched dimensions");
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw DimMismatch("matrix subtraction with mismatched dimensions");
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cxd s) {
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

cxd ComplexMatrix::trace() const {
  cxd t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) return false;
  return true;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(a_[i]));
  return m;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cxd s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, cxd s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatch("matrix product with mismatched dimensions");
  ComplexMatrix out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int k = 0; k < a.dim(); ++k) {
      const cxd ark = a(r, k);
      if (ark == cxd{0.0, 0.0}) continue;
      for (int c = 0; c < a.dim(); ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatch("comparing matrices of different dimensions");
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
  ComplexMatrix out = m;
  out += m.adjoint();
  out *= 0.5;
  return out;
}

Ket::Ket(std::vector<cxd> amplitudes) : a_(std::move(amplitudes)) {
  require_dim(dim());
  double n2 = 0.0;
  for (const cxd& v : a_) n2 += std::norm(v);
  if (std::abs(std::sqrt(n2) - 1.0) > tol::unit_norm)
    throw NotNormalized("ket norm deviates from 1 by more than " + std::to_string(tol::unit_norm));
}

Ket Ket::normalized(std::vector<cxd> amplitudes) {
  double n2 = 0.0;
  for (const cxd& v : amplitudes) n2 += std::norm(v);
  if (n2 <= 0.0) throw NotNormalized("cannot normalise the zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (cxd& v : amplitudes) v *= inv;
  return Ket(std::move(amplitudes), Unchecked{});
}

Ket Ket::basis(int dim, int index) {
  require_dim(dim);
  if (index < 0 || index >= dim) throw InvalidArgument("basis index out of range");
  std::vector<cxd> a(dim, 0.0);
  a[index] = 1.0;
  return Ket(std::move(a), Unchecked{});
}

cxd Ket::inner(const Ket& other) const {
  if (dim() != other.dim()) throw DimMismatch("inner product with mismatched dimensions");
  cxd s = 0.0;
  for (int i = 0; i < dim(); ++i) s += std::conj(a_[i]) * other.a_[i];
  return s;
}

ComplexMatrix Ket::outer() const {
  ComplexMatrix m(dim());
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < dim(); ++c) m(r, c) = a_[r] * std::conj(a_[c]);
  return m;
}

Ket tensor_product(const Ket& a, const Ket& b) {
  if (a.dim() != 2 || b.dim() != 2) throw DimMismatch("ket tensor product supports 2 x 2 only");
  std::vector<cxd> out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i * 2 + j] = a[i] * b[j];
  return Ket(std::move(out));
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw DimMismatch("matrix tensor product supports 2 x 2 factors only");
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(i * 2 + k, j * 2 + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep) {
  if (m.dim() != 4) throw DimMismatch("partial trace is defined for 4 x 4 operators");
  ComplexMatrix out(2);
  if (keep == Subsystem::B) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) out(i, j) += m(k * 2 + i, k * 2 + j);
  } else {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) out(i, j) += m(i * 2 + k, j * 2 + k);
  }
  return out;
}

}  // namespace qsd
