#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qsd/errors.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

using cxd = std::complex<double>;

// Dense row-major complex matrix of dimension 2 or 4. Storage is a fixed
// 16-entry array, so values are cheap to copy and never allocate.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

  int dim() const { return dim_; }
  cxd& operator()(int r, int c) { return a_[r * dim_ + c]; }
  const cxd& operator()(int r, int c) const { return a_[r * dim_ + c]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cxd s);

  ComplexMatrix adjoint() const;
  cxd trace() const;
  bool is_hermitian(double tolerance = tol::hermitian) const;
  // Largest entry magnitude.
  double max_abs() const;

 private:
  int dim_;
  std::array<cxd, 16> a_{};
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cxd s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, cxd s);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// (m + m^dag)/2; removes rounding-level asymmetry before eigensolves.
ComplexMatrix symmetrized(const ComplexMatrix& m);

// Normalised state vector of dimension 2 or 4.
class Ket {
 public:
  explicit Ket(std::vector<cxd> amplitudes);            // must already be unit norm
  static Ket normalized(std::vector<cxd> amplitudes);   // scales to unit norm
  static Ket basis(int dim, int index);

  int dim() const { return static_cast<int>(a_.size()); }
  const cxd& operator[](int i) const { return a_[i]; }
  const std::vector<cxd>& amplitudes() const { return a_; }

  cxd inner(const Ket& other) const;  // <this|other>
  ComplexMatrix outer() const;        // |k><k|

 private:
  struct Unchecked {};
  Ket(std::vector<cxd> amplitudes, Unchecked) : a_(std::move(amplitudes)) {}
  std::vector<cxd> a_;
};

Ket tensor_product(const Ket& a, const Ket& b);

// Kronecker product of two 2x2 matrices; first factor is subsystem A.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

// Partial trace of a 4x4 operator over the complementary subsystem:
// keep == B returns tr_A(m), keep == A returns tr_B(m).
ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep);

}  // namespace qsd
