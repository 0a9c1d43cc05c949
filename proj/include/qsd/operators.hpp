#pragma once

#include <vector>

#include "qsd/eig.hpp"
#include "qsd/matrix.hpp"

namespace qsd {

// Hermitian, positive semidefinite, trace-one operator. Validated on
// construction: hermiticity to tol::hermitian, eigenvalues >= -tol::psd,
// trace within tol::trace_one of one.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m);
  static DensityMatrix pure(const Ket& k);
  static DensityMatrix maximally_mixed(int dim);
  // Symmetrises, clamps eigenvalues to [0, inf) and renormalises the trace.
  // For operators that are density matrices up to rounding noise (steered
  // conditional states, solver outputs) the adjustment is at machine level.
  static DensityMatrix cleaned(const ComplexMatrix& m);

  int dim() const { return m_.dim(); }
  const ComplexMatrix& mat() const { return m_; }

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

// tr(rho1 * rho2) by direct product trace; works for mixed inputs.
double overlap(const DensityMatrix& rho1, const DensityMatrix& rho2);

// Real part of tr(effect * rho); effect need not be trace-one.
double expectation(const ComplexMatrix& effect, const DensityMatrix& rho);

// Positive effects summing to the identity. Validated on construction:
// each effect Hermitian and PSD to tol::psd, closure to tol::povm_closure.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> effects);

  int outcomes() const { return static_cast<int>(effects_.size()); }
  int dim() const { return effects_.front().dim(); }
  const ComplexMatrix& effect(int i) const { return effects_[i]; }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }

 private:
  std::vector<ComplexMatrix> effects_;
};

}  // namespace qsd
