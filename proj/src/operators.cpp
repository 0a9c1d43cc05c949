#include "qsd/operators.hpp"

#include <cmath>

namespace qsd {

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : m_(m) {
  if (!m_.is_hermitian()) throw NotHermitian("density matrix is not Hermitian");
  if (std::abs(m_.trace().real() - 1.0) > tol::trace_one ||
      std::abs(m_.trace().imag()) > tol::trace_one)
    throw NotNormalized("density matrix trace deviates from 1");
  const EigResult e = hermitian_eig(m_);
  if (e.values.back() < -tol::psd)
    throw NotPsd("density matrix has eigenvalue " + std::to_string(e.values.back()));
}

DensityMatrix DensityMatrix::pure(const Ket& k) {
  return DensityMatrix(k.outer(), Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / dim;
  return DensityMatrix(std::move(m), Unchecked{});
}

DensityMatrix DensityMatrix::cleaned(const ComplexMatrix& m) {
  const EigResult e = hermitian_eig(symmetrized(m));
  ComplexMatrix out(m.dim());
  double total = 0.0;
  for (double lam : e.values) total += std::max(lam, 0.0);
  if (total <= 0.0) throw NotPsd("operator has no positive part to normalise");
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    const double lam = std::max(e.values[i], 0.0) / total;
    if (lam > 0.0) out += lam * e.vectors[i].outer();
  }
  return DensityMatrix(std::move(out), Unchecked{});
}

double overlap(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim()) throw DimMismatch("overlap of mismatched dimensions");
  cxd t = 0.0;
  for (int i = 0; i < rho1.dim(); ++i)
    for (int j = 0; j < rho1.dim(); ++j) t += rho1.mat()(i, j) * rho2.mat()(j, i);
  return t.real();
}

double expectation(const ComplexMatrix& effect, const DensityMatrix& rho) {
  if (effect.dim() != rho.dim()) throw DimMismatch("expectation of mismatched dimensions");
  cxd t = 0.0;
  for (int i = 0; i < effect.dim(); ++i)
    for (int j = 0; j < effect.dim(); ++j) t += effect(i, j) * rho.mat()(j, i);
  return t.real();
}

Povm::Povm(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw InvalidPovm("POVM needs at least one effect");
  const int d = effects_.front().dim();
  ComplexMatrix sum(d);
  for (const ComplexMatrix& e : effects_) {
    if (e.dim() != d) throw InvalidPovm("POVM effects have mixed dimensions");
    if (!e.is_hermitian(tol::psd)) throw InvalidPovm("POVM effect is not Hermitian");
    const EigResult ev = hermitian_eig(symmetrized(e));
    if (ev.values.back() < -tol::psd)
      throw InvalidPovm("POVM effect has eigenvalue " + std::to_string(ev.values.back()));
    sum += e;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(d)) > tol::povm_closure)
    throw InvalidPovm("POVM effects do not sum to the identity");
}

}  // namespace qsd
