#pragma once

#include <vector>

#include "qsd/matrix.hpp"

namespace qsd {

// Spectral decomposition of a Hermitian matrix. Eigenvalues sorted descending,
// eigenvectors orthonormal in matching order. Within a degenerate cluster
// (gap below tol::degenerate_gap) the individual vectors are an arbitrary
// orthonormal choice; only the spectral projector is meaningful.
struct EigResult {
  std::vector<double> values;
  std::vector<Ket> vectors;
};

// Closed form for dimension 2, cyclic Jacobi sweeps for dimension 4.
EigResult hermitian_eig(const ComplexMatrix& m);

// The Jacobi engine directly, valid for both dimensions. Kept callable so the
// closed-form 2x2 branch can be cross-checked against an independent route.
EigResult jacobi_hermitian_eig(const ComplexMatrix& m);

// Sum of absolute eigenvalues.
double trace_norm(const ComplexMatrix& m);

struct SqrtPair {
  ComplexMatrix sqrt;       // principal square root
  ComplexMatrix pinv_sqrt;  // pseudo-inverse of the root, restricted to the support
};

// Square root and pseudo-inverse square root of a positive semidefinite
// matrix. Eigenvalues below tol::support_cut are treated as exact zeros.
SqrtPair matrix_sqrt_and_pinv_sqrt(const ComplexMatrix& m);

}  // namespace qsd
