#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "qsd/discrimination.hpp"
#include "qsd/operators.hpp"
#include "qsd/rng.hpp"

namespace qsd::testing {

// Haar-uniform pure qubit state.
inline Ket random_pure(SplitMix64& g) {
  const double th = std::acos(1.0 - 2.0 * g.next_double());
  const double ph = 2.0 * std::numbers::pi * g.next_double();
  return Ket({cxd(std::cos(th / 2.0)),
              std::polar(std::sin(th / 2.0), ph)});
}

// Mixed qubit state, uniform over the Bloch ball.
inline DensityMatrix random_mixed(SplitMix64& g) {
  const double r = std::cbrt(g.next_double());
  const double th = std::acos(1.0 - 2.0 * g.next_double());
  const double ph = 2.0 * std::numbers::pi * g.next_double();
  const double x = r * std::sin(th) * std::cos(ph);
  const double y = r * std::sin(th) * std::sin(ph);
  const double z = r * std::cos(th);
  ComplexMatrix m(2);
  m(0, 0) = 0.5 * (1.0 + z);
  m(1, 1) = 0.5 * (1.0 - z);
  m(0, 1) = 0.5 * cxd(x, -y);
  m(1, 0) = 0.5 * cxd(x, y);
  return DensityMatrix(m);
}

inline ComplexMatrix random_hermitian(SplitMix64& g, int dim) {
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    m(r, r) = 2.0 * g.next_double() - 1.0;
    for (int c = r + 1; c < dim; ++c) {
      const cxd v(2.0 * g.next_double() - 1.0, 2.0 * g.next_double() - 1.0);
      m(r, c) = v;
      m(c, r) = std::conj(v);
    }
  }
  return m;
}

// Generic two-outcome qubit POVM: a random Hermitian rescaled into [0, I].
inline Povm random_two_outcome_povm(SplitMix64& g) {
  const ComplexMatrix h = random_hermitian(g, 2);
  const EigResult e = hermitian_eig(h);
  const double lo = e.values.back();
  const double span = e.values.front() - lo;
  ComplexMatrix e1(2);
  if (span > 1e-9) {
    e1 = h;
    e1 -= lo * ComplexMatrix::identity(2);
    e1 *= 1.0 / span;
  } else {
    e1 = 0.5 * ComplexMatrix::identity(2);
  }
  ComplexMatrix e2 = ComplexMatrix::identity(2);
  e2 -= e1;
  return Povm({e1, e2});
}

inline DiscriminationInstance random_pure_instance(SplitMix64& g) {
  return {DensityMatrix::pure(random_pure(g)), DensityMatrix::pure(random_pure(g)),
          g.next_double()};
}

inline DiscriminationInstance random_mixed_instance(SplitMix64& g) {
  return {random_mixed(g), random_mixed(g), g.next_double()};
}

// Orthonormal qubit basis with a Haar-random first vector.
inline std::array<Ket, 2> random_basis(SplitMix64& g) {
  const Ket v = random_pure(g);
  return {v, Ket({-std::conj(v[1]), std::conj(v[0])})};
}

}  // namespace qsd::testing
