#pragma once

#include <vector>

#include "qsd/operators.hpp"

namespace qsd {

// Two qubit states with prior probabilities {p1, 1-p1}.
struct DiscriminationInstance {
  DensityMatrix rho1;
  DensityMatrix rho2;
  double p1 = 0.5;

  double p2() const { return 1.0 - p1; }
};

// Two finite distributions over a shared label set, with priors.
struct ClassicalGuessInstance {
  double prior_a = 0.5;
  double prior_b = 0.5;
  std::vector<double> dist_a;
  std::vector<double> dist_b;
};

// Optimal success probability of minimal-error discrimination:
// (1 + ||p1 rho1 - p2 rho2||_1) / 2.
double helstrom_bound(const DiscriminationInstance& inst);

// Two-outcome POVM achieving the Helstrom bound. The first effect projects
// onto the strictly positive eigenspace of p1 rho1 - p2 rho2; eigenvalues
// within tol::psd of zero are assigned to the second outcome, so the output
// is reproducible when the discriminator operator is singular.
Povm helstrom_measurement(const DiscriminationInstance& inst);

// Upper bound on the success probability in any preparation-noncontextual
// model: 1 - min{p1, p2} tr(rho1 rho2).
double nc_bound(const DiscriminationInstance& inst);

// p1 tr(E1 rho1) + p2 tr(E2 rho2) for a two-outcome POVM.
double success_probability(const DiscriminationInstance& inst, const Povm& m);

// Independent oracle: maximises the success probability over projective qubit
// measurements on a (theta, phi) Bloch grid plus the two trivial POVMs. Stays
// clear of the eigendecomposition route entirely. grid_steps counts points
// per axis and must be at least 100.
double brute_force_optimal(const DiscriminationInstance& inst, int grid_steps);

// 1 - sum_l min{p(l|a) p(a), p(l|b) p(b)}: the best achievable probability of
// guessing which distribution a sample came from.
double classical_guess_prob(const ClassicalGuessInstance& inst);

}  // namespace qsd
