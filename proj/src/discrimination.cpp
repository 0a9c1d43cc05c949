#include "qsd/discrimination.hpp"

#include <cmath>
#include <numbers>

namespace qsd {

namespace {

void validate(const DiscriminationInstance& inst) {
  if (!(inst.p1 >= 0.0 && inst.p1 <= 1.0))
    throw InvalidInstance("prior p1 must lie in [0,1]");
  if (inst.rho1.dim() != 2 || inst.rho2.dim() != 2)
    throw InvalidInstance("discrimination instances are qubit-only");
}

ComplexMatrix discriminator(const DiscriminationInstance& inst) {
  ComplexMatrix d = inst.rho1.mat();
  d *= inst.p1;
  ComplexMatrix d2 = inst.rho2.mat();
  d2 *= inst.p2();
  d -= d2;
  return d;
}

void validate(const ClassicalGuessInstance& inst) {
  if (inst.dist_a.size() != inst.dist_b.size() || inst.dist_a.empty())
    throw InvalidDistribution("distributions must share a nonempty label set");
  if (inst.prior_a < 0.0 || inst.prior_b < 0.0 ||
      std::abs(inst.prior_a + inst.prior_b - 1.0) > tol::weight_sum)
    throw InvalidDistribution("priors must be nonnegative and sum to 1");
  for (const std::vector<double>* d : {&inst.dist_a, &inst.dist_b}) {
    double sum = 0.0;
    for (double v : *d) {
      if (v < -tol::weight_sum) throw InvalidDistribution("negative probability entry");
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol::weight_sum)
      throw InvalidDistribution("distribution does not sum to 1");
  }
}

}  // namespace

double helstrom_bound(const DiscriminationInstance& inst) {
  validate(inst);
  return 0.5 * (1.0 + trace_norm(discriminator(inst)));
}

Povm helstrom_measurement(const DiscriminationInstance& inst) {
  validate(inst);
  const EigResult e = hermitian_eig(discriminator(inst));
  ComplexMatrix e1(2);
  for (std::size_t i = 0; i < e.values.size(); ++i)
    if (e.values[i] > tol::psd) e1 += e.vectors[i].outer();
  ComplexMatrix e2 = ComplexMatrix::identity(2);
  e2 -= e1;
  return Povm({e1, e2});
}

double nc_bound(const DiscriminationInstance& inst) {
  validate(inst);
  return 1.0 - std::min(inst.p1, inst.p2()) * overlap(inst.rho1, inst.rho2);
}

double success_probability(const DiscriminationInstance& inst, const Povm& m) {
  validate(inst);
  if (m.outcomes() != 2 || m.dim() != 2)
    throw InvalidPovm("success probability needs a two-outcome qubit POVM");
  return inst.p1 * expectation(m.effect(0), inst.rho1) +
         inst.p2() * expectation(m.effect(1), inst.rho2);
}

double brute_force_optimal(const DiscriminationInstance& inst, int grid_steps) {
  validate(inst);
  if (grid_steps < 100) throw InvalidArgument("brute force grid needs at least 100 steps");

  // success(chi) = p2 + <chi| p1 rho1 - p2 rho2 |chi> with
  // |chi> = (cos(t/2), e^{i phi} sin(t/2)); expand the quadratic form once so
  // the grid loop touches four reals per point.
  const ComplexMatrix d = discriminator(inst);
  const double a = d(0, 0).real();
  const double b = d(1, 1).real();
  const cxd off = 0.5 * (d(0, 1) + std::conj(d(1, 0)));
  const double cre = off.real();
  const double cim = off.imag();
  const double p2 = inst.p2();

  std::vector<double> cphi(grid_steps), sphi(grid_steps);
  for (int j = 0; j < grid_steps; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / grid_steps;
    cphi[j] = std::cos(phi);
    sphi[j] = std::sin(phi);
  }

  // Trivial POVMs {I,0} and {0,I}; the grid max below only ever grows it.
  double best = std::max(inst.p1, p2);
  for (int i = 0; i < grid_steps; ++i) {
    const double half = 0.5 * std::numbers::pi * i / (grid_steps - 1);
    const double c = std::cos(half);
    const double s = std::sin(half);
    const double base = p2 + c * c * a + s * s * b;
    const double pref = 2.0 * c * s;
    for (int j = 0; j < grid_steps; ++j) {
      const double val = base + pref * (cphi[j] * cre - sphi[j] * cim);
      if (val > best) best = val;
    }
  }
  return best;
}

double classical_guess_prob(const ClassicalGuessInstance& inst) {
  validate(inst);
  double miss = 0.0;
  for (std::size_t l = 0; l < inst.dist_a.size(); ++l)
    miss += std::min(inst.prior_a * inst.dist_a[l], inst.prior_b * inst.dist_b[l]);
  return 1.0 - miss;
}

}  // namespace qsd
