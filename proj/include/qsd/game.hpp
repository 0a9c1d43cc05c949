#pragma once

#include <array>
#include <vector>

#include "qsd/operators.hpp"

namespace qsd {

// Convex decomposition of a qubit state: weights plus component states.
class Ensemble {
 public:
  Ensemble(std::vector<double> weights, std::vector<DensityMatrix> states);

  int size() const { return static_cast<int>(weights_.size()); }
  double weight(int i) const { return weights_[i]; }
  const DensityMatrix& state(int i) const { return states_[i]; }
  DensityMatrix average() const;

 private:
  std::vector<double> weights_;
  std::vector<DensityMatrix> states_;
};

// Pure two-qubit state in Schmidt form:
//   |alpha> = sum_i sqrt(beta_i) |a_i> x |b_i>
// with beta descending and summing to one. The dense 4x4 projector is cached.
class BipartiteState {
 public:
  BipartiteState(std::vector<double> schmidt_coeffs, std::array<Ket, 2> alice_basis,
                 std::array<Ket, 2> bob_basis);
  // Purification of rho_b: Bob basis = eigenbasis of rho_b, Alice basis fixed
  // to the computational basis so outputs are reproducible.
  static BipartiteState purification_of(const DensityMatrix& rho_b);

  const std::vector<double>& schmidt_coeffs() const { return schmidt_; }
  const Ket& alice_basis(int i) const { return alice_[i]; }
  const Ket& bob_basis(int i) const { return bob_[i]; }
  const DensityMatrix& dense() const { return dense_; }

 private:
  std::vector<double> schmidt_;
  std::array<Ket, 2> alice_;
  std::array<Ket, 2> bob_;
  DensityMatrix dense_;
};

// One steering outcome: probability and the conditional state Bob holds.
// Outcomes with probability below tol::zero_prob carry a maximally mixed
// placeholder and are flagged, so assemblages stay total without dividing
// by vanishing probabilities.
struct ConditionalState {
  double prob;
  DensityMatrix state;
  bool placeholder = false;
};

// Conditional states per measurement setting. Per-setting probabilities are
// validated to sum to one; equality of the marginals across settings is a
// physical property measured by ns_residual, not enforced here (signaling
// assemblages must be representable so the residual can flag them).
class Assemblage {
 public:
  explicit Assemblage(std::vector<std::vector<ConditionalState>> settings);

  int settings() const { return static_cast<int>(settings_.size()); }
  const std::vector<ConditionalState>& setting(int a) const { return settings_[a]; }
  // sum_x P(x|a) sigma_{x|a} for one setting.
  ComplexMatrix marginal(int a) const;

 private:
  std::vector<std::vector<ConditionalState>> settings_;
};

enum class Verdict { Nonlocal, Inconclusive };

struct CertificateVerdict {
  double payoff = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

// Everything defining one instance of the two-ensemble guessing game.
struct GameInstance {
  Ket psi;                 // |0>
  Ket phi;                 // a|0> + b|1>
  double a;
  double b;
  double theta;            // Bob's measurement angle: |chi> = cos t |0> - sin t |1>
  double q1;
  double q2;
  DensityMatrix sigma_psi; // residual state of ensemble 1, orthogonal to E1
  DensityMatrix sigma_phi; // residual state of ensemble 2, orthogonal to E2
  Povm bob_povm;           // {E1, E2}
  DensityMatrix rho_b;     // the shared marginal both ensembles decompose
  BipartiteState state;    // purification Alice and Bob share
  std::array<Povm, 2> alice_povms;  // GHJW measurements steering to each ensemble
  double payoff_opt;
  double nc_bound;

  Ensemble ensemble1() const;
  Ensemble ensemble2() const;
};

// q1/(q1+q2) tr(E1 rho1) + q2/(q1+q2) tr(E2 rho2).
double payoff(const ComplexMatrix& e1, const ComplexMatrix& e2, const DensityMatrix& rho1,
              const DensityMatrix& rho2, double q1, double q2);

// (1 + sqrt(1 - 4 q1 q2 tr(rho1 rho2) / (q1+q2)^2)) / 2; for pure states this
// is the Helstrom bound at priors q_i/(q1+q2).
double optimal_payoff(const DensityMatrix& rho1, const DensityMatrix& rho2, double q1,
                      double q2);

// 1 - min{q1,q2}/(q1+q2) tr(rho1 rho2): the payoff ceiling for unsteerable
// (and any preparation-noncontextual) shared states.
double game_nc_bound(const DensityMatrix& rho1, const DensityMatrix& rho2, double q1,
                     double q2);

// Builds the optimal game for |phi> = a|0> + b|1>, 0 < b < 1. The shared-
// marginal constraint
//   q1 |0><0| + (1-q1)|chi_perp><chi_perp| = q2 |phi><phi| + (1-q2)|chi><chi|
// is solved by bisection over theta in (0, pi/4]: the diagonal entries fix a
// single weight q(theta) for both ensembles (the diagonal system is rank one,
// so distinct q1, q2 are not forced; the symmetric member is the one whose
// payoff matches optimal_payoff and maximises the certified margin), and the
// off-diagonal mismatch is driven below tol::ns_bisect. No closed forms are
// assumed; the relations the solve converges to (cos 2 theta = b,
// q = 1/(1+b)) are recorded as derived results in the tests and README.
GameInstance solve_optimal_instance(double b);

// Alice measurement that remotely prepares `target` on Bob's side of `state`:
// in the eigenbasis of rho_B, A_x is the transpose of
// rho_B^{-1/2} (w_x sigma_x) rho_B^{-1/2}, re-expressed in Alice's basis.
// Requires sum_x w_x sigma_x = tr_A(state) within tol::steering and a
// full-rank marginal.
Povm ghjw_povm(const Ensemble& target, const BipartiteState& state);

// sigma_{x|a} = tr_A[(E_{x|a} x I) rho_AB] / P(x|a) for every setting.
Assemblage steered_assemblage(const BipartiteState& state, const std::vector<Povm>& povms);

// Largest entrywise difference between per-setting marginals; zero for
// anything quantum mechanics can produce. Returns 0 for fewer than two
// settings.
double ns_residual(const Assemblage& assemblage);

// Nonlocal iff payoff_value > bound, strictly. Finite-statistics slack
// belongs to the simulation layer, not here.
CertificateVerdict certify(double payoff_value, double bound);

struct ProfileRow {
  double b;
  double beta1;
  double beta2;
  double entanglement_entropy;
  double payoff_opt;
  double nc_bound;
  double margin;
};

// One solved game per entry of b_grid.
std::vector<ProfileRow> entanglement_profile(const std::vector<double>& b_grid);

}  // namespace qsd
