#pragma once

#include <array>
#include <cstdint>

#include "qsd/game.hpp"

namespace qsd {

struct SimConfig {
  std::int64_t shots = 100000;
  std::uint64_t seed = 0;
  double alpha = 1e-6;  // significance level of the nonlocality certificate
};

// Finite-shot record of one protocol run. counts[a][x][y] tallies setting a,
// Alice outcome x, Bob outcome y (all 0-based). n1/n2 count the scored shots:
// setting a with Alice outcome 0, i.e. the rounds whose prepared state is the
// designated discrimination state of that ensemble.
struct SimResult {
  std::int64_t shots_used = 0;
  std::array<std::array<std::array<std::int64_t, 2>, 2>, 2> counts{};
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  double payoff_estimate = 0.0;
  // CLT-style diagnostic only; the verdict uses the Hoeffding gap.
  double std_error = 1.0;
  // Effective sample size of the weighted two-group estimator:
  // 1 / (w1^2/n1 + w2^2/n2); zero when a group is empty.
  double n_eff = 0.0;
  double bound = 0.0;
  double p_value_bound = 1.0;
  Verdict verdict = Verdict::Inconclusive;
};

struct SimCertificate {
  Verdict verdict = Verdict::Inconclusive;
  double p_value_bound = 1.0;
  double required_gap = 0.0;
};

// Runs `shots` rounds against an assemblage: setting uniform in {0,1}, Alice
// outcome from P(x|a), Bob outcome from tr(E_y sigma_{x|a}). The payoff
// estimate recombines the per-ensemble conditional means with the exact
// weights q_i/(q1+q2). Deterministic in (seed, shots): shots are processed in
// fixed shards of 65536, each drawing from its own SplitMix64 substream, so
// the tally is independent of how shards would be scheduled.
SimResult simulate_assemblage(const Assemblage& assemblage, const Povm& bob_povm, double q1,
                              double q2, double bound, const SimConfig& cfg);

// Simulation of a solved game: steers the instance's bipartite state with its
// GHJW measurements and scores against its noncontextual bound.
SimResult simulate_game(const GameInstance& inst, const SimConfig& cfg);

// One-sided Hoeffding verdict: Nonlocal iff
//   payoff_estimate - bound >= sqrt(ln(1/alpha) / (2 n_eff)).
// p_value_bound reports exp(-2 gap^2 n_eff) for a positive gap.
SimCertificate certificate(const SimResult& res, double alpha);

// The unsteerable benchmark: same Alice statistics, but every conditional
// state is Bob's marginal (what a product state rho_A x rho_B yields). A
// sound certificate must stay Inconclusive on it.
Assemblage unsteerable_assemblage(const GameInstance& inst);

}  // namespace qsd
