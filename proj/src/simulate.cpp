#include "qsd/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "qsd/rng.hpp"

namespace qsd {

namespace {

constexpr std::int64_t kShardSize = 65536;

void apply_hoeffding(SimResult& res, double alpha) {
  const SimCertificate cert = certificate(res, alpha);
  res.verdict = cert.verdict;
  res.p_value_bound = cert.p_value_bound;
}

}  // namespace

SimResult simulate_assemblage(const Assemblage& assemblage, const Povm& bob_povm, double q1,
                              double q2, double bound, const SimConfig& cfg) {
  if (cfg.shots < 1) throw InvalidConfig("shots must be at least 1");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw InvalidConfig("alpha must lie in (0, 1)");
  if (assemblage.settings() != 2) throw InvalidConfig("the game has two settings");
  if (bob_povm.outcomes() != 2) throw InvalidConfig("Bob performs a two-outcome measurement");
  if (!(q1 > 0.0 && q2 > 0.0)) throw InvalidConfig("ensemble weights must be positive");

  // Per (setting, Alice outcome): outcome probability and Bob's conditional
  // click probability for E1. Sampling then needs three uniforms per shot.
  double p_alice_first[2];
  double p_bob_first[2][2];
  for (int a = 0; a < 2; ++a) {
    const auto& members = assemblage.setting(a);
    if (members.size() != 2) throw InvalidConfig("each setting needs two outcomes");
    p_alice_first[a] = std::clamp(members[0].prob, 0.0, 1.0);
    for (int x = 0; x < 2; ++x)
      p_bob_first[a][x] =
          std::clamp(expectation(bob_povm.effect(0), members[x].state), 0.0, 1.0);
  }

  SimResult res;
  res.shots_used = cfg.shots;
  res.bound = bound;

  const std::int64_t shards = (cfg.shots + kShardSize - 1) / kShardSize;
  for (std::int64_t shard = 0; shard < shards; ++shard) {
    SplitMix64 g(substream_seed(cfg.seed, static_cast<std::uint64_t>(shard)));
    const std::int64_t begin = shard * kShardSize;
    const std::int64_t end = std::min(begin + kShardSize, cfg.shots);
    for (std::int64_t shot = begin; shot < end; ++shot) {
      const int a = g.next_double() < 0.5 ? 0 : 1;
      const int x = g.next_double() < p_alice_first[a] ? 0 : 1;
      const int y = g.next_double() < p_bob_first[a][x] ? 0 : 1;
      ++res.counts[a][x][y];
    }
  }

  res.n1 = res.counts[0][0][0] + res.counts[0][0][1];
  res.n2 = res.counts[1][0][0] + res.counts[1][0][1];
  // Scored events: setting 0 pays on Bob outcome 0 (E1), setting 1 on outcome
  // 1 (E2), conditioned on Alice having prepared the designated state.
  const std::int64_t hits1 = res.counts[0][0][0];
  const std::int64_t hits2 = res.counts[1][0][1];
  const double w1 = q1 / (q1 + q2);
  const double w2 = q2 / (q1 + q2);

  if (res.n1 > 0 && res.n2 > 0) {
    const double m1 = static_cast<double>(hits1) / res.n1;
    const double m2 = static_cast<double>(hits2) / res.n2;
    res.payoff_estimate = w1 * m1 + w2 * m2;
    res.n_eff = 1.0 / (w1 * w1 / res.n1 + w2 * w2 / res.n2);
    res.std_error =
        std::sqrt(std::max(res.payoff_estimate * (1.0 - res.payoff_estimate), 0.0) / res.n_eff);
  } else if (res.n1 > 0 || res.n2 > 0) {
    // One ensemble never produced its designated state; report the other
    // conditional mean alone and refuse statistical confidence (n_eff = 0).
    const double m = res.n1 > 0 ? static_cast<double>(hits1) / res.n1
                                : static_cast<double>(hits2) / res.n2;
    res.payoff_estimate = m;
  }
  apply_hoeffding(res, cfg.alpha);
  return res;
}

SimResult simulate_game(const GameInstance& inst, const SimConfig& cfg) {
  const Assemblage assemblage =
      steered_assemblage(inst.state, {inst.alice_povms[0], inst.alice_povms[1]});
  return simulate_assemblage(assemblage, inst.bob_povm, inst.q1, inst.q2, inst.nc_bound, cfg);
}

SimCertificate certificate(const SimResult& res, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidConfig("alpha must lie in (0, 1)");
  SimCertificate cert;
  if (res.n_eff <= 0.0) return cert;
  cert.required_gap = std::sqrt(std::log(1.0 / alpha) / (2.0 * res.n_eff));
  const double gap = res.payoff_estimate - res.bound;
  if (gap > 0.0) cert.p_value_bound = std::min(1.0, std::exp(-2.0 * gap * gap * res.n_eff));
  if (gap >= cert.required_gap) cert.verdict = Verdict::Nonlocal;
  return cert;
}

Assemblage unsteerable_assemblage(const GameInstance& inst) {
  const DensityMatrix rho_a =
      DensityMatrix::cleaned(partial_trace(inst.state.dense().mat(), Subsystem::A));
  const DensityMatrix rho_b =
      DensityMatrix::cleaned(partial_trace(inst.state.dense().mat(), Subsystem::B));
  std::vector<std::vector<ConditionalState>> settings;
  for (const Povm& povm : {inst.alice_povms[0], inst.alice_povms[1]}) {
    std::vector<ConditionalState> members;
    for (const ComplexMatrix& e : povm.effects())
      members.push_back({std::clamp(expectation(e, rho_a), 0.0, 1.0), rho_b, false});
    settings.push_back(std::move(members));
  }
  return Assemblage(std::move(settings));
}

}  // namespace qsd
