#include "qsd/game.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsd {

namespace {

void validate_weights(double q1, double q2) {
  if (!(q1 > 0.0 && q1 <= 1.0 && q2 > 0.0 && q2 <= 1.0))
    throw InvalidWeights("ensemble weights must lie in (0, 1]");
}

double entropy_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

}  // namespace

Ensemble::Ensemble(std::vector<double> weights, std::vector<DensityMatrix> states)
    : weights_(std::move(weights)), states_(std::move(states)) {
  if (weights_.empty() || weights_.size() != states_.size())
    throw InvalidArgument("ensemble needs matching nonempty weights and states");
  double sum = 0.0;
  for (double w : weights_) {
    if (w < -tol::weight_sum) throw InvalidWeights("negative ensemble weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol::weight_sum)
    throw InvalidWeights("ensemble weights do not sum to 1");
  average();  // validates the mixture is a proper state
}

DensityMatrix Ensemble::average() const {
  ComplexMatrix avg(states_.front().dim());
  for (std::size_t i = 0; i < states_.size(); ++i)
    avg += weights_[i] * states_[i].mat();
  return DensityMatrix(avg);
}

BipartiteState::BipartiteState(std::vector<double> schmidt_coeffs,
                               std::array<Ket, 2> alice_basis, std::array<Ket, 2> bob_basis)
    : schmidt_(std::move(schmidt_coeffs)),
      alice_(std::move(alice_basis)),
      bob_(std::move(bob_basis)),
      dense_(DensityMatrix::maximally_mixed(4)) {
  if (schmidt_.size() != 2) throw InvalidArgument("two Schmidt coefficients expected");
  if (schmidt_[0] < schmidt_[1] || schmidt_[1] < -tol::psd ||
      std::abs(schmidt_[0] + schmidt_[1] - 1.0) > tol::trace_one)
    throw InvalidArgument("Schmidt coefficients must be descending, nonnegative, sum 1");
  for (const auto* basis : {&alice_, &bob_}) {
    if (std::abs((*basis)[0].inner((*basis)[1])) > tol::psd)
      throw InvalidArgument("basis kets are not orthogonal");
  }
  std::vector<cxd> amp(4, 0.0);
  for (int i = 0; i < 2; ++i) {
    const double c = std::sqrt(std::max(schmidt_[i], 0.0));
    const Ket prod = tensor_product(alice_[i], bob_[i]);
    for (int k = 0; k < 4; ++k) amp[k] += c * prod[k];
  }
  dense_ = DensityMatrix::pure(Ket::normalized(std::move(amp)));
}

BipartiteState BipartiteState::purification_of(const DensityMatrix& rho_b) {
  if (rho_b.dim() != 2) throw DimMismatch("purification supports qubit marginals");
  const EigResult e = hermitian_eig(rho_b.mat());
  return BipartiteState({std::max(e.values[0], 0.0), std::max(e.values[1], 0.0)},
                        {Ket::basis(2, 0), Ket::basis(2, 1)}, {e.vectors[0], e.vectors[1]});
}

Assemblage::Assemblage(std::vector<std::vector<ConditionalState>> settings)
    : settings_(std::move(settings)) {
  for (const auto& members : settings_) {
    if (members.empty()) throw InvalidArgument("assemblage setting without outcomes");
    double sum = 0.0;
    for (const ConditionalState& m : members) {
      if (m.prob < -tol::trace_one) throw InvalidArgument("negative outcome probability");
      sum += m.prob;
    }
    if (std::abs(sum - 1.0) > tol::trace_one)
      throw InvalidArgument("outcome probabilities of a setting do not sum to 1");
  }
}

ComplexMatrix Assemblage::marginal(int a) const {
  ComplexMatrix sum(2);
  for (const ConditionalState& m : settings_[a])
    if (!m.placeholder) sum += m.prob * m.state.mat();
  return sum;
}

Ensemble GameInstance::ensemble1() const {
  return Ensemble({q1, 1.0 - q1}, {DensityMatrix::pure(psi), sigma_psi});
}

Ensemble GameInstance::ensemble2() const {
  return Ensemble({q2, 1.0 - q2}, {DensityMatrix::pure(phi), sigma_phi});
}

double payoff(const ComplexMatrix& e1, const ComplexMatrix& e2, const DensityMatrix& rho1,
              const DensityMatrix& rho2, double q1, double q2) {
  validate_weights(q1, q2);
  const Povm m({e1, e2});  // validates the measurement
  const double w1 = q1 / (q1 + q2);
  return w1 * expectation(m.effect(0), rho1) + (1.0 - w1) * expectation(m.effect(1), rho2);
}

double optimal_payoff(const DensityMatrix& rho1, const DensityMatrix& rho2, double q1,
                      double q2) {
  validate_weights(q1, q2);
  const double t = std::clamp(overlap(rho1, rho2), 0.0, 1.0);
  const double disc = std::max(1.0 - 4.0 * q1 * q2 * t / ((q1 + q2) * (q1 + q2)), 0.0);
  return 0.5 * (1.0 + std::sqrt(disc));
}

double game_nc_bound(const DensityMatrix& rho1, const DensityMatrix& rho2, double q1,
                     double q2) {
  validate_weights(q1, q2);
  return 1.0 - std::min(q1, q2) / (q1 + q2) * overlap(rho1, rho2);
}

GameInstance solve_optimal_instance(double b) {
  if (!(b > 0.0 && b < 1.0))
    throw InvalidArgument("solve_optimal_instance needs b strictly inside (0, 1)");
  const double a = std::sqrt(1.0 - b * b);

  // Shared diagonal equation of the two decompositions, solved for the single
  // weight both ensembles carry: q (cos^2 - sin^2 + b^2) = cos^2 - sin^2.
  const auto weight_at = [b](double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return (c * c - s * s) / (b * b + c * c - s * s);
  };
  // Off-diagonal mismatch of the two ensemble matrices at that weight.
  const auto residual = [a, b, weight_at](double theta) {
    const double q = weight_at(theta);
    const double sc = std::sin(theta) * std::cos(theta);
    return 2.0 * (1.0 - q) * sc - q * a * b;
  };

  double lo = 1e-12;
  double hi = 0.25 * std::numbers::pi;
  double flo = residual(lo);
  if (!(flo < 0.0) || !(residual(hi) > 0.0))
    throw NoSolution("ensemble constraint is not bracketed on (0, pi/4]");
  double theta = 0.5 * (lo + hi);
  double f = residual(theta);
  for (int it = 0; it < 300 && std::abs(f) > tol::ns_bisect; ++it) {
    if ((f < 0.0) == (flo < 0.0)) {
      lo = theta;
      flo = f;
    } else {
      hi = theta;
    }
    theta = 0.5 * (lo + hi);
    f = residual(theta);
  }
  if (std::abs(f) > tol::ns_bisect)
    throw NoSolution("bisection stalled above the residual target");

  const double q = weight_at(theta);
  const Ket psi = Ket::basis(2, 0);
  const Ket phi({cxd(a), cxd(b)});
  const Ket chi({cxd(std::cos(theta)), cxd(-std::sin(theta))});
  const Ket chi_perp({cxd(std::sin(theta)), cxd(std::cos(theta))});

  const DensityMatrix sigma_psi = DensityMatrix::pure(chi_perp);
  const DensityMatrix sigma_phi = DensityMatrix::pure(chi);

  ComplexMatrix lhs = psi.outer();
  lhs *= q;
  lhs += (1.0 - q) * sigma_psi.mat();
  ComplexMatrix rhs = phi.outer();
  rhs *= q;
  rhs += (1.0 - q) * sigma_phi.mat();
  if (max_abs_diff(lhs, rhs) > tol::steering)
    throw NoSolution("solved ensembles do not share a marginal");
  const DensityMatrix rho_b = DensityMatrix::cleaned(0.5 * (lhs + rhs));

  BipartiteState state = BipartiteState::purification_of(rho_b);
  const Ensemble ens1({q, 1.0 - q}, {DensityMatrix::pure(psi), sigma_psi});
  const Ensemble ens2({q, 1.0 - q}, {DensityMatrix::pure(phi), sigma_phi});
  std::array<Povm, 2> alice{ghjw_povm(ens1, state), ghjw_povm(ens2, state)};

  GameInstance inst{psi,
                    phi,
                    a,
                    b,
                    theta,
                    q,
                    q,
                    sigma_psi,
                    sigma_phi,
                    Povm({chi.outer(), chi_perp.outer()}),
                    rho_b,
                    std::move(state),
                    std::move(alice),
                    optimal_payoff(DensityMatrix::pure(psi), DensityMatrix::pure(phi), q, q),
                    game_nc_bound(DensityMatrix::pure(psi), DensityMatrix::pure(phi), q, q)};

  if (expectation(inst.bob_povm.effect(0), inst.sigma_psi) > tol::steering ||
      expectation(inst.bob_povm.effect(1), inst.sigma_phi) > tol::steering)
    throw NoSolution("residual states are not orthogonal to the measurement");
  return inst;
}

Povm ghjw_povm(const Ensemble& target, const BipartiteState& state) {
  const DensityMatrix rho_b =
      DensityMatrix::cleaned(partial_trace(state.dense().mat(), Subsystem::B));
  if (max_abs_diff(target.average().mat(), rho_b.mat()) > tol::steering)
    throw MarginalMismatch("ensemble average does not match Bob's marginal");
  const EigResult spectrum = hermitian_eig(rho_b.mat());
  if (spectrum.values.back() <= tol::degenerate_gap)
    throw RankDeficient("Bob's marginal is (numerically) rank deficient");
  const ComplexMatrix inv_sqrt = matrix_sqrt_and_pinv_sqrt(rho_b.mat()).pinv_sqrt;

  std::vector<ComplexMatrix> effects;
  for (int x = 0; x < target.size(); ++x) {
    ComplexMatrix weighted = target.state(x).mat();
    weighted *= target.weight(x);
    const ComplexMatrix m = inv_sqrt * weighted * inv_sqrt;
    // m_ij in Bob's Schmidt basis; the transpose lives on Alice's side:
    // A_x = sum_ij m_ij |a_j><a_i|.
    ComplexMatrix ax(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cxd mij = 0.0;
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c)
            mij += std::conj(state.bob_basis(i)[r]) * m(r, c) * state.bob_basis(j)[c];
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c)
            ax(r, c) += mij * state.alice_basis(j)[r] * std::conj(state.alice_basis(i)[c]);
      }
    effects.push_back(symmetrized(ax));
  }
  return Povm(std::move(effects));
}

Assemblage steered_assemblage(const BipartiteState& state, const std::vector<Povm>& povms) {
  std::vector<std::vector<ConditionalState>> settings;
  for (const Povm& povm : povms) {
    if (povm.dim() != 2) throw InvalidPovm("Alice measurements act on a qubit");
    std::vector<ConditionalState> members;
    for (const ComplexMatrix& e : povm.effects()) {
      const ComplexMatrix g = tensor_product(e, ComplexMatrix::identity(2)) * state.dense().mat();
      const double p = g.trace().real();
      if (p < tol::zero_prob) {
        members.push_back({0.0, DensityMatrix::maximally_mixed(2), true});
      } else {
        ComplexMatrix cond = partial_trace(g, Subsystem::B);
        cond *= 1.0 / p;
        members.push_back({p, DensityMatrix::cleaned(cond), false});
      }
    }
    settings.push_back(std::move(members));
  }
  return Assemblage(std::move(settings));
}

double ns_residual(const Assemblage& assemblage) {
  double worst = 0.0;
  for (int a = 0; a < assemblage.settings(); ++a)
    for (int b = a + 1; b < assemblage.settings(); ++b)
      worst = std::max(worst, max_abs_diff(assemblage.marginal(a), assemblage.marginal(b)));
  return worst;
}

CertificateVerdict certify(double payoff_value, double bound) {
  if (!(payoff_value >= 0.0 && payoff_value <= 1.0 && bound >= 0.0 && bound <= 1.0))
    throw InvalidArgument("payoff and bound must lie in [0, 1]");
  CertificateVerdict v;
  v.payoff = payoff_value;
  v.bound = bound;
  v.margin = payoff_value - bound;
  v.verdict = v.margin > 0.0 ? Verdict::Nonlocal : Verdict::Inconclusive;
  return v;
}

std::vector<ProfileRow> entanglement_profile(const std::vector<double>& b_grid) {
  std::vector<ProfileRow> rows;
  rows.reserve(b_grid.size());
  for (double b : b_grid) {
    const GameInstance inst = solve_optimal_instance(b);
    const std::vector<double>& beta = inst.state.schmidt_coeffs();
    rows.push_back({b, beta[0], beta[1], entropy_bits(beta), inst.payoff_opt, inst.nc_bound,
                    inst.payoff_opt - inst.nc_bound});
  }
  return rows;
}

}  // namespace qsd
