#include "qsd/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsd {

namespace {

void require_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidP("mixing parameter p must lie in [0, 1]");
}

void require_prior(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw InvalidP("prior p1 must lie in [0, 1]");
}

double checked_prob(const GptVector& e, const GptVector& w) {
  const double v = gpt_prob(e, w);
  if (v < -tol::gpt || v > 1.0 + tol::gpt)
    throw OutOfRange("effect-state pairing left [0, 1]: " + std::to_string(v));
  return v;
}

double binary_success(const GptVector& e, const GptVector& ebar, const GptVector& s1,
                      const GptVector& s2, double p1) {
  return p1 * checked_prob(e, s1) + (1.0 - p1) * checked_prob(ebar, s2);
}

double brute_force(const GptVector& s1, const GptVector& s2, double p1,
                   const PolygonTheory& theory) {
  require_prior(p1);
  const GptVector zero{};
  double best = std::max(binary_success(theory.unit(), zero, s1, s2, p1),
                         binary_success(zero, theory.unit(), s1, s2, p1));
  for (int j = 1; j <= theory.n(); ++j) {
    const double v =
        binary_success(theory.effect(j), theory.unit() - theory.effect(j), s1, s2, p1);
    if (v > best) best = v;
  }
  return best;
}

}  // namespace

GptVector operator+(const GptVector& a, const GptVector& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

GptVector operator-(const GptVector& a, const GptVector& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

GptVector operator*(double s, const GptVector& v) { return {s * v.x, s * v.y, s * v.z}; }

double dot(const GptVector& a, const GptVector& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

double max_abs_diff(const GptVector& a, const GptVector& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

int PolygonTheory::wrap(int j) const {
  int m = (j - 1) % n_;
  if (m < 0) m += n_;
  return m;
}

PolygonTheory::PolygonTheory(int n) : n_(n) {
  if (n % 2 != 0)
    throw OddNUnsupported("the paired-effect construction needs an even polygon");
  if (n < 4 || n > 64) throw InvalidArgument("polygon size supported for even n in [4, 64]");
  k_ = std::sqrt(1.0 / std::cos(std::numbers::pi / n));
  for (int j = 1; j <= n; ++j) {
    const double sa = 2.0 * std::numbers::pi * j / n;
    const double ea = (2.0 * j - 1.0) * std::numbers::pi / n;
    states_.push_back({k_ * std::cos(sa), k_ * std::sin(sa), 1.0});
    effects_.push_back({0.5 * k_ * std::cos(ea), 0.5 * k_ * std::sin(ea), 0.5});
  }
  // Construction self-checks: probabilities in range, e_j filters w_j and
  // w_{j-1} deterministically, antipodal effects close to the unit.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) checked_prob(effect(i), state(j));
    if (std::abs(gpt_prob(effect(i), state(i)) - 1.0) > tol::gpt ||
        std::abs(gpt_prob(effect(i), state(i - 1)) - 1.0) > tol::gpt)
      throw OutOfRange("polygon effect does not filter its neighbouring states");
    if (max_abs_diff(effect(i) + effect(i + n / 2), unit_) > tol::gpt)
      throw OutOfRange("antipodal effects do not sum to the unit");
  }
}

PolygonTheory polygon_theory(int n) { return PolygonTheory(n); }

double gpt_prob(const GptVector& effect, const GptVector& state) { return dot(effect, state); }

PolygonScenario polygon_scenario(const PolygonTheory& theory, double p) {
  require_p(p);
  const int n = theory.n();
  PolygonScenario s;
  s.p = p;
  s.sigma1 = p * theory.state(1) + (1.0 - p) * theory.state(n);
  s.sigma2 = p * theory.state(n - 1) + (1.0 - p) * theory.state(n);
  s.sigma1_perp = p * theory.state(1 + n / 2) + (1.0 - p) * theory.state(n / 2);
  s.sigma2_perp = p * theory.state(n - 1 + n / 2) + (1.0 - p) * theory.state(n / 2);
  return s;
}

HexagonScenario hexagon_scenario(double p) {
  require_p(p);
  const PolygonTheory hx = polygon_theory(6);
  const PolygonScenario base = polygon_scenario(hx, p);
  HexagonScenario s;
  s.p = p;
  s.sigma1 = base.sigma1;
  s.sigma1_perp = base.sigma1_perp;
  s.sigma2 = base.sigma2;
  s.sigma2_perp = base.sigma2_perp;
  s.measurements = {std::pair{hx.effect(1), hx.effect(4)}, {hx.effect(3), hx.effect(6)},
                    {hx.effect(2), hx.effect(5)}};
  s.c_value = 1.0 - p / 2.0;
  s.s_value = (1.0 + p) / 2.0;
  // Both pairs average to the maximally mixed state.
  const GptVector center{0.0, 0.0, 1.0};
  if (max_abs_diff(0.5 * s.sigma1 + 0.5 * s.sigma1_perp, center) > tol::gpt ||
      max_abs_diff(0.5 * s.sigma2 + 0.5 * s.sigma2_perp, center) > tol::gpt)
    throw OutOfRange("scenario pairs do not mix to the centre state");
  return s;
}

std::array<std::array<double, 4>, 3> hexagon_outcome_table(double p) {
  const HexagonScenario s = hexagon_scenario(p);
  const PolygonTheory hx = polygon_theory(6);
  const std::array<GptVector, 3> rows{hx.effect(1), hx.effect(6), hx.effect(2)};
  const std::array<GptVector, 4> cols{s.sigma1, s.sigma2, s.sigma1_perp, s.sigma2_perp};
  std::array<std::array<double, 4>, 3> table{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) table[r][c] = checked_prob(rows[r], cols[c]);
  return table;
}

double gpt_success(const HexagonScenario& scenario, double p1,
                   const std::pair<GptVector, GptVector>& measurement) {
  require_prior(p1);
  const GptVector unit{0.0, 0.0, 1.0};
  if (max_abs_diff(measurement.first + measurement.second, unit) > tol::gpt)
    throw InvalidMeasurement("effects do not form a binary measurement");
  return binary_success(measurement.first, measurement.second, scenario.sigma1,
                        scenario.sigma2, p1);
}

double hexagon_nc_bound(double p, double p1) {
  require_p(p);
  require_prior(p1);
  return 1.0 - std::min(p1, 1.0 - p1) * (1.0 - p / 2.0);
}

double gpt_brute_force(const PolygonScenario& scenario, double p1,
                       const PolygonTheory& theory) {
  return brute_force(scenario.sigma1, scenario.sigma2, p1, theory);
}

double gpt_brute_force(const HexagonScenario& scenario, double p1,
                       const PolygonTheory& theory) {
  return brute_force(scenario.sigma1, scenario.sigma2, p1, theory);
}

std::vector<AdvantageRow> advantage_scan(const std::vector<double>& p_grid,
                                         const std::vector<double>& p1_grid) {
  std::vector<AdvantageRow> rows;
  rows.reserve(p_grid.size() * p1_grid.size());
  for (double p : p_grid) {
    const HexagonScenario s = hexagon_scenario(p);
    for (double p1 : p1_grid) {
      const double success = gpt_success(s, p1, s.measurements[2]);
      const double nc = hexagon_nc_bound(p, p1);
      rows.push_back({p, p1, success, nc, success - nc});
    }
  }
  return rows;
}

}  // namespace qsd
