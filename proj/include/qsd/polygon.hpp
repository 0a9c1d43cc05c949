#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qsd/errors.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

// Point of the R^3 embedding the polygon models live in. States sit on the
// z = 1 plane, effects on z = 1/2, probabilities are plain dot products.
struct GptVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

GptVector operator+(const GptVector& a, const GptVector& b);
GptVector operator-(const GptVector& a, const GptVector& b);
GptVector operator*(double s, const GptVector& v);
double dot(const GptVector& a, const GptVector& b);
double max_abs_diff(const GptVector& a, const GptVector& b);

// Regular polygon model with n pure states
//   w_j = (k cos(2 pi j / n), k sin(2 pi j / n), 1),      k = sqrt(sec(pi/n)),
// and n pure effects
//   e_j = ((k/2) cos((2j-1) pi / n), (k/2) sin((2j-1) pi / n), 1/2),
// j = 1..n. For even n the effects pair up into binary measurements:
// e_j + e_{j+n/2} equals the unit effect.
class PolygonTheory {
 public:
  explicit PolygonTheory(int n);

  int n() const { return n_; }
  double k() const { return k_; }
  // 1-based indices as in the geometric construction; any integer is mapped
  // mod n back into {1..n}.
  const GptVector& state(int j) const { return states_[wrap(j)]; }
  const GptVector& effect(int j) const { return effects_[wrap(j)]; }
  const GptVector& unit() const { return unit_; }

 private:
  int wrap(int j) const;
  int n_;
  double k_;
  std::vector<GptVector> states_;
  std::vector<GptVector> effects_;
  GptVector unit_{0.0, 0.0, 1.0};
};

PolygonTheory polygon_theory(int n);

// e(w): the outcome probability rule of the model.
double gpt_prob(const GptVector& effect, const GptVector& state);

// The discrimination pair of the polygon construction:
//   sigma1 = p w_1 + (1-p) w_n,         sigma2 = p w_{n-1} + (1-p) w_n,
// with the complements built from the antipodal states (w_{j+n/2}).
struct PolygonScenario {
  double p = 0.0;
  GptVector sigma1, sigma2, sigma1_perp, sigma2_perp;
};

PolygonScenario polygon_scenario(const PolygonTheory& theory, double p);

// The hexagon instance, with its three binary measurements
// M1 = {e1, e4}, M2 = {e3, e6}, M3 = {e2, e5} and the closed-form entries
// c = 1 - p/2, s = (1+p)/2 of the outcome table.
struct HexagonScenario {
  double p = 0.0;
  GptVector sigma1, sigma1_perp, sigma2, sigma2_perp;
  std::array<std::pair<GptVector, GptVector>, 3> measurements;
  double c_value = 0.0;
  double s_value = 0.0;
};

HexagonScenario hexagon_scenario(double p);

// Outcome probabilities of e1, e6, e2 (rows) on sigma1, sigma2, sigma1_perp,
// sigma2_perp (columns), computed from dot products.
std::array<std::array<double, 4>, 3> hexagon_outcome_table(double p);

// p1 e(sigma1) + p2 ebar(sigma2) for a binary measurement {e, ebar}.
double gpt_success(const HexagonScenario& scenario, double p1,
                   const std::pair<GptVector, GptVector>& measurement);

// Noncontextual ceiling for the hexagon pair: 1 - min{p1,p2} (1 - p/2).
double hexagon_nc_bound(double p, double p1);

// Exhaustive oracle: the best success over all binary measurements built from
// extremal effects, {(e_j, u - e_j)}_j, plus the two trivial ones. A linear
// objective over a convex effect set peaks at extreme points, so this finite
// search is exact for the model.
double gpt_brute_force(const PolygonScenario& scenario, double p1, const PolygonTheory& theory);
double gpt_brute_force(const HexagonScenario& scenario, double p1, const PolygonTheory& theory);

struct AdvantageRow {
  double p = 0.0;
  double p1 = 0.0;
  double success = 0.0;
  double nc_bound = 0.0;
  double advantage = 0.0;
};

// Hexagon sweep over the cartesian product of the two grids: success of M3,
// the noncontextual bound, and their difference (p/4 at equal priors).
std::vector<AdvantageRow> advantage_scan(const std::vector<double>& p_grid,
                                         const std::vector<double>& p1_grid);

}  // namespace qsd
