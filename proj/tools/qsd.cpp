// Command-line front end: state-discrimination bounds, the two-ensemble
// guessing game (solve / simulate), and the polygon-model scans. All reports
// are deterministic: numbers are rounded to 12 significant digits before
// serialisation and key order is fixed, so identical invocations produce
// byte-identical output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsd/discrimination.hpp"
#include "qsd/game.hpp"
#include "qsd/polygon.hpp"
#include "qsd/simulate.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Round to 12 significant digits so the JSON layer serialises a stable,
// golden-file-friendly value.
double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

const char* verdict_name(qsd::Verdict v) {
  return v == qsd::Verdict::Nonlocal ? "Nonlocal" : "Inconclusive";
}

std::vector<double> unit_grid(int steps) {
  if (steps <= 1) return {0.5};
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) g[i] = static_cast<double>(i) / (steps - 1);
  return g;
}

// Interior grid for the state parameter b: steps points strictly inside
// (0, 1); steps = 9 gives 0.1, 0.2, ..., 0.9.
std::vector<double> interior_grid(int steps) {
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) g[i] = (i + 1.0) / (steps + 1.0);
  return g;
}

struct OutputOptions {
  std::string format = "json";
  std::string path;
};

struct Report {
  ordered_json json;
  std::string csv;
};

void add_output_flags(CLI::App* cmd, OutputOptions* out) {
  cmd->add_option("--format", out->format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", out->path, "Write the report to a file instead of stdout");
}

void emit(const Report& report, const OutputOptions& out) {
  const std::string payload =
      out.format == "csv" ? report.csv : report.json.dump(2) + "\n";
  if (out.path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw qsd::InvalidArgument("cannot open output file: " + out.path);
    f << payload;
  }
}

ordered_json report_head(const std::string& command, ordered_json inputs) {
  ordered_json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  return j;
}

ordered_json json_matrix(const qsd::ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.dim(); ++c)
      row.push_back({round12(m(r, c).real()), round12(m(r, c).imag())});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

// ---------------------------------------------------------------------------
// Subcommand handlers

struct BoundsArgs {
  double b = 0.0;
  double prior = 0.5;
  std::vector<double> q;  // optional {q1, q2}
};

Report run_bounds(const BoundsArgs& args) {
  const double a = std::sqrt(std::max(1.0 - args.b * args.b, 0.0));
  const qsd::DensityMatrix rho1 = qsd::DensityMatrix::pure(qsd::Ket::basis(2, 0));
  const qsd::DensityMatrix rho2 =
      qsd::DensityMatrix::pure(qsd::Ket({qsd::cxd(a), qsd::cxd(args.b)}));

  double helstrom = 0.0, nc = 0.0;
  ordered_json inputs;
  inputs["b"] = round12(args.b);
  if (args.q.empty()) {
    const qsd::DiscriminationInstance inst{rho1, rho2, args.prior};
    helstrom = qsd::helstrom_bound(inst);
    nc = qsd::nc_bound(inst);
    inputs["prior"] = round12(args.prior);
  } else {
    helstrom = qsd::optimal_payoff(rho1, rho2, args.q[0], args.q[1]);
    nc = qsd::game_nc_bound(rho1, rho2, args.q[0], args.q[1]);
    inputs["q1"] = round12(args.q[0]);
    inputs["q2"] = round12(args.q[1]);
  }

  Report rep;
  rep.json = report_head("bounds", std::move(inputs));
  rep.json["results"] = {{"helstrom", round12(helstrom)},
                         {"nc", round12(nc)},
                         {"gap", round12(helstrom - nc)}};
  rep.csv = csv_join({"helstrom", "nc", "gap"}) +
            csv_join({fmt12(helstrom), fmt12(nc), fmt12(helstrom - nc)});
  return rep;
}

double steering_residual(const qsd::GameInstance& inst) {
  double worst = 0.0;
  const std::array<qsd::Ensemble, 2> targets{inst.ensemble1(), inst.ensemble2()};
  for (int a = 0; a < 2; ++a) {
    for (int x = 0; x < targets[a].size(); ++x) {
      const qsd::ComplexMatrix g =
          qsd::tensor_product(inst.alice_povms[a].effect(x), qsd::ComplexMatrix::identity(2)) *
          inst.state.dense().mat();
      qsd::ComplexMatrix steered = qsd::partial_trace(g, qsd::Subsystem::B);
      qsd::ComplexMatrix want = targets[a].state(x).mat();
      want *= targets[a].weight(x);
      worst = std::max(worst, qsd::max_abs_diff(steered, want));
    }
  }
  return worst;
}

Report run_game_solve(double b) {
  const qsd::GameInstance inst = qsd::solve_optimal_instance(b);
  const double achieved =
      qsd::payoff(inst.bob_povm.effect(0), inst.bob_povm.effect(1),
                  qsd::DensityMatrix::pure(inst.psi), qsd::DensityMatrix::pure(inst.phi),
                  inst.q1, inst.q2);
  const qsd::CertificateVerdict verdict = qsd::certify(achieved, inst.nc_bound);
  const qsd::Assemblage assemblage =
      qsd::steered_assemblage(inst.state, {inst.alice_povms[0], inst.alice_povms[1]});
  const std::vector<double>& beta = inst.state.schmidt_coeffs();
  const double entropy = -(beta[0] > 0 ? beta[0] * std::log2(beta[0]) : 0.0) -
                         (beta[1] > 0 ? beta[1] * std::log2(beta[1]) : 0.0);

  Report rep;
  rep.json = report_head("game-solve", {{"b", round12(b)}});
  ordered_json& r = rep.json["results"];
  r["a"] = round12(inst.a);
  r["b"] = round12(inst.b);
  r["theta"] = round12(inst.theta);
  r["q1"] = round12(inst.q1);
  r["q2"] = round12(inst.q2);
  r["schmidt_coeffs"] = {round12(beta[0]), round12(beta[1])};
  r["entanglement_entropy"] = round12(entropy);
  r["payoff"] = round12(achieved);
  r["payoff_opt"] = round12(inst.payoff_opt);
  r["nc_bound"] = round12(inst.nc_bound);
  r["margin"] = round12(verdict.margin);
  r["verdict"] = verdict_name(verdict.verdict);
  r["ns_residual"] = round12(qsd::ns_residual(assemblage));
  r["steering_residual"] = round12(steering_residual(inst));
  r["rho_b"] = json_matrix(inst.rho_b.mat());

  rep.csv = csv_join({"b", "a", "theta", "q1", "q2", "beta1", "beta2", "entropy", "payoff",
                      "payoff_opt", "nc_bound", "margin", "ns_residual", "verdict"}) +
            csv_join({fmt12(inst.b), fmt12(inst.a), fmt12(inst.theta), fmt12(inst.q1),
                      fmt12(inst.q2), fmt12(beta[0]), fmt12(beta[1]), fmt12(entropy),
                      fmt12(achieved), fmt12(inst.payoff_opt), fmt12(inst.nc_bound),
                      fmt12(verdict.margin), fmt12(qsd::ns_residual(assemblage)),
                      verdict_name(verdict.verdict)});
  return rep;
}

Report run_game_simulate(double b, const qsd::SimConfig& cfg) {
  const qsd::GameInstance inst = qsd::solve_optimal_instance(b);
  const qsd::SimResult res = qsd::simulate_game(inst, cfg);

  Report rep;
  rep.json = report_head("game-simulate", {{"b", round12(b)},
                                           {"shots", res.shots_used},
                                           {"seed", cfg.seed},
                                           {"alpha", round12(cfg.alpha)}});
  ordered_json& r = rep.json["results"];
  r["payoff_estimate"] = round12(res.payoff_estimate);
  r["std_error"] = round12(res.std_error);
  r["n1"] = res.n1;
  r["n2"] = res.n2;
  r["n_eff"] = round12(res.n_eff);
  r["bound"] = round12(res.bound);
  r["gap"] = round12(res.payoff_estimate - res.bound);
  r["p_value_bound"] = round12(res.p_value_bound);
  r["verdict"] = verdict_name(res.verdict);
  ordered_json counts = ordered_json::array();
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        counts.push_back({{"setting", a + 1},
                          {"alice_outcome", x + 1},
                          {"bob_outcome", y + 1},
                          {"count", res.counts[a][x][y]}});
  r["counts"] = std::move(counts);
  rep.json["seed"] = cfg.seed;

  rep.csv =
      csv_join({"b", "shots", "seed", "alpha", "payoff_estimate", "std_error", "n_eff",
                "bound", "gap", "p_value_bound", "verdict"}) +
      csv_join({fmt12(b), std::to_string(res.shots_used), std::to_string(cfg.seed),
                fmt12(cfg.alpha), fmt12(res.payoff_estimate), fmt12(res.std_error),
                fmt12(res.n_eff), fmt12(res.bound), fmt12(res.payoff_estimate - res.bound),
                fmt12(res.p_value_bound), verdict_name(res.verdict)});
  return rep;
}

Report run_gpt_table(double p) {
  const auto table = qsd::hexagon_outcome_table(p);
  const qsd::HexagonScenario s = qsd::hexagon_scenario(p);
  const std::array<std::string, 3> row_names{"e1", "e6", "e2"};

  Report rep;
  rep.json = report_head("gpt-table", {{"p", round12(p)}});
  ordered_json& r = rep.json["results"];
  r["c"] = round12(s.c_value);
  r["s"] = round12(s.s_value);
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back({{"effect", row_names[i]},
                    {"sigma1", round12(table[i][0])},
                    {"sigma2", round12(table[i][1])},
                    {"sigma1_perp", round12(table[i][2])},
                    {"sigma2_perp", round12(table[i][3])}});
  r["rows"] = std::move(rows);

  rep.csv = csv_join({"effect", "sigma1", "sigma2", "sigma1_perp", "sigma2_perp"});
  for (int i = 0; i < 3; ++i)
    rep.csv += csv_join({row_names[i], fmt12(table[i][0]), fmt12(table[i][1]),
                         fmt12(table[i][2]), fmt12(table[i][3])});
  return rep;
}

Report run_gpt_scan(int p_steps, int prior_steps, int n) {
  const std::vector<double> p_grid = unit_grid(p_steps);
  const std::vector<double> p1_grid = unit_grid(prior_steps);

  Report rep;
  rep.json = report_head(
      "gpt-scan", {{"n", n}, {"p_steps", p_steps}, {"prior_steps", prior_steps}});
  ordered_json rows = ordered_json::array();
  rep.csv = csv_join({"p", "p1", "success", "nc_bound", "advantage"});

  if (n == 6) {
    for (const qsd::AdvantageRow& row : qsd::advantage_scan(p_grid, p1_grid)) {
      rows.push_back({{"p", round12(row.p)},
                      {"p1", round12(row.p1)},
                      {"success", round12(row.success)},
                      {"nc_bound", round12(row.nc_bound)},
                      {"advantage", round12(row.advantage)}});
      rep.csv += csv_join({fmt12(row.p), fmt12(row.p1), fmt12(row.success),
                           fmt12(row.nc_bound), fmt12(row.advantage)});
    }
  } else {
    // No noncontextual bound is established for n != 6; report the best
    // extremal-measurement success and leave the bound columns absent.
    const qsd::PolygonTheory theory = qsd::polygon_theory(n);
    for (double p : p_grid) {
      const qsd::PolygonScenario scenario = qsd::polygon_scenario(theory, p);
      for (double p1 : p1_grid) {
        const double success = qsd::gpt_brute_force(scenario, p1, theory);
        rows.push_back({{"p", round12(p)},
                        {"p1", round12(p1)},
                        {"success", round12(success)},
                        {"nc_bound", nullptr},
                        {"advantage", nullptr}});
        rep.csv += csv_join({fmt12(p), fmt12(p1), fmt12(success), "", ""});
      }
    }
  }
  rep.json["results"] = {{"rows", std::move(rows)}};
  return rep;
}

Report run_profile(int b_steps) {
  const std::vector<qsd::ProfileRow> rows = qsd::entanglement_profile(interior_grid(b_steps));

  Report rep;
  rep.json = report_head("profile", {{"b_steps", b_steps}});
  ordered_json jrows = ordered_json::array();
  rep.csv = csv_join(
      {"b", "beta1", "beta2", "entropy", "payoff_opt", "nc_bound", "margin"});
  for (const qsd::ProfileRow& row : rows) {
    jrows.push_back({{"b", round12(row.b)},
                     {"beta1", round12(row.beta1)},
                     {"beta2", round12(row.beta2)},
                     {"entropy", round12(row.entanglement_entropy)},
                     {"payoff_opt", round12(row.payoff_opt)},
                     {"nc_bound", round12(row.nc_bound)},
                     {"margin", round12(row.margin)}});
    rep.csv += csv_join({fmt12(row.b), fmt12(row.beta1), fmt12(row.beta2),
                         fmt12(row.entanglement_entropy), fmt12(row.payoff_opt),
                         fmt12(row.nc_bound), fmt12(row.margin)});
  }
  rep.json["results"] = {{"rows", std::move(jrows)}};
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State-discrimination bounds and the three-measurement nonlocality game"};
  app.require_subcommand(1);

  const auto in_unit = CLI::Range(0.0, 1.0);
  const auto alpha_check = CLI::Validator(
      [](std::string& s) -> std::string {
        const double v = std::strtod(s.c_str(), nullptr);
        if (!(v > 0.0 && v < 1.0)) return "alpha must lie strictly inside (0, 1)";
        return {};
      },
      "ALPHA");
  const auto even_polygon = CLI::Validator(
      [](std::string& s) -> std::string {
        const long v = std::strtol(s.c_str(), nullptr, 10);
        if (v < 4 || v > 64 || v % 2 != 0) return "polygon size must be even and in [4, 64]";
        return {};
      },
      "EVEN");

  BoundsArgs bounds_args;
  OutputOptions bounds_out;
  CLI::App* bounds = app.add_subcommand("bounds", "Helstrom and noncontextual bounds");
  bounds->add_option("--b", bounds_args.b, "Amplitude of |1> in the second state")
      ->required()
      ->check(in_unit);
  CLI::Option* prior_opt =
      bounds->add_option("--prior", bounds_args.prior, "Prior probability of the first state")
          ->check(in_unit)
          ->capture_default_str();
  CLI::Option* q1_opt = bounds->add_option("--q1", "Weight of the first ensemble")
                            ->check(CLI::Range(1e-12, 1.0));
  CLI::Option* q2_opt = bounds->add_option("--q2", "Weight of the second ensemble")
                            ->check(CLI::Range(1e-12, 1.0));
  q1_opt->needs(q2_opt);
  q2_opt->needs(q1_opt);
  q1_opt->excludes(prior_opt);
  add_output_flags(bounds, &bounds_out);

  double solve_b = 0.0;
  OutputOptions solve_out;
  CLI::App* solve = app.add_subcommand("game-solve", "Construct the optimal game instance");
  solve->add_option("--b", solve_b, "State parameter, strictly inside (0, 1)")
      ->required()
      ->check(in_unit);
  add_output_flags(solve, &solve_out);

  double sim_b = 0.0;
  qsd::SimConfig sim_cfg;
  OutputOptions sim_out;
  CLI::App* sim = app.add_subcommand("game-simulate", "Finite-shot protocol simulation");
  sim->add_option("--b", sim_b, "State parameter, strictly inside (0, 1)")
      ->required()
      ->check(in_unit);
  sim->add_option("--shots", sim_cfg.shots, "Number of rounds")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40))
      ->capture_default_str();
  sim->add_option("--seed", sim_cfg.seed, "RNG seed")->capture_default_str();
  sim->add_option("--alpha", sim_cfg.alpha, "Certificate significance level")
      ->check(alpha_check)
      ->capture_default_str();
  add_output_flags(sim, &sim_out);

  double table_p = 0.0;
  OutputOptions table_out;
  CLI::App* table = app.add_subcommand("gpt-table", "Hexagon outcome probabilities");
  table->add_option("--p", table_p, "Mixing parameter of the sigma states")
      ->required()
      ->check(in_unit);
  add_output_flags(table, &table_out);

  int scan_p_steps = 101, scan_prior_steps = 1, scan_n = 6;
  OutputOptions scan_out;
  CLI::App* scan = app.add_subcommand("gpt-scan", "Contextual-advantage sweep");
  scan->add_option("--p-steps", scan_p_steps, "Grid points for p in [0, 1]")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  scan->add_option("--prior-steps", scan_prior_steps, "Grid points for the prior")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  scan->add_option("--n", scan_n, "Polygon size (even)")
      ->check(even_polygon)
      ->capture_default_str();
  add_output_flags(scan, &scan_out);

  int profile_b_steps = 9;
  OutputOptions profile_out;
  CLI::App* profile = app.add_subcommand("profile", "Entanglement profile over a b grid");
  profile->add_option("--b-steps", profile_b_steps, "Interior grid points for b in (0, 1)")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  add_output_flags(profile, &profile_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bounds->parsed()) {
      if (q1_opt->count()) {
        bounds_args.q = {q1_opt->as<double>(), q2_opt->as<double>()};
      }
      emit(run_bounds(bounds_args), bounds_out);
    } else if (solve->parsed()) {
      emit(run_game_solve(solve_b), solve_out);
    } else if (sim->parsed()) {
      emit(run_game_simulate(sim_b, sim_cfg), sim_out);
    } else if (table->parsed()) {
      emit(run_gpt_table(table_p), table_out);
    } else if (scan->parsed()) {
      emit(run_gpt_scan(scan_p_steps, scan_prior_steps, scan_n), scan_out);
    } else if (profile->parsed()) {
      emit(run_profile(profile_b_steps), profile_out);
    }
  } catch (const qsd::Error& e) {
    ordered_json err{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    ordered_json err{{"error", {{"kind", "Internal"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 3;
  }
  return 0;
}
