#include <doctest.h>

#include <cstdio>

#include <json.hpp>

#include "cli_runner.hpp"

using json = nlohmann::json;
using qsd::testing::run_cli;
using qsd::testing::slurp;
using qsd::testing::temp_path;

TEST_CASE("cli: bounds reports the closed-form values") {
  const auto res = run_cli("bounds --b 0.8 --prior 0.5");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["command"] == "bounds");
  CHECK(j["inputs"]["b"] == doctest::Approx(0.8));
  CHECK(j["results"]["helstrom"].get<double>() == doctest::Approx(0.9).epsilon(1e-9));
  CHECK(j["results"]["nc"].get<double>() == doctest::Approx(0.82).epsilon(1e-9));
  CHECK(j["results"]["gap"].get<double>() == doctest::Approx(0.08).epsilon(1e-9));

  SUBCASE("weighted form via --q1/--q2") {
    const auto w = run_cli("bounds --b 0.8 --q1 0.2 --q2 0.8");
    REQUIRE(w.exit_code == 0);
    const json jw = json::parse(w.out);
    CHECK(jw["results"]["nc"].get<double>() == doctest::Approx(0.928).epsilon(1e-9));
  }

  SUBCASE("csv format") {
    const auto c = run_cli("bounds --b 0.8 --prior 0.5 --format csv");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out == "helstrom,nc,gap\n0.9,0.82,0.08\n");
  }
}

TEST_CASE("cli: usage errors exit with status 2 and name the flag") {
  const auto range = run_cli("bounds --b 1.5");
  CHECK(range.exit_code == 2);
  CHECK(range.err.find("--b") != std::string::npos);

  CHECK(run_cli("bounds").exit_code == 2);                      // missing required
  CHECK(run_cli("bounds --b 0.5 --frobnicate 1").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("gpt-scan --n 7").exit_code == 2);              // odd polygon
  CHECK(run_cli("game-simulate --b 0.8 --alpha 1.0").exit_code == 2);
  CHECK(run_cli("bounds --b 0.5 --prior 0.5 --q1 0.5 --q2 0.5").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: domain errors exit with status 3 and a structured record") {
  const auto res = run_cli("game-solve --b 1.0");
  CHECK(res.exit_code == 3);
  const json err = json::parse(res.err);
  CHECK(err["error"]["kind"] == "InvalidArgument");
  CHECK(err["error"].contains("message"));
}

TEST_CASE("cli: game-solve summary") {
  const auto res = run_cli("game-solve --b 0.8");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  const json& r = j["results"];
  CHECK(r["payoff"].get<double>() == doctest::Approx(0.9).epsilon(1e-9));
  CHECK(r["payoff_opt"].get<double>() == doctest::Approx(0.9).epsilon(1e-9));
  CHECK(r["nc_bound"].get<double>() == doctest::Approx(0.82).epsilon(1e-9));
  CHECK(r["margin"].get<double>() == doctest::Approx(0.08).epsilon(1e-9));
  CHECK(r["verdict"] == "Nonlocal");
  CHECK(r["schmidt_coeffs"][0].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(r["schmidt_coeffs"][1].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(r["ns_residual"].get<double>() <= 1e-9);
  CHECK(r["steering_residual"].get<double>() <= 1e-9);
}

TEST_CASE("cli: game-simulate") {
  const auto res = run_cli("game-simulate --b 0.8 --shots 20000 --seed 42 --alpha 1e-6");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["seed"] == 42);
  CHECK(j["inputs"]["shots"] == 20000);
  CHECK(j["results"]["verdict"] == "Nonlocal");
  CHECK(std::abs(j["results"]["payoff_estimate"].get<double>() - 0.9) < 0.02);
  std::int64_t total = 0;
  for (const auto& row : j["results"]["counts"]) total += row["count"].get<std::int64_t>();
  CHECK(total == 20000);
}

TEST_CASE("cli: gpt-table") {
  const auto res = run_cli("gpt-table --p 0.5");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["results"]["c"].get<double>() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(j["results"]["s"].get<double>() == doctest::Approx(0.75).epsilon(1e-12));
  const json& row0 = j["results"]["rows"][0];
  CHECK(row0["effect"] == "e1");
  CHECK(row0["sigma1"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(row0["sigma2"].get<double>() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(row0["sigma1_perp"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(row0["sigma2_perp"].get<double>() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("cli: gpt-scan") {
  const auto res = run_cli("gpt-scan --p-steps 5 --format csv");
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "p,p1,success,nc_bound,advantage");
  const auto parse_row = [](const std::string& row) {
    std::vector<double> vals;
    std::istringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) vals.push_back(std::strtod(cell.c_str(), nullptr));
    return vals;
  };
  std::getline(lines, line);
  const std::vector<double> first = parse_row(line);  // p = 0
  CHECK(first == std::vector<double>{0.0, 0.5, 0.5, 0.5, first[4]});
  CHECK(std::abs(first[4]) <= 1e-12);
  std::getline(lines, line);  // p = 0.25
  std::getline(lines, line);  // p = 0.5
  const std::vector<double> mid = parse_row(line);
  CHECK(mid[0] == 0.5);
  CHECK(mid[2] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(mid[3] == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(mid[4] == doctest::Approx(0.125).epsilon(1e-12));

  SUBCASE("n > 6 leaves the bound columns absent") {
    const auto oct = run_cli("gpt-scan --n 8 --p-steps 3 --format csv");
    REQUIRE(oct.exit_code == 0);
    std::istringstream olines(oct.out);
    std::string oline;
    std::getline(olines, oline);
    CHECK(oline == "p,p1,success,nc_bound,advantage");
    std::getline(olines, oline);
    CHECK(oline.substr(oline.size() - 2) == ",,");  // trailing empty cells
    const auto joct = run_cli("gpt-scan --n 8 --p-steps 3");
    const json j = json::parse(joct.out);
    CHECK(j["results"]["rows"][0]["nc_bound"].is_null());
    CHECK(j["results"]["rows"][0]["advantage"].is_null());
  }
}

TEST_CASE("cli: profile") {
  const auto res = run_cli("profile --b-steps 9");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  const auto& rows = j["results"]["rows"];
  REQUIRE(rows.size() == 9);
  CHECK(rows[0]["b"].get<double>() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(rows[8]["b"].get<double>() == doctest::Approx(0.9).epsilon(1e-12));
  for (const auto& row : rows) CHECK(row["margin"].get<double>() > 0.0);
  CHECK(rows[4]["margin"].get<double>() == doctest::Approx(0.125).epsilon(1e-9));
}

TEST_CASE("cli: identical invocations produce byte-identical reports") {
  for (const std::string args :
       {std::string("bounds --b 0.37 --prior 0.21"),
        std::string("game-solve --b 0.55"),
        std::string("game-simulate --b 0.8 --shots 5000 --seed 7 --alpha 1e-4"),
        std::string("gpt-scan --p-steps 11 --prior-steps 3"),
        std::string("profile --b-steps 5 --format csv")}) {
    CAPTURE(args);
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
  }
}

TEST_CASE("cli: --out writes the same payload the stdout mode prints") {
  const std::string path = temp_path("report");
  const auto to_file = run_cli("gpt-table --p 0.3 --out " + path);
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  const auto to_stdout = run_cli("gpt-table --p 0.3");
  CHECK(slurp(path) == to_stdout.out);
  std::remove(path.c_str());
}
