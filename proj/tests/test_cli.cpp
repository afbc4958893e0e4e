// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bestchoice/io.hpp"
#include "bestchoice/simulate.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "bestchoice_cli_output.txt";
  const std::string cmd = std::string(BESTCHOICE_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  CommandResult r;
  r.exit_code = WEXITSTATUS(raw);
  r.output = slurp(out);
  return r;
}

const char* kConfigJson = R"({
  "distributions": [
    {"kind": "uniform", "lo": 0.0, "hi": 1.0},
    {"kind": "exponential", "rate": 2.0},
    {"kind": "discrete", "values": [1.0, 2.5], "probs": [0.4, 0.6]}
  ],
  "trials": 5000,
  "seed": 17,
  "mode": "full-knowledge"
})";

}  // namespace

TEST_CASE("number formatting is stable and locale free") {
  CHECK(bestchoice::io::format_number(0.5) == "0.5");
  CHECK(bestchoice::io::format_number(0.0) == "0");
  CHECK(bestchoice::io::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(bestchoice::io::format_number(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("config round trip") {
  const bestchoice::ExperimentConfig config = bestchoice::io::parse_config_text(kConfigJson);
  REQUIRE(config.distributions.size() == 3);
  CHECK(config.trials == 5000);
  CHECK(config.seed == 17);

  const std::string serialized = bestchoice::io::serialize_config(config);
  const bestchoice::ExperimentConfig reparsed = bestchoice::io::parse_config_text(serialized);
  CHECK(bestchoice::io::serialize_config(reparsed) == serialized);
  CHECK(reparsed.distributions[2].kind_name() == "discrete");

  CHECK_THROWS_AS(bestchoice::io::parse_config_text("{not json"), std::invalid_argument);
  CHECK_THROWS_AS(bestchoice::io::parse_config_text(R"({"trials": 5, "seed": 1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      bestchoice::io::parse_config_text(
          R"({"distributions": [{"kind": "nope"}], "trials": 5, "seed": 1})"),
      std::invalid_argument);
}

TEST_CASE("sample table csv round trip") {
  const fs::path path = fs::temp_directory_path() / "bestchoice_table.csv";
  bestchoice::samples::SampleTable table;
  table.labels = {"uniform", "exponential"};
  table.columns = {{0.25, 0.5, 0.125}, {1.5, 0.75, 2.0}};
  bestchoice::io::write_sample_table_csv(path.string(), table);

  const bestchoice::samples::SampleTable back = bestchoice::io::read_sample_table_csv(path.string());
  CHECK(back.labels == table.labels);
  CHECK(back.columns == table.columns);

  spit(path, "a,b\n1.0\n");
  CHECK_THROWS_AS(bestchoice::io::read_sample_table_csv(path.string()), std::invalid_argument);
  spit(path, "a,b\n1.0,x\n");
  CHECK_THROWS_AS(bestchoice::io::read_sample_table_csv(path.string()), std::invalid_argument);
}

TEST_CASE("cli constants") {
  const CommandResult r = run_cli("constants");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("c=0.804") != std::string::npos);
  CHECK(r.output.find("gamma=0.580") != std::string::npos);
  CHECK(run_cli("constants").output == r.output);
}

TEST_CASE("cli decision numbers") {
  const CommandResult one = run_cli("decision-numbers --n 1");
  CHECK(one.exit_code == 0);
  CHECK(one.output == "i,d,tau\n1,0,0\n");

  const CommandResult two = run_cli("decision-numbers --n 2");
  CHECK(two.exit_code == 0);
  CHECK(two.output.find("1,0.5,0.5\n") != std::string::npos);
  CHECK(two.output.find("2,0,0\n") != std::string::npos);

  CHECK(run_cli("decision-numbers --n 0").exit_code == 2);
}

TEST_CASE("cli simulate: reproducible result files and manifests") {
  const fs::path dir = fs::temp_directory_path();
  const fs::path config_path = dir / "bestchoice_config.json";
  const fs::path out1 = dir / "bestchoice_result1.json";
  const fs::path out2 = dir / "bestchoice_result2.json";
  spit(config_path, kConfigJson);

  const CommandResult a =
      run_cli("simulate --config " + config_path.string() + " --out " + out1.string() + " --workers 1");
  REQUIRE(a.exit_code == 0);
  const CommandResult b =
      run_cli("simulate --config " + config_path.string() + " --out " + out2.string() + " --workers 3");
  REQUIRE(b.exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));

  const std::string manifest = slurp(out1.string() + ".manifest.json");
  CHECK(manifest.find("\"command\": \"simulate\"") != std::string::npos);
  CHECK(manifest.find("\"artifact_version\"") != std::string::npos);
  CHECK(manifest.find("\"timestamp\"") != std::string::npos);

  // malformed config and guard-size errors map to distinct exit codes
  spit(config_path, "{\"trials\": 0}");
  CHECK(run_cli("simulate --config " + config_path.string() + " --out " + out1.string()).exit_code == 2);
  CHECK(run_cli("simulate --config /nonexistent.json --out " + out1.string()).exit_code == 2);
}

TEST_CASE("cli simulate: sample-based mode") {
  const fs::path dir = fs::temp_directory_path();
  const fs::path config_path = dir / "bestchoice_sample_config.json";
  const fs::path out = dir / "bestchoice_sample_result.json";

  // too few samples for the deepest bucket: resource-guard exit code
  spit(config_path, R"({
    "distributions": [
      {"kind": "uniform", "lo": 0.0, "hi": 1.0}, {"kind": "exponential", "rate": 1.0},
      {"kind": "uniform", "lo": 0.0, "hi": 2.0}, {"kind": "exponential", "rate": 0.5},
      {"kind": "uniform", "lo": -1.0, "hi": 1.0}, {"kind": "exponential", "rate": 2.0},
      {"kind": "uniform", "lo": 0.0, "hi": 3.0}, {"kind": "exponential", "rate": 0.7},
      {"kind": "uniform", "lo": 0.5, "hi": 1.5}, {"kind": "exponential", "rate": 1.4}
    ],
    "trials": 2000, "seed": 5, "mode": "sample-based",
    "epsilon": 0.1, "samples_per_dist": 10
  })");
  const CommandResult guard =
      run_cli("simulate --config " + config_path.string() + " --out " + out.string());
  CHECK(guard.exit_code == 3);
  CHECK(guard.output.find("required samples") != std::string::npos);

  // samples provided through a CSV table
  bestchoice::samples::SampleTable table;
  table.labels = {"u", "e"};
  table.columns.assign(2, {});
  bestchoice::RandomStream rs(1234, 0);
  const auto u = bestchoice::Distribution::uniform(0, 1);
  const auto e = bestchoice::Distribution::exponential(1.0);
  for (int i = 0; i < 4000; ++i) {
    table.columns[0].push_back(u.sample(rs));
    table.columns[1].push_back(e.sample(rs));
  }
  const fs::path csv_path = dir / "bestchoice_samples.csv";
  bestchoice::io::write_sample_table_csv(csv_path.string(), table);
  spit(config_path, R"({
    "distributions": [
      {"kind": "uniform", "lo": 0.0, "hi": 1.0}, {"kind": "exponential", "rate": 1.0}
    ],
    "trials": 20000, "seed": 5, "mode": "sample-based",
    "epsilon": 0.1, "samples_csv": ")" + csv_path.string() + R"("
  })");
  const CommandResult ok =
      run_cli("simulate --config " + config_path.string() + " --out " + out.string());
  REQUIRE(ok.exit_code == 0);
  const std::string result = slurp(out);
  CHECK(result.find("\"reference_bound\"") != std::string::npos);

  // the manifest records where the samples came from
  const std::string manifest = slurp(out.string() + ".manifest.json");
  CHECK(manifest.find("samples.csv") != std::string::npos);
}

TEST_CASE("cli verify suites") {
  CHECK(run_cli("verify --suite lemma1").exit_code == 0);
  CHECK(run_cli("verify --suite nope").exit_code == 2);
}

TEST_CASE("cli sweep") {
  const fs::path out = fs::temp_directory_path() / "bestchoice_sweep.csv";
  const CommandResult r =
      run_cli("sweep --n-min 1 --n-max 4 --trials 20000 --seed 3 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("n,rate,stderr,formula,gamma\n", 0) == 0);

  // rerun is byte-identical
  const fs::path out2 = fs::temp_directory_path() / "bestchoice_sweep2.csv";
  run_cli("sweep --n-min 1 --n-max 4 --trials 20000 --seed 3 --workers 2 --out " + out2.string());
  CHECK(slurp(out2) == csv);

  // formula column starts at 1 and decreases; n = 2 row carries the exact
  // two-draw optimum; every rate clears the limiting bound
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  double prev_formula = 2.0;
  int rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> row;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    REQUIRE(row.size() == 5);
    const double rate = std::stod(row[1]);
    const double stderr_col = std::stod(row[2]);
    const double formula = std::stod(row[3]);
    const double gamma = std::stod(row[4]);
    CHECK(formula <= prev_formula + 1e-12);
    if (rows == 0) CHECK(formula == doctest::Approx(1.0));
    if (row[0] == "2") CHECK(formula == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(rate >= gamma - 3.0 * stderr_col);
    prev_formula = formula;
    ++rows;
  }
  CHECK(rows == 4);
}
