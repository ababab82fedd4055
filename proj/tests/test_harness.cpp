#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "ltspec/csv.hpp"
#include "ltspec/experiments.hpp"
#include "ltspec/toeplitz.hpp"

using namespace ltspec;

TEST_CASE("the catalog covers every family with unique, serializable entries") {
  const auto& catalog = builtin_experiments();
  CHECK(catalog.size() >= 7);
  std::set<std::string> names, theorems;
  for (const ExperimentSpec& spec : catalog) {
    CHECK(names.insert(spec.name).second);
    theorems.insert(spec.theorem);
    const ExperimentSpec back = ExperimentSpec::from_json(spec.to_json());
    CHECK(back.name == spec.name);
    CHECK(back.theorem == spec.theorem);
    CHECK(back.parameters == spec.parameters);
    CHECK(back.seed == spec.seed);
  }
  for (const char* family : {"T2.1", "T2.3", "T2.5", "T2.6", "P3.1", "P3.2", "L5.2"})
    CHECK(theorems.count(family));
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(find_builtin("no-such-experiment"), UsageError);
  CHECK_THROWS_AS(log_grid(1e-12, 1e-4, 5), UsageError);      // increasing
  CHECK_THROWS_AS(log_grid(-1.0, 1e-4, 5), UsageError);
  ExperimentSpec bad = find_builtin("count2d-gaussian");
  bad.parameters["e_start"] = 1e-12;
  bad.parameters["e_stop"] = 1e-4;
  CHECK_THROWS_AS(run_experiment(bad, Settings{}), UsageError);
  ExperimentSpec unknown = bad;
  unknown.theorem = "T9.9";
  CHECK_THROWS_AS(run_experiment(unknown, Settings{}), UsageError);
  CHECK_THROWS_AS(ExperimentSpec::from_json("{broken"), UsageError);
}

TEST_CASE("grids and slopes") {
  const auto grid = log_grid(1e-4, 1e-12, 5);
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == doctest::Approx(1e-4));
  CHECK(grid.back() == doctest::Approx(1e-12));
  for (std::size_t i = 1; i < grid.size(); ++i) {
    CHECK(grid[i] < grid[i - 1]);
    CHECK(grid[i - 1] / grid[i] == doctest::Approx(100.0).epsilon(1e-12));
  }
  CHECK(least_squares_slope({0, 1, 2, 3}, {5, 7, 9, 11}) == doctest::Approx(2.0));
  CHECK(least_squares_slope({0, 1, 2}, {1, 1, 1}) == doctest::Approx(0.0));
}

TEST_CASE("CSV quoting round-trips") {
  CsvWriter w;
  w.row({"plain", "with,comma", "with\"quote", "multi\nline"});
  const std::string line = w.str();
  CHECK(line == "plain,\"with,comma\",\"with\"\"quote\",\"multi\nline\"\n");
  const auto parts = csv_split("plain,\"with,comma\",\"with\"\"quote\"");
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == "plain");
  CHECK(parts[1] == "with,comma");
  CHECK(parts[2] == "with\"quote");
}

TEST_CASE("format_double round-trips bitwise") {
  for (double v : {0.0, 1.0, -0.1, 1e-300, 9.999999999999996e-11,
                   0.15915494309189535, 1.0 / 3.0}) {
    double back = 0.0;
    std::sscanf(format_double(v).c_str(), "%lf", &back);
    CHECK(back == v);
  }
}

TEST_CASE("experiment output is byte-identical across runs and thread counts") {
  ExperimentSpec spec = find_builtin("count2d-gaussian");
  spec.parameters["e_points"] = 3;
  spec.seed = 42;
  std::vector<std::string> outputs;
  for (int threads : {1, 4, 1}) {
    Settings settings;
    settings.threads = threads;
    outputs.push_back(run_experiment(spec, settings).csv);
  }
  CHECK(outputs[0] == outputs[1]);
  CHECK(outputs[0] == outputs[2]);
}

TEST_CASE("parallel sequence builders are deterministic") {
  const DecayProfile profile = DecayProfile::super_gaussian(0.5, 1.0);
  const FieldConfig config(1.0);
  const std::string serial =
      spectrum_to_csv(gamma_sequence(0, profile, config, 64, 1e-12, 1));
  const std::string parallel =
      spectrum_to_csv(gamma_sequence(0, profile, config, 64, 1e-12, 8));
  CHECK(serial == parallel);
}

TEST_CASE("reports carry per-check messages and an overall verdict") {
  ExperimentSpec spec = find_builtin("count2d-gaussian");
  spec.parameters["e_points"] = 3;
  spec.parameters["e_stop"] = 1e-8;
  const ExperimentReport report = run_experiment(spec, Settings{});
  CHECK(report.messages.size() == 2);  // one per level index
  CHECK(report.converged);
  CHECK_FALSE(report.csv.empty());
  CHECK(report.csv.substr(0, 2) == "E,");
}
