#include <doctest.h>

#include <sstream>

#include "posguess/config.hpp"
#include "posguess/errors.hpp"

using namespace posguess;

TEST_CASE("defaults follow the tuned thresholds") {
  const PipelineConfig config;
  CHECK(config.theta_prefix == 3);
  CHECK(config.theta_suffix == 3);
  CHECK(config.theta_ending == 3);
  CHECK(config.theta_s_prefix == doctest::Approx(80.0));
  CHECK(config.theta_s_suffix == doctest::Approx(60.0));
  CHECK(config.theta_s_ending == doctest::Approx(75.0));
  CHECK(config.z == doctest::Approx(1.65));
  CHECK(config.max_ending_length == 5);
  CHECK(config.min_word_length == 5);
  CHECK(config.min_trials == 1);
  CHECK(config.merge);
  config.validate();

  CHECK(config.theta_s_for(RuleKind::Prefix) == doctest::Approx(80.0));
  CHECK(config.theta_s_for(RuleKind::Ending) == doctest::Approx(75.0));
  const ScoringConfig scoring = config.scoring(60.0);
  CHECK(scoring.z == doctest::Approx(1.65));
  CHECK(scoring.theta_s == doctest::Approx(60.0));
}

TEST_CASE("config files parse key = value lines") {
  std::istringstream in(
      "# fixture settings\n"
      "theta = 2\n"
      "theta-ending = 4\n"
      "z = 1.96\n"
      "merge = false\n"
      "sweep-grid = 50:95:5\n"
      "eval-mode = both\n"
      "\n"
      "output-dir = out/run1\n");
  const PipelineConfig config = load_config(in, "run.conf");
  CHECK(config.theta_prefix == 2);
  CHECK(config.theta_suffix == 2);
  CHECK(config.theta_ending == 4);  // later per-kind key wins
  CHECK(config.z == doctest::Approx(1.96));
  CHECK_FALSE(config.merge);
  CHECK(config.sweep_grid.size() == 10);
  CHECK(config.sweep_grid.front() == doctest::Approx(50));
  CHECK(config.sweep_grid.back() == doctest::Approx(95));
  CHECK(config.output_dir == "out/run1");
  CHECK(config.eval_mode == "both");
}

TEST_CASE("config errors carry file and line") {
  std::istringstream unknown("no-such-key = 1\n");
  CHECK_THROWS_AS(load_config(unknown, "run.conf"), ParseError);
  try {
    std::istringstream again("z = 1.65\nno-such-key = 1\n");
    load_config(again, "run.conf");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("run.conf:2") != std::string::npos);
    CHECK(what.find("no-such-key") != std::string::npos);
  }
  std::istringstream missing_eq("theta 3\n");
  CHECK_THROWS_AS(load_config(missing_eq, "run.conf"), ParseError);
  std::istringstream bad_value("theta = soon\n");
  CHECK_THROWS_AS(load_config(bad_value, "run.conf"), ParseError);
}

TEST_CASE("grid parsing") {
  CHECK(parse_grid("50:95:5").size() == 10);
  CHECK(parse_grid("60,75,80") == std::vector<double>{60, 75, 80});
  CHECK(parse_grid("75") == std::vector<double>{75});
  CHECK_THROWS_AS(parse_grid(""), ParseError);
  CHECK_THROWS_AS(parse_grid("50:95"), ParseError);
  CHECK_THROWS_AS(parse_grid("95:50:5"), ParseError);
  CHECK_THROWS_AS(parse_grid("50:95:0"), ParseError);
  CHECK_THROWS_AS(parse_grid("a,b"), ParseError);
}

TEST_CASE("validation rejects out-of-range settings") {
  PipelineConfig config;
  config.z = 0.0;
  CHECK_THROWS_AS(config.validate(), ParseError);

  config = PipelineConfig();
  config.min_trials = 0;
  CHECK_THROWS_AS(config.validate(), ParseError);

  config = PipelineConfig();
  config.eval_mode = "sideways";
  CHECK_THROWS_AS(config.validate(), ParseError);

  config = PipelineConfig();
  config.selection_policy = "vibes";
  CHECK_THROWS_AS(config.validate(), ParseError);

  config = PipelineConfig();
  config.sweep_grid = {80, 70};
  CHECK_THROWS_AS(config.validate(), ParseError);
}
