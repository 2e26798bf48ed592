#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "posguess/rules.hpp"
#include "posguess/scoring.hpp"

namespace posguess {

// Resolved settings of one pipeline run. Loaded from a `key = value` file
// (# comments, later lines win) with command-line flags overriding.
struct PipelineConfig {
  std::string lexicon_path;
  std::string frequencies_path;
  std::string closed_class_path;
  std::string eval_lexicon_path;  // empty: evaluate on the training lexicon
  std::string output_dir = "out";

  std::uint64_t theta_prefix = 3;  // extraction-frequency thresholds
  std::uint64_t theta_suffix = 3;
  std::uint64_t theta_ending = 3;

  double theta_s_prefix = 80.0;  // score thresholds in points
  double theta_s_suffix = 60.0;
  double theta_s_ending = 75.0;

  double z = 1.65;
  double confidence = 0.90;
  std::uint64_t min_trials = 1;
  std::size_t max_ending_length = 5;
  std::size_t min_word_length = 5;

  std::vector<double> sweep_grid = {50, 55, 60, 65, 70, 75, 80, 85, 90, 95};
  std::string selection_policy = "f1-coverage";
  bool merge = true;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::string eval_mode = "lexicon";  // lexicon | corpus | both
  std::string fallback_common = "NN";
  std::string fallback_proper = "NP";

  std::uint64_t theta_for(RuleKind kind) const;
  double theta_s_for(RuleKind kind) const;
  ScoringConfig scoring(double theta_s_points) const;

  // Throws ParseError when values are out of range (z <= 0, zero
  // min_trials/min_word_length, unknown policy or eval mode, ...).
  void validate() const;
};

// `theta` and `theta-s` set all three kinds at once; `theta-suffix`,
// `theta-s-ending` etc. set one. Unknown keys are errors.
void set_config_value(PipelineConfig& config, std::string_view key,
                      std::string_view value);

PipelineConfig load_config(std::istream& in, std::string_view source_name = "<config>");

// "50:95:5" (inclusive start:stop:step) or a comma-separated list.
std::vector<double> parse_grid(std::string_view text);

}  // namespace posguess
