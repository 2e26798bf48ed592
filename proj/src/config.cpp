#include "posguess/config.hpp"

#include <charconv>
#include <istream>

#include "posguess/errors.hpp"
#include "posguess/text.hpp"

namespace posguess {

namespace {

std::uint64_t to_u64(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ParseError("config key '" + std::string(key) + "': expected an integer, got '" +
                     std::string(value) + "'");
  return out;
}

double to_double(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const double out = std::stod(std::string(value), &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return out;
  } catch (const std::exception&) {
    throw ParseError("config key '" + std::string(key) + "': expected a number, got '" +
                     std::string(value) + "'");
  }
}

bool to_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw ParseError("config key '" + std::string(key) + "': expected true/false, got '" +
                   std::string(value) + "'");
}

}  // namespace

std::uint64_t PipelineConfig::theta_for(RuleKind kind) const {
  switch (kind) {
    case RuleKind::Prefix: return theta_prefix;
    case RuleKind::Suffix: return theta_suffix;
    case RuleKind::Ending: return theta_ending;
  }
  return theta_suffix;
}

double PipelineConfig::theta_s_for(RuleKind kind) const {
  switch (kind) {
    case RuleKind::Prefix: return theta_s_prefix;
    case RuleKind::Suffix: return theta_s_suffix;
    case RuleKind::Ending: return theta_s_ending;
  }
  return theta_s_suffix;
}

ScoringConfig PipelineConfig::scoring(double theta_s_points) const {
  ScoringConfig config;
  config.z = z;
  config.confidence = confidence;
  config.theta_s = theta_s_points;
  config.min_trials = min_trials;
  return config;
}

void PipelineConfig::validate() const {
  if (!(z > 0.0)) throw ParseError("config: z must be positive");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw ParseError("config: confidence must lie in (0,1)");
  if (min_trials < 1) throw ParseError("config: min-trials must be >= 1");
  if (max_ending_length < 1) throw ParseError("config: max-ending-length must be >= 1");
  if (min_word_length < 1) throw ParseError("config: min-word-length must be >= 1");
  if (theta_prefix < 1 || theta_suffix < 1 || theta_ending < 1)
    throw ParseError("config: theta thresholds must be >= 1");
  if (theta_s_prefix < 0 || theta_s_suffix < 0 || theta_s_ending < 0)
    throw ParseError("config: theta-s thresholds must be >= 0");
  if (eval_mode != "lexicon" && eval_mode != "corpus" && eval_mode != "both")
    throw ParseError("config: eval-mode must be lexicon, corpus or both");
  if (selection_policy != "f1-coverage" && selection_policy != "f1" &&
      selection_policy != "precision" && selection_policy != "recall" &&
      selection_policy != "coverage")
    throw ParseError("config: unknown selection-policy '" + selection_policy + "'");
  if (sweep_grid.empty()) throw ParseError("config: empty sweep grid");
  for (std::size_t i = 1; i < sweep_grid.size(); ++i)
    if (!(sweep_grid[i - 1] < sweep_grid[i]))
      throw ParseError("config: sweep grid must be strictly ascending");
}

std::vector<double> parse_grid(std::string_view grid_text) {
  std::vector<double> grid;
  const auto spec = text::trim(grid_text);
  if (spec.empty()) throw ParseError("empty sweep grid");
  const auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    const auto second = spec.find(':', colon + 1);
    if (second == std::string_view::npos)
      throw ParseError("grid range needs start:stop:step, got '" + std::string(spec) + "'");
    const double start = to_double("sweep-grid", spec.substr(0, colon));
    const double stop = to_double("sweep-grid", spec.substr(colon + 1, second - colon - 1));
    const double step = to_double("sweep-grid", spec.substr(second + 1));
    if (!(step > 0.0)) throw ParseError("grid step must be positive");
    if (stop < start) throw ParseError("grid stop must be >= start");
    for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    return grid;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    if (comma == std::string_view::npos) comma = spec.size();
    const auto item = text::trim(spec.substr(start, comma - start));
    if (item.empty()) throw ParseError("empty grid element");
    grid.push_back(to_double("sweep-grid", item));
    start = comma + 1;
  }
  return grid;
}

void set_config_value(PipelineConfig& config, std::string_view key,
                      std::string_view value) {
  const std::string v(text::trim(value));
  if (key == "lexicon") config.lexicon_path = v;
  else if (key == "frequencies") config.frequencies_path = v;
  else if (key == "closed-class-tags") config.closed_class_path = v;
  else if (key == "eval-lexicon") config.eval_lexicon_path = v;
  else if (key == "output-dir") config.output_dir = v;
  else if (key == "theta")
    config.theta_prefix = config.theta_suffix = config.theta_ending = to_u64(key, v);
  else if (key == "theta-prefix") config.theta_prefix = to_u64(key, v);
  else if (key == "theta-suffix") config.theta_suffix = to_u64(key, v);
  else if (key == "theta-ending") config.theta_ending = to_u64(key, v);
  else if (key == "theta-s")
    config.theta_s_prefix = config.theta_s_suffix = config.theta_s_ending =
        to_double(key, v);
  else if (key == "theta-s-prefix") config.theta_s_prefix = to_double(key, v);
  else if (key == "theta-s-suffix") config.theta_s_suffix = to_double(key, v);
  else if (key == "theta-s-ending") config.theta_s_ending = to_double(key, v);
  else if (key == "z") config.z = to_double(key, v);
  else if (key == "confidence") config.confidence = to_double(key, v);
  else if (key == "min-trials") config.min_trials = to_u64(key, v);
  else if (key == "max-ending-length")
    config.max_ending_length = static_cast<std::size_t>(to_u64(key, v));
  else if (key == "min-word-length")
    config.min_word_length = static_cast<std::size_t>(to_u64(key, v));
  else if (key == "sweep-grid") config.sweep_grid = parse_grid(v);
  else if (key == "selection-policy") config.selection_policy = v;
  else if (key == "merge") config.merge = to_bool(key, v);
  else if (key == "threads") config.threads = static_cast<unsigned>(to_u64(key, v));
  else if (key == "eval-mode") config.eval_mode = v;
  else if (key == "fallback-common") config.fallback_common = v;
  else if (key == "fallback-proper") config.fallback_proper = v;
  else
    throw ParseError("unknown config key '" + std::string(key) + "'");
}

PipelineConfig load_config(std::istream& in, std::string_view source_name) {
  PipelineConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text_line = line;
    if (!text_line.empty() && text_line.back() == '\r') text_line.remove_suffix(1);
    const auto trimmed = text::trim(text_line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string_view::npos)
      throw_parse_error(source_name, line_no, "expected `key = value`");
    const auto key = text::trim(trimmed.substr(0, eq));
    const auto value = text::trim(trimmed.substr(eq + 1));
    if (key.empty()) throw_parse_error(source_name, line_no, "empty key");
    try {
      set_config_value(config, key, value);
    } catch (const ParseError& e) {
      throw_parse_error(source_name, line_no, e.what());
    }
  }
  return config;
}

}  // namespace posguess
