// posguess -- induce, score, merge, evaluate and apply part-of-speech
// guessing rules for unknown words.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "posguess/config.hpp"
#include "posguess/errors.hpp"
#include "posguess/pipeline.hpp"
#include "posguess/version.hpp"

namespace {

using posguess::PipelineConfig;

// Storage for the shared flags of one subcommand; values only matter when
// the matching option was actually given (config-file values win otherwise).
struct CommonFlags {
  std::string config_path;
  std::string lexicon, frequencies, closed_class, eval_lexicon, output_dir;
  std::uint64_t theta = 0, theta_prefix = 0, theta_suffix = 0, theta_ending = 0;
  double theta_s = 0, theta_s_prefix = 0, theta_s_suffix = 0, theta_s_ending = 0;
  double z = 0, confidence = 0;
  std::uint64_t min_trials = 0, max_ending_length = 0, min_word_length = 0;
  std::string grid, policy, eval_mode, fallback_common, fallback_proper;
  bool merge = true;
  unsigned threads = 0;
  std::map<std::string, CLI::Option*> options;

  bool given(const std::string& name) const {
    auto it = options.find(name);
    return it != options.end() && it->second->count() > 0;
  }
};

std::shared_ptr<CommonFlags> add_common_flags(CLI::App* cmd) {
  auto f = std::make_shared<CommonFlags>();
  auto& o = f->options;
  o["--config"] = cmd->add_option("--config", f->config_path,
                                  "Key-value config file; flags override it");
  o["--lexicon"] = cmd->add_option("--lexicon", f->lexicon, "Lexicon TSV");
  o["--frequencies"] =
      cmd->add_option("--frequencies", f->frequencies, "Word-frequency TSV");
  o["--closed-class-tags"] = cmd->add_option("--closed-class-tags", f->closed_class,
                                             "Closed-class tag list, one per line");
  o["--eval-lexicon"] = cmd->add_option("--eval-lexicon", f->eval_lexicon,
                                        "Held-out lexicon for evaluation");
  o["--output-dir"] = cmd->add_option("--output-dir", f->output_dir,
                                      "Directory for generated artifacts");
  o["--theta"] = cmd->add_option("--theta", f->theta,
                                 "Extraction-frequency threshold for all kinds");
  o["--theta-prefix"] = cmd->add_option("--theta-prefix", f->theta_prefix, "");
  o["--theta-suffix"] = cmd->add_option("--theta-suffix", f->theta_suffix, "");
  o["--theta-ending"] = cmd->add_option("--theta-ending", f->theta_ending, "");
  o["--theta-s"] =
      cmd->add_option("--theta-s", f->theta_s, "Score threshold (points) for all kinds");
  o["--theta-s-prefix"] = cmd->add_option("--theta-s-prefix", f->theta_s_prefix, "");
  o["--theta-s-suffix"] = cmd->add_option("--theta-s-suffix", f->theta_s_suffix, "");
  o["--theta-s-ending"] = cmd->add_option("--theta-s-ending", f->theta_s_ending, "");
  o["--z"] = cmd->add_option("--z", f->z, "Confidence-limit deviate (default 1.65)");
  o["--confidence"] = cmd->add_option("--confidence", f->confidence, "");
  o["--min-trials"] = cmd->add_option("--min-trials", f->min_trials, "");
  o["--max-ending-length"] =
      cmd->add_option("--max-ending-length", f->max_ending_length, "");
  o["--min-word-length"] =
      cmd->add_option("--min-word-length", f->min_word_length, "");
  o["--grid"] = cmd->add_option("--grid", f->grid,
                                "Sweep grid: start:stop:step or a comma list");
  o["--policy"] = cmd->add_option("--policy", f->policy,
                                  "Sweep selection policy (default f1-coverage)");
  o["--eval-mode"] =
      cmd->add_option("--eval-mode", f->eval_mode, "lexicon, corpus or both");
  o["--fallback-common"] =
      cmd->add_option("--fallback-common", f->fallback_common, "");
  o["--fallback-proper"] =
      cmd->add_option("--fallback-proper", f->fallback_proper, "");
  o["--merge"] = cmd->add_flag("--merge,!--no-merge", f->merge,
                               "Merge below-threshold rules (default on)");
  o["--threads"] =
      cmd->add_option("--threads", f->threads, "Worker threads; 0 = all cores");
  return f;
}

PipelineConfig resolve_config(const CommonFlags& f) {
  PipelineConfig config;
  if (f.given("--config")) {
    std::ifstream in(f.config_path);
    if (!in) throw posguess::IoError("cannot open config " + f.config_path);
    config = posguess::load_config(in, f.config_path);
  }
  if (f.given("--lexicon")) config.lexicon_path = f.lexicon;
  if (f.given("--frequencies")) config.frequencies_path = f.frequencies;
  if (f.given("--closed-class-tags")) config.closed_class_path = f.closed_class;
  if (f.given("--eval-lexicon")) config.eval_lexicon_path = f.eval_lexicon;
  if (f.given("--output-dir")) config.output_dir = f.output_dir;
  if (f.given("--theta"))
    config.theta_prefix = config.theta_suffix = config.theta_ending = f.theta;
  if (f.given("--theta-prefix")) config.theta_prefix = f.theta_prefix;
  if (f.given("--theta-suffix")) config.theta_suffix = f.theta_suffix;
  if (f.given("--theta-ending")) config.theta_ending = f.theta_ending;
  if (f.given("--theta-s"))
    config.theta_s_prefix = config.theta_s_suffix = config.theta_s_ending = f.theta_s;
  if (f.given("--theta-s-prefix")) config.theta_s_prefix = f.theta_s_prefix;
  if (f.given("--theta-s-suffix")) config.theta_s_suffix = f.theta_s_suffix;
  if (f.given("--theta-s-ending")) config.theta_s_ending = f.theta_s_ending;
  if (f.given("--z")) config.z = f.z;
  if (f.given("--confidence")) config.confidence = f.confidence;
  if (f.given("--min-trials")) config.min_trials = f.min_trials;
  if (f.given("--max-ending-length"))
    config.max_ending_length = static_cast<std::size_t>(f.max_ending_length);
  if (f.given("--min-word-length"))
    config.min_word_length = static_cast<std::size_t>(f.min_word_length);
  if (f.given("--grid")) config.sweep_grid = posguess::parse_grid(f.grid);
  if (f.given("--policy")) config.selection_policy = f.policy;
  if (f.given("--eval-mode")) config.eval_mode = f.eval_mode;
  if (f.given("--fallback-common")) config.fallback_common = f.fallback_common;
  if (f.given("--fallback-proper")) config.fallback_proper = f.fallback_proper;
  if (f.given("--merge")) config.merge = f.merge;
  if (f.given("--threads")) config.threads = f.threads;
  config.validate();
  return config;
}

void print_metrics(const char* mode, const posguess::Metrics& m) {
  std::printf("%-8s precision=%.6f recall=%.6f coverage=%.6f words=%zu weight=%.6g\n",
              mode, m.precision, m.recall, m.coverage, m.n_words, m.total_weight);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posguess: statistical part-of-speech guessing rules for unknown words"};
  app.set_version_flag("--version", std::string(posguess::kVersion));
  app.require_subcommand(1);

  // induce
  auto* induce = app.add_subcommand("induce", "Extract prefix/suffix/ending rule TSVs");
  auto induce_flags = add_common_flags(induce);
  induce->callback([induce_flags] { posguess::cmd_induce(resolve_config(*induce_flags)); });

  // score
  auto* score = app.add_subcommand("score", "Fill x/n/score columns of a rule TSV");
  auto score_flags = add_common_flags(score);
  auto score_rules = std::make_shared<std::string>();
  auto score_out = std::make_shared<std::string>();
  score->add_option("--rules", *score_rules, "Rule TSV from `induce`")->required();
  score->add_option("--output", *score_out, "Scored rule TSV to write")->required();
  score->callback([=] {
    posguess::cmd_score(resolve_config(*score_flags), *score_rules, *score_out);
  });

  // select
  auto* select = app.add_subcommand("select", "Split scored rules by theta_s, merging rejects");
  auto select_flags = add_common_flags(select);
  auto select_scored = std::make_shared<std::string>();
  auto select_paths = std::make_shared<posguess::SelectPaths>();
  select->add_option("--scored", *select_scored, "Scored rule TSV from `score`")->required();
  select->add_option("--accepted", select_paths->accepted, "Accepted rule TSV")->required();
  select->add_option("--rejected", select_paths->rejected, "Rejected rule TSV (optional)");
  select->add_option("--audit", select_paths->audit,
                     "Audit TSV with the merged marker column (optional)");
  select->callback([=] {
    posguess::cmd_select(resolve_config(*select_flags), *select_scored, *select_paths);
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate a rule-set across a theta_s grid");
  auto sweep_flags = add_common_flags(sweep);
  auto sweep_scored = std::make_shared<std::string>();
  auto sweep_out = std::make_shared<std::string>();
  sweep->add_option("--scored", *sweep_scored, "Scored rule TSV from `score`")->required();
  sweep->add_option("--output", *sweep_out, "Sweep table to write")->required();
  sweep->callback([=] {
    const auto outcome =
        posguess::cmd_sweep(resolve_config(*sweep_flags), *sweep_scored, *sweep_out);
    const auto& best = outcome.rows[outcome.best_row];
    std::printf("best theta_s=%g accepted=%zu precision=%.6f recall=%.6f coverage=%.6f\n",
                best.theta_s, best.accepted_rule_count, best.metrics.precision,
                best.metrics.recall, best.metrics.coverage);
  });

  // eval
  auto* eval = app.add_subcommand("eval", "Precision/recall/coverage of accepted rule-sets");
  auto eval_flags = add_common_flags(eval);
  auto eval_prefix = std::make_shared<std::string>();
  auto eval_suffix = std::make_shared<std::string>();
  auto eval_ending = std::make_shared<std::string>();
  eval->add_option("--prefix-rules", *eval_prefix, "Accepted prefix rule TSV");
  eval->add_option("--suffix-rules", *eval_suffix, "Accepted suffix rule TSV");
  eval->add_option("--ending-rules", *eval_ending, "Accepted ending rule TSV");
  eval->callback([=] {
    const auto report = posguess::cmd_eval(resolve_config(*eval_flags), *eval_prefix,
                                           *eval_suffix, *eval_ending);
    if (report.lexicon) print_metrics("lexicon", *report.lexicon);
    if (report.corpus) print_metrics("corpus", *report.corpus);
  });

  // guess
  auto* guess = app.add_subcommand("guess", "Guess POS classes for a stream of words");
  auto guess_flags = add_common_flags(guess);
  auto guess_prefix = std::make_shared<std::string>();
  auto guess_suffix = std::make_shared<std::string>();
  auto guess_ending = std::make_shared<std::string>();
  auto guess_in = std::make_shared<std::string>();
  auto guess_out = std::make_shared<std::string>();
  auto guess_fallback = std::make_shared<bool>(false);
  guess->add_option("--prefix-rules", *guess_prefix, "Accepted prefix rule TSV");
  guess->add_option("--suffix-rules", *guess_suffix, "Accepted suffix rule TSV");
  guess->add_option("--ending-rules", *guess_ending, "Accepted ending rule TSV");
  guess->add_option("--input", *guess_in, "Word list (default stdin)");
  guess->add_option("--output", *guess_out, "Guesses TSV (default stdout)");
  guess->add_flag("--fallback", *guess_fallback,
                  "Fall back to NN/NP by capitalization when no rule applies");
  guess->callback([=] {
    const auto config = resolve_config(*guess_flags);
    std::ifstream file_in;
    std::istream* in = &std::cin;
    if (!guess_in->empty()) {
      file_in.open(*guess_in);
      if (!file_in) throw posguess::IoError("cannot open word list " + *guess_in);
      in = &file_in;
    }
    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!guess_out->empty()) {
      file_out.open(*guess_out);
      if (!file_out) throw posguess::IoError("cannot write " + *guess_out);
      out = &file_out;
    }
    posguess::cmd_guess(config, *guess_prefix, *guess_suffix, *guess_ending,
                        *guess_fallback, *in, *out);
  });

  // tag-eval
  auto* tag_eval = app.add_subcommand("tag-eval", "Total/unknown scores of tagged text");
  auto tag_flags = add_common_flags(tag_eval);
  auto tagged_path = std::make_shared<std::string>();
  auto unknown_lexicon = std::make_shared<std::string>();
  tag_eval->add_option("--tagged", *tagged_path, "token<TAB>gold<TAB>predicted[<TAB>U]")
      ->required();
  tag_eval->add_option("--unknown-lexicon", *unknown_lexicon,
                       "Tokens absent from this lexicon count as unknown");
  tag_eval->callback([=] {
    posguess::cmd_tag_eval(resolve_config(*tag_flags), *tagged_path, *unknown_lexicon,
                           std::cout);
  });

  // pipeline
  auto* pipeline = app.add_subcommand(
      "pipeline", "induce -> score -> select -> eval with a run manifest");
  auto pipeline_flags = add_common_flags(pipeline);
  pipeline->callback(
      [pipeline_flags] { posguess::run_pipeline(resolve_config(*pipeline_flags)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const posguess::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
