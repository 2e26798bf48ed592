#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "posguess/config.hpp"
#include "posguess/evaluation.hpp"

namespace posguess {

// Command implementations behind the CLI. Every command validates and loads
// all of its inputs before writing anything, and writes files atomically, so
// failures leave no partial artifacts. Outputs land in config.output_dir
// unless an explicit path is given.

// Writes prefix_rules.tsv, suffix_rules.tsv and ending_rules.tsv,
// frequency-filtered with the per-kind theta.
void cmd_induce(const PipelineConfig& config);

// Fills the x, n and score columns of one rule TSV.
void cmd_score(const PipelineConfig& config, const std::string& rules_path,
               const std::string& out_path);

struct SelectPaths {
  std::string accepted;  // required
  std::string rejected;  // optional: empty skips the file
  std::string audit;     // optional: accepted+residual with the merged marker
};

// Splits scored rules by the per-kind theta_s; when config.merge is set,
// rejected rules are merged and promoted per the merging phase.
void cmd_select(const PipelineConfig& config, const std::string& scored_path,
                const SelectPaths& paths);

struct SweepOutcome {
  std::vector<SweepRow> rows;
  std::size_t best_row = 0;  // index picked by config.selection_policy
};

// One row per grid threshold; the policy-selected best row is appended to
// the output file as a trailing comment.
SweepOutcome cmd_sweep(const PipelineConfig& config, const std::string& scored_path,
                       const std::string& out_path);

struct EvalReport {
  std::optional<Metrics> lexicon;  // present per config.eval_mode
  std::optional<Metrics> corpus;
};

// Builds the cascading guesser from up to three accepted rule TSVs (empty
// path = empty set) and writes metrics.tsv plus an aligned metrics.txt.
EvalReport cmd_eval(const PipelineConfig& config, const std::string& prefix_path,
                    const std::string& suffix_path, const std::string& ending_path);

// Batch guessing: one word per line, optional `<TAB>I` marking the word as
// sentence-initial, `word<TAB>tag tag ...` out (`-` when nothing applies and
// the fallback is off).
void cmd_guess(const PipelineConfig& config, const std::string& prefix_path,
               const std::string& suffix_path, const std::string& ending_path,
               bool fallback, std::istream& words, std::ostream& out);

// Tagging accuracy of an externally tagged text; unknown_lexicon_path may be
// empty, in which case only the U flags mark unknown tokens.
TaggingScores cmd_tag_eval(const PipelineConfig& config, const std::string& tagged_path,
                           const std::string& unknown_lexicon_path, std::ostream& out);

// induce -> score -> select(+merge) -> eval for all three kinds, chained
// through the same files the individual commands use, plus a run manifest
// (config snapshot and input checksums).
void run_pipeline(const PipelineConfig& config);

}  // namespace posguess
