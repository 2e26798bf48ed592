#include "posguess/pipeline.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "posguess/errors.hpp"
#include "posguess/guesser.hpp"
#include "posguess/induction.hpp"
#include "posguess/merging.hpp"
#include "posguess/rules_io.hpp"
#include "posguess/text.hpp"
#include "posguess/version.hpp"

namespace posguess {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return buffer.str();
}

// Write-then-rename keeps failed runs from leaving partial artifacts.
void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string());
  }
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    if (!out) throw IoError("error writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string());
}

Lexicon load_lexicon_file(const std::string& path) {
  if (path.empty()) throw ParseError("no lexicon configured");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon " + path);
  return load_lexicon(in, path);
}

FrequencyTable load_frequencies_file(const std::string& path) {
  if (path.empty()) throw ParseError("no frequency table configured");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open frequency table " + path);
  return load_frequencies(in, path);
}

TagSet load_closed_class_file(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open closed-class tag list " + path);
  return load_tag_list(in, path);
}

std::vector<ScoredRule> load_rules_file(const std::string& path,
                                        std::string_view expected_producer) {
  if (path.empty()) throw ParseError("no rule file given");
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open rule file " + path + " (produce it with `" +
                  std::string(expected_producer) + "`)");
  return read_rule_tsv(in, path);
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string fmt12g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

fs::path out_path(const PipelineConfig& config, std::string_view name) {
  return fs::path(config.output_dir) / name;
}

// Evaluation lexicon: the held-out lexicon when configured, the training
// lexicon otherwise, in both cases filtered for evaluation.
Lexicon build_eval_lexicon(const PipelineConfig& config, const Lexicon& training) {
  const TagSet closed = load_closed_class_file(config.closed_class_path);
  if (config.eval_lexicon_path.empty())
    return filter_for_evaluation(training, config.min_word_length, closed);
  const Lexicon held_out = load_lexicon_file(config.eval_lexicon_path);
  return filter_for_evaluation(held_out, config.min_word_length, closed);
}

RuleSet load_rule_set(RuleKind kind, const std::string& path) {
  if (path.empty()) return RuleSet(kind);
  std::vector<ScoredRule> rules = load_rules_file(path, "select");
  return RuleSet(kind, std::move(rules));
}

CascadingGuesser build_guesser_from_files(const PipelineConfig& config,
                                          const std::string& prefix_path,
                                          const std::string& suffix_path,
                                          const std::string& ending_path,
                                          Lexicon training) {
  return CascadingGuesser(load_rule_set(RuleKind::Prefix, prefix_path),
                          load_rule_set(RuleKind::Suffix, suffix_path),
                          load_rule_set(RuleKind::Ending, ending_path),
                          std::move(training), Tag(config.fallback_common),
                          Tag(config.fallback_proper));
}

}  // namespace

void cmd_induce(const PipelineConfig& config) {
  config.validate();
  const Lexicon lexicon = load_lexicon_file(config.lexicon_path);
  if (lexicon.empty())
    throw ParseError("lexicon " + config.lexicon_path + " has no entries");

  struct Job {
    RuleKind kind;
    std::string_view file;
  };
  const Job jobs[] = {{RuleKind::Prefix, "prefix_rules.tsv"},
                      {RuleKind::Suffix, "suffix_rules.tsv"},
                      {RuleKind::Ending, "ending_rules.tsv"}};
  for (const Job& job : jobs) {
    RuleTable table = job.kind == RuleKind::Ending
                          ? extract_endings(lexicon, config.max_ending_length,
                                            config.threads)
                          : extract_morphological(lexicon, job.kind, config.threads);
    table = filter_by_frequency(table, config.theta_for(job.kind));
    std::ostringstream out;
    write_rule_tsv(out, table);
    write_file_atomic(out_path(config, job.file), out.str());
  }
}

void cmd_score(const PipelineConfig& config, const std::string& rules_path,
               const std::string& out_file) {
  config.validate();
  const Lexicon lexicon = load_lexicon_file(config.lexicon_path);
  const FrequencyTable freqs = load_frequencies_file(config.frequencies_path);
  std::vector<ScoredRule> raw = load_rules_file(rules_path, "induce");

  std::vector<GuessingRule> rules;
  rules.reserve(raw.size());
  for (const ScoredRule& r : raw) rules.push_back(r.rule);

  std::vector<ScoredRule> scored =
      tally_and_score(rules, lexicon, freqs, config.scoring(0.0), config.threads);
  std::ostringstream out;
  write_rule_tsv(out, std::move(scored));
  write_file_atomic(out_file, out.str());
}

void cmd_select(const PipelineConfig& config, const std::string& scored_path,
                const SelectPaths& paths) {
  config.validate();
  if (paths.accepted.empty()) throw ParseError("select: no accepted output path");
  std::vector<ScoredRule> scored = load_rules_file(scored_path, "score");

  std::map<RuleKind, std::vector<ScoredRule>> by_kind;
  for (auto& rule : scored) by_kind[rule.rule.kind].push_back(std::move(rule));

  std::vector<ScoredRule> accepted;
  std::vector<ScoredRule> rejected;
  for (auto& [kind, rules] : by_kind) {
    const double theta_s = config.theta_s_for(kind);
    SelectionResult parts = select(std::move(rules), theta_s);
    if (config.merge) {
      MergeOutcome merged = merge_below_threshold(
          MergePool(std::move(parts.rejected)), theta_s, config.scoring(theta_s));
      for (auto& rule : merged.accepted) parts.accepted.push_back(std::move(rule));
      parts.rejected = std::move(merged.residual);
    }
    for (auto& rule : parts.accepted) accepted.push_back(std::move(rule));
    for (auto& rule : parts.rejected) rejected.push_back(std::move(rule));
  }

  {
    std::ostringstream out;
    write_rule_tsv(out, accepted);
    write_file_atomic(paths.accepted, out.str());
  }
  if (!paths.rejected.empty()) {
    std::ostringstream out;
    write_rule_tsv(out, rejected);
    write_file_atomic(paths.rejected, out.str());
  }
  if (!paths.audit.empty()) {
    std::vector<ScoredRule> all = accepted;
    all.insert(all.end(), rejected.begin(), rejected.end());
    std::ostringstream out;
    write_rule_tsv(out, std::move(all), /*merged_column=*/true);
    write_file_atomic(paths.audit, out.str());
  }
}

SweepOutcome cmd_sweep(const PipelineConfig& config, const std::string& scored_path,
                       const std::string& out_file) {
  config.validate();
  std::vector<ScoredRule> scored = load_rules_file(scored_path, "score");
  const Lexicon training = load_lexicon_file(config.lexicon_path);
  const Lexicon eval_lexicon = build_eval_lexicon(config, training);

  FrequencyTable freqs;
  const bool corpus_mode = config.eval_mode == "corpus";
  if (corpus_mode) freqs = load_frequencies_file(config.frequencies_path);

  SweepInputs inputs;
  inputs.training = &training;
  inputs.eval = &eval_lexicon;
  inputs.freqs = corpus_mode ? &freqs : nullptr;
  inputs.config = config.scoring(0.0);
  inputs.merge = config.merge;
  inputs.threads = config.threads;

  SweepOutcome outcome;
  outcome.rows = threshold_sweep(scored, config.sweep_grid, inputs);
  outcome.best_row = pick_best_row(outcome.rows, config.selection_policy);

  std::ostringstream out;
  out << "# theta_s\taccepted\tprecision\trecall\tcoverage\tn_words\ttotal_weight\n";
  for (const SweepRow& row : outcome.rows) {
    out << fmt12g(row.theta_s) << '\t' << row.accepted_rule_count << '\t'
        << fmt12g(row.metrics.precision) << '\t' << fmt12g(row.metrics.recall) << '\t'
        << fmt12g(row.metrics.coverage) << '\t' << row.metrics.n_words << '\t'
        << fmt12g(row.metrics.total_weight) << '\n';
  }
  out << "# best\t" << fmt12g(outcome.rows[outcome.best_row].theta_s)
      << "\tpolicy=" << config.selection_policy << '\n';
  write_file_atomic(out_file, out.str());
  return outcome;
}

EvalReport cmd_eval(const PipelineConfig& config, const std::string& prefix_path,
                    const std::string& suffix_path, const std::string& ending_path) {
  config.validate();
  Lexicon training = load_lexicon_file(config.lexicon_path);
  const Lexicon eval_lexicon = build_eval_lexicon(config, training);

  const bool want_lexicon = config.eval_mode == "lexicon" || config.eval_mode == "both";
  const bool want_corpus = config.eval_mode == "corpus" || config.eval_mode == "both";
  FrequencyTable freqs;
  if (want_corpus) freqs = load_frequencies_file(config.frequencies_path);

  const CascadingGuesser guesser = build_guesser_from_files(
      config, prefix_path, suffix_path, ending_path, std::move(training));

  EvalReport report;
  if (want_lexicon)
    report.lexicon = evaluate(guesser, eval_lexicon, nullptr, config.threads);
  if (want_corpus)
    report.corpus = evaluate(guesser, eval_lexicon, &freqs, config.threads);

  std::ostringstream tsv;
  std::ostringstream table;
  table << "Measure    Test     Value     Words   Weight\n";
  auto emit = [&](const char* mode, const char* mode_title, const Metrics& m) {
    tsv << "precision\t" << mode << '\t' << fmt12g(m.precision) << '\n'
        << "recall\t" << mode << '\t' << fmt12g(m.recall) << '\n'
        << "coverage\t" << mode << '\t' << fmt12g(m.coverage) << '\n'
        << "n_words\t" << mode << '\t' << m.n_words << '\n'
        << "total_weight\t" << mode << '\t' << fmt12g(m.total_weight) << '\n';
    char line[160];
    std::snprintf(line, sizeof(line), "%-10s %-8s %-9s %-7zu %s\n", "Recall",
                  mode_title, fmt6(m.recall).c_str(), m.n_words,
                  fmt12g(m.total_weight).c_str());
    table << line;
    std::snprintf(line, sizeof(line), "%-10s %-8s %-9s %-7zu %s\n", "Precision",
                  mode_title, fmt6(m.precision).c_str(), m.n_words,
                  fmt12g(m.total_weight).c_str());
    table << line;
    std::snprintf(line, sizeof(line), "%-10s %-8s %-9s %-7zu %s\n", "Coverage",
                  mode_title, fmt6(m.coverage).c_str(), m.n_words,
                  fmt12g(m.total_weight).c_str());
    table << line;
  };
  if (report.lexicon) emit("lexicon", "Lexicon", *report.lexicon);
  if (report.corpus) emit("corpus", "Corpus", *report.corpus);

  write_file_atomic(out_path(config, "metrics.tsv"), tsv.str());
  write_file_atomic(out_path(config, "metrics.txt"), table.str());
  return report;
}

void cmd_guess(const PipelineConfig& config, const std::string& prefix_path,
               const std::string& suffix_path, const std::string& ending_path,
               bool fallback, std::istream& words, std::ostream& out) {
  config.validate();
  Lexicon training = load_lexicon_file(config.lexicon_path);
  const CascadingGuesser guesser = build_guesser_from_files(
      config, prefix_path, suffix_path, ending_path, std::move(training));

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(words, line)) {
    ++line_no;
    std::string_view text_line = line;
    if (!text_line.empty() && text_line.back() == '\r') text_line.remove_suffix(1);
    if (text::trim(text_line).empty()) continue;

    std::string_view word = text_line;
    bool sentence_initial = false;
    if (const auto tab = text_line.find('\t'); tab != std::string_view::npos) {
      word = text_line.substr(0, tab);
      const auto marker = text::trim(text_line.substr(tab + 1));
      if (marker == "I")
        sentence_initial = true;
      else if (!marker.empty())
        throw_parse_error("<words>", line_no, "unknown marker after word");
    }
    if (word.empty()) throw_parse_error("<words>", line_no, "empty word");
    if (text::contains_whitespace(word))
      throw_parse_error("<words>", line_no, "word contains whitespace");

    if (fallback) {
      out << word << '\t' << guesser.guess_with_fallback(word, sentence_initial).str()
          << '\n';
    } else {
      const auto guessed = guesser.guess(word);
      out << word << '\t' << (guessed ? guessed->str() : "-") << '\n';
    }
  }
}

TaggingScores cmd_tag_eval(const PipelineConfig& config, const std::string& tagged_path,
                           const std::string& unknown_lexicon_path, std::ostream& out) {
  config.validate();
  std::ifstream in(tagged_path, std::ios::binary);
  if (!in) throw IoError("cannot open tagged text " + tagged_path);

  Lexicon unknown_lexicon;
  const Lexicon* lexicon = nullptr;
  if (!unknown_lexicon_path.empty()) {
    unknown_lexicon = load_lexicon_file(unknown_lexicon_path);
    lexicon = &unknown_lexicon;
  }
  const std::vector<TaggedToken> tokens = load_tagged_text(in, tagged_path, lexicon);
  if (tokens.empty()) throw ParseError(tagged_path + ": no tokens");
  const TaggingScores scores = tagging_scores(tokens);

  out << "total_tokens\t" << scores.total_tokens << '\n'
      << "unknown_tokens\t" << scores.unknown_tokens << '\n'
      << "total_mistagged\t" << scores.total_mistagged << '\n'
      << "unknown_mistagged\t" << scores.unknown_mistagged << '\n'
      << "total_score\t" << fmt6(scores.total_score) << '\n'
      << "unknown_score\t"
      << (scores.unknown_score ? fmt6(*scores.unknown_score) : "-") << '\n';
  return scores;
}

void run_pipeline(const PipelineConfig& config) {
  config.validate();
  cmd_induce(config);

  const struct {
    RuleKind kind;
    const char* name;
  } kinds[] = {{RuleKind::Prefix, "prefix"},
               {RuleKind::Suffix, "suffix"},
               {RuleKind::Ending, "ending"}};

  for (const auto& [kind, name] : kinds) {
    const std::string base(name);
    cmd_score(config, out_path(config, base + "_rules.tsv").string(),
              out_path(config, base + "_scored.tsv").string());
    SelectPaths paths;
    paths.accepted = out_path(config, base + "_accepted.tsv").string();
    paths.rejected = out_path(config, base + "_rejected.tsv").string();
    paths.audit = out_path(config, base + "_audit.tsv").string();
    cmd_select(config, out_path(config, base + "_scored.tsv").string(), paths);
  }

  cmd_eval(config, out_path(config, "prefix_accepted.tsv").string(),
           out_path(config, "suffix_accepted.tsv").string(),
           out_path(config, "ending_accepted.tsv").string());

  // Manifest: resolved config plus input checksums, no timestamps, so
  // reruns stay byte-identical.
  std::ostringstream manifest;
  manifest << "# posguess run manifest\n";
  manifest << "version = " << kVersion << '\n';
  manifest << "lexicon = " << config.lexicon_path << '\n';
  manifest << "frequencies = " << config.frequencies_path << '\n';
  manifest << "closed-class-tags = " << config.closed_class_path << '\n';
  manifest << "eval-lexicon = " << config.eval_lexicon_path << '\n';
  manifest << "output-dir = " << config.output_dir << '\n';
  manifest << "theta-prefix = " << config.theta_prefix << '\n';
  manifest << "theta-suffix = " << config.theta_suffix << '\n';
  manifest << "theta-ending = " << config.theta_ending << '\n';
  manifest << "theta-s-prefix = " << fmt12g(config.theta_s_prefix) << '\n';
  manifest << "theta-s-suffix = " << fmt12g(config.theta_s_suffix) << '\n';
  manifest << "theta-s-ending = " << fmt12g(config.theta_s_ending) << '\n';
  manifest << "z = " << fmt12g(config.z) << '\n';
  manifest << "confidence = " << fmt12g(config.confidence) << '\n';
  manifest << "min-trials = " << config.min_trials << '\n';
  manifest << "max-ending-length = " << config.max_ending_length << '\n';
  manifest << "min-word-length = " << config.min_word_length << '\n';
  manifest << "selection-policy = " << config.selection_policy << '\n';
  manifest << "merge = " << (config.merge ? "true" : "false") << '\n';
  manifest << "eval-mode = " << config.eval_mode << '\n';
  manifest << "fallback-common = " << config.fallback_common << '\n';
  manifest << "fallback-proper = " << config.fallback_proper << '\n';

  auto checksum = [](const std::string& path) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(text::fnv1a64(read_file(path))));
    return std::string(buf);
  };
  manifest << "checksum.lexicon = " << checksum(config.lexicon_path) << '\n';
  manifest << "checksum.frequencies = " << checksum(config.frequencies_path) << '\n';
  if (!config.closed_class_path.empty())
    manifest << "checksum.closed-class-tags = " << checksum(config.closed_class_path)
             << '\n';
  if (!config.eval_lexicon_path.empty())
    manifest << "checksum.eval-lexicon = " << checksum(config.eval_lexicon_path) << '\n';
  write_file_atomic(out_path(config, "manifest.txt"), manifest.str());
}

}  // namespace posguess
