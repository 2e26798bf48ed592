#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posguess/guesser.hpp"
#include "posguess/lexicon.hpp"
#include "posguess/scoring.hpp"

namespace posguess {

struct WordResult {
  std::string word;
  std::optional<POSClass> guessed;
  POSClass truth;      // never empty
  double weight = 1.0; // 1 in lexicon mode, corpus frequency in corpus mode
};

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double coverage = 0.0;
  std::size_t n_words = 0;
  double total_weight = 0.0;
};

// precision = |guessed ∩ truth| / |guessed|, recall = |guessed ∩ truth| / |truth|.
// Both classes must be non-empty; uncovered words belong in coverage
// accounting, not here.
std::pair<double, double> word_metrics(const POSClass& guessed, const POSClass& truth);

// Guesses every word of eval_lexicon (no fallback -- coverage measures the
// rules). Lexicon mode weights each word 1; corpus mode (freqs != nullptr)
// weights by corpus frequency and skips words absent from freqs.
std::vector<WordResult> evaluate_words(const CascadingGuesser& guesser,
                                       const Lexicon& eval_lexicon,
                                       const FrequencyTable* freqs = nullptr,
                                       unsigned threads = 1);

// Micro-averaged metrics: coverage is the weight share of covered words;
// precision and recall are weight-averaged over covered words only.
Metrics aggregate(const std::vector<WordResult>& results);

Metrics evaluate(const CascadingGuesser& guesser, const Lexicon& eval_lexicon,
                 const FrequencyTable* freqs = nullptr, unsigned threads = 1);

struct SweepRow {
  double theta_s = 0.0;
  Metrics metrics;
  std::size_t accepted_rule_count = 0;
};

struct SweepInputs {
  const Lexicon* training = nullptr;   // stem lookups for morphological rules
  const Lexicon* eval = nullptr;       // already filtered for evaluation
  const FrequencyTable* freqs = nullptr;  // corpus mode when non-null
  ScoringConfig config;
  bool merge = true;
  unsigned threads = 1;
};

// For each theta_s of the ascending grid: select (and optionally merge) the
// scored rules, build a single-set guesser, evaluate, emit one row. All
// scored rules must share one kind.
std::vector<SweepRow> threshold_sweep(const std::vector<ScoredRule>& scored,
                                      const std::vector<double>& grid,
                                      const SweepInputs& inputs);

// Row picked from a sweep by a named policy. "f1-coverage" (the default
// pipeline policy) maximizes harmonic-mean(precision, recall) * coverage;
// "f1", "precision", "recall" and "coverage" maximize that quantity alone.
// Ties go to the higher threshold.
std::size_t pick_best_row(const std::vector<SweepRow>& rows, std::string_view policy);

struct TaggedToken {
  std::string token;
  Tag gold;
  Tag predicted;
  bool is_unknown = false;
};

struct TaggingScores {
  std::size_t total_tokens = 0;
  std::size_t unknown_tokens = 0;
  std::size_t total_mistagged = 0;
  std::size_t unknown_mistagged = 0;
  double total_score = 0.0;                // correct / total over all tokens
  std::optional<double> unknown_score;     // absent when there are no unknowns
};

TaggingScores tagging_scores(const std::vector<TaggedToken>& tokens);

// Tagged-text TSV: `token<TAB>gold<TAB>predicted[<TAB>U]` with blank lines
// between sentences. A token is unknown when flagged U or, if a lexicon is
// supplied, absent from it.
std::vector<TaggedToken> load_tagged_text(std::istream& in,
                                          std::string_view source_name,
                                          const Lexicon* lexicon = nullptr);

}  // namespace posguess
