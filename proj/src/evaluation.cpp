#include "posguess/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <stdexcept>

#include "posguess/errors.hpp"
#include "posguess/merging.hpp"
#include "posguess/parallel.hpp"
#include "posguess/text.hpp"

namespace posguess {

std::pair<double, double> word_metrics(const POSClass& guessed, const POSClass& truth) {
  if (guessed.empty()) throw std::invalid_argument("word_metrics: empty guess");
  if (truth.empty()) throw std::invalid_argument("word_metrics: empty truth");
  const auto hits = static_cast<double>(guessed.intersection_size(truth));
  return {hits / static_cast<double>(guessed.size()),
          hits / static_cast<double>(truth.size())};
}

std::vector<WordResult> evaluate_words(const CascadingGuesser& guesser,
                                       const Lexicon& eval_lexicon,
                                       const FrequencyTable* freqs,
                                       unsigned threads) {
  if (eval_lexicon.empty())
    throw std::invalid_argument("evaluate: empty evaluation lexicon");

  std::vector<WordResult> results;
  results.reserve(eval_lexicon.size());
  for (const auto& [word, truth] : eval_lexicon.entries()) {
    double weight = 1.0;
    if (freqs != nullptr) {
      const std::uint64_t freq = freqs->count(word);
      if (freq == 0) continue;  // corpus mode: unseen words carry no weight
      weight = static_cast<double>(freq);
    }
    results.push_back(WordResult{word, std::nullopt, truth, weight});
  }
  if (results.empty())
    throw std::invalid_argument(
        "evaluate: no evaluation word occurs in the frequency table");

  parallel_for(results.size(), threads,
               [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      results[i].guessed = guesser.guess(results[i].word);
  });
  return results;
}

Metrics aggregate(const std::vector<WordResult>& results) {
  if (results.empty()) throw std::invalid_argument("aggregate: no word results");
  Metrics metrics;
  double covered_weight = 0.0;
  double precision_sum = 0.0;
  double recall_sum = 0.0;
  for (const WordResult& result : results) {
    metrics.total_weight += result.weight;
    ++metrics.n_words;
    if (!result.guessed || result.guessed->empty()) continue;
    covered_weight += result.weight;
    const auto [precision, recall] = word_metrics(*result.guessed, result.truth);
    precision_sum += result.weight * precision;
    recall_sum += result.weight * recall;
  }
  metrics.coverage = covered_weight / metrics.total_weight;
  if (covered_weight > 0.0) {
    metrics.precision = precision_sum / covered_weight;
    metrics.recall = recall_sum / covered_weight;
  }
  return metrics;
}

Metrics evaluate(const CascadingGuesser& guesser, const Lexicon& eval_lexicon,
                 const FrequencyTable* freqs, unsigned threads) {
  return aggregate(evaluate_words(guesser, eval_lexicon, freqs, threads));
}

std::vector<SweepRow> threshold_sweep(const std::vector<ScoredRule>& scored,
                                      const std::vector<double>& grid,
                                      const SweepInputs& inputs) {
  if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i - 1] < grid[i]))
      throw std::invalid_argument("sweep: grid must be strictly ascending");
  if (scored.empty()) throw std::invalid_argument("sweep: no scored rules");
  if (inputs.training == nullptr || inputs.eval == nullptr)
    throw std::invalid_argument("sweep: missing lexicons");

  const RuleKind kind = scored.front().rule.kind;
  for (const ScoredRule& rule : scored)
    if (rule.rule.kind != kind)
      throw std::invalid_argument("sweep: rules must share one kind");

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double theta_s : grid) {
    SelectionResult parts = select(scored, theta_s);
    if (inputs.merge) {
      ScoringConfig config = inputs.config;
      config.theta_s = theta_s;
      MergeOutcome merged =
          merge_below_threshold(MergePool(std::move(parts.rejected)), theta_s, config);
      for (auto& rule : merged.accepted) parts.accepted.push_back(std::move(rule));
    }
    const std::size_t accepted_count = parts.accepted.size();

    RuleSet prefix(RuleKind::Prefix);
    RuleSet suffix(RuleKind::Suffix);
    RuleSet ending(RuleKind::Ending);
    switch (kind) {
      case RuleKind::Prefix: prefix = RuleSet(kind, std::move(parts.accepted)); break;
      case RuleKind::Suffix: suffix = RuleSet(kind, std::move(parts.accepted)); break;
      case RuleKind::Ending: ending = RuleSet(kind, std::move(parts.accepted)); break;
    }
    CascadingGuesser guesser(std::move(prefix), std::move(suffix), std::move(ending),
                             *inputs.training);
    SweepRow row;
    row.theta_s = theta_s;
    row.accepted_rule_count = accepted_count;
    row.metrics = evaluate(guesser, *inputs.eval, inputs.freqs, inputs.threads);
    rows.push_back(row);
  }
  return rows;
}

std::size_t pick_best_row(const std::vector<SweepRow>& rows, std::string_view policy) {
  if (rows.empty()) throw std::invalid_argument("pick_best_row: no rows");
  auto value = [&](const Metrics& m) -> double {
    const double pr = m.precision + m.recall;
    const double f1 = pr > 0.0 ? 2.0 * m.precision * m.recall / pr : 0.0;
    if (policy == "f1-coverage") return f1 * m.coverage;
    if (policy == "f1") return f1;
    if (policy == "precision") return m.precision;
    if (policy == "recall") return m.recall;
    if (policy == "coverage") return m.coverage;
    throw std::invalid_argument("unknown selection policy: " + std::string(policy));
  };
  std::size_t best = 0;
  double best_value = value(rows[0].metrics);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double v = value(rows[i].metrics);
    if (v >= best_value) {  // ties go to the higher threshold
      best = i;
      best_value = v;
    }
  }
  return best;
}

TaggingScores tagging_scores(const std::vector<TaggedToken>& tokens) {
  if (tokens.empty()) throw std::invalid_argument("tagging_scores: no tokens");
  TaggingScores scores;
  for (const TaggedToken& token : tokens) {
    ++scores.total_tokens;
    const bool wrong = !(token.predicted == token.gold);
    if (wrong) ++scores.total_mistagged;
    if (token.is_unknown) {
      ++scores.unknown_tokens;
      if (wrong) ++scores.unknown_mistagged;
    }
  }
  scores.total_score =
      static_cast<double>(scores.total_tokens - scores.total_mistagged) /
      static_cast<double>(scores.total_tokens);
  if (scores.unknown_tokens > 0)
    scores.unknown_score =
        static_cast<double>(scores.unknown_tokens - scores.unknown_mistagged) /
        static_cast<double>(scores.unknown_tokens);
  return scores;
}

std::vector<TaggedToken> load_tagged_text(std::istream& in,
                                          std::string_view source_name,
                                          const Lexicon* lexicon) {
  std::vector<TaggedToken> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text_line = line;
    if (!text_line.empty() && text_line.back() == '\r') text_line.remove_suffix(1);
    if (text_line.empty()) continue;  // sentence boundary
    if (text_line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text_line.size(); ++i) {
      if (i == text_line.size() || text_line[i] == '\t') {
        fields.push_back(text_line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() < 3 || fields.size() > 4)
      throw_parse_error(source_name, line_no,
                        "expected `token<TAB>gold<TAB>predicted[<TAB>U]`");
    if (fields[0].empty()) throw_parse_error(source_name, line_no, "empty token");
    bool is_unknown = false;
    if (fields.size() == 4) {
      if (fields[3] != "U")
        throw_parse_error(source_name, line_no, "fourth column must be `U`");
      is_unknown = true;
    }
    if (lexicon != nullptr && !lexicon->contains(fields[0])) is_unknown = true;
    try {
      tokens.push_back(TaggedToken{std::string(fields[0]), Tag(std::string(fields[1])),
                                   Tag(std::string(fields[2])), is_unknown});
    } catch (const std::invalid_argument& e) {
      throw_parse_error(source_name, line_no, e.what());
    }
  }
  return tokens;
}

}  // namespace posguess
