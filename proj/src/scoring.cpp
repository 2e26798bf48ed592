#include "posguess/scoring.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "posguess/parallel.hpp"

namespace posguess {

namespace {

void check_config(const ScoringConfig& config) {
  if (!(config.z > 0.0)) throw std::invalid_argument("z must be positive");
  if (config.min_trials < 1)
    throw std::invalid_argument("min_trials must be >= 1");
  if (config.theta_s < 0.0) throw std::invalid_argument("theta_s must be >= 0");
}

}  // namespace

double ScoredRule::points() const {
  return stats ? stats->points() : -std::numeric_limits<double>::infinity();
}

bool applicable(const GuessingRule& rule, std::string_view word,
                const Lexicon& lexicon) {
  if (word.size() <= rule.affix.size()) return false;
  switch (rule.kind) {
    case RuleKind::Ending:
      return word.ends_with(rule.affix);
    case RuleKind::Suffix: {
      if (!word.ends_with(rule.affix)) return false;
      const POSClass* stem = lexicon.find(word.substr(0, word.size() - rule.affix.size()));
      return stem != nullptr && *stem == rule.i_class;
    }
    case RuleKind::Prefix: {
      if (!word.starts_with(rule.affix)) return false;
      const POSClass* stem = lexicon.find(word.substr(rule.affix.size()));
      return stem != nullptr && *stem == rule.i_class;
    }
  }
  return false;
}

std::optional<POSClass> apply_rule(const GuessingRule& rule, std::string_view word,
                                   const Lexicon& lexicon) {
  if (applicable(rule, word, lexicon)) return rule.r_class;
  return std::nullopt;
}

TrialCounts tally(const GuessingRule& rule, const Lexicon& lexicon,
                  const FrequencyTable& freqs) {
  TrialCounts counts;
  for (const auto& [word, freq] : freqs.counts()) {
    const POSClass* truth = lexicon.find(word);
    if (truth == nullptr) continue;  // no ground truth for this token
    if (!applicable(rule, word, lexicon)) continue;
    counts.n += freq;
    if (rule.r_class == *truth) counts.x += freq;
  }
  return counts;
}

double smoothed_estimate(TrialCounts counts) {
  return (static_cast<double>(counts.x) + 0.5) / (static_cast<double>(counts.n) + 1.0);
}

RuleScore score_rule(TrialCounts counts, std::size_t affix_length,
                     const ScoringConfig& config) {
  check_config(config);
  if (affix_length < 1) throw std::invalid_argument("affix_length must be >= 1");
  if (counts.x > counts.n) throw std::invalid_argument("x exceeds n");
  if (counts.n < config.min_trials)
    throw InsufficientTrials("insufficient trials: n=" + std::to_string(counts.n) +
                             " < min_trials=" + std::to_string(config.min_trials));

  RuleScore result;
  result.p_hat = smoothed_estimate(counts);
  const double s_p =
      std::sqrt(result.p_hat * (1.0 - result.p_hat) / static_cast<double>(counts.n));
  result.lower_conf = result.p_hat - config.z * s_p;
  // The paper's worked divisors (1+log(2)=1.3, 1+log(3)=1.48) fix the
  // logarithm base at 10.
  const double divisor = 1.0 + std::log10(static_cast<double>(affix_length));
  result.score = result.p_hat - config.z * s_p / divisor;
  return result;
}

std::vector<ScoredRule> tally_and_score(const std::vector<GuessingRule>& rules,
                                        const Lexicon& lexicon,
                                        const FrequencyTable& freqs,
                                        const ScoringConfig& config,
                                        unsigned threads) {
  check_config(config);
  std::vector<ScoredRule> scored(rules.size());
  parallel_for(rules.size(), threads,
               [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      ScoredRule& out = scored[i];
      out.rule = rules[i];
      out.counts = tally(rules[i], lexicon, freqs);
      if (out.counts.n >= config.min_trials)
        out.stats = score_rule(out.counts, rules[i].affix_length(), config);
    }
  });
  return scored;
}

SelectionResult select(std::vector<ScoredRule> rules, double theta_s_points) {
  SelectionResult result;
  for (auto& rule : rules) {
    if (rule.scorable() && rule.points() > theta_s_points)
      result.accepted.push_back(std::move(rule));
    else
      result.rejected.push_back(std::move(rule));
  }
  return result;
}

}  // namespace posguess
