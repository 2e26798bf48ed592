#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "posguess/lexicon.hpp"
#include "posguess/rules.hpp"

namespace posguess {

// Positive outcomes x out of n trials of a rule against the corpus; x <= n.
struct TrialCounts {
  std::uint64_t x = 0;
  std::uint64_t n = 0;
};

struct ScoringConfig {
  double z = 1.65;           // normal deviate entering the confidence limit
  double confidence = 0.90;  // informational only; z is authoritative
  double theta_s = 0.0;      // acceptance threshold in points (0-100 scale)
  std::uint64_t min_trials = 1;
};

// Raised by score_rule when n < min_trials; such rules are unscorable and
// treated as rejected.
class InsufficientTrials : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RuleScore {
  double p_hat = 0.0;       // smoothed success proportion (x+0.5)/(n+1)
  double lower_conf = 0.0;  // p_hat - z*s_p, the unadjusted lower limit
  double score = 0.0;       // p_hat - z*s_p/(1+log10(|S|)), held on the [0,1] scale

  double points() const { return score * 100.0; }
};

struct ScoredRule {
  GuessingRule rule;
  TrialCounts counts;
  std::optional<RuleScore> stats;  // absent when the rule is unscorable
  bool merged = false;

  bool scorable() const { return stats.has_value(); }
  // Score in points; -infinity for unscorable rules so they sort and
  // threshold below everything.
  double points() const;
};

// A rule is compatible with a word when its affix matches and, for
// morphological rules, the stripped remainder is a lexicon word whose class
// equals the rule's I-class exactly. Ending rules only require the word to
// be strictly longer than the affix.
bool applicable(const GuessingRule& rule, std::string_view word, const Lexicon& lexicon);

// The rule's R-class when applicable, nothing otherwise.
std::optional<POSClass> apply_rule(const GuessingRule& rule, std::string_view word,
                                   const Lexicon& lexicon);

// Token-weighted trial counts over every word present in both the frequency
// table and the lexicon: compatible words add their corpus frequency to n,
// and to x as well when the guessed class equals the lexicon class exactly.
TrialCounts tally(const GuessingRule& rule, const Lexicon& lexicon,
                  const FrequencyTable& freqs);

// (x+0.5)/(n+1); defined even at n = 0, where it is 0.5.
double smoothed_estimate(TrialCounts counts);

// Lower-confidence-limit score with the standard error shrunk for longer
// affixes:
//   p_hat = (x+0.5)/(n+1)
//   s_p   = sqrt(p_hat*(1-p_hat)/n)
//   score = p_hat - z*s_p/(1 + log10(affix_length))
// Throws InsufficientTrials when counts.n < config.min_trials.
RuleScore score_rule(TrialCounts counts, std::size_t affix_length,
                     const ScoringConfig& config);

// Tallies and scores a batch of rules; parallel over rules, bit-identical
// results regardless of thread count. Rules with n < min_trials come back
// without stats.
std::vector<ScoredRule> tally_and_score(const std::vector<GuessingRule>& rules,
                                        const Lexicon& lexicon,
                                        const FrequencyTable& freqs,
                                        const ScoringConfig& config,
                                        unsigned threads = 1);

struct SelectionResult {
  std::vector<ScoredRule> accepted;  // score strictly above theta_s points
  std::vector<ScoredRule> rejected;  // the rest, unscorable rules included
};

SelectionResult select(std::vector<ScoredRule> rules, double theta_s_points);

}  // namespace posguess
