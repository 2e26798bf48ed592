// Test-only oracles: independent brute-force implementations of extraction,
// tallying, scoring and evaluation, plus random-instance and planted-data
// generators. Everything here stays deliberately separate from the library's
// code paths so the two can disagree.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posguess/evaluation.hpp"
#include "posguess/guesser.hpp"
#include "posguess/induction.hpp"
#include "posguess/lexicon.hpp"
#include "posguess/scoring.hpp"

namespace oracle {

// Literal double loop over every ordered pair of distinct entries.
posguess::RuleTable brute_extract_morphological(const posguess::Lexicon& lexicon,
                                                posguess::RuleKind kind);

// Per-entry ending enumeration with its own code-point slicing.
posguess::RuleTable brute_extract_endings(const posguess::Lexicon& lexicon,
                                          std::size_t max_len);

// Number of ordered pairs for which subtraction yields a rule.
std::uint64_t brute_pair_count(const posguess::Lexicon& lexicon,
                               posguess::RuleKind kind);

posguess::TrialCounts brute_tally(const posguess::GuessingRule& rule,
                                  const posguess::Lexicon& lexicon,
                                  const posguess::FrequencyTable& freqs);

posguess::Metrics brute_evaluate(const posguess::CascadingGuesser& guesser,
                                 const posguess::Lexicon& eval_lexicon,
                                 const posguess::FrequencyTable* freqs);

// Long-double recomputation of the score formula.
double reference_score(std::uint64_t x, std::uint64_t n, std::size_t len,
                       double z = 1.65);
double reference_p_hat(std::uint64_t x, std::uint64_t n);

struct Instance {
  posguess::Lexicon lexicon;
  posguess::FrequencyTable freqs;
};

// Lexicon of at most 50 words over a small alphabet with up to 6 tags and a
// corpus of at most 500 tokens; built to produce affix collisions.
Instance random_instance(std::mt19937& rng);

struct PlantedData {
  posguess::Lexicon training;
  posguess::FrequencyTable freqs;
  posguess::Lexicon held_out;       // inflected forms with oracle truth classes
  posguess::GuessingRule plural_rule;  // [s (NN) (NNS)]
  posguess::GuessingRule past_rule;    // [ed (VB) (VBD)]
};

// Synthetic lexicon/corpus with productive -s plurals and -ed pasts plus 10%
// noise words; the held-out set holds inflections whose stems are in the
// training lexicon but whose forms are not.
PlantedData make_planted(std::uint32_t seed);

}  // namespace oracle
