#pragma once

#include <cstdint>
#include <optional>

#include "posguess/lexicon.hpp"
#include "posguess/rules.hpp"

namespace posguess {

// Affix segmentation by string subtraction. For Suffix, yields a rule iff
// longer.word == shorter.word + affix with a non-empty affix; for Prefix,
// iff longer.word == affix + shorter.word. The I-class is the shorter
// word's class, the R-class the longer word's, f = 1. Non-matching pairs
// yield nothing. kind must be Prefix or Suffix.
std::optional<GuessingRule> subtract(const LexiconEntry& longer,
                                     const LexiconEntry& shorter, RuleKind kind);

// Applies subtract to every ordered pair of distinct lexicon entries;
// identical rules accumulate f. Pairs are enumerated through stem lookups
// rather than a literal double loop, with identical observable results.
// Throws std::invalid_argument on an empty lexicon.
RuleTable extract_morphological(const Lexicon& lexicon, RuleKind kind,
                                unsigned threads = 1);

// Emits one ending rule per entry and per ending length
// 1..min(max_len, |word|-1), with a void I-class and the entry's class as
// R-class. The |word|-1 cap keeps the implied stem non-empty.
RuleTable extract_endings(const Lexicon& lexicon, std::size_t max_len = 5,
                          unsigned threads = 1);

// Retains exactly the rules with f >= theta. theta must be >= 1.
RuleTable filter_by_frequency(const RuleTable& table, std::uint64_t theta);

}  // namespace posguess
