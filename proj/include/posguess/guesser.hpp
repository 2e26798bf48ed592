#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posguess/lexicon.hpp"
#include "posguess/scoring.hpp"

namespace posguess {

// Accepted rules of one kind behind an affix index: candidate affixes are
// enumerated from the query word itself (its prefixes or suffixes), so
// lookup cost depends on word length, not rule count.
class RuleSet {
 public:
  explicit RuleSet(RuleKind kind) : kind_(kind) {}

  // Throws std::invalid_argument when a rule's kind differs from kind.
  RuleSet(RuleKind kind, std::vector<ScoredRule> rules);

  RuleKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }
  const std::vector<ScoredRule>& rules() const noexcept { return rules_; }

  // The applicable rule with the longest affix; ties go to the higher score,
  // then the lexicographically first R-class. nullptr when nothing applies.
  const ScoredRule* best_applicable(std::string_view word, const Lexicon& lexicon) const;

 private:
  RuleKind kind_;
  std::vector<ScoredRule> rules_;  // sorted by identity
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_affix_;
  std::vector<std::size_t> affix_byte_lengths_;  // descending, unique
};

// Applies the accepted rule-sets cascadingly -- prefix, then suffix, then
// ending, most accurate family first -- plus the capitalization fallback.
// Holds the training lexicon for the stem lookups of morphological rules.
// Immutable after construction; safe for concurrent guess calls.
class CascadingGuesser {
 public:
  // Set kinds must be Prefix/Suffix/Ending in that order.
  CascadingGuesser(RuleSet prefix, RuleSet suffix, RuleSet ending, Lexicon lexicon,
                   Tag fallback_common = Tag("NN"), Tag fallback_proper = Tag("NP"));

  // First cascade stage with an applicable rule decides; nothing when no
  // rule in any set applies. The word should be unknown to the lexicon
  // (known words are not rejected, but guessing them defeats the purpose).
  std::optional<POSClass> guess(std::string_view word) const;

  // guess(), falling back to the proper-noun tag for words capitalized
  // inside a sentence and the common-noun tag otherwise. Never empty.
  POSClass guess_with_fallback(std::string_view word, bool sentence_initial) const;

  const Lexicon& lexicon() const noexcept { return lexicon_; }
  const RuleSet& prefix_set() const noexcept { return prefix_; }
  const RuleSet& suffix_set() const noexcept { return suffix_; }
  const RuleSet& ending_set() const noexcept { return ending_; }

 private:
  RuleSet prefix_;
  RuleSet suffix_;
  RuleSet ending_;
  Lexicon lexicon_;
  Tag fallback_common_;
  Tag fallback_proper_;
};

}  // namespace posguess
