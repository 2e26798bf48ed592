#include "posguess/guesser.hpp"

#include <algorithm>
#include <stdexcept>

#include "posguess/text.hpp"

namespace posguess {

RuleSet::RuleSet(RuleKind kind, std::vector<ScoredRule> rules)
    : kind_(kind), rules_(std::move(rules)) {
  for (const ScoredRule& rule : rules_) {
    if (rule.rule.kind != kind_)
      throw std::invalid_argument("rule kind does not match the set: " +
                                  rule.rule.render());
    if (rule.rule.affix.empty())
      throw std::invalid_argument("rule with empty affix");
  }
  std::sort(rules_.begin(), rules_.end(),
            [](const ScoredRule& a, const ScoredRule& b) {
              return identity_less(a.rule, b.rule);
            });
  for (std::size_t i = 0; i < rules_.size(); ++i)
    by_affix_[rules_[i].rule.affix].push_back(i);
  for (const auto& [affix, ids] : by_affix_)
    affix_byte_lengths_.push_back(affix.size());
  std::sort(affix_byte_lengths_.rbegin(), affix_byte_lengths_.rend());
  affix_byte_lengths_.erase(
      std::unique(affix_byte_lengths_.begin(), affix_byte_lengths_.end()),
      affix_byte_lengths_.end());
}

const ScoredRule* RuleSet::best_applicable(std::string_view word,
                                           const Lexicon& lexicon) const {
  for (std::size_t len : affix_byte_lengths_) {
    if (len >= word.size()) continue;  // guessing needs a non-empty remainder
    const std::string_view affix = kind_ == RuleKind::Prefix
                                       ? word.substr(0, len)
                                       : word.substr(word.size() - len);
    const auto it = by_affix_.find(affix);
    if (it == by_affix_.end()) continue;
    const ScoredRule* best = nullptr;
    for (std::size_t idx : it->second) {
      const ScoredRule& candidate = rules_[idx];
      if (!applicable(candidate.rule, word, lexicon)) continue;
      if (best == nullptr || candidate.points() > best->points() ||
          (candidate.points() == best->points() &&
           candidate.rule.r_class < best->rule.r_class))
        best = &candidate;
    }
    if (best != nullptr) return best;  // longest matching affix wins
  }
  return nullptr;
}

CascadingGuesser::CascadingGuesser(RuleSet prefix, RuleSet suffix, RuleSet ending,
                                   Lexicon lexicon, Tag fallback_common,
                                   Tag fallback_proper)
    : prefix_(std::move(prefix)),
      suffix_(std::move(suffix)),
      ending_(std::move(ending)),
      lexicon_(std::move(lexicon)),
      fallback_common_(std::move(fallback_common)),
      fallback_proper_(std::move(fallback_proper)) {
  if (prefix_.kind() != RuleKind::Prefix || suffix_.kind() != RuleKind::Suffix ||
      ending_.kind() != RuleKind::Ending)
    throw std::invalid_argument("rule-set kinds must be prefix/suffix/ending");
}

std::optional<POSClass> CascadingGuesser::guess(std::string_view word) const {
  if (word.empty()) throw std::invalid_argument("cannot guess an empty word");
  for (const RuleSet* set : {&prefix_, &suffix_, &ending_}) {
    if (const ScoredRule* rule = set->best_applicable(word, lexicon_))
      return rule->rule.r_class;
  }
  return std::nullopt;
}

POSClass CascadingGuesser::guess_with_fallback(std::string_view word,
                                               bool sentence_initial) const {
  if (auto guessed = guess(word)) return *guessed;
  // Capitalization is informative only inside a sentence.
  if (!sentence_initial && text::starts_uppercase(word))
    return POSClass({fallback_proper_});
  return POSClass({fallback_common_});
}

}  // namespace posguess
