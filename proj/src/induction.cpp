#include "posguess/induction.hpp"

#include <stdexcept>
#include <vector>

#include "posguess/parallel.hpp"
#include "posguess/text.hpp"

namespace posguess {

std::optional<GuessingRule> subtract(const LexiconEntry& longer,
                                     const LexiconEntry& shorter, RuleKind kind) {
  if (kind == RuleKind::Ending)
    throw std::invalid_argument("subtract applies to prefix and suffix kinds only");
  const std::string_view lw = longer.word;
  const std::string_view sw = shorter.word;
  if (lw.size() <= sw.size()) return std::nullopt;
  std::string affix;
  if (kind == RuleKind::Suffix) {
    if (!lw.starts_with(sw)) return std::nullopt;
    affix = std::string(lw.substr(sw.size()));
  } else {
    if (!lw.ends_with(sw)) return std::nullopt;
    affix = std::string(lw.substr(0, lw.size() - sw.size()));
  }
  return GuessingRule{kind, std::move(affix), shorter.pos_class, longer.pos_class, 1};
}

RuleTable extract_morphological(const Lexicon& lexicon, RuleKind kind,
                                unsigned threads) {
  if (kind == RuleKind::Ending)
    throw std::invalid_argument("extract_morphological handles prefix/suffix kinds");
  if (lexicon.empty()) throw std::invalid_argument("empty lexicon");

  std::vector<const std::pair<const std::string, POSClass>*> entries;
  entries.reserve(lexicon.size());
  for (const auto& entry : lexicon.entries()) entries.push_back(&entry);

  std::vector<RuleTable> partial(plan_workers(entries.size(), threads));

  // Every ordered pair (longer, shorter) with a non-empty affix has the
  // shorter word as a proper prefix (suffix kind) or suffix (prefix kind)
  // of the longer one, so splitting the longer word at every byte position
  // and looking the stem up visits exactly the pairs the double loop would.
  parallel_for(entries.size(), threads,
               [&](unsigned worker, std::size_t begin, std::size_t end) {
    RuleTable& table = partial[worker];
    for (std::size_t i = begin; i < end; ++i) {
      const std::string_view word = entries[i]->first;
      const POSClass& r_class = entries[i]->second;
      for (std::size_t cut = 1; cut < word.size(); ++cut) {
        const auto stem = kind == RuleKind::Suffix ? word.substr(0, cut)
                                                   : word.substr(cut);
        const auto affix = kind == RuleKind::Suffix ? word.substr(cut)
                                                    : word.substr(0, cut);
        const POSClass* i_class = lexicon.find(stem);
        if (i_class == nullptr) continue;
        table.add(GuessingRule{kind, std::string(affix), *i_class, r_class, 1});
      }
    }
  });

  RuleTable result;
  for (const RuleTable& table : partial) result.merge_from(table);
  return result;
}

RuleTable extract_endings(const Lexicon& lexicon, std::size_t max_len,
                          unsigned threads) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");

  std::vector<const std::pair<const std::string, POSClass>*> entries;
  entries.reserve(lexicon.size());
  for (const auto& entry : lexicon.entries()) entries.push_back(&entry);

  std::vector<RuleTable> partial(plan_workers(entries.size(), threads));

  parallel_for(entries.size(), threads,
               [&](unsigned worker, std::size_t begin, std::size_t end) {
    RuleTable& table = partial[worker];
    for (std::size_t i = begin; i < end; ++i) {
      const std::string_view word = entries[i]->first;
      const POSClass& r_class = entries[i]->second;
      const std::size_t chars = text::cp_length(word);
      if (chars < 2) continue;  // an ending equal to the whole word is a lookup
      const std::size_t longest = std::min(max_len, chars - 1);
      for (std::size_t len = 1; len <= longest; ++len) {
        table.add(GuessingRule{RuleKind::Ending,
                               std::string(text::cp_suffix(word, len)), POSClass(),
                               r_class, 1});
      }
    }
  });

  RuleTable result;
  for (const RuleTable& table : partial) result.merge_from(table);
  return result;
}

RuleTable filter_by_frequency(const RuleTable& table, std::uint64_t theta) {
  if (theta < 1) throw std::invalid_argument("theta must be >= 1");
  RuleTable kept;
  for (const GuessingRule& rule : table.rules()) {
    if (rule.f >= theta) kept.add(rule, rule.f);
  }
  return kept;
}

}  // namespace posguess
