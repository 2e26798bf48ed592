#include "posguess/rules.hpp"

#include "posguess/text.hpp"

namespace posguess {

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::Prefix: return "prefix";
    case RuleKind::Suffix: return "suffix";
    case RuleKind::Ending: return "ending";
  }
  return "?";
}

std::optional<RuleKind> parse_rule_kind(std::string_view word) {
  if (word == "prefix") return RuleKind::Prefix;
  if (word == "suffix") return RuleKind::Suffix;
  if (word == "ending") return RuleKind::Ending;
  return std::nullopt;
}

std::size_t GuessingRule::affix_length() const { return text::cp_length(affix); }

std::string GuessingRule::render() const {
  std::string out = "[";
  out += affix;
  out += ' ';
  out += i_class.empty() ? "-" : "(" + i_class.str() + ")";
  out += " (";
  out += r_class.str();
  out += ")]";
  return out;
}

bool same_identity(const GuessingRule& a, const GuessingRule& b) {
  return a.kind == b.kind && a.affix == b.affix && a.i_class == b.i_class &&
         a.r_class == b.r_class;
}

bool identity_less(const GuessingRule& a, const GuessingRule& b) {
  return std::tie(a.kind, a.affix, a.i_class, a.r_class) <
         std::tie(b.kind, b.affix, b.i_class, b.r_class);
}

void RuleTable::add(const GuessingRule& rule, std::uint64_t count) {
  counts_[Key(rule.kind, rule.affix, rule.i_class, rule.r_class)] += count;
}

void RuleTable::merge_from(const RuleTable& other) {
  for (const auto& [key, f] : other.counts_) counts_[key] += f;
}

std::uint64_t RuleTable::frequency(const GuessingRule& rule) const {
  auto it = counts_.find(Key(rule.kind, rule.affix, rule.i_class, rule.r_class));
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t RuleTable::total_frequency() const {
  std::uint64_t total = 0;
  for (const auto& [key, f] : counts_) total += f;
  return total;
}

std::vector<GuessingRule> RuleTable::rules() const {
  std::vector<GuessingRule> out;
  out.reserve(counts_.size());
  for (const auto& [key, f] : counts_) {
    const auto& [kind, affix, i_class, r_class] = key;
    out.push_back(GuessingRule{kind, affix, i_class, r_class, f});
  }
  return out;
}

}  // namespace posguess
