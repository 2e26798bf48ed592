#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "posguess/tagset.hpp"

namespace posguess {

enum class RuleKind { Prefix, Suffix, Ending };

std::string_view to_string(RuleKind kind);
std::optional<RuleKind> parse_rule_kind(std::string_view text);

// A word-guessing rule. Morphological rules (prefix/suffix) fire only when
// the stripped stem is a lexicon word whose class equals the initial class;
// ending rules key on trailing characters alone and carry a void I-class.
// Identity is (kind, affix, I-class, R-class); f counts re-extractions.
struct GuessingRule {
  RuleKind kind = RuleKind::Ending;
  std::string affix;   // non-empty
  POSClass i_class;    // empty iff kind == Ending
  POSClass r_class;    // never empty
  std::uint64_t f = 0;

  // |S|: affix length in code points, the quantity the score divisor uses.
  std::size_t affix_length() const;

  // "[ed (NN VB) (JJ VBD VBN)]", with "-" for the void I-class.
  std::string render() const;

  friend bool operator==(const GuessingRule&, const GuessingRule&) = default;
};

bool same_identity(const GuessingRule& a, const GuessingRule& b);
bool identity_less(const GuessingRule& a, const GuessingRule& b);

// Extraction frequencies keyed by rule identity.
class RuleTable {
 public:
  void add(const GuessingRule& rule, std::uint64_t count = 1);
  void merge_from(const RuleTable& other);

  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  std::uint64_t frequency(const GuessingRule& rule) const;  // 0 when absent
  std::uint64_t total_frequency() const;

  // Rules sorted by identity with f filled in.
  std::vector<GuessingRule> rules() const;

 private:
  using Key = std::tuple<RuleKind, std::string, POSClass, POSClass>;
  std::map<Key, std::uint64_t> counts_;
};

}  // namespace posguess
