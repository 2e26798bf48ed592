#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "posguess/tagset.hpp"

namespace posguess {

struct LexiconEntry {
  std::string word;    // non-empty, free of whitespace
  POSClass pos_class;  // non-empty
};

// Word -> POS-class map; the sole supervision source for rule learning.
// Immutable after load, safe for unlimited concurrent readers.
class Lexicon {
 public:
  Lexicon() = default;

  // Merges by tag-set union when the word is already present.
  void add(std::string word, const POSClass& pos_class);

  const POSClass* find(std::string_view word) const;
  bool contains(std::string_view word) const { return find(word) != nullptr; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const std::map<std::string, POSClass, std::less<>>& entries() const noexcept {
    return entries_;
  }

  void set_closed_class_tags(TagSet tags) { closed_class_tags_ = std::move(tags); }
  const TagSet& closed_class_tags() const noexcept { return closed_class_tags_; }

 private:
  std::map<std::string, POSClass, std::less<>> entries_;
  TagSet closed_class_tags_;
};

// Word -> raw-corpus token count. Duplicate words sum their counts; zero
// counts are rejected at load, so every stored count is >= 1.
class FrequencyTable {
 public:
  void add(std::string word, std::uint64_t count);

  std::uint64_t count(std::string_view word) const;  // 0 when absent
  bool contains(std::string_view word) const { return count(word) > 0; }
  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }

  const std::map<std::string, std::uint64_t, std::less<>>& counts() const noexcept {
    return counts_;
  }

 private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
};

// Lexicon TSV: `word<TAB>tag tag ...`, UTF-8, LF line endings, `#` comment
// lines and blank lines skipped. Duplicate words merge by tag-set union.
Lexicon load_lexicon(std::istream& in, std::string_view source_name = "<lexicon>");

// Frequency TSV: `word<TAB>count`, count a positive decimal integer.
// Duplicate words sum their counts.
FrequencyTable load_frequencies(std::istream& in,
                                std::string_view source_name = "<frequencies>");

// One tag per line; `#` comments and blank lines skipped.
TagSet load_tag_list(std::istream& in, std::string_view source_name = "<tags>");

// Writes entries sorted by word; reloading yields an identical lexicon.
void save_lexicon(std::ostream& out, const Lexicon& lexicon);

// Sub-lexicon of words with at least min_word_length characters whose class
// contains no closed-class tag.
Lexicon filter_for_evaluation(const Lexicon& lexicon, std::size_t min_word_length,
                              const TagSet& closed_class_tags);

}  // namespace posguess
