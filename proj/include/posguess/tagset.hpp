#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace posguess {

// A single part-of-speech tag symbol such as NN, VBD or JJ. Equality is
// exact string equality; the symbol must be non-empty and whitespace-free.
class Tag {
 public:
  explicit Tag(std::string symbol);

  const std::string& str() const noexcept { return symbol_; }

  auto operator<=>(const Tag&) const = default;

 private:
  std::string symbol_;
};

using TagSet = std::set<Tag>;

// An ordered, duplicate-free set of tags; the unit both the lexicon and the
// guesser deal in. Always kept canonical (sorted, deduplicated), so two
// classes are equal iff their tag sequences are equal. The empty class is
// reserved for the void initial class of ending rules.
class POSClass {
 public:
  POSClass() = default;
  explicit POSClass(std::vector<Tag> tags);

  // Parses whitespace-separated tag symbols; empty input gives the void class.
  static POSClass parse(std::string_view line);

  bool empty() const noexcept { return tags_.empty(); }
  std::size_t size() const noexcept { return tags_.size(); }
  const std::vector<Tag>& tags() const noexcept { return tags_; }

  bool contains(const Tag& tag) const;
  bool intersects(const TagSet& tags) const;
  std::size_t intersection_size(const POSClass& other) const;
  POSClass united(const POSClass& other) const;

  // "JJ VBD VBN"; empty string for the void class.
  std::string str() const;

  auto operator<=>(const POSClass&) const = default;

 private:
  std::vector<Tag> tags_;
};

}  // namespace posguess
