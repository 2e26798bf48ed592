#include "posguess/tagset.hpp"

#include <algorithm>
#include <stdexcept>

#include "posguess/text.hpp"

namespace posguess {

Tag::Tag(std::string symbol) : symbol_(std::move(symbol)) {
  if (symbol_.empty()) throw std::invalid_argument("empty tag symbol");
  if (text::contains_whitespace(symbol_))
    throw std::invalid_argument("tag symbol contains whitespace: '" + symbol_ + "'");
}

POSClass::POSClass(std::vector<Tag> tags) : tags_(std::move(tags)) {
  std::sort(tags_.begin(), tags_.end());
  tags_.erase(std::unique(tags_.begin(), tags_.end()), tags_.end());
}

POSClass POSClass::parse(std::string_view line) {
  std::vector<Tag> tags;
  for (auto token : text::split_ws(line)) tags.emplace_back(std::string(token));
  return POSClass(std::move(tags));
}

bool POSClass::contains(const Tag& tag) const {
  return std::binary_search(tags_.begin(), tags_.end(), tag);
}

bool POSClass::intersects(const TagSet& tags) const {
  for (const Tag& t : tags_) {
    if (tags.count(t) > 0) return true;
  }
  return false;
}

std::size_t POSClass::intersection_size(const POSClass& other) const {
  std::size_t n = 0;
  auto it = other.tags_.begin();
  for (const Tag& t : tags_) {
    while (it != other.tags_.end() && *it < t) ++it;
    if (it != other.tags_.end() && *it == t) ++n;
  }
  return n;
}

POSClass POSClass::united(const POSClass& other) const {
  std::vector<Tag> merged;
  merged.reserve(tags_.size() + other.tags_.size());
  std::merge(tags_.begin(), tags_.end(), other.tags_.begin(), other.tags_.end(),
             std::back_inserter(merged));
  return POSClass(std::move(merged));
}

std::string POSClass::str() const {
  std::string out;
  for (const Tag& t : tags_) {
    if (!out.empty()) out += ' ';
    out += t.str();
  }
  return out;
}

}  // namespace posguess
