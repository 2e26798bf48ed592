#include "posguess/lexicon.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "posguess/errors.hpp"
#include "posguess/text.hpp"

namespace posguess {

namespace {

// Strips a trailing CR so CRLF input behaves like LF.
std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool skippable(std::string_view line) {
  const auto t = text::trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

void Lexicon::add(std::string word, const POSClass& pos_class) {
  if (word.empty()) throw std::invalid_argument("empty lexicon word");
  if (text::contains_whitespace(word))
    throw std::invalid_argument("lexicon word contains whitespace: '" + word + "'");
  if (pos_class.empty())
    throw std::invalid_argument("empty POS class for word '" + word + "'");
  auto [it, inserted] = entries_.emplace(std::move(word), pos_class);
  if (!inserted) it->second = it->second.united(pos_class);
}

const POSClass* Lexicon::find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

void FrequencyTable::add(std::string word, std::uint64_t count) {
  if (word.empty()) throw std::invalid_argument("empty frequency-table word");
  if (count == 0) throw std::invalid_argument("zero count for word '" + word + "'");
  counts_[std::move(word)] += count;
}

std::uint64_t FrequencyTable::count(std::string_view word) const {
  auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

Lexicon load_lexicon(std::istream& in, std::string_view source_name) {
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text_line = strip_cr(line);
    if (skippable(text_line)) continue;
    const auto tab = text_line.find('\t');
    if (tab == std::string_view::npos)
      throw_parse_error(source_name, line_no, "expected `word<TAB>tag ...`");
    const auto word = text_line.substr(0, tab);
    if (word.empty()) throw_parse_error(source_name, line_no, "empty word");
    if (text::contains_whitespace(word))
      throw_parse_error(source_name, line_no, "word contains whitespace");
    POSClass pos_class;
    try {
      pos_class = POSClass::parse(text_line.substr(tab + 1));
    } catch (const std::invalid_argument& e) {
      throw_parse_error(source_name, line_no, e.what());
    }
    if (pos_class.empty()) throw_parse_error(source_name, line_no, "empty tag list");
    lexicon.add(std::string(word), pos_class);
  }
  return lexicon;
}

FrequencyTable load_frequencies(std::istream& in, std::string_view source_name) {
  FrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text_line = strip_cr(line);
    if (skippable(text_line)) continue;
    const auto tab = text_line.find('\t');
    if (tab == std::string_view::npos)
      throw_parse_error(source_name, line_no, "expected `word<TAB>count`");
    const auto word = text_line.substr(0, tab);
    if (word.empty()) throw_parse_error(source_name, line_no, "empty word");
    if (text::contains_whitespace(word))
      throw_parse_error(source_name, line_no, "word contains whitespace");
    const auto count_text = text::trim(text_line.substr(tab + 1));
    std::uint64_t count = 0;
    const auto* begin = count_text.data();
    const auto* end = begin + count_text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, count);
    if (ec != std::errc() || ptr != end)
      throw_parse_error(source_name, line_no, "count is not a positive integer");
    if (count == 0) throw_parse_error(source_name, line_no, "count must be >= 1");
    table.add(std::string(word), count);
  }
  return table;
}

TagSet load_tag_list(std::istream& in, std::string_view source_name) {
  TagSet tags;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text_line = text::trim(strip_cr(line));
    if (text_line.empty() || text_line.front() == '#') continue;
    try {
      tags.insert(Tag(std::string(text_line)));
    } catch (const std::invalid_argument& e) {
      throw_parse_error(source_name, line_no, e.what());
    }
  }
  return tags;
}

void save_lexicon(std::ostream& out, const Lexicon& lexicon) {
  for (const auto& [word, pos_class] : lexicon.entries())
    out << word << '\t' << pos_class.str() << '\n';
}

Lexicon filter_for_evaluation(const Lexicon& lexicon, std::size_t min_word_length,
                              const TagSet& closed_class_tags) {
  if (min_word_length < 1)
    throw std::invalid_argument("min_word_length must be >= 1");
  Lexicon filtered;
  for (const auto& [word, pos_class] : lexicon.entries()) {
    if (text::cp_length(word) < min_word_length) continue;
    if (pos_class.intersects(closed_class_tags)) continue;
    filtered.add(word, pos_class);
  }
  filtered.set_closed_class_tags(lexicon.closed_class_tags());
  return filtered;
}

}  // namespace posguess
