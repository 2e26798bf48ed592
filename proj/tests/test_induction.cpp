#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "posguess/induction.hpp"

using namespace posguess;

namespace {

LexiconEntry entry(const char* word, const char* tags) {
  return LexiconEntry{word, POSClass::parse(tags)};
}

Lexicon make_lexicon(std::initializer_list<std::pair<const char*, const char*>> items) {
  Lexicon lexicon;
  for (const auto& [word, tags] : items) lexicon.add(word, POSClass::parse(tags));
  return lexicon;
}

}  // namespace

TEST_CASE("subtract on the booked/book pair") {
  const auto rule = subtract(entry("booked", "JJ VBD VBN"), entry("book", "NN VB"),
                             RuleKind::Suffix);
  REQUIRE(rule.has_value());
  CHECK(rule->kind == RuleKind::Suffix);
  CHECK(rule->affix == "ed");
  CHECK(rule->i_class == POSClass::parse("NN VB"));
  CHECK(rule->r_class == POSClass::parse("JJ VBD VBN"));
  CHECK(rule->f == 1);
  CHECK(rule->render() == "[ed (NN VB) (JJ VBD VBN)]");
}

TEST_CASE("subtract on the undeveloped/developed pair") {
  const auto rule = subtract(entry("undeveloped", "JJ"), entry("developed", "VBD VBN"),
                             RuleKind::Prefix);
  REQUIRE(rule.has_value());
  CHECK(rule->affix == "un");
  CHECK(rule->i_class == POSClass::parse("VBD VBN"));
  CHECK(rule->r_class == POSClass::parse("JJ"));
  CHECK(rule->render() == "[un (VBD VBN) (JJ)]");
}

TEST_CASE("subtract corner cases") {
  // Identical words leave an empty remainder: no rule.
  CHECK_FALSE(subtract(entry("book", "NN VB"), entry("book", "NN VB"), RuleKind::Suffix)
                  .has_value());
  // Not a concatenative pair.
  CHECK_FALSE(subtract(entry("booked", "JJ"), entry("walk", "NN"), RuleKind::Suffix)
                  .has_value());
  // Shorter/longer swapped.
  CHECK_FALSE(subtract(entry("book", "NN VB"), entry("booked", "JJ"), RuleKind::Suffix)
                  .has_value());
  CHECK_THROWS_AS(subtract(entry("booked", "JJ"), entry("book", "NN"), RuleKind::Ending),
                  std::invalid_argument);
}

TEST_CASE("morphological extraction over a two-entry lexicon") {
  const Lexicon lexicon = make_lexicon({{"book", "NN VB"}, {"booked", "JJ VBD VBN"}});
  const RuleTable table = extract_morphological(lexicon, RuleKind::Suffix);
  REQUIRE(table.size() == 1);
  const auto rules = table.rules();
  CHECK(rules[0].render() == "[ed (NN VB) (JJ VBD VBN)]");
  CHECK(rules[0].f == 1);
}

TEST_CASE("identical rules accumulate f") {
  const Lexicon lexicon = make_lexicon(
      {{"book", "NN VB"}, {"booked", "VBD"}, {"walk", "NN VB"}, {"walked", "VBD"}});
  const RuleTable table = extract_morphological(lexicon, RuleKind::Suffix);
  const GuessingRule key{RuleKind::Suffix, "ed", POSClass::parse("NN VB"),
                         POSClass::parse("VBD"), 0};
  CHECK(table.frequency(key) == 2);
}

TEST_CASE("extraction preconditions") {
  const Lexicon one = make_lexicon({{"book", "NN VB"}});
  CHECK(extract_morphological(one, RuleKind::Suffix).empty());
  CHECK_THROWS_AS(extract_morphological(Lexicon(), RuleKind::Suffix),
                  std::invalid_argument);
  CHECK_THROWS_AS(extract_morphological(one, RuleKind::Ending), std::invalid_argument);
}

TEST_CASE("ending extraction emits the five endings of `different`") {
  const Lexicon lexicon = make_lexicon({{"different", "JJ"}});
  const RuleTable table = extract_endings(lexicon);
  REQUIRE(table.size() == 5);
  const char* expected[] = {"erent", "ent", "nt", "rent", "t"};
  std::size_t found = 0;
  for (const GuessingRule& rule : table.rules()) {
    CHECK(rule.kind == RuleKind::Ending);
    CHECK(rule.i_class.empty());
    CHECK(rule.r_class == POSClass::parse("JJ"));
    for (const char* affix : expected)
      if (rule.affix == affix) ++found;
  }
  CHECK(found == 5);
}

TEST_CASE("ending length is capped by the word length") {
  const Lexicon lexicon = make_lexicon({{"cat", "NN"}});
  const RuleTable table = extract_endings(lexicon);
  REQUIRE(table.size() == 2);  // t, at -- never the whole word
  for (const GuessingRule& rule : table.rules()) CHECK(rule.affix != "cat");
}

TEST_CASE("shared endings accumulate f") {
  const Lexicon lexicon = make_lexicon({{"booked", "VBD"}, {"walked", "VBD"}});
  const RuleTable table = extract_endings(lexicon);
  const GuessingRule key{RuleKind::Ending, "ed", POSClass(), POSClass::parse("VBD"), 0};
  CHECK(table.frequency(key) == 2);
}

TEST_CASE("frequency filter") {
  RuleTable table;
  const GuessingRule r1{RuleKind::Ending, "ed", POSClass(), POSClass::parse("VBD"), 0};
  const GuessingRule r2{RuleKind::Ending, "ng", POSClass(), POSClass::parse("VBG"), 0};
  table.add(r1, 5);
  table.add(r2, 2);
  const RuleTable kept = filter_by_frequency(table, 3);
  CHECK(kept.size() == 1);
  CHECK(kept.frequency(r1) == 5);
  CHECK(kept.frequency(r2) == 0);

  // theta = 1 keeps everything; the filter is idempotent.
  CHECK(filter_by_frequency(table, 1).size() == 2);
  CHECK(filter_by_frequency(kept, 3).rules() == kept.rules());
  CHECK_THROWS_AS(filter_by_frequency(table, 0), std::invalid_argument);
}

TEST_CASE("extraction matches the brute-force double loop") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const auto instance = oracle::random_instance(rng);
    for (RuleKind kind : {RuleKind::Prefix, RuleKind::Suffix}) {
      const RuleTable fast = extract_morphological(instance.lexicon, kind);
      const RuleTable brute = oracle::brute_extract_morphological(instance.lexicon, kind);
      CHECK(fast.rules() == brute.rules());
      // Total f equals the number of ordered pairs that subtract accepts.
      CHECK(fast.total_frequency() == oracle::brute_pair_count(instance.lexicon, kind));
    }
    const RuleTable fast = extract_endings(instance.lexicon, 5);
    CHECK(fast.rules() == oracle::brute_extract_endings(instance.lexicon, 5).rules());
  }
}

TEST_CASE("concatenative round trip for every extracted rule") {
  std::mt19937 rng(99);
  const auto instance = oracle::random_instance(rng);
  for (RuleKind kind : {RuleKind::Prefix, RuleKind::Suffix}) {
    for (const GuessingRule& rule : extract_morphological(instance.lexicon, kind).rules()) {
      // Some stem with exactly the I-class must recombine into a lexicon
      // word with exactly the R-class.
      bool witnessed = false;
      for (const auto& [stem, stem_class] : instance.lexicon.entries()) {
        if (stem_class != rule.i_class) continue;
        const std::string longer = kind == RuleKind::Suffix ? stem + rule.affix
                                                            : rule.affix + stem;
        const POSClass* longer_class = instance.lexicon.find(longer);
        if (longer_class != nullptr && *longer_class == rule.r_class) {
          witnessed = true;
          break;
        }
      }
      CHECK(witnessed);
    }
  }
}

TEST_CASE("ending extraction emits min(max_len, len-1) rules per entry") {
  std::mt19937 rng(4321);
  for (int trial = 0; trial < 20; ++trial) {
    const auto instance = oracle::random_instance(rng);
    std::uint64_t expected = 0;
    for (const auto& [word, cls] : instance.lexicon.entries()) {
      const std::size_t chars = word.size();  // instance words are ASCII
      if (chars >= 2) expected += std::min<std::size_t>(5, chars - 1);
    }
    CHECK(extract_endings(instance.lexicon, 5).total_frequency() == expected);
  }
}

TEST_CASE("parallel extraction equals sequential") {
  std::mt19937 rng(77);
  const auto instance = oracle::random_instance(rng);
  for (RuleKind kind : {RuleKind::Prefix, RuleKind::Suffix}) {
    CHECK(extract_morphological(instance.lexicon, kind, 1).rules() ==
          extract_morphological(instance.lexicon, kind, 8).rules());
  }
  CHECK(extract_endings(instance.lexicon, 5, 1).rules() ==
        extract_endings(instance.lexicon, 5, 8).rules());
}
