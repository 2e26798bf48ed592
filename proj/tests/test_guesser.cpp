#include <doctest.h>

#include <random>

#include "posguess/guesser.hpp"

using namespace posguess;

namespace {

ScoredRule accepted_rule(RuleKind kind, const char* affix, const char* i_class,
                         const char* r_class, double points) {
  ScoredRule rule;
  rule.rule.kind = kind;
  rule.rule.affix = affix;
  rule.rule.i_class = POSClass::parse(i_class);
  rule.rule.r_class = POSClass::parse(r_class);
  rule.rule.f = 1;
  rule.counts = {1, 1};
  RuleScore stats;
  stats.score = points / 100.0;
  stats.p_hat = 0.9;
  stats.lower_conf = stats.score;
  rule.stats = stats;
  return rule;
}

Lexicon paper_lexicon() {
  Lexicon lexicon;
  lexicon.add("book", POSClass::parse("NN VB"));
  lexicon.add("developed", POSClass::parse("VBD VBN"));
  lexicon.add("water", POSClass::parse("NN VB"));
  return lexicon;
}

CascadingGuesser paper_guesser() {
  RuleSet prefix(RuleKind::Prefix,
                 {accepted_rule(RuleKind::Prefix, "un", "VBD VBN", "JJ", 80.0)});
  RuleSet suffix(RuleKind::Suffix,
                 {accepted_rule(RuleKind::Suffix, "ed", "NN VB", "JJ VBD VBN", 70.0),
                  accepted_rule(RuleKind::Suffix, "oped", "VBD VBN", "JJ", 65.0)});
  RuleSet ending(RuleKind::Ending,
                 {accepted_rule(RuleKind::Ending, "ing", "", "JJ NN VBG", 75.0),
                  accepted_rule(RuleKind::Ending, "ed", "", "VBD VBN", 76.0)});
  return CascadingGuesser(std::move(prefix), std::move(suffix), std::move(ending),
                          paper_lexicon());
}

}  // namespace

TEST_CASE("rule-set construction checks kinds") {
  CHECK_THROWS_AS(RuleSet(RuleKind::Prefix,
                          {accepted_rule(RuleKind::Suffix, "ed", "NN", "VBD", 50.0)}),
                  std::invalid_argument);
  const RuleSet empty(RuleKind::Prefix);
  CHECK(empty.empty());
}

TEST_CASE("cascade order: prefix wins over suffix and ending") {
  const CascadingGuesser guesser = paper_guesser();
  // The suffix rule [oped ...] and the ending rule [ed ...] also apply to
  // "undeveloped"; the prefix stage answers first.
  CHECK(guesser.guess("undeveloped") == POSClass::parse("JJ"));
}

TEST_CASE("ending stage answers when morphology cannot") {
  const CascadingGuesser guesser = paper_guesser();
  CHECK(guesser.guess("going") == POSClass::parse("JJ NN VBG"));
  CHECK_FALSE(guesser.guess("zzz").has_value());
  CHECK_THROWS_AS(guesser.guess(""), std::invalid_argument);
}

TEST_CASE("within a set the longest affix wins") {
  RuleSet ending(RuleKind::Ending,
                 {accepted_rule(RuleKind::Ending, "g", "", "NN", 99.0),
                  accepted_rule(RuleKind::Ending, "ing", "", "VBG", 10.0)});
  CascadingGuesser guesser(RuleSet(RuleKind::Prefix), RuleSet(RuleKind::Suffix),
                           std::move(ending), Lexicon());
  // the longer affix beats the higher score
  CHECK(guesser.guess("going") == POSClass::parse("VBG"));
  CHECK(guesser.guess("gong") == POSClass::parse("NN"));
}

TEST_CASE("same-affix ties break by score, then R-class") {
  Lexicon lexicon;
  lexicon.add("book", POSClass::parse("NN VB"));
  RuleSet by_score(RuleKind::Suffix,
                   {accepted_rule(RuleKind::Suffix, "ed", "NN VB", "VBD", 50.0),
                    accepted_rule(RuleKind::Suffix, "ed", "NN VB", "JJ", 60.0)});
  CascadingGuesser guesser(RuleSet(RuleKind::Prefix), std::move(by_score),
                           RuleSet(RuleKind::Ending), lexicon);
  CHECK(guesser.guess("booked") == POSClass::parse("JJ"));

  RuleSet tied(RuleKind::Suffix,
               {accepted_rule(RuleKind::Suffix, "ed", "NN VB", "VBN", 50.0),
                accepted_rule(RuleKind::Suffix, "ed", "NN VB", "JJ", 50.0)});
  CascadingGuesser tied_guesser(RuleSet(RuleKind::Prefix), std::move(tied),
                                RuleSet(RuleKind::Ending), lexicon);
  CHECK(tied_guesser.guess("booked") == POSClass::parse("JJ"));  // lexicographic
}

TEST_CASE("fallback classifies by capitalization inside sentences") {
  const CascadingGuesser guesser = paper_guesser();
  CHECK(guesser.guess_with_fallback("xyzzy", false) == POSClass::parse("NN"));
  CHECK(guesser.guess_with_fallback("Xyzzy", false) == POSClass::parse("NP"));
  // sentence-initial capitalization is uninformative
  CHECK(guesser.guess_with_fallback("Xyzzy", true) == POSClass::parse("NN"));
  CHECK(guesser.guess_with_fallback("1234", false) == POSClass::parse("NN"));
  // a rule answer beats any fallback
  CHECK(guesser.guess_with_fallback("Going", true) != POSClass::parse("NN"));
}

TEST_CASE("custom fallback tags") {
  CascadingGuesser guesser(RuleSet(RuleKind::Prefix), RuleSet(RuleKind::Suffix),
                           RuleSet(RuleKind::Ending), Lexicon(), Tag("NOUN"),
                           Tag("PROPN"));
  CHECK(guesser.guess_with_fallback("word", false) == POSClass::parse("NOUN"));
  CHECK(guesser.guess_with_fallback("Word", false) == POSClass::parse("PROPN"));
}

TEST_CASE("constructor rejects misplaced kinds") {
  CHECK_THROWS_AS(CascadingGuesser(RuleSet(RuleKind::Suffix), RuleSet(RuleKind::Suffix),
                                   RuleSet(RuleKind::Ending), Lexicon()),
                  std::invalid_argument);
}

TEST_CASE("empty rule-sets guess nothing but fall back totally") {
  CascadingGuesser guesser(RuleSet(RuleKind::Prefix), RuleSet(RuleKind::Suffix),
                           RuleSet(RuleKind::Ending), Lexicon());
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> letter(0, 25);
  for (int trial = 0; trial < 100; ++trial) {
    std::string word;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) word.push_back(static_cast<char>('a' + letter(rng)));
    CHECK_FALSE(guesser.guess(word).has_value());
    CHECK_FALSE(guesser.guess_with_fallback(word, false).empty());
  }
}

TEST_CASE("adding a shorter affix never changes a longer-affix guess") {
  Lexicon lexicon;
  lexicon.add("book", POSClass::parse("NN VB"));
  std::vector<ScoredRule> base{
      accepted_rule(RuleKind::Ending, "ked", "", "VBD VBN", 60.0)};
  CascadingGuesser before(RuleSet(RuleKind::Prefix), RuleSet(RuleKind::Suffix),
                          RuleSet(RuleKind::Ending, base), lexicon);
  const auto answer = before.guess("booked");

  base.push_back(accepted_rule(RuleKind::Ending, "d", "", "XX", 99.0));
  CascadingGuesser after(RuleSet(RuleKind::Prefix), RuleSet(RuleKind::Suffix),
                         RuleSet(RuleKind::Ending, base), lexicon);
  CHECK(after.guess("booked") == answer);
}

TEST_CASE("guessing is a pure function of the inputs") {
  const CascadingGuesser a = paper_guesser();
  const CascadingGuesser b = paper_guesser();
  for (const char* word : {"undeveloped", "going", "booked", "zzz", "waters"}) {
    CHECK(a.guess(word) == b.guess(word));
    CHECK(a.guess(word) == a.guess(word));
  }
}
