#include <doctest.h>

#include <sstream>

#include "posguess/errors.hpp"
#include "posguess/rules_io.hpp"

using namespace posguess;

TEST_CASE("raw rule tables round-trip through the TSV") {
  RuleTable table;
  table.add(GuessingRule{RuleKind::Suffix, "ed", POSClass::parse("NN VB"),
                         POSClass::parse("JJ VBD VBN"), 0},
            3);
  table.add(GuessingRule{RuleKind::Ending, "ing", POSClass(),
                         POSClass::parse("JJ NN VBG"), 0},
            7);
  std::ostringstream out;
  write_rule_tsv(out, table);

  std::istringstream in(out.str());
  const auto rules = read_rule_tsv(in, "rules.tsv");
  REQUIRE(rules.size() == 2);
  CHECK(rules[0].rule.render() == "[ed (NN VB) (JJ VBD VBN)]");
  CHECK(rules[0].rule.f == 3);
  CHECK(rules[1].rule.kind == RuleKind::Ending);
  CHECK(rules[1].rule.f == 7);
  CHECK_FALSE(rules[0].scorable());
  CHECK(rules[0].counts.n == 0);
}

TEST_CASE("scored rules keep counts, score and the merged marker") {
  ScoredRule rule;
  rule.rule = GuessingRule{RuleKind::Suffix, "ed", POSClass::parse("NN VB"),
                           POSClass::parse("JJ VBD VBN"), 2};
  rule.counts = {15, 18};
  rule.stats = score_rule(rule.counts, 2, {});
  rule.merged = true;

  std::ostringstream out;
  write_rule_tsv(out, {rule}, /*merged_column=*/true);
  CHECK(out.str().find("\tmerged") != std::string::npos);

  std::istringstream in(out.str());
  const auto loaded = read_rule_tsv(in, "scored.tsv");
  REQUIRE(loaded.size() == 1);
  CHECK(loaded[0].counts.x == 15);
  CHECK(loaded[0].counts.n == 18);
  CHECK(loaded[0].merged);
  REQUIRE(loaded[0].scorable());
  CHECK(loaded[0].points() == doctest::Approx(rule.points()).epsilon(1e-9));
  CHECK(loaded[0].stats->p_hat == doctest::Approx(rule.stats->p_hat).epsilon(1e-12));
  CHECK(loaded[0].stats->lower_conf ==
        doctest::Approx(rule.stats->lower_conf).epsilon(1e-6));
}

TEST_CASE("unscorable rules write a dash and read back unscorable") {
  ScoredRule rule;
  rule.rule = GuessingRule{RuleKind::Ending, "zz", POSClass(), POSClass::parse("NN"), 1};
  rule.counts = {0, 0};
  std::ostringstream out;
  write_rule_tsv(out, {rule});
  CHECK(out.str().find("\t0\t0\t-") != std::string::npos);
  std::istringstream in(out.str());
  const auto loaded = read_rule_tsv(in, "scored.tsv");
  REQUIRE(loaded.size() == 1);
  CHECK_FALSE(loaded[0].scorable());
}

TEST_CASE("malformed rule rows are rejected with context") {
  auto reject = [](const char* body) {
    std::istringstream in(body);
    CHECK_THROWS_AS(read_rule_tsv(in, "bad.tsv"), ParseError);
  };
  reject("suffix\ted\tNN VB\n");                                // too few columns
  reject("sufix\ted\tNN VB\tVBD\t1\t-\t-\t-\n");                // unknown kind
  reject("suffix\t\tNN VB\tVBD\t1\t-\t-\t-\n");                 // empty affix
  reject("suffix\ted\tNN VB\t\t1\t-\t-\t-\n");                  // empty R-class
  reject("ending\ted\tNN\tVBD\t1\t-\t-\t-\n");                  // ending with I-class
  reject("suffix\ted\t-\tVBD\t1\t-\t-\t-\n");                   // suffix without I-class
  reject("suffix\ted\tNN\tVBD\tmany\t-\t-\t-\n");               // bad f
  reject("suffix\ted\tNN\tVBD\t1\t9\t5\t-\n");                  // x > n
  reject("suffix\ted\tNN\tVBD\t1\t1\t2\tok\n");                 // bad score
  reject("suffix\ted\tNN\tVBD\t1\t1\t2\t50\tmaybe\n");          // bad marker
}

TEST_CASE("rule rendering matches the bracketed form") {
  const GuessingRule ending{RuleKind::Ending, "ing", POSClass(),
                            POSClass::parse("JJ NN VBG"), 0};
  CHECK(ending.render() == "[ing - (JJ NN VBG)]");
}
