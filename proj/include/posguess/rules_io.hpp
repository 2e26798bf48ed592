#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "posguess/rules.hpp"
#include "posguess/scoring.hpp"

namespace posguess {

// Rule TSV shared by every pipeline stage:
//   kind<TAB>affix<TAB>I-class<TAB>R-class<TAB>f<TAB>x<TAB>n<TAB>score
// Classes are space-separated tags with a lone `-` for the void I-class;
// x, n and score hold `-` until the scoring phase fills them. Score is in
// points (0-100). An optional ninth column carries the `merged` marker in
// the audit variant. Rows are sorted by (affix, I-class, R-class).

void write_rule_tsv(std::ostream& out, const RuleTable& table);
void write_rule_tsv(std::ostream& out, std::vector<ScoredRule> rules,
                    bool merged_column = false);

std::vector<ScoredRule> read_rule_tsv(std::istream& in,
                                      std::string_view source_name = "<rules>");

}  // namespace posguess
