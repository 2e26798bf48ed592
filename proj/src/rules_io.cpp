#include "posguess/rules_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "posguess/errors.hpp"
#include "posguess/text.hpp"

namespace posguess {

namespace {

constexpr std::string_view kHeader = "# kind\taffix\ticlass\trclass\tf\tx\tn\tscore";

std::string format_points(double points) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", points);
  return buf;
}

std::string class_column(const POSClass& pos_class) {
  return pos_class.empty() ? "-" : pos_class.str();
}

std::uint64_t parse_u64(std::string_view field, std::string_view source,
                        std::size_t line_no, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw_parse_error(source, line_no, std::string(what) + " is not an integer");
  return value;
}

}  // namespace

void write_rule_tsv(std::ostream& out, const RuleTable& table) {
  out << kHeader << '\n';
  for (const GuessingRule& rule : table.rules()) {
    out << to_string(rule.kind) << '\t' << rule.affix << '\t'
        << class_column(rule.i_class) << '\t' << class_column(rule.r_class) << '\t'
        << rule.f << "\t-\t-\t-\n";
  }
}

void write_rule_tsv(std::ostream& out, std::vector<ScoredRule> rules,
                    bool merged_column) {
  std::sort(rules.begin(), rules.end(), [](const ScoredRule& a, const ScoredRule& b) {
    return identity_less(a.rule, b.rule);
  });
  out << kHeader;
  if (merged_column) out << "\tmerged";
  out << '\n';
  for (const ScoredRule& rule : rules) {
    out << to_string(rule.rule.kind) << '\t' << rule.rule.affix << '\t'
        << class_column(rule.rule.i_class) << '\t' << class_column(rule.rule.r_class)
        << '\t' << rule.rule.f << '\t' << rule.counts.x << '\t' << rule.counts.n
        << '\t' << (rule.stats ? format_points(rule.stats->points()) : "-");
    if (merged_column) out << '\t' << (rule.merged ? "merged" : "-");
    out << '\n';
  }
}

std::vector<ScoredRule> read_rule_tsv(std::istream& in, std::string_view source_name) {
  std::vector<ScoredRule> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text_line = line;
    if (!text_line.empty() && text_line.back() == '\r') text_line.remove_suffix(1);
    if (text::trim(text_line).empty() || text_line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text_line.size(); ++i) {
      if (i == text_line.size() || text_line[i] == '\t') {
        fields.push_back(text_line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 8 && fields.size() != 9)
      throw_parse_error(source_name, line_no, "expected 8 or 9 tab-separated columns");

    const auto kind = parse_rule_kind(fields[0]);
    if (!kind) throw_parse_error(source_name, line_no, "unknown rule kind");
    if (fields[1].empty()) throw_parse_error(source_name, line_no, "empty affix");

    ScoredRule rule;
    rule.rule.kind = *kind;
    rule.rule.affix = std::string(fields[1]);
    try {
      if (fields[2] != "-") rule.rule.i_class = POSClass::parse(fields[2]);
      rule.rule.r_class = POSClass::parse(fields[3]);
    } catch (const std::invalid_argument& e) {
      throw_parse_error(source_name, line_no, e.what());
    }
    if (rule.rule.r_class.empty())
      throw_parse_error(source_name, line_no, "empty R-class");
    if (*kind == RuleKind::Ending && !rule.rule.i_class.empty())
      throw_parse_error(source_name, line_no, "ending rule with a non-void I-class");
    if (*kind != RuleKind::Ending && rule.rule.i_class.empty())
      throw_parse_error(source_name, line_no, "morphological rule with a void I-class");

    rule.rule.f = parse_u64(fields[4], source_name, line_no, "f");
    if (fields[5] != "-") rule.counts.x = parse_u64(fields[5], source_name, line_no, "x");
    if (fields[6] != "-") rule.counts.n = parse_u64(fields[6], source_name, line_no, "n");
    if (rule.counts.x > rule.counts.n)
      throw_parse_error(source_name, line_no, "x exceeds n");

    if (fields[7] != "-") {
      double points = 0.0;
      try {
        points = std::stod(std::string(fields[7]));
      } catch (const std::exception&) {
        throw_parse_error(source_name, line_no, "score is not a number");
      }
      RuleScore stats;
      stats.score = points / 100.0;
      stats.p_hat = smoothed_estimate(rule.counts);
      // score = p_hat - z*s_p/D with D = 1+log10(|S|), so the unadjusted
      // limit reconstructs as p_hat - (p_hat - score)*D.
      const double divisor =
          1.0 + std::log10(static_cast<double>(rule.rule.affix_length()));
      stats.lower_conf = stats.p_hat - (stats.p_hat - stats.score) * divisor;
      rule.stats = stats;
    }
    if (fields.size() == 9) {
      if (fields[8] == "merged")
        rule.merged = true;
      else if (fields[8] != "-")
        throw_parse_error(source_name, line_no, "merged column must be `merged` or `-`");
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

}  // namespace posguess
