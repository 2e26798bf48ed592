#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "posguess/scoring.hpp"

namespace posguess {

// Rejected rules grouped by (kind, affix, I-class), each group ordered best
// score first (ties: larger n, then lexicographically first R-class).
class MergePool {
 public:
  using GroupKey = std::tuple<RuleKind, std::string, POSClass>;

  MergePool() = default;
  explicit MergePool(std::vector<ScoredRule> rejected);

  std::size_t size() const;
  const std::map<GroupKey, std::vector<ScoredRule>>& groups() const noexcept {
    return groups_;
  }

 private:
  std::map<GroupKey, std::vector<ScoredRule>> groups_;
};

// Merges two rules sharing kind, affix and I-class into one with the union
// R-class, x = x1+x2 (capped at n to keep x <= n on inconsistent imported
// counts), n = max(n1, n2), f = f1+f2, re-scored under config. Throws
// std::invalid_argument when the identities do not line up.
ScoredRule merge_pair(const ScoredRule& r1, const ScoredRule& r2,
                      const ScoringConfig& config);

struct MergeOutcome {
  std::vector<ScoredRule> accepted;  // merged rules that cleared theta_s
  std::vector<ScoredRule> residual;  // whatever is left of the pool
};

// Within each group, repeatedly merges the two best-scored remaining rules.
// A merged rule that clears theta_s moves to the accepted output; otherwise
// it re-enters the group at its new score and may merge again. Stops when no
// group has two members left.
MergeOutcome merge_below_threshold(MergePool pool, double theta_s_points,
                                   const ScoringConfig& config);

}  // namespace posguess
