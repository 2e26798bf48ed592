#include "posguess/merging.hpp"

#include <algorithm>
#include <stdexcept>

namespace posguess {

namespace {

// Best-first order: higher score, then larger n, then lexicographically
// first R-class. Unscorable rules sort last (points() is -inf).
bool better_scored(const ScoredRule& a, const ScoredRule& b) {
  if (a.points() != b.points()) return a.points() > b.points();
  if (a.counts.n != b.counts.n) return a.counts.n > b.counts.n;
  return a.rule.r_class < b.rule.r_class;
}

}  // namespace

MergePool::MergePool(std::vector<ScoredRule> rejected) {
  for (auto& rule : rejected) {
    GroupKey key(rule.rule.kind, rule.rule.affix, rule.rule.i_class);
    groups_[std::move(key)].push_back(std::move(rule));
  }
  for (auto& [key, group] : groups_)
    std::sort(group.begin(), group.end(), better_scored);
}

std::size_t MergePool::size() const {
  std::size_t n = 0;
  for (const auto& [key, group] : groups_) n += group.size();
  return n;
}

ScoredRule merge_pair(const ScoredRule& r1, const ScoredRule& r2,
                      const ScoringConfig& config) {
  if (r1.rule.kind != r2.rule.kind || r1.rule.affix != r2.rule.affix ||
      r1.rule.i_class != r2.rule.i_class)
    throw std::invalid_argument("merge_pair: rules differ in kind, affix or I-class");

  ScoredRule merged;
  merged.rule.kind = r1.rule.kind;
  merged.rule.affix = r1.rule.affix;
  merged.rule.i_class = r1.rule.i_class;
  merged.rule.r_class = r1.rule.r_class.united(r2.rule.r_class);
  merged.rule.f = r1.rule.f + r2.rule.f;
  // Rules tallied on one corpus share their compatible-word set, so the
  // trial count stays put and the disjoint success sets add. max() and the
  // x cap only matter for imported files with inconsistent counts.
  merged.counts.n = std::max(r1.counts.n, r2.counts.n);
  merged.counts.x = std::min(r1.counts.x + r2.counts.x, merged.counts.n);
  merged.merged = true;
  if (merged.counts.n >= config.min_trials)
    merged.stats = score_rule(merged.counts, merged.rule.affix_length(), config);
  return merged;
}

MergeOutcome merge_below_threshold(MergePool pool, double theta_s_points,
                                   const ScoringConfig& config) {
  MergeOutcome outcome;
  for (const auto& [key, group] : pool.groups()) {
    std::vector<ScoredRule> work = group;
    while (work.size() >= 2) {
      ScoredRule merged = merge_pair(work[0], work[1], config);
      work.erase(work.begin(), work.begin() + 2);
      if (merged.scorable() && merged.points() > theta_s_points) {
        outcome.accepted.push_back(std::move(merged));
      } else {
        auto pos = std::upper_bound(work.begin(), work.end(), merged, better_scored);
        work.insert(pos, std::move(merged));
      }
    }
    for (auto& leftover : work) outcome.residual.push_back(std::move(leftover));
  }
  return outcome;
}

}  // namespace posguess
