#include "usc/school.hpp"

#include <algorithm>

namespace usc {

Mask school_choose(const SchoolRule& rule, Mask applicants) {
  int inside_count = set_size(applicants & rule.inside_group);
  Mask admitted = 0;
  for_each_member(applicants, [&](int w) {
    int pos = rule.position_of(w);
    int above = 0;  // applicants with strictly higher priority than w
    for_each_member(applicants, [&](int v) {
      if (rule.position_of(v) < pos) ++above;
    });
    if (above >= rule.capacity) return;
    if (!contains(rule.inside_group, w)) {
      // Outside share if w were the lowest-priority admit: all inside
      // applicants rank above w, so the share is exact.
      Rational share = Rational(1) - Rational(inside_count, above + 1);
      if (share > rule.ceiling) return;
    }
    admitted = with(admitted, w);
  });
  return admitted;
}

void SchoolChoice::self_check(std::vector<std::string>& issues) const {
  int n = n_workers();
  std::vector<int> count(n, 0);
  for (int w : rule_.priority) {
    if (w < 0 || w >= n) {
      issues.push_back("priority order mentions an unknown worker");
      return;
    }
    ++count[w];
  }
  for (int w = 0; w < n; ++w)
    if (count[w] != 1) {
      issues.push_back("priority order must list every worker exactly once");
      break;
    }
  if (rule_.capacity < 1) issues.push_back("capacity must be at least 1");
  if (rule_.ceiling < Rational(0) || rule_.ceiling > Rational(1))
    issues.push_back("ceiling must lie in [0, 1]");
  // Every within-district worker must outrank every outside worker.
  int worst_inside = -1, best_outside = n;
  for (int pos = 0; pos < (int)rule_.priority.size(); ++pos) {
    if (contains(rule_.inside_group, rule_.priority[pos]))
      worst_inside = std::max(worst_inside, pos);
    else
      best_outside = std::min(best_outside, pos);
  }
  if (worst_inside > best_outside)
    issues.push_back(
        "every within-district worker must outrank every outside worker");
}

ConditionVerdict verify_school_usc(const SchoolRule& rule,
                                   const WorkerPartition& partition, int cap) {
  SchoolChoice cf(rule);
  return satisfies_usc(cf, partition, cap);
}

}  // namespace usc
