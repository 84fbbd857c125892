#include "usc/core.hpp"

#include <algorithm>
#include <set>

namespace usc {

Mask ChoiceFunction::choose(Mask available) const {
  available &= full_mask(n_);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  if (memo_.empty()) memo_.assign(std::size_t{1} << n_, -1);
  std::int32_t& slot = memo_[available];
  if (slot < 0) {
    Mask chosen = choose_raw(available);
    if ((chosen & available) != chosen)
      throw std::logic_error("choice rule picked workers outside the pool");
    slot = (std::int32_t)chosen;
  }
  return (Mask)slot;
}

void PreferenceChoice::self_check(std::vector<std::string>& issues) const {
  std::set<Mask> seen;
  Mask universe = full_mask(n_workers());
  if (pref_.ranked.empty())
    issues.push_back("firm has no ranked subsets");
  for (size_t i = 0; i < pref_.ranked.size(); ++i) {
    Mask x = pref_.ranked[i];
    if ((x & universe) != x)
      issues.push_back("ranked subset #" + std::to_string(i + 1) +
                       " mentions unknown workers");
    if (!seen.insert(x).second)
      issues.push_back("ranked subset #" + std::to_string(i + 1) +
                       " duplicates an earlier subset");
    if (x == 0 && i + 1 != pref_.ranked.size())
      issues.push_back("the empty set may only appear last in the ranking");
  }
}

Matching::Matching(std::vector<int> worker_to_firm, int n_firms)
    : assign_(std::move(worker_to_firm)), firm_workers_(n_firms, 0) {
  for (size_t w = 0; w < assign_.size(); ++w) {
    int f = assign_[w];
    if (f == kNullFirm) continue;
    if (f < 0 || f >= n_firms)
      throw std::invalid_argument("matching assigns worker to unknown firm");
    firm_workers_[f] = with(firm_workers_[f], (int)w);
  }
}

Matching Matching::from_assignments(const std::vector<Mask>& firm_to_workers,
                                    int n_workers) {
  std::vector<int> assign(n_workers, kNullFirm);
  for (size_t f = 0; f < firm_to_workers.size(); ++f) {
    for_each_member(firm_to_workers[f], [&](int w) {
      if (w >= n_workers)
        throw std::invalid_argument("matching mentions unknown worker");
      if (assign[w] != kNullFirm)
        throw std::invalid_argument("matching assigns a worker twice");
      assign[w] = (int)f;
    });
  }
  return Matching(std::move(assign), (int)firm_to_workers.size());
}

Mask Matching::unmatched() const {
  Mask u = 0;
  for (size_t w = 0; w < assign_.size(); ++w)
    if (assign_[w] == kNullFirm) u = with(u, (int)w);
  return u;
}

bool Matching::lex_less(const Matching& a, const Matching& b) {
  int m = a.n_firms();
  auto key = [m](int f) { return f == kNullFirm ? m : f; };
  for (int w = 0; w < a.n_workers() && w < b.n_workers(); ++w) {
    if (a.assign_[w] != b.assign_[w])
      return key(a.assign_[w]) < key(b.assign_[w]);
  }
  return a.n_workers() < b.n_workers();
}

Mask available_set(const MarketInstance& inst, const Matching& eta, int firm,
                   std::optional<Mask> restrict_to) {
  Mask pool = restrict_to.value_or(inst.all_workers());
  Mask out = 0;
  for_each_member(pool, [&](int w) {
    if (inst.worker_prefs[w].weakly_prefers(firm, eta.firm_of(w)))
      out = with(out, w);
  });
  return out;
}

std::vector<ValidationIssue> validate_instance(const MarketInstance& inst) {
  std::vector<ValidationIssue> issues;
  auto add = [&](std::string loc, std::string msg) {
    issues.push_back({std::move(loc), std::move(msg)});
  };

  int n = inst.n_workers(), m = inst.n_firms();
  if ((int)inst.worker_prefs.size() != n)
    add("workers", "preference list count does not match worker count");
  if ((int)inst.choices.size() != m)
    add("firms", "choice rule count does not match firm count");

  // Partition: pairwise disjoint, covers every worker, no empty group.
  Mask seen = 0;
  for (size_t k = 0; k < inst.partition.groups.size(); ++k) {
    Mask g = inst.partition.groups[k];
    std::string loc = "group #" + std::to_string(k + 1);
    if (g == 0) add(loc, "group is empty");
    if ((g & full_mask(n)) != g) add(loc, "group mentions unknown workers");
    if (g & seen) add(loc, "group overlaps an earlier group");
    seen |= g;
  }
  if (seen != full_mask(n))
    add("groups", "groups do not cover every worker");
  if (n > 0 && inst.partition.groups.empty())
    add("groups", "at least one group is required");

  for (int w = 0; w < n && w < (int)inst.worker_prefs.size(); ++w) {
    const auto& p = inst.worker_prefs[w];
    std::string loc = "worker " + (w < (int)inst.workers.size()
                                       ? inst.workers[w]
                                       : "#" + std::to_string(w));
    std::set<int> listed;
    for (int f : p.ranked) {
      if (f < 0 || f >= m) add(loc, "ranks an unknown firm");
      if (!listed.insert(f).second) add(loc, "ranks a firm twice");
    }
  }

  for (int f = 0; f < m && f < (int)inst.choices.size(); ++f) {
    std::string loc = "firm " + (f < (int)inst.firms.size()
                                     ? inst.firms[f]
                                     : "#" + std::to_string(f));
    if (!inst.choices[f]) {
      add(loc, "missing choice rule");
      continue;
    }
    if (inst.choices[f]->n_workers() != n)
      add(loc, "choice rule built for a different worker universe");
    std::vector<std::string> local;
    inst.choices[f]->self_check(local);
    for (auto& msg : local) add(loc, std::move(msg));
  }
  return issues;
}

}  // namespace usc
