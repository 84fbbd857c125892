#pragma once
// Two-sided many-to-one market vocabulary: worker/firm preferences, choice
// functions over worker subsets, worker-side group partitions, and matchings.

#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "usc/worker_set.hpp"

namespace usc {

inline constexpr int kNullFirm = -1;  // being unmatched

// Strict ranking over acceptable firms, best first.  Firms not listed are
// worse than staying unmatched; the null firm ranks just below the last
// listed firm.
struct WorkerPreference {
  std::vector<int> ranked;

  friend bool operator==(const WorkerPreference&,
                         const WorkerPreference&) = default;

  static constexpr int kUnrankedSentinel = std::numeric_limits<int>::max();

  int rank_of(int firm) const {
    if (firm == kNullFirm) return (int)ranked.size();
    for (size_t i = 0; i < ranked.size(); ++i)
      if (ranked[i] == firm) return (int)i;
    return kUnrankedSentinel;
  }
  bool accepts(int firm) const {
    return firm != kNullFirm && rank_of(firm) < (int)ranked.size();
  }
  bool prefers(int f, int g) const { return rank_of(f) < rank_of(g); }
  bool weakly_prefers(int f, int g) const { return f == g || prefers(f, g); }
};

// Strict ranking over distinct acceptable worker subsets, best first.  The
// empty set sits right after the last listed subset unless listed itself;
// unlisted non-empty subsets are worse than the empty set (their relative
// order never matters and is treated as ties here).
struct FirmPreference {
  std::vector<Mask> ranked;

  friend bool operator==(const FirmPreference&,
                         const FirmPreference&) = default;

  int rank_of(Mask x) const {
    for (size_t i = 0; i < ranked.size(); ++i)
      if (ranked[i] == x) return (int)i;
    return x == 0 ? (int)ranked.size() : (int)ranked.size() + 1;
  }
  bool prefers(Mask a, Mask b) const {
    if (a == b) return false;
    return rank_of(a) < rank_of(b);
  }
};

// A choice function over subsets of a fixed worker universe.  choose() is
// memoized; implementations provide choose_raw.  The memo fill is idempotent
// and guarded, so shared instances can be used from several threads.
class ChoiceFunction {
 public:
  explicit ChoiceFunction(int n_workers) : n_(n_workers) {
    if (n_workers < 0 || n_workers > 31)
      throw std::invalid_argument("choice function universe out of range");
  }
  virtual ~ChoiceFunction() = default;

  int n_workers() const { return n_; }

  Mask choose(Mask available) const;

  // Strict revealed preference: a beats b iff choosing from their union
  // yields exactly a.  Preference-backed firms override with the ranking.
  virtual bool prefers(Mask a, Mask b) const {
    if (a == b) return false;
    return choose(a | b) == a;
  }

  // Appends human-readable invariant violations ("" prefix added by caller).
  virtual void self_check(std::vector<std::string>& issues) const { (void)issues; }

 protected:
  virtual Mask choose_raw(Mask available) const = 0;

 private:
  int n_;
  mutable std::mutex memo_mutex_;
  mutable std::vector<std::int32_t> memo_;  // -1 = not yet computed
};

// Chooses the best-ranked listed subset contained in the available pool, or
// the empty set when none is.
class PreferenceChoice final : public ChoiceFunction {
 public:
  PreferenceChoice(FirmPreference pref, int n_workers)
      : ChoiceFunction(n_workers), pref_(std::move(pref)) {}

  const FirmPreference& preference() const { return pref_; }

  bool prefers(Mask a, Mask b) const override { return pref_.prefers(a, b); }
  void self_check(std::vector<std::string>& issues) const override;

 protected:
  Mask choose_raw(Mask available) const override {
    for (Mask x : pref_.ranked)
      if ((x & available) == x) return x;
    return 0;
  }

 private:
  FirmPreference pref_;
};

// Wraps an arbitrary rule; handy for tests and ad-hoc rules.  The rule must
// satisfy Ch(X) subset of X (checked on every evaluation).
class FunctionChoice final : public ChoiceFunction {
 public:
  FunctionChoice(std::function<Mask(Mask)> fn, int n_workers)
      : ChoiceFunction(n_workers), fn_(std::move(fn)) {}

 protected:
  Mask choose_raw(Mask available) const override { return fn_(available); }

 private:
  std::function<Mask(Mask)> fn_;
};

// Ordered partition of the worker universe; earlier groups propose in
// earlier stages of the staged mechanism.
struct WorkerPartition {
  std::vector<Mask> groups;

  int n_groups() const { return (int)groups.size(); }
  Mask union_mask() const {
    Mask u = 0;
    for (Mask g : groups) u |= g;
    return u;
  }
  int group_of(int worker) const {
    for (size_t k = 0; k < groups.size(); ++k)
      if (contains(groups[k], worker)) return (int)k;
    return -1;
  }
};

// A matching keeps both directions in sync: worker -> firm (or kNullFirm)
// and firm -> worker set.
class Matching {
 public:
  Matching(std::vector<int> worker_to_firm, int n_firms);
  static Matching from_assignments(const std::vector<Mask>& firm_to_workers,
                                   int n_workers);

  int n_workers() const { return (int)assign_.size(); }
  int n_firms() const { return (int)firm_workers_.size(); }
  int firm_of(int worker) const { return assign_[worker]; }
  Mask workers_of(int firm) const { return firm_workers_[firm]; }
  Mask unmatched() const;
  const std::vector<int>& assignment() const { return assign_; }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.assign_ == b.assign_;
  }
  friend bool operator!=(const Matching& a, const Matching& b) {
    return !(a == b);
  }
  // Lexicographic order on the assignment vector with the null firm sorted
  // after all real firms; fixes enumeration output order.
  static bool lex_less(const Matching& a, const Matching& b);

 private:
  std::vector<int> assign_;
  std::vector<Mask> firm_workers_;
};

struct MarketInstance {
  std::vector<std::string> workers;
  std::vector<std::string> firms;
  WorkerPartition partition;
  std::vector<WorkerPreference> worker_prefs;
  std::vector<std::shared_ptr<const ChoiceFunction>> choices;

  int n_workers() const { return (int)workers.size(); }
  int n_firms() const { return (int)firms.size(); }
  const ChoiceFunction& choice(int firm) const { return *choices[firm]; }
  Mask all_workers() const { return full_mask(n_workers()); }
};

// Workers weakly preferring firm f to their current assignment.  The
// optional filter restricts the scan to a subset of workers.
Mask available_set(const MarketInstance& inst, const Matching& eta, int firm,
                   std::optional<Mask> restrict_to = std::nullopt);

struct ValidationIssue {
  std::string location;  // e.g. "worker s1", "firm f2", "groups"
  std::string message;
};

// Structural checks: sizes line up, partition is a partition, rankings are
// strict, per-firm rules pass their own self_check.
std::vector<ValidationIssue> validate_instance(const MarketInstance& inst);

}  // namespace usc
