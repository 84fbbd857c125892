#pragma once
// Admission rules for a two-group district: capacity plus a per-student
// ceiling on the admitted share of outside applicants, evaluated pointwise
// from a strict priority order.  All arithmetic is exact.

#include <memory>
#include <vector>

#include "usc/conditions.hpp"
#include "usc/core.hpp"
#include "usc/rational.hpp"

namespace usc {

struct SchoolRule {
  std::vector<int> priority;  // every worker exactly once, highest first
  int capacity = 0;
  Rational ceiling;     // alpha in [0, 1], cap on the outside share
  Mask inside_group = 0;  // the workers counted as within-district

  int n_workers() const { return (int)priority.size(); }
  // Position in the priority order; lower is stronger.
  int position_of(int worker) const {
    for (size_t i = 0; i < priority.size(); ++i)
      if (priority[i] == worker) return (int)i;
    return (int)priority.size();
  }
};

// Admission from applicant pool X, decided per applicant w:
//   - within-district w enters iff fewer than `capacity` members of X have
//     higher priority than w;
//   - outside w additionally needs the would-be outside share bounded:
//     1 - |X inside| / (|higher-priority applicants in X| + 1) <= ceiling.
Mask school_choose(const SchoolRule& rule, Mask applicants);

class SchoolChoice final : public ChoiceFunction {
 public:
  explicit SchoolChoice(SchoolRule rule)
      : ChoiceFunction(rule.n_workers()), rule_(std::move(rule)) {}

  const SchoolRule& rule() const { return rule_; }
  void self_check(std::vector<std::string>& issues) const override;

 protected:
  Mask choose_raw(Mask available) const override {
    return school_choose(rule_, available);
  }

 private:
  SchoolRule rule_;
};

// Checks a rule's choice function against the unidirectional condition for
// the given two-group partition (inside group first).
ConditionVerdict verify_school_usc(const SchoolRule& rule,
                                   const WorkerPartition& partition,
                                   int cap = kDefaultEnumCap);

}  // namespace usc
