#pragma once
// Worker-proposing deferred acceptance, single stage and staged by group,
// with full round-by-round traces.

#include <string>
#include <vector>

#include "usc/core.hpp"

namespace usc {

struct FirmRoundRecord {
  bool active = false;  // firm faced new proposals this round
  Mask proposals = 0;   // fresh applicants
  Mask considered = 0;  // previous holding plus proposals (active firms only)
  Mask held = 0;        // holding after the round (carried forward if idle)
  Mask rejected = 0;
};

struct RoundRecord {
  std::vector<FirmRoundRecord> firms;
  Mask exits = 0;  // workers that ran out of firms and left for null
};

struct StageRecord {
  Mask proposers = 0;
  std::vector<Mask> seed_held;  // per firm, holdings carried into the stage
  std::vector<RoundRecord> rounds;
  std::vector<std::string> warnings;
};

struct MechanismTrace {
  std::vector<StageRecord> stages;
  Matching result;

  MechanismTrace() : result(std::vector<int>{}, 0) {}
};

// One deferred-acceptance stage.  `proposers` start at the top of their
// lists; workers in `seed_held` (one mask per firm, pairwise disjoint and
// disjoint from the proposers) sit with their firm and only move if later
// rejected, in which case they continue mechanically down their list from
// that firm.  Rejection of a seed-held worker is recorded as a warning.
// Each round: every pending worker proposes to the next firm on her list
// (or leaves for null when exhausted); every firm facing new proposals
// re-chooses from holding-plus-proposals and rejects the rest.  Runs until
// no pending workers remain.
MechanismTrace worker_proposing_da(const MarketInstance& inst, Mask proposers,
                                   const std::vector<Mask>& seed_held);

// Runs one stage per partition group, earliest group first, feeding each
// stage's holdings into the next as seed.
MechanismTrace multi_stage_da(const MarketInstance& inst);

// Same, but with an explicit stage layout (each mask = proposers of one
// stage; must partition the worker universe).
MechanismTrace multi_stage_da(const MarketInstance& inst,
                              const std::vector<Mask>& stage_groups);

}  // namespace usc
