#include "usc/mechanisms.hpp"

#include <algorithm>

namespace usc {

namespace {

StageRecord run_stage(const MarketInstance& inst, Mask proposers,
                      std::vector<Mask>& held) {
  int n = inst.n_workers(), m = inst.n_firms();
  StageRecord stage;
  stage.proposers = proposers;
  stage.seed_held = held;

  Mask seeded = 0;
  for (Mask h : held) seeded |= h;
  if (seeded & proposers)
    throw std::invalid_argument("seed-held workers cannot also propose");

  // cursor[w]: position in w's list of the firm she currently holds or is
  // about to propose to.  Seed-held workers resume below their firm if it
  // is listed, otherwise they exit on rejection.
  std::vector<int> cursor(n, 0);
  for (int f = 0; f < m; ++f)
    for_each_member(held[f], [&](int w) {
      int r = inst.worker_prefs[w].rank_of(f);
      cursor[w] = std::min(r, (int)inst.worker_prefs[w].ranked.size());
    });

  Mask pending = proposers;
  while (pending) {
    RoundRecord round;
    round.firms.resize(m);
    std::vector<Mask> proposals(m, 0);
    for_each_member(pending, [&](int w) {
      const auto& list = inst.worker_prefs[w].ranked;
      if (cursor[w] >= (int)list.size())
        round.exits = with(round.exits, w);
      else
        proposals[list[cursor[w]]] = with(proposals[list[cursor[w]]], w);
    });

    Mask next_pending = 0;
    for (int f = 0; f < m; ++f) {
      FirmRoundRecord& fr = round.firms[f];
      if (proposals[f] == 0) {
        fr.held = held[f];
        continue;
      }
      fr.active = true;
      fr.proposals = proposals[f];
      fr.considered = held[f] | proposals[f];
      fr.held = inst.choice(f).choose(fr.considered);
      fr.rejected = fr.considered & ~fr.held;
      held[f] = fr.held;
      for_each_member(fr.rejected, [&](int w) {
        ++cursor[w];
        next_pending = with(next_pending, w);
        if (!contains(proposers, w))
          stage.warnings.push_back("worker " + inst.workers[w] +
                                   " was seed-held at firm " + inst.firms[f] +
                                   " and got rejected mid-stage");
      });
    }
    stage.rounds.push_back(std::move(round));
    pending = next_pending;
  }
  return stage;
}

}  // namespace

MechanismTrace worker_proposing_da(const MarketInstance& inst, Mask proposers,
                                   const std::vector<Mask>& seed_held) {
  int m = inst.n_firms();
  if ((int)seed_held.size() != m)
    throw std::invalid_argument("seed holdings need one mask per firm");
  Mask seen = 0;
  for (Mask h : seed_held) {
    if (h & seen)
      throw std::invalid_argument("seed holdings assign a worker twice");
    seen |= h;
  }
  std::vector<Mask> held = seed_held;
  MechanismTrace trace;
  trace.stages.push_back(run_stage(inst, proposers, held));
  trace.result = Matching::from_assignments(held, inst.n_workers());
  return trace;
}

MechanismTrace multi_stage_da(const MarketInstance& inst) {
  return multi_stage_da(inst, inst.partition.groups);
}

MechanismTrace multi_stage_da(const MarketInstance& inst,
                              const std::vector<Mask>& stage_groups) {
  Mask covered = 0;
  for (Mask g : stage_groups) {
    if (g & covered)
      throw std::invalid_argument("stage groups overlap");
    covered |= g;
  }
  if (covered != inst.all_workers())
    throw std::invalid_argument("stage groups must cover every worker");

  std::vector<Mask> held(inst.n_firms(), 0);
  MechanismTrace trace;
  for (Mask group : stage_groups)
    trace.stages.push_back(run_stage(inst, group, held));
  trace.result = Matching::from_assignments(held, inst.n_workers());
  return trace;
}

}  // namespace usc
