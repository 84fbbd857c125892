#include "usc/stability.hpp"

#include <algorithm>

namespace usc {

std::optional<IrViolation> find_ir_violation(const MarketInstance& inst,
                                             const Matching& eta) {
  for (int w = 0; w < inst.n_workers(); ++w) {
    int f = eta.firm_of(w);
    if (f != kNullFirm && !inst.worker_prefs[w].accepts(f))
      return IrViolation{true, w,
                         "worker " + inst.workers[w] +
                             " is matched to unacceptable firm " +
                             inst.firms[f]};
  }
  for (int f = 0; f < inst.n_firms(); ++f) {
    Mask held = eta.workers_of(f);
    if (inst.choice(f).choose(held) != held)
      return IrViolation{false, f,
                         "firm " + inst.firms[f] +
                             " would not keep its assigned set"};
  }
  return std::nullopt;
}

std::optional<BlockingCoalition> find_blocking_coalition(
    const MarketInstance& inst, const Matching& eta) {
  for (int f = 0; f < inst.n_firms(); ++f) {
    Mask avail = available_set(inst, eta, f);
    Mask best = inst.choice(f).choose(avail);
    Mask held = eta.workers_of(f);
    if (best != held && inst.choice(f).prefers(best, held))
      return BlockingCoalition{f, best};
  }
  return std::nullopt;
}

std::optional<BlockingCoalition> find_blocking_coalition_brute(
    const MarketInstance& inst, const Matching& eta, int cap) {
  require_enumerable(inst.n_workers(), cap);
  for (int f = 0; f < inst.n_firms(); ++f) {
    Mask avail = available_set(inst, eta, f);
    Mask held = eta.workers_of(f);
    std::optional<BlockingCoalition> found;
    for_each_subset(avail, [&](Mask x) {
      if (found || x == held) return;
      if (inst.choice(f).prefers(x, held)) found = BlockingCoalition{f, x};
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool is_blocking(const MarketInstance& inst, const Matching& eta,
                 const BlockingCoalition& bc) {
  if (bc.firm < 0 || bc.firm >= inst.n_firms()) return false;
  Mask avail = available_set(inst, eta, bc.firm);
  if ((bc.coalition & avail) != bc.coalition) return false;
  return inst.choice(bc.firm).prefers(bc.coalition,
                                      eta.workers_of(bc.firm));
}

bool is_stable(const MarketInstance& inst, const Matching& eta) {
  return !find_ir_violation(inst, eta) &&
         !find_blocking_coalition(inst, eta);
}

std::vector<Matching> enumerate_stable_matchings(const MarketInstance& inst,
                                                 const EnumerationCaps& caps) {
  int n = inst.n_workers(), m = inst.n_firms();
  if (n > caps.max_workers || m > caps.max_firms)
    throw InstanceTooLarge(n, caps.max_workers);

  std::vector<Matching> out;
  std::vector<int> assign(n, kNullFirm);
  // Worker-side IR holds by construction: each worker gets an acceptable
  // firm or null.  Trying firms in index order then null emits matchings
  // already sorted by Matching::lex_less.
  auto recurse = [&](auto&& self, int w) -> void {
    if (w == n) {
      Matching eta(assign, m);
      if (is_stable(inst, eta)) out.push_back(std::move(eta));
      return;
    }
    for (int f = 0; f < m; ++f) {
      if (!inst.worker_prefs[w].accepts(f)) continue;
      assign[w] = f;
      self(self, w + 1);
    }
    assign[w] = kNullFirm;
    self(self, w + 1);
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace usc
