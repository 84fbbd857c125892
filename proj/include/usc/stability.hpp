#pragma once
// Individual rationality, blocking coalitions, stability verdicts, and
// exhaustive stable-matching enumeration.

#include <optional>
#include <string>
#include <vector>

#include "usc/core.hpp"

namespace usc {

struct IrViolation {
  bool worker_side = false;
  int index = -1;  // worker or firm id
  std::string message;
};

// A worker matched to an unacceptable firm, or a firm that would not keep
// its assigned set (Ch(eta(f)) != eta(f)).
std::optional<IrViolation> find_ir_violation(const MarketInstance& inst,
                                             const Matching& eta);

struct BlockingCoalition {
  int firm = -1;
  Mask coalition = 0;  // X: every member weakly prefers firm to her match,
                       // and the firm strictly prefers X to its match
};

// Choice-route detection: for each firm compare Ch(A_f(eta)) with eta(f).
// Returns the lowest-indexed blocking firm with X = Ch(A_f(eta)).
std::optional<BlockingCoalition> find_blocking_coalition(
    const MarketInstance& inst, const Matching& eta);

// Brute-force detection: enumerates X subset of A_f(eta) per firm in
// ascending mask order and tests the firm's strict preference directly.
// Independent of the choice route; used to cross-check it.
std::optional<BlockingCoalition> find_blocking_coalition_brute(
    const MarketInstance& inst, const Matching& eta,
    int cap = kDefaultEnumCap);

bool is_blocking(const MarketInstance& inst, const Matching& eta,
                 const BlockingCoalition& bc);

// Stable = individually rational and free of blocking coalitions.
bool is_stable(const MarketInstance& inst, const Matching& eta);

struct EnumerationCaps {
  int max_workers = 10;
  int max_firms = 6;
};

// All stable matchings, ordered by Matching::lex_less.  Walks every
// worker-side assignment (acceptable firms or null per worker), so it is
// restricted to desk-size instances.
std::vector<Matching> enumerate_stable_matchings(
    const MarketInstance& inst, const EnumerationCaps& caps = {});

}  // namespace usc
