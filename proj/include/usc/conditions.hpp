#pragma once
// Substitute/complement relations between workers at a choice function, the
// substitutes / USC / SSCC conditions with counterexample witnesses, and
// demand-type vector extraction with a unimodularity probe.

#include <optional>
#include <set>
#include <vector>

#include "usc/core.hpp"

namespace usc {

enum class Relation { kSubstitute, kComplement };

const char* relation_name(Relation r);  // "substitute" / "complement"

// Witness that `w` stands in `kind` relation to `w_prime`: a context set
// X containing both where removing w flips w_prime's membership in the
// choice.  Substitute: w' enters Ch(X \ {w}) after w leaves while being
// rejected from X.  Complement: w' is chosen from X but dropped once w
// leaves.  Relations are ordered; (w, w') says what w does to w'.
struct RelationWitness {
  int w = -1;
  int w_prime = -1;
  Relation kind = Relation::kSubstitute;
  Mask context = 0;

  bool replays(const ChoiceFunction& cf) const;
};

// First witness in ascending context-mask order, or nullopt.
std::optional<RelationWitness> find_relation(const ChoiceFunction& cf, int w,
                                             int w_prime, Relation kind,
                                             int cap = kDefaultEnumCap);

bool is_substitute(const ChoiceFunction& cf, int w, int w_prime,
                   int cap = kDefaultEnumCap);
bool is_complement(const ChoiceFunction& cf, int w, int w_prime,
                   int cap = kDefaultEnumCap);

struct ConditionVerdict {
  bool holds = true;
  std::optional<RelationWitness> counterexample;

  explicit operator bool() const { return holds; }
};

// No worker is a complement to another (any ordered pair).
ConditionVerdict satisfies_substitutes(const ChoiceFunction& cf,
                                       int cap = kDefaultEnumCap);

// Textbook formulation: w' chosen from X stays chosen when some other
// worker leaves.  Provably the same condition as satisfies_substitutes;
// kept as an independent route for cross-checks.
ConditionVerdict satisfies_substitutes_classical(const ChoiceFunction& cf,
                                                 int cap = kDefaultEnumCap);

// Unidirectional substitutes and complements across the ordered groups:
// (i) within each group no worker is a complement to another, and
// (ii) workers of later groups are neither substitutes nor complements to
// workers of any earlier group.  Accepts any number of groups; with a
// single group this reduces to satisfies_substitutes.
ConditionVerdict satisfies_usc(const ChoiceFunction& cf,
                               const WorkerPartition& partition,
                               int cap = kDefaultEnumCap);

// Same-side strengthening for exactly two groups: condition (i) as above
// plus no substitute relations across groups in either direction.
ConditionVerdict satisfies_sscc(const ChoiceFunction& cf,
                                const WorkerPartition& partition,
                                int cap = kDefaultEnumCap);

// Demand-type vectors: indicator(Ch(X')) - indicator(Ch(X)) over all pairs
// X proper-subset X', zero vectors dropped, deduplicated.
using DemandVector = std::vector<int>;
std::set<DemandVector> demand_type(const ChoiceFunction& cf,
                                   int cap = kDefaultEnumCap);

struct MinorWitness {
  std::vector<DemandVector> rows;  // square selection of vectors
  long long determinant;           // |determinant| > 1
};

// Scans square minors of the vector set (rows in descending lexicographic
// order, sizes small to large) for a determinant outside {-1, 0, 1}.
// Returns nullopt when every minor is unimodular.
std::optional<MinorWitness> find_non_unit_minor(
    const std::set<DemandVector>& vectors);

struct FirmConditionReport {
  ConditionVerdict substitutes;
  ConditionVerdict usc;
  std::optional<ConditionVerdict> sscc;  // only with exactly two groups
  std::set<DemandVector> demand_vectors;
};

struct ConditionReport {
  std::vector<FirmConditionReport> firms;
  std::set<DemandVector> union_vectors;
  std::optional<MinorWitness> union_minor;
};

ConditionReport build_condition_report(const MarketInstance& inst,
                                       int cap = kDefaultEnumCap);

}  // namespace usc
