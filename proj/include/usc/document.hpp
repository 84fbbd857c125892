#pragma once
// Declarative instance description as it appears on disk: named workers and
// firms, group layout, rankings, optional school rules and quasi-linear
// payload.  build_market() turns it into an executable MarketInstance.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "usc/core.hpp"
#include "usc/quasilinear.hpp"
#include "usc/school.hpp"

namespace usc {

struct SchoolRuleSpec {
  std::vector<int> priority;
  int capacity = 0;
  Rational ceiling;

  friend bool operator==(const SchoolRuleSpec&, const SchoolRuleSpec&) = default;
};

using FirmSpec = std::variant<FirmPreference, SchoolRuleSpec>;

struct NamedValuation {
  std::string name;
  Valuation valuation;

  friend bool operator==(const NamedValuation&, const NamedValuation&) = default;
};

// Self-contained quasi-linear block with its own worker universe.
struct QuasilinearBlock {
  std::vector<std::string> workers;
  std::vector<NamedValuation> valuations;
  std::vector<SalaryVector> queries;

  friend bool operator==(const QuasilinearBlock&, const QuasilinearBlock&) = default;
};

struct InstanceDocument {
  std::vector<std::string> workers;
  std::vector<std::string> firms;
  std::vector<Mask> groups;
  std::vector<WorkerPreference> worker_prefs;
  std::vector<FirmSpec> firm_specs;
  std::optional<QuasilinearBlock> quasilinear;

  int worker_index(const std::string& name) const;  // -1 when unknown
  int firm_index(const std::string& name) const;

  // Builds choice functions from the specs.  School rules take the first
  // group as the within-district side.
  MarketInstance build_market() const;
};

bool operator==(const InstanceDocument& a, const InstanceDocument& b);

}  // namespace usc
