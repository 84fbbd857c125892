#include "usc/document.hpp"

#include <algorithm>

namespace usc {

namespace {
int index_of(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : (int)(it - names.begin());
}
}  // namespace

int InstanceDocument::worker_index(const std::string& name) const {
  return index_of(workers, name);
}

int InstanceDocument::firm_index(const std::string& name) const {
  return index_of(firms, name);
}

MarketInstance InstanceDocument::build_market() const {
  MarketInstance inst;
  inst.workers = workers;
  inst.firms = firms;
  inst.partition.groups = groups;
  inst.worker_prefs = worker_prefs;
  int n = (int)workers.size();
  Mask inside = groups.empty() ? 0 : groups.front();
  for (const FirmSpec& spec : firm_specs) {
    if (const auto* pref = std::get_if<FirmPreference>(&spec)) {
      inst.choices.push_back(std::make_shared<PreferenceChoice>(*pref, n));
    } else {
      const auto& school = std::get<SchoolRuleSpec>(spec);
      SchoolRule rule;
      rule.priority = school.priority;
      rule.capacity = school.capacity;
      rule.ceiling = school.ceiling;
      rule.inside_group = inside;
      inst.choices.push_back(std::make_shared<SchoolChoice>(std::move(rule)));
    }
  }
  return inst;
}

bool operator==(const InstanceDocument& a, const InstanceDocument& b) {
  return a.workers == b.workers && a.firms == b.firms && a.groups == b.groups &&
         a.worker_prefs == b.worker_prefs && a.firm_specs == b.firm_specs &&
         a.quasilinear == b.quasilinear;
}

}  // namespace usc
