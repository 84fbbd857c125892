#include "usc/generator.hpp"

#include <algorithm>

#include "usc/conditions.hpp"

namespace usc {

const char* family_name(InstanceFamily f) {
  switch (f) {
    case InstanceFamily::kUscPreferences: return "usc";
    case InstanceFamily::kSubstitutes: return "substitutes";
    case InstanceFamily::kSchoolRules: return "school";
    case InstanceFamily::kValuations: return "valuation";
  }
  return "?";
}

InstanceFamily family_from_name(const std::string& name) {
  for (InstanceFamily f :
       {InstanceFamily::kUscPreferences, InstanceFamily::kSubstitutes,
        InstanceFamily::kSchoolRules, InstanceFamily::kValuations})
    if (name == family_name(f)) return f;
  throw std::invalid_argument("unknown instance family: " + name);
}

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count,
                                  int start = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i)
    out.push_back(prefix + std::to_string(start + i));
  return out;
}

// Worker names follow the group layout: s1, s2, ... for the first group,
// u1, ... for the second, then w<k>_1, ... for later groups.
std::vector<std::string> group_worker_names(const std::vector<int>& sizes) {
  std::vector<std::string> out;
  for (size_t k = 0; k < sizes.size(); ++k) {
    std::string prefix = k == 0 ? "s"
                       : k == 1 ? "u"
                                : "w" + std::to_string(k + 1) + "_";
    auto part = numbered(prefix, sizes[k]);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

WorkerPreference random_worker_pref(Rng& rng, int m) {
  std::vector<int> all(m);
  for (int f = 0; f < m; ++f) all[f] = f;
  rng.shuffle(all);
  all.resize(rng.below(m + 1));
  return WorkerPreference{std::move(all)};
}

FirmPreference random_firm_pref(Rng& rng, int n, int max_subsets) {
  // Cannot rank more distinct subsets than the universe offers.
  int want = 1 + rng.below(std::min(max_subsets, (1 << n) - 1));
  std::vector<Mask> ranked;
  while ((int)ranked.size() < want) {
    Mask x = (Mask)(1 + rng.below((1 << n) - 1));
    if (std::find(ranked.begin(), ranked.end(), x) == ranked.end())
      ranked.push_back(x);
  }
  return FirmPreference{std::move(ranked)};
}

Mask group_union(const std::vector<Mask>& groups, size_t upto) {
  Mask u = 0;
  for (size_t k = 0; k < upto && k < groups.size(); ++k) u |= groups[k];
  return u;
}

InstanceDocument preference_family(const GeneratorConfig& cfg, bool need_usc) {
  Rng rng(cfg.seed);
  InstanceDocument doc;
  doc.workers = group_worker_names(cfg.group_sizes);
  doc.firms = numbered("f", cfg.firms);
  int n = (int)doc.workers.size(), m = cfg.firms;
  require_enumerable(n);
  int at = 0;
  for (int size : cfg.group_sizes) {
    doc.groups.push_back(full_mask(size) << at);
    at += size;
  }
  WorkerPartition partition{doc.groups};
  for (int w = 0; w < n; ++w)
    doc.worker_prefs.push_back(random_worker_pref(rng, m));
  for (int f = 0; f < m; ++f) {
    bool accepted = false;
    for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
      FirmPreference pref = random_firm_pref(rng, n, cfg.max_ranked_subsets);
      // Half of the unidirectional draws stick to early-group workers,
      // which cannot disturb condition (ii) and keeps rejection viable.
      if (need_usc && doc.groups.size() > 1 && rng.coin()) {
        Mask early = group_union(doc.groups, doc.groups.size() - 1);
        for (Mask& x : pref.ranked) x &= early;
        std::vector<Mask> dedup;
        for (Mask x : pref.ranked)
          if (x && std::find(dedup.begin(), dedup.end(), x) == dedup.end())
            dedup.push_back(x);
        if (dedup.empty()) continue;
        pref.ranked = std::move(dedup);
      }
      PreferenceChoice cf(pref, n);
      ConditionVerdict ok = need_usc ? satisfies_usc(cf, partition)
                                     : satisfies_substitutes(cf);
      if (ok.holds) {
        doc.firm_specs.emplace_back(std::move(pref));
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw SamplingBudgetExhausted(
          "no admissible preference for firm " + doc.firms[f],
          cfg.max_attempts);
  }
  return doc;
}

InstanceDocument school_family(const GeneratorConfig& cfg) {
  if (cfg.group_sizes.size() != 2)
    throw std::invalid_argument("school family needs exactly two groups");
  Rng rng(cfg.seed);
  InstanceDocument doc;
  doc.workers = group_worker_names(cfg.group_sizes);
  doc.firms = numbered("f", cfg.firms);
  int n = (int)doc.workers.size(), m = cfg.firms;
  int n_inside = cfg.group_sizes[0];
  doc.groups = {full_mask(n_inside), full_mask(n - n_inside) << n_inside};
  WorkerPartition partition{doc.groups};
  for (int w = 0; w < n; ++w)
    doc.worker_prefs.push_back(random_worker_pref(rng, m));
  const Rational ceilings[] = {Rational(0),      Rational(1, 4),
                               Rational(1, 3),   Rational(1, 2),
                               Rational(2, 3),   Rational(1)};
  for (int f = 0; f < m; ++f) {
    SchoolRuleSpec spec;
    std::vector<int> inside = members(doc.groups[0]);
    std::vector<int> outside = members(doc.groups[1]);
    rng.shuffle(inside);
    rng.shuffle(outside);
    spec.priority = inside;
    spec.priority.insert(spec.priority.end(), outside.begin(), outside.end());
    spec.capacity = 1 + rng.below(cfg.max_capacity);
    spec.ceiling = ceilings[rng.below(6)];
    SchoolRule rule{spec.priority, spec.capacity, spec.ceiling, doc.groups[0]};
    ConditionVerdict ok = verify_school_usc(rule, partition);
    if (!ok.holds)
      throw std::logic_error("school rule failed the unidirectional check");
    doc.firm_specs.emplace_back(std::move(spec));
  }
  return doc;
}

InstanceDocument valuation_family(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  InstanceDocument doc;
  int n = 0;
  for (int size : cfg.group_sizes) n += size;
  require_enumerable(n);
  QuasilinearBlock block;
  block.workers = numbered("w", n);
  for (int f = 0; f < cfg.firms; ++f) {
    Valuation v = Valuation::zeros(n);
    for (Mask x = 0; x < (Mask)(1 << n); ++x)
      v(x) = Rational(rng.between(cfg.value_min, cfg.value_max));
    block.valuations.push_back({"v" + std::to_string(f + 1), std::move(v)});
  }
  doc.quasilinear = std::move(block);
  return doc;
}

}  // namespace

InstanceDocument generate_instance(const GeneratorConfig& cfg) {
  switch (cfg.family) {
    case InstanceFamily::kUscPreferences:
      return preference_family(cfg, true);
    case InstanceFamily::kSubstitutes:
      return preference_family(cfg, false);
    case InstanceFamily::kSchoolRules:
      return school_family(cfg);
    case InstanceFamily::kValuations:
      return valuation_family(cfg);
  }
  throw std::invalid_argument("unknown instance family");
}

}  // namespace usc
