#include "usc/conditions.hpp"

#include <algorithm>

namespace usc {

const char* relation_name(Relation r) {
  return r == Relation::kSubstitute ? "substitute" : "complement";
}

bool RelationWitness::replays(const ChoiceFunction& cf) const {
  if (w < 0 || w_prime < 0 || w == w_prime) return false;
  if (!contains(context, w) || !contains(context, w_prime)) return false;
  bool in_full = contains(cf.choose(context), w_prime);
  bool in_reduced = contains(cf.choose(without(context, w)), w_prime);
  if (kind == Relation::kSubstitute) return in_reduced && !in_full;
  return !in_reduced && in_full;
}

std::optional<RelationWitness> find_relation(const ChoiceFunction& cf, int w,
                                             int w_prime, Relation kind,
                                             int cap) {
  int n = cf.n_workers();
  require_enumerable(n, cap);
  if (w == w_prime) return std::nullopt;
  Mask base = with(unit(w), w_prime);
  Mask rest = full_mask(n) & ~base;
  std::optional<RelationWitness> found;
  // Ascending context order: enumerate the free workers, add the fixed pair.
  for_each_subset(rest, [&](Mask extra) {
    if (found) return;
    RelationWitness cand{w, w_prime, kind, base | extra};
    if (cand.replays(cf)) found = cand;
  });
  return found;
}

bool is_substitute(const ChoiceFunction& cf, int w, int w_prime, int cap) {
  return find_relation(cf, w, w_prime, Relation::kSubstitute, cap).has_value();
}

bool is_complement(const ChoiceFunction& cf, int w, int w_prime, int cap) {
  return find_relation(cf, w, w_prime, Relation::kComplement, cap).has_value();
}

ConditionVerdict satisfies_substitutes(const ChoiceFunction& cf, int cap) {
  int n = cf.n_workers();
  require_enumerable(n, cap);
  for (int w = 0; w < n; ++w)
    for (int w2 = 0; w2 < n; ++w2) {
      if (w == w2) continue;
      if (auto wit = find_relation(cf, w, w2, Relation::kComplement, cap))
        return {false, wit};
    }
  return {};
}

ConditionVerdict satisfies_substitutes_classical(const ChoiceFunction& cf,
                                                 int cap) {
  int n = cf.n_workers();
  require_enumerable(n, cap);
  Mask all = full_mask(n);
  for (Mask x = 0; x <= all; ++x) {
    Mask chosen = cf.choose(x);
    if (chosen == 0) {
      if (x == all) break;
      continue;
    }
    bool bad = false;
    RelationWitness wit;
    for_each_member(x, [&](int w) {
      if (bad) return;
      Mask reduced = cf.choose(without(x, w));
      Mask dropped = chosen & ~with(reduced, w);
      if (dropped) {
        wit = {w, members(dropped).front(), Relation::kComplement, x};
        bad = true;
      }
    });
    if (bad) return {false, wit};
    if (x == all) break;
  }
  return {};
}

namespace {

// Checks that no ordered pair inside `group` is in a complement relation.
std::optional<RelationWitness> within_group_complement(
    const ChoiceFunction& cf, Mask group, int cap) {
  auto ws = members(group);
  for (int w : ws)
    for (int w2 : ws) {
      if (w == w2) continue;
      if (auto wit = find_relation(cf, w, w2, Relation::kComplement, cap))
        return wit;
    }
  return std::nullopt;
}

}  // namespace

ConditionVerdict satisfies_usc(const ChoiceFunction& cf,
                               const WorkerPartition& partition, int cap) {
  require_enumerable(cf.n_workers(), cap);
  // (i) groups are internally free of complements
  for (Mask g : partition.groups)
    if (auto wit = within_group_complement(cf, g, cap)) return {false, wit};
  // (ii) later-group workers exert no relation on earlier-group workers
  for (size_t j = 0; j < partition.groups.size(); ++j)
    for (size_t k = j + 1; k < partition.groups.size(); ++k)
      for (int later : members(partition.groups[k]))
        for (int earlier : members(partition.groups[j])) {
          if (auto wit =
                  find_relation(cf, later, earlier, Relation::kSubstitute, cap))
            return {false, wit};
          if (auto wit =
                  find_relation(cf, later, earlier, Relation::kComplement, cap))
            return {false, wit};
        }
  return {};
}

ConditionVerdict satisfies_sscc(const ChoiceFunction& cf,
                                const WorkerPartition& partition, int cap) {
  if (partition.n_groups() != 2)
    throw std::invalid_argument("the same-side condition needs exactly two groups");
  require_enumerable(cf.n_workers(), cap);
  for (Mask g : partition.groups)
    if (auto wit = within_group_complement(cf, g, cap)) return {false, wit};
  // No substitute relations across the two groups, either direction.
  for (int s : members(partition.groups[0]))
    for (int u : members(partition.groups[1])) {
      if (auto wit = find_relation(cf, u, s, Relation::kSubstitute, cap))
        return {false, wit};
      if (auto wit = find_relation(cf, s, u, Relation::kSubstitute, cap))
        return {false, wit};
    }
  return {};
}

std::set<DemandVector> demand_type(const ChoiceFunction& cf, int cap) {
  int n = cf.n_workers();
  require_enumerable(n, cap);
  Mask all = full_mask(n);
  std::set<DemandVector> out;
  for (Mask sup = 0; sup <= all; ++sup) {
    Mask ch_sup = cf.choose(sup);
    for_each_subset(sup, [&](Mask sub) {
      if (sub == sup) return;
      Mask ch_sub = cf.choose(sub);
      if (ch_sub == ch_sup) return;
      DemandVector v(n, 0);
      for (int i = 0; i < n; ++i)
        v[i] = (int)contains(ch_sup, i) - (int)contains(ch_sub, i);
      out.insert(std::move(v));
    });
    if (sup == all) break;
  }
  return out;
}

namespace {

long long determinant(std::vector<std::vector<long long>> m) {
  // Bareiss fraction-free elimination; exact for integer matrices.
  int n = (int)m.size();
  long long prev = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 t = (__int128)m[i][j] * m[k][k] - (__int128)m[i][k] * m[k][j];
        m[i][j] = (long long)(t / prev);
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool next_combination(std::vector<int>& idx, int limit) {
  int k = (int)idx.size();
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < limit - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<MinorWitness> find_non_unit_minor(
    const std::set<DemandVector>& vectors) {
  if (vectors.empty()) return std::nullopt;
  size_t dim = vectors.begin()->size();
  std::vector<DemandVector> rows(vectors.begin(), vectors.end());
  std::sort(rows.begin(), rows.end(), std::greater<DemandVector>());

  // Row picks double as column picks; guard the combination space.
  const long long budget = 4'000'000;
  for (size_t size = 1; size <= dim && size <= rows.size(); ++size) {
    std::vector<int> ri(size), ci(size);
    long long count = 0;
    for (size_t i = 0; i < size; ++i) ri[i] = (int)i;
    do {
      for (size_t i = 0; i < size; ++i) ci[i] = (int)i;
      do {
        if (++count > budget)
          throw InstanceTooLarge((int)rows.size(), (int)dim);
        std::vector<std::vector<long long>> minor(size,
                                                  std::vector<long long>(size));
        for (size_t i = 0; i < size; ++i)
          for (size_t j = 0; j < size; ++j)
            minor[i][j] = rows[ri[i]][ci[j]];
        long long det = determinant(minor);
        if (det > 1 || det < -1) {
          MinorWitness w;
          for (size_t i = 0; i < size; ++i) {
            DemandVector full = rows[ri[i]];
            DemandVector picked(size);
            for (size_t j = 0; j < size; ++j) picked[j] = full[ci[j]];
            w.rows.push_back(std::move(picked));
          }
          w.determinant = det;
          return w;
        }
      } while (next_combination(ci, (int)dim));
    } while (next_combination(ri, (int)rows.size()));
  }
  return std::nullopt;
}

ConditionReport build_condition_report(const MarketInstance& inst, int cap) {
  ConditionReport report;
  bool two_groups = inst.partition.n_groups() == 2;
  for (int f = 0; f < inst.n_firms(); ++f) {
    FirmConditionReport fr;
    const ChoiceFunction& cf = inst.choice(f);
    fr.substitutes = satisfies_substitutes(cf, cap);
    fr.usc = satisfies_usc(cf, inst.partition, cap);
    if (two_groups) fr.sscc = satisfies_sscc(cf, inst.partition, cap);
    fr.demand_vectors = demand_type(cf, cap);
    report.union_vectors.insert(fr.demand_vectors.begin(),
                                fr.demand_vectors.end());
    report.firms.push_back(std::move(fr));
  }
  report.union_minor = find_non_unit_minor(report.union_vectors);
  return report;
}

}  // namespace usc
