#include "usc/quasilinear.hpp"

#include <algorithm>
#include <functional>

namespace usc {

Rational salary_cost(const SalaryVector& p, Mask x) {
  Rational total;
  for_each_member(x, [&](int w) { total += p[w]; });
  return total;
}

DemandResult demand(const Valuation& v, const SalaryVector& p) {
  if ((int)p.size() != v.n)
    throw std::invalid_argument("salary vector size does not match valuation");
  DemandResult res;
  Mask all = full_mask(v.n);
  for (Mask x = 0;; ++x) {
    Rational surplus = v(x) - salary_cost(p, x);
    if (x == 0 || surplus > res.surplus) {
      res.surplus = surplus;
      res.optima.clear();
    }
    if (surplus == res.surplus) res.optima.push_back(x);
    if (x == all) break;
  }
  return res;
}

bool is_demanded(const Valuation& v, const SalaryVector& p, int w) {
  DemandResult res = demand(v, p);
  for (Mask x : res.optima)
    if (contains(x, w)) return true;
  return false;
}

DemandProfile demanded_profile(const Valuation& v, const SalaryVector& others,
                               int w) {
  if ((int)others.size() != v.n)
    throw std::invalid_argument("salary vector size does not match valuation");
  DemandProfile prof;
  Mask all = full_mask(v.n);
  bool first_with = true, first_without = true;
  for (Mask x = 0;; ++x) {
    if (contains(x, w)) {
      Rational s = v(x) - salary_cost(others, without(x, w));
      if (first_with || s > prof.with_base) {
        prof.with_base = s;
        prof.with_w.clear();
        first_with = false;
      }
      if (s == prof.with_base) prof.with_w.push_back(x);
    } else {
      Rational s = v(x) - salary_cost(others, x);
      if (first_without || s > prof.without_value) {
        prof.without_value = s;
        prof.without_w.clear();
        first_without = false;
      }
      if (s == prof.without_value) prof.without_w.push_back(x);
    }
    if (x == all) break;
  }
  // Employing w is worth it exactly while her salary stays below the gap.
  prof.critical = prof.with_base - prof.without_value;
  return prof;
}

std::vector<Rational> candidate_grid(const Valuation& v, int refine_levels) {
  std::vector<Rational> values = v.value;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Rational> sums;  // pair sums, same index allowed
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i; j < values.size(); ++j)
      sums.push_back(values[i] + values[j]);
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  std::vector<Rational> grid;
  grid.reserve(sums.size() * sums.size());
  for (const Rational& a : sums)
    for (const Rational& b : sums) grid.push_back(a - b);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (int level = 0; level < refine_levels; ++level) {
    std::vector<Rational> finer;
    finer.reserve(grid.size() * 2);
    for (size_t i = 0; i < grid.size(); ++i) {
      if (i) finer.push_back(midpoint(grid[i - 1], grid[i]));
      finer.push_back(grid[i]);
    }
    grid = std::move(finer);
  }
  grid.insert(grid.begin(), grid.front() - Rational(1));
  grid.push_back(grid.back() + Rational(1));
  return grid;
}

bool QlWitness::replays(const Valuation& v) const {
  if (w < 0 || w_prime < 0 || w == w_prime) return false;
  if ((int)high.size() != v.n || (int)low.size() != v.n) return false;
  for (int i = 0; i < v.n; ++i)
    if (i != w && high[i] != low[i]) return false;
  if (!(high[w] > low[w])) return false;
  bool at_high = is_demanded(v, high, w_prime);
  bool at_low = is_demanded(v, low, w_prime);
  if (kind == Relation::kSubstitute) return at_high && !at_low;
  return !at_high && at_low;
}

namespace {

// Walks assignments of grid values to every coordinate except w and hands
// each resulting vector (w's entry left at zero) to the visitor; stops when
// the visitor returns true.
bool odometer_scan(int n, int w, const std::vector<Rational>& grid,
                   const std::function<bool(const SalaryVector&)>& visit) {
  std::vector<int> pos(n, 0);
  SalaryVector p(n, Rational(0));
  while (true) {
    for (int i = 0; i < n; ++i)
      if (i != w) p[i] = grid[pos[i]];
    if (visit(p)) return true;
    int i = 0;
    while (i < n) {
      if (i == w) {
        ++i;
        continue;
      }
      if (++pos[i] < (int)grid.size()) break;
      pos[i] = 0;
      ++i;
    }
    if (i >= n) return false;
  }
}

bool profile_shows(const DemandProfile& prof, Relation kind, int w_prime) {
  bool in_with = false, in_without = false;
  for (Mask x : prof.with_w)
    if (contains(x, w_prime)) {
      in_with = true;
      break;
    }
  for (Mask x : prof.without_w)
    if (contains(x, w_prime)) {
      in_without = true;
      break;
    }
  // Crossing the breakpoint upward moves demand from with_w to without_w:
  // a substitute pattern keeps w_prime only above it, a complement pattern
  // only below it.
  if (kind == Relation::kSubstitute) return in_without && !in_with;
  return in_with && !in_without;
}

QlWitness witness_at(const DemandProfile& prof, const SalaryVector& p, int w,
                     int w_prime, Relation kind) {
  QlWitness wit;
  wit.w = w;
  wit.w_prime = w_prime;
  wit.kind = kind;
  wit.high = p;
  wit.low = p;
  wit.high[w] = prof.critical + Rational(1);
  wit.low[w] = prof.critical - Rational(1);
  return wit;
}

}  // namespace

std::optional<QlWitness> detect_ql_relation(const Valuation& v, int w,
                                            int w_prime, Relation kind,
                                            int refine_levels) {
  if (w == w_prime || w < 0 || w >= v.n || w_prime < 0 || w_prime >= v.n)
    throw std::invalid_argument("relation needs two distinct workers");
  std::vector<Rational> grid = candidate_grid(v, refine_levels);
  std::optional<QlWitness> found;
  odometer_scan(v.n, w, grid, [&](const SalaryVector& p) {
    DemandProfile prof = demanded_profile(v, p, w);
    if (profile_shows(prof, kind, w_prime)) {
      found = witness_at(prof, p, w, w_prime, kind);
      return true;
    }
    return false;
  });
  return found;
}

QlRelationTable relation_table(const Valuation& v, int refine_levels) {
  QlRelationTable table;
  table.n = v.n;
  table.substitute.assign(v.n, std::vector<std::optional<QlWitness>>(v.n));
  table.complement.assign(v.n, std::vector<std::optional<QlWitness>>(v.n));
  std::vector<Rational> grid = candidate_grid(v, refine_levels);
  for (int w = 0; w < v.n; ++w) {
    int open = 2 * (v.n - 1);
    odometer_scan(v.n, w, grid, [&](const SalaryVector& p) {
      DemandProfile prof = demanded_profile(v, p, w);
      for (int w2 = 0; w2 < v.n; ++w2) {
        if (w2 == w) continue;
        for (Relation kind : {Relation::kSubstitute, Relation::kComplement}) {
          auto& slot = (kind == Relation::kSubstitute ? table.substitute
                                                      : table.complement);
          if (slot[w][w2]) continue;
          if (profile_shows(prof, kind, w2)) {
            slot[w][w2] = witness_at(prof, p, w, w2, kind);
            --open;
          }
        }
      }
      return open == 0;
    });
  }
  return table;
}

QlSymmetryReport verify_ql_symmetry(const Valuation& v, int refine_levels) {
  QlSymmetryReport report;
  report.table = relation_table(v, refine_levels);
  for (int w = 0; w < v.n; ++w)
    for (int w2 = 0; w2 < v.n; ++w2) {
      if (w == w2) continue;
      for (Relation kind : {Relation::kSubstitute, Relation::kComplement}) {
        if (report.table.has(kind, w, w2) && !report.table.has(kind, w2, w)) {
          report.symmetric = false;
          report.asymmetries.push_back({w, w2, kind});
        }
      }
    }
  return report;
}

bool cross_effect_free(const Valuation& v, int w, int w_prime,
                       int refine_levels) {
  return !detect_ql_relation(v, w, w_prime, Relation::kSubstitute,
                             refine_levels) &&
         !detect_ql_relation(v, w, w_prime, Relation::kComplement,
                             refine_levels);
}

}  // namespace usc
