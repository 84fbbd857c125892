#pragma once
// Quasi-linear single-firm demand: exact demand sets under salary vectors,
// the demand profile as one salary sweeps its line, and grid-based
// detection of substitute/complement relations with replayable price-pair
// witnesses.

#include <optional>
#include <vector>

#include "usc/conditions.hpp"
#include "usc/rational.hpp"
#include "usc/worker_set.hpp"

namespace usc {

using SalaryVector = std::vector<Rational>;

// Valuation over all worker subsets, indexed by mask.
struct Valuation {
  int n = 0;
  std::vector<Rational> value;  // size 1 << n

  static Valuation zeros(int n_workers) {
    return Valuation{n_workers,
                     std::vector<Rational>(std::size_t{1} << n_workers)};
  }
  const Rational& operator()(Mask x) const { return value[x]; }
  Rational& operator()(Mask x) { return value[x]; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.n == b.n && a.value == b.value;
  }
};

Rational salary_cost(const SalaryVector& p, Mask x);

struct DemandResult {
  Rational surplus;          // max of v(X) - salaries(X)
  std::vector<Mask> optima;  // all maximizers, ascending mask order
};

DemandResult demand(const Valuation& v, const SalaryVector& p);

// Worker w is demanded at p iff some maximizer employs her.
bool is_demanded(const Valuation& v, const SalaryVector& p, int w);

// Demand as w's salary sweeps the line with all other salaries fixed (the
// w entry of `others` is ignored).  There is exactly one breakpoint: below
// it the maximizers are `with_w`, above it `without_w`, at it their union.
struct DemandProfile {
  Rational critical;            // the breakpoint t*
  std::vector<Mask> with_w;     // argmax over sets employing w, w's salary
                                // excluded from the cost
  std::vector<Mask> without_w;  // argmax over sets avoiding w
  Rational with_base;           // value attained by with_w (before salary t)
  Rational without_value;       // value attained by without_w
};

DemandProfile demanded_profile(const Valuation& v, const SalaryVector& others,
                               int w);

// Grid used when hunting relation witnesses: the base is every difference
// of two valuation pair-sums (v(A)+v(B)) - (v(C)+v(D)) plus outer
// sentinels; each refine level splices midpoints between neighbours.  With
// at most three workers the base grid provably reaches a witness whenever
// one exists (the breakpoint of the third coordinate is a first-order
// difference, and the admissible salary interval for the second is closed
// at a second-order difference); refinement is a hedge for larger
// universes.  The search is sound either way: witnesses replay.
inline constexpr int kDefaultQlRefine = 1;

std::vector<Rational> candidate_grid(const Valuation& v, int refine_levels);

// Replayable witness: two salary vectors differing only in w's entry,
// high[w] > low[w].  Substitute (w to w_prime): w_prime is demanded at
// `high` but not at `low`.  Complement: demanded at `low`, not at `high`.
struct QlWitness {
  int w = -1;
  int w_prime = -1;
  Relation kind = Relation::kSubstitute;
  SalaryVector high;
  SalaryVector low;

  bool replays(const Valuation& v) const;
};

std::optional<QlWitness> detect_ql_relation(const Valuation& v, int w,
                                            int w_prime, Relation kind,
                                            int refine_levels = kDefaultQlRefine);

struct QlRelationTable {
  int n = 0;
  // entry [w][w_prime]: witness that w is a substitute / complement to
  // w_prime, when one was found
  std::vector<std::vector<std::optional<QlWitness>>> substitute;
  std::vector<std::vector<std::optional<QlWitness>>> complement;

  bool has(Relation kind, int w, int w_prime) const {
    return (kind == Relation::kSubstitute ? substitute : complement)[w][w_prime]
        .has_value();
  }
};

QlRelationTable relation_table(const Valuation& v,
                               int refine_levels = kDefaultQlRefine);

// In the quasi-linear market the relations are two-way streets: w relates
// to w_prime exactly when w_prime relates to w the same way.
struct QlSymmetryReport {
  bool symmetric = true;
  QlRelationTable table;
  struct Asymmetry {
    int w, w_prime;
    Relation kind;  // found for (w, w_prime) but not for (w_prime, w)
  };
  std::vector<Asymmetry> asymmetries;
};

QlSymmetryReport verify_ql_symmetry(const Valuation& v,
                                    int refine_levels = kDefaultQlRefine);

// True when w exerts neither relation on w_prime at any salaries the grid
// reaches.
bool cross_effect_free(const Valuation& v, int w, int w_prime,
                       int refine_levels = kDefaultQlRefine);

}  // namespace usc
