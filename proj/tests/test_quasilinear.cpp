#include "doctest.h"

#include <algorithm>

#include "test_util.hpp"
#include "usc/generator.hpp"
#include "usc/quasilinear.hpp"

using namespace usc;
using testutil::mask_of;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

// Two workers s=0, u=1.
Valuation complements_pair() {  // the pair is worth more than its parts
  Valuation v = Valuation::zeros(2);
  v(mask_of({0})) = R(5);
  v(mask_of({1})) = R(-1);
  v(mask_of({0, 1})) = R(8);
  return v;
}

Valuation substitutes_pair() {  // together they get in each other's way
  Valuation v = Valuation::zeros(2);
  v(mask_of({0})) = R(3);
  v(mask_of({1})) = R(2);
  v(mask_of({0, 1})) = R(-1);
  return v;
}

Valuation pair_with_top(long long x) {  // v(s)=5, v(u)=3, v(su)=x
  Valuation v = Valuation::zeros(2);
  v(mask_of({0})) = R(5);
  v(mask_of({1})) = R(3);
  v(mask_of({0, 1})) = R(x);
  return v;
}

Valuation random_valuation(Rng& rng, int n, long long lo = -5,
                           long long hi = 10) {
  Valuation v = Valuation::zeros(n);
  for (Mask x = 1; x <= full_mask(n); ++x)
    v(x) = R(rng.between(lo, hi));
  return v;
}

SalaryVector random_salaries(Rng& rng, int n, long long lo = -6,
                             long long hi = 12) {
  SalaryVector p(n);
  for (auto& s : p) s = R(rng.between(lo, hi));
  return p;
}

std::vector<Mask> sorted_union(std::vector<Mask> a,
                               const std::vector<Mask>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

// Exact pair-level oracle for three-worker valuations.  For the pair
// {w, w'} with third worker z, fix z's salary r and fold z in or out of
// each corner maximum:
//   m11 = best set containing both, m10 / m01 = exactly one, m00 = neither
// (w and w' salaries excluded from the cost).  A relation witness exists
// iff the corner gap m01 + m10 - m11 - m00 has the right sign somewhere;
// the gap is piecewise linear in r with kinks at first-order valuation
// differences, so scanning the level-one grid decides it exactly.
bool pair_oracle(const Valuation& v, int w, int wp, Relation kind) {
  REQUIRE(v.n == 3);
  int z = 3 - w - wp;
  auto corner = [&](bool has_w, bool has_wp, const Rational& r) {
    Mask base = 0;
    if (has_w) base = with(base, w);
    if (has_wp) base = with(base, wp);
    Rational stay = v(base);
    Rational take = v(with(base, z)) - r;
    return stay > take ? stay : take;
  };
  for (const Rational& r : candidate_grid(v, 1)) {
    Rational gap = corner(false, true, r) + corner(true, false, r) -
                   corner(true, true, r) - corner(false, false, r);
    if (kind == Relation::kSubstitute && gap > R(0)) return true;
    if (kind == Relation::kComplement && gap < R(0)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("demand sets of the two worked valuations") {
  Valuation v1 = complements_pair();
  Valuation v2 = substitutes_pair();

  CHECK(demand(v1, {R(7), R(2)}).optima == std::vector<Mask>{0});
  CHECK(demand(v1, {R(5), R(2)}).optima == std::vector<Mask>{mask_of({0, 1})});
  CHECK(demand(v1, {R(6), R(2)}).optima ==
        std::vector<Mask>{0, mask_of({0, 1})});
  CHECK(demand(v2, {R(3), R(1)}).optima == std::vector<Mask>{mask_of({1})});
  CHECK(demand(v2, {R(1), R(1)}).optima == std::vector<Mask>{mask_of({0})});
  CHECK(demand(v2, {R(2), R(1)}).optima ==
        std::vector<Mask>{mask_of({0}), mask_of({1})});

  CHECK(demand(v1, {R(5), R(2)}).surplus == R(1));
  CHECK(demand(v1, {R(6), R(2)}).surplus == R(0));
  CHECK(demand(v2, {R(2), R(1)}).surplus == R(1));

  CHECK(is_demanded(v1, {R(5), R(2)}, 0));
  CHECK_FALSE(is_demanded(v1, {R(7), R(2)}, 0));
  CHECK(is_demanded(v1, {R(6), R(2)}, 0));  // demanded by one optimum
}

TEST_CASE("demand profiles pin the single breakpoint") {
  SUBCASE("complements pair, s sweeping, u at 2") {
    DemandProfile prof = demanded_profile(complements_pair(), {R(0), R(2)}, 0);
    CHECK(prof.critical == R(6));
    CHECK(prof.with_w == std::vector<Mask>{mask_of({0, 1})});
    CHECK(prof.without_w == std::vector<Mask>{0});
    CHECK(prof.with_base == R(6));
    CHECK(prof.without_value == R(0));
  }
  SUBCASE("substitutes pair, s sweeping, u at 1") {
    DemandProfile prof = demanded_profile(substitutes_pair(), {R(0), R(1)}, 0);
    CHECK(prof.critical == R(2));
    CHECK(prof.with_w == std::vector<Mask>{mask_of({0})});
    CHECK(prof.without_w == std::vector<Mask>{mask_of({1})});
  }
  SUBCASE("single worker: breakpoint is the hiring premium") {
    Valuation v = Valuation::zeros(1);
    v(1) = R(7, 2);
    DemandProfile prof = demanded_profile(v, {R(99)}, 0);
    CHECK(prof.critical == R(7, 2));
  }
}

TEST_CASE("profile sides match the demand sets across the breakpoint") {
  Rng rng(2718);
  for (int trial = 0; trial < 25; ++trial) {
    Valuation v = random_valuation(rng, 3);
    SalaryVector p = random_salaries(rng, 3);
    for (int w = 0; w < 3; ++w) {
      DemandProfile prof = demanded_profile(v, p, w);
      SalaryVector q = p;

      q[w] = prof.critical - R(1, 3);
      CHECK(demand(v, q).optima == prof.with_w);

      q[w] = prof.critical + R(1, 3);
      CHECK(demand(v, q).optima == prof.without_w);

      q[w] = prof.critical;
      CHECK(demand(v, q).optima ==
            sorted_union(prof.with_w, prof.without_w));
    }
  }
}

TEST_CASE("raising one salary: surplus and own demand fall monotonically") {
  Rng rng(31415);
  for (int trial = 0; trial < 40; ++trial) {
    Valuation v = random_valuation(rng, 3);
    SalaryVector low = random_salaries(rng, 3);
    int w = rng.below(3);
    Rational delta = R(1 + rng.below(5), 1 + rng.below(3));
    SalaryVector high = low;
    high[w] += delta;

    auto d_low = demand(v, low);
    auto d_high = demand(v, high);
    // The raise can only hurt, and by at most the raise itself.
    CHECK(d_high.surplus <= d_low.surplus);
    CHECK(d_low.surplus <= d_high.surplus + delta);
    // Demand for w at the higher salary implies demand at the lower one.
    if (is_demanded(v, high, w)) CHECK(is_demanded(v, low, w));
    // If the full raise is passed through, w was demanded at the low price.
    if (d_high.surplus == d_low.surplus - delta)
      CHECK(is_demanded(v, low, w));
  }
}

TEST_CASE("price monotonicity of demand, exact form") {
  // With p(w) > p'(w) and all other salaries equal: an optimum at the
  // higher price employing w stays optimal at the lower price, and an
  // optimum at the lower price avoiding w stays optimal at the higher.
  Rng rng(161803);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + rng.below(2);  // 2..3 workers
    Valuation v = random_valuation(rng, n);
    SalaryVector lower = random_salaries(rng, n);
    int w = rng.below(n);
    SalaryVector higher = lower;
    higher[w] += R(1 + rng.below(6), 1 + rng.below(4));

    auto d_lo = demand(v, lower);
    auto d_hi = demand(v, higher);
    for (Mask x : d_hi.optima)  // clause (ii) at the higher price
      if (contains(x, w))
        CHECK(std::count(d_lo.optima.begin(), d_lo.optima.end(), x) == 1);
    for (Mask x : d_lo.optima)  // clause (i) at the lower price
      if (!contains(x, w))
        CHECK(std::count(d_hi.optima.begin(), d_hi.optima.end(), x) == 1);
  }
}

TEST_CASE("complements pair: mutual complements, no substitutes") {
  Valuation v1 = complements_pair();
  for (int w : {0, 1}) {
    int wp = 1 - w;
    auto comp = detect_ql_relation(v1, w, wp, Relation::kComplement);
    REQUIRE(comp.has_value());
    CHECK(comp->replays(v1));
    CHECK(comp->w == w);
    CHECK(comp->w_prime == wp);
    CHECK_FALSE(detect_ql_relation(v1, w, wp, Relation::kSubstitute)
                    .has_value());
  }
  CHECK(verify_ql_symmetry(v1).symmetric);
}

TEST_CASE("substitutes pair: mutual substitutes, no complements") {
  Valuation v2 = substitutes_pair();
  for (int w : {0, 1}) {
    int wp = 1 - w;
    auto sub = detect_ql_relation(v2, w, wp, Relation::kSubstitute);
    REQUIRE(sub.has_value());
    CHECK(sub->replays(v2));
    CHECK_FALSE(detect_ql_relation(v2, w, wp, Relation::kComplement)
                    .has_value());
  }
  CHECK(verify_ql_symmetry(v2).symmetric);
}

TEST_CASE("pair value sweep: substitutes below, additive at, complements above") {
  // v(s)=5, v(u)=3 and the pair worth x: the sign of x - 8 decides
  // everything, in both directions at once.
  SUBCASE("x = 6") {
    Valuation v = pair_with_top(6);
    CHECK(detect_ql_relation(v, 1, 0, Relation::kSubstitute).has_value());
    CHECK(detect_ql_relation(v, 0, 1, Relation::kSubstitute).has_value());
    CHECK_FALSE(detect_ql_relation(v, 1, 0, Relation::kComplement).has_value());
    CHECK_FALSE(cross_effect_free(v, 1, 0));
  }
  SUBCASE("x = 8") {
    Valuation v = pair_with_top(8);
    CHECK(cross_effect_free(v, 1, 0));
    CHECK(cross_effect_free(v, 0, 1));
  }
  SUBCASE("x = 10") {
    Valuation v = pair_with_top(10);
    CHECK(detect_ql_relation(v, 1, 0, Relation::kComplement).has_value());
    CHECK(detect_ql_relation(v, 0, 1, Relation::kComplement).has_value());
    CHECK_FALSE(detect_ql_relation(v, 1, 0, Relation::kSubstitute).has_value());
    CHECK(verify_ql_symmetry(v).symmetric);
  }
}

TEST_CASE("witness replay is strict about its shape") {
  Valuation v1 = complements_pair();
  auto wit = detect_ql_relation(v1, 0, 1, Relation::kComplement);
  REQUIRE(wit.has_value());
  QlWitness broken = *wit;
  broken.kind = Relation::kSubstitute;  // flipped reading must fail
  CHECK_FALSE(broken.replays(v1));
  broken = *wit;
  std::swap(broken.high, broken.low);  // inverted salaries must fail
  CHECK_FALSE(broken.replays(v1));
  broken = *wit;
  broken.low[1 - 0] += R(1);  // second coordinate must stay fixed
  CHECK_FALSE(broken.replays(v1));
}

TEST_CASE("relation detection agrees with the exact three-worker oracle") {
  Rng rng(8128);
  int present = 0, absent = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Valuation v = random_valuation(rng, 3, -4, 8);
    for (int w = 0; w < 3; ++w)
      for (int wp = 0; wp < 3; ++wp) {
        if (w == wp) continue;
        for (Relation kind : {Relation::kSubstitute, Relation::kComplement}) {
          bool expect = pair_oracle(v, w, wp, kind);
          auto found = detect_ql_relation(v, w, wp, kind);
          CHECK_MESSAGE(found.has_value() == expect, "trial ", trial,
                        " pair (", w, ",", wp, ") kind ",
                        relation_name(kind));
          if (found) {
            CHECK(found->replays(v));
            ++present;
          } else {
            ++absent;
          }
        }
      }
  }
  CHECK(present > 40);  // the sweep saw both outcomes
  CHECK(absent > 40);
}

TEST_CASE("relations are symmetric on random three-worker valuations") {
  Rng rng(1089);
  for (int trial = 0; trial < 30; ++trial) {
    Valuation v = random_valuation(rng, 3);
    auto report = verify_ql_symmetry(v);
    CHECK_MESSAGE(report.symmetric, "trial ", trial);
    CHECK(report.asymmetries.empty());
  }
}

TEST_CASE("relation table matches pointwise detection") {
  Valuation v1 = complements_pair();
  QlRelationTable table = relation_table(v1);
  CHECK(table.has(Relation::kComplement, 0, 1));
  CHECK(table.has(Relation::kComplement, 1, 0));
  CHECK_FALSE(table.has(Relation::kSubstitute, 0, 1));
  CHECK_FALSE(table.has(Relation::kSubstitute, 1, 0));
  REQUIRE(table.complement[0][1].has_value());
  CHECK(table.complement[0][1]->replays(v1));
}

TEST_CASE("translation invariance of demand optima") {
  Rng rng(5040);
  for (int trial = 0; trial < 20; ++trial) {
    Valuation v = random_valuation(rng, 3);
    Valuation shifted = v;
    Rational c = R(rng.between(-4, 9), 1 + rng.below(3));
    for (auto& val : shifted.value) val += c;
    SalaryVector p = random_salaries(rng, 3);
    CHECK(demand(v, p).optima == demand(shifted, p).optima);
    CHECK(demand(shifted, p).surplus == demand(v, p).surplus + c);
  }
}

TEST_CASE("refining the grid never changes the verdicts") {
  Rng rng(4096);
  for (int trial = 0; trial < 12; ++trial) {
    Valuation v = random_valuation(rng, 3, -3, 6);
    for (int w = 0; w < 3; ++w)
      for (int wp = 0; wp < 3; ++wp) {
        if (w == wp) continue;
        for (Relation kind : {Relation::kSubstitute, Relation::kComplement}) {
          bool coarse = detect_ql_relation(v, w, wp, kind, 0).has_value();
          bool dflt = detect_ql_relation(v, w, wp, kind).has_value();
          bool fine =
              detect_ql_relation(v, w, wp, kind, kDefaultQlRefine + 2)
                  .has_value();
          CHECK(coarse == dflt);
          CHECK(dflt == fine);
        }
      }
  }
}

TEST_CASE("candidate grid is sorted, refined, and bracketed") {
  Valuation v = substitutes_pair();
  auto g0 = candidate_grid(v, 0);
  auto g1 = candidate_grid(v, 1);
  CHECK(std::is_sorted(g0.begin(), g0.end()));
  CHECK(std::is_sorted(g1.begin(), g1.end()));
  CHECK(g1.size() > g0.size());
  // Sentinels extend strictly beyond every pair-sum difference.
  CHECK(g0.front() < g0[1]);
  CHECK(g0.back() > g0[g0.size() - 2]);
  // The base points all survive refinement.
  for (const Rational& x : g0)
    CHECK(std::binary_search(g1.begin(), g1.end(), x));
}

TEST_CASE("demand rejects mismatched salary vectors") {
  Valuation v = substitutes_pair();
  CHECK_THROWS_AS(demand(v, SalaryVector{R(1)}), std::invalid_argument);
  CHECK_THROWS_AS(demanded_profile(v, SalaryVector{R(1)}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(detect_ql_relation(v, 0, 0, Relation::kSubstitute),
                  std::invalid_argument);
}
