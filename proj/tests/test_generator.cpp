#include "doctest.h"

#include <variant>

#include "test_util.hpp"
#include "usc/conditions.hpp"
#include "usc/generator.hpp"
#include "usc/io.hpp"
#include "usc/school.hpp"

using namespace usc;

namespace {

GeneratorConfig base_config(InstanceFamily family, std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.family = family;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (InstanceFamily f :
       {InstanceFamily::kUscPreferences, InstanceFamily::kSubstitutes,
        InstanceFamily::kSchoolRules, InstanceFamily::kValuations})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_name("nonsense"), std::invalid_argument);
}

TEST_CASE("generation is deterministic in the seed") {
  for (InstanceFamily f :
       {InstanceFamily::kUscPreferences, InstanceFamily::kSubstitutes,
        InstanceFamily::kSchoolRules, InstanceFamily::kValuations}) {
    auto a = generate_instance(base_config(f, 42));
    auto b = generate_instance(base_config(f, 42));
    CHECK(a == b);
    auto c = generate_instance(base_config(f, 43));
    CHECK_FALSE(a == c);
  }
}

TEST_CASE("rng building blocks are platform-stable") {
  // The raw stream is the standard-mandated mt19937_64 sequence, and the
  // derived draws consume it deterministically.
  Rng rng(123);
  std::mt19937_64 reference(123);
  for (int i = 0; i < 5; ++i) CHECK(rng.next_u64() == reference());
  Rng a(9), b(9);
  for (int i = 0; i < 30; ++i) {
    int n = 1 + i % 7;
    CHECK(a.below(n) == b.below(n));
  }
  std::vector<int> v{1, 2, 3, 4, 5}, w{1, 2, 3, 4, 5};
  Rng c(77), d(77);
  c.shuffle(v);
  d.shuffle(w);
  CHECK(v == w);
}

TEST_CASE("unidirectional family: every firm passes the check") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL}) {
    GeneratorConfig cfg = base_config(InstanceFamily::kUscPreferences, seed);
    cfg.firms = 3;
    cfg.group_sizes = {2, 2};
    auto doc = generate_instance(cfg);
    auto inst = doc.build_market();
    CHECK(validate_instance(inst).empty());
    WorkerPartition part{doc.groups};
    for (int f = 0; f < inst.n_firms(); ++f)
      CHECK(satisfies_usc(inst.choice(f), part).holds);
  }
}

TEST_CASE("tiny universes terminate even when the subset budget exceeds "
          "the lattice") {
  // With two workers only three distinct nonempty subsets exist, fewer
  // than the default ranked-subset budget; sampling must still finish.
  for (auto family :
       {InstanceFamily::kUscPreferences, InstanceFamily::kSubstitutes}) {
    for (std::uint64_t seed : {1ULL, 5ULL, 11ULL}) {
      GeneratorConfig cfg = base_config(family, seed);
      cfg.firms = 3;
      cfg.group_sizes = {2};
      auto doc = generate_instance(cfg);
      auto inst = doc.build_market();
      CHECK(validate_instance(inst).empty());
      for (const FirmSpec& spec : doc.firm_specs) {
        const auto& pref = std::get<FirmPreference>(spec);
        CHECK((int)pref.ranked.size() <= 3);
      }
    }
    GeneratorConfig cfg = base_config(family, 2);
    cfg.group_sizes = {1};
    auto doc = generate_instance(cfg);
    CHECK(validate_instance(doc.build_market()).empty());
  }
}

TEST_CASE("unidirectional family with three groups") {
  GeneratorConfig cfg = base_config(InstanceFamily::kUscPreferences, 7);
  cfg.group_sizes = {2, 1, 1};
  auto doc = generate_instance(cfg);
  CHECK(doc.workers == std::vector<std::string>{"s1", "s2", "u1", "w3_1"});
  auto inst = doc.build_market();
  WorkerPartition part{doc.groups};
  for (int f = 0; f < inst.n_firms(); ++f)
    CHECK(satisfies_usc(inst.choice(f), part).holds);
}

TEST_CASE("substitutes family: every firm passes the classical check") {
  for (std::uint64_t seed : {5ULL, 6ULL, 7ULL}) {
    GeneratorConfig cfg = base_config(InstanceFamily::kSubstitutes, seed);
    cfg.firms = 2;
    cfg.group_sizes = {3};
    auto doc = generate_instance(cfg);
    auto inst = doc.build_market();
    for (int f = 0; f < inst.n_firms(); ++f) {
      CHECK(satisfies_substitutes(inst.choice(f)).holds);
      CHECK(satisfies_substitutes_classical(inst.choice(f)).holds);
    }
  }
}

TEST_CASE("school family: rules are well formed and unidirectional") {
  for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
    GeneratorConfig cfg = base_config(InstanceFamily::kSchoolRules, seed);
    cfg.firms = 3;
    cfg.group_sizes = {2, 3};
    auto doc = generate_instance(cfg);
    REQUIRE(doc.firm_specs.size() == 3);
    for (const FirmSpec& spec : doc.firm_specs) {
      REQUIRE(std::holds_alternative<SchoolRuleSpec>(spec));
      const auto& s = std::get<SchoolRuleSpec>(spec);
      CHECK(s.capacity >= 1);
      CHECK(s.capacity <= cfg.max_capacity);
      CHECK(s.ceiling >= Rational(0));
      CHECK(s.ceiling <= Rational(1));
      CHECK(s.priority.size() == 5);
    }
    auto inst = doc.build_market();
    CHECK(validate_instance(inst).empty());
  }
  GeneratorConfig bad = base_config(InstanceFamily::kSchoolRules, 1);
  bad.group_sizes = {2, 2, 1};
  CHECK_THROWS_AS(generate_instance(bad), std::invalid_argument);
}

TEST_CASE("valuation family: totals and bounds") {
  GeneratorConfig cfg = base_config(InstanceFamily::kValuations, 21);
  cfg.firms = 2;
  cfg.group_sizes = {3};
  cfg.value_min = -2;
  cfg.value_max = 4;
  auto doc = generate_instance(cfg);
  REQUIRE(doc.quasilinear.has_value());
  const auto& block = *doc.quasilinear;
  CHECK(block.workers == std::vector<std::string>{"w1", "w2", "w3"});
  REQUIRE(block.valuations.size() == 2);
  for (const auto& nv : block.valuations) {
    CHECK(nv.valuation.n == 3);
    REQUIRE(nv.valuation.value.size() == 8);
    for (const Rational& val : nv.valuation.value) {
      CHECK(val >= Rational(-2));
      CHECK(val <= Rational(4));
    }
  }
  CHECK(doc.workers.empty());  // the market side stays empty
}

TEST_CASE("sampling budget exhaustion is reported") {
  GeneratorConfig cfg = base_config(InstanceFamily::kUscPreferences, 1);
  cfg.max_attempts = 0;
  CHECK_THROWS_AS(generate_instance(cfg), SamplingBudgetExhausted);
}

TEST_CASE("generated documents survive a serialization round trip") {
  for (InstanceFamily f :
       {InstanceFamily::kUscPreferences, InstanceFamily::kSubstitutes,
        InstanceFamily::kSchoolRules, InstanceFamily::kValuations}) {
    auto doc = generate_instance(base_config(f, 3141));
    auto back = parse_instance(serialize_instance(doc));
    CHECK_MESSAGE(doc == back, "family ", family_name(f));
  }
}

TEST_CASE("generator acceptance stays healthy over a seed sweep") {
  // The unidirectional family must keep finding admissible preferences
  // within its default budget across many seeds (this guards the
  // rejection-sampling bias against silent regressions).
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    GeneratorConfig cfg = base_config(InstanceFamily::kUscPreferences, seed);
    cfg.firms = 3;
    cfg.group_sizes = {3, 2};
    CHECK_NOTHROW(generate_instance(cfg));
  }
}
